#include <doctest.h>

#include "autmin/core.hpp"
#include "autmin/equiv.hpp"
#include "autmin/errors.hpp"
#include "autmin/hardness.hpp"
#include "autmin/minimise.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace autmin;

namespace {

void check_witness(const Automaton& p1, const Automaton& p2, const DiffWitness& w) {
  CHECK_FALSE(w.lasso.loop.empty());
  CHECK(run_lasso(p1, w.lasso).accepted);
  CHECK_FALSE(run_lasso(p2, w.lasso).accepted);
}

bool partition_consistent(const Partition& p) {
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    for (StateRef q : p.classes[c])
      if (p.of(q) != c) return false;
  return true;
}

}  // namespace

TEST_CASE("product cardinalities") {
  Automaton one({"a"}, 1, Acceptance::buchi);
  one.set_successor(0, 0, StateRef::plain(0));
  CHECK(product(one, one).size() == 1);

  oracle::Rng rng(3);
  const Automaton a2 = oracle::random_automaton(rng, 2, 2, Acceptance::buchi, 0.0);
  const Automaton a3 = oracle::random_automaton(rng, 3, 2, Acceptance::buchi, 0.0);
  CHECK(product(a2, a3).size() <= 6);

  const Automaton inf_a = fixture::infinitely_many("a");
  const PairGraph g = product(inf_a, inf_a);
  CHECK(g.size() == 2);
  for (auto [p, q] : g.pairs) CHECK(p == q);
}

TEST_CASE("product rejects different alphabets") {
  Automaton a({"a", "b"}, 0, Acceptance::buchi);
  Automaton b({"a", "c"}, 0, Acceptance::buchi);
  try {
    product(a, b);
    FAIL("expected an alphabet mismatch");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("b") != std::string::npos);
    CHECK(msg.find("c") != std::string::npos);
  }
}

TEST_CASE("omega_diff_nonempty examples") {
  const Automaton bottom = fixture::sink_only(StateRef::bottom());
  const Automaton top = fixture::sink_only(StateRef::top());
  const Automaton inf_a = fixture::infinitely_many("a");
  const Automaton inf_b = fixture::infinitely_many("b");

  CHECK_FALSE(omega_diff_nonempty(bottom, inf_a));
  auto universal = omega_diff_nonempty(top, bottom);
  REQUIRE(universal);
  CHECK(universal->lasso.prefix.empty());
  CHECK(universal->lasso.loop.size() == 1);

  auto ab = omega_diff_nonempty(inf_a, inf_b);
  REQUIRE(ab);
  CHECK(ab->lasso.loop == std::vector<std::string>{"a"});
  CHECK(ab->side == DiffWitness::Side::first);
  check_witness(inf_a, inf_b, *ab);
}

TEST_CASE("omega_equiv examples") {
  const Automaton inf_a = fixture::infinitely_many("a");
  CHECK(omega_equiv(inf_a, inf_a));
  CHECK_FALSE(omega_equiv(inf_a, fixture::infinitely_many("b")));

  const NiceGraph g = fixture::p2();
  CHECK(omega_equiv(characteristic_dba(g, {1}), characteristic_dba(g, {0, 1})));
  CHECK(omega_equiv(characteristic_dba(g, {0}), characteristic_dba(g, {0, 1})));
}

TEST_CASE("witnesses replay on random parity pairs") {
  oracle::Rng rng(23);
  for (int round = 0; round < 300; ++round) {
    const Automaton a = oracle::random_automaton(rng, oracle::uniform(rng, 0, 5), 2,
                                                 Acceptance::parity, 0.15, 5);
    const Automaton b = oracle::random_automaton(rng, oracle::uniform(rng, 0, 5), 2,
                                                 Acceptance::parity, 0.15, 5);
    auto wit = omega_diff_nonempty(a, b);
    if (wit) {
      check_witness(a, b, *wit);
    } else {
      // bounded search for a counterexample to emptiness
      for (std::size_t lu = 0; lu <= 3; ++lu)
        for (const auto& u : oracle::words_of_length(2, lu))
          for (std::size_t lv = 1; lv <= 3; ++lv)
            for (const auto& v : oracle::words_of_length(2, lv))
              CHECK_FALSE((oracle::accepts_lasso(a, a.initial(), u, v) &&
                           !oracle::accepts_lasso(b, b.initial(), u, v)));
    }
  }
}

TEST_CASE("dfa_equiv examples") {
  Automaton empty_f({"a"}, 2, Acceptance::finite);
  empty_f.set_successor(0, 0, StateRef::plain(1));
  empty_f.set_successor(1, 0, StateRef::plain(0));
  Automaton bottom({"a"}, 0, Acceptance::finite);
  CHECK(dfa_equiv(empty_f, empty_f));
  CHECK(dfa_equiv(empty_f, bottom));

  oracle::Rng rng(8);
  for (int round = 0; round < 100; ++round) {
    const Automaton a = oracle::random_automaton(rng, oracle::uniform(rng, 1, 8), 2,
                                                 Acceptance::finite);
    CHECK(dfa_equiv(a, hopcroft_min(a)));
  }
}

TEST_CASE("almost_equiv_quotient examples") {
  // F empty, Top unreachable
  Automaton dead({"a"}, 2, Acceptance::finite);
  dead.set_successor(0, 0, StateRef::plain(1));
  dead.set_successor(1, 0, StateRef::plain(1));
  const Partition p = almost_equiv_quotient(dead);
  CHECK(p.same(StateRef::plain(0), StateRef::plain(1)));
  CHECK(p.same(StateRef::plain(0), StateRef::bottom()));
  CHECK_FALSE(p.same(StateRef::top(), StateRef::bottom()));
  CHECK(p.classes[p.of(StateRef::top())].size() == 1);

  // two disjoint self-loops, one final
  Automaton loops({"a"}, 2, Acceptance::finite);
  loops.set_successor(0, 0, StateRef::plain(0));
  loops.set_successor(1, 0, StateRef::plain(1));
  loops.set_final(0, true);
  CHECK_FALSE(almost_equiv_quotient(loops).same(StateRef::plain(0), StateRef::plain(1)));

  // s0 -> s1 (loop), s0 in F; t0 -> t1 (loop), nothing in F
  Automaton chains({"a"}, 4, Acceptance::finite);
  chains.set_successor(0, 0, StateRef::plain(1));
  chains.set_successor(1, 0, StateRef::plain(1));
  chains.set_successor(2, 0, StateRef::plain(3));
  chains.set_successor(3, 0, StateRef::plain(3));
  chains.set_final(0, true);
  CHECK_FALSE(almost_inequivalence(chains).contains(StateRef::plain(0), StateRef::plain(2)));
  CHECK_FALSE(oracle::bounded_disagreement(chains, StateRef::plain(0), StateRef::plain(2), 4, 4));

  Automaton s_part({"a"}, 2, Acceptance::finite);
  s_part.set_successor(0, 0, StateRef::plain(1));
  s_part.set_successor(1, 0, StateRef::plain(1));
  s_part.set_final(0, true);
  Automaton t_part({"a"}, 2, Acceptance::finite);
  t_part.set_successor(0, 0, StateRef::plain(1));
  t_part.set_successor(1, 0, StateRef::plain(1));
  CHECK(almost_equivalent(s_part, t_part));
  CHECK_FALSE(dfa_equiv(s_part, t_part));
}

TEST_CASE("almost_equiv_quotient matches the definitional oracle") {
  oracle::Rng rng(31);
  for (int round = 0; round < 150; ++round) {
    const Automaton a = oracle::random_automaton(rng, oracle::uniform(rng, 1, 4), 2,
                                                 Acceptance::finite);
    const PairRelation bad = almost_inequivalence(a);
    const std::size_t n = a.state_count();
    for (std::size_t p = 0; p < n + 2; ++p)
      for (std::size_t q = 0; q < n + 2; ++q) {
        StateRef sp = StateRef::from_extended(p, n), sq = StateRef::from_extended(q, n);
        auto wit = oracle::almost_witness(a, sp, sq);
        CHECK(bad.contains(sp, sq) == wit.has_value());
        if (wit) CHECK(oracle::disagree_infinitely(a, sp, sq, wit->first, wit->second));
        else CHECK_FALSE(oracle::bounded_disagreement(a, sp, sq, 2, 3));
      }
  }
}

TEST_CASE("buchi_diff_states examples") {
  Automaton no_f({"a", "b"}, 2, Acceptance::buchi);
  no_f.set_successor(0, 0, StateRef::plain(1));
  no_f.set_successor(0, 1, StateRef::plain(0));
  no_f.set_successor(1, 0, StateRef::plain(0));
  no_f.set_successor(1, 1, StateRef::plain(1));
  const PairRelation none = buchi_diff_states(no_f);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) CHECK_FALSE(none.contains_ext(p, q));

  const Automaton inf_a = fixture::infinitely_many("a");
  const PairRelation d = buchi_diff_states(inf_a);
  for (std::size_t p = 0; p < 4; ++p) CHECK_FALSE(d.contains_ext(p, p));
  CHECK_FALSE(d.contains(StateRef::plain(0), StateRef::plain(1)));
  CHECK_FALSE(d.contains(StateRef::plain(1), StateRef::plain(0)));
  CHECK(d.contains(StateRef::top(), StateRef::plain(0)));
}

TEST_CASE("omega_equiv_quotient examples") {
  // two accepting self-loop states in different SCCs
  Automaton weak2({"a", "b"}, 2, Acceptance::buchi);
  weak2.set_successor(0, 0, StateRef::plain(0));
  weak2.set_successor(0, 1, StateRef::plain(1));
  weak2.set_successor(1, 0, StateRef::plain(1));
  weak2.set_successor(1, 1, StateRef::plain(1));
  weak2.set_final(0, true);
  weak2.set_final(1, true);
  const Partition w2 = omega_equiv_quotient(weak2);
  CHECK(w2.same(StateRef::plain(0), StateRef::plain(1)));
  CHECK(w2.same(StateRef::plain(0), StateRef::top()));

  const Partition ia = omega_equiv_quotient(fixture::infinitely_many("a"));
  CHECK(ia.same(StateRef::plain(0), StateRef::plain(1)));

  const NiceGraph g = fixture::p2();
  const Automaton b = characteristic_dba(g, {0, 1});
  const Partition pb = omega_equiv_quotient(b);
  // (v0,a) = 4 twins (v0,r) = 0; (v1,a) = 5 twins (v1,r) = 1
  CHECK(pb.same(StateRef::plain(4), StateRef::plain(0)));
  CHECK(pb.same(StateRef::plain(5), StateRef::plain(1)));
  CHECK(partition_consistent(pb));
}

TEST_CASE("dedicated Buchi check equals the generic parity check") {
  oracle::Rng rng(41);
  for (int round = 0; round < 200; ++round) {
    const Automaton a = oracle::random_automaton(rng, oracle::uniform(rng, 1, 6), 2,
                                                 Acceptance::buchi);
    CHECK(buchi_diff_states(a) == parity_diff_states(a));
  }
}

TEST_CASE("refinement chain: Myhill-Nerode, almost, omega") {
  oracle::Rng rng(43);
  for (int round = 0; round < 150; ++round) {
    const std::size_t k = oracle::uniform(rng, 1, 3);
    const Automaton a = oracle::random_automaton(rng, oracle::uniform(rng, 1, 10), k,
                                                 Acceptance::finite);
    const std::size_t n = a.state_count();
    const Partition almost = almost_equiv_quotient(a);
    const Partition as_buchi = omega_equiv_quotient(a.relabelled(Acceptance::buchi));
    const Partition as_cobuchi = omega_equiv_quotient(a.relabelled(Acceptance::cobuchi));
    CHECK(partition_consistent(almost));
    auto reach = reachable_states(a);
    reach.push_back(true);
    reach.push_back(true);
    for (std::size_t p = 0; p < n + 2; ++p)
      for (std::size_t q = 0; q < n + 2; ++q) {
        if (!reach[p] || !reach[q]) continue;
        StateRef sp = StateRef::from_extended(p, n), sq = StateRef::from_extended(q, n);
        if (dfa_equiv(with_initial(a, sp), with_initial(a, sq))) CHECK(almost.same(sp, sq));
        if (almost.same(sp, sq)) {
          CHECK(as_buchi.same(sp, sq));
          CHECK(as_cobuchi.same(sp, sq));
        }
      }
  }
}

TEST_CASE("congruence of quotients") {
  oracle::Rng rng(47);
  for (int round = 0; round < 100; ++round) {
    const Automaton a = oracle::random_automaton(rng, oracle::uniform(rng, 1, 8), 2,
                                                 Acceptance::cobuchi);
    for (const Partition& p : {almost_equiv_quotient(a.relabelled(Acceptance::finite)),
                               omega_equiv_quotient(a)})
      for (const auto& members : p.classes)
        for (StateRef x : members)
          for (std::size_t s = 0; s < 2; ++s)
            CHECK(p.same(a.successor(x, s), a.successor(members.front(), s)));
  }
}
