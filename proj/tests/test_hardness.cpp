#include <doctest.h>

#include "autmin/core.hpp"
#include "autmin/equiv.hpp"
#include "autmin/errors.hpp"
#include "autmin/hardness.hpp"
#include "autmin/minimise.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace autmin;
using fixture::w;

namespace {

Graph triangle() { return make_graph({"x", "y", "z"}, {{0, 1}, {1, 2}, {0, 2}}); }

StateRef step(const Automaton& a, StateRef q, const char* sym) {
  return a.successor(q, *a.symbol_index(sym));
}

}  // namespace

TEST_CASE("make_nice examples") {
  const NiceGraph one = make_nice(make_graph({"x"}, {}));
  CHECK(one.size() == 3);
  CHECK(one.graph().edges.size() == 2);
  CHECK(min_cover_bruteforce(one.graph()).size() == 1);

  const NiceGraph edge = make_nice(make_graph({"x", "y"}, {{0, 1}}));
  CHECK(oracle::min_cover_size(edge.graph()) == 2);
  CHECK(min_cover_bruteforce(edge.graph()).size() == 2);

  CHECK(min_cover_bruteforce(make_nice(triangle()).graph()).size() == 3);

  const NiceGraph clash = make_nice(make_graph({"v", "w"}, {{0, 1}}));
  CHECK(clash.graph().vertices[2] == "v_1");
  CHECK(clash.graph().vertices[3] == "v'_1");
  CHECK(clash.graph().vertices[clash.initial()] == "v_1");
}

TEST_CASE("is_vertex_cover examples") {
  const Graph t = triangle();
  CHECK(is_vertex_cover(t, {0, 1, 2}));
  CHECK_FALSE(is_vertex_cover(t, {}));
  CHECK(is_vertex_cover(fixture::p2().graph(), {1}));
  CHECK_THROWS_AS(t.resolve(w({"nope"})), InputError);
}

TEST_CASE("min_cover_bruteforce examples") {
  CHECK(min_cover_bruteforce(make_graph({"a", "b", "c"}, {})).empty());
  CHECK(min_cover_bruteforce(fixture::p2().graph()) == VertexSet{0});
  CHECK(min_cover_bruteforce(triangle()).size() == 2);

  std::vector<std::string> many;
  for (int i = 0; i < 26; ++i) many.push_back("u" + std::to_string(i));
  CHECK_THROWS_AS(min_cover_bruteforce(make_graph(many, {})), ResourceError);
}

TEST_CASE("min_cover_bruteforce matches bitmask enumeration") {
  oracle::Rng rng(211);
  for (int round = 0; round < 100; ++round) {
    const Graph g = oracle::random_graph(rng, oracle::uniform(rng, 1, 9), 0.4);
    const VertexSet c = min_cover_bruteforce(g);
    CHECK(is_vertex_cover(g, c));
    CHECK(c.size() == oracle::min_cover_size(g));
  }
}

TEST_CASE("characteristic_dba transitions for P2 with cover {v1}") {
  const Automaton b = characteristic_dba(fixture::p2(), {1});
  CHECK(b.state_count() == 5);
  CHECK(b.mode() == Acceptance::buchi);
  const StateRef v0r = b.initial();
  const StateRef v1a = step(b, v0r, "v1");
  CHECK(b.is_final(v1a));
  CHECK(step(b, v0r, "v0") == v0r);
  const StateRef v0stop = step(b, v0r, "#");
  CHECK_FALSE(b.is_final(v0stop));
  CHECK(step(b, v0stop, "v0") == StateRef::top());
  CHECK(step(b, v0stop, "v1") == StateRef::bottom());
  CHECK(step(b, v0stop, "#") == StateRef::bottom());
}

TEST_CASE("characteristic_dba size law and cover check") {
  CHECK(characteristic_dba(fixture::p2(), {0, 1}).state_count() == 6);
  CHECK_THROWS_AS(characteristic_dba(fixture::p2(), {}), InputError);

  oracle::Rng rng(223);
  for (int round = 0; round < 30; ++round) {
    const NiceGraph g = oracle::random_nice_graph(rng, oracle::uniform(rng, 2, 6), 0.3);
    const VertexSet c = min_cover_bruteforce(g.graph());
    CHECK(characteristic_dba(g, c).state_count() == 2 * g.size() + c.size());
  }
}

TEST_CASE("characteristic_member examples") {
  const NiceGraph g = fixture::p2();
  CHECK(characteristic_member(g, {{}, {"v0", "v1"}}));
  CHECK(characteristic_member(g, {{"v0", "#", "v0"}, {"v1"}}));
  CHECK_FALSE(characteristic_member(g, {{"v0", "#", "v1"}, {"v1"}}));
  CHECK_FALSE(characteristic_member(g, {{}, {"v1"}}));
  CHECK_FALSE(characteristic_member(g, {{}, {"v0"}}));
}

TEST_CASE("characteristic_dba agrees with characteristic_member") {
  oracle::Rng rng(227);
  for (int round = 0; round < 10; ++round) {
    const NiceGraph g = oracle::random_nice_graph(rng, oracle::uniform(rng, 2, 5), 0.3);
    const Automaton b = characteristic_dba(g, min_cover_bruteforce(g.graph()));
    std::vector<std::string> syms = g.graph().vertices;
    syms.push_back(kStopSymbol);
    for (int sample = 0; sample < 300; ++sample) {
      Lasso l;
      for (std::size_t i = oracle::uniform(rng, 0, 5); i > 0; --i)
        l.prefix.push_back(syms[oracle::uniform(rng, 0, syms.size() - 1)]);
      for (std::size_t i = oracle::uniform(rng, 1, 4); i > 0; --i)
        l.loop.push_back(syms[oracle::uniform(rng, 0, syms.size() - 1)]);
      CHECK(run_lasso(b, l).accepted == characteristic_member(g, l));
    }
  }
}

TEST_CASE("extract_cover examples") {
  const NiceGraph g = fixture::p2();
  CHECK(extract_cover(characteristic_dba(g, {1}), g) == VertexSet{1});
  CHECK(extract_cover(characteristic_dba(g, {0}), g) == VertexSet{0});
  CHECK(extract_cover(characteristic_dba(g, {0, 1}), g) == VertexSet{0, 1});

  auto minimal = exact_min_dba(characteristic_dba(g, {0, 1}), 5);
  REQUIRE(minimal);
  const VertexSet c = extract_cover(*minimal, g);
  CHECK(c.size() == 1);
  CHECK(is_vertex_cover(g.graph(), c));
}

TEST_CASE("exact_min_dba examples") {
  const Automaton top = fixture::sink_only(StateRef::top());
  auto zero = exact_min_dba(top, 0);
  REQUIRE(zero);
  CHECK(zero->state_count() == 0);
  CHECK(zero->initial() == StateRef::top());

  const Automaton inf_a = fixture::infinitely_many("a");
  CHECK_FALSE(exact_min_dba(inf_a, 1));
  auto two = exact_min_dba(inf_a, 2);
  REQUIRE(two);
  CHECK(two->state_count() == 2);
  CHECK(omega_equiv(*two, inf_a));

  CHECK_FALSE(exact_min_dba(characteristic_dba(fixture::p2(), {1}), 4));
  CHECK_THROWS_AS(exact_min_dba(inf_a, 5, 4), ResourceError);
  CHECK_THROWS_AS(exact_min_dba(inf_a.relabelled(Acceptance::cobuchi), 2), ModeError);
}

TEST_CASE("pruned search returns what plain enumeration returns") {
  oracle::Rng rng(229);
  for (int round = 0; round < 40; ++round) {
    const bool almost = round % 2 == 1;
    const Automaton ref = oracle::random_automaton(
        rng, oracle::uniform(rng, 1, 3), 2, almost ? Acceptance::finite : Acceptance::buchi);
    SearchOptions opt;
    opt.max_states = 2;
    opt.relation = almost ? SearchRelation::almost : SearchRelation::omega;
    auto fast = find_smallest_equivalent(ref, opt);
    opt.prune = false;
    auto slow = find_smallest_equivalent(ref, opt);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) CHECK(*fast == *slow);
  }
}

TEST_CASE("cover_via_minimisation examples") {
  const VertexSet p2 = cover_via_minimisation(fixture::p2());
  CHECK(p2.size() == 1);
  CHECK(p2.size() == min_cover_bruteforce(fixture::p2().graph()).size());

  const NiceGraph single = make_nice(make_graph({"x"}, {}));
  CHECK(cover_via_minimisation(single).size() == 1);

  const NiceGraph star(make_graph({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}}, 0));
  CHECK(cover_via_minimisation(star) == VertexSet{0});
}

TEST_CASE("pruned weak search returns what plain enumeration returns") {
  oracle::Rng rng(233);
  for (int round = 0; round < 40; ++round) {
    const Acceptance mode = round % 2 ? Acceptance::cobuchi : Acceptance::buchi;
    const Automaton ref = oracle::random_weak(rng, oracle::uniform(rng, 1, 4), 2, mode);
    SearchOptions opt;
    opt.max_states = 2;
    opt.require_weak = true;
    auto fast = find_smallest_equivalent(ref, opt);
    opt.prune = false;
    auto slow = find_smallest_equivalent(ref, opt);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) CHECK(*fast == *slow);
  }
}
