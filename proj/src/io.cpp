#include "autmin/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "autmin/errors.hpp"
#include "autmin/scc.hpp"

namespace autmin {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits on whitespace; '#' starts a comment, '\' escapes one character and
// "..." quotes a literal run.
std::vector<Token> tokenize(std::string_view text, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == '#') break;
    Token tok;
    tok.column = i + 1;
    while (i < text.size() && !is_space(text[i]) && text[i] != '#') {
      if (text[i] == '\\') {
        if (i + 1 >= text.size()) throw InputError(line_no, i + 1, "dangling escape");
        tok.text += text[i + 1];
        i += 2;
      } else if (text[i] == '"') {
        std::size_t open = i++;
        for (;;) {
          if (i >= text.size()) throw InputError(line_no, open + 1, "unterminated quote");
          if (text[i] == '"') break;
          if (text[i] == '\\' && i + 1 < text.size()) ++i;
          tok.text += text[i++];
        }
        ++i;
      } else {
        tok.text += text[i++];
      }
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = tokenize(text.substr(start, end - start), number);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

std::string escape(const std::string& symbol) {
  std::string out;
  for (char c : symbol) {
    if (c == '#' || c == '"' || c == '\\' || is_space(c) || c == '\n') out += '\\';
    out += c;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& reason) {
  throw InputError(line.number, tok.column, reason);
}

std::size_t parse_count(const Line& line, const Token& tok, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    fail(line, tok, std::string("expected ") + what + ", got '" + tok.text + "'");
  return value;
}

StateRef parse_state(const Line& line, const Token& tok, std::size_t n) {
  if (tok.text == "TOP") return StateRef::top();
  if (tok.text == "BOT") return StateRef::bottom();
  std::size_t q = parse_count(line, tok, "a state");
  if (q >= n)
    fail(line, tok, "state " + tok.text + " out of range (" + std::to_string(n) + " states)");
  return StateRef::plain(q);
}

void expect_keyword(const Line& line, const char* keyword) {
  if (line.tokens[0].text != keyword)
    fail(line, line.tokens[0],
         std::string("expected '") + keyword + "', got '" + line.tokens[0].text + "'");
}

void expect_arity(const Line& line, std::size_t at_least, std::size_t at_most) {
  const std::size_t args = line.tokens.size() - 1;
  if (args < at_least || args > at_most)
    fail(line, line.tokens[0],
         "wrong number of arguments for '" + line.tokens[0].text + "'");
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  const auto lines = split_lines(text);
  const std::size_t last_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  std::size_t cursor = 0;
  auto next = [&](const char* keyword) -> const Line& {
    if (cursor >= lines.size())
      throw InputError(last_line, 1, std::string("missing '") + keyword + "' directive");
    const Line& line = lines[cursor++];
    expect_keyword(line, keyword);
    return line;
  };

  const Line& header = next("daut");
  expect_arity(header, 1, 1);
  if (header.tokens[1].text != "1") fail(header, header.tokens[1], "unsupported version");

  const Line& alpha = next("alphabet");
  expect_arity(alpha, 1, SIZE_MAX);
  std::vector<std::string> alphabet;
  std::map<std::string, std::size_t> symbol_of;
  for (std::size_t i = 1; i < alpha.tokens.size(); ++i) {
    if (!symbol_of.emplace(alpha.tokens[i].text, alphabet.size()).second)
      fail(alpha, alpha.tokens[i], "duplicate symbol '" + alpha.tokens[i].text + "'");
    alphabet.push_back(alpha.tokens[i].text);
  }

  const Line& states = next("states");
  expect_arity(states, 1, 1);
  const std::size_t n = parse_count(states, states.tokens[1], "a state count");

  const Line& init = next("initial");
  expect_arity(init, 1, 1);
  const StateRef initial = parse_state(init, init.tokens[1], n);

  const Line& acc = next("acceptance");
  expect_arity(acc, 1, SIZE_MAX);
  auto mode = acceptance_from_string(acc.tokens[1].text);
  if (!mode) fail(acc, acc.tokens[1], "unknown acceptance '" + acc.tokens[1].text + "'");

  Automaton a(alphabet, n, *mode);
  a.set_initial(initial);
  if (*mode == Acceptance::parity) {
    if (acc.tokens.size() - 2 != n)
      fail(acc, acc.tokens[0],
           "parity acceptance needs " + std::to_string(n) + " priorities, got " +
               std::to_string(acc.tokens.size() - 2));
    for (std::size_t q = 0; q < n; ++q) {
      const Token& tok = acc.tokens[q + 2];
      std::size_t p = parse_count(acc, tok, "a priority");
      if (p > n + 1)
        fail(acc, tok, "priority " + tok.text + " exceeds n+1 = " + std::to_string(n + 1));
      a.set_priority(q, static_cast<unsigned>(p));
    }
  } else {
    for (std::size_t i = 2; i < acc.tokens.size(); ++i) {
      StateRef q = parse_state(acc, acc.tokens[i], n);
      if (q.is_bottom()) fail(acc, acc.tokens[i], "BOT can never be final");
      if (q.is_plain()) a.set_final(q.index(), true);
    }
  }

  std::vector<bool> defined(n * alphabet.size(), false);
  for (; cursor < lines.size(); ++cursor) {
    const Line& line = lines[cursor];
    expect_keyword(line, "trans");
    expect_arity(line, 3, 3);
    StateRef from = parse_state(line, line.tokens[1], n);
    if (!from.is_plain()) fail(line, line.tokens[1], "sinks have fixed transitions");
    auto sym = symbol_of.find(line.tokens[2].text);
    if (sym == symbol_of.end())
      fail(line, line.tokens[2], "unknown symbol '" + line.tokens[2].text + "'");
    StateRef to = parse_state(line, line.tokens[3], n);
    std::size_t slot = from.index() * alphabet.size() + sym->second;
    if (defined[slot])
      fail(line, line.tokens[0],
           "duplicate transition for (" + line.tokens[1].text + ", " + sym->first + ")");
    defined[slot] = true;
    a.set_successor(from.index(), sym->second, to);
  }
  for (std::size_t slot = 0; slot < defined.size(); ++slot)
    if (!defined[slot])
      throw InputError(last_line, 1,
                       "missing transition for (" + std::to_string(slot / alphabet.size()) +
                           ", " + alphabet[slot % alphabet.size()] + ")");
  return a;
}

std::string serialise_automaton(const Automaton& a) {
  std::vector<std::size_t> order(a.alphabet_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a.alphabet()[x] < a.alphabet()[y]; });

  std::ostringstream out;
  out << "daut 1\nalphabet";
  for (std::size_t s : order) out << ' ' << escape(a.alphabet()[s]);
  out << "\nstates " << a.state_count() << "\ninitial " << to_string(a.initial())
      << "\nacceptance " << to_string(a.mode());
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    if (a.mode() == Acceptance::parity)
      out << ' ' << a.priority(StateRef::plain(q));
    else if (a.is_final(StateRef::plain(q)))
      out << ' ' << q;
  }
  out << '\n';
  for (std::size_t q = 0; q < a.state_count(); ++q)
    for (std::size_t s : order)
      out << "trans " << q << ' ' << escape(a.alphabet()[s]) << ' '
          << to_string(a.successor(StateRef::plain(q), s)) << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw InputError(1, 1, "missing 'graph' header");
  expect_keyword(lines[0], "graph");
  expect_arity(lines[0], 0, 0);
  if (lines.size() < 2) throw InputError(lines[0].number + 1, 1, "missing 'vertices' line");
  const Line& vline = lines[1];
  expect_keyword(vline, "vertices");
  expect_arity(vline, 1, SIZE_MAX);

  Graph g;
  for (std::size_t i = 1; i < vline.tokens.size(); ++i) {
    const Token& tok = vline.tokens[i];
    if (tok.text == kStopSymbol) fail(vline, tok, "vertex name '#' is reserved");
    if (g.find(tok.text)) fail(vline, tok, "duplicate vertex '" + tok.text + "'");
    g.vertices.push_back(tok.text);
  }
  auto vertex = [&](const Line& line, const Token& tok) {
    auto v = g.find(tok.text);
    if (!v) fail(line, tok, "unknown vertex '" + tok.text + "'");
    return *v;
  };

  const Line* initial_line = nullptr;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0].text == "initial") {
      expect_arity(line, 1, 1);
      if (g.initial) fail(line, line.tokens[0], "initial vertex declared twice");
      g.initial = vertex(line, line.tokens[1]);
      initial_line = &line;
      continue;
    }
    expect_keyword(line, "edge");
    expect_arity(line, 2, 2);
    std::size_t u = vertex(line, line.tokens[1]);
    std::size_t v = vertex(line, line.tokens[2]);
    if (u == v) fail(line, line.tokens[1], "self-loop on '" + g.vertices[u] + "'");
    auto e = std::minmax(u, v);
    if (!seen.emplace(e.first, e.second).second)
      fail(line, line.tokens[1],
           "duplicate edge {" + g.vertices[u] + ", " + g.vertices[v] + "}");
  }
  g.edges.assign(seen.begin(), seen.end());
  if (initial_line) {
    try {
      NiceGraph check(g);
    } catch (const InputError& e) {
      throw InputError(initial_line->number, initial_line->tokens[0].column,
                       std::string("graph is not nice: ") + e.what());
    }
  }
  return g;
}

NiceGraph parse_nice_graph(std::string_view text) {
  Graph g = parse_graph(text);
  if (!g.initial) throw InputError(1, 1, "graph has no initial vertex");
  return NiceGraph(std::move(g));
}

std::string serialise_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph\nvertices";
  for (const auto& v : g.vertices) out << ' ' << escape(v);
  out << '\n';
  if (g.initial) out << "initial " << escape(g.vertices[*g.initial]) << '\n';
  for (auto [u, v] : g.edges)
    out << "edge " << escape(g.vertices[u]) << ' ' << escape(g.vertices[v]) << '\n';
  return out.str();
}

Lasso parse_lasso(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || is_space(text.back()))) text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos)
    throw InputError(1, 1, "a lasso must fit on one line");
  const std::size_t split = text.find(';');
  if (split == std::string_view::npos) throw InputError(1, 1, "missing ';' between prefix and loop");
  if (text.find(';', split + 1) != std::string_view::npos)
    throw InputError(1, text.find(';', split + 1) + 1, "more than one ';'");
  auto words = [](std::string_view part) {
    std::vector<std::string> out;
    std::istringstream in{std::string(part)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
  };
  Lasso lasso{words(text.substr(0, split)), words(text.substr(split + 1))};
  if (lasso.loop.empty()) throw InputError(1, split + 1, "empty loop");
  return lasso;
}

std::string format_word(const std::vector<std::string>& word) {
  std::string out;
  for (const auto& s : word) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::string format_lasso(const Lasso& lasso) {
  std::string prefix = format_word(lasso.prefix);
  return prefix + (prefix.empty() ? "" : " ") + "; " + format_word(lasso.loop);
}

Partition parse_partition(std::string_view text, std::size_t state_count) {
  Partition p;
  p.state_count = state_count;
  p.class_of.assign(state_count + 2, npos);
  for (const Line& line : split_lines(text)) {
    std::vector<StateRef> members;
    for (const Token& tok : line.tokens) {
      StateRef q = parse_state(line, tok, state_count);
      std::size_t& slot = p.class_of[q.extended(state_count)];
      if (slot != npos) fail(line, tok, "state " + tok.text + " listed twice");
      slot = p.classes.size();
      members.push_back(q);
    }
    std::sort(members.begin(), members.end(), display_less);
    p.classes.push_back(std::move(members));
  }
  return p;
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (const auto& members : p.classes) {
    std::string line;
    for (StateRef q : members) line += (line.empty() ? "" : " ") + to_string(q);
    out += line + '\n';
  }
  return out;
}

}  // namespace autmin
