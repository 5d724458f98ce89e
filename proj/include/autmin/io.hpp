#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autmin/automaton.hpp"
#include "autmin/equiv.hpp"
#include "autmin/hardness.hpp"

namespace autmin {

// Automaton documents:
//
//   daut 1
//   alphabet <sym>+
//   states <n>
//   initial <state|TOP|BOT>
//   acceptance finite|buchi|cobuchi <state>*
//   acceptance parity <p0> ... <p(n-1)>
//   trans <state> <sym> <state|TOP|BOT>      (exactly n * |alphabet| lines)
//
// '#' starts a comment. Inside a token, '\' escapes the next character and
// "..." quotes a literal, so the stop symbol is written \# or "#".

Automaton parse_automaton(std::string_view text);
std::string serialise_automaton(const Automaton& a);

// Graph documents: `graph`, `vertices <name>+`, optional `initial <name>`,
// and one `edge <u> <v>` per edge. Niceness is checked by parse_nice_graph.

Graph parse_graph(std::string_view text);
NiceGraph parse_nice_graph(std::string_view text);
std::string serialise_graph(const Graph& g);

// Lassos: `<sym>* ; <sym>+` on one line.

Lasso parse_lasso(std::string_view text);
std::string format_lasso(const Lasso& lasso);

// Partitions: one class per line, members separated by spaces.

Partition parse_partition(std::string_view text, std::size_t state_count);
std::string format_partition(const Partition& p);

std::string format_word(const std::vector<std::string>& word);

}  // namespace autmin
