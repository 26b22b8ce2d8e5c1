#pragma once

// Named building-block automata. Two-track predicates take (x, y) in that
// track order; folded phi-representations use x for the left part and y for
// the reversed right part.

#include "phirep/automaton.hpp"

#include <string>
#include <string_view>

namespace phirep {

enum class Primitive {
  FIBNORM,
  NEGFIBNORM,
  SHIFTL,
  SHIFTR,
  LSTBIT1,
  LSTBIT2,
  LSTBIT3,
  FIBNEGFIB,
  FIBNEGFIB2,
  HAS11,
  EQUAL,
  COMPL,
  ISFIB,
  EVENL,
  SUFF,
  MATCH1,
  ONEPOS,
  FIRST1MATCH,
  SUM2,
  HAS_T_ONES,
  NO11XY,
  KNOTT_COND,
  DVL_COND,
};

/// Builds a primitive; `t` is only used by HAS_T_ONES. Tracks are named
/// x, y (or just x for one-track predicates).
Dfa build_primitive(Primitive p, int t = 0);
/// Cached instance, shared and immutable.
const Dfa& primitive(Primitive p, int t = 0);

/// Parses names like "fibnorm", "FIBNEGFIB2" or "has_t_ones(3)".
Dfa build_primitive(std::string_view name);
std::string primitive_name(Primitive p);

}  // namespace phirep
