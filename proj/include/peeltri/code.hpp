#pragma once

#include <string>

#include "peeltri/tricomplex.hpp"

namespace peeltri::map {

/// Canonical code of a rooted complex. Breadth-first traversal of the dual
/// from the root face; within a face, sides are visited in rotational order
/// from the entry side. Tokens, '.'-separated:
///   N     a gluing to a face not seen before,
///   B<k>  a gluing to position k = 3*(BFS face index) + rotational offset,
///   H<j>  a free side whose hole successor is the j-th free side visited.
/// Zero-face values encode as T10 / T20 / T110; a reversed root orientation
/// adds a leading '~'. Two complexes have equal codes iff they are isomorphic
/// as rooted complexes (including the hole successor structure).
std::string canonical_code(const TriComplex& t);

/// Rebuilds a complex from its code; canonical_code(decode_code(c)) == c.
TriComplex decode_code(const std::string& code);

}  // namespace peeltri::map
