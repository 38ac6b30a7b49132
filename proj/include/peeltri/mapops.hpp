#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "peeltri/tricomplex.hpp"

namespace peeltri::map {

struct GeneratorInconsistent : BuildError {
  using BuildError::BuildError;
};

/// Lazy dual-adjacency oracle for a possibly infinite triangulation. Faces are
/// arbitrary 64-bit ids; the root face/side is (0, 0).
class FaceSource {
 public:
  virtual ~FaceSource() = default;
  /// The side glued to side `side` of face `face`, or nullopt if it is free.
  virtual std::optional<std::pair<std::int64_t, int>> neighbor(std::int64_t face, int side) = 0;
};

/// Ball of radius r around the root face in the dual graph of the source.
/// Hole successors are derived by boundary walks through the source, so the
/// result carries the source's vertex identifications along its boundary.
/// A walk that cannot close through the complement (unbounded fan, or a free
/// side of the source) falls back to the region-side reading, which assumes
/// the ball's corners at that vertex form one contiguous block; sources where
/// neither applies raise GeneratorInconsistent, as does an asymmetric
/// neighbor().
TriComplex dual_ball(FaceSource& src, int r);

struct Extraction {
  TriComplex complex;
  /// False when a boundary fan walk had to cross an unexplored hole of a
  /// truncated host, so the extracted hole structure may still change as more
  /// of the host is revealed.
  bool determined = true;
};

/// Sub-complex induced on a set of host faces (which must contain the root
/// face and be connected in the dual). Sides leading out of the set become
/// free; their hole successors are derived by fan walks through the host.
Extraction extract_submap(const TriComplex& host, const std::vector<char>& in_region);

/// Faces of host at dual distance at most r from the root face.
Extraction dual_ball(const TriComplex& host, int r);

/// Faces of host incident to a vertex at graph distance at most r-1 from the
/// origin of the root edge; r = 0 gives the lone-vertex convention value.
TriComplex primal_ball(const TriComplex& host, int r);

enum class Inclusion { No, Yes, Undetermined };

/// Whether host can be obtained from t by filling each hole of t with a
/// triangulation of matching perimeter. Root-anchored; the copy of t, if any,
/// is unique, so this is a deterministic simultaneous walk from the roots.
/// Returns Undetermined when host is a truncated exploration that does not
/// reach far enough to decide.
Inclusion includes(const TriComplex& t, const TriComplex& host);

/// Number of oriented edges e of host (a sphere triangulation) such that host
/// rerooted at e contains the pattern.
int occ_count(const TriComplex& pattern, const TriComplex& host);

}  // namespace peeltri::map
