#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace peeltri::map {

/// A side of a triangle, identified as 3*face + side_index (side_index in 0..2).
/// Side i of face f runs from corner i to corner i+1 in counterclockwise order;
/// corner i of face f shares the id 3*f + i.
using SideId = int;
inline constexpr SideId kFreeSide = -1;

inline int face_of(SideId s) { return s / 3; }
inline int index_of(SideId s) { return s % 3; }
inline SideId side_id(int face, int idx) { return 3 * face + idx; }
/// The next side/corner of the same face in ccw order.
inline SideId ccw(SideId s) { return 3 * (s / 3) + (s % 3 + 1) % 3; }

/// Oriented root edge: the side `side` of face `face`, with the face on the
/// left when forward = true (the standard orientation).
struct Root {
  int face = 0;
  int side = 0;
  bool forward = true;
  bool operator==(const Root&) const = default;
};

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidGluing : BuildError {
  using BuildError::BuildError;
};
struct Disconnected : BuildError {
  using BuildError::BuildError;
};
struct NonPlanar : BuildError {
  using BuildError::BuildError;
};

/// Zero-face conventional values: a lone vertex, a lone edge (two distinct
/// endpoints), and a vertex with a loop. They carry hard-coded perimeters and
/// inner volume and are matched specially by the inclusion test.
enum class Sentinel { None, Vertex, Edge, VertexLoop };

/// Rooted planar complex of edge-glued triangles with holes.
///
/// Unglued ("free") sides are grouped into hole boundary cycles: each free
/// side has a stored successor, the next free side counterclockwise around the
/// vertex at its endpoint. The successor permutation carries the vertex
/// identifications along hole boundaries, which is what distinguishes e.g. a
/// ball cut out of the dual of the binary tree (all vertices distinct) from
/// one whose free sides are all loops around a single vertex: the two share
/// the same gluings and differ only in this permutation. When no permutation
/// is supplied, build() derives the one obtained by walking each hole boundary
/// through the gluings, which is the ordinary "fill nothing in" reading.
///
/// Vertices are corner orbits: gluing (f,i)~(g,j) identifies corner (f,i) with
/// (g,j+1) and (f,i+1) with (g,j); a hole successor s -> s' identifies the
/// endpoint corner ccw(s) with the start corner s'. Validity requires Euler
/// characteristic 2 counting holes as faces, which encodes planarity.
///
/// Immutable after construction; all operations are const.
class TriComplex {
 public:
  static TriComplex single_vertex();  // lone vertex, no edge
  static TriComplex single_edge();    // lone edge, two endpoints
  static TriComplex vertex_loop();    // lone vertex with a loop, two holes

  /// Validates and builds; hole cycles derived by boundary walks.
  static TriComplex build(int face_count, const std::vector<std::pair<SideId, SideId>>& gluings,
                          Root root);
  /// As build(), but with an explicit grouping of the free sides into hole
  /// cycles (each inner vector lists one cycle in successor order).
  static TriComplex build(int face_count, const std::vector<std::pair<SideId, SideId>>& gluings,
                          Root root, const std::vector<std::vector<SideId>>& holes);

  Sentinel sentinel() const { return sentinel_; }
  bool is_sentinel() const { return sentinel_ != Sentinel::None; }

  int face_count() const { return face_count_; }
  const Root& root() const { return root_; }
  /// Same complex, different root (no revalidation needed).
  TriComplex rerooted(Root root) const;

  /// Glued partner of a side, or kFreeSide.
  SideId glued_to(SideId s) const { return gluing_.at(static_cast<size_t>(s)); }
  bool is_free(SideId s) const { return glued_to(s) == kFreeSide; }
  /// Successor of a free side in its hole cycle.
  SideId hole_successor(SideId s) const;

  int hole_count() const { return static_cast<int>(holes_.size()); }
  const std::vector<std::vector<SideId>>& holes() const { return holes_; }
  /// Hole boundary lengths, sorted ascending.
  std::vector<int> perimeters() const;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const;
  int free_side_count() const { return free_count_; }
  /// Vertex (corner-orbit index) at corner c.
  int vertex_at(SideId corner) const { return vertex_of_corner_.at(static_cast<size_t>(corner)); }
  /// Number of corners in the orbit of vertex v (= its degree as a map vertex).
  int degree(int vertex) const;
  /// True when every corner of the vertex lies strictly inside the glued part,
  /// i.e. no free side starts or ends at it. Such a vertex can gain no further
  /// identifications when holes are filled.
  bool vertex_interior(int vertex) const;

  /// Origin vertex of the root edge (honoring the orientation flag).
  int root_origin_vertex() const;
  /// Whether the root edge is a loop.
  bool root_is_loop() const;

  /// Total vertices minus one minus sum of (perimeter - 1) over holes.
  int inner_volume() const;

  /// True for complexes cut out of a larger, partially explored object: free
  /// sides are truncation artifacts, so a pattern reaching past them makes an
  /// inclusion test Undetermined rather than negative.
  bool truncated() const { return truncated_; }
  /// Whether the hole successor structure is final. It always is for spheres,
  /// patterns and exactly-built balls; it is not for an exploration still in
  /// progress, where later steps can splice boundary vertices together.
  bool boundary_final() const { return boundary_final_; }
  TriComplex as_truncated(bool boundary_final) const;

 private:
  TriComplex() = default;
  void finish_build(const std::vector<std::vector<SideId>>* holes);

  Sentinel sentinel_ = Sentinel::None;
  int face_count_ = 0;
  Root root_;
  std::vector<SideId> gluing_;                // per side; kFreeSide if unglued
  std::vector<SideId> hole_succ_;             // per side; meaningful on free sides
  std::vector<std::vector<SideId>> holes_;    // cycles of free sides
  std::vector<int> vertex_of_corner_;         // per corner
  int vertex_count_ = 0;
  int free_count_ = 0;
  bool truncated_ = false;
  bool boundary_final_ = true;
};

}  // namespace peeltri::map
