#include "peeltri/tricomplex.hpp"

#include <algorithm>
#include <numeric>

namespace peeltri::map {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

TriComplex TriComplex::single_vertex() {
  TriComplex t;
  t.sentinel_ = Sentinel::Vertex;
  t.vertex_count_ = 1;
  return t;
}

TriComplex TriComplex::single_edge() {
  TriComplex t;
  t.sentinel_ = Sentinel::Edge;
  t.vertex_count_ = 2;
  t.holes_ = {{}};
  return t;
}

TriComplex TriComplex::vertex_loop() {
  TriComplex t;
  t.sentinel_ = Sentinel::VertexLoop;
  t.vertex_count_ = 1;
  t.holes_ = {{}, {}};
  return t;
}

TriComplex TriComplex::build(int face_count, const std::vector<std::pair<SideId, SideId>>& gluings,
                             Root root) {
  TriComplex t;
  t.face_count_ = face_count;
  t.root_ = root;
  t.gluing_.assign(static_cast<size_t>(3 * face_count), kFreeSide);
  if (face_count <= 0) throw InvalidGluing("build: need at least one face");
  for (auto [a, b] : gluings) {
    if (a < 0 || b < 0 || a >= 3 * face_count || b >= 3 * face_count || a == b)
      throw InvalidGluing("build: side index out of range");
    if (t.gluing_[static_cast<size_t>(a)] != kFreeSide || t.gluing_[static_cast<size_t>(b)] != kFreeSide)
      throw InvalidGluing("build: side glued twice");
    t.gluing_[static_cast<size_t>(a)] = b;
    t.gluing_[static_cast<size_t>(b)] = a;
  }
  if (root.face < 0 || root.face >= face_count || root.side < 0 || root.side > 2)
    throw InvalidGluing("build: root side out of range");
  t.finish_build(nullptr);
  return t;
}

TriComplex TriComplex::build(int face_count, const std::vector<std::pair<SideId, SideId>>& gluings,
                             Root root, const std::vector<std::vector<SideId>>& holes) {
  TriComplex t = build(face_count, gluings, root);
  TriComplex u;
  u.face_count_ = t.face_count_;
  u.root_ = t.root_;
  u.gluing_ = t.gluing_;
  u.finish_build(&holes);
  return u;
}

void TriComplex::finish_build(const std::vector<std::vector<SideId>>* holes) {
  int sides = 3 * face_count_;
  // dual connectivity
  {
    std::vector<char> seen(static_cast<size_t>(face_count_), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; ++i) {
        SideId g = gluing_[static_cast<size_t>(side_id(f, i))];
        if (g != kFreeSide && !seen[static_cast<size_t>(face_of(g))]) {
          seen[static_cast<size_t>(face_of(g))] = 1;
          ++reached;
          stack.push_back(face_of(g));
        }
      }
    }
    if (reached != face_count_) throw Disconnected("build: dual graph not connected");
  }

  hole_succ_.assign(static_cast<size_t>(sides), kFreeSide);
  free_count_ = 0;
  for (SideId s = 0; s < sides; ++s)
    if (gluing_[static_cast<size_t>(s)] == kFreeSide) ++free_count_;

  holes_.clear();
  if (holes) {
    std::vector<char> used(static_cast<size_t>(sides), 0);
    int covered = 0;
    for (const auto& cycle : *holes) {
      if (cycle.empty()) throw InvalidGluing("build: empty hole cycle");
      for (size_t i = 0; i < cycle.size(); ++i) {
        SideId s = cycle[i];
        if (s < 0 || s >= sides || gluing_[static_cast<size_t>(s)] != kFreeSide)
          throw InvalidGluing("build: hole cycle contains a non-free side");
        if (used[static_cast<size_t>(s)]) throw InvalidGluing("build: free side in two hole cycles");
        used[static_cast<size_t>(s)] = 1;
        ++covered;
        hole_succ_[static_cast<size_t>(s)] = cycle[(i + 1) % cycle.size()];
      }
      holes_.push_back(cycle);
    }
    if (covered != free_count_) throw InvalidGluing("build: hole cycles do not cover all free sides");
  } else {
    // Walk each hole boundary: from the endpoint corner of a free side, cross
    // gluings until the next free side around that vertex.
    std::vector<char> visited(static_cast<size_t>(sides), 0);
    for (SideId s0 = 0; s0 < sides; ++s0) {
      if (gluing_[static_cast<size_t>(s0)] != kFreeSide || visited[static_cast<size_t>(s0)]) continue;
      std::vector<SideId> cycle;
      SideId s = s0;
      do {
        visited[static_cast<size_t>(s)] = 1;
        cycle.push_back(s);
        SideId t = ccw(s);
        while (gluing_[static_cast<size_t>(t)] != kFreeSide)
          t = ccw(gluing_[static_cast<size_t>(t)]);
        hole_succ_[static_cast<size_t>(s)] = t;
        s = t;
      } while (s != s0);
      holes_.push_back(std::move(cycle));
    }
  }

  // corner orbits
  UnionFind uf(sides);
  for (SideId s = 0; s < sides; ++s) {
    SideId g = gluing_[static_cast<size_t>(s)];
    if (g > s) {
      uf.unite(s, ccw(g));
      uf.unite(ccw(s), g);
    }
    if (g == kFreeSide) uf.unite(ccw(s), hole_succ_[static_cast<size_t>(s)]);
  }
  vertex_of_corner_.assign(static_cast<size_t>(sides), -1);
  vertex_count_ = 0;
  for (SideId c = 0; c < sides; ++c) {
    int r = uf.find(c);
    if (vertex_of_corner_[static_cast<size_t>(r)] < 0)
      vertex_of_corner_[static_cast<size_t>(r)] = vertex_count_++;
    vertex_of_corner_[static_cast<size_t>(c)] = vertex_of_corner_[static_cast<size_t>(r)];
  }

  // Euler characteristic, with holes counted as faces
  int E2 = 3 * face_count_ + free_count_;  // 2E
  if (E2 % 2) throw NonPlanar("build: odd half-edge count");  // cannot happen
  int chi2 = 2 * vertex_count_ - E2 + 2 * (face_count_ + hole_count());
  if (chi2 != 4) throw NonPlanar("build: Euler characteristic is not 2");
}

TriComplex TriComplex::rerooted(Root root) const {
  if (is_sentinel()) throw InvalidGluing("rerooted: not supported on zero-face values");
  if (root.face < 0 || root.face >= face_count_ || root.side < 0 || root.side > 2)
    throw InvalidGluing("rerooted: root side out of range");
  TriComplex t = *this;
  t.root_ = root;
  return t;
}

TriComplex TriComplex::as_truncated(bool boundary_final) const {
  TriComplex t = *this;
  t.truncated_ = true;
  t.boundary_final_ = boundary_final;
  return t;
}

SideId TriComplex::hole_successor(SideId s) const {
  if (!is_free(s)) throw InvalidGluing("hole_successor: side is glued");
  return hole_succ_.at(static_cast<size_t>(s));
}

std::vector<int> TriComplex::perimeters() const {
  std::vector<int> p;
  switch (sentinel_) {
    case Sentinel::Vertex:
      return {};
    case Sentinel::Edge:
      return {2};
    case Sentinel::VertexLoop:
      return {1, 1};
    case Sentinel::None:
      break;
  }
  p.reserve(holes_.size());
  for (const auto& c : holes_) p.push_back(static_cast<int>(c.size()));
  std::sort(p.begin(), p.end());
  return p;
}

int TriComplex::edge_count() const {
  switch (sentinel_) {
    case Sentinel::Vertex:
      return 0;
    case Sentinel::Edge:
    case Sentinel::VertexLoop:
      return 1;
    case Sentinel::None:
      break;
  }
  return (3 * face_count_ + free_count_) / 2;
}

int TriComplex::degree(int vertex) const {
  int d = 0;
  for (int v : vertex_of_corner_)
    if (v == vertex) ++d;
  return d;
}

bool TriComplex::vertex_interior(int vertex) const {
  for (SideId s = 0; s < 3 * face_count_; ++s) {
    if (!is_free(s)) continue;
    if (vertex_at(s) == vertex || vertex_at(ccw(s)) == vertex) return false;
  }
  return true;
}

int TriComplex::root_origin_vertex() const {
  if (is_sentinel()) return 0;
  SideId s = side_id(root_.face, root_.side);
  return vertex_at(root_.forward ? s : ccw(s));
}

bool TriComplex::root_is_loop() const {
  switch (sentinel_) {
    case Sentinel::Vertex:
      throw InvalidGluing("root_is_loop: no root edge");
    case Sentinel::Edge:
      return false;
    case Sentinel::VertexLoop:
      return true;
    case Sentinel::None:
      break;
  }
  SideId s = side_id(root_.face, root_.side);
  return vertex_at(s) == vertex_at(ccw(s));
}

int TriComplex::inner_volume() const {
  if (is_sentinel()) return 0;
  int v = vertex_count_ - 1;
  for (const auto& c : holes_) v -= static_cast<int>(c.size()) - 1;
  return v;
}

}  // namespace peeltri::map
