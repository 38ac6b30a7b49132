#include "peeltri/mapops.hpp"

#include <deque>
#include <map>

namespace peeltri::map {

namespace {

using SrcSide = std::pair<std::int64_t, int>;

SrcSide src_ccw(SrcSide s) { return {s.first, (s.second + 1) % 3}; }

/// Root with the root face (the face on the left of the oriented root edge)
/// as the stored face whenever the complex contains it.
Root normalized_root(const TriComplex& t) {
  Root r = t.root();
  if (!r.forward) {
    SideId g = t.glued_to(side_id(r.face, r.side));
    if (g != kFreeSide) r = {face_of(g), index_of(g), true};
  }
  return r;
}

// Boundary successor derivation. The hole lies on the right of a free side s
// (its face is on the left), so the next boundary edge around the end vertex
// of s is found by rotating clockwise *through the complement*: cross the edge
// of s itself, then repeatedly take the side of the current outside face that
// ends at the vertex and cross it, until a region side is reached. Rotating
// the other way through the region faces is only equivalent when the vertex is
// unpinched (all its region corners contiguous); it silently misses the
// identifications a pinching host imposes, so it is not used here.

}  // namespace

TriComplex dual_ball(FaceSource& src, int r) {
  std::map<std::int64_t, int> local;  // source face -> local index
  std::vector<std::int64_t> faces;    // local index -> source face
  auto discover = [&](std::int64_t f) {
    auto [it, fresh] = local.emplace(f, static_cast<int>(faces.size()));
    if (fresh) faces.push_back(f);
    return it->second;
  };
  auto checked_neighbor = [&](SrcSide s) {
    auto n = src.neighbor(s.first, s.second);
    if (n) {
      auto back = src.neighbor(n->first, n->second);
      if (!back || *back != s) throw GeneratorInconsistent("dual_ball: asymmetric neighbor relation");
    }
    return n;
  };

  discover(0);
  std::vector<int> depth = {0};
  for (size_t qi = 0; qi < faces.size(); ++qi) {
    if (depth[qi] == r) continue;
    for (int i = 0; i < 3; ++i) {
      auto n = checked_neighbor({faces[qi], i});
      if (!n) continue;
      size_t before = faces.size();
      int li = discover(n->first);
      if (static_cast<size_t>(li) == before) depth.push_back(depth[qi] + 1);
    }
  }

  auto in_region = [&](std::int64_t f) { return local.count(f) > 0; };
  auto region_free = [&](SrcSide s) {
    auto n = checked_neighbor(s);
    return !n || !in_region(n->first);
  };

  std::vector<std::pair<SideId, SideId>> gluings;
  std::vector<SrcSide> free_order;
  std::map<SrcSide, SideId> local_side;
  for (size_t li = 0; li < faces.size(); ++li) {
    for (int i = 0; i < 3; ++i) {
      SrcSide s{faces[li], i};
      local_side[s] = side_id(static_cast<int>(li), i);
      auto n = checked_neighbor(s);
      if (n && in_region(n->first)) {
        if (local.at(n->first) > static_cast<int>(li) ||
            (local.at(n->first) == static_cast<int>(li) && n->second > i))
          gluings.emplace_back(side_id(static_cast<int>(li), i),
                               side_id(local.at(n->first), n->second));
      } else {
        free_order.push_back(s);
      }
    }
  }

  // Hole successors by boundary walks through the source complement. When a
  // walk cannot close there (the fan is unbounded, as at every boundary vertex
  // of a tree-like source, or runs into a free side of the source itself), the
  // boundary jumps across the end of the source and the successor is instead
  // the far side of this vertex's block of ball corners, found by rotating the
  // other way through ball faces only.
  std::vector<std::vector<SideId>> holes;
  std::map<SrcSide, SrcSide> succ;
  constexpr long kWalkBudget = 1 << 16;
  for (SrcSide s : free_order) {
    bool resolved = false;
    SrcSide result;
    auto first = checked_neighbor(s);
    if (first) {
      SrcSide cand = *first;
      for (long guard = 0; guard <= kWalkBudget; ++guard) {
        if (in_region(cand.first) && region_free(cand)) {
          result = cand;
          resolved = true;
          break;
        }
        SrcSide q = src_ccw(src_ccw(cand));
        auto n = checked_neighbor(q);
        if (!n) break;
        cand = *n;
      }
    }
    if (!resolved) {
      SrcSide t = src_ccw(s);
      for (long guard = 0;; ++guard) {
        if (guard > 4L * static_cast<long>(faces.size()) + 16)
          throw GeneratorInconsistent("dual_ball: boundary walk did not close");
        if (region_free(t)) break;
        auto n = checked_neighbor(t);
        if (!n || !in_region(n->first))
          throw GeneratorInconsistent("dual_ball: cannot resolve boundary at an unbounded fan");
        t = src_ccw(*n);
      }
      result = t;
    }
    succ[s] = result;
  }
  std::map<SrcSide, char> done;
  for (SrcSide s0 : free_order) {
    if (done.count(s0)) continue;
    std::vector<SideId> cycle;
    SrcSide s = s0;
    do {
      done[s] = 1;
      cycle.push_back(local_side.at(s));
      s = succ.at(s);
    } while (s != s0);
    holes.push_back(std::move(cycle));
  }

  // The ball is cut out of a complete map, so it is a finalized truncation.
  return TriComplex::build(static_cast<int>(faces.size()), gluings, {0, 0, true}, holes)
      .as_truncated(true);
}

Extraction extract_submap(const TriComplex& host, const std::vector<char>& in_region) {
  int HF = host.face_count();
  if (static_cast<int>(in_region.size()) != HF)
    throw BuildError("extract_submap: region mask has wrong size");
  std::vector<int> local(static_cast<size_t>(HF), -1);
  std::vector<int> faces;
  for (int f = 0; f < HF; ++f)
    if (in_region[static_cast<size_t>(f)]) {
      local[static_cast<size_t>(f)] = static_cast<int>(faces.size());
      faces.push_back(f);
    }
  Root hr = normalized_root(host);
  if (!in_region[static_cast<size_t>(hr.face)])
    throw BuildError("extract_submap: region must contain the root face");

  auto region_free = [&](SideId s) {
    SideId g = host.glued_to(s);
    return g == kFreeSide || !in_region[static_cast<size_t>(face_of(g))];
  };
  auto to_local = [&](SideId s) {
    return side_id(local[static_cast<size_t>(face_of(s))], index_of(s));
  };

  std::vector<std::pair<SideId, SideId>> gluings;
  std::vector<SideId> free_order;
  for (int hf : faces) {
    for (int i = 0; i < 3; ++i) {
      SideId s = side_id(hf, i);
      if (region_free(s)) {
        free_order.push_back(s);
      } else if (host.glued_to(s) > s) {
        gluings.emplace_back(to_local(s), to_local(host.glued_to(s)));
      }
    }
  }

  bool determined = true;
  std::map<SideId, SideId> succ;
  for (SideId s : free_order) {
    SideId cand;
    if (host.glued_to(s) == kFreeSide) {
      if (!host.boundary_final()) determined = false;
      cand = host.hole_successor(s);
    } else {
      cand = host.glued_to(s);
    }
    for (long guard = 0;; ++guard) {
      if (guard > 12L * HF + 16) throw BuildError("extract_submap: boundary walk did not close");
      if (in_region[static_cast<size_t>(face_of(cand))]) break;  // region-free by construction
      SideId q = ccw(ccw(cand));  // side of the same outside face ending at the vertex
      SideId g = host.glued_to(q);
      if (g != kFreeSide) {
        cand = g;
      } else {
        if (!host.boundary_final()) determined = false;
        cand = host.hole_successor(q);
      }
    }
    succ[s] = cand;
  }
  std::vector<std::vector<SideId>> holes;
  std::map<SideId, char> done;
  for (SideId s0 : free_order) {
    if (done.count(s0)) continue;
    std::vector<SideId> cycle;
    SideId s = s0;
    do {
      done[s] = 1;
      cycle.push_back(to_local(s));
      s = succ.at(s);
    } while (s != s0);
    holes.push_back(std::move(cycle));
  }

  Root root{local[static_cast<size_t>(hr.face)], hr.side, hr.forward};
  TriComplex out =
      TriComplex::build(static_cast<int>(faces.size()), gluings, root, holes);
  if (host.truncated()) out = out.as_truncated(determined);
  return {std::move(out), determined};
}

Extraction dual_ball(const TriComplex& host, int r) {
  Root hr = normalized_root(host);
  if (!hr.forward)
    throw BuildError("dual_ball: the face on the left of the root edge is not in the complex");
  std::vector<int> dist(static_cast<size_t>(host.face_count()), -1);
  std::deque<int> q;
  dist[static_cast<size_t>(hr.face)] = 0;
  q.push_back(hr.face);
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    if (dist[static_cast<size_t>(f)] == r) continue;
    for (int i = 0; i < 3; ++i) {
      SideId g = host.glued_to(side_id(f, i));
      if (g != kFreeSide && dist[static_cast<size_t>(face_of(g))] < 0) {
        dist[static_cast<size_t>(face_of(g))] = dist[static_cast<size_t>(f)] + 1;
        q.push_back(face_of(g));
      }
    }
  }
  std::vector<char> in_region(static_cast<size_t>(host.face_count()), 0);
  for (size_t f = 0; f < in_region.size(); ++f) in_region[f] = dist[f] >= 0;
  return extract_submap(host, in_region);
}

TriComplex primal_ball(const TriComplex& host, int r) {
  if (host.truncated()) throw BuildError("primal_ball: host must be complete");
  if (r <= 0) return TriComplex::single_vertex();
  // vertex graph BFS from the root edge origin
  int V = host.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<size_t>(V));
  for (SideId s = 0; s < 3 * host.face_count(); ++s) {
    if (host.glued_to(s) != kFreeSide && host.glued_to(s) < s) continue;
    int a = host.vertex_at(s), b = host.vertex_at(ccw(s));
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<int> dist(static_cast<size_t>(V), -1);
  std::deque<int> q;
  dist[static_cast<size_t>(host.root_origin_vertex())] = 0;
  q.push_back(host.root_origin_vertex());
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  std::vector<char> in_region(static_cast<size_t>(host.face_count()), 0);
  for (int f = 0; f < host.face_count(); ++f)
    for (int i = 0; i < 3; ++i) {
      int d = dist[static_cast<size_t>(host.vertex_at(side_id(f, i)))];
      if (d >= 0 && d <= r - 1) in_region[static_cast<size_t>(f)] = 1;
    }
  return extract_submap(host, in_region).complex;
}

namespace {

/// Root loop status with a determinacy verdict.
Inclusion root_loop_status(const TriComplex& host, bool want_loop) {
  bool loop = host.root_is_loop();
  if (loop) return want_loop ? Inclusion::Yes : Inclusion::No;
  // Not identified so far; final unless the host is a live exploration whose
  // boundary can still splice these vertices together.
  bool final_ = !host.truncated() || host.boundary_final();
  if (!final_) {
    SideId s = side_id(host.root().face, host.root().side);
    final_ = host.vertex_interior(host.vertex_at(s)) && host.vertex_interior(host.vertex_at(ccw(s)));
  }
  if (!final_) return Inclusion::Undetermined;
  return want_loop ? Inclusion::No : Inclusion::Yes;
}

}  // namespace

Inclusion includes(const TriComplex& t, const TriComplex& host) {
  if (t.sentinel() == Sentinel::Vertex) return Inclusion::Yes;
  if (host.is_sentinel()) {
    if (t.sentinel() == Sentinel::None) return Inclusion::No;
    return t.sentinel() == host.sentinel() ? Inclusion::Yes : Inclusion::No;
  }
  if (t.sentinel() == Sentinel::Edge) return root_loop_status(host, false);
  if (t.sentinel() == Sentinel::VertexLoop) return root_loop_status(host, true);

  Root troot = normalized_root(t);
  Root hroot = normalized_root(host);
  if (troot.forward != hroot.forward) return Inclusion::No;

  int TF = t.face_count(), HF = host.face_count();
  std::vector<int> tf2hf(static_cast<size_t>(TF), -1);
  std::vector<int> rot(static_cast<size_t>(TF), 0);
  std::vector<int> hf_used(static_cast<size_t>(HF), -1);
  bool undetermined = false;

  tf2hf[static_cast<size_t>(troot.face)] = hroot.face;
  rot[static_cast<size_t>(troot.face)] = ((hroot.side - troot.side) % 3 + 3) % 3;
  hf_used[static_cast<size_t>(hroot.face)] = troot.face;
  std::deque<int> q = {troot.face};
  int matched = 1;
  auto host_side_of = [&](SideId ts) {
    int f = face_of(ts);
    return side_id(tf2hf[static_cast<size_t>(f)], (index_of(ts) + rot[static_cast<size_t>(f)]) % 3);
  };
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int i = 0; i < 3; ++i) {
      SideId ts = side_id(f, i);
      SideId ts2 = t.glued_to(ts);
      if (ts2 == kFreeSide) continue;
      SideId hs2 = host.glued_to(host_side_of(ts));
      if (hs2 == kFreeSide) {
        // pattern reaches past the explored part of the host
        if (!host.truncated()) return Inclusion::No;
        undetermined = true;
        continue;
      }
      int tf2 = face_of(ts2);
      if (tf2hf[static_cast<size_t>(tf2)] >= 0) {
        if (host_side_of(ts2) != hs2) return Inclusion::No;
      } else {
        if (hf_used[static_cast<size_t>(face_of(hs2))] >= 0) return Inclusion::No;
        tf2hf[static_cast<size_t>(tf2)] = face_of(hs2);
        rot[static_cast<size_t>(tf2)] = ((index_of(hs2) - index_of(ts2)) % 3 + 3) % 3;
        hf_used[static_cast<size_t>(face_of(hs2))] = tf2;
        q.push_back(tf2);
        ++matched;
      }
    }
  }
  if (matched != TF) return undetermined ? Inclusion::Undetermined : Inclusion::No;

  // The filled copy must leave exactly t's holes: the image of a free side of
  // t may not be glued back into the matched region. One exception: a hole of
  // perimeter 2 may be closed by gluing its two sides directly to each other
  // (the zero-face disk of volume 1, the only degenerate filling there is);
  // that gluing makes exactly the identifications the hole cycle already
  // carries, so such sides need no successor check either.
  auto in_region = [&](int hf) { return hf_used[static_cast<size_t>(hf)] >= 0; };
  auto t_side_of = [&](SideId hs) {
    int tf = hf_used[static_cast<size_t>(face_of(hs))];
    return side_id(tf, ((index_of(hs) - rot[static_cast<size_t>(tf)]) % 3 + 3) % 3);
  };
  std::vector<char> closed_pair(static_cast<size_t>(3 * TF), 0);
  for (SideId ts = 0; ts < 3 * TF; ++ts) {
    if (!t.is_free(ts)) continue;
    SideId ts2 = t.hole_successor(ts);
    if (ts2 != ts && t.hole_successor(ts2) == ts &&
        host.glued_to(host_side_of(ts)) == host_side_of(ts2))
      closed_pair[static_cast<size_t>(ts)] = 1;
  }
  for (SideId ts = 0; ts < 3 * TF; ++ts) {
    if (!t.is_free(ts) || closed_pair[static_cast<size_t>(ts)]) continue;
    SideId g = host.glued_to(host_side_of(ts));
    if (g != kFreeSide && in_region(face_of(g))) return Inclusion::No;
  }

  // Boundary identifications: the hole successor induced by the host (walking
  // clockwise through the complement of the copy) must be the image of t's
  // successor, for every free side of t.
  for (SideId ts = 0; ts < 3 * TF; ++ts) {
    if (!t.is_free(ts) || closed_pair[static_cast<size_t>(ts)]) continue;
    bool taint = false;
    SideId cand;
    {
      SideId start = host_side_of(ts);
      if (host.glued_to(start) == kFreeSide) {
        if (!host.boundary_final()) taint = true;
        cand = host.hole_successor(start);
      } else {
        cand = host.glued_to(start);
      }
    }
    for (long guard = 0;; ++guard) {
      if (guard > 12L * HF + 16) throw BuildError("includes: boundary walk did not close");
      if (in_region(face_of(cand))) {
        SideId tc = t_side_of(cand);
        if (t.is_free(tc) && !closed_pair[static_cast<size_t>(tc)]) break;
      }
      SideId q = ccw(ccw(cand));
      SideId g = host.glued_to(q);
      if (g != kFreeSide) {
        cand = g;
      } else {
        if (!host.boundary_final()) taint = true;
        cand = host.hole_successor(q);
      }
    }
    if (taint) {
      undetermined = true;  // walk relied on a boundary that can still change
    } else if (t_side_of(cand) != t.hole_successor(ts)) {
      return Inclusion::No;
    }
  }

  return undetermined ? Inclusion::Undetermined : Inclusion::Yes;
}

int occ_count(const TriComplex& pattern, const TriComplex& host) {
  if (host.is_sentinel() || host.hole_count() != 0 || host.truncated())
    throw BuildError("occ_count: host must be a sphere triangulation");
  int n = 0;
  for (SideId s = 0; s < 3 * host.face_count(); ++s)
    if (includes(pattern, host.rerooted({face_of(s), index_of(s), true})) == Inclusion::Yes) ++n;
  return n;
}

}  // namespace peeltri::map
