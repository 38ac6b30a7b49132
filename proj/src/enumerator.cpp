#include "peeltri/enumerator.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "peeltri/code.hpp"
#include "peeltri/mapops.hpp"

namespace peeltri::enumerator {
namespace {

using map::ccw;
using map::face_of;
using map::index_of;
using map::kFreeSide;
using map::Root;
using map::SideId;
using map::TriComplex;

// ---------------------------------------------------------------------------
// Peeling-decision enumeration of disk triangulations.
//
// Mirrors the randomized fill sampler: active cycles hold the sides of the
// unbuilt region, boundary slots of the disk appear as virtual items -(m+1)
// until realized, and the step at the head of the last cycle either closes a
// 2-cycle, reveals a face widening the cycle, or reveals a face splitting it.
// The peel position is a deterministic function of the partial state, so
// decision sequences are in bijection with boundary-rooted triangulations of
// the p-gon: replaying the peeler on a finished disk reads back exactly one
// sequence, which reconstructs the same labeled gluing table.

struct Disk {
  int faces = 0;
  std::vector<std::pair<SideId, SideId>> gluings;
  std::vector<SideId> boundary;  // realized boundary slots, hole order
  bool degenerate = false;       // the volume-1 closure of the 2-gon
};

class DiskEnum {
 public:
  DiskEnum(int p, long face_cap, std::function<void(const Disk&)> visit)
      : p_(p), cap_(face_cap), visit_(std::move(visit)), real_(static_cast<size_t>(p), kFreeSide) {}

  void run() {
    std::vector<int> init(static_cast<size_t>(p_));
    for (int m = 0; m < p_; ++m) init[static_cast<size_t>(m)] = -(m + 1);
    min_sum_ = min_fill(p_);
    stack_.push_back(std::move(init));
    dfs();
    stack_.clear();
  }

 private:
  // Fewest further faces a cycle of size q can consume: a 2-cycle may close
  // at once, a 1-cycle must widen before closing, and a longer cycle sheds
  // one side per face via split steps.
  static long min_fill(int q) { return q == 1 ? 1 : q - 2; }

  void bind(int x, int y) {
    if (x >= 0 && y >= 0) {
      gluings_.emplace_back(x, y);
    } else if (x >= 0) {
      real_[static_cast<size_t>(-y - 1)] = x;
    } else if (y >= 0) {
      real_[static_cast<size_t>(-x - 1)] = y;
    } else {
      degenerate_ = true;
    }
  }
  void unbind(int x, int y) {
    if (x >= 0 && y >= 0) {
      gluings_.pop_back();
    } else if (x >= 0) {
      real_[static_cast<size_t>(-y - 1)] = kFreeSide;
    } else if (y >= 0) {
      real_[static_cast<size_t>(-x - 1)] = kFreeSide;
    } else {
      degenerate_ = false;
    }
  }

  void dfs() {
    if (stack_.empty()) {
      emit();
      return;
    }
    std::vector<int> cyc = std::move(stack_.back());
    stack_.pop_back();
    int q = static_cast<int>(cyc.size());
    min_sum_ -= min_fill(q);

    if (q == 2) {
      bind(cyc[0], cyc[1]);
      dfs();
      unbind(cyc[0], cyc[1]);
    }
    if (faces_ < cap_) {
      int base = 3 * faces_;
      for (int k = 0; k <= q; ++k) {
        long need = k == 0 ? min_fill(q + 1) : min_fill(k) + min_fill(q - k + 1);
        if (faces_ + 1 + min_sum_ + need > cap_) continue;
        ++faces_;
        bind(cyc[0], base);
        if (k == 0) {
          std::vector<int> next = {base + 1, base + 2};
          next.insert(next.end(), cyc.begin() + 1, cyc.end());
          stack_.push_back(std::move(next));
          min_sum_ += need;
          dfs();
          min_sum_ -= need;
          stack_.pop_back();
        } else {
          int i = k - 1;
          std::vector<int> a = {base + 2};
          a.insert(a.end(), cyc.begin() + 1, cyc.begin() + 1 + i);
          std::vector<int> b = {base + 1};
          b.insert(b.end(), cyc.begin() + 1 + i, cyc.end());
          stack_.push_back(std::move(a));
          stack_.push_back(std::move(b));
          min_sum_ += need;
          dfs();
          min_sum_ -= need;
          stack_.pop_back();
          stack_.pop_back();
        }
        unbind(cyc[0], base);
        --faces_;
      }
    }

    min_sum_ += min_fill(q);
    stack_.push_back(std::move(cyc));
  }

  void emit() {
    Disk d;
    d.faces = faces_;
    d.gluings = gluings_;
    d.degenerate = degenerate_;
    if (!degenerate_) {
      d.boundary.resize(static_cast<size_t>(p_));
      // Cycle items wind opposite to the final hole; reverse while anchoring
      // slot 0.
      for (int m = 0; m < p_; ++m)
        d.boundary[static_cast<size_t>(m)] = real_[static_cast<size_t>(m == 0 ? 0 : p_ - m)];
    }
    visit_(d);
  }

  int p_;
  long cap_;
  std::function<void(const Disk&)> visit_;
  std::vector<SideId> real_;
  std::vector<std::pair<SideId, SideId>> gluings_;
  std::vector<std::vector<int>> stack_;
  int faces_ = 0;
  long min_sum_ = 0;
  bool degenerate_ = false;
};

// ---------------------------------------------------------------------------
// Depth-first side-pairing search.
//
// Maintains the invariant that all sides below the smallest free side are
// glued; that side is paired either with a later free side of an existing
// face or with side 0 of a fresh face. A rooted sphere triangulation has
// exactly one labeling compatible with this discipline (faces numbered by
// discovery, entry side becoming side 0), so leaves are pairwise
// non-isomorphic; the canonical-code set is still collected as a guard.

class GlueEnum {
 public:
  GlueEnum(int target_faces, std::function<void(const TriComplex&)> visit)
      : target_(target_faces), visit_(std::move(visit)) {}

  void run() {
    glue_.assign(3, kFreeSide);
    faces_ = 1;
    dfs();
  }

 private:
  void dfs() {
    int n3 = 3 * faces_;
    SideId s = 0;
    while (s < n3 && glue_[static_cast<size_t>(s)] != kFreeSide) ++s;
    if (s == n3) {
      if (faces_ == target_) leaf();
      return;
    }
    for (SideId t = s + 1; t < n3; ++t) {
      if (glue_[static_cast<size_t>(t)] != kFreeSide) continue;
      pair(s, t);
      if (still_planar()) dfs();
      unpair(s, t);
    }
    if (faces_ < target_) {
      SideId t = n3;
      glue_.insert(glue_.end(), 3, kFreeSide);
      ++faces_;
      pair(s, t);
      dfs();  // gluing a disk face along one edge cannot change the genus
      unpair(s, t);
      --faces_;
      glue_.resize(static_cast<size_t>(3 * faces_));
    }
  }

  void pair(SideId s, SideId t) {
    glue_[static_cast<size_t>(s)] = t;
    glue_[static_cast<size_t>(t)] = s;
    gluings_.emplace_back(s, t);
  }
  void unpair(SideId s, SideId t) {
    glue_[static_cast<size_t>(s)] = kFreeSide;
    glue_[static_cast<size_t>(t)] = kFreeSide;
    gluings_.pop_back();
  }

  // Euler characteristic of the partial surface, holes counted as faces.
  // Gluing within the boundary can only add handles, never remove them, so
  // branches failing the check are dead.
  bool still_planar() const {
    int n3 = 3 * faces_;
    std::vector<int> uf(static_cast<size_t>(n3));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[static_cast<size_t>(x)] != x) {
        uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        x = uf[static_cast<size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) { uf[static_cast<size_t>(find(a))] = find(b); };
    int glued_pairs = 0;
    int free_cnt = 0;
    for (SideId u = 0; u < n3; ++u) {
      SideId g = glue_[static_cast<size_t>(u)];
      if (g == kFreeSide) {
        ++free_cnt;
      } else if (g > u) {
        ++glued_pairs;
        unite(u, ccw(g));
        unite(ccw(u), g);
      }
    }
    int holes = 0;
    std::vector<char> seen(static_cast<size_t>(n3), 0);
    for (SideId u = 0; u < n3; ++u) {
      if (glue_[static_cast<size_t>(u)] != kFreeSide || seen[static_cast<size_t>(u)]) continue;
      ++holes;
      SideId w = u;
      do {
        seen[static_cast<size_t>(w)] = 1;
        SideId x = ccw(w);
        while (glue_[static_cast<size_t>(x)] != kFreeSide) x = ccw(glue_[static_cast<size_t>(x)]);
        w = x;
      } while (w != u);
    }
    int vertices = 0;
    for (int c = 0; c < n3; ++c)
      if (find(c) == c) ++vertices;
    int edges = glued_pairs + free_cnt;
    return vertices - edges + faces_ + holes == 2;
  }

  void leaf() {
    TriComplex t = TriComplex::build(faces_, gluings_, Root{0, 0, true});
    if (seen_.insert(map::canonical_code(t)).second) visit_(t);
  }

  int target_;
  std::function<void(const TriComplex&)> visit_;
  std::vector<SideId> glue_;
  std::vector<std::pair<SideId, SideId>> gluings_;
  int faces_ = 0;
  std::set<std::string> seen_;
};

}  // namespace

long tau_bruteforce(int n, int p) {
  if (n < 1 || p < 1) return 0;
  int target = 2 * n - p;
  if (target < 0) return 0;
  long count = 0;
  DiskEnum e(p, target, [&](const Disk& d) {
    if (d.faces == target) ++count;
  });
  e.run();
  return count;
}

void enumerate_sphere(int n, Strategy strategy,
                      const std::function<void(const TriComplex&)>& visit, int max_n) {
  if (n < 1 || n > max_n)
    throw BudgetExceeded("enumerate_sphere: n = " + std::to_string(n) + " outside [1, " +
                         std::to_string(max_n) + "]");
  int target = 2 * n;
  if (strategy == Strategy::GluingSearch) {
    GlueEnum e(target, visit);
    e.run();
    return;
  }

  // Maps whose root edge is not a loop: cut along the root edge and the map
  // falls open into a triangulation of the 2-gon with volume n + 1; reglue
  // the two boundary sides, rooting at the slot-0 copy.
  DiskEnum two(2, target, [&](const Disk& d) {
    if (d.degenerate || d.faces != target) return;
    auto gl = d.gluings;
    gl.emplace_back(d.boundary[0], d.boundary[1]);
    Root root{face_of(d.boundary[0]), index_of(d.boundary[0]), true};
    visit(TriComplex::build(d.faces, gl, root));
  });
  two.run();

  // Loop roots: the loop separates the sphere into two triangulated 1-gons,
  // left and right of the oriented root; every ordered pair with 2n faces in
  // total arises exactly once.
  std::vector<Disk> ones;
  DiskEnum one(1, target - 1, [&](const Disk& d) { ones.push_back(d); });
  one.run();
  for (const Disk& left : ones) {
    for (const Disk& right : ones) {
      if (left.faces + right.faces != target) continue;
      int off = 3 * left.faces;
      auto gl = left.gluings;
      for (auto [a, b] : right.gluings) gl.emplace_back(a + off, b + off);
      gl.emplace_back(left.boundary[0], right.boundary[0] + off);
      Root root{face_of(left.boundary[0]), index_of(left.boundary[0]), true};
      visit(TriComplex::build(left.faces + right.faces, gl, root));
    }
  }
}

GenerationRun generation_run(int n, Strategy strategy, int max_n) {
  std::vector<std::string> codes;
  enumerate_sphere(
      n, strategy, [&](const TriComplex& t) { codes.push_back(map::canonical_code(t)); }, max_n);
  std::sort(codes.begin(), codes.end());
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the sorted code list
  for (const std::string& c : codes) {
    for (char ch : c) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return GenerationRun{n, strategy, static_cast<long>(codes.size()), buf};
}

std::map<int, long> occ_distribution(const TriComplex& pattern, int n, int max_n) {
  std::map<int, long> hist;
  enumerate_sphere(
      n, Strategy::PeelingCodes,
      [&](const TriComplex& host) { ++hist[map::occ_count(pattern, host)]; }, max_n);
  return hist;
}

Rat mean_occ_ratio(const TriComplex& pattern, int n, int max_n) {
  long total = 0;
  long count = 0;
  enumerate_sphere(
      n, Strategy::PeelingCodes,
      [&](const TriComplex& host) {
        total += map::occ_count(pattern, host);
        ++count;
      },
      max_n);
  return Rat(total) / (Rat(6) * n * count);
}

Rat mean_inverse_degree(int n, int max_n) {
  Rat sum = 0;
  long count = 0;
  enumerate_sphere(
      n, Strategy::PeelingCodes,
      [&](const TriComplex& host) {
        sum += Rat(1, host.degree(host.root_origin_vertex()));
        ++count;
      },
      max_n);
  return sum / count;
}

}  // namespace peeltri::enumerator
