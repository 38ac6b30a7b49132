#include "peeltri/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "peeltri/mapops.hpp"
#include "peeltri/quadnum.hpp"
#include "peeltri/series.hpp"

namespace peeltri::sampler {

namespace {

using map::SideId;
using map::side_id;

/// Z_p(lambda(h)) extended on demand.
class ZCache {
 public:
  explicit ZCache(Rat h) : h_(std::move(h)), lambda_(series::lambda_of_h(h_)) {
    z_.push_back(QuadNum::rational(0, h_));  // index 0 unused
  }
  const QuadNum& Z(int p) {
    while (static_cast<int>(z_.size()) <= p)
      z_.push_back(series::Z_p_at(h_, static_cast<int>(z_.size())));
    return z_[static_cast<size_t>(p)];
  }
  const QuadNum& lambda() const { return lambda_; }
  const Rat& h() const { return h_; }

 private:
  Rat h_;
  QuadNum lambda_;
  std::vector<QuadNum> z_;
};

/// Per-h cache of the peeling step laws: partition-function values and, for
/// each perimeter, the exact cumulative thresholds of the categorical draws.
/// Shared by every sampler on the thread so repeated sampling at the same h
/// does not re-derive any coefficients.
class LawCache {
 public:
  explicit LawCache(const Rat& h) : zc_(h) {
    C_.push_back(QuadNum::rational(0, h));
    C_.push_back(QuadNum::rational(1, h));
  }
  const Rat& h() const { return zc_.h(); }
  ZCache& zc() { return zc_; }

  /// C_p at gamma = 0, by the perimeter-p step identity.
  const QuadNum& Cp(int p) {
    while (static_cast<int>(C_.size()) <= p) {
      int q = static_cast<int>(C_.size()) - 1;
      QuadNum next = C_[static_cast<size_t>(q)];
      for (int i = 0; i < q; ++i)
        next -= Rat(2) * zc_.Z(i + 1) * C_[static_cast<size_t>(q - i)];
      C_.push_back(std::move(next));
    }
    return C_[static_cast<size_t>(p)];
  }

  /// Ball peeling step at perimeter q: outcomes are {reveal a new vertex,
  /// swallow i edges to the right / to the left for i = 0..q-1}.
  const std::vector<QuadNum>& ball_cum(int q) {
    while (static_cast<int>(ball_.size()) <= q) {
      int p = static_cast<int>(ball_.size());
      std::vector<QuadNum> w;
      if (p >= 1) {
        w.push_back(Cp(p + 1));
        for (int i = 0; i < p; ++i) {
          w.push_back(zc_.Z(i + 1) * Cp(p - i));
          w.push_back(zc_.Z(i + 1) * Cp(p - i));
        }
      }
      ball_.push_back(cum_of(w, Cp(p)));
    }
    return ball_[static_cast<size_t>(q)];
  }

  /// Boltzmann disk fill step at perimeter q: {reveal, split off i edges for
  /// i = 0..q-1, and at q = 2 the direct closure of weight lambda}.
  const std::vector<QuadNum>& fill_cum(int q) {
    while (static_cast<int>(fill_.size()) <= q) {
      int p = static_cast<int>(fill_.size());
      std::vector<QuadNum> w;
      if (p >= 1) {
        w.push_back(zc_.Z(p + 1));
        for (int i = 0; i < p; ++i) w.push_back(zc_.Z(i + 1) * zc_.Z(p - i));
        if (p == 2) w.push_back(zc_.lambda());
      }
      fill_.push_back(cum_of(w, zc_.Z(p)));
    }
    return fill_[static_cast<size_t>(q)];
  }

  /// Opening draw on the root edge: {distinct endpoints, loop with its finite
  /// side left, loop with its finite side right}; C_1 = C_2 + 2 Z_1 C_1.
  const std::vector<QuadNum>& root_cum() {
    if (root_.empty()) root_ = cum_of({Cp(2), zc_.Z(1), zc_.Z(1)}, Cp(1));
    return root_;
  }

 private:
  /// The weights must sum to total exactly; this is asserted once per cached
  /// law, which doubles as a check that every step law reached is normalized.
  /// `total` is taken by value: the caller's Cp/Z references can be
  /// invalidated when evaluating the other argument extends the cache.
  static std::vector<QuadNum> cum_of(const std::vector<QuadNum>& w, QuadNum total) {
    if (w.empty()) return {};
    QuadNum sum = total * Rat(0);
    for (const auto& x : w) sum += x;
    if (sum != total) throw std::logic_error("sampler: step weights do not sum to the total");
    std::vector<QuadNum> cum;
    QuadNum acc = total * Rat(0);
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      acc += w[k];
      cum.push_back(acc / total);
    }
    return cum;
  }

  ZCache zc_;
  std::vector<QuadNum> C_;
  std::vector<std::vector<QuadNum>> ball_, fill_;
  std::vector<QuadNum> root_;
};

LawCache& law_cache(const Rat& h) {
  thread_local std::map<Rat, LawCache> cache;
  return cache.try_emplace(h, h).first->second;
}

/// Exact categorical draw against precomputed cumulative thresholds: index k
/// with probability cum[k] - cum[k-1], the last outcome taking the remainder.
int pick_from(rng::Engine& eng, const std::vector<QuadNum>& cum) {
  rng::LazyUniform u(eng);
  for (size_t k = 0; k < cum.size(); ++k)
    if (u.less_than(cum[k])) return static_cast<int>(k);
  return static_cast<int>(cum.size());
}

struct CapHit {};

/// A sampled Boltzmann disk in local side ids: `boundary` lists the free sides
/// of the hole in successor order, boundary[0] being the root side. For the
/// perimeter-2 disk of volume 1 `degenerate` is set instead: the two boundary
/// edges are glued to each other and there is nothing else.
struct Fill {
  bool degenerate = false;
  int faces = 0;
  std::vector<std::pair<SideId, SideId>> gluings;
  std::vector<SideId> boundary;
};

long fill_volume(const Fill& f, int p) { return (f.faces + p) / 2; }

Fill sample_fill_once(int p, LawCache& lc, rng::Engine& eng, long face_cap) {
  Fill out;
  // Boundary slots of the disk are "virtual" items -(m+1); they are realized
  // as concrete sides when a face is revealed on them (or, in a perimeter-2
  // close, identified with the opposite item). Active cycles are successor
  // walks of the *unbuilt* region, which winds opposite to the final hole.
  std::vector<SideId> boundary_real(static_cast<size_t>(p), -1);
  auto add_face = [&] {
    if (out.faces >= face_cap) throw CapHit{};
    return out.faces++;
  };
  auto bind = [&](int x, int y) {
    if (x >= 0 && y >= 0) {
      out.gluings.emplace_back(x, y);
    } else if (x >= 0) {
      boundary_real[static_cast<size_t>(-y - 1)] = x;
    } else if (y >= 0) {
      boundary_real[static_cast<size_t>(-x - 1)] = y;
    } else {
      out.degenerate = true;  // only reachable as the p = 2 total closure
    }
  };

  std::vector<std::vector<int>> stack;
  std::vector<int> init(static_cast<size_t>(p));
  for (int m = 0; m < p; ++m) init[static_cast<size_t>(m)] = -(m + 1);
  stack.push_back(std::move(init));

  while (!stack.empty()) {
    std::vector<int> cyc = std::move(stack.back());
    stack.pop_back();
    int q = static_cast<int>(cyc.size());
    int k = pick_from(eng, lc.fill_cum(q));
    if (q == 2 && k == q + 1) {
      bind(cyc[0], cyc[1]);
      continue;
    }
    int base = 3 * add_face();
    bind(cyc[0], base);
    if (k == 0) {
      std::vector<int> next = {base + 1, base + 2};
      next.insert(next.end(), cyc.begin() + 1, cyc.end());
      stack.push_back(std::move(next));
    } else {
      int i = k - 1;  // the revealed corner splits off i of the following edges
      std::vector<int> a = {base + 2};
      a.insert(a.end(), cyc.begin() + 1, cyc.begin() + 1 + i);
      std::vector<int> b = {base + 1};
      b.insert(b.end(), cyc.begin() + 1 + i, cyc.end());
      stack.push_back(std::move(a));
      stack.push_back(std::move(b));
    }
  }

  if (!out.degenerate) {
    out.boundary.resize(static_cast<size_t>(p));
    for (int m = 0; m < p; ++m) {
      SideId s = boundary_real[static_cast<size_t>(m == 0 ? 0 : p - m)];
      if (s < 0) throw std::logic_error("sampler: unrealized boundary slot");
      out.boundary[static_cast<size_t>(m)] = s;
    }
  }
  return out;
}

Fill sample_fill(int p, LawCache& lc, rng::Engine& eng, long face_cap, int retries,
                 SampleStats* stats) {
  for (int attempt = 0;; ++attempt) {
    try {
      return sample_fill_once(p, lc, eng, face_cap);
    } catch (const CapHit&) {
      if (stats) ++stats->fill_retries;
      if (attempt + 1 >= retries) {
        if (stats) ++stats->truncated_runs;
        throw CapExhausted("sampler: Boltzmann disk exceeded the face cap on every retry");
      }
    }
  }
}

/// Peeling exploration of the (h, gamma = 0) law: a growing edge-glued
/// complex with one active hole, kept as a successor-ordered cycle.
struct Explorer {
  LawCache& lc;
  rng::Engine eng;
  long face_cap;
  int retries;
  SampleStats* stats;

  std::vector<SideId> glue;  // per side, kFreeSide if unglued
  std::vector<std::pair<SideId, SideId>> gluings;
  int faces = 0;
  std::vector<SideId> frontier;
  std::vector<long> serial;  // age of each frontier entry, for the FIFO policy
  long next_serial = 0;
  long volume = 0;
  long steps = 0;
  bool root_edge_done = false;
  map::Root root{0, 0, true};
  int center = -1;  // face on the left of the root edge; dual-ball center

  Explorer(const Rat& h, rng::Seed seed, long cap, int retr, SampleStats* st)
      : lc(law_cache(h)), eng(seed), face_cap(cap), retries(retr), stats(st) {}

  int add_face() {
    ++faces;
    glue.insert(glue.end(), 3, map::kFreeSide);
    return faces - 1;
  }

  void bind(SideId a, SideId b) {
    glue[static_cast<size_t>(a)] = b;
    glue[static_cast<size_t>(b)] = a;
    gluings.emplace_back(a, b);
  }

  /// Glues a sampled disk into the swallowed hole whose sides, in successor
  /// order, are d[0..i]. Fill boundary side m lands opposite d[(i+1-m) mod
  /// (i+1)] because glued cycles wind opposite ways.
  void merge_fill(const std::vector<SideId>& d) {
    int p = static_cast<int>(d.size());
    Fill f = sample_fill(p, lc, eng, face_cap, retries, stats);
    if (f.degenerate) {
      bind(d[0], d[1]);
    } else {
      int off = 3 * faces;
      for (int m = 0; m < f.faces; ++m) add_face();
      for (auto [a, b] : f.gluings) bind(a + off, b + off);
      for (int m = 0; m < p; ++m)
        bind(d[static_cast<size_t>(m)], f.boundary[static_cast<size_t>((p - m) % p)] + off);
    }
    volume += fill_volume(f, p);
  }

  std::vector<int> face_dist() const {
    std::vector<int> dist(static_cast<size_t>(faces), -1);
    std::deque<int> q = {center};
    dist[static_cast<size_t>(center)] = 0;
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      for (int i = 0; i < 3; ++i) {
        SideId g = glue[static_cast<size_t>(side_id(f, i))];
        if (g != map::kFreeSide && dist[static_cast<size_t>(map::face_of(g))] < 0) {
          dist[static_cast<size_t>(map::face_of(g))] = dist[static_cast<size_t>(f)] + 1;
          q.push_back(map::face_of(g));
        }
      }
    }
    return dist;
  }

  int pick_position(PeelPolicy policy) const {
    size_t best = 0;
    if (frontier.size() == 1) return 0;
    if (policy == PeelPolicy::Fifo) {
      for (size_t m = 1; m < frontier.size(); ++m)
        if (serial[m] < serial[best]) best = m;
    } else {
      std::vector<int> dist = face_dist();
      auto key = [&](size_t m) {
        return std::make_pair(dist[static_cast<size_t>(map::face_of(frontier[m]))], serial[m]);
      };
      for (size_t m = 1; m < frontier.size(); ++m)
        if (key(m) < key(best)) best = m;
    }
    return static_cast<int>(best);
  }

  void set_frontier(std::vector<SideId> sides, std::vector<long> ages) {
    frontier = std::move(sides);
    serial = std::move(ages);
  }

  void step(PeelPolicy policy) { step_at(root_edge_done ? pick_position(policy) : 0); }

  /// One peeling step at the given frontier position. The position may be any
  /// function of the explored region (never of the outcome drawn below): the
  /// exploration is Markovian, so the law of the final ball does not depend on
  /// where each step peels.
  void step_at(int idx) {
    ++steps;
    if (stats) ++stats->peel_steps;
    if (!root_edge_done) {
      root_step();
      return;
    }
    int q = static_cast<int>(frontier.size());
    // outcome 0 reveals a new vertex; outcome 2i+1 / 2i+2 swallows i edges to
    // the right / to the left
    int k = pick_from(eng, lc.ball_cum(q));

    SideId e = frontier[static_cast<size_t>(idx)];
    int base = 3 * add_face();
    bind(e, base);
    // A loop root with its finite side on the right leaves the root face (on
    // the infinite side of the loop) unexplored until this reveals it.
    if (center < 0) center = faces - 1;
    auto at = [&](int off) {
      return frontier[static_cast<size_t>(((idx + off) % q + q) % q)];
    };
    auto age = [&](int off) {
      return serial[static_cast<size_t>(((idx + off) % q + q) % q)];
    };
    if (k == 0) {
      // new vertex: the hole now runs along the two fresh sides
      std::vector<SideId> nf;
      std::vector<long> na;
      nf.push_back(base + 1);
      na.push_back(next_serial++);
      nf.push_back(base + 2);
      na.push_back(next_serial++);
      for (int m = 1; m < q; ++m) {
        nf.push_back(at(m));
        na.push_back(age(m));
      }
      set_frontier(std::move(nf), std::move(na));
      return;
    }
    int i = (k - 1) / 2;
    bool right = (k - 1) % 2 == 0;
    std::vector<SideId> d;
    std::vector<SideId> nf;
    std::vector<long> na;
    if (right) {
      // swallowed cycle: fresh side 2 then the i following frontier edges
      d.push_back(base + 2);
      for (int m = 1; m <= i; ++m) d.push_back(at(m));
      for (int m = i + 1; m < q; ++m) {
        nf.push_back(at(m));
        na.push_back(age(m));
      }
      nf.push_back(base + 1);
      na.push_back(next_serial++);
    } else {
      // swallowed cycle: fresh side 1 then the i preceding frontier edges
      d.push_back(base + 1);
      for (int m = i; m >= 1; --m) d.push_back(at(-m));
      for (int m = 1; m < q - i; ++m) {
        nf.push_back(at(m));
        na.push_back(age(m));
      }
      nf.push_back(base + 2);
      na.push_back(next_serial++);
    }
    merge_fill(d);
    set_frontier(std::move(nf), std::move(na));
  }

  /// The opening draw reveals the root edge itself. Either its endpoints are
  /// distinct (weight C_2) and the doubled edge is peeled as a perimeter-2
  /// hole, or the root edge is a loop enclosing a finite Boltzmann 1-gon on
  /// its left or its right (weight Z_1 each); the normalization
  /// C_1 = C_2 + 2 Z_1 C_1 is the perimeter-1 step identity.
  void root_step() {
    root_edge_done = true;
    int k = pick_from(eng, lc.root_cum());
    if (k == 0) {
      first_step();
      return;
    }
    Fill f = sample_fill(1, lc, eng, face_cap, retries, stats);
    for (int m = 0; m < f.faces; ++m) add_face();
    for (auto [a, b] : f.gluings) bind(a, b);
    volume += fill_volume(f, 1);
    SideId b0 = f.boundary[0];
    // k == 1: finite side on the left, so the fill face owning the loop side
    // is the root face; k == 2: finite side on the right, root face revealed
    // by the next peel.
    root = {map::face_of(b0), map::index_of(b0), k == 1};
    if (k == 1) center = map::face_of(b0);
    set_frontier({b0}, {next_serial++});
  }

  /// Peeling of the doubled root edge once its endpoints are known distinct:
  /// the active hole is the doubled edge (perimeter 2), and the revealed
  /// face's base side 0 becomes the root edge, its outer copy materializing
  /// as that same free side.
  void first_step() {
    int k = pick_from(eng, lc.ball_cum(2));
    add_face();
    center = 0;
    auto fresh = [&](std::vector<SideId> sides) {
      std::vector<long> ages;
      for (size_t m = 0; m < sides.size(); ++m) ages.push_back(next_serial++);
      set_frontier(std::move(sides), std::move(ages));
    };
    switch (k) {
      case 0:
        fresh({0, 1, 2});
        break;
      case 1:  // swallow 0 right: side 2 closes into a loop
        merge_fill({2});
        fresh({1, 0});
        break;
      case 2:  // swallow 0 left: side 1 closes into a loop
        merge_fill({1});
        fresh({0, 2});
        break;
      case 3:  // swallow 1 right: side 2 and the outer root copy enclose a 2-gon
        merge_fill({2, 0});
        fresh({1});
        break;
      default:  // swallow 1 left
        merge_fill({1, 0});
        fresh({2});
        break;
    }
  }

  map::TriComplex current() const {
    // At h = 0 every future step is a new-vertex step, so the frontier cycle
    // can never be spliced and the boundary reading is already final.
    return map::TriComplex::build(faces, gluings, root, {frontier})
        .as_truncated(lc.h() == 0);
  }
};

void check_h(const Rat& h) {
  if (h < 0 || h > Rat(1, 4)) throw OutOfRange("sampler: h must lie in [0, 1/4]");
}

}  // namespace

map::TriComplex sample_boltzmann_polygon(int p, const Rat& h, rng::Seed seed, long face_cap,
                                         int retries, SampleStats* stats) {
  check_h(h);
  if (h == 0) throw OutOfRange("sample_boltzmann_polygon: h = 0 admits no disks");
  if (p < 1) throw OutOfRange("sample_boltzmann_polygon: p must be >= 1");
  LawCache& lc = law_cache(h);
  rng::Engine eng(seed);
  Fill f = sample_fill(p, lc, eng, face_cap, retries, stats);
  if (f.degenerate) return map::TriComplex::single_edge();
  map::Root root{map::face_of(f.boundary[0]), map::index_of(f.boundary[0]), true};
  return map::TriComplex::build(f.faces, f.gluings, root, {f.boundary});
}

map::TriComplex sample_dual_ball(const Rat& h, int r, rng::Seed seed, PeelPolicy policy,
                                 long face_cap, int retries, SampleStats* stats) {
  check_h(h);
  if (r < 0) throw OutOfRange("sample_dual_ball: r must be >= 0");
  Explorer ex(h, seed, face_cap, retries, stats);
  for (;;) {
    if (ex.faces > 0 && ex.center >= 0) {
      std::vector<int> dist = ex.face_dist();
      bool deep_enough = true;
      for (SideId s : ex.frontier)
        if (dist[static_cast<size_t>(map::face_of(s))] < r) {
          deep_enough = false;
          break;
        }
      if (deep_enough) {
        map::TriComplex host = ex.current();
        map::Extraction ext = map::dual_ball(host, r);
        if (ext.determined) return ext.complex;
        // The extraction is still ambiguous because some vertex of a ball face
        // lies on the frontier, where a later swallow could splice it. Peel at
        // an edge of such a vertex: each step either grows its fan or encloses
        // it, so every such fan closes in almost surely finitely many steps.
        // Peeling anywhere else can defer this indefinitely.
        std::vector<char> unresolved(static_cast<size_t>(host.vertex_count()), 0);
        for (int f = 0; f < ex.faces; ++f) {
          if (dist[static_cast<size_t>(f)] < 0 || dist[static_cast<size_t>(f)] > r) continue;
          for (int i = 0; i < 3; ++i) {
            int v = host.vertex_at(side_id(f, i));
            if (!host.vertex_interior(v)) unresolved[static_cast<size_t>(v)] = 1;
          }
        }
        int best = -1;
        for (size_t m = 0; m < ex.frontier.size(); ++m) {
          SideId s = ex.frontier[m];
          if (!unresolved[static_cast<size_t>(host.vertex_at(s))] &&
              !unresolved[static_cast<size_t>(host.vertex_at(map::ccw(s)))])
            continue;
          if (best < 0 || ex.serial[m] < ex.serial[static_cast<size_t>(best)])
            best = static_cast<int>(m);
        }
        if (best >= 0) {
          ex.step_at(best);
          continue;
        }
      }
    }
    ex.step(policy);
  }
}

ExplorationTrace explore_steps(const Rat& h, int steps, rng::Seed seed, PeelPolicy policy) {
  check_h(h);
  if (steps < 1) throw OutOfRange("explore_steps: steps must be >= 1");
  Explorer ex(h, seed, 1000000, 10, nullptr);
  for (int i = 0; i < steps; ++i) ex.step(policy);
  return {ex.current(), static_cast<long>(ex.frontier.size()), ex.volume};
}

namespace {

map::TriComplex tree_ball(int r, bool one_vertex) {
  int F = 3 * (1 << r) - 2;
  std::vector<std::pair<SideId, SideId>> gluings;
  std::vector<std::pair<int, int>> queue = {{0, 0}};  // (face, depth)
  int next = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [f, depth] = queue[qi];
    if (depth == r) continue;
    for (int i = (f == 0 ? 0 : 1); i < 3; ++i) {
      gluings.emplace_back(side_id(f, i), side_id(next, 0));
      queue.emplace_back(next, depth + 1);
      ++next;
    }
  }
  if (next != F) throw std::logic_error("tree_ball: face count mismatch");
  if (!one_vertex)
    return map::TriComplex::build(F, gluings, {0, 0, true}).as_truncated(true);
  std::vector<char> has_glue(static_cast<size_t>(3 * F), 0);
  for (auto [a, b] : gluings) {
    has_glue[static_cast<size_t>(a)] = 1;
    has_glue[static_cast<size_t>(b)] = 1;
  }
  std::vector<std::vector<SideId>> holes;
  for (SideId s = 0; s < 3 * F; ++s)
    if (!has_glue[static_cast<size_t>(s)]) holes.push_back({s});
  return map::TriComplex::build(F, gluings, {0, 0, true}, holes).as_truncated(true);
}

}  // namespace

map::TriComplex build_T0_dual_ball(int r) {
  if (r < 0) throw OutOfRange("build_T0_dual_ball: r must be >= 0");
  return tree_ball(r, false);
}

map::TriComplex build_Tstar_dual_ball(int r) {
  if (r < 0) throw OutOfRange("build_Tstar_dual_ball: r must be >= 0");
  return tree_ball(r, true);
}

InclusionEstimate empirical_inclusion_prob(const map::TriComplex& t, const Rat& h, long samples,
                                           rng::Seed seed) {
  check_h(h);
  if (samples < 1) throw OutOfRange("empirical_inclusion_prob: need at least one sample");
  int radius = 0;
  if (!t.is_sentinel()) {
    // depth of the pattern in its own dual graph, from its root face
    std::vector<int> dist(static_cast<size_t>(t.face_count()), -1);
    std::deque<int> q = {t.root().face};
    dist[static_cast<size_t>(t.root().face)] = 0;
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      for (int i = 0; i < 3; ++i) {
        SideId g = t.glued_to(side_id(f, i));
        if (g != map::kFreeSide && dist[static_cast<size_t>(map::face_of(g))] < 0) {
          dist[static_cast<size_t>(map::face_of(g))] = dist[static_cast<size_t>(f)] + 1;
          q.push_back(map::face_of(g));
        }
      }
    }
    radius = *std::max_element(dist.begin(), dist.end());
    if (radius < 0) throw map::BuildError("empirical_inclusion_prob: pattern not connected");
  }

  std::uint64_t base = rng::splitmix64(seed.seed ^ rng::splitmix64(seed.stream));
  InclusionEstimate est;
  est.samples = samples;
  for (long n = 0; n < samples; ++n) {
    map::TriComplex ball =
        sample_dual_ball(h, radius, {base, static_cast<std::uint64_t>(n)});
    map::Inclusion inc = map::includes(t, ball);
    if (inc == map::Inclusion::Undetermined)
      throw UndecidableRadius("empirical_inclusion_prob: ball radius does not decide the pattern");
    if (inc == map::Inclusion::Yes) ++est.yes;
  }
  est.p_hat = static_cast<double>(est.yes) / static_cast<double>(samples);
  est.stderr_ = std::sqrt(est.p_hat * (1 - est.p_hat) / static_cast<double>(samples));
  return est;
}

}  // namespace peeltri::sampler
