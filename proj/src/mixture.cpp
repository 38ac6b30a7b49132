#include "peeltri/mixture.hpp"

#include <algorithm>
#include <map>

#include "peeltri/series.hpp"

namespace peeltri::mixture {

void validate(const Mixture& m) {
  if (m.empty()) throw OutOfRange("mixture: no atoms");
  Rat total = 0;
  for (const auto& a : m) {
    if (!a.star && (a.h < 0 || a.h > Rat(1, 4)))
      throw OutOfRange("mixture: h must lie in [0, 1/4]");
    if (a.gamma < 0 || a.gamma > 1) throw OutOfRange("mixture: gamma must lie in [0, 1]");
    if (a.weight <= 0 || a.weight > 1) throw OutOfRange("mixture: weight must lie in (0, 1]");
    total += a.weight;
  }
  if (total != 1) throw OutOfRange("mixture: weights must sum to 1");
}

namespace {

bool all_ones(const std::vector<int>& perims) {
  return std::all_of(perims.begin(), perims.end(), [](int p) { return p == 1; });
}

void check_perims(int v, const std::vector<int>& perims) {
  if (v < 0) throw OutOfRange("mixture: v must be >= 0");
  for (int p : perims)
    if (p < 1) throw OutOfRange("mixture: perimeters must be >= 1");
}

/// lambda^v gamma^{k-1} prod C_{p_i} for one non-star atom; pmax bounds the
/// table of C values to precompute.
QuadNum atom_a(const MixtureAtom& at, int v, const std::vector<int>& perims,
               const coeffs::CoeffVector& cv) {
  QuadNum val = series::lambda_of_h(at.h).pow(static_cast<unsigned long>(v));
  val *= rat_pow(at.gamma, static_cast<unsigned long>(perims.size() - 1));
  for (int p : perims) val *= cv.C(p);
  return val;
}

Rat star_a(int v, const std::vector<int>& perims) {
  return (v == 0 && all_ones(perims)) ? 1 : 0;
}

int max_perim(const std::vector<int>& perims) {
  return *std::max_element(perims.begin(), perims.end());
}

}  // namespace

SurdSum a_coeff(const Mixture& m, int v, const std::vector<int>& perims) {
  validate(m);
  check_perims(v, perims);
  if (perims.empty()) return SurdSum(Rat(v == 0 ? 1 : 0));
  SurdSum out;
  for (const auto& at : m) {
    if (at.star) {
      out += SurdSum(star_a(v, perims) * at.weight);
    } else {
      coeffs::CoeffVector cv = coeffs::c_recursive(at.h, at.gamma, max_perim(perims));
      out += SurdSum(atom_a(at, v, perims, cv)) * at.weight;
    }
  }
  return out;
}

SurdSum b_from_a(const Mixture& m, int v, const std::vector<int>& perims) {
  validate(m);
  check_perims(v, perims);
  if (perims.empty()) return SurdSum(Rat(v == 0 ? 1 : 0));
  size_t k = perims.size();
  if (k > 20) throw OutOfRange("b_from_a: too many holes");
  SurdSum out;
  for (const auto& at : m) {
    if (at.star) {
      out += SurdSum(star_a(v, perims) * at.weight);
      continue;
    }
    int P = max_perim(perims);
    coeffs::CoeffVector cv = coeffs::c_recursive(at.h, at.gamma, P);
    std::vector<QuadNum> Z(static_cast<size_t>(P) + 1);
    for (int p = 1; p <= P; ++p) Z[static_cast<size_t>(p)] = series::Z_p_at(at.h, p);
    QuadNum sum = QuadNum::rational(0, at.h);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      QuadNum term = QuadNum::rational(
          rat_pow(at.gamma, static_cast<unsigned long>(__builtin_popcount(mask) - 1)), at.h);
      for (size_t i = 0; i < k; ++i) {
        int p = perims[i];
        term *= (mask >> i & 1) ? cv.C(p) : Z[static_cast<size_t>(p)];
      }
      sum += term;
    }
    sum *= series::lambda_of_h(at.h).pow(static_cast<unsigned long>(v));
    out += SurdSum(sum) * at.weight;
  }
  return out;
}

SurdSum verify_peeling_identity(const Mixture& m, int v, const std::vector<int>& perims) {
  validate(m);
  check_perims(v, perims);
  if (perims.empty()) throw OutOfRange("verify_peeling_identity: need at least one hole");
  int p1 = perims[0];
  std::vector<int> rest(perims.begin() + 1, perims.end());
  auto with_first = [&](int q, int q2 = 0) {
    std::vector<int> ps;
    ps.push_back(q);
    if (q2) ps.push_back(q2);
    ps.insert(ps.end(), rest.begin(), rest.end());
    return ps;
  };

  SurdSum residual;
  for (const auto& at : m) {
    if (at.star) {
      Rat r = star_a(v, with_first(p1)) - star_a(v, with_first(p1 + 1));
      for (int i = 0; i < p1; ++i) r -= star_a(v, with_first(i + 1, p1 - i));
      residual += SurdSum(r * at.weight);
      continue;
    }
    int pmax = p1 + 1;
    for (int p : rest) pmax = std::max(pmax, p);
    coeffs::CoeffVector cv = coeffs::c_recursive(at.h, at.gamma, pmax);
    QuadNum r = atom_a(at, v, with_first(p1), cv) - atom_a(at, v, with_first(p1 + 1), cv);
    for (int i = 0; i < p1; ++i) {
      r -= Rat(2) * series::Z_p_at(at.h, i + 1) * atom_a(at, v, with_first(p1 - i), cv);
      r -= atom_a(at, v, with_first(i + 1, p1 - i), cv);
    }
    residual += SurdSum(r) * at.weight;
  }
  return residual;
}

const SurdSum& CoeffTable::at(int v, int k) const {
  if (v < 0 || v > vmax || k < 1 || k > kmax)
    throw InsufficientTable("CoeffTable: index outside the populated rectangle");
  return a[static_cast<size_t>(v)][static_cast<size_t>(k - 1)];
}

CoeffTable ones_table(const Mixture& m, int vmax, int kmax) {
  CoeffTable t;
  t.vmax = vmax;
  t.kmax = kmax;
  for (int v = 0; v <= vmax; ++v) {
    std::vector<SurdSum> row;
    for (int k = 1; k <= kmax; ++k)
      row.push_back(a_coeff(m, v, std::vector<int>(static_cast<size_t>(k), 1)));
    t.a.push_back(std::move(row));
  }
  return t;
}

CoeffTable delta_ops(const CoeffTable& t, int m, int n) {
  if (m < 0 || n < 0) throw OutOfRange("delta_ops: orders must be >= 0");
  if (t.vmax < m || t.kmax < n + 1)
    throw InsufficientTable("delta_ops: table rectangle too small");
  CoeffTable out;
  out.vmax = t.vmax - m;
  out.kmax = t.kmax - n;
  for (int v = 0; v <= out.vmax; ++v) {
    std::vector<SurdSum> row;
    for (int k = 1; k <= out.kmax; ++k) {
      SurdSum acc;
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
          Rat sign = ((i + j) % 2 == 0) ? 1 : -1;
          acc += t.at(v + i, k + j) * (sign * Rat(binomial(static_cast<unsigned long>(m),
                                                           static_cast<unsigned long>(i)) *
                                                  binomial(static_cast<unsigned long>(n),
                                                           static_cast<unsigned long>(j))));
        }
      }
      row.push_back(std::move(acc));
    }
    out.a.push_back(std::move(row));
  }
  return out;
}

bool all_nonnegative(const CoeffTable& t) {
  for (const auto& row : t.a)
    for (const auto& x : row)
      if (x.sign() < 0) return false;
  return true;
}

namespace {

struct ReconState {
  const CoeffTable& table;
  int J;
  QuadNum lambda_c = series::lambda_of_h(Rat(1, 4));
  // tail_q = Z_q(lambda_c) - sum_{j<=J} tau_j(q) lambda_c^j, per perimeter q
  std::map<int, QuadNum> tails;
  std::map<std::pair<int, std::vector<int>>, std::pair<SurdSum, QuadNum>> memo;

  const QuadNum& tail(int q) {
    auto it = tails.find(q);
    if (it != tails.end()) return it->second;
    QuadNum t = series::Z_p_at(Rat(1, 4), q);
    QuadNum lc = QuadNum::rational(1, Rat(1, 4));
    for (int j = 1; j <= J; ++j) {
      lc *= lambda_c;
      t -= Rat(series::tau(j, q)) * lc;
    }
    return tails.emplace(q, t).first->second;
  }

  /// Value and volume-scaled error: |value - a_v^{perims}| <= lambda_c^v * err.
  std::pair<SurdSum, QuadNum> run(int v, std::vector<int> perims) {
    std::sort(perims.begin(), perims.end(), std::greater<>());
    auto key = std::make_pair(v, perims);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::pair<SurdSum, QuadNum> out{SurdSum{}, QuadNum::rational(0, Rat(1, 4))};
    if (all_ones(perims)) {
      out.first = table.at(v, static_cast<int>(perims.size()));
    } else {
      int P = perims[0];
      std::vector<int> rest(perims.begin() + 1, perims.end());
      auto with_first = [&](int q, int q2 = 0) {
        std::vector<int> ps{q};
        if (q2) ps.push_back(q2);
        ps.insert(ps.end(), rest.begin(), rest.end());
        return ps;
      };
      auto base = run(v, with_first(P - 1));
      out = base;
      for (int i = 0; i <= P - 2; ++i) {
        QuadNum lcj = QuadNum::rational(1, Rat(1, 4));
        for (int j = 1; j <= J; ++j) {
          Int tj = series::tau(j, i + 1);
          lcj *= lambda_c;
          if (tj == 0) continue;
          auto sub = run(v + j, with_first(P - 1 - i));
          out.first -= sub.first * Rat(2 * tj);
          out.second += Rat(2 * tj) * lcj * sub.second;
        }
        out.second += Rat(2) * tail(i + 1);
        auto split = run(v, with_first(i + 1, P - 1 - i));
        out.first -= split.first;
        out.second += split.second;
      }
    }
    return memo.emplace(key, out).first->second;
  }
};

}  // namespace

Reconstructed reconstruct_from_ones(const CoeffTable& ones, const std::vector<int>& perims, int v,
                                    int J, const Rat& tolerance) {
  check_perims(v, perims);
  if (perims.empty() || J < 1) throw OutOfRange("reconstruct_from_ones: bad arguments");
  ReconState st{ones, J};
  auto [value, scaled_err] = st.run(v, perims);
  QuadNum bound = st.lambda_c.pow(static_cast<unsigned long>(v)) * scaled_err;
  if (bound > QuadNum::rational(tolerance, Rat(1, 4)))
    throw TailBoundTooLarge("reconstruct_from_ones: certified tail bound exceeds tolerance");
  return {std::move(value), std::move(bound)};
}

}  // namespace peeltri::mixture
