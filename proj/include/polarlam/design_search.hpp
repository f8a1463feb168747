// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact combinatorial search over stacking sequences of identical plies.
// Zero-predicates (uncoupling, quasi-homogeneity, thermal stability) are
// integer statements: the coefficient numerators are integers and, for
// orientations on the 45-degree grid, the phase factors e^{2 i delta} and
// e^{4 i delta} are Gaussian units.  Off-grid orientation sets fall back to
// floating sums tested at 1e-12 of the accumulated coefficient mass.
// Enumeration is depth-first in lexicographic orientation-index order with
// admissible interval pruning on the partial sums.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "polarlam/classification.hpp"
#include "polarlam/laminate.hpp"

namespace polarlam {

enum class Predicate {
  BZero,           // B = O (both anisotropic phases of B vanish)
  VZero,           // V = O (2-theta phase of B vanishes)
  CZero,           // C = A - D = O
  BNonzero,        // negation of BZero
  R1BZero,         // B square symmetric (same sum as VZero)
  WarpFree,        // R1A = 0 and R1B = 0  ->  v1 = O
  ExtensionFree,   // R1D = 0 and R1B = 0  ->  v2 = O
  BalancedCrossPly,  // only 0/90 plies, in equal numbers
};

inline const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::BZero: return "B_zero";
    case Predicate::VZero: return "V_zero";
    case Predicate::CZero: return "C_zero";
    case Predicate::BNonzero: return "B_nonzero";
    case Predicate::R1BZero: return "R1B_zero";
    case Predicate::WarpFree: return "warp_free";
    case Predicate::ExtensionFree: return "extension_free";
    case Predicate::BalancedCrossPly: return "balanced_crossply";
  }
  return "?";
}

enum class DedupPolicy {
  None,             // emit every qualifying sequence
  Reversal,         // identify a sequence with its reversal (B -> -B)
  OrientationSwap,  // identify with the quarter-turn relabeling (0<->90, +-45)
  Full,             // both identifications
};

struct SearchSpec {
  int n = 0;
  std::vector<double> orientation_deg;
  std::vector<Predicate> predicates;
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  DedupPolicy dedup = DedupPolicy::None;
};

/// Integer complex sums scaled by n, n^2 or n^3 (exact path only).
struct ExactSums {
  long long a2_re = 0, a2_im = 0;  // n   * sum a_k e^{2i delta}
  long long b2_re = 0, b2_im = 0;  // n^2 * sum b_k e^{2i delta}
  long long b4_re = 0, b4_im = 0;  // n^2 * sum b_k e^{4i delta}
  long long c2_re = 0, c2_im = 0;  // n^3 * sum c_k e^{2i delta}
  long long c4_re = 0, c4_im = 0;  // n^3 * sum c_k e^{4i delta}
  long long d2_re = 0, d2_im = 0;  // n^3 * sum d_k e^{2i delta}
};

struct SearchResult {
  std::vector<int> orientation_index;  // per ply, into orientation_deg
  std::vector<double> angles_deg;
  bool exact = true;  // integer path; false for off-grid orientation sets
  ExactSums sums;
};

namespace detail {

/// Gaussian unit i^q as an integer pair.
struct GaussUnit {
  int re = 1, im = 0;
};

inline GaussUnit gauss_pow_i(int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

inline bool on_45_grid(const std::vector<double>& deg) {
  for (double a : deg) {
    const double q = a / 45.0;
    if (std::fabs(q - std::round(q)) > 1e-9) return false;
  }
  return true;
}

struct GroupState {
  // One zero-test group: coefficient numerators and a running complex sum.
  std::vector<long long> coef;      // per ply position
  std::vector<long long> tail_mass; // sum |coef| of positions >= k
  long long re = 0, im = 0;
  double fre = 0.0, fim = 0.0;      // floating path
};

}  // namespace detail

/// Depth-first enumeration; the visitor returns false to stop early.
/// Returns the number of emitted sequences.
inline std::size_t enumerate(const SearchSpec& spec,
                             const std::function<bool(const SearchResult&)>& visit) {
  if (spec.n < 2) throw ValidationError("search: need n >= 2");
  if (spec.orientation_deg.empty()) throw ValidationError("search: empty orientation set");
  const int n = spec.n;
  const int m = static_cast<int>(spec.orientation_deg.size());
  const bool exact = detail::on_45_grid(spec.orientation_deg);

  const auto has = [&](Predicate p) {
    return std::find(spec.predicates.begin(), spec.predicates.end(), p) !=
           spec.predicates.end();
  };
  const bool want_balanced = has(Predicate::BalancedCrossPly);
  if (want_balanced) {
    for (double a : spec.orientation_deg)
      if (std::fabs(a) > 1e-9 && std::fabs(a - 90.0) > 1e-9)
        throw ValidationError("balanced_crossply requires the {0, 90} orientation set");
  }

  // Phase tables (exact path): quarter-turn exponents per orientation.
  std::vector<int> q2(m), q4(m);
  std::vector<double> p2re(m), p2im(m), p4re(m), p4im(m);
  for (int j = 0; j < m; ++j) {
    const double a = spec.orientation_deg[j];
    if (exact) {
      const int steps = static_cast<int>(std::llround(a / 45.0));
      q2[j] = steps;       // e^{2 i delta} = i^steps
      q4[j] = 2 * steps;   // e^{4 i delta} = i^{2 steps}
    }
    const double rad = a * kPi / 180.0;
    p2re[j] = std::cos(2.0 * rad);
    p2im[j] = std::sin(2.0 * rad);
    p4re[j] = std::cos(4.0 * rad);
    p4im[j] = std::sin(4.0 * rad);
  }

  // Zero-test groups demanded by the predicate set.  warp_free and
  // extension_free are disjunctions (B = O also silences v1 and v2), so only
  // their common factor (the 2-theta sum of B) prunes; the remainder is a
  // leaf test.
  enum GroupId { A2, B2, B4, C2, C4, D2, kGroups };
  bool zero_group[kGroups] = {};
  if (has(Predicate::BZero)) zero_group[B2] = zero_group[B4] = true;
  if (has(Predicate::VZero) || has(Predicate::R1BZero)) zero_group[B2] = true;
  if (has(Predicate::CZero)) zero_group[C2] = zero_group[C4] = true;
  if (has(Predicate::WarpFree)) zero_group[B2] = true;
  if (has(Predicate::ExtensionFree)) zero_group[B2] = true;
  const bool track_all = true;  // sums are cheap and reported in results

  detail::GroupState gs[kGroups];
  for (int g = 0; g < kGroups; ++g) {
    gs[g].coef.resize(n + 1);
    gs[g].tail_mass.assign(n + 2, 0);
  }
  for (int k = 1; k <= n; ++k) {
    gs[A2].coef[k] = 1;
    gs[B2].coef[k] = b_coef_num(k, n);
    gs[B4].coef[k] = gs[B2].coef[k];
    gs[C2].coef[k] = c_coef_num(k, n);
    gs[C4].coef[k] = gs[C2].coef[k];
    gs[D2].coef[k] = d_coef_num(k, n);
  }
  for (int g = 0; g < kGroups; ++g)
    for (int k = n; k >= 1; --k)
      gs[g].tail_mass[k] = gs[g].tail_mass[k + 1] + std::llabs(gs[g].coef[k]);

  std::vector<int> choice(n + 1, 0);
  std::size_t emitted = 0;
  bool stop = false;

  // Canonicalization for dedup: lexicographic minimum over the orbit.
  std::vector<int> swap_map(m, -1);
  if (spec.dedup == DedupPolicy::OrientationSwap || spec.dedup == DedupPolicy::Full) {
    for (int j = 0; j < m; ++j) {
      const double target = spec.orientation_deg[j] + 90.0;
      for (int l = 0; l < m; ++l) {
        const double d = std::remainder(spec.orientation_deg[l] - target, 180.0);
        if (std::fabs(d) < 1e-9) swap_map[j] = l;
      }
      if (swap_map[j] < 0)
        throw ValidationError(
            "orientation_swap dedup needs a set closed under quarter turns");
    }
  }
  const auto is_canonical = [&]() {
    if (spec.dedup == DedupPolicy::None) return true;
    std::vector<int> cur(choice.begin() + 1, choice.end());
    const auto le = [&](const std::vector<int>& x) {  // cur <= x
      return !std::lexicographical_compare(x.begin(), x.end(), cur.begin(), cur.end());
    };
    std::vector<int> variant;
    if (spec.dedup == DedupPolicy::Reversal || spec.dedup == DedupPolicy::Full) {
      variant.assign(cur.rbegin(), cur.rend());
      if (!le(variant)) return false;
    }
    if (spec.dedup == DedupPolicy::OrientationSwap || spec.dedup == DedupPolicy::Full) {
      variant = cur;
      for (int& v : variant) v = swap_map[v];
      if (!le(variant)) return false;
      if (spec.dedup == DedupPolicy::Full) {
        std::reverse(variant.begin(), variant.end());
        if (!le(variant)) return false;
      }
    }
    return true;
  };

  const auto group_zero = [&](int g) {
    if (exact) return gs[g].re == 0 && gs[g].im == 0;
    const double mass = static_cast<double>(gs[g].tail_mass[1]);
    return std::hypot(gs[g].fre, gs[g].fim) <= 1e-12 * mass;
  };

  const auto leaf = [&]() {
    // Exact-path zero predicates already hold by pruning + final check below.
    if (want_balanced) {
      int zeros = 0;
      for (int k = 1; k <= n; ++k)
        if (std::fabs(spec.orientation_deg[choice[k]]) < 1e-9) ++zeros;
      if (2 * zeros != n) return;
    }
    const bool b_zero = group_zero(B2) && group_zero(B4);
    if (has(Predicate::BNonzero) && b_zero) return;
    if (has(Predicate::WarpFree) && !(b_zero || group_zero(A2))) return;
    if (has(Predicate::ExtensionFree) && !(b_zero || group_zero(D2))) return;
    if (!is_canonical()) return;
    SearchResult res;
    res.exact = exact;
    res.orientation_index.assign(choice.begin() + 1, choice.end());
    res.angles_deg.reserve(n);
    for (int k = 1; k <= n; ++k) res.angles_deg.push_back(spec.orientation_deg[choice[k]]);
    if (exact) {
      res.sums = {gs[A2].re, gs[A2].im, gs[B2].re, gs[B2].im, gs[B4].re, gs[B4].im,
                  gs[C2].re, gs[C2].im, gs[C4].re, gs[C4].im, gs[D2].re, gs[D2].im};
    }
    ++emitted;
    if (!visit(res) || emitted >= spec.max_results) stop = true;
  };

  // Admissible pruning: a zero-target group fails when the partial sum can no
  // longer be cancelled by the remaining coefficient mass (|phase| <= 1
  // componentwise).
  const auto prune = [&](int next_k) {
    for (int g = 0; g < kGroups; ++g) {
      if (!zero_group[g]) continue;
      const long long rem = gs[g].tail_mass[next_k];
      if (exact) {
        if (std::llabs(gs[g].re) > rem || std::llabs(gs[g].im) > rem) return true;
      } else {
        const double slack = static_cast<double>(rem) +
                             1e-12 * static_cast<double>(gs[g].tail_mass[1]);
        if (std::fabs(gs[g].fre) > slack || std::fabs(gs[g].fim) > slack) return true;
      }
    }
    return false;
  };

  const std::function<void(int)> dfs = [&](int k) {
    if (stop) return;
    if (k > n) {
      // Final exact zero check (pruning guarantees it, but keep it explicit).
      for (int g = 0; g < kGroups; ++g) {
        if (!zero_group[g]) continue;
        if (exact) {
          if (gs[g].re != 0 || gs[g].im != 0) return;
        } else {
          const double mass = static_cast<double>(gs[g].tail_mass[1]);
          if (std::hypot(gs[g].fre, gs[g].fim) > 1e-12 * mass) return;
        }
      }
      leaf();
      return;
    }
    for (int j = 0; j < m && !stop; ++j) {
      choice[k] = j;
      // Apply.
      long long und_re[kGroups], und_im[kGroups];
      double und_fre[kGroups], und_fim[kGroups];
      for (int g = 0; g < kGroups; ++g) {
        und_re[g] = gs[g].re;
        und_im[g] = gs[g].im;
        und_fre[g] = gs[g].fre;
        und_fim[g] = gs[g].fim;
        const bool four = (g == B4 || g == C4);
        const long long cg = gs[g].coef[k];
        if (exact) {
          const detail::GaussUnit ph = detail::gauss_pow_i(four ? q4[j] : q2[j]);
          gs[g].re += cg * ph.re;
          gs[g].im += cg * ph.im;
        }
        if (track_all) {
          gs[g].fre += static_cast<double>(cg) * (four ? p4re[j] : p2re[j]);
          gs[g].fim += static_cast<double>(cg) * (four ? p4im[j] : p2im[j]);
        }
      }
      if (!prune(k + 1)) dfs(k + 1);
      for (int g = 0; g < kGroups; ++g) {
        gs[g].re = und_re[g];
        gs[g].im = und_im[g];
        gs[g].fre = und_fre[g];
        gs[g].fim = und_fim[g];
      }
    }
  };
  dfs(1);
  return emitted;
}

inline std::vector<SearchResult> enumerate(const SearchSpec& spec) {
  std::vector<SearchResult> out;
  enumerate(spec, [&](const SearchResult& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

/// Numeric re-verification of a candidate through the full tensor pipeline.
struct PredicateCheck {
  Predicate predicate{};
  double residual = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<PredicateCheck> checks;
  bool all_pass = true;
};

inline VerifyReport verify_sequence(const std::vector<double>& angles_deg,
                                    const PlyMaterial& material,
                                    const std::vector<Predicate>& predicates,
                                    double ply_thickness = 0.125, double tol = 1e-9) {
  MaterialCatalog catalog;
  catalog.add(material);
  std::vector<double> rad(angles_deg.size());
  std::transform(angles_deg.begin(), angles_deg.end(), rad.begin(),
                 [](double d) { return d * kPi / 180.0; });
  const Laminate lam = make_laminate("candidate", material.name, rad, ply_thickness);
  const StiffnessSet s = stiffness_tensors(lam, catalog);
  const ComplianceSet c = invert(s);
  const HomogeneityPair hp = homogeneity_tensors(s);
  const double scale4 = s.A_polar.T0 + 2.0 * s.A_polar.T1;
  const double scale2 = std::max(max_abs(s.U), max_abs(s.W));

  VerifyReport rep;
  for (Predicate p : predicates) {
    PredicateCheck ck;
    ck.predicate = p;
    switch (p) {
      case Predicate::BZero:
        ck.residual = max_abs(s.B) / scale4;
        ck.pass = ck.residual < tol;
        break;
      case Predicate::BNonzero:
        ck.residual = max_abs(s.B) / scale4;
        ck.pass = ck.residual >= tol;
        break;
      case Predicate::VZero:
        ck.residual = scale2 > 0.0 ? max_abs(s.V) / scale2 : 0.0;
        ck.pass = ck.residual < tol;
        break;
      case Predicate::R1BZero:
        ck.residual = s.B_polar.R1 / scale4;
        ck.pass = ck.residual < tol;
        break;
      case Predicate::CZero:
        ck.residual = max_abs(hp.C) / scale4;
        ck.pass = ck.residual < tol;
        break;
      case Predicate::WarpFree: {
        const double sc = v1_scale(s, c);
        ck.residual = sc > 0.0 ? max_abs(c.v1) / sc : 0.0;
        ck.pass = ck.residual < tol;
        break;
      }
      case Predicate::ExtensionFree: {
        const double sc = v2_scale(s, c);
        ck.residual = sc > 0.0 ? max_abs(c.v2) / sc : 0.0;
        ck.pass = ck.residual < tol;
        break;
      }
      case Predicate::BalancedCrossPly: {
        int zeros = 0, nineties = 0;
        for (double a : angles_deg) {
          if (std::fabs(a) < 1e-9) ++zeros;
          if (std::fabs(a - 90.0) < 1e-9) ++nineties;
        }
        ck.residual = std::fabs(zeros - nineties);
        ck.pass = zeros + nineties == static_cast<int>(angles_deg.size()) &&
                  zeros == nineties;
        break;
      }
    }
    rep.all_pass = rep.all_pass && ck.pass;
    rep.checks.push_back(ck);
  }
  return rep;
}

}  // namespace polarlam
