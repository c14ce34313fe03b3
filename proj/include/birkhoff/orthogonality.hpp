#pragma once

#include <stdexcept>
#include <vector>

#include "birkhoff/errors.hpp"
#include "birkhoff/measure.hpp"
#include "birkhoff/pl_function.hpp"
#include "birkhoff/rational.hpp"
#include "birkhoff/sparse_seq.hpp"
#include "birkhoff/step_function.hpp"

namespace birkhoff {

enum class SpaceModel { c0_sup, l1_sum, L1_step, Linf_step, C01_pl, TV_measure };

inline const char* space_model_name(SpaceModel m) {
  switch (m) {
    case SpaceModel::c0_sup: return "c0_sup";
    case SpaceModel::l1_sum: return "l1_sum";
    case SpaceModel::L1_step: return "L1_step";
    case SpaceModel::Linf_step: return "Linf_step";
    case SpaceModel::C01_pl: return "C01_pl";
    case SpaceModel::TV_measure: return "TV_measure";
  }
  return "?";
}

// One-sided derivatives of the convex map lambda -> ||x + lambda y|| at 0.
struct DiniPair {
  Rational d_minus, d_plus;
};

// Every model norm here evaluates ||x + lambda y|| as either
//   Sum:  sum_i w_i |a_i + lambda b_i|     (weighted-l1 type)
//   Max:  max_i |a_i + lambda b_i|         (sup type)
// over finitely many terms. All exact decisions run on this reduction.
struct PairTerms {
  enum class Kind { Sum, Max };
  struct Term {
    Rational a, b, w;  // w > 0; ignored for Max
  };
  Kind kind;
  std::vector<Term> terms;

  void add(const Rational& a, const Rational& b, const Rational& w) {
    if (sign(a) == 0 && sign(b) == 0) return;
    terms.push_back(Term{a, b, w});
  }
};

inline Rational terms_norm_at(const PairTerms& p, const Rational& lambda) {
  Rational n = 0;
  for (const auto& t : p.terms) {
    Rational v = rational_abs(t.a + lambda * t.b);
    if (p.kind == PairTerms::Kind::Sum) {
      n += t.w * v;
    } else if (n < v) {
      n = v;
    }
  }
  return n;
}

inline double terms_norm_at_double(const PairTerms& p, double lambda) {
  double n = 0;
  for (const auto& t : p.terms) {
    double v = to_double(t.a) + lambda * to_double(t.b);
    if (v < 0) v = -v;
    if (p.kind == PairTerms::Kind::Sum) {
      n += to_double(t.w) * v;
    } else if (n < v) {
      n = v;
    }
  }
  return n;
}

// Exact one-sided derivatives. For the sum type each term contributes
// sgn(a) b w when a != 0 and +-|b| w when a = 0. For the max type the
// derivative is governed by the active terms {|a| = max}: the right
// derivative is the largest active slope, the left the smallest (finite
// Danskin). Requires a nonzero x for the max type.
inline DiniPair dini(const PairTerms& p) {
  if (p.kind == PairTerms::Kind::Sum) {
    Rational base = 0, tail = 0;
    for (const auto& t : p.terms) {
      if (sign(t.a) != 0) {
        base += Rational(sign(t.a)) * t.b * t.w;
      } else {
        tail += rational_abs(t.b) * t.w;
      }
    }
    return DiniPair{base - tail, base + tail};
  }
  Rational m = 0;
  for (const auto& t : p.terms) m = rational_max(m, rational_abs(t.a));
  if (sign(m) == 0) throw PreconditionFailed("dini: x = 0 has no one-sided derivative pair");
  bool first = true;
  Rational lo = 0, hi = 0;
  for (const auto& t : p.terms) {
    if (rational_abs(t.a) != m) continue;
    Rational slope = Rational(sign(t.a)) * t.b;
    if (first) {
      lo = hi = slope;
      first = false;
    } else {
      lo = rational_min(lo, slope);
      hi = rational_max(hi, slope);
    }
  }
  return DiniPair{lo, hi};
}

// Exact piecewise-linear description of lambda -> ||x + lambda y||.
// Affine between consecutive breakpoints and beyond the outermost ones with
// the recorded slopes. Convex by construction.
struct LambdaProfile {
  std::vector<Rational> breakpoints;  // sorted, nonempty
  std::vector<Rational> values;       // profile value at each breakpoint
  Rational left_slope, right_slope;

  Rational value(const Rational& lambda) const {
    if (lambda <= breakpoints.front())
      return values.front() + left_slope * (lambda - breakpoints.front());
    if (lambda >= breakpoints.back())
      return values.back() + right_slope * (lambda - breakpoints.back());
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
      if (lambda <= breakpoints[i + 1]) {
        Rational t = (lambda - breakpoints[i]) / (breakpoints[i + 1] - breakpoints[i]);
        return values[i] + t * (values[i + 1] - values[i]);
      }
    }
    return values.back();
  }

  struct Minimum {
    Rational arg_lo, arg_hi;  // minimizing set is the segment [arg_lo, arg_hi]
    Rational value;
  };

  // Requires a coercive profile (left slope < 0 < right slope), which every
  // norm profile with y != 0 satisfies.
  Minimum minimum() const {
    if (!(sign(left_slope) < 0 && sign(right_slope) > 0))
      throw std::logic_error("LambdaProfile::minimum: profile not coercive");
    Rational best = values.front();
    for (const Rational& v : values) best = rational_min(best, v);
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == best) hi = i;
    for (std::size_t i = values.size(); i-- > 0;)
      if (values[i] == best) lo = i;
    return Minimum{breakpoints[lo], breakpoints[hi], best};
  }
};

namespace detail {

struct Line {
  Rational slope, intercept;
  Rational at(const Rational& x) const { return slope * x + intercept; }
};

// x-coordinate where two lines of distinct slope meet.
inline Rational line_intersection(const Line& l1, const Line& l2) {
  return (l2.intercept - l1.intercept) / (l1.slope - l2.slope);
}

// Upper envelope of finitely many lines, returned in slope order.
inline std::vector<Line> upper_envelope(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept < b.intercept;
  });
  // same slope: only the highest intercept can contribute
  std::vector<Line> dedup;
  for (const Line& l : lines) {
    if (!dedup.empty() && dedup.back().slope == l.slope) {
      dedup.back() = l;
    } else {
      dedup.push_back(l);
    }
  }
  std::vector<Line> hull;
  for (const Line& l : dedup) {
    while (hull.size() >= 2) {
      const Line& l1 = hull[hull.size() - 2];
      const Line& l2 = hull.back();
      if (line_intersection(l1, l) <= line_intersection(l1, l2)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(l);
  }
  return hull;
}

}  // namespace detail

// Exact profile. Needs y != 0 in the represented pair (some term with b != 0)
// so that the profile is coercive.
inline LambdaProfile lambda_profile(const PairTerms& p) {
  LambdaProfile prof;
  if (p.kind == PairTerms::Kind::Sum) {
    Rational total = 0;
    std::vector<Rational> bps;
    for (const auto& t : p.terms) {
      if (sign(t.b) == 0) continue;
      total += rational_abs(t.b) * t.w;
      bps.push_back(-t.a / t.b);
    }
    if (bps.empty()) throw PreconditionFailed("lambda_profile: y = 0");
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    prof.breakpoints = std::move(bps);
    for (const Rational& x : prof.breakpoints) prof.values.push_back(terms_norm_at(p, x));
    prof.left_slope = -total;
    prof.right_slope = total;
    return prof;
  }
  std::vector<detail::Line> lines;
  for (const auto& t : p.terms) {
    lines.push_back(detail::Line{t.b, t.a});
    lines.push_back(detail::Line{-t.b, -t.a});
  }
  std::vector<detail::Line> hull = detail::upper_envelope(std::move(lines));
  if (hull.size() < 2) throw PreconditionFailed("lambda_profile: y = 0");
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Rational x = detail::line_intersection(hull[i], hull[i + 1]);
    if (!prof.breakpoints.empty() && prof.breakpoints.back() == x) continue;
    prof.breakpoints.push_back(x);
    prof.values.push_back(hull[i].at(x));
  }
  prof.left_slope = hull.front().slope;
  prof.right_slope = hull.back().slope;
  return prof;
}

// Brute-force floating check of the exact machinery: minimum of the norm over
// a uniform lambda grid. Heuristic cross-check only, never authoritative.
struct GridResult {
  double min_value;
  double argmin;
};

inline GridResult grid_oracle(const PairTerms& p, double lo, double hi, int steps) {
  if (steps < 3) throw std::invalid_argument("grid_oracle: steps >= 3 required");
  GridResult r{terms_norm_at_double(p, lo), lo};
  for (int i = 1; i < steps; ++i) {
    double lambda = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    double v = terms_norm_at_double(p, lambda);
    if (v < r.min_value) {
      r.min_value = v;
      r.argmin = lambda;
    }
  }
  return r;
}

// ---- term extraction per space model -------------------------------------

inline PairTerms make_terms(const SparseSeq& x, const SparseSeq& y, SeqNorm which) {
  PairTerms p;
  p.kind = which == SeqNorm::Sum ? PairTerms::Kind::Sum : PairTerms::Kind::Max;
  std::vector<std::uint64_t> idx = x.support();
  for (std::uint64_t i : y.support()) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (std::uint64_t i : idx) p.add(x.at(i), y.at(i), 1);
  return p;
}

inline PairTerms make_terms(const StepFunction& f, const StepFunction& g, StepNorm which) {
  PairTerms p;
  p.kind = which == StepNorm::L1 ? PairTerms::Kind::Sum : PairTerms::Kind::Max;
  RefinedPair r = refine_pair(f, g);
  for (std::size_t k = 0; k < r.f_values.size(); ++k)
    p.add(r.f_values[k], r.g_values[k], r.breaks[k + 1] - r.breaks[k]);
  return p;
}

// C[0,1]: the sup of a piecewise-linear function over [0,1] is a max over
// nodes, and the node set of f + lambda g is contained in the refined node
// set for every lambda.
inline PairTerms make_terms(const PLFunction& f, const PLFunction& g) {
  PairTerms p;
  p.kind = PairTerms::Kind::Max;
  PLFunction fr = f.with_nodes(g.nodes());
  for (const Rational& t : fr.nodes()) p.add(fr.value_at(t), g.value_at(t), 1);
  return p;
}

// M[0,1]: atoms (weight-1 terms over the union of atom locations) and
// densities (length-weighted terms) are mutually singular, so the total
// variation is one weighted sum over both groups.
inline PairTerms make_terms(const Measure& mu, const Measure& nu) {
  PairTerms p;
  p.kind = PairTerms::Kind::Sum;
  std::vector<Rational> locs;
  for (const Atom& a : mu.atoms()) locs.push_back(a.location);
  for (const Atom& a : nu.atoms()) locs.push_back(a.location);
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
  for (const Rational& t : locs) p.add(mu.atom_weight_at(t), nu.atom_weight_at(t), 1);
  RefinedPair r = refine_pair(mu.density(), nu.density());
  for (std::size_t k = 0; k < r.f_values.size(); ++k)
    p.add(r.f_values[k], r.g_values[k], r.breaks[k + 1] - r.breaks[k]);
  return p;
}

// ---- public decisions ------------------------------------------------------

// x = 0 is rejected here and resolved at the boolean layer, where the
// definitions are trivial.
inline DiniPair dini(const SparseSeq& x, const SparseSeq& y, SeqNorm which) {
  if (x.is_zero()) throw PreconditionFailed("dini: x = 0");
  return dini(make_terms(x, y, which));
}
inline DiniPair dini(const StepFunction& f, const StepFunction& g, StepNorm which) {
  if (f.is_zero()) throw PreconditionFailed("dini: x = 0");
  return dini(make_terms(f, g, which));
}
inline DiniPair dini(const PLFunction& f, const PLFunction& g) {
  if (sign(pl_sup_norm(f)) == 0) throw PreconditionFailed("dini: x = 0");
  return dini(make_terms(f, g));
}
inline DiniPair dini(const Measure& mu, const Measure& nu) {
  if (mu.is_zero()) throw PreconditionFailed("dini: x = 0");
  return dini(make_terms(mu, nu));
}

// 0 minimizes the convex profile iff the derivative pair straddles 0.
inline bool bj_from_dini(const DiniPair& d) {
  return sign(d.d_minus) <= 0 && sign(d.d_plus) >= 0;
}

// A convex piecewise-linear profile has its unique minimizer at 0 iff both
// one-sided derivatives are strictly signed.
inline bool strong_from_dini(const DiniPair& d) {
  return sign(d.d_minus) < 0 && sign(d.d_plus) > 0;
}

template <typename X, typename... Which>
bool is_bj_orthogonal_impl(const X& x, const X& y, bool x_zero, bool y_zero, Which... which) {
  if (x_zero || y_zero) return true;
  return bj_from_dini(dini(x, y, which...));
}

template <typename X, typename... Which>
bool is_strongly_orthogonal_impl(const X& x, const X& y, bool x_zero, bool y_zero,
                                 Which... which) {
  if (y_zero) return false;   // ||x|| < ||x|| fails
  if (x_zero) return true;    // 0 < |lambda| ||y|| for every lambda != 0
  return strong_from_dini(dini(x, y, which...));
}

inline bool is_bj_orthogonal(const SparseSeq& x, const SparseSeq& y, SeqNorm which) {
  return is_bj_orthogonal_impl(x, y, x.is_zero(), y.is_zero(), which);
}
inline bool is_bj_orthogonal(const StepFunction& f, const StepFunction& g, StepNorm which) {
  return is_bj_orthogonal_impl(f, g, f.is_zero(), g.is_zero(), which);
}
inline bool is_bj_orthogonal(const PLFunction& f, const PLFunction& g) {
  return is_bj_orthogonal_impl(f, g, sign(pl_sup_norm(f)) == 0, sign(pl_sup_norm(g)) == 0);
}
inline bool is_bj_orthogonal(const Measure& mu, const Measure& nu) {
  return is_bj_orthogonal_impl(mu, nu, mu.is_zero(), nu.is_zero());
}

inline bool is_strongly_orthogonal(const SparseSeq& x, const SparseSeq& y, SeqNorm which) {
  return is_strongly_orthogonal_impl(x, y, x.is_zero(), y.is_zero(), which);
}
inline bool is_strongly_orthogonal(const StepFunction& f, const StepFunction& g,
                                   StepNorm which) {
  return is_strongly_orthogonal_impl(f, g, f.is_zero(), g.is_zero(), which);
}
inline bool is_strongly_orthogonal(const PLFunction& f, const PLFunction& g) {
  return is_strongly_orthogonal_impl(f, g, sign(pl_sup_norm(f)) == 0,
                                     sign(pl_sup_norm(g)) == 0);
}
inline bool is_strongly_orthogonal(const Measure& mu, const Measure& nu) {
  return is_strongly_orthogonal_impl(mu, nu, mu.is_zero(), nu.is_zero());
}

}  // namespace birkhoff
