#pragma once

#include <stdexcept>
#include <vector>

#include "birkhoff/attainment.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/interval_set.hpp"
#include "birkhoff/orthogonality.hpp"
#include "birkhoff/rational.hpp"
#include "birkhoff/sparse_seq.hpp"
#include "birkhoff/step_function.hpp"

namespace birkhoff {

namespace detail {

// base = sum over supp(a) of sgn(a_k) b_k, tail = sum of |b_k| off supp(a).
struct SplitSums {
  Rational base, tail;
};

inline SplitSums split_sums(const SparseSeq& a, const SparseSeq& b) {
  SplitSums s{0, 0};
  for (const auto& [i, v] : b.entries()) {
    int sa = sign(a.at(i));
    if (sa != 0) {
      s.base += Rational(sa) * v;
    } else {
      s.tail += rational_abs(v);
    }
  }
  return s;
}

// Sign pattern on supp(a) with the off-support coefficients theta * sgn(b_k).
// Needs |theta| <= 1; then a(x) = ||a||_1 and b(x) = base + theta * tail.
inline SparseSeq mix_witness(const SparseSeq& a, const SparseSeq& b, const Rational& theta) {
  SparseSeq x;
  for (const auto& [i, v] : a.entries()) x.set(i, Rational(sign(v)));
  for (const auto& [i, v] : b.entries())
    if (sign(a.at(i)) == 0) x.set(i, theta * Rational(sign(v)));
  return x;
}

}  // namespace detail

// The element of B_c00 certifying that a finitely supported functional sees
// x with full norm while the strongly orthogonal perturbation b vanishes
// there. Free coefficients are chosen proportionally, c_k = theta sgn(b_k),
// which is deterministic and keeps the sup norm at 1.
inline SparseSeq c0_bsa_witness(const SparseSeq& a, const SparseSeq& b) {
  if (a.is_zero()) throw PreconditionFailed("c0_bsa_witness: a = 0");
  auto [base, tail] = detail::split_sums(a, b);
  if (!(rational_abs(base) < tail))
    throw PreconditionFailed(
        "c0_bsa_witness: strict inequality |sum sgn(a_k) b_k| < sum off-support |b_k| fails");
  Rational theta = -base / tail;
  SparseSeq x = detail::mix_witness(a, b, theta);
  if (seq_pair(a, x) != seq_norm(a, SeqNorm::Sum) || sign(seq_pair(b, x)) != 0 ||
      seq_norm(x, SeqNorm::Sup) > 1)
    throw std::logic_error("c0_bsa_witness: exact postcondition check failed");
  return x;
}

// Three-branch clipping of f at level ||f|| - delta. Produces a nearby
// functional whose plateau has positive measure and whose remaining values
// stay a full delta below the norm.
inline StepFunction l1_truncate(const StepFunction& f, const Rational& delta) {
  if (f.is_zero()) throw PreconditionFailed("l1_truncate: f = 0");
  if (sign(delta) <= 0) throw PreconditionFailed("l1_truncate: delta must be positive");
  Rational m = step_norm(f, StepNorm::EssSup);
  Rational hi = m - delta;
  Rational lo = -m + delta;
  bool oriented = false;
  for (const Rational& v : f.values()) oriented = oriented || v > hi;
  if (!oriented)
    throw PreconditionFailed("l1_truncate: sigma({f > ||f|| - delta}) = 0; apply to -f");
  std::vector<Rational> values;
  values.reserve(f.pieces());
  for (const Rational& v : f.values()) {
    if (v > hi) {
      values.push_back(m);
    } else if (v < lo) {
      values.push_back(lo);
    } else {
      values.push_back(v);
    }
  }
  StepFunction g(f.breakpoints(), std::move(values));

  // (i) ||f - g|| < delta, strict because step functions take finitely many
  // values; (ii) positive plateau measure; (iii) every value is either the
  // norm itself or at least delta below it in modulus.
  Rational mg = step_norm(g, StepNorm::EssSup);
  if (!(step_norm(f.plus_scaled(-1, g), StepNorm::EssSup) < delta))
    throw std::logic_error("l1_truncate: ||f - g|| < delta failed");
  if (!(sign(step_plateau(g).measure()) > 0))
    throw std::logic_error("l1_truncate: plateau has zero measure");
  for (const Rational& v : g.values())
    if (!(v == mg || rational_abs(v) <= mg - delta))
      throw PreconditionFailed(
          "l1_truncate: delta too large for the gap property (iii); choose delta <= ||f||");
  return g;
}

// The norm-attaining unit phi with integral pairing g(phi) = ||g|| and
// h(phi) = 0, built from the two-level formula on the sign-split plateau.
// Phi+ / Phi- are the plateau portions where sgn(g) h is positive / negative;
// both must carry positive measure, which is exactly strong orthogonality.
inline StepFunction l1_phi_witness(const StepFunction& g, const StepFunction& h) {
  L1Face face = l1_functional_attainment(g);
  RefinedPair r = refine_pair(g, h);
  Rational level = face.level;
  std::vector<Segment> plus_segs, minus_segs;
  Rational h_plus = 0, h_minus = 0, sigma_plus = 0, sigma_minus = 0;
  for (std::size_t k = 0; k < r.f_values.size(); ++k) {
    if (rational_abs(r.f_values[k]) != level) continue;
    Rational adj = Rational(sign(r.f_values[k])) * r.g_values[k];
    Rational len = r.breaks[k + 1] - r.breaks[k];
    if (sign(adj) > 0) {
      plus_segs.push_back(Segment{r.breaks[k], r.breaks[k + 1], Rational(sign(r.f_values[k]))});
      h_plus += adj * len;
      sigma_plus += len;
    } else if (sign(adj) < 0) {
      minus_segs.push_back(Segment{r.breaks[k], r.breaks[k + 1], Rational(sign(r.f_values[k]))});
      h_minus += -adj * len;
      sigma_minus += len;
    }
  }
  if (plus_segs.empty())
    throw PreconditionFailed("l1_phi_witness: Phi+ has zero measure (g not strongly orthogonal to h)");
  if (minus_segs.empty())
    throw PreconditionFailed("l1_phi_witness: Phi- has zero measure (g not strongly orthogonal to h)");

  Rational denom = h_plus * sigma_minus + h_minus * sigma_plus;
  std::vector<Segment> segs;
  for (Segment s : plus_segs) {
    s.value *= h_minus / denom;
    segs.push_back(s);
  }
  for (Segment s : minus_segs) {
    s.value *= h_plus / denom;
    segs.push_back(s);
  }
  StepFunction phi = step_from_segments(std::move(segs));

  if (step_norm(phi, StepNorm::L1) != 1 || pair_step(g, phi) != level ||
      sign(pair_step(h, phi)) != 0)
    throw std::logic_error("l1_phi_witness: exact postcondition check failed");
  return phi;
}

// Smith-Volterra approximant on [base.lo, base.hi]: at step i a centered open
// interval of total length (1-keep) |base| / 2^i is removed, split equally
// over the current 2^(i-1) intervals. Measure after depth d is
// |base| (keep + (1-keep) / 2^d).
inline IntervalSet fat_cantor(const Interval& base, const Rational& keep_fraction, int depth) {
  if (depth < 1) throw PreconditionFailed("fat_cantor: depth >= 1 required");
  if (!(sign(keep_fraction) > 0 && keep_fraction < 1))
    throw PreconditionFailed("fat_cantor: keep_fraction must lie in (0,1)");
  if (!(base.lo < base.hi)) throw PreconditionFailed("fat_cantor: empty base interval");
  Rational L = base.hi - base.lo;
  std::vector<Interval> current{base};
  for (int i = 1; i <= depth; ++i) {
    Rational gap = (1 - keep_fraction) * L / pow2(static_cast<unsigned>(2 * i - 1));
    std::vector<Interval> next;
    next.reserve(current.size() * 2);
    for (const Interval& iv : current) {
      Rational mid = (iv.lo + iv.hi) / 2;
      next.push_back(Interval{iv.lo, mid - gap / 2});
      next.push_back(Interval{mid + gap / 2, iv.hi});
    }
    current = std::move(next);
  }
  return IntervalSet::of(std::move(current));
}

// ---- the negative construction on L1 ---------------------------------------

struct RnpOptions {
  int ramp_steps = 64;
  int cantor_depth = 4;
  Rational cantor_keep = rat(1, 2);
};

// Output of the counterexample construction, scalar target space. g and h are
// the representable step pair; the ramp on [t0, t0+eta] is discretized with
// piece-minimum magnitudes so that the plateau of g is exactly E_k \ E_0.
//
// The represented (non-discretized) object carries values approaching z_k
// at t0 from inside the Cantor set C and from its complement; those two
// limits enter limit_terms as extra coordinates (z_k, +-z_k). Strong
// orthogonality of the represented pair is certified exactly on limit_terms;
// the discretized step pair alone cannot be strongly orthogonal, because in
// this finite model strong orthogonality of an attaining functional always
// yields a witness (the face range straddles 0).
struct RnpResult {
  StepFunction g, h;
  Rational f_norm;  // = ||g||
  Rational z_k;     // signed full-norm value
  Rational z_0;
  IntervalSet E_k, E_0;
  Interval ramp;  // [t0, t0 + eta]
  IntervalSet cantor;
  Rational t0, eta;
  PairTerms limit_terms;
  DiniPair limit_dini;
  LambdaProfile limit_profile;
};

inline RnpResult l1_rnp_counterexample(const StepFunction& f, const Rational& epsilon,
                                       const RnpOptions& opt = RnpOptions{}) {
  if (f.is_zero()) throw PreconditionFailed("l1_rnp_counterexample: f = 0");
  Rational m = step_norm(f, StepNorm::EssSup);
  if (!(sign(epsilon) > 0 && epsilon < m))
    throw PreconditionFailed("l1_rnp_counterexample: need 0 < epsilon < ||f||");
  if (opt.ramp_steps < 1) throw PreconditionFailed("l1_rnp_counterexample: ramp_steps >= 1");

  // y_k: the signed value attaining the norm (first such piece); E_k: all
  // pieces carrying exactly that value. Pieces at the opposite extreme are
  // ordinary E_i's and get shrunk with the rest.
  Rational z_k = 0;
  for (const Rational& v : f.values())
    if (rational_abs(v) == m && sign(z_k) == 0) z_k = v;
  std::vector<Interval> ek_parts;
  for (std::size_t i = 0; i < f.pieces(); ++i)
    if (f.value(i) == z_k) ek_parts.push_back(Interval{f.left(i), f.right(i)});
  IntervalSet E_k = IntervalSet::of(std::move(ek_parts));

  // E_0: the left half of E_k's first component, so that E_k \ E_0 keeps
  // positive measure.
  Interval first = E_k.parts().front();
  IntervalSet E_0 = IntervalSet::single(first.lo, (first.lo + first.hi) / 2);

  Rational shrink = 1 - epsilon / (4 * m);
  Rational z_0 = (m - epsilon / 4) * Rational(sign(z_k));
  Rational eta = rational_min(epsilon / (4 * m), E_0.measure() / 2);
  Rational t0 = E_0.min();
  Interval ramp{t0, t0 + eta};  // contained in E_0's single component

  IntervalSet cantor = fat_cantor(ramp, opt.cantor_keep, opt.cantor_depth);

  // Refined partition: f's breakpoints, E_0's right edge, the ramp grid and
  // the Cantor interval edges.
  std::vector<Rational> cuts = f.breakpoints();
  cuts.push_back(E_0.max());
  Rational step_len = eta / opt.ramp_steps;
  for (int j = 0; j <= opt.ramp_steps; ++j) cuts.push_back(t0 + step_len * j);
  for (const Interval& iv : cantor.parts()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Rational> g_vals, h_vals;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    Rational fv = f.value_at(mid);
    Rational gv, hv;
    if (ramp.lo <= cuts[k] && cuts[k + 1] <= ramp.hi) {
      // grid cell containing this sub-piece; value at the cell's right edge
      // (the piece minimum, since the ramp decreases)
      Rational pos = (cuts[k + 1] - t0) / step_len;
      mpz_class cell;
      mpz_cdiv_q(cell.get_mpz_t(), pos.get_num().get_mpz_t(), pos.get_den().get_mpz_t());
      gv = (1 - Rational(cell) * step_len) * z_k;
      hv = cantor.contains(mid) ? z_k : -z_k;
    } else if (E_0.contains(mid)) {
      gv = z_0;
      hv = gv;
    } else if (fv == z_k) {
      gv = z_k;
      hv = gv;
    } else {
      gv = shrink * fv;
      hv = gv;
    }
    g_vals.push_back(gv);
    h_vals.push_back(hv);
  }
  StepFunction g(cuts, g_vals);
  StepFunction h(cuts, std::move(h_vals));

  // Exact guarantees of the construction.
  if (!(step_norm(f.plus_scaled(-1, g), StepNorm::EssSup) < epsilon))
    throw std::logic_error("l1_rnp_counterexample: ||g - f|| < epsilon failed");
  if (step_norm(g, StepNorm::EssSup) != m)
    throw std::logic_error("l1_rnp_counterexample: ||g|| = ||f|| failed");
  if (!(step_plateau(g) == E_k.subtract(E_0)))
    throw std::logic_error("l1_rnp_counterexample: plateau must be exactly E_k minus E_0");

  // Window property of the Cantor approximant at t0, at the scales the depth
  // resolves: both C and its complement meet [t0, t0+delta].
  for (int j = 0; j < opt.cantor_depth; ++j) {
    Rational delta = eta / pow2(static_cast<unsigned>(j));
    IntervalSet window = IntervalSet::single(t0, t0 + delta);
    Rational inside = window.intersect(cantor).measure();
    if (!(sign(inside) > 0 && inside < delta))
      throw std::logic_error("l1_rnp_counterexample: Cantor window property failed");
  }

  // Strong orthogonality of the represented pair: the step terms plus the two
  // ramp limit coordinates.
  PairTerms limit = make_terms(g, h, StepNorm::EssSup);
  limit.add(z_k, z_k, 1);
  limit.add(z_k, -z_k, 1);
  DiniPair ld = dini(limit);
  if (!strong_from_dini(ld))
    throw std::logic_error("l1_rnp_counterexample: limit dini pair not strict");
  LambdaProfile lp = lambda_profile(limit);

  RnpResult res{std::move(g), std::move(h), m,    z_k,    z_0, std::move(E_k),
                std::move(E_0), ramp, std::move(cantor), t0,  eta, std::move(limit),
                ld,           std::move(lp)};
  return res;
}

}  // namespace birkhoff
