#pragma once

#include <algorithm>
#include <vector>

#include "birkhoff/attainment.hpp"
#include "birkhoff/measure.hpp"
#include "birkhoff/prng.hpp"
#include "birkhoff/spaces.hpp"

namespace birkhoff {

// Deterministic seeded sample families. Every sampler emits an element that
// lies in the face exactly (checked cheaply by the callers' invariants);
// free parts are randomized dyadics.

inline Rational dyadic_between(Prng& rng, const Rational& lo, const Rational& hi,
                               unsigned pow = 4) {
  long scale = 1L << pow;
  long k = rng.range(1, scale - 1);
  return lo + (hi - lo) * rat(k, scale);
}

inline SparseSeq sample_c0_face(const C0Face& face, Prng& rng, unsigned pow = 4) {
  SparseSeq x;
  std::uint64_t max_idx = 1;
  for (const auto& [i, s] : face.fixed_signs) {
    x.set(i, Rational(s));
    max_idx = std::max(max_idx, i);
  }
  int extras = static_cast<int>(rng.below(4));
  for (int k = 0; k < extras; ++k) {
    std::uint64_t i = 1 + rng.below(max_idx + 4);
    if (face.fixed_signs.count(i)) continue;
    x.set(i, rng.dyadic_unit_interval(pow));
  }
  return x;
}

// Unit-norm phi supported on the plateau, sign-aligned with g.
inline StepFunction sample_l1_face(const L1Face& face, Prng& rng, unsigned pow = 4) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < face.pieces.size(); ++i)
    if (rng.coin()) chosen.push_back(i);
  if (chosen.empty()) chosen.push_back(rng.below(face.pieces.size()));
  std::vector<Rational> masses;
  Rational total = 0;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    Rational m = rng.dyadic_positive(pow);
    masses.push_back(m);
    total += m;
  }
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    const auto& p = face.pieces[chosen[k]];
    Rational mass = masses[k] / total;
    segs.push_back(Segment{p.lo, p.hi, Rational(p.sign) * mass / (p.hi - p.lo)});
  }
  return step_from_segments(std::move(segs));
}

// Continuous f with f = +1 / -1 on the supports, randomized in the gaps.
inline PLFunction sample_measure_face(const MeasureFace& face, Prng& rng,
                                      unsigned pow = 4) {
  struct Signed {
    Interval iv;
    int sign;
  };
  std::vector<Signed> supports;
  for (const Interval& p : face.positive.parts()) supports.push_back({p, +1});
  for (const Interval& p : face.negative.parts()) supports.push_back({p, -1});
  std::sort(supports.begin(), supports.end(),
            [](const Signed& a, const Signed& b) { return a.iv.lo < b.iv.lo; });

  std::vector<Rational> nodes;
  std::vector<Rational> vals;
  auto push = [&](const Rational& t, const Rational& v) {
    if (!nodes.empty() && nodes.back() == t) return;
    nodes.push_back(t);
    vals.push_back(v);
  };
  if (supports.empty()) {
    push(rat(0), rng.dyadic_unit_interval(pow));
    push(rat(1), rng.dyadic_unit_interval(pow));
    return PLFunction(std::move(nodes), std::move(vals));
  }
  if (supports.front().iv.lo > 0) push(rat(0), rng.dyadic_unit_interval(pow));
  for (std::size_t k = 0; k < supports.size(); ++k) {
    const Signed& s = supports[k];
    if (!nodes.empty() && nodes.back() < s.iv.lo && rng.coin()) {
      Rational t = dyadic_between(rng, nodes.back(), s.iv.lo, pow);
      push(t, rng.dyadic_unit_interval(pow));
    }
    push(s.iv.lo, Rational(s.sign));
    if (s.iv.lo < s.iv.hi) push(s.iv.hi, Rational(s.sign));
  }
  if (nodes.back() < 1) {
    if (rng.coin()) {
      Rational t = dyadic_between(rng, nodes.back(), rat(1), pow);
      push(t, rng.dyadic_unit_interval(pow));
    }
    push(rat(1), rng.dyadic_unit_interval(pow));
  }
  return PLFunction(std::move(nodes), std::move(vals));
}

// ---- random instances -------------------------------------------------------

// k/2^pow with the value constrained to [lo_units, hi_units].
inline Rational dyadic_in_units(Prng& rng, long lo_units, long hi_units, unsigned pow) {
  long scale = 1L << pow;
  return rat(rng.range(lo_units * scale, hi_units * scale), scale);
}

inline SparseSeq random_sparse(Prng& rng, std::uint64_t max_index = 10,
                               int max_support = 5, unsigned pow = 3,
                               bool nonzero = true) {
  for (;;) {
    SparseSeq x;
    int n = rng.range(1, max_support);
    for (int k = 0; k < n; ++k)
      x.set(1 + rng.below(max_index), dyadic_in_units(rng, -2, 2, pow));
    if (!nonzero || !x.is_zero()) return x;
  }
}

inline StepFunction random_step(Prng& rng, int max_pieces = 6, unsigned grid_pow = 4,
                                unsigned value_pow = 3, bool nonzero = true) {
  for (;;) {
    int pieces = rng.range(2, max_pieces);
    std::vector<Rational> breaks = rng.dyadic_partition(pieces, grid_pow);
    std::vector<Rational> values;
    for (int i = 0; i < pieces; ++i) values.push_back(dyadic_in_units(rng, -2, 2, value_pow));
    StepFunction f(std::move(breaks), std::move(values));
    if (!nonzero || !f.is_zero()) return f;
  }
}

inline PLFunction random_pl(Prng& rng, int max_interior_nodes = 4, unsigned grid_pow = 4,
                            unsigned value_pow = 3, bool nonzero = true) {
  for (;;) {
    int interior = rng.range(0, max_interior_nodes);
    std::vector<Rational> nodes = rng.dyadic_partition(interior + 1, grid_pow);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      values.push_back(dyadic_in_units(rng, -2, 2, value_pow));
    PLFunction f(std::move(nodes), std::move(values));
    if (!nonzero || sign(pl_sup_norm(f)) != 0) return f;
  }
}

inline Measure random_measure(Prng& rng, int max_atoms = 3, unsigned pow = 4,
                              bool nonzero = true) {
  for (;;) {
    std::vector<Atom> atoms;
    int n = rng.range(0, max_atoms);
    for (int k = 0; k < n; ++k) {
      Rational loc = rat(static_cast<long>(rng.below((1L << pow) + 1)), 1L << pow);
      Rational w = dyadic_in_units(rng, -2, 2, 3);
      if (sign(w) != 0) atoms.push_back(Atom{loc, w});
    }
    StepFunction density =
        rng.coin() ? random_step(rng, 5, pow, 3, false) : StepFunction::zero();
    Measure mu(std::move(atoms), std::move(density));
    if (!nonzero || !mu.is_zero()) return mu;
  }
}

}  // namespace birkhoff
