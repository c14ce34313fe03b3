#pragma once

#include <map>
#include <optional>
#include <vector>

#include "birkhoff/errors.hpp"
#include "birkhoff/interval_set.hpp"
#include "birkhoff/measure.hpp"
#include "birkhoff/orthogonality.hpp"
#include "birkhoff/rational.hpp"
#include "birkhoff/sparse_seq.hpp"
#include "birkhoff/step_function.hpp"

namespace birkhoff {

// M_T for a c0 functional b: coordinates on supp(b) frozen to sgn(b), all
// other coordinates free in [-1,1] (finitely supported).
struct C0Face {
  std::map<std::uint64_t, int> fixed_signs;
};

// M_g for an L-infinity functional g on L1: unit-L1-norm functions supported
// on the plateau {|g| = ||g||}, sign-aligned with g piece by piece.
struct L1Face {
  struct Piece {
    Rational lo, hi;
    int sign;  // sign of g on the piece
  };
  std::vector<Piece> pieces;
  Rational level;  // ||g||
};

// M_nu for a measure: continuous f with f = +1 on the closed support of the
// positive part and f = -1 on the negative one.
struct MeasureFace {
  IntervalSet positive, negative;
};

struct RangeInterval {
  Rational lo, hi;
  bool endpoints_attained;
};

// Every representable (finitely supported) c0 functional attains.
inline C0Face c0_attainment(const SparseSeq& b) {
  if (b.is_zero()) throw PreconditionFailed("c0_attainment: b = 0");
  C0Face face;
  for (const auto& [i, v] : b.entries()) face.fixed_signs[i] = sign(v);
  return face;
}

// A step functional always attains: its plateau is a union of full pieces and
// therefore has positive measure. (The general attainment criterion is
// positive plateau measure; for step functions it cannot fail.)
inline L1Face l1_functional_attainment(const StepFunction& g) {
  if (g.is_zero()) throw PreconditionFailed("l1_functional_attainment: g = 0");
  Rational m = step_norm(g, StepNorm::EssSup);
  L1Face face;
  face.level = m;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    if (rational_abs(g.value(i)) != m) continue;
    if (!face.pieces.empty() && face.pieces.back().hi == g.left(i) &&
        face.pieces.back().sign == sign(g.value(i))) {
      face.pieces.back().hi = g.right(i);
    } else {
      face.pieces.push_back(L1Face::Piece{g.left(i), g.right(i), sign(g.value(i))});
    }
  }
  return face;
}

// Closed supports of the positive and negative parts, exact from the
// representation: atoms split by weight sign, density pieces by value sign.
inline MeasureFace measure_supports(const Measure& nu) {
  std::vector<Interval> pos, neg;
  for (const Atom& a : nu.atoms())
    (sign(a.weight) > 0 ? pos : neg).push_back(Interval{a.location, a.location});
  const StepFunction& d = nu.density();
  for (std::size_t i = 0; i < d.pieces(); ++i) {
    if (sign(d.value(i)) > 0) pos.push_back(Interval{d.left(i), d.right(i)});
    if (sign(d.value(i)) < 0) neg.push_back(Interval{d.left(i), d.right(i)});
  }
  return MeasureFace{IntervalSet::of(std::move(pos)), IntervalSet::of(std::move(neg))};
}

struct MeasureAttainment {
  MeasureFace face;
  PLFunction witness;  // f with nu(f) = ||nu||, ||f|| = 1
};

// nu attains iff the two closed supports are disjoint (touching closures
// already force the continuity obstruction). The witness is +-1 on the
// supports, linear across gaps, constant outside.
inline std::optional<MeasureAttainment> measure_attainment(const Measure& nu) {
  if (nu.is_zero()) throw PreconditionFailed("measure_attainment: nu = 0");
  MeasureFace face = measure_supports(nu);
  if (face.positive.intersects(face.negative)) return std::nullopt;

  struct Signed {
    Interval iv;
    int sign;
  };
  std::vector<Signed> supports;
  for (const Interval& p : face.positive.parts()) supports.push_back({p, +1});
  for (const Interval& p : face.negative.parts()) supports.push_back({p, -1});
  std::sort(supports.begin(), supports.end(),
            [](const Signed& a, const Signed& b) { return a.iv.lo < b.iv.lo; });

  std::vector<Rational> nodes{0};
  std::vector<Rational> vals{Rational(supports.front().sign)};
  auto append = [&](const Rational& t, const Rational& v) {
    if (nodes.back() == t) {
      vals.back() = v;
    } else {
      nodes.push_back(t);
      vals.push_back(v);
    }
  };
  for (const Signed& s : supports) {
    append(s.iv.lo, Rational(s.sign));
    if (s.iv.lo < s.iv.hi) append(s.iv.hi, Rational(s.sign));
  }
  if (nodes.back() < 1) append(rat(1), vals.back());

  PLFunction witness(std::move(nodes), std::move(vals));
  if (pair_measure(nu, witness) != tv_norm(nu))
    throw std::logic_error("measure_attainment: witness failed exact pairing check");
  return MeasureAttainment{std::move(face), std::move(witness)};
}

// Image of the functional S over M_T, c0 model: the frozen coordinates
// contribute sgn(T_i) S_i, the free ones anything in [-sum |S_j|, +sum].
// Both endpoints are reached by the extreme assignments x_j = +-sgn(S_j).
inline RangeInterval face_range(const SparseSeq& T, const SparseSeq& S) {
  C0Face face = c0_attainment(T);
  Rational base = 0, tail = 0;
  for (const auto& [i, v] : S.entries()) {
    auto it = face.fixed_signs.find(i);
    if (it != face.fixed_signs.end()) {
      base += Rational(it->second) * v;
    } else {
      tail += rational_abs(v);
    }
  }
  return RangeInterval{base - tail, base + tail, true};
}

// Image of h over M_g, L1 model: mixing unit mass across plateau pieces sweeps
// the convex hull of the sign-adjusted essential values of h there.
inline RangeInterval face_range(const StepFunction& g, const StepFunction& h) {
  L1Face face = l1_functional_attainment(g);
  RefinedPair r = refine_pair(g, h);
  bool first = true;
  Rational lo = 0, hi = 0;
  for (std::size_t k = 0; k < r.f_values.size(); ++k) {
    if (rational_abs(r.f_values[k]) != face.level) continue;
    Rational v = Rational(sign(r.f_values[k])) * r.g_values[k];
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      lo = rational_min(lo, v);
      hi = rational_max(hi, v);
    }
  }
  return RangeInterval{lo, hi, true};
}

}  // namespace birkhoff
