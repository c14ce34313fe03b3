#pragma once

#include <stdexcept>
#include <vector>

#include "birkhoff/interval_set.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

// Piecewise-constant function on a rational partition of [0,1]. Values sit on
// the open pieces (t_{i-1}, t_i); values at the breakpoints themselves never
// matter because every consumer here is an integral or an essential sup.
// Models both L-infinity elements (ess-sup norm) and L1 elements (integral
// norm).
class StepFunction {
 public:
  StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
      : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.size() < 2 || values_.size() + 1 != breaks_.size())
      throw std::invalid_argument("StepFunction: need m+1 breakpoints for m values");
    if (breaks_.front() != 0 || breaks_.back() != 1)
      throw std::invalid_argument("StepFunction: partition must span [0,1]");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
      if (!(breaks_[i] < breaks_[i + 1]))
        throw std::invalid_argument("StepFunction: breakpoints must increase");
  }

  static StepFunction constant(const Rational& c) { return StepFunction({0, 1}, {c}); }
  static StepFunction zero() { return constant(0); }

  std::size_t pieces() const { return values_.size(); }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& left(std::size_t i) const { return breaks_[i]; }
  const Rational& right(std::size_t i) const { return breaks_[i + 1]; }
  const Rational& value(std::size_t i) const { return values_[i]; }
  Rational length(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }

  bool is_zero() const {
    for (const Rational& v : values_)
      if (sign(v) != 0) return false;
    return true;
  }

  // Value at a non-breakpoint t; at a breakpoint the piece to its right
  // (left for t = 1). Only sampling code calls this.
  Rational value_at(const Rational& t) const {
    if (t < 0 || t > 1) throw std::invalid_argument("StepFunction: t outside [0,1]");
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (t < breaks_[i + 1]) return values_[i];
    return values_.back();
  }

  StepFunction plus_scaled(const Rational& lambda, const StepFunction& g) const;
  StepFunction negate() const { return StepFunction::zero().plus_scaled(-1, *this); }

  // Canonical form: adjacent pieces with equal values merged.
  StepFunction normalized() const {
    std::vector<Rational> b{breaks_.front()};
    std::vector<Rational> v;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!v.empty() && v.back() == values_[i]) {
        b.back() = breaks_[i + 1];
      } else {
        v.push_back(values_[i]);
        b.push_back(breaks_[i + 1]);
      }
    }
    return StepFunction(std::move(b), std::move(v));
  }

 private:
  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

// Common refinement of two partitions, with both value sequences re-read on
// the refined pieces. The workhorse behind pairing, arithmetic and a.e.
// comparison.
struct RefinedPair {
  std::vector<Rational> breaks;
  std::vector<Rational> f_values;
  std::vector<Rational> g_values;
};

inline RefinedPair refine_pair(const StepFunction& f, const StepFunction& g) {
  RefinedPair r;
  const auto& a = f.breakpoints();
  const auto& b = g.breakpoints();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Rational t;
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      t = a[i++];
    } else if (i == a.size() || b[j] < a[i]) {
      t = b[j++];
    } else {
      t = a[i];
      ++i;
      ++j;
    }
    r.breaks.push_back(t);
  }
  for (std::size_t k = 0; k + 1 < r.breaks.size(); ++k) {
    // any interior point identifies the covering piece of each operand
    Rational mid = (r.breaks[k] + r.breaks[k + 1]) / 2;
    r.f_values.push_back(f.value_at(mid));
    r.g_values.push_back(g.value_at(mid));
  }
  return r;
}

inline StepFunction StepFunction::plus_scaled(const Rational& lambda,
                                              const StepFunction& g) const {
  RefinedPair r = refine_pair(*this, g);
  std::vector<Rational> vals;
  vals.reserve(r.f_values.size());
  for (std::size_t k = 0; k < r.f_values.size(); ++k)
    vals.push_back(r.f_values[k] + lambda * r.g_values[k]);
  return StepFunction(std::move(r.breaks), std::move(vals));
}

inline bool ae_equal(const StepFunction& f, const StepFunction& g) {
  RefinedPair r = refine_pair(f, g);
  for (std::size_t k = 0; k < r.f_values.size(); ++k)
    if (r.f_values[k] != r.g_values[k]) return false;
  return true;
}

enum class StepNorm { EssSup, L1 };

inline Rational step_norm(const StepFunction& f, StepNorm which) {
  Rational n = 0;
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    Rational a = rational_abs(f.value(i));
    if (which == StepNorm::L1) {
      n += a * f.length(i);
    } else if (n < a) {
      n = a;
    }
  }
  return n;
}

// Exact integral of f * phi over [0,1].
inline Rational pair_step(const StepFunction& f, const StepFunction& phi) {
  RefinedPair r = refine_pair(f, phi);
  Rational s = 0;
  for (std::size_t k = 0; k < r.f_values.size(); ++k)
    s += r.f_values[k] * r.g_values[k] * (r.breaks[k + 1] - r.breaks[k]);
  return s;
}

// Assemble a step function from value-carrying segments; everything not
// covered is zero. Segments must have positive length and disjoint interiors.
struct Segment {
  Rational lo, hi, value;
};

inline StepFunction step_from_segments(std::vector<Segment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  std::vector<Rational> breaks{0};
  std::vector<Rational> values;
  for (const Segment& s : segments) {
    if (!(s.lo < s.hi)) throw std::invalid_argument("step_from_segments: empty segment");
    if (s.lo < breaks.back())
      throw std::invalid_argument("step_from_segments: overlapping segments");
    if (breaks.back() < s.lo) {
      values.push_back(0);
      breaks.push_back(s.lo);
    }
    values.push_back(s.value);
    breaks.push_back(s.hi);
  }
  if (breaks.back() < 1) {
    values.push_back(0);
    breaks.push_back(rat(1));
  }
  return StepFunction(std::move(breaks), std::move(values));
}

// f restricted to S (zero off S).
inline StepFunction step_restrict(const StepFunction& f, const IntervalSet& s) {
  std::vector<Segment> segs;
  for (const Interval& p : s.parts()) {
    if (!(p.lo < p.hi)) continue;
    for (std::size_t i = 0; i < f.pieces(); ++i) {
      Rational lo = rational_max(p.lo, f.left(i));
      Rational hi = rational_min(p.hi, f.right(i));
      if (lo < hi && sign(f.value(i)) != 0) segs.push_back(Segment{lo, hi, f.value(i)});
    }
  }
  return step_from_segments(std::move(segs));
}

// Plateau {|g| = ess sup |g|} as a closed set; empty only for g = 0.
inline IntervalSet step_plateau(const StepFunction& g) {
  Rational m = step_norm(g, StepNorm::EssSup);
  if (sign(m) == 0) return IntervalSet();
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < g.pieces(); ++i)
    if (rational_abs(g.value(i)) == m) parts.push_back(Interval{g.left(i), g.right(i)});
  return IntervalSet::of(std::move(parts));
}

}  // namespace birkhoff
