#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

// Closed interval [lo, hi] inside [0,1]; lo == hi is a point.
struct Interval {
  Rational lo, hi;
};

// Finite union of disjoint closed intervals, sorted by left endpoint.
// Stands in for the measurable sets of the source material: plateaus,
// supports, Cantor approximants. Set operations below are exact; subtraction
// and intersection treat the operands as closed sets and return the closure
// of the measure-theoretic result, dropping zero-length slivers they create.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet of(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet s;
    for (const Interval& p : parts) {
      if (p.hi < p.lo) throw std::invalid_argument("IntervalSet: hi < lo");
      if (!s.parts_.empty() && p.lo <= s.parts_.back().hi) {
        // overlapping or touching closed intervals are one component
        s.parts_.back().hi = rational_max(s.parts_.back().hi, p.hi);
      } else {
        s.parts_.push_back(p);
      }
    }
    return s;
  }

  static IntervalSet single(const Rational& lo, const Rational& hi) {
    return of({Interval{lo, hi}});
  }

  static IntervalSet point(const Rational& t) { return of({Interval{t, t}}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Rational measure() const {
    Rational m = 0;
    for (const Interval& p : parts_) m += p.hi - p.lo;
    return m;
  }

  Rational min() const { return parts_.front().lo; }
  Rational max() const { return parts_.back().hi; }

  bool contains(const Rational& t) const {
    for (const Interval& p : parts_)
      if (p.lo <= t && t <= p.hi) return true;
    return false;
  }

  IntervalSet unite(const IntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return of(std::move(all));
  }

  IntervalSet intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const Interval& a : parts_)
      for (const Interval& b : other.parts_) {
        Rational lo = rational_max(a.lo, b.lo);
        Rational hi = rational_min(a.hi, b.hi);
        if (lo <= hi) out.push_back(Interval{lo, hi});
      }
    return of(std::move(out));
  }

  // Closure of this \ other; zero-length leftovers are dropped.
  IntervalSet subtract(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const Interval& a : parts_) {
      std::vector<Interval> pieces{a};
      for (const Interval& b : other.parts_) {
        std::vector<Interval> next;
        for (const Interval& p : pieces) {
          if (b.hi <= p.lo || p.hi <= b.lo) {  // no interior overlap
            next.push_back(p);
            continue;
          }
          if (p.lo < b.lo) next.push_back(Interval{p.lo, rational_min(b.lo, p.hi)});
          if (b.hi < p.hi) next.push_back(Interval{rational_max(b.hi, p.lo), p.hi});
        }
        pieces = std::move(next);
      }
      for (const Interval& p : pieces)
        if (p.lo < p.hi) out.push_back(p);
    }
    return of(std::move(out));
  }

  // Closed sets intersect iff some pair of parts does (touching counts).
  bool intersects(const IntervalSet& other) const {
    for (const Interval& a : parts_)
      for (const Interval& b : other.parts_)
        if (rational_max(a.lo, b.lo) <= rational_min(a.hi, b.hi)) return true;
    return false;
  }

  bool operator==(const IntervalSet& other) const {
    if (parts_.size() != other.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i].lo != other.parts_[i].lo || parts_[i].hi != other.parts_[i].hi)
        return false;
    return true;
  }

 private:
  std::vector<Interval> parts_;
};

}  // namespace birkhoff
