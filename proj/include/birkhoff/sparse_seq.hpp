#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

// Finitely supported real sequence indexed from 1. Models an element of c0
// under the sup norm and an element of its dual l1 under the sum norm; which
// role it plays is decided by the norm argument at the call site. Zero values
// are never stored.
class SparseSeq {
 public:
  SparseSeq() = default;

  static SparseSeq of(std::initializer_list<std::pair<std::uint64_t, Rational>> entries) {
    SparseSeq s;
    for (const auto& [i, v] : entries) s.set(i, v);
    return s;
  }

  void set(std::uint64_t index, const Rational& value) {
    if (index == 0) throw std::invalid_argument("SparseSeq: indices start at 1");
    if (sign(value) == 0) {
      entries_.erase(index);
    } else {
      entries_[index] = value;
    }
  }

  Rational at(std::uint64_t index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const std::map<std::uint64_t, Rational>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }

  std::vector<std::uint64_t> support() const {
    std::vector<std::uint64_t> s;
    s.reserve(entries_.size());
    for (const auto& [i, v] : entries_) s.push_back(i);
    return s;
  }

  // this + lambda * y
  SparseSeq plus_scaled(const Rational& lambda, const SparseSeq& y) const {
    SparseSeq out = *this;
    for (const auto& [i, v] : y.entries_) out.set(i, out.at(i) + lambda * v);
    return out;
  }

  SparseSeq negate() const { return SparseSeq().plus_scaled(-1, *this); }

  bool operator==(const SparseSeq& other) const { return entries_ == other.entries_; }

 private:
  std::map<std::uint64_t, Rational> entries_;
};

enum class SeqNorm { Sup, Sum };

inline Rational seq_norm(const SparseSeq& x, SeqNorm which) {
  Rational n = 0;
  for (const auto& [i, v] : x.entries()) {
    Rational a = rational_abs(v);
    if (which == SeqNorm::Sum) {
      n += a;
    } else if (n < a) {
      n = a;
    }
  }
  return n;
}

// Action of the functional a (an l1 element) on x (a c0 element).
inline Rational seq_pair(const SparseSeq& a, const SparseSeq& x) {
  Rational s = 0;
  for (const auto& [i, v] : a.entries()) s += v * x.at(i);
  return s;
}

}  // namespace birkhoff
