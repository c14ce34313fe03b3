#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

// Continuous piecewise-linear function on [0,1], stored as node/value pairs
// with linear interpolation between nodes. Models C[0,1] elements. The sup
// norm is max |node value| because a piecewise-linear function attains its
// extrema at nodes.
class PLFunction {
 public:
  PLFunction(std::vector<Rational> nodes, std::vector<Rational> values)
      : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.size() < 2 || nodes_.size() != values_.size())
      throw std::invalid_argument("PLFunction: need matching nodes/values, >= 2");
    if (nodes_.front() != 0 || nodes_.back() != 1)
      throw std::invalid_argument("PLFunction: nodes must span [0,1]");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
      if (!(nodes_[i] < nodes_[i + 1]))
        throw std::invalid_argument("PLFunction: nodes must increase");
  }

  static PLFunction constant(const Rational& c) { return PLFunction({0, 1}, {c, c}); }

  const std::vector<Rational>& nodes() const { return nodes_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational value_at(const Rational& t) const {
    if (t < 0 || t > 1) throw std::invalid_argument("PLFunction: t outside [0,1]");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      if (t <= nodes_[i + 1]) {
        const Rational& a = nodes_[i];
        const Rational& b = nodes_[i + 1];
        return values_[i] + (values_[i + 1] - values_[i]) * (t - a) / (b - a);
      }
    }
    return values_.back();
  }

  // Same function on a node set refined by `extra` (values interpolated).
  PLFunction with_nodes(const std::vector<Rational>& extra) const {
    std::vector<Rational> ns = nodes_;
    for (const Rational& t : extra)
      if (t >= 0 && t <= 1) ns.push_back(t);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<Rational> vs;
    vs.reserve(ns.size());
    for (const Rational& t : ns) vs.push_back(value_at(t));
    return PLFunction(std::move(ns), std::move(vs));
  }

  PLFunction plus_scaled(const Rational& lambda, const PLFunction& g) const {
    PLFunction f2 = with_nodes(g.nodes());
    PLFunction g2 = g.with_nodes(nodes_);
    std::vector<Rational> vs;
    vs.reserve(f2.nodes().size());
    for (std::size_t i = 0; i < f2.nodes().size(); ++i)
      vs.push_back(f2.values()[i] + lambda * g2.value_at(f2.nodes()[i]));
    return PLFunction(f2.nodes(), std::move(vs));
  }

  PLFunction negate() const {
    std::vector<Rational> vs;
    vs.reserve(values_.size());
    for (const Rational& v : values_) vs.push_back(-v);
    return PLFunction(nodes_, std::move(vs));
  }

 private:
  std::vector<Rational> nodes_;
  std::vector<Rational> values_;
};

inline Rational pl_sup_norm(const PLFunction& f) {
  Rational n = 0;
  for (const Rational& v : f.values()) {
    Rational a = rational_abs(v);
    if (n < a) n = a;
  }
  return n;
}

}  // namespace birkhoff
