#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "birkhoff/pl_function.hpp"
#include "birkhoff/rational.hpp"
#include "birkhoff/step_function.hpp"

namespace birkhoff {

struct Atom {
  Rational location;  // in [0,1]
  Rational weight;    // nonzero
};

// Finite signed Borel measure on [0,1] in the representable class: finitely
// many point atoms plus a step-function density. Atoms and density are
// mutually singular, so the continuous/discontinuous split of the
// representation is already the unique decomposition of the measure.
class Measure {
 public:
  Measure() : density_(StepFunction::zero()) {}

  Measure(std::vector<Atom> atoms, StepFunction density) : density_(std::move(density)) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    for (const Atom& a : atoms) {
      if (a.location < 0 || a.location > 1)
        throw std::invalid_argument("Measure: atom outside [0,1]");
      if (!atoms_.empty() && atoms_.back().location == a.location) {
        atoms_.back().weight += a.weight;
        if (sign(atoms_.back().weight) == 0) atoms_.pop_back();
      } else if (sign(a.weight) != 0) {
        atoms_.push_back(a);
      }
    }
  }

  static Measure zero() { return Measure(); }
  static Measure dirac(const Rational& location, const Rational& weight) {
    return Measure({Atom{location, weight}}, StepFunction::zero());
  }
  static Measure from_density(StepFunction density) {
    return Measure({}, std::move(density));
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const StepFunction& density() const { return density_; }

  Rational atom_weight_at(const Rational& location) const {
    for (const Atom& a : atoms_)
      if (a.location == location) return a.weight;
    return 0;
  }

  bool is_zero() const { return atoms_.empty() && density_.is_zero(); }
  bool purely_atomic() const { return density_.is_zero(); }
  bool purely_continuous() const { return atoms_.empty(); }

  Measure plus_scaled(const Rational& lambda, const Measure& nu) const {
    std::vector<Atom> atoms = atoms_;
    for (const Atom& a : nu.atoms_) atoms.push_back(Atom{a.location, lambda * a.weight});
    return Measure(std::move(atoms), density_.plus_scaled(lambda, nu.density_));
  }

  Measure negate() const { return Measure::zero().plus_scaled(-1, *this); }

 private:
  std::vector<Atom> atoms_;
  StepFunction density_;
};

// Total variation norm: atoms and density are mutually singular, so |mu| is
// the sum of the two total variations.
inline Rational tv_norm(const Measure& mu) {
  Rational n = step_norm(mu.density(), StepNorm::L1);
  for (const Atom& a : mu.atoms()) n += rational_abs(a.weight);
  return n;
}

// Exact integral of the piecewise-linear f against mu. On each refined
// density piece the integrand is affine, so the trapezoid value is exact.
inline Rational pair_measure(const Measure& mu, const PLFunction& f) {
  Rational s = 0;
  for (const Atom& a : mu.atoms()) s += a.weight * f.value_at(a.location);
  const StepFunction& d = mu.density();
  PLFunction fr = f.with_nodes(d.breakpoints());
  const auto& ns = fr.nodes();
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    Rational v = d.value_at((ns[i] + ns[i + 1]) / 2);
    if (sign(v) == 0) continue;
    s += v * (fr.values()[i] + fr.values()[i + 1]) / 2 * (ns[i + 1] - ns[i]);
  }
  return s;
}

// Unique continuous + purely discontinuous split.
inline std::pair<Measure, Measure> decompose_measure(const Measure& mu) {
  return {Measure::from_density(mu.density()),
          Measure(mu.atoms(), StepFunction::zero())};
}

}  // namespace birkhoff
