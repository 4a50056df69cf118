#pragma once

#include <cstdint>
#include <optional>

#include "gf2conics/gf2n.hpp"

namespace gf2conics {

/// The binary quadratic form u^2 + v^2 + theta*uv over GF(2^n), theta != 0.
/// Reducible over the base field exactly when trace(1/theta^2) = 0.
class BinaryQuadraticForm {
 public:
  BinaryQuadraticForm(const Field& field, std::uint32_t theta);

  const Field& field() const { return field_; }
  std::uint32_t theta() const { return theta_; }

 private:
  Field field_;
  std::uint32_t theta_;
};

/// Factorization u^2 + v^2 + theta*uv = (u + a*v)(u + b*v).
/// Satisfies a + b = theta, a*b = 1, a != b; a is the smaller bit value.
struct LinearFactorPair {
  std::uint32_t a;
  std::uint32_t b;
};

/// Trace criterion: true iff trace(1/theta^2) = 1.
bool is_irreducible(const BinaryQuadraticForm& form);

/// Constructive factorization via the Artin-Schreier solver:
/// a = theta*s, b = theta*(s+1) with s^2 + s = 1/theta^2.
/// nullopt when the form is irreducible.
std::optional<LinearFactorPair> factor(const BinaryQuadraticForm& form);

/// Independent oracle: scan every nonzero a for a + 1/a = theta.
/// Agrees with factor()/is_irreducible() on every input.
std::optional<LinearFactorPair> brute_force_factor(const BinaryQuadraticForm& form);

}  // namespace gf2conics
