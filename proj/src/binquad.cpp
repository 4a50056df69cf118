#include "gf2conics/binquad.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf2conics {

BinaryQuadraticForm::BinaryQuadraticForm(const Field& field, std::uint32_t theta)
    : field_(field), theta_(theta) {
  if (theta == 0) throw std::invalid_argument("theta must be nonzero");
  if (theta >= field.order()) {
    throw std::invalid_argument("theta out of field range");
  }
}

bool is_irreducible(const BinaryQuadraticForm& form) {
  const Field& f = form.field();
  return f.trace(f.inv(f.square(form.theta()))) == 1;
}

std::optional<LinearFactorPair> factor(const BinaryQuadraticForm& form) {
  const Field& f = form.field();
  const std::uint32_t theta = form.theta();
  const auto s = f.solve_artin_schreier(f.inv(f.square(theta)));
  if (!s) return std::nullopt;
  std::uint32_t a = f.mul(theta, *s);
  std::uint32_t b = f.mul(theta, *s ^ 1u);
  if (a > b) std::swap(a, b);
  return LinearFactorPair{a, b};
}

std::optional<LinearFactorPair> brute_force_factor(const BinaryQuadraticForm& form) {
  const Field& f = form.field();
  const std::uint32_t theta = form.theta();
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    const std::uint32_t b = f.inv(a);
    if ((a ^ b) == theta) return LinearFactorPair{std::min(a, b), std::max(a, b)};
  }
  return std::nullopt;
}

}  // namespace gf2conics
