#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gf2conics {

/// The binary Galois field GF(2^n) in polynomial basis, 1 <= n <= 24.
/// An element is a bit vector packed into a uint32_t, bit i holding the
/// coefficient of x^i; the field is defined by an irreducible degree-n
/// modulus (validated at construction).
class Field {
 public:
  static constexpr unsigned kMaxDegree = 24;

  /// Field with the built-in low-weight modulus for degree n.
  explicit Field(unsigned n);

  /// Field with an explicit modulus (length-(n+1) bit vector, bit n set).
  /// Throws std::invalid_argument on degree mismatch or reducible modulus.
  Field(unsigned n, std::uint32_t modulus);

  /// The built-in modulus for degree n, without constructing a field.
  static std::uint32_t default_modulus(unsigned n);

  unsigned degree() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return q_; }  // 2^n

  // Arithmetic on raw representations. Operands must be < order();
  // results always are. Addition is characteristic-2, i.e. exclusive-or.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t acc = 0;
    while (b != 0) {
      if (b & 1u) acc ^= a;
      b >>= 1;
      a <<= 1;
      if (a & q_) a ^= modulus_;
    }
    return acc;
  }

  std::uint32_t square(std::uint32_t a) const { return mul(a, a); }

  /// Inverse of the Frobenius automorphism: a^(2^(n-1)).
  std::uint32_t sqrt(std::uint32_t a) const;

  /// Square-and-multiply exponentiation; pow(a, 0) = 1.
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

  /// Multiplicative inverse, as a^(2^n - 2). Throws on a = 0.
  std::uint32_t inv(std::uint32_t a) const;

  /// Absolute trace w + w^2 + w^4 + ... + w^(2^(n-1)); always 0 or 1.
  std::uint32_t trace(std::uint32_t w) const;

  /// A solution t of t^2 + t = c, or nullopt when trace(c) = 1.
  /// The other solution is t + 1. Half-trace for odd n, GF(2)-linear
  /// elimination for even n.
  std::optional<std::uint32_t> solve_artin_schreier(std::uint32_t c) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  unsigned n_;
  std::uint32_t modulus_;
  std::uint32_t q_;
};

/// A field element bound to its field. Binary operations on elements of
/// different fields throw; there is never an implicit coercion.
class Element {
 public:
  Element(const Field& field, std::uint32_t bits);

  const Field& field() const { return field_; }
  std::uint32_t bits() const { return bits_; }

  Element square() const { return Element(field_, field_.square(bits_)); }
  Element sqrt() const { return Element(field_, field_.sqrt(bits_)); }
  Element inv() const { return Element(field_, field_.inv(bits_)); }
  Element pow(std::uint64_t k) const { return Element(field_, field_.pow(bits_, k)); }
  std::uint32_t trace() const { return field_.trace(bits_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Field field_;
  std::uint32_t bits_;
};

std::optional<Element> solve_artin_schreier(const Element& c);

/// All q elements in ascending bit-value order.
std::vector<Element> enumerate_elements(const Field& field);
/// The q-1 nonzero elements in ascending bit-value order.
std::vector<Element> enumerate_nonzero(const Field& field);

/// Lowercase hexadecimal of a bit vector, no prefix.
std::string to_hex(std::uint32_t bits);
/// Parse lowercase/uppercase hex, optional "0x" prefix. nullopt on bad input.
std::optional<std::uint32_t> parse_hex(const std::string& text);

}  // namespace gf2conics
