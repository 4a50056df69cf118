#include "gf2conics/gf2n.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace gf2conics {

namespace {

// Low-weight irreducible polynomials over GF(2), indexed by degree.
// Every entry is re-validated by the irreducibility check at load.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kDefaultModulus = {
    0,
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xb,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x83,       // x^7 + x + 1
    0x11b,      // x^8 + x^4 + x^3 + x + 1
    0x203,      // x^9 + x + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1009,     // x^12 + x^3 + 1
    0x201b,     // x^13 + x^4 + x^3 + x + 1
    0x4021,     // x^14 + x^5 + 1
    0x8003,     // x^15 + x + 1
    0x1002b,    // x^16 + x^5 + x^3 + x + 1
    0x20009,    // x^17 + x^3 + 1
    0x40009,    // x^18 + x^3 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x100001b,  // x^24 + x^4 + x^3 + x + 1
};

// Bit-vector polynomial arithmetic over GF(2), used only to validate moduli.
int poly_degree(std::uint64_t p) {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = poly_degree(f);
  for (int d = poly_degree(a); d >= df; d = poly_degree(a)) {
    a ^= f << (d - df);
  }
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a = poly_mod(a << 1, f);
  }
  return poly_mod(acc, f);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// f of degree n is irreducible iff it shares no factor with x^(2^k) + x for
// k = 1..n/2 (that product covers every irreducible of degree <= n/2, and a
// reducible f must have a factor in that range).
bool poly_irreducible(std::uint32_t f, unsigned n) {
  if (n == 1) return true;
  std::uint64_t t = 2;  // x
  for (unsigned k = 1; k <= n / 2; ++k) {
    t = poly_mulmod(t, t, f);  // t = x^(2^k) mod f
    if (poly_gcd(f, t ^ 2u) != 1) return false;
  }
  return true;
}

}  // namespace

Field::Field(unsigned n) : Field(n, default_modulus(n)) {}

Field::Field(unsigned n, std::uint32_t modulus) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("field degree out of range (need 1 <= n <= 24)");
  }
  if (poly_degree(modulus) != static_cast<int>(n)) {
    throw std::invalid_argument("modulus degree mismatch");
  }
  if (!poly_irreducible(modulus, n)) {
    throw std::invalid_argument("reducible modulus");
  }
  n_ = n;
  modulus_ = modulus;
  q_ = 1u << n;
}

std::uint32_t Field::default_modulus(unsigned n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("field degree out of range (need 1 <= n <= 24)");
  }
  return kDefaultModulus[n];
}

std::uint32_t Field::sqrt(std::uint32_t a) const {
  for (unsigned i = 1; i < n_; ++i) a = square(a);
  return a;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t acc = 1;
  while (k != 0) {
    if (k & 1u) acc = mul(acc, a);
    a = square(a);
    k >>= 1;
  }
  return acc;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("zero inverse");
  return pow(a, q_ - 2);
}

std::uint32_t Field::trace(std::uint32_t w) const {
  std::uint32_t acc = w;
  std::uint32_t t = w;
  for (unsigned i = 1; i < n_; ++i) {
    t = square(t);
    acc ^= t;
  }
  return acc;
}

std::optional<std::uint32_t> Field::solve_artin_schreier(std::uint32_t c) const {
  if (trace(c) != 0) return std::nullopt;
  std::uint32_t t;
  if (n_ % 2 == 1) {
    // half-trace: sum of c^(2^(2i)) for i = 0..(n-1)/2
    t = c;
    std::uint32_t cur = c;
    for (unsigned i = 1; i <= (n_ - 1) / 2; ++i) {
      cur = square(square(cur));
      t ^= cur;
    }
  } else {
    // Solve the GF(2)-linear system M t = c where column j of M is the
    // image of the basis element x^j under t -> t^2 + t.
    std::array<std::uint64_t, kMaxDegree> rows{};
    for (unsigned j = 0; j < n_; ++j) {
      const std::uint32_t image = square(1u << j) ^ (1u << j);
      for (unsigned i = 0; i < n_; ++i) {
        rows[i] |= static_cast<std::uint64_t>((image >> i) & 1u) << j;
      }
    }
    for (unsigned i = 0; i < n_; ++i) {
      rows[i] |= static_cast<std::uint64_t>((c >> i) & 1u) << n_;
    }
    // Gauss-Jordan; the map has rank n-1 and trace(c) = 0 makes the
    // system consistent, so a solution with the free variable at 0 exists.
    std::array<int, kMaxDegree> pivot_col{};
    unsigned rank = 0;
    for (unsigned col = 0; col < n_ && rank < n_; ++col) {
      unsigned sel = rank;
      while (sel < n_ && ((rows[sel] >> col) & 1u) == 0) ++sel;
      if (sel == n_) continue;
      std::swap(rows[rank], rows[sel]);
      for (unsigned i = 0; i < n_; ++i) {
        if (i != rank && ((rows[i] >> col) & 1u)) rows[i] ^= rows[rank];
      }
      pivot_col[rank] = static_cast<int>(col);
      ++rank;
    }
    t = 0;
    for (unsigned r = 0; r < rank; ++r) {
      if ((rows[r] >> n_) & 1u) t |= 1u << pivot_col[r];
    }
    for (unsigned r = rank; r < n_; ++r) {
      if ((rows[r] >> n_) & 1u) {
        throw std::logic_error("artin-schreier system inconsistent at trace 0");
      }
    }
  }
  if ((square(t) ^ t) != c) {
    throw std::logic_error("artin-schreier solution failed verification");
  }
  return t;
}

Element::Element(const Field& field, std::uint32_t bits)
    : field_(field), bits_(bits) {
  if (bits >= field.order()) {
    throw std::invalid_argument("element bits out of field range");
  }
}

namespace {
const Field& require_same_field(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument("field mismatch");
  }
  return a.field();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  const Field& f = require_same_field(a, b);
  return Element(f, f.add(a.bits(), b.bits()));
}

Element operator*(const Element& a, const Element& b) {
  const Field& f = require_same_field(a, b);
  return Element(f, f.mul(a.bits(), b.bits()));
}

std::optional<Element> solve_artin_schreier(const Element& c) {
  const auto t = c.field().solve_artin_schreier(c.bits());
  if (!t) return std::nullopt;
  return Element(c.field(), *t);
}

std::vector<Element> enumerate_elements(const Field& field) {
  std::vector<Element> out;
  out.reserve(field.order());
  for (std::uint32_t w = 0; w < field.order(); ++w) out.emplace_back(field, w);
  return out;
}

std::vector<Element> enumerate_nonzero(const Field& field) {
  std::vector<Element> out;
  out.reserve(field.order() - 1);
  for (std::uint32_t w = 1; w < field.order(); ++w) out.emplace_back(field, w);
  return out;
}

std::string to_hex(std::uint32_t bits) {
  static const char* digits = "0123456789abcdef";
  if (bits == 0) return "0";
  std::string out;
  while (bits != 0) {
    out.insert(out.begin(), digits[bits & 0xf]);
    bits >>= 4;
  }
  return out;
}

std::optional<std::uint32_t> parse_hex(const std::string& text) {
  std::size_t pos = 0;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    pos = 2;
  }
  if (pos >= text.size() || text.size() - pos > 8) return std::nullopt;
  std::uint32_t value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    std::uint32_t digit;
    if (ch >= '0' && ch <= '9') digit = static_cast<std::uint32_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') digit = static_cast<std::uint32_t>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F') digit = static_cast<std::uint32_t>(ch - 'A' + 10);
    else return std::nullopt;
    value = (value << 4) | digit;
  }
  return value;
}

}  // namespace gf2conics
