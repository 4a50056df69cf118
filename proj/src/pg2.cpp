#include "gf2conics/pg2.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf2conics {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("field mismatch");
}

void require_in_range(const Field& f, std::uint32_t v) {
  if (v >= f.order()) throw std::invalid_argument("coordinate out of field range");
}

// Scale (x, y, z) so the leftmost nonzero coordinate is 1.
std::array<std::uint32_t, 3> normalize_triple(const Field& f, std::uint32_t x,
                                              std::uint32_t y, std::uint32_t z) {
  const std::uint32_t lead = x != 0 ? x : (y != 0 ? y : z);
  if (lead == 0) throw std::invalid_argument("all coordinates zero");
  if (lead == 1) return {x, y, z};
  const std::uint32_t s = f.inv(lead);
  return {f.mul(x, s), f.mul(y, s), f.mul(z, s)};
}

// Visit the conic's value at every normalized point of the plane.
// Callback signature: (x, y, z, value).
template <typename Visit>
void scan_plane(const Conic& c, Visit&& visit) {
  const Field& f = c.field();
  const std::uint32_t q = f.order();
  const auto& a = c.coeff();

  // (1:y:z): a_xx + a_yy y^2 + a_xy y + a_zz z^2 + a_xz z + a_yz y z.
  // The z-only part is hoisted into a table shared by all rows.
  std::vector<std::uint32_t> zpart(q);
  for (std::uint32_t z = 0; z < q; ++z) {
    zpart[z] = f.mul(a[Conic::kZZ], f.square(z)) ^ f.mul(a[Conic::kXZ], z);
  }
  for (std::uint32_t y = 0; y < q; ++y) {
    const std::uint32_t base =
        a[Conic::kXX] ^ f.mul(a[Conic::kYY], f.square(y)) ^ f.mul(a[Conic::kXY], y);
    const std::uint32_t h = f.mul(a[Conic::kYZ], y);
    if (h == 0) {
      for (std::uint32_t z = 0; z < q; ++z) visit(1u, y, z, base ^ zpart[z]);
    } else {
      for (std::uint32_t z = 0; z < q; ++z) visit(1u, y, z, base ^ zpart[z] ^ f.mul(h, z));
    }
  }
  // (0:1:z): a_yy + a_zz z^2 + a_yz z.
  for (std::uint32_t z = 0; z < q; ++z) {
    const std::uint32_t v =
        a[Conic::kYY] ^ f.mul(a[Conic::kZZ], f.square(z)) ^ f.mul(a[Conic::kYZ], z);
    visit(0u, 1u, z, v);
  }
  // (0:0:1): a_zz.
  visit(0u, 0u, 1u, a[Conic::kZZ]);
}

// Nullspace basis of a 3x3 matrix over the field, by Gauss-Jordan.
std::vector<std::array<std::uint32_t, 3>> nullspace3(
    const Field& f, std::array<std::array<std::uint32_t, 3>, 3> m) {
  std::array<int, 3> pivot_col{-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int sel = rank;
    while (sel < 3 && m[sel][col] == 0) ++sel;
    if (sel == 3) continue;
    std::swap(m[rank], m[sel]);
    const std::uint32_t s = f.inv(m[rank][col]);
    for (auto& v : m[rank]) v = f.mul(v, s);
    for (int i = 0; i < 3; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const std::uint32_t factor = m[i][col];
      for (int j = 0; j < 3; ++j) m[i][j] ^= f.mul(factor, m[rank][j]);
    }
    pivot_col[rank] = col;
    ++rank;
  }
  std::vector<std::array<std::uint32_t, 3>> basis;
  for (int col = 0; col < 3; ++col) {
    if (col == pivot_col[0] || col == pivot_col[1] || col == pivot_col[2]) continue;
    std::array<std::uint32_t, 3> v{0, 0, 0};
    v[col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = m[r][col];
    basis.push_back(v);
  }
  return basis;
}

// Partials matrix of the form: squared terms vanish under d/dv in
// characteristic 2, leaving a linear system.
std::array<std::array<std::uint32_t, 3>, 3> partials_matrix(const Conic& c) {
  const auto& a = c.coeff();
  return {{{0, a[Conic::kXY], a[Conic::kXZ]},
           {a[Conic::kXY], 0, a[Conic::kYZ]},
           {a[Conic::kXZ], a[Conic::kYZ], 0}}};
}

}  // namespace

Point::Point(const Field& field, std::uint32_t x, std::uint32_t y, std::uint32_t z)
    : field_(field) {
  require_in_range(field, x);
  require_in_range(field, y);
  require_in_range(field, z);
  const auto t = normalize_triple(field, x, y, z);
  x_ = t[0];
  y_ = t[1];
  z_ = t[2];
}

Line::Line(const Field& field, std::uint32_t l, std::uint32_t m, std::uint32_t n)
    : field_(field) {
  require_in_range(field, l);
  require_in_range(field, m);
  require_in_range(field, n);
  const auto t = normalize_triple(field, l, m, n);
  l_ = t[0];
  m_ = t[1];
  n_ = t[2];
}

std::uint32_t Line::evaluate(const Point& p) const {
  require_same_field(field_, p.field());
  return field_.mul(l_, p.x()) ^ field_.mul(m_, p.y()) ^ field_.mul(n_, p.z());
}

Conic::Conic(const Field& field, const std::array<std::uint32_t, 6>& coeff)
    : field_(field), coeff_(coeff) {
  bool any = false;
  for (const auto v : coeff) {
    require_in_range(field, v);
    any = any || v != 0;
  }
  if (!any) throw std::invalid_argument("zero conic");
}

Transform::Transform(const Field& field, const std::array<std::uint32_t, 9>& entries)
    : field_(field), entries_(entries) {
  for (const auto v : entries) require_in_range(field, v);
  if (determinant() == 0) throw std::invalid_argument("singular transform");
}

Transform Transform::identity(const Field& field) {
  return Transform(field, {1, 0, 0, 0, 1, 0, 0, 0, 1});
}

std::uint32_t Transform::determinant() const {
  const Field& f = field_;
  const auto& e = entries_;
  const std::uint32_t m00 = f.mul(e[4], e[8]) ^ f.mul(e[5], e[7]);
  const std::uint32_t m01 = f.mul(e[3], e[8]) ^ f.mul(e[5], e[6]);
  const std::uint32_t m02 = f.mul(e[3], e[7]) ^ f.mul(e[4], e[6]);
  return f.mul(e[0], m00) ^ f.mul(e[1], m01) ^ f.mul(e[2], m02);
}

std::vector<Point> enumerate_points(const Field& field) {
  const std::uint32_t q = field.order();
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(q) * q + q + 1);
  for (std::uint32_t y = 0; y < q; ++y) {
    for (std::uint32_t z = 0; z < q; ++z) out.emplace_back(field, 1u, y, z);
  }
  for (std::uint32_t z = 0; z < q; ++z) out.emplace_back(field, 0u, 1u, z);
  out.emplace_back(field, 0u, 0u, 1u);
  return out;
}

std::uint32_t evaluate(const Conic& conic, const Point& p) {
  require_same_field(conic.field(), p.field());
  const Field& f = conic.field();
  const auto& a = conic.coeff();
  return f.mul(a[Conic::kXX], f.square(p.x())) ^
         f.mul(a[Conic::kYY], f.square(p.y())) ^
         f.mul(a[Conic::kZZ], f.square(p.z())) ^
         f.mul(a[Conic::kXY], f.mul(p.x(), p.y())) ^
         f.mul(a[Conic::kXZ], f.mul(p.x(), p.z())) ^
         f.mul(a[Conic::kYZ], f.mul(p.y(), p.z()));
}

std::vector<Point> point_set(const Conic& conic) {
  std::vector<Point> out;
  scan_plane(conic, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z,
                        std::uint32_t value) {
    if (value == 0) out.emplace_back(conic.field(), x, y, z);
  });
  return out;
}

std::uint32_t point_count(const Conic& conic) {
  std::uint32_t count = 0;
  scan_plane(conic, [&](std::uint32_t, std::uint32_t, std::uint32_t,
                        std::uint32_t value) {
    if (value == 0) ++count;
  });
  return count;
}

std::vector<Point> singular_points(const Conic& conic) {
  const auto& a = conic.coeff();
  if (a[Conic::kXY] == 0 && a[Conic::kXZ] == 0 && a[Conic::kYZ] == 0) {
    // Partials vanish identically; every conic point is singular.
    return point_set(conic);
  }
  const auto basis = nullspace3(conic.field(), partials_matrix(conic));
  if (basis.size() != 1) {
    throw std::logic_error("partials system rank unexpected");
  }
  const Point n(conic.field(), basis[0][0], basis[0][1], basis[0][2]);
  if (evaluate(conic, n) == 0) return {n};
  return {};
}

Classification classify(const Conic& conic) {
  const Field& f = conic.field();
  const std::uint32_t q = f.order();
  const auto& a = conic.coeff();

  if (a[Conic::kXY] == 0 && a[Conic::kXZ] == 0 && a[Conic::kYZ] == 0) {
    // Pure squares: the form is the square of one linear form.
    const Line repeated(f, f.sqrt(a[Conic::kXX]), f.sqrt(a[Conic::kYY]),
                        f.sqrt(a[Conic::kZZ]));
    Classification out{ConicClass::kRepeatedLine, point_count(conic),
                       std::nullopt, repeated, std::nullopt};
    return out;
  }

  const auto basis = nullspace3(f, partials_matrix(conic));
  if (basis.size() != 1) {
    throw std::logic_error("partials system rank unexpected");
  }
  const Point nucleus(f, basis[0][0], basis[0][1], basis[0][2]);

  if (evaluate(conic, nucleus) != 0) {
    return Classification{ConicClass::kNondegenerate, point_count(conic),
                          std::nullopt, std::nullopt, std::nullopt};
  }

  const auto pts = point_set(conic);
  if (pts.size() == 1) {
    return Classification{ConicClass::kImaginaryLinePair, 1, std::nullopt,
                          std::nullopt, nucleus};
  }
  if (pts.size() != 2u * q + 1u) {
    throw std::logic_error("line pair with unexpected point count");
  }

  // Split the point set into the two lines through the vertex.
  const Point* p1 = nullptr;
  for (const auto& p : pts) {
    if (!(p == nucleus)) {
      p1 = &p;
      break;
    }
  }
  Line l1 = line_through(nucleus, *p1);
  const Point* p2 = nullptr;
  for (const auto& p : pts) {
    if (l1.evaluate(p) != 0) {
      p2 = &p;
      break;
    }
  }
  Line l2 = line_through(nucleus, *p2);
  if (std::array{l2.l(), l2.m(), l2.n()} < std::array{l1.l(), l1.m(), l1.n()}) {
    std::swap(l1, l2);
  }
  if (!proportional(line_product(l1, l2), conic)) {
    throw std::logic_error("line pair reconstruction failed verification");
  }
  return Classification{ConicClass::kRealLinePair, 2u * q + 1u,
                        std::make_pair(l1, l2), std::nullopt, nucleus};
}

Conic apply_transform(const Conic& conic, const Transform& t) {
  require_same_field(conic.field(), t.field());
  const Field& f = conic.field();
  const auto& e = t.entries();
  const std::array<std::array<std::uint32_t, 3>, 3> rows = {
      {{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}}};

  // Coefficients of the product of two substituted linear forms.
  const auto form_product = [&](const std::array<std::uint32_t, 3>& u,
                                const std::array<std::uint32_t, 3>& v) {
    return std::array<std::uint32_t, 6>{
        f.mul(u[0], v[0]),
        f.mul(u[1], v[1]),
        f.mul(u[2], v[2]),
        f.mul(u[0], v[1]) ^ f.mul(u[1], v[0]),
        f.mul(u[0], v[2]) ^ f.mul(u[2], v[0]),
        f.mul(u[1], v[2]) ^ f.mul(u[2], v[1]),
    };
  };

  static constexpr std::array<std::pair<int, int>, 6> kMonomials = {
      {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
  std::array<std::uint32_t, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) {
    const std::uint32_t coeff = conic[i];
    if (coeff == 0) continue;
    const auto prod = form_product(rows[kMonomials[i].first], rows[kMonomials[i].second]);
    for (std::size_t j = 0; j < 6; ++j) out[j] ^= f.mul(coeff, prod[j]);
  }
  return Conic(f, out);
}

Conic scale(const Conic& conic, std::uint32_t s) {
  const Field& f = conic.field();
  require_in_range(f, s);
  if (s == 0) throw std::invalid_argument("zero scale");
  std::array<std::uint32_t, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = f.mul(conic[i], s);
  return Conic(f, out);
}

Line line_through(const Point& p, const Point& q) {
  require_same_field(p.field(), q.field());
  const Field& f = p.field();
  const std::uint32_t l = f.mul(p.y(), q.z()) ^ f.mul(p.z(), q.y());
  const std::uint32_t m = f.mul(p.z(), q.x()) ^ f.mul(p.x(), q.z());
  const std::uint32_t n = f.mul(p.x(), q.y()) ^ f.mul(p.y(), q.x());
  if (l == 0 && m == 0 && n == 0) {
    throw std::invalid_argument("line through equal points");
  }
  return Line(f, l, m, n);
}

Conic line_product(const Line& a, const Line& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  return Conic(f, {f.mul(a.l(), b.l()), f.mul(a.m(), b.m()), f.mul(a.n(), b.n()),
                   f.mul(a.l(), b.m()) ^ f.mul(a.m(), b.l()),
                   f.mul(a.l(), b.n()) ^ f.mul(a.n(), b.l()),
                   f.mul(a.m(), b.n()) ^ f.mul(a.n(), b.m())});
}

bool proportional(const Conic& a, const Conic& b) {
  if (!(a.field() == b.field())) return false;
  const Field& f = a.field();
  std::size_t lead = 6;
  for (std::size_t i = 0; i < 6; ++i) {
    if (a[i] != 0 || b[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == 6 || a[lead] == 0 || b[lead] == 0) return false;
  const std::uint32_t s = f.mul(b[lead], f.inv(a[lead]));
  for (std::size_t i = 0; i < 6; ++i) {
    if (f.mul(a[i], s) != b[i]) return false;
  }
  return true;
}

std::string to_string(ConicClass verdict) {
  switch (verdict) {
    case ConicClass::kNondegenerate: return "nondegenerate";
    case ConicClass::kRealLinePair: return "real_line_pair";
    case ConicClass::kRepeatedLine: return "repeated_line";
    case ConicClass::kImaginaryLinePair: return "imaginary_line_pair";
  }
  return "unknown";
}

std::string to_string(const Point& p) {
  return to_hex(p.x()) + ":" + to_hex(p.y()) + ":" + to_hex(p.z());
}

std::string to_string(const Line& l) {
  return to_hex(l.l()) + ":" + to_hex(l.m()) + ":" + to_hex(l.n());
}

std::string to_string(const Conic& c) {
  std::string out;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i != 0) out += ",";
    out += to_hex(c[i]);
  }
  return out;
}

std::optional<Conic> parse_conic(const Field& field, const std::string& text) {
  std::array<std::uint32_t, 6> coeff{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t end = i == 5 ? text.size() : text.find(',', start);
    if (end == std::string::npos) return std::nullopt;
    const auto v = parse_hex(text.substr(start, end - start));
    if (!v || *v >= field.order()) return std::nullopt;
    coeff[i] = *v;
    start = end + 1;
  }
  if (text.find(',', start) != std::string::npos) return std::nullopt;
  return Conic(field, coeff);  // all-zero input throws "zero conic"
}

}  // namespace gf2conics
