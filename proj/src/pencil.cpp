#include "gf2conics/pencil.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gf2conics {

PencilParameter PencilParameter::make(const Field& field, std::uint32_t lambda,
                                      std::uint32_t mu) {
  if (lambda >= field.order() || mu >= field.order()) {
    throw std::invalid_argument("parameter out of field range");
  }
  if (lambda == 0 && mu == 0) {
    throw std::invalid_argument("pencil parameter (0:0)");
  }
  if (lambda == 0) return PencilParameter{0, 1};
  return PencilParameter{1, field.mul(mu, field.inv(lambda))};
}

std::string to_string(const PencilParameter& p) {
  return to_hex(p.lambda) + ":" + to_hex(p.mu);
}

Pencil::Pencil(const Conic& c1, const Conic& c2) : c1_(c1), c2_(c2) {
  if (!(c1.field() == c2.field())) throw std::invalid_argument("field mismatch");
  if (proportional(c1, c2)) {
    throw std::invalid_argument("pencil generators are proportional");
  }
}

Conic Pencil::combine(std::uint32_t lambda, std::uint32_t mu) const {
  const Field& f = field();
  if (lambda >= f.order() || mu >= f.order()) {
    throw std::invalid_argument("parameter out of field range");
  }
  if (lambda == 0 && mu == 0) {
    throw std::invalid_argument("pencil parameter (0:0)");
  }
  std::array<std::uint32_t, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    out[i] = f.mul(lambda, c1_[i]) ^ f.mul(mu, c2_[i]);
  }
  return Conic(f, out);
}

Conic Pencil::member(const PencilParameter& p) const {
  if (!(p.lambda == 1 || (p.lambda == 0 && p.mu == 1))) {
    throw std::invalid_argument("pencil parameter not normalized");
  }
  return combine(p.lambda, p.mu);
}

std::vector<PencilParameter> Pencil::parameters() const {
  const std::uint32_t q = field().order();
  std::vector<PencilParameter> out;
  out.reserve(q + 1);
  for (std::uint32_t t = 0; t < q; ++t) out.push_back(PencilParameter{1, t});
  out.push_back(PencilParameter{0, 1});
  return out;
}

std::vector<std::pair<PencilParameter, Classification>> Pencil::degenerate_members() const {
  std::vector<std::pair<PencilParameter, Classification>> out;
  for (const auto& p : parameters()) {
    Classification cls = classify(member(p));
    if (cls.verdict != ConicClass::kNondegenerate) out.emplace_back(p, std::move(cls));
  }
  return out;
}

LinePairPencil::LinePairPencil(const Field& field, std::uint32_t alpha,
                               std::uint32_t beta)
    : field_(field), alpha_(alpha), beta_(beta) {
  if (alpha >= field.order() || beta >= field.order()) {
    throw std::invalid_argument("parameter out of field range");
  }
  if (alpha == 0 || beta == 0) {
    throw std::invalid_argument("alpha and beta must be nonzero");
  }
  if (alpha == beta) {
    throw std::invalid_argument("alpha and beta must differ");
  }
}

bool LinePairPencil::admissible() const {
  return field_.trace(field_.inv(field_.square(alpha_))) == 1 &&
         field_.trace(field_.inv(field_.square(beta_))) == 1;
}

Conic LinePairPencil::first_generator() const {
  return Conic(field_, {1, 1, 0, alpha_, 0, 0});
}

Conic LinePairPencil::second_generator() const {
  return Conic(field_, {1, 0, 1, 0, beta_, 0});
}

Conic LinePairPencil::third_degenerate() const {
  const Field& f = field_;
  const std::uint32_t a2 = f.square(alpha_);
  const std::uint32_t b2 = f.square(beta_);
  return Conic(f, {a2 ^ b2, b2, a2, f.mul(alpha_, b2), f.mul(a2, beta_), 0});
}

PencilParameter LinePairPencil::third_parameter() const {
  return PencilParameter::make(field_, field_.square(beta_), field_.square(alpha_));
}

std::uint32_t LinePairPencil::gamma() const {
  return field_.mul(field_.mul(alpha_, beta_), field_.inv(alpha_ ^ beta_));
}

Transform LinePairPencil::canonical_transform() const {
  const Field& f = field_;
  const std::uint32_t s = f.inv(alpha_ ^ beta_);
  const std::uint32_t bs = f.mul(beta_, s);
  const std::uint32_t as = f.mul(alpha_, s);
  return Transform(f, {1, 0, 0, 0, bs, as, 0, as, bs});
}

Pencil LinePairPencil::pencil() const {
  return Pencil(first_generator(), second_generator());
}

bool gamma_identity_holds(const Field& field, std::uint32_t alpha, std::uint32_t beta) {
  if (alpha == 0 || beta == 0) {
    throw std::invalid_argument("alpha and beta must be nonzero");
  }
  if (alpha == beta) throw std::invalid_argument("alpha and beta must differ");
  const std::uint32_t gamma =
      field.mul(field.mul(alpha, beta), field.inv(alpha ^ beta));
  return field.inv(field.square(gamma)) ==
         (field.inv(field.square(alpha)) ^ field.inv(field.square(beta)));
}

std::vector<std::uint32_t> admissible_values(const Field& field) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a < field.order(); ++a) {
    if (field.trace(field.inv(field.square(a))) == 1) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> admissible_pairs(const Field& field) {
  const auto values = admissible_values(field);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(values.size() * (values.size() - 1));
  for (const auto a : values) {
    for (const auto b : values) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification kernels
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint8_t kFailTrace = 1;
constexpr std::uint8_t kFailGeometry = 2;
constexpr std::uint8_t kFailParameter = 4;
constexpr std::uint8_t kNoVerdict = 0xff;

struct PairOutcome {
  std::uint32_t gamma = 0;
  std::uint32_t trace_value = 0;
  std::uint8_t verdict = kNoVerdict;
  std::uint32_t point_count = 0;
  std::uint8_t fail_mask = 0;
};

// Inverse and trace lookup tables amortized over a sweep. The tables are
// filled through the Field operations themselves, so the sweep checks the
// same values, just without re-deriving them a few million times.
struct SweepContext {
  static constexpr unsigned kTableDegreeLimit = 16;

  explicit SweepContext(const Field& field) : f(field) {
    if (f.degree() <= kTableDegreeLimit) {
      const std::uint32_t q = f.order();
      inv_table.resize(q);
      trace_table.resize(q);
      trace_table[0] = 0;
      for (std::uint32_t w = 1; w < q; ++w) {
        inv_table[w] = f.inv(w);
        trace_table[w] = static_cast<std::uint8_t>(f.trace(w));
      }
    }
  }

  std::uint32_t inv(std::uint32_t a) const {
    return inv_table.empty() ? f.inv(a) : inv_table[a];
  }
  std::uint32_t trace(std::uint32_t w) const {
    return trace_table.empty() ? f.trace(w) : trace_table[w];
  }

  const Field& f;
  std::vector<std::uint32_t> inv_table;
  std::vector<std::uint8_t> trace_table;
};

// Ordered pair index p in [0, m(m-1)) -> value indices (i, j), j != i,
// ascending by (i, j).
std::pair<std::size_t, std::size_t> pair_at(std::uint64_t p, std::size_t m) {
  const std::size_t i = static_cast<std::size_t>(p / (m - 1));
  const std::size_t r = static_cast<std::size_t>(p % (m - 1));
  return {i, r + (r >= i ? 1 : 0)};
}

PairOutcome check_pair(const SweepContext& ctx, std::uint32_t alpha,
                       std::uint32_t beta, bool geometry) {
  const Field& f = ctx.f;
  PairOutcome out;
  const LinePairPencil lp(f, alpha, beta);
  out.gamma = f.mul(f.mul(alpha, beta), ctx.inv(alpha ^ beta));
  out.trace_value = ctx.trace(ctx.inv(f.square(out.gamma)));
  if (out.trace_value != 0) out.fail_mask |= kFailTrace;

  // Pencil member at the normalized third parameter (1 : alpha^2/beta^2);
  // it must be the third degenerate conic scaled by 1/beta^2, checked here
  // in multiplied-through form.
  const Conic c3 = lp.third_degenerate();
  const Conic c1 = lp.first_generator();
  const Conic c2 = lp.second_generator();
  const std::uint32_t sq_a = f.square(alpha);
  const std::uint32_t sq_b = f.square(beta);
  const std::uint32_t mu = f.mul(sq_a, ctx.inv(sq_b));
  for (std::size_t i = 0; i < 6; ++i) {
    const std::uint32_t member_i = c1[i] ^ f.mul(mu, c2[i]);
    if (f.mul(member_i, sq_b) != c3[i]) {
      out.fail_mask |= kFailParameter;
      break;
    }
  }

  if (geometry) {
    const Classification cls = classify(c3);
    out.verdict = static_cast<std::uint8_t>(cls.verdict);
    out.point_count = cls.point_count;
    if (cls.verdict != ConicClass::kRealLinePair ||
        cls.point_count != 2u * f.order() + 1u) {
      out.fail_mask |= kFailGeometry;
    }
  }
  return out;
}

bool generators_imaginary(const Field& f, std::uint32_t v) {
  const Classification a = classify(Conic(f, {1, 1, 0, v, 0, 0}));
  const Classification b = classify(Conic(f, {1, 0, 1, 0, v, 0}));
  return a.verdict == ConicClass::kImaginaryLinePair && a.point_count == 1 &&
         b.verdict == ConicClass::kImaginaryLinePair && b.point_count == 1;
}

std::string fail_reason(std::uint8_t mask) {
  if (mask & kFailTrace) return "trace(1/gamma^2) != 0";
  if (mask & kFailGeometry) {
    return "third degenerate member is not a real line pair with 2q+1 points";
  }
  return "pencil member at the third parameter does not match";
}

// Unbiased bounded draw; plain rejection keeps the stream portable.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = range * (std::numeric_limits<std::uint64_t>::max() / range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

std::vector<std::uint64_t> draw_samples(std::uint64_t count, std::uint64_t range,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(bounded_uniform(rng, range));
  return out;
}

VerificationReport run_verification(const Field& f, const VerifyOptions& opts,
                                    bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.n = f.degree();
  rep.modulus = f.modulus();
  rep.mode = opts.mode;
  rep.samples = opts.mode == VerifyMode::kSample ? opts.samples : 0;
  rep.seed = opts.mode == VerifyMode::kSample ? opts.seed : 0;
  rep.geometry = opts.check_geometry;

  const std::vector<std::uint32_t> values = admissible_values(f);
  const std::size_t m = values.size();
  rep.admissible_count = m;

  const std::uint64_t total = m >= 2 ? static_cast<std::uint64_t>(m) * (m - 1) : 0;
  std::vector<std::uint64_t> sampled;
  std::uint64_t pair_count = total;
  if (opts.mode == VerifyMode::kSample) {
    pair_count = total == 0 ? 0 : opts.samples;
    sampled = draw_samples(pair_count, std::max<std::uint64_t>(total, 1), opts.seed);
  }
  rep.ordered_pairs = pair_count;

  if (opts.check_geometry && pair_count > 0) {
    // Check each admissible value that participates in a checked pair:
    // its two generator conics must be imaginary line pairs.
    std::vector<char> participates(m, 0);
    if (opts.mode == VerifyMode::kExhaustive) {
      std::fill(participates.begin(), participates.end(), 1);
    } else {
      for (const auto p : sampled) {
        const auto [i, j] = pair_at(p, m);
        participates[i] = 1;
        participates[j] = 1;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (participates[i] && !generators_imaginary(f, values[i])) {
        ++rep.hypothesis_failures;
        if (!rep.first_counterexample) {
          rep.first_counterexample =
              Counterexample{0, values[i], values[i],
                             "generator does not classify as an imaginary line pair"};
        }
      }
    }
  }

  if (opts.collect_rows) rep.rows.resize(pair_count);

  const SweepContext ctx(f);
  std::uint64_t h0 = 0, h1 = 0, h2 = 0, h3 = 0;
  std::uint64_t falsifiers = 0, tfail = 0, gfail = 0, pfail = 0;
  std::uint64_t first_bad = std::numeric_limits<std::uint64_t>::max();
  const bool geometry = opts.check_geometry;
  PairRow* rows = opts.collect_rows ? rep.rows.data() : nullptr;
  const std::uint64_t* sample_index = sampled.empty() ? nullptr : sampled.data();
  const long long count = static_cast<long long>(pair_count);

#ifdef _OPENMP
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#else
  (void)parallel;
#endif

  const auto body = [&](long long idx, std::uint64_t& bh0, std::uint64_t& bh1,
                        std::uint64_t& bh2, std::uint64_t& bh3, std::uint64_t& bfals,
                        std::uint64_t& btf, std::uint64_t& bgf, std::uint64_t& bpf,
                        std::uint64_t& bfirst) {
    const std::uint64_t p = sample_index ? sample_index[idx] : static_cast<std::uint64_t>(idx);
    const auto [i, j] = pair_at(p, m);
    const std::uint32_t alpha = values[i];
    const std::uint32_t beta = values[j];
    const PairOutcome o = check_pair(ctx, alpha, beta, geometry);
    switch (o.verdict) {
      case 0: ++bh0; break;
      case 1: ++bh1; break;
      case 2: ++bh2; break;
      case 3: ++bh3; ++bfals; break;
      default: break;
    }
    if (o.fail_mask & kFailTrace) ++btf;
    if (o.fail_mask & kFailGeometry) ++bgf;
    if (o.fail_mask & kFailParameter) ++bpf;
    if (o.fail_mask != 0) bfirst = std::min(bfirst, static_cast<std::uint64_t>(idx));
    if (rows != nullptr) {
      rows[idx] = PairRow{alpha, beta, o.gamma, o.trace_value,
                          o.verdict == kNoVerdict
                              ? std::nullopt
                              : std::optional<ConicClass>(static_cast<ConicClass>(o.verdict)),
                          o.point_count};
    }
  };

#ifdef _OPENMP
  if (parallel && threads > 1 && count > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) \
    reduction(+ : h0, h1, h2, h3, falsifiers, tfail, gfail, pfail) \
    reduction(min : first_bad)
    for (long long idx = 0; idx < count; ++idx) {
      body(idx, h0, h1, h2, h3, falsifiers, tfail, gfail, pfail, first_bad);
    }
  } else {
    for (long long idx = 0; idx < count; ++idx) {
      body(idx, h0, h1, h2, h3, falsifiers, tfail, gfail, pfail, first_bad);
    }
  }
#else
  for (long long idx = 0; idx < count; ++idx) {
    body(idx, h0, h1, h2, h3, falsifiers, tfail, gfail, pfail, first_bad);
  }
#endif

  rep.verdict_histogram = {h0, h1, h2, h3};
  rep.falsifier_count = falsifiers;
  rep.trace_failures = tfail;
  rep.geometry_failures = gfail;
  rep.parameter_failures = pfail;

  if (first_bad != std::numeric_limits<std::uint64_t>::max() &&
      !rep.first_counterexample) {
    const std::uint64_t p = sample_index ? sample_index[first_bad] : first_bad;
    const auto [i, j] = pair_at(p, m);
    const PairOutcome o = check_pair(ctx, values[i], values[j], geometry);
    rep.first_counterexample =
        Counterexample{first_bad, values[i], values[j], fail_reason(o.fail_mask)};
  }

  if (opts.mode == VerifyMode::kSample) {
    // Distinct unordered pairs among the sample.
    std::vector<std::uint64_t> keys;
    keys.reserve(sampled.size());
    for (const auto p : sampled) {
      const auto [i, j] = pair_at(p, m);
      const std::uint64_t lo = std::min(i, j);
      const std::uint64_t hi = std::max(i, j);
      keys.push_back(lo * m + hi);
    }
    std::sort(keys.begin(), keys.end());
    rep.unordered_pairs = static_cast<std::uint64_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
  } else {
    rep.unordered_pairs = total / 2;
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

VerifyStatus VerificationReport::status() const {
  if (falsifier_count != 0 || trace_failures != 0 || geometry_failures != 0 ||
      parameter_failures != 0 || hypothesis_failures != 0) {
    return VerifyStatus::kFail;
  }
  return ordered_pairs == 0 ? VerifyStatus::kVacuousPass : VerifyStatus::kPass;
}

VerificationReport verify_pencils(const Field& field, const VerifyOptions& options) {
  return run_verification(field, options, options.jobs != 1);
}

VerificationReport verify_pencils_serial(const Field& field,
                                         const VerifyOptions& options) {
  return run_verification(field, options, false);
}

bool reports_match(const VerificationReport& a, const VerificationReport& b) {
  const auto cx_equal = [](const std::optional<Counterexample>& x,
                           const std::optional<Counterexample>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->pair_index == y->pair_index && x->alpha == y->alpha &&
           x->beta == y->beta && x->reason == y->reason;
  };
  const auto row_equal = [](const PairRow& x, const PairRow& y) {
    return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma &&
           x.trace_value == y.trace_value && x.verdict == y.verdict &&
           x.point_count == y.point_count;
  };
  if (!(a.n == b.n && a.modulus == b.modulus && a.mode == b.mode &&
        a.samples == b.samples && a.seed == b.seed && a.geometry == b.geometry &&
        a.admissible_count == b.admissible_count &&
        a.ordered_pairs == b.ordered_pairs &&
        a.unordered_pairs == b.unordered_pairs &&
        a.verdict_histogram == b.verdict_histogram &&
        a.falsifier_count == b.falsifier_count &&
        a.trace_failures == b.trace_failures &&
        a.geometry_failures == b.geometry_failures &&
        a.parameter_failures == b.parameter_failures &&
        a.hypothesis_failures == b.hypothesis_failures &&
        cx_equal(a.first_counterexample, b.first_counterexample) &&
        a.rows.size() == b.rows.size())) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (!row_equal(a.rows[i], b.rows[i])) return false;
  }
  return true;
}

std::string to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kPass: return "pass";
    case VerifyStatus::kFail: return "fail";
    case VerifyStatus::kVacuousPass: return "vacuous_pass";
  }
  return "unknown";
}

}  // namespace gf2conics
