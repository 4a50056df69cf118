#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2conics/pg2.hpp"

namespace gf2conics {

/// Pencil parameter (lambda : mu), normalized so lambda = 1, or (0 : 1).
struct PencilParameter {
  std::uint32_t lambda;
  std::uint32_t mu;

  static PencilParameter make(const Field& field, std::uint32_t lambda,
                              std::uint32_t mu);

  friend bool operator==(const PencilParameter&, const PencilParameter&) = default;
};

std::string to_string(const PencilParameter& p);  // lambda:mu, lowercase hex

/// The pencil lambda*C1 + mu*C2 spanned by two non-proportional conics.
class Pencil {
 public:
  Pencil(const Conic& c1, const Conic& c2);

  const Field& field() const { return c1_.field(); }
  const Conic& c1() const { return c1_; }
  const Conic& c2() const { return c2_; }

  /// Raw linear combination, no parameter normalization.
  Conic combine(std::uint32_t lambda, std::uint32_t mu) const;

  Conic member(const PencilParameter& p) const;

  /// The q+1 normalized parameters: (1:t) for t ascending, then (0:1).
  std::vector<PencilParameter> parameters() const;

  /// Members whose verdict is not nondegenerate, in parameter order.
  std::vector<std::pair<PencilParameter, Classification>> degenerate_members() const;

 private:
  Conic c1_;
  Conic c2_;
};

/// The two-parameter pencil spanned by
///   C1 = x^2 + y^2 + alpha*xy   and   C2 = x^2 + z^2 + beta*xz
/// with alpha*beta != 0, alpha != beta. When both generators are
/// irreducible forms (the admissible case) they are conjugate imaginary
/// line pairs and the pencil's third degenerate member has a closed form.
class LinePairPencil {
 public:
  LinePairPencil(const Field& field, std::uint32_t alpha, std::uint32_t beta);

  const Field& field() const { return field_; }
  std::uint32_t alpha() const { return alpha_; }
  std::uint32_t beta() const { return beta_; }

  /// trace(1/alpha^2) = 1 and trace(1/beta^2) = 1.
  bool admissible() const;

  Conic first_generator() const;   // (1, 1, 0, alpha, 0, 0)
  Conic second_generator() const;  // (1, 0, 1, 0, beta, 0)

  /// The third degenerate member:
  ///   (alpha^2 + beta^2, beta^2, alpha^2, alpha*beta^2, alpha^2*beta, 0).
  Conic third_degenerate() const;

  /// Its pencil parameter, the normalized form of (beta^2 : alpha^2).
  PencilParameter third_parameter() const;

  /// gamma = alpha*beta / (alpha + beta); always nonzero.
  std::uint32_t gamma() const;

  /// The substitution x' = x, y' = (beta*y + alpha*z)/(alpha+beta),
  /// z' = (alpha*y + beta*z)/(alpha+beta). Always invertible; sends the
  /// (alpha+beta)^-2 scaled third degenerate to (1, 1, 0, gamma, 0, 0).
  Transform canonical_transform() const;

  Pencil pencil() const;

 private:
  Field field_;
  std::uint32_t alpha_;
  std::uint32_t beta_;
};

/// Exact identity 1/gamma^2 = 1/alpha^2 + 1/beta^2; true on every valid
/// input (assertion utility). Throws on alpha = beta or alpha*beta = 0.
bool gamma_identity_holds(const Field& field, std::uint32_t alpha, std::uint32_t beta);

/// The nonzero values with trace(1/a^2) = 1, ascending; always 2^(n-1) of them.
std::vector<std::uint32_t> admissible_values(const Field& field);

/// Ordered admissible pairs (alpha, beta), alpha != beta, ascending by
/// (alpha, beta). Length m(m-1) with m = 2^(n-1).
std::vector<std::pair<std::uint32_t, std::uint32_t>> admissible_pairs(const Field& field);

// ---------------------------------------------------------------------------
// Pencil verification sweep
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultSeed = 12345;

enum class VerifyMode { kExhaustive, kSample };
enum class VerifyStatus { kPass, kFail, kVacuousPass };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t samples = 0;   // number of sampled ordered pairs (kSample)
  std::uint64_t seed = kDefaultSeed;
  bool check_geometry = true;  // classify members; off = trace checks only
  bool collect_rows = false;   // keep one row per checked pair
  int jobs = 0;                // worker count; 0 = all cores, 1 = serial
};

struct PairRow {
  std::uint32_t alpha;
  std::uint32_t beta;
  std::uint32_t gamma;
  std::uint32_t trace_value;                // trace(1/gamma^2)
  std::optional<ConicClass> verdict;        // third degenerate, when checked
  std::uint32_t point_count;                // 0 when geometry is skipped
};

struct Counterexample {
  std::uint64_t pair_index;
  std::uint32_t alpha;
  std::uint32_t beta;
  std::string reason;
};

/// Outcome of a sweep over admissible pairs. Every count is a deterministic
/// function of (field, options) regardless of worker count.
struct VerificationReport {
  unsigned n = 0;
  std::uint32_t modulus = 0;
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool geometry = true;

  std::uint64_t admissible_count = 0;
  std::uint64_t ordered_pairs = 0;    // pairs checked
  std::uint64_t unordered_pairs = 0;  // distinct unordered among them

  // Indexed by ConicClass; verdicts of the third degenerate member.
  std::array<std::uint64_t, 4> verdict_histogram{};
  std::uint64_t falsifier_count = 0;     // third member imaginary line pair
  std::uint64_t trace_failures = 0;      // trace(1/gamma^2) != 0
  std::uint64_t geometry_failures = 0;   // not a real pair with 2q+1 points
  std::uint64_t parameter_failures = 0;  // member at third parameter differs
  std::uint64_t hypothesis_failures = 0; // a generator not imaginary

  std::optional<Counterexample> first_counterexample;
  double elapsed_seconds = 0.0;
  std::vector<PairRow> rows;  // filled when collect_rows

  VerifyStatus status() const;
};

/// For every admissible ordered pair (exhaustive) or a seeded sample:
/// checks trace(1/gamma^2) = 0, classifies the third degenerate member
/// (expecting a real line pair with 2q+1 points), checks that the pencil
/// member at the third parameter matches it, and checks that both
/// generators classify as imaginary line pairs. Runs the OpenMP kernel
/// when more than one worker is available.
VerificationReport verify_pencils(const Field& field, const VerifyOptions& options = {});

/// Reference kernel: plain single-threaded loop. Produces a report
/// identical to verify_pencils (elapsed time aside).
VerificationReport verify_pencils_serial(const Field& field,
                                         const VerifyOptions& options = {});

/// Report equality ignoring elapsed time.
bool reports_match(const VerificationReport& a, const VerificationReport& b);

std::string to_string(VerifyStatus status);

}  // namespace gf2conics
