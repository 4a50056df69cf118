// Acceptance suite: every check is exact (characteristic-2 arithmetic has no
// tolerances). Prints one PASS/FAIL line per criterion; exits nonzero when
// any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gf2conics/binquad.hpp"
#include "gf2conics/cli.hpp"
#include "gf2conics/pencil.hpp"

using namespace gf2conics;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << " " << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "  [" << secs << "s]" << std::endl;
  if (!ok) ++failures;
}

std::string show_pair(unsigned n, std::uint32_t a, std::uint32_t b) {
  return "n=" + std::to_string(n) + " alpha=" + to_hex(a) + " beta=" + to_hex(b);
}

// Exhaustive verification reports with geometry, cached for the criteria
// that read different aspects of the same sweep.
std::vector<VerificationReport> geometry_reports;  // n = 2..8

}  // namespace

int main() {
  // Main theorem: trace(1/gamma^2) = 0 for every admissible ordered pair,
  // n = 2..12, default moduli. Exact equality, zero failures allowed.
  criterion("main-theorem-trace-identity", [](std::string& detail) {
    for (unsigned n = 2; n <= 12; ++n) {
      const Field f(n);
      VerifyOptions opts;
      opts.check_geometry = false;
      const auto rep = verify_pencils(f, opts);
      const std::uint64_t m = f.order() / 2;
      if (rep.admissible_count != m || rep.ordered_pairs != m * (m - 1)) {
        detail = "n=" + std::to_string(n) + ": admissible pair count wrong";
        return false;
      }
      if (rep.trace_failures != 0 || rep.parameter_failures != 0) {
        detail = rep.first_counterexample
                     ? show_pair(n, rep.first_counterexample->alpha,
                                 rep.first_counterexample->beta)
                     : "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  // Geometric refutation: the third degenerate member is a real line pair
  // with exactly 2q+1 points for every admissible pair, n = 2..8, and no
  // pair classifies it as an imaginary line pair.
  criterion("geometric-refutation", [](std::string& detail) {
    for (unsigned n = 2; n <= 8; ++n) {
      const Field f(n);
      const auto rep = verify_pencils(f);
      geometry_reports.push_back(rep);
      const std::size_t real =
          static_cast<std::size_t>(ConicClass::kRealLinePair);
      if (rep.falsifier_count != 0 || rep.geometry_failures != 0 ||
          rep.verdict_histogram[real] != rep.ordered_pairs) {
        detail = rep.first_counterexample
                     ? show_pair(n, rep.first_counterexample->alpha,
                                 rep.first_counterexample->beta)
                     : "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  // Hypothesis consistency: under the same sweep, both generators classify
  // as imaginary line pairs with exactly one point.
  criterion("hypothesis-consistency", [](std::string& detail) {
    if (geometry_reports.empty()) {
      detail = "geometry sweep unavailable";
      return false;
    }
    for (const auto& rep : geometry_reports) {
      if (rep.hypothesis_failures != 0) {
        detail = "n=" + std::to_string(rep.n);
        return false;
      }
    }
    // direct spot re-check, independent of the sweep kernel
    for (unsigned n = 2; n <= 8; ++n) {
      const Field f(n);
      for (const auto v : admissible_values(f)) {
        const auto c1 = classify(Conic(f, {1, 1, 0, v, 0, 0}));
        const auto c2 = classify(Conic(f, {1, 0, 1, 0, v, 0}));
        if (c1.verdict != ConicClass::kImaginaryLinePair || c1.point_count != 1 ||
            c2.verdict != ConicClass::kImaginaryLinePair || c2.point_count != 1) {
          detail = "n=" + std::to_string(n) + " value=" + to_hex(v);
          return false;
        }
      }
    }
    return true;
  });

  // Criterion/oracle equivalence: the trace criterion agrees with the
  // brute-force factor scan for every nonzero theta, n = 2..8, and the
  // irreducible count is exactly 2^(n-1).
  criterion("criterion-oracle-agreement", [](std::string& detail) {
    for (unsigned n = 2; n <= 8; ++n) {
      const Field f(n);
      std::uint64_t irreducible = 0;
      for (std::uint32_t theta = 1; theta < f.order(); ++theta) {
        const BinaryQuadraticForm form(f, theta);
        const bool criterion_says = is_irreducible(form);
        const auto scanned = brute_force_factor(form);
        if (criterion_says != !scanned.has_value()) {
          detail = "n=" + std::to_string(n) + " theta=" + to_hex(theta);
          return false;
        }
        if (scanned) {
          if ((scanned->a ^ scanned->b) != theta ||
              f.mul(scanned->a, scanned->b) != 1) {
            detail = "bad factor pair at theta=" + to_hex(theta);
            return false;
          }
        } else {
          ++irreducible;
        }
      }
      if (irreducible != f.order() / 2) {
        detail = "n=" + std::to_string(n) + ": irreducible count " +
                 std::to_string(irreducible);
        return false;
      }
    }
    return true;
  });

  // Trace laws: additivity of trace and squaring, exhaustive over all pairs
  // for n <= 8 and 10^5 random pairs for each n = 9..16; trace values lie in
  // {0,1} with a balanced preimage, exhaustive for n <= 12.
  criterion("trace-laws", [](std::string& detail) {
    for (unsigned n = 1; n <= 8; ++n) {
      const Field f(n);
      for (std::uint32_t a = 0; a < f.order(); ++a) {
        for (std::uint32_t b = 0; b < f.order(); ++b) {
          if (f.square(a ^ b) != (f.square(a) ^ f.square(b)) ||
              f.trace(a ^ b) != (f.trace(a) ^ f.trace(b))) {
            detail = "n=" + std::to_string(n) + " a=" + to_hex(a) + " b=" + to_hex(b);
            return false;
          }
        }
      }
    }
    std::mt19937_64 rng(20240908);
    for (unsigned n = 9; n <= 16; ++n) {
      const Field f(n);
      for (int i = 0; i < 100000; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng()) % f.order();
        const std::uint32_t b = static_cast<std::uint32_t>(rng()) % f.order();
        if (f.square(a ^ b) != (f.square(a) ^ f.square(b)) ||
            f.trace(a ^ b) != (f.trace(a) ^ f.trace(b))) {
          detail = "n=" + std::to_string(n) + " a=" + to_hex(a) + " b=" + to_hex(b);
          return false;
        }
      }
    }
    for (unsigned n = 1; n <= 12; ++n) {
      const Field f(n);
      std::uint64_t zeros = 0;
      for (std::uint32_t w = 0; w < f.order(); ++w) {
        const std::uint32_t t = f.trace(w);
        if (t > 1) {
          detail = "trace outside {0,1} at n=" + std::to_string(n);
          return false;
        }
        if (t == 0) ++zeros;
      }
      if (zeros != f.order() / 2) {
        detail = "n=" + std::to_string(n) + ": trace-0 count " + std::to_string(zeros);
        return false;
      }
    }
    return true;
  });

  // Canonical transform: for every admissible pair with n <= 8, the
  // substitution matrix is invertible and sends the scaled third
  // degenerate to exactly (1, 1, 0, gamma, 0, 0).
  criterion("canonical-transform", [](std::string& detail) {
    for (unsigned n = 2; n <= 8; ++n) {
      const Field f(n);
      for (const auto& [a, b] : admissible_pairs(f)) {
        const LinePairPencil lp(f, a, b);
        const Transform t = lp.canonical_transform();
        if (t.determinant() == 0) {
          detail = show_pair(n, a, b) + ": singular transform";
          return false;
        }
        const std::uint32_t s = f.inv(f.square(a ^ b));
        const Conic image = apply_transform(scale(lp.third_degenerate(), s), t);
        if (!(image == Conic(f, {1, 1, 0, lp.gamma(), 0, 0}))) {
          detail = show_pair(n, a, b);
          return false;
        }
      }
    }
    return true;
  });

  // Pencil structure: for n <= 6 the pencil has exactly three degenerate
  // members, at (1:0), (0:1), and the normalized (beta^2 : alpha^2).
  criterion("pencil-structure", [](std::string& detail) {
    for (unsigned n = 2; n <= 6; ++n) {
      const Field f(n);
      for (const auto& [a, b] : admissible_pairs(f)) {
        const LinePairPencil lp(f, a, b);
        const auto members = lp.pencil().degenerate_members();
        std::set<std::pair<std::uint32_t, std::uint32_t>> got;
        for (const auto& [p, cls] : members) got.insert({p.lambda, p.mu});
        const auto third = lp.third_parameter();
        const std::set<std::pair<std::uint32_t, std::uint32_t>> expected{
            {1, 0}, {0, 1}, {third.lambda, third.mu}};
        if (members.size() != 3 || got != expected) {
          detail = show_pair(n, a, b);
          return false;
        }
      }
    }
    return true;
  });

  // Artin-Schreier solver: t^2 + t = c is solvable exactly when
  // trace(c) = 0, solutions verify exactly, and 2^(n-1) values are
  // solvable, for n <= 10.
  criterion("artin-schreier-solver", [](std::string& detail) {
    for (unsigned n = 1; n <= 10; ++n) {
      const Field f(n);
      std::uint64_t solvable = 0;
      for (std::uint32_t c = 0; c < f.order(); ++c) {
        const auto t = f.solve_artin_schreier(c);
        if (t.has_value() != (f.trace(c) == 0)) {
          detail = "n=" + std::to_string(n) + " c=" + to_hex(c);
          return false;
        }
        if (t) {
          if ((f.square(*t) ^ *t) != c) {
            detail = "bad solution at n=" + std::to_string(n) + " c=" + to_hex(c);
            return false;
          }
          ++solvable;
        }
      }
      if (solvable != f.order() / 2) {
        detail = "n=" + std::to_string(n) + ": solvable count " +
                 std::to_string(solvable);
        return false;
      }
    }
    return true;
  });

  // Modulus independence: repeating the full n = 3 sweep with the other
  // irreducible cubic yields identical pair counts, verdict histogram,
  // and a falsifier count of zero.
  criterion("modulus-independence", [](std::string& detail) {
    const auto with_default = verify_pencils(Field(3));
    const auto with_other = verify_pencils(Field(3, 0xd));
    if (with_other.modulus != 0xd) {
      detail = "alternative modulus not applied";
      return false;
    }
    if (with_default.ordered_pairs != with_other.ordered_pairs ||
        with_default.unordered_pairs != with_other.unordered_pairs ||
        with_default.admissible_count != with_other.admissible_count ||
        with_default.verdict_histogram != with_other.verdict_histogram ||
        with_default.falsifier_count != with_other.falsifier_count ||
        with_other.falsifier_count != 0) {
      detail = "reports diverge between moduli";
      return false;
    }
    return true;
  });

  // CLI determinism: the same verify-note invocation twice produces
  // byte-identical csv and exit code 0.
  criterion("cli-determinism", [](std::string& detail) {
    const std::vector<std::string> args = {"verify-note", "--n", "3",
                                           "--exhaustive", "--format", "csv"};
    std::ostringstream out1, err1, out2, err2;
    const int code1 = run_cli(args, out1, err1);
    const int code2 = run_cli(args, out2, err2);
    if (code1 != 0 || code2 != 0) {
      detail = "exit codes " + std::to_string(code1) + "," + std::to_string(code2);
      return false;
    }
    if (out1.str() != out2.str()) {
      detail = "outputs differ";
      return false;
    }
    if (out1.str().empty() || !err1.str().empty()) {
      detail = "unexpected stream contents";
      return false;
    }
    return true;
  });

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
