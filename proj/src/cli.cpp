#include "gf2conics/cli.hpp"

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gf2conics/pencil.hpp"
#include "gf2conics/pg2.hpp"

namespace gf2conics {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { kTable, kCsv, kJson };

Format parse_format(const std::string& name) {
  if (name == "table") return Format::kTable;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown format: " + name);
}

struct FieldArgs {
  unsigned n = 0;
  std::string modulus;
  std::string format = "table";
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;
};

void add_field_options(CLI::App* cmd, FieldArgs* args) {
  cmd->add_option("--n", args->n, "field extension degree (1..24)")->required();
  cmd->add_option("--modulus", args->modulus,
                  "irreducible modulus as hex bit vector (default: built-in table)");
  cmd->add_option("--format", args->format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->default_str("table");
  cmd->add_option("--seed", args->seed, "sampling seed (verify-note --samples)");
  cmd->add_option("--jobs", args->jobs, "worker count for verify-note (0 = all cores)");
}

Field make_field(const FieldArgs& args) {
  if (args.modulus.empty()) return Field(args.n);
  const auto m = parse_hex(args.modulus);
  if (!m) throw std::invalid_argument("invalid modulus hex: " + args.modulus);
  return Field(args.n, *m);
}

std::string modulus_str(const Field& f) { return "0x" + to_hex(f.modulus()); }

ordered_json field_json(const Field& f) {
  return ordered_json{{"n", f.degree()}, {"modulus", modulus_str(f)}};
}

std::uint32_t parse_element(const Field& f, const std::string& text,
                            const std::string& what) {
  const auto v = parse_hex(text);
  if (!v || *v >= f.order()) {
    throw std::invalid_argument("invalid " + what + ": " + text);
  }
  return *v;
}

// ---- trace-table -----------------------------------------------------------

int cmd_trace_table(const Field& f, Format fmt, std::ostream& out) {
  const std::uint32_t q = f.order();
  std::uint64_t zeros = 0;
  std::vector<std::uint32_t> traces(q);
  for (std::uint32_t w = 0; w < q; ++w) {
    traces[w] = f.trace(w);
    if (traces[w] == 0) ++zeros;
  }
  const std::uint64_t ones = q - zeros;

  switch (fmt) {
    case Format::kTable:
      out << "w\tD(w)\n";
      for (std::uint32_t w = 0; w < q; ++w) {
        out << to_hex(w) << "\t" << traces[w] << "\n";
      }
      out << "trace 0: " << zeros << "\n";
      out << "trace 1: " << ones << "\n";
      break;
    case Format::kCsv:
      out << "w,trace\n";
      for (std::uint32_t w = 0; w < q; ++w) {
        out << to_hex(w) << "," << traces[w] << "\n";
      }
      out << "# trace0=" << zeros << ",trace1=" << ones << "\n";
      break;
    case Format::kJson: {
      ordered_json j;
      j["schema_version"] = 1;
      j["command"] = "trace-table";
      j["field"] = field_json(f);
      auto rows = ordered_json::array();
      for (std::uint32_t w = 0; w < q; ++w) {
        rows.push_back(ordered_json{{"w", to_hex(w)}, {"trace", traces[w]}});
      }
      j["rows"] = std::move(rows);
      j["trace_zero_count"] = zeros;
      j["trace_one_count"] = ones;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

// ---- classify --------------------------------------------------------------

int cmd_classify(const Field& f, const std::string& conic_text, Format fmt,
                 std::ostream& out) {
  const auto conic = parse_conic(f, conic_text);
  if (!conic) {
    throw std::invalid_argument(
        "invalid conic: expected six comma-separated hex coefficients");
  }
  const Classification cls = classify(*conic);

  switch (fmt) {
    case Format::kTable:
      out << "verdict: " << to_string(cls.verdict) << "\n";
      out << "points: " << cls.point_count << "\n";
      if (cls.vertex) out << "vertex: " << to_string(*cls.vertex) << "\n";
      if (cls.line) out << "line: " << to_string(*cls.line) << "\n";
      if (cls.lines) {
        out << "line1: " << to_string(cls.lines->first) << "\n";
        out << "line2: " << to_string(cls.lines->second) << "\n";
      }
      break;
    case Format::kCsv:
      out << "verdict,point_count,vertex,line1,line2\n";
      out << to_string(cls.verdict) << "," << cls.point_count << ",";
      out << (cls.vertex ? to_string(*cls.vertex) : "") << ",";
      if (cls.lines) {
        out << to_string(cls.lines->first) << "," << to_string(cls.lines->second);
      } else if (cls.line) {
        out << to_string(*cls.line) << ",";
      } else {
        out << ",";
      }
      out << "\n";
      break;
    case Format::kJson: {
      ordered_json j;
      j["schema_version"] = 1;
      j["command"] = "classify";
      j["field"] = field_json(f);
      j["conic"] = to_string(*conic);
      j["verdict"] = to_string(cls.verdict);
      j["point_count"] = cls.point_count;
      if (cls.vertex) j["vertex"] = to_string(*cls.vertex);
      if (cls.line) j["line"] = to_string(*cls.line);
      if (cls.lines) {
        j["lines"] = ordered_json::array(
            {to_string(cls.lines->first), to_string(cls.lines->second)});
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

// ---- pencil-scan -----------------------------------------------------------

int cmd_pencil_scan(const Field& f, std::uint32_t alpha, std::uint32_t beta,
                    Format fmt, std::ostream& out) {
  const LinePairPencil lp(f, alpha, beta);
  const Pencil pencil = lp.pencil();

  struct Row {
    PencilParameter parameter;
    Conic member;
    Classification cls;
  };
  std::vector<Row> scan;
  std::uint64_t degenerate = 0;
  for (const auto& p : pencil.parameters()) {
    Conic member = pencil.member(p);
    Classification cls = classify(member);
    if (cls.verdict != ConicClass::kNondegenerate) ++degenerate;
    scan.push_back(Row{p, std::move(member), std::move(cls)});
  }

  switch (fmt) {
    case Format::kTable:
      out << "parameter\tconic\tverdict\tpoints\tdegenerate\n";
      for (const auto& row : scan) {
        out << to_string(row.parameter) << "\t" << to_string(row.member) << "\t"
            << to_string(row.cls.verdict) << "\t" << row.cls.point_count << "\t"
            << (row.cls.verdict != ConicClass::kNondegenerate ? "yes" : "no")
            << "\n";
      }
      out << "degenerate members: " << degenerate << "\n";
      break;
    case Format::kCsv:
      out << "lambda,mu,a_xx,a_yy,a_zz,a_xy,a_xz,a_yz,verdict,point_count,degenerate\n";
      for (const auto& row : scan) {
        out << to_hex(row.parameter.lambda) << "," << to_hex(row.parameter.mu)
            << "," << to_string(row.member) << "," << to_string(row.cls.verdict)
            << "," << row.cls.point_count << ","
            << (row.cls.verdict != ConicClass::kNondegenerate ? 1 : 0) << "\n";
      }
      break;
    case Format::kJson: {
      ordered_json j;
      j["schema_version"] = 1;
      j["command"] = "pencil-scan";
      j["field"] = field_json(f);
      j["alpha"] = to_hex(alpha);
      j["beta"] = to_hex(beta);
      j["admissible"] = lp.admissible();
      auto rows = ordered_json::array();
      for (const auto& row : scan) {
        rows.push_back(ordered_json{
            {"parameter", to_string(row.parameter)},
            {"conic", to_string(row.member)},
            {"verdict", to_string(row.cls.verdict)},
            {"point_count", row.cls.point_count},
            {"degenerate", row.cls.verdict != ConicClass::kNondegenerate},
        });
      }
      j["rows"] = std::move(rows);
      j["degenerate_count"] = degenerate;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

// ---- verify-note -----------------------------------------------------------

const char* verdict_names[4] = {"nondegenerate", "real_line_pair",
                                "repeated_line", "imaginary_line_pair"};

std::string row_verdict(const PairRow& row) {
  return row.verdict ? to_string(*row.verdict) : std::string();
}

void render_verify_table(const VerificationReport& rep, bool per_pair,
                         std::ostream& out) {
  if (per_pair) {
    out << "alpha\tbeta\tgamma\tD(1/gamma^2)\tverdict\tpoints\n";
    for (const auto& row : rep.rows) {
      out << to_hex(row.alpha) << "\t" << to_hex(row.beta) << "\t"
          << to_hex(row.gamma) << "\t" << row.trace_value << "\t"
          << (row.verdict ? to_string(*row.verdict) : "-") << "\t";
      if (row.verdict) {
        out << row.point_count;
      } else {
        out << "-";
      }
      out << "\n";
    }
    out << "\n";
  }
  out << "field: GF(2^" << rep.n << "), modulus " << "0x" << to_hex(rep.modulus)
      << "\n";
  out << "mode: "
      << (rep.mode == VerifyMode::kExhaustive ? "exhaustive" : "sample") << "\n";
  if (rep.mode == VerifyMode::kSample) {
    out << "samples: " << rep.samples << "\n";
    out << "seed: " << rep.seed << "\n";
  }
  out << "geometry: " << (rep.geometry ? "on" : "off") << "\n";
  out << "admissible values: " << rep.admissible_count << "\n";
  out << "ordered pairs: " << rep.ordered_pairs << " (" << rep.unordered_pairs
      << " unordered)\n";
  out << "verdicts:";
  for (std::size_t i = 0; i < 4; ++i) {
    out << " " << verdict_names[i] << "=" << rep.verdict_histogram[i];
  }
  out << "\n";
  out << "falsifiers: " << rep.falsifier_count << "\n";
  out << "failures: trace=" << rep.trace_failures
      << " geometry=" << rep.geometry_failures
      << " parameter=" << rep.parameter_failures
      << " hypothesis=" << rep.hypothesis_failures << "\n";
  if (rep.first_counterexample) {
    const auto& cx = *rep.first_counterexample;
    out << "counterexample: alpha=" << to_hex(cx.alpha)
        << " beta=" << to_hex(cx.beta) << " (" << cx.reason << ")\n";
  }
  if (rep.status() == VerifyStatus::kVacuousPass) {
    out << "status: vacuous pass (no admissible pairs)\n";
  } else {
    out << "status: " << to_string(rep.status()) << "\n";
  }
  out << std::setprecision(3) << std::fixed;
  out << "elapsed: " << rep.elapsed_seconds << "s\n";
}

void render_verify_csv(const VerificationReport& rep, bool per_pair,
                       std::ostream& out) {
  if (per_pair) {
    out << "alpha,beta,gamma,trace_inv_gamma_sq,verdict,point_count\n";
    for (const auto& row : rep.rows) {
      out << to_hex(row.alpha) << "," << to_hex(row.beta) << ","
          << to_hex(row.gamma) << "," << row.trace_value << ","
          << row_verdict(row) << ",";
      if (row.verdict) out << row.point_count;
      out << "\n";
    }
    return;
  }
  out << "n,modulus,mode,samples,seed,geometry,admissible,ordered_pairs,"
         "unordered_pairs,nondegenerate,real_line_pair,repeated_line,"
         "imaginary_line_pair,falsifiers,trace_failures,geometry_failures,"
         "parameter_failures,hypothesis_failures,status\n";
  out << rep.n << ",0x" << to_hex(rep.modulus) << ","
      << (rep.mode == VerifyMode::kExhaustive ? "exhaustive" : "sample") << ",";
  if (rep.mode == VerifyMode::kSample) {
    out << rep.samples << "," << rep.seed << ",";
  } else {
    out << ",,";
  }
  out << (rep.geometry ? 1 : 0) << "," << rep.admissible_count << ","
      << rep.ordered_pairs << "," << rep.unordered_pairs;
  for (std::size_t i = 0; i < 4; ++i) out << "," << rep.verdict_histogram[i];
  out << "," << rep.falsifier_count << "," << rep.trace_failures << ","
      << rep.geometry_failures << "," << rep.parameter_failures << ","
      << rep.hypothesis_failures << "," << to_string(rep.status()) << "\n";
}

void render_verify_json(const VerificationReport& rep, bool per_pair,
                        std::ostream& out) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = "verify-note";
  j["field"] = ordered_json{{"n", rep.n}, {"modulus", "0x" + to_hex(rep.modulus)}};
  j["mode"] = rep.mode == VerifyMode::kExhaustive ? "exhaustive" : "sample";
  if (rep.mode == VerifyMode::kSample) {
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
  }
  j["geometry"] = rep.geometry;
  j["admissible_count"] = rep.admissible_count;
  j["ordered_pairs"] = rep.ordered_pairs;
  j["unordered_pairs"] = rep.unordered_pairs;
  ordered_json hist;
  for (std::size_t i = 0; i < 4; ++i) hist[verdict_names[i]] = rep.verdict_histogram[i];
  j["verdict_histogram"] = std::move(hist);
  j["falsifier_count"] = rep.falsifier_count;
  j["trace_failures"] = rep.trace_failures;
  j["geometry_failures"] = rep.geometry_failures;
  j["parameter_failures"] = rep.parameter_failures;
  j["hypothesis_failures"] = rep.hypothesis_failures;
  if (rep.first_counterexample) {
    const auto& cx = *rep.first_counterexample;
    j["first_counterexample"] = ordered_json{{"pair_index", cx.pair_index},
                                             {"alpha", to_hex(cx.alpha)},
                                             {"beta", to_hex(cx.beta)},
                                             {"reason", cx.reason}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  j["status"] = to_string(rep.status());
  if (per_pair) {
    auto rows = ordered_json::array();
    for (const auto& row : rep.rows) {
      ordered_json r;
      r["alpha"] = to_hex(row.alpha);
      r["beta"] = to_hex(row.beta);
      r["gamma"] = to_hex(row.gamma);
      r["trace_inv_gamma_sq"] = row.trace_value;
      if (row.verdict) {
        r["verdict"] = to_string(*row.verdict);
        r["point_count"] = row.point_count;
      } else {
        r["verdict"] = nullptr;
        r["point_count"] = nullptr;
      }
      rows.push_back(std::move(r));
    }
    j["pairs"] = std::move(rows);
  }
  out << j.dump(2) << "\n";
}

int cmd_verify_note(const Field& f, const VerifyOptions& opts, bool per_pair,
                    Format fmt, std::ostream& out) {
  VerifyOptions options = opts;
  options.collect_rows = per_pair;
  const VerificationReport rep = verify_pencils(f, options);
  switch (fmt) {
    case Format::kTable: render_verify_table(rep, per_pair, out); break;
    case Format::kCsv: render_verify_csv(rep, per_pair, out); break;
    case Format::kJson: render_verify_json(rep, per_pair, out); break;
  }
  return rep.status() == VerifyStatus::kFail ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact conics and pencils of conics over binary fields GF(2^n)"};
  app.name("gf2conics");
  app.require_subcommand(1);

  FieldArgs trace_args;
  auto* trace_cmd = app.add_subcommand(
      "trace-table", "print the absolute trace D(w) of every field element");
  add_field_options(trace_cmd, &trace_args);

  FieldArgs classify_args;
  std::string conic_text;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify a conic given its coefficients");
  add_field_options(classify_cmd, &classify_args);
  classify_cmd
      ->add_option("--conic", conic_text,
                   "six comma-separated hex coefficients: a_xx,a_yy,a_zz,a_xy,a_xz,a_yz")
      ->required();

  FieldArgs scan_args;
  std::string alpha_text, beta_text;
  auto* scan_cmd = app.add_subcommand(
      "pencil-scan",
      "classify every member of the pencil spanned by x^2+y^2+alpha*xy and "
      "x^2+z^2+beta*xz");
  add_field_options(scan_cmd, &scan_args);
  scan_cmd->add_option("--alpha", alpha_text, "pencil parameter alpha (hex)")->required();
  scan_cmd->add_option("--beta", beta_text, "pencil parameter beta (hex)")->required();

  FieldArgs verify_args;
  bool exhaustive = false;
  bool per_pair = false;
  bool no_geometry = false;
  std::uint64_t samples = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify-note",
      "sweep admissible (alpha, beta) pairs: check trace(1/gamma^2) = 0 and "
      "that the pencil's third degenerate member is a real line pair");
  add_field_options(verify_cmd, &verify_args);
  auto* exhaustive_opt =
      verify_cmd->add_flag("--exhaustive", exhaustive, "check every admissible ordered pair (default)");
  auto* samples_opt = verify_cmd->add_option(
      "--samples", samples, "check this many seeded uniform samples instead");
  exhaustive_opt->excludes(samples_opt);
  samples_opt->excludes(exhaustive_opt);
  verify_cmd->add_flag("--per-pair", per_pair, "emit one row per checked pair");
  verify_cmd->add_flag("--no-geometry", no_geometry,
                       "skip conic classification; trace checks only");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gf2conics");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const auto parsed = app.get_subcommands();
      out << (parsed.empty() ? app.help() : parsed.front()->help());
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (trace_cmd->parsed()) {
      const Field f = make_field(trace_args);
      return cmd_trace_table(f, parse_format(trace_args.format), out);
    }
    if (classify_cmd->parsed()) {
      const Field f = make_field(classify_args);
      return cmd_classify(f, conic_text, parse_format(classify_args.format), out);
    }
    if (scan_cmd->parsed()) {
      const Field f = make_field(scan_args);
      const std::uint32_t alpha = parse_element(f, alpha_text, "alpha");
      const std::uint32_t beta = parse_element(f, beta_text, "beta");
      return cmd_pencil_scan(f, alpha, beta, parse_format(scan_args.format), out);
    }
    const Field f = make_field(verify_args);
    VerifyOptions opts;
    opts.mode = samples_opt->count() > 0 ? VerifyMode::kSample : VerifyMode::kExhaustive;
    opts.samples = samples;
    opts.seed = verify_args.seed;
    opts.check_geometry = !no_geometry;
    opts.jobs = verify_args.jobs;
    return cmd_verify_note(f, opts, per_pair, parse_format(verify_args.format), out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gf2conics
