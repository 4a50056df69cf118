// Benchmark comparing the serial reference kernel against the OpenMP kernel
// of the pencil verification sweep. Both must produce identical reports.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "gf2conics/pencil.hpp"

int main(int argc, char** argv) {
  CLI::App app{"verify-pencils kernel benchmark: serial reference vs OpenMP"};
  unsigned n = 7;
  std::string modulus;
  int jobs = 0;
  bool no_geometry = false;
  std::uint64_t samples = 0;
  app.add_option("--n", n, "field extension degree (default 7)");
  app.add_option("--modulus", modulus, "modulus as hex (default: built-in)");
  app.add_option("--jobs", jobs, "OpenMP worker count (0 = all cores)");
  app.add_option("--samples", samples, "sample this many pairs instead of the full sweep");
  app.add_flag("--no-geometry", no_geometry, "trace checks only");
  CLI11_PARSE(app, argc, argv);

  gf2conics::Field field = [&] {
    if (modulus.empty()) return gf2conics::Field(n);
    const auto m = gf2conics::parse_hex(modulus);
    if (!m) {
      std::cerr << "invalid modulus hex\n";
      std::exit(2);
    }
    return gf2conics::Field(n, *m);
  }();

  gf2conics::VerifyOptions opts;
  if (samples > 0) {
    opts.mode = gf2conics::VerifyMode::kSample;
    opts.samples = samples;
  }
  opts.check_geometry = !no_geometry;
  opts.jobs = jobs;

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  const int threads = 1;
#endif

  std::cout << "field: GF(2^" << field.degree() << "), modulus 0x"
            << gf2conics::to_hex(field.modulus()) << "\n";
  std::cout << "geometry: " << (opts.check_geometry ? "on" : "off") << "\n";

  const auto serial = gf2conics::verify_pencils_serial(field, opts);
  std::cout << std::fixed << std::setprecision(3);
  std::cout << "serial   : " << serial.elapsed_seconds << "s  ("
            << serial.ordered_pairs << " pairs, status "
            << gf2conics::to_string(serial.status()) << ")\n";

  const auto parallel = gf2conics::verify_pencils(field, opts);
  std::cout << "parallel : " << parallel.elapsed_seconds << "s  (" << threads
            << " threads)\n";
  if (parallel.elapsed_seconds > 0.0) {
    std::cout << "speedup  : " << serial.elapsed_seconds / parallel.elapsed_seconds
              << "x\n";
  }

  if (!gf2conics::reports_match(serial, parallel)) {
    std::cerr << "kernel mismatch: serial and parallel reports differ\n";
    return 1;
  }
  std::cout << "reports match\n";
  return serial.status() == gf2conics::VerifyStatus::kFail ? 1 : 0;
}
