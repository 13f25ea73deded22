#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zclosure/cube.hpp"
#include "zclosure/json_io.hpp"

namespace zclosure {

struct CheckRow {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Wall time, shown in tables only so JSON output stays reproducible.
  std::optional<double> seconds;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> rows;
  /// Informational lines that do not affect the verdict.
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const noexcept;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Number of random weight sets per sampled configuration.
  int samples = 50;
};

/// layer-theorem, main-theorem, duality, translate-lemmas,
/// motivating-lemmas, counterexample.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

SuiteReport layer_theorem_suite();
SuiteReport main_theorem_suite(const SuiteOptions& options);
SuiteReport duality_suite();
SuiteReport translate_lemmas_suite();
SuiteReport motivating_lemmas_suite();
SuiteReport counterexample_suite();

struct ScanMismatch {
  int n;
  int d;
  SymmetricSet e;
  SymmetricSet zcl;
  SymmetricSet symcl;
};

struct ScanReport {
  std::uint32_t p;
  int max_n;
  std::uint64_t instances = 0;
  /// E inside [d, n-d] (the main theorem's set hypothesis; only n is too small).
  std::vector<ScanMismatch> in_hypothesis;
  /// E reaching outside [d, n-d].
  std::vector<ScanMismatch> outside_hypothesis;
};

/// Every (n, d, E) with n <= max_n, d <= n and n < 4 p^l - 1 (l = ell_p(d)),
/// over all E in [0, n], comparing zcl against symcl. max_n is capped at 10.
ScanReport scan_small_n(std::uint32_t p, int max_n);

Json to_json(const SuiteReport& report);
Json to_json(const ScanReport& report);
std::string format_table(const SuiteReport& report);
std::string format_scan(const ScanReport& report, std::size_t list_limit);

/// (x_1, ..., x_n) -> (x_perm[0], ..., x_perm[n-1]) applied to the variables.
MultilinearPoly permute_variables(const MultilinearPoly& f, const std::vector<int>& perm);

/// Whether some permutation of the variables maps f to g (n <= 8).
bool equal_up_to_permutation(const MultilinearPoly& f, const MultilinearPoly& g);

}  // namespace zclosure
