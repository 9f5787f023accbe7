// Oracle sweeps comparing every construction against brute-force
// enumeration. Used by `lattice-stairs verify` and the acceptance binary.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice_stairs/numeric.hpp"

namespace lattice_stairs {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
  /// Overrides the sweep bound of every check when positive.
  Int max = 0;
  std::uint64_t seed = kDefaultSeed;
  /// 0 means: LATTICE_STAIRS_THREADS if set, else hardware concurrency.
  unsigned threads = 0;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;
  double seconds = 0;
  nlohmann::json stats = nlohmann::json::object();
};

nlohmann::json to_json(const CheckResult& r);

unsigned worker_count(unsigned requested = 0);

// Criteria 1-7.
CheckResult check_sturmian_equivalence(const VerifyOptions& opt);
CheckResult check_staircase_recursion(const VerifyOptions& opt);
CheckResult check_staircase_symmetries(const VerifyOptions& opt);
CheckResult check_cone_gf(const VerifyOptions& opt);
CheckResult check_carlitz(const VerifyOptions& opt);
CheckResult check_white(const VerifyOptions& opt);
CheckResult check_positivity(const VerifyOptions& opt);

// Further property sweeps.
CheckResult check_sequence_laws(const VerifyOptions& opt);
CheckResult check_pipe_facts(const VerifyOptions& opt);
CheckResult check_triangle_gfs(const VerifyOptions& opt);
CheckResult check_parallelepipeds(const VerifyOptions& opt);

using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

/// Suite names: sequences, staircase, barvinok, carlitz, white, all.
std::vector<CheckFn> suite_checks(const std::string& suite);
const std::vector<std::string>& suite_names();

}  // namespace lattice_stairs
