#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tworep/io.hpp"

namespace tworep {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random samples per configuration; 0 picks the suite default.
  int iters = 0;
  /// Corrupt one computed table entry; the suite must then fail.
  bool poison = false;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  /// Counts and settings worth printing.
  std::vector<std::string> notes;
  /// First failure, localized.
  std::string witness;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

/// Shapiro maps on (S3, A3), (S3, Z2), (D4, Z4), (Z4, Z2) with trivial and
/// regular coefficients in degrees 1 and 2 (default 200 cochains each).
SuiteReport verify_shapiro(const io::Corpus& corpus, const SuiteOptions& opt);
/// gk_linear against the twisted regular oracle on V4, Z4, D4, Q8.
SuiteReport verify_oracle(const io::Corpus& corpus, const SuiteOptions& opt);
/// Burnside ring laws and mark matrices on V4, Z4, S3, D4, Q8.
SuiteReport verify_burnside(const io::Corpus& corpus, const SuiteOptions& opt);
/// Corpus crossed modules: interchange law, fundamental groups, triples,
/// and rejection of the broken_* inputs.
SuiteReport verify_crossed(const io::Corpus& corpus, const SuiteOptions& opt);
/// gk_rep = gk_perm_cocycle = gk_as_mark on random 2-representations of `group`
/// (default 50), every commuting pair.
SuiteReport verify_three_way(const GroupPtr& group, const SuiteOptions& opt);

SuiteReport run_suite(const std::string& name, const io::Corpus& corpus, const SuiteOptions& opt);

}  // namespace tworep
