// SPDX-License-Identifier: Apache-2.0
#pragma once

// Identity suites run by the `verify` verb.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace supergr::cli {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct VerifyOptions {
  int max_n = 6;      // Grassmannian sweeps: 0 <= r <= m <= max_n, 0 <= s <= n <= max_n
  int max_n_c = 12;   // C(r,n) brute force
  std::uint64_t seed = kDefaultSeed;
};

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  long passed = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few only

  void check(bool ok, const std::function<std::string()>& describe);
  bool ok() const { return failed == 0; }
};

std::vector<std::string> suite_names();

/// Runs one suite by name; throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

}  // namespace supergr::cli
