// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/loop.hpp"

namespace lsa {

struct UnknownSuite : std::invalid_argument {
  explicit UnknownSuite(const std::string& id) : std::invalid_argument("unknown suite " + id) {}
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 0;           // 0 = suite default
  std::optional<int> max_rank;      // unset = default ranks
  bool contain_errors = false;      // turn exceptions into failed checks
};

const std::vector<std::string>& suite_ids();
bool is_suite(const std::string& id);

// Families a suite runs on; suites over "all default ranks" honour max_rank.
std::vector<FamilySpec> suite_families(const std::string& id, const SuiteOptions& opt);
// Default specs, or every admissible spec whose largest parameter is at most max_rank.
std::vector<FamilySpec> specs_up_to(std::optional<int> max_rank);

// One family's part of a suite.
Report run_suite_on(const std::string& id, const Family& f, const SuiteOptions& opt);
Report run_suite(const std::string& id, const SuiteOptions& opt);

// Jacobi-free sanity: each Cartan basis element acts by a derivation.
Report cartan_derivation_check(const LieSuperalgebra& g);

// Perturbs one structure constant ([h, x] for a Cartan element h) of a representative
// family and runs the suite on it; pass means the suite failed and every failure has a witness.
Report fault_injection(const std::string& id, const SuiteOptions& opt);

}  // namespace lsa
