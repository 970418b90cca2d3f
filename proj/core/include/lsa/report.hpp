// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsa/exact.hpp"

namespace lsa {

struct CheckRecord {
  std::string name;
  bool pass = false;
  Json witness;  // null when nothing to show
  std::string anchor;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  bool pass() const;
  const std::vector<CheckRecord>& checks() const { return checks_; }

  CheckRecord& add(std::string name, bool pass, Json witness = nullptr, std::string anchor = {});
  // Appends all checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void set_seed(std::uint64_t seed) { seed_ = seed; has_seed_ = true; }
  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }
  std::size_t failures() const;

  // timing is excluded when deterministic output is wanted.
  Json to_json(bool with_timing = true) const;

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
  std::vector<std::string> notes_;
  std::uint64_t seed_ = 0;
  bool has_seed_ = false;
  double elapsed_ms_ = 0;
};

}  // namespace lsa
