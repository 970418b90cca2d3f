// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/report.hpp"

#include <algorithm>

namespace lsa {

bool Report::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return !c.pass; }));
}

CheckRecord& Report::add(std::string name, bool pass, Json witness, std::string anchor) {
  checks_.push_back({std::move(name), pass, std::move(witness), std::move(anchor)});
  return checks_.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    CheckRecord r = c;
    if (!prefix.empty()) r.name = prefix + "/" + r.name;
    checks_.push_back(std::move(r));
  }
  for (const auto& n : other.notes_) notes_.push_back(prefix.empty() ? n : prefix + ": " + n);
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["suite"] = suite_;
  j["pass"] = pass();
  j["failures"] = failures();
  if (has_seed_) j["seed"] = seed_;
  Json cs = Json::array();
  for (const auto& c : checks_) {
    Json r;
    r["name"] = c.name;
    r["pass"] = c.pass;
    if (!c.anchor.empty()) r["anchor"] = c.anchor;
    if (!c.witness.is_null()) r["witness"] = c.witness;
    cs.push_back(std::move(r));
  }
  j["checks"] = std::move(cs);
  if (!notes_.empty()) j["notes"] = notes_;
  if (with_timing) j["elapsed_ms"] = elapsed_ms_;
  return j;
}

}  // namespace lsa
