// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

// lsa: build algebras, print root data and run verification suites. Output is JSON on stdout.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lsa/suites.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kBadParams = 2, kIncomplete = 3, kUsage = 4 };

void emit(const lsa::Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << "\n";
}

void error(const std::string& kind, const std::string& what) {
  std::cerr << lsa::Json{{"error", kind}, {"message", what}}.dump() << "\n";
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("LSA_SEED")) return std::strtoull(s, nullptr, 10);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie superalgebra construction and verification"};
  app.require_subcommand(1);

  std::string tag, out;
  std::vector<int> params;
  auto* build = app.add_subcommand("build", "serialize an algebra as JSON");
  build->add_option("family", tag, "SL PSL OSP P Q PSQ W S SPRIME H HTILDE")->required();
  build->add_option("params", params, "family parameters")->required();
  build->add_option("--out", out, "write JSON to this file");

  auto* roots = app.add_subcommand("roots", "root decomposition with respect to the Cartan subalgebra");
  roots->add_option("family", tag)->required();
  roots->add_option("params", params)->required();
  roots->add_option("--out", out);

  std::string suite, max_rank = "default";
  std::uint64_t seed = default_seed();
  std::size_t trials = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed, "RNG seed (default: $LSA_SEED or 1)");
  verify->add_option("--trials", trials, "random trials for sampling suites (0 = suite default)");
  verify->add_option("--max-rank", max_rank, "largest family parameter, or 'default' for the desk-scale list");
  verify->add_flag("--timing", timing, "include elapsed time in the report");
  verify->add_option("--out", out);

  app.add_subcommand("suites", "list suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand("suites")) {
      emit(lsa::suite_ids(), "");
      return kPass;
    }
    if (build->parsed() || roots->parsed()) {
      lsa::FamilySpec spec = lsa::FamilySpec::parse(tag, params);
      lsa::Family f = lsa::build(spec);
      if (build->parsed()) {
        emit(f.g.to_json(), out);
        if (!out.empty()) std::cout << lsa::Json{{"family", spec.str()}, {"dim", f.g.dim()}, {"out", out}}.dump() << "\n";
        return kPass;
      }
      lsa::RootDatum rd = lsa::root_decomposition(f.g);
      lsa::Json j;
      j["family"] = spec.str();
      j["dim"] = f.g.dim();
      j["cartan_dim"] = f.g.cartan_basis().size();
      j["root_datum"] = rd.to_json();
      emit(j, out);
      return kPass;
    }
    lsa::SuiteOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    if (max_rank != "default") {
      int r = 0;
      try {
        r = std::stoi(max_rank);
      } catch (const std::exception&) {
        error("usage", "--max-rank expects an integer or 'default'");
        return kUsage;
      }
      if (r < 2) {
        error("bad-parameters", "--max-rank must be at least 2");
        return kBadParams;
      }
      opt.max_rank = r;
    }
    lsa::Report rep = lsa::run_suite(suite, opt);
    emit(rep.to_json(timing), out);
    return rep.pass() ? kPass : kFail;
  } catch (const lsa::UnknownSuite& e) {
    error("unknown-suite", e.what());
    return kUsage;
  } catch (const lsa::ParameterOutOfRange& e) {
    error("parameter-out-of-range", e.what());
    return kBadParams;
  } catch (const lsa::EigenvaluesOutsideCandidateSet& e) {
    error("eigenvalues-outside-candidate-set", e.what());
    return kIncomplete;
  } catch (const std::exception& e) {
    error("internal", e.what());
    return kFail;
  }
}
