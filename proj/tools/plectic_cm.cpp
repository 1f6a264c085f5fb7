// plectic-cm: orbit tables, verification suites and the chi_F-dependence
// probe for the model files in models/.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 bad usage or model.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plectic/config.hpp"
#include "plectic/error.hpp"
#include "plectic/report.hpp"
#include "plectic/verify.hpp"

namespace {

struct Common {
  std::string model;
  std::string models_dir;
  std::string json_out;
  bool no_timing = false;
  bool quiet = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-m,--model", c.model, "model id (file stem in the model directory) or path to a .toml file")
      ->required();
  sub->add_option("--models-dir", c.models_dir, "directory searched for model ids (default: $PLECTIC_CM_MODEL_DIR)");
  sub->add_option("--json", c.json_out, "write the JSON report to this file ('-' for stdout)");
  sub->add_flag("--no-timing", c.no_timing, "omit wall-clock time from the JSON report");
  sub->add_flag("-q,--quiet", c.quiet, "suppress the table");
}

plectic::Model load(const Common& c) {
  const auto dir = c.models_dir.empty() ? plectic::model_directory() : std::filesystem::path(c.models_dir);
  return plectic::load_model(plectic::resolve_model(c.model, dir));
}

int emit(const Common& c, plectic::Report& r, std::chrono::steady_clock::time_point t0) {
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!c.quiet) std::cout << plectic::to_table(r);
  if (!c.json_out.empty()) {
    const std::string text = plectic::to_json(r, !c.no_timing);
    if (c.json_out == "-") {
      std::cout << text;
    } else {
      std::ofstream f(c.json_out);
      if (!f) throw plectic::Error(plectic::Errc::InvalidArgument, "cannot write " + c.json_out);
      f << text;
    }
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plectic Galois actions on finite CM models"};
  app.require_subcommand(1);

  Common orbits_opts, verify_opts, chi_opts;
  std::vector<std::string> groups{"galois", "plectic"};
  std::vector<std::string> suites{"all"};

  auto* orbits = app.add_subcommand("orbits", "orbit decomposition of the CM types");
  add_common(orbits, orbits_opts);
  orbits->add_option("-g,--group", groups, "galois and/or plectic")
      ->check(CLI::IsMember({"galois", "plectic", "none"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, verify_opts);
  std::vector<std::string> allowed = plectic::suite_names();
  allowed.push_back("all");
  verify->add_option("-s,--suite", suites, "suite name(s) or 'all'")->check(CLI::IsMember(allowed));

  auto* chi = app.add_subcommand("chi-dependence", "compare results across admissible splittings chi_F");
  add_common(chi, chi_opts);

  auto* list = app.add_subcommand("list-suites", "print the suite names");

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (list->parsed()) {
      for (const auto& s : plectic::suite_names()) std::cout << s << "\n";
      return 0;
    }
    if (orbits->parsed()) {
      const plectic::Model m = load(orbits_opts);
      auto r = plectic::start_report("orbits", m);
      for (const auto& g : groups) r.orbits.push_back(plectic::compute_orbits(m, g));
      return emit(orbits_opts, r, t0);
    }
    if (verify->parsed()) {
      const plectic::Model m = load(verify_opts);
      auto r = plectic::start_report("verify", m);
      std::vector<std::string> run = suites;
      if (std::find(run.begin(), run.end(), "all") != run.end()) run = plectic::suite_names();
      for (const auto& s : run)
        for (auto& c : plectic::run_suite(m, s)) r.checks.push_back(std::move(c));
      return emit(verify_opts, r, t0);
    }
    if (chi->parsed()) {
      const plectic::Model m = load(chi_opts);
      auto r = plectic::start_report("chi-dependence", m);
      r.chi = plectic::chi_dependence(m);
      return emit(chi_opts, r, t0);
    }
  } catch (const plectic::Error& e) {
    std::cerr << "plectic-cm: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
