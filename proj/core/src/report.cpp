#include "plectic/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "plectic/error.hpp"

namespace plectic {

namespace {

using nlohmann::json;

json check_json(const Check& c) {
  json j{{"suite", c.suite}, {"name", c.name}, {"status", std::string(to_string(c.status))}, {"cases", c.cases}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.flag.empty()) j["flag"] = c.flag;
  if (!c.counterexamples.empty()) j["counterexamples"] = c.counterexamples;
  return j;
}

json orbit_json(const OrbitTable& t) {
  json orbits = json::array();
  for (const auto& o : t.orbits) {
    json types = json::array();
    for (const auto& phi : o) types.push_back(phi.names());
    orbits.push_back(json{{"size", o.size()}, {"types", types}});
  }
  return json{{"group", t.group}, {"sizes", t.sizes()}, {"orbits", orbits}};
}

json chi_json(const ChiDependence& d) {
  json per = json::array();
  for (const auto& p : d.per_chi) per.push_back(json{{"chi_f", p.fingerprint}, {"members", p.members}});
  json tori = json::array();
  for (const auto& t : d.tori)
    tori.push_back(json{{"name", t.name},
                        {"membership_varies", t.membership_varies},
                        {"common_members", t.common_members},
                        {"pi0_invariant", t.pi0_invariant},
                        {"pi0_compared", t.pi0_compared},
                        {"point_action_varies", t.point_action_varies},
                        {"point_differences", t.point_differences},
                        {"point_compared", t.point_compared}});
  return json{{"splittings", d.splittings},
              {"conjugation_applied", d.conjugation_applied},
              {"cyclotomic_applied", d.cyclotomic_applied},
              {"per_chi", per},
              {"taniyama_varies", d.taniyama_varies},
              {"taniyama_differences", d.taniyama_differences},
              {"tori", tori}};
}

}  // namespace

bool Report::ok() const {
  const bool checks_ok =
      std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
  return checks_ok && (!chi || chi->ok());
}

Report start_report(std::string command, const Model& model) {
  Report r;
  r.command = std::move(command);
  r.model = model.id;
  r.flags = model.recip->flags().named();
  try {
    r.chi_fingerprint = make_splitting(model.recip).fingerprint();
  } catch (const Error&) {
  }
  return r;
}

std::string to_json(const Report& r, bool include_timing) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  j["model"] = r.model;
  j["chi_f"] = r.chi_fingerprint.empty() ? json(nullptr) : json(r.chi_fingerprint);
  json flags = json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  j["flags"] = flags;
  if (!r.checks.empty()) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = checks;
  }
  if (!r.orbits.empty()) {
    json orbits = json::array();
    for (const auto& t : r.orbits) orbits.push_back(orbit_json(t));
    j["orbits"] = orbits;
  }
  if (r.chi) j["chi_dependence"] = chi_json(*r.chi);
  j["ok"] = r.ok();
  if (include_timing) j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

std::string to_table(const Report& r) {
  std::ostringstream os;
  os << "model " << r.model << "  chi_F " << (r.chi_fingerprint.empty() ? "-" : r.chi_fingerprint) << "\n";
  os << "flags:";
  for (const auto& [k, v] : r.flags) os << ' ' << k << '=' << (v ? "yes" : "no");
  os << "\n";

  if (!r.checks.empty()) {
    std::size_t w = 0;
    for (const auto& c : r.checks) w = std::max(w, c.suite.size() + c.name.size() + 1);
    for (const auto& c : r.checks) {
      os << "  " << std::left << std::setw(static_cast<int>(w)) << (c.suite + "/" + c.name) << "  "
         << std::setw(7) << to_string(c.status) << std::right << std::setw(8) << c.cases;
      if (!c.flag.empty()) os << "  [" << c.flag << "]";
      if (!c.detail.empty()) os << "  " << c.detail;
      os << "\n";
      for (const auto& ce : c.counterexamples) os << "      ! " << ce << "\n";
    }
  }
  for (const auto& t : r.orbits) {
    os << t.group << " orbits:";
    for (std::size_t s : t.sizes()) os << ' ' << s;
    os << "\n";
    for (const auto& o : t.orbits) {
      os << "  {";
      for (std::size_t i = 0; i < o.size(); ++i) os << (i ? ", " : "") << o[i].to_string();
      os << "}\n";
    }
  }
  if (r.chi) {
    const auto& d = *r.chi;
    os << "admissible chi_F: " << d.splittings << " (conjugation " << (d.conjugation_applied ? "on" : "off")
       << ", cyclotomic " << (d.cyclotomic_applied ? "on" : "off") << ")\n";
    for (const auto& p : d.per_chi) os << "  " << p.fingerprint << "\n";
    os << "taniyama differs in " << d.taniyama_differences << " cases\n";
    for (const auto& t : d.tori)
      os << "  torus " << t.name << ": membership " << (t.membership_varies ? "varies" : "fixed") << ", common "
         << t.common_members << ", lambda " << (t.pi0_invariant ? "invariant" : "VARIES") << " (" << t.pi0_compared
         << "), points differ " << t.point_differences << "/" << t.point_compared << "\n";
  }
  os << (r.ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace plectic
