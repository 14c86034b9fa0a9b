#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "htp/error.hpp"
#include "htp/verify.hpp"

namespace htp {

using nlohmann::json;

void to_json(json& j, const CellRecord& c) {
  j = json{{"label", c.label},         {"n", c.n},
           {"r", c.r},                 {"instances", c.instances},
           {"failures", c.failures},   {"max_observed", c.max_observed},
           {"formula", c.formula},     {"max_ms", c.max_ms}};
}

void from_json(const json& j, CellRecord& c) {
  j.at("label").get_to(c.label);
  j.at("n").get_to(c.n);
  j.at("r").get_to(c.r);
  j.at("instances").get_to(c.instances);
  j.at("failures").get_to(c.failures);
  j.at("max_observed").get_to(c.max_observed);
  j.at("formula").get_to(c.formula);
  j.at("max_ms").get_to(c.max_ms);
}

void to_json(json& j, const FailureRecord& f) {
  j = json{{"cell", f.cell}, {"message", f.message}, {"coloring", f.coloring}, {"reproduce", f.reproduce}};
}

void from_json(const json& j, FailureRecord& f) {
  j.at("cell").get_to(f.cell);
  j.at("message").get_to(f.message);
  j.at("coloring").get_to(f.coloring);
  j.at("reproduce").get_to(f.reproduce);
}

void to_json(json& j, const Witness& w) {
  j = json{{"cell", w.cell}, {"description", w.description}, {"value", w.value}, {"coloring", w.coloring}};
}

void from_json(const json& j, Witness& w) {
  j.at("cell").get_to(w.cell);
  j.at("description").get_to(w.description);
  j.at("value").get_to(w.value);
  j.at("coloring").get_to(w.coloring);
}

std::string report_to_json(const VerificationReport& report) {
  json j{{"campaign", report.campaign},   {"parameters", report.parameters}, {"instances", report.instances},
         {"passed", report.passed()},     {"cells", report.cells},           {"failures", report.failures},
         {"witnesses", report.witnesses}, {"wall_ms", report.wall_ms}};
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  VerificationReport r;
  try {
    const json j = json::parse(text);
    j.at("campaign").get_to(r.campaign);
    j.at("parameters").get_to(r.parameters);
    j.at("instances").get_to(r.instances);
    j.at("cells").get_to(r.cells);
    j.at("failures").get_to(r.failures);
    j.at("witnesses").get_to(r.witnesses);
    j.at("wall_ms").get_to(r.wall_ms);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("report: ") + e.what());
  }
  return r;
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cells) {
    json j{{"campaign", report.campaign}, {"label", c.label},     {"n", c.n},
           {"r", c.r},                    {"instances", c.instances}, {"failures", c.failures},
           {"max_observed", c.max_observed}, {"formula", c.formula}};
    out << j.dump() << '\n';
  }
  json total{{"campaign", report.campaign},
             {"parameters", report.parameters},
             {"instances", report.instances},
             {"failures", report.failures.size()},
             {"passed", report.passed()}};
  out << total.dump() << '\n';
  return out.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "campaign " << report.campaign << '\n';
  out << "parameters";
  for (const auto& [k, v] : report.parameters) out << ' ' << k << '=' << v;
  out << '\n';
  for (const auto& c : report.cells) {
    out << "cell " << c.label << " n=" << c.n << " r=" << c.r << " instances=" << c.instances
        << " failures=" << c.failures << " max=" << c.max_observed << " formula=" << c.formula << '\n';
  }
  for (const auto& w : report.witnesses)
    out << "witness " << w.cell << ": " << w.description << " value=" << w.value << '\n';
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    const auto& f = report.failures[i];
    out << "failure " << i << " " << f.cell << ": " << f.message << '\n';
    out << "  reproduce: " << f.reproduce << '\n';
    std::istringstream lines(f.coloring);
    for (std::string line; std::getline(lines, line);) out << "  | " << line << '\n';
  }
  out << "instances " << report.instances << '\n';
  out << "result " << (report.passed() ? "PASS" : "FAIL") << '\n';
  out << "wall_ms " << std::fixed << std::setprecision(1) << report.wall_ms << '\n';
  return out.str();
}

}  // namespace htp
