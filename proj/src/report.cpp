#include "laxcenter/report.hpp"

#include <json.hpp>

#include <sstream>

namespace laxcenter {

std::size_t Report::check_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.checks.checks.size();
  return n;
}

std::size_t Report::failure_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.checks.failures();
  return n;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command << "\n";
  if (r.seed) out << "seed: " << *r.seed << "\n";
  for (const auto& s : r.sections) {
    out << "\n== " << s.title << "\n";
    for (const auto& [k, v] : s.facts) out << "  " << k << ": " << v << "\n";
    for (const auto& c : s.checks.checks) {
      out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
      for (const auto& w : c.witnesses) out << "      " << w << "\n";
    }
  }
  out << "\nsummary: " << (r.passed() ? "PASS" : "FAIL") << " (" << r.check_count()
      << " checks, " << r.failure_count() << " failed)\n";
  return out.str();
}

std::string render_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["command"] = r.command;
  doc["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  json sections = json::array();
  for (const auto& s : r.sections) {
    json js;
    js["title"] = s.title;
    json facts = json::object();
    for (const auto& [k, v] : s.facts) facts[k] = v;
    js["facts"] = facts;
    json checks = json::array();
    for (const auto& c : s.checks.checks)
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail},
                        {"witnesses", c.witnesses}});
    js["checks"] = checks;
    sections.push_back(std::move(js));
  }
  doc["sections"] = std::move(sections);
  doc["summary"] = {{"passed", r.passed()},
                    {"checks", r.check_count()},
                    {"failed", r.failure_count()},
                    {"exit_code", r.exit_code()}};
  return doc.dump(2) + "\n";
}

}  // namespace laxcenter
