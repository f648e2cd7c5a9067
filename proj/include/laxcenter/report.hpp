#pragma once

#include "laxcenter/check.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace laxcenter {

struct ReportSection {
  std::string title;
  /// Computed values, in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  CheckList checks;

  void fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
  }
};

struct Report {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::vector<ReportSection> sections;

  ReportSection& section(std::string title) {
    sections.push_back({std::move(title), {}, {}});
    return sections.back();
  }
  std::size_t check_count() const;
  std::size_t failure_count() const;
  bool passed() const { return failure_count() == 0; }
  /// 0 on pass, 1 on any failed check.
  int exit_code() const { return passed() ? 0 : 1; }
};

std::string render_text(const Report& r);
/// Stable schema: command, seed, sections[{title, facts, checks}], summary.
std::string render_json(const Report& r);

}  // namespace laxcenter
