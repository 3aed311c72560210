#pragma once

#include <string>
#include <vector>

#include "surfact/group_search.hpp"
#include "surfact/report.hpp"

namespace surfact {

enum class CheckStatus { pass, fail, discrepancy_expected };

std::string to_string(CheckStatus s);  // PASS | FAIL | DISCREPANCY(expected)

// One re-measured claim from the source text. `published` quotes the claim
// as printed; `computed` is what this library gets. A known misprint in the
// source surfaces as DISCREPANCY(expected), never as FAIL; FAIL is reserved
// for computations that contradict a claim believed correct.
struct PaperCheck {
  std::string id;
  std::string claim;
  std::string published;
  std::string computed;
  CheckStatus status = CheckStatus::fail;
  std::string note;
};

// The fixed reproduction script: every published number or structural fact
// the pipeline depends on, re-derived mechanically.
std::vector<PaperCheck> audit_paper(const SearchLimits& limits = SearchLimits{});

bool audit_has_failures(const std::vector<PaperCheck>& checks);

Json to_json(const PaperCheck& c);
Json to_json(const std::vector<PaperCheck>& checks);
std::string to_markdown(const std::vector<PaperCheck>& checks);

}  // namespace surfact
