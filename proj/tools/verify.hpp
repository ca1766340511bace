#pragma once

#include <string>
#include <vector>

namespace braidrack::report {

enum class Profile { Quick, Full };

struct Entry {
  std::string check;
  std::string expected;
  std::string computed;
  bool match = false;
  double runtime_ms = 0;
};

struct CriterionResult {
  std::string id;  // "P1".."P12"
  std::string title;
  std::vector<Entry> entries;
  double budget_ms = 0;  // 0 when unbounded
  double elapsed_ms = 0;
  bool within_budget = true;
  bool passed() const;
};

struct Report {
  std::vector<CriterionResult> criteria;
  bool passed() const;
};

struct VerifyOptions {
  Profile profile = Profile::Quick;
  unsigned threads = 0;
  std::vector<std::string> only;  // criterion ids; empty runs the whole profile
  bool inject_fault = false;      // replaces the D3 table by a corrupted one
};

// Quick runs P1-P4 and P8-P11; full adds P5-P7 and P12.
std::vector<std::string> criterion_ids(Profile profile);
Report verify_paper(const VerifyOptions& opts);

}  // namespace braidrack::report
