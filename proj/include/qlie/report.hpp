#pragma once

#include <map>
#include <string>
#include <vector>

namespace qlie {

// One verification outcome.  status is "pass", "fail" or "discrepancy";
// "discrepancy" marks a stated identity that fails verbatim but for which a
// corrected candidate was located (recorded in `candidate`).
struct CheckRecord {
  std::string check_id;
  std::string anchor;  // stable neutral id of the source statement in the data files
  std::string status;
  std::string witness;    // counterexample / residual, when failing
  std::string candidate;  // corrected form, when found
  std::string notes;
};

struct Report {
  std::string version = "1";
  std::map<std::string, std::string> config;
  std::map<std::string, long> numbers;  // degree bounds, point counts, timings...
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void pass(const std::string& id, const std::string& anchor, const std::string& notes = "");
  void fail(const std::string& id, const std::string& anchor, const std::string& witness,
            const std::string& notes = "");
  void discrepancy(const std::string& id, const std::string& anchor, const std::string& witness,
                   const std::string& candidate, const std::string& notes = "");

  size_t count(const std::string& status) const;
  bool all_pass() const { return count("pass") == records.size(); }

  std::string to_json_string(int indent = 2) const;
  void save(const std::string& path) const;
};

// Structural schema check of a serialized report; returns human-readable problems
// (empty = valid).
std::vector<std::string> report_validate_json(const std::string& json_text);

}  // namespace qlie
