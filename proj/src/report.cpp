#include "qlie/report.hpp"

#include <fstream>

#include <json.hpp>

#include "qlie/rational.hpp"

namespace qlie {

int HTrunc::default_order = 2;

using nlohmann::json;

void Report::pass(const std::string& id, const std::string& anchor, const std::string& notes) {
  add({id, anchor, "pass", "", "", notes});
}
void Report::fail(const std::string& id, const std::string& anchor, const std::string& witness,
                  const std::string& notes) {
  add({id, anchor, "fail", witness, "", notes});
}
void Report::discrepancy(const std::string& id, const std::string& anchor,
                         const std::string& witness, const std::string& candidate,
                         const std::string& notes) {
  add({id, anchor, "discrepancy", witness, candidate, notes});
}

size_t Report::count(const std::string& status) const {
  size_t k = 0;
  for (const auto& r : records)
    if (r.status == status) ++k;
  return k;
}

std::string Report::to_json_string(int indent) const {
  json j;
  j["version"] = version;
  j["config"] = json::object();
  for (const auto& [k, v] : config) j["config"][k] = v;
  j["numbers"] = json::object();
  for (const auto& [k, v] : numbers) j["numbers"][k] = v;
  j["records"] = json::array();
  for (const auto& r : records) {
    json jr;
    jr["check_id"] = r.check_id;
    jr["anchor"] = r.anchor;
    jr["status"] = r.status;
    if (!r.witness.empty()) jr["witness"] = r.witness;
    if (!r.candidate.empty()) jr["candidate"] = r.candidate;
    if (!r.notes.empty()) jr["notes"] = r.notes;
    j["records"].push_back(jr);
  }
  return j.dump(indent);
}

void Report::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write report: " + path);
  f << to_json_string() << "\n";
}

std::vector<std::string> report_validate_json(const std::string& json_text) {
  std::vector<std::string> errs;
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) {
    errs.push_back("not valid JSON");
    return errs;
  }
  if (!j.is_object()) errs.push_back("top level must be an object");
  if (!j.contains("version") || !j["version"].is_string())
    errs.push_back("missing string field 'version'");
  if (!j.contains("config") || !j["config"].is_object())
    errs.push_back("missing object field 'config'");
  else
    for (auto& [k, v] : j["config"].items())
      if (!v.is_string()) errs.push_back("config." + k + " must be a string");
  if (j.contains("numbers")) {
    if (!j["numbers"].is_object())
      errs.push_back("'numbers' must be an object");
    else
      for (auto& [k, v] : j["numbers"].items())
        if (!v.is_number_integer()) errs.push_back("numbers." + k + " must be an integer");
  }
  if (!j.contains("records") || !j["records"].is_array()) {
    errs.push_back("missing array field 'records'");
    return errs;
  }
  size_t idx = 0;
  for (const auto& r : j["records"]) {
    std::string at = "records[" + std::to_string(idx++) + "]";
    if (!r.is_object()) {
      errs.push_back(at + " must be an object");
      continue;
    }
    for (const char* f : {"check_id", "anchor", "status"})
      if (!r.contains(f) || !r[f].is_string())
        errs.push_back(at + " missing string field '" + f + "'");
    if (r.contains("status") && r["status"].is_string()) {
      std::string s = r["status"];
      if (s != "pass" && s != "fail" && s != "discrepancy")
        errs.push_back(at + " has invalid status '" + s + "'");
    }
    for (const char* f : {"witness", "candidate", "notes"})
      if (r.contains(f) && !r[f].is_string())
        errs.push_back(at + " field '" + std::string(f) + "' must be a string");
  }
  return errs;
}

}  // namespace qlie
