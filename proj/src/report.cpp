#include "fcsph/report.hpp"

namespace fcsph {

void Report::add(const std::string& key, std::int64_t delta) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v += delta;
      return;
    }
  }
  counts.emplace_back(key, delta);
}

std::int64_t Report::get(const std::string& key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  return 0;
}

void Report::mismatch(std::string subject_name, std::string detail) {
  mismatches.push_back({std::move(subject_name), std::move(detail)});
}

void Report::witness(std::string subject_name, std::string detail) {
  witnesses.push_back({std::move(subject_name), std::move(detail)});
}

void Report::merge(const Report& other) {
  subject_count += other.subject_count;
  for (const auto& [k, v] : other.counts) add(k, v);
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = r.type;
  j["subject"] = r.subject;
  j["subject_count"] = r.subject_count;
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  auto findings = [](const std::vector<Finding>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back({{"subject", f.subject}, {"detail", f.detail}});
    return a;
  };
  j["mismatches"] = findings(r.mismatches);
  j["witnesses"] = findings(r.witnesses);
  if (r.skipped) j["skipped"] = true;
  return j;
}

}  // namespace fcsph
