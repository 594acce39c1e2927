#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fcsph/json.hpp"

namespace fcsph {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kCodeVersion = "0.1.0";

/// One assertion outcome attached to a subject (an element, ideal or root configuration).
struct Finding {
  std::string subject;
  std::string detail;
};

/// Result of an exhaustive verifier; merged associatively across workers.
struct Report {
  std::string type;
  std::string subject;
  std::uint64_t subject_count = 0;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<Finding> mismatches;
  std::vector<Finding> witnesses;
  bool skipped = false;

  bool ok() const { return mismatches.empty(); }
  void add(const std::string& key, std::int64_t delta = 1);
  std::int64_t get(const std::string& key) const;
  void mismatch(std::string subject_name, std::string detail);
  void witness(std::string subject_name, std::string detail);
  /// Appends counts and findings of `other` (same type and subject).
  void merge(const Report& other);
};

Json to_json(const Report& r);

}  // namespace fcsph
