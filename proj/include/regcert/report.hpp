#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "regcert/scalar.hpp"

namespace regcert {

using json = nlohmann::json;

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);
/// Process exit code for a status: 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);

/// Stable 64-bit FNV-1a digest rendered as 16 hex digits.
std::string digest_of(std::string_view text);

/// One checked input. Every failed check appends to the witness.
struct InstanceResult {
  std::string digest;
  json values = json::object();
  json bound = json::object();
  std::optional<std::string> witness;
  Status status = Status::pass;

  /// Records `ok`; a false value fails the instance and names the check.
  bool check(bool ok, const std::string& what);
  void mark_inconclusive(const std::string& why);
};

class VerificationReport {
 public:
  VerificationReport(std::string check_name, FieldSpec field,
                     std::optional<std::uint64_t> seed = std::nullopt);

  const std::string& check_name() const { return check_name_; }
  const FieldSpec& field() const { return field_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  const std::vector<InstanceResult>& instances() const { return instances_; }

  void add(InstanceResult instance) { instances_.push_back(std::move(instance)); }
  void add_timing(const std::string& phase, double ms) { timings_ms_[phase] += ms; }
  void merge(const VerificationReport& other);

  /// pass iff every instance passed; any failure wins over inconclusive.
  Status status() const;
  bool passed() const { return status() == Status::pass; }

  /// Instances are sorted by digest so the output is independent of the
  /// order in which trials finished.
  json to_json(bool include_timings = true) const;
  std::string to_text() const;

 private:
  std::string check_name_;
  FieldSpec field_;
  std::optional<std::uint64_t> seed_;
  std::vector<InstanceResult> instances_;
  std::map<std::string, double> timings_ms_;
};

}  // namespace regcert
