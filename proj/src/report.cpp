#include "regcert/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace regcert {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::fail:
      return 1;
    case Status::inconclusive:
      return 2;
  }
  return 1;
}

std::string digest_of(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool InstanceResult::check(bool ok, const std::string& what) {
  if (ok) return true;
  status = Status::fail;
  witness = witness ? *witness + "; " + what : what;
  return false;
}

void InstanceResult::mark_inconclusive(const std::string& why) {
  if (status == Status::pass) status = Status::inconclusive;
  values["inconclusive_reason"] = why;
}

VerificationReport::VerificationReport(std::string check_name, FieldSpec field,
                                       std::optional<std::uint64_t> seed)
    : check_name_(std::move(check_name)), field_(field), seed_(seed) {}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& inst : other.instances_) instances_.push_back(inst);
  for (const auto& [k, v] : other.timings_ms_) timings_ms_[k] += v;
}

Status VerificationReport::status() const {
  bool inconclusive = false;
  for (const auto& inst : instances_) {
    if (inst.status == Status::fail) return Status::fail;
    if (inst.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? Status::inconclusive : Status::pass;
}

json VerificationReport::to_json(bool include_timings) const {
  std::vector<const InstanceResult*> sorted;
  for (const auto& inst : instances_) sorted.push_back(&inst);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto* a, const auto* b) { return a->digest < b->digest; });
  json out;
  out["check"] = check_name_;
  out["status"] = to_string(status());
  out["field"] = field_.name();
  out["seed"] = seed_ ? json(*seed_) : json(nullptr);
  json arr = json::array();
  for (const auto* inst : sorted) {
    json j;
    j["digest"] = inst->digest;
    j["status"] = to_string(inst->status);
    j["values"] = inst->values;
    j["bound"] = inst->bound;
    if (inst->witness) j["witness"] = *inst->witness;
    arr.push_back(std::move(j));
  }
  out["instances"] = std::move(arr);
  if (include_timings) out["timings_ms"] = timings_ms_;
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << check_name_ << ": " << to_string(status()) << " (" << instances_.size()
     << " instance(s), field " << field_.name();
  if (seed_) os << ", seed " << *seed_;
  os << ")\n";
  for (const auto& inst : instances_) {
    os << "  [" << to_string(inst.status) << "] " << inst.digest;
    for (const auto& [k, v] : inst.values.items()) os << ' ' << k << '=' << v.dump();
    if (!inst.bound.empty()) {
      os << " |";
      for (const auto& [k, v] : inst.bound.items()) os << ' ' << k << '=' << v.dump();
    }
    os << '\n';
    if (inst.witness) os << "    witness: " << *inst.witness << '\n';
  }
  return os.str();
}

}  // namespace regcert
