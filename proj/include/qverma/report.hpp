#pragma once

#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

namespace qverma {

struct CheckResult {
  std::string id;
  bool passed = true;
  std::string detail;
};

/// Collection of named checks. Thread-safe for concurrent add().
class Report {
 public:
  Report() = default;
  Report(const Report& o) : checks_(o.checks()) {}
  Report& operator=(const Report& o) {
    auto c = o.checks();
    std::lock_guard<std::mutex> lock(mutex_);
    checks_ = std::move(c);
    return *this;
  }

  void add(std::string id, bool passed, std::string detail = {});
  void pass(std::string id) { add(std::move(id), true); }
  void fail(std::string id, std::string detail) { add(std::move(id), false, std::move(detail)); }
  void merge(const Report& other, const std::string& prefix = {});

  std::vector<CheckResult> checks() const;
  std::size_t size() const;
  std::size_t failure_count() const;
  bool ok() const { return failure_count() == 0; }
  /// First few failure details joined by newlines.
  std::string summary(std::size_t max_failures = 5) const;

  nlohmann::json to_json() const;

 private:
  mutable std::mutex mutex_;
  std::vector<CheckResult> checks_;
};

}  // namespace qverma
