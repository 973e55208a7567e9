#include "qverma/report.hpp"

#include <algorithm>

namespace qverma {

void Report::add(std::string id, bool passed, std::string detail) {
  std::lock_guard<std::mutex> lock(mutex_);
  checks_.push_back({std::move(id), passed, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto& c : other.checks()) add(prefix + c.id, c.passed, c.detail);
}

std::vector<CheckResult> Report::checks() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return checks_;
}

std::size_t Report::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return checks_.size();
}

std::size_t Report::failure_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string Report::summary(std::size_t max_failures) const {
  std::string s;
  std::size_t shown = 0;
  for (const auto& c : checks()) {
    if (c.passed) continue;
    if (shown++ == max_failures) {
      s += "...\n";
      break;
    }
    s += c.id + ": " + c.detail + "\n";
  }
  return s;
}

nlohmann::json Report::to_json() const {
  auto sorted = checks();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : sorted) {
    nlohmann::json j = {{"id", c.id}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return {{"passed", failure_count() == 0}, {"total", sorted.size()}, {"failures", failure_count()},
          {"checks", std::move(arr)}};
}

}  // namespace qverma
