#pragma once

// Line-per-check report tables shared by the verification routines.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace omegalie {

enum class CheckStatus { Pass, Fail, Info };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "INFO";
  }
  return "?";
}

struct ReportRow {
  std::string id;
  CheckStatus status = CheckStatus::Info;
  long long ms = 0;
  std::string detail;  ///< counterexample or note; may be empty
};

class ReportTable {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }

  /// Times `body`, which returns {passed, detail}.
  template <class F>
  void check(const std::string& id, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::pair<bool, std::string> r = body();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    rows_.push_back({id, r.first ? CheckStatus::Pass : CheckStatus::Fail, ms, std::move(r.second)});
  }

  void info(const std::string& id, std::string detail) { rows_.push_back({id, CheckStatus::Info, 0, std::move(detail)}); }

  void append(const ReportTable& other, const std::string& prefix = "") {
    for (auto row : other.rows_) {
      row.id = prefix + row.id;
      rows_.push_back(std::move(row));
    }
  }

  const std::vector<ReportRow>& rows() const noexcept { return rows_; }

  const ReportRow* find(const std::string& id) const {
    for (const auto& r : rows_)
      if (r.id == id) return &r;
    return nullptr;
  }

  bool ok() const {
    for (const auto& r : rows_)
      if (r.status == CheckStatus::Fail) return false;
    return true;
  }

  /// `<id> <PASS|FAIL|INFO> <ms>ms [detail]`, one line per row.
  std::string to_string() const {
    std::string s;
    for (const auto& r : rows_) {
      s += r.id + " " + omegalie::to_string(r.status) + " " + std::to_string(r.ms) + "ms";
      if (!r.detail.empty()) s += " " + r.detail;
      s += "\n";
    }
    return s;
  }

 private:
  std::vector<ReportRow> rows_;
};

}  // namespace omegalie
