#ifndef ZSFELL_REPORT_HPP
#define ZSFELL_REPORT_HPP

#include <string>
#include <vector>

namespace zsfell {

enum class CheckStatus { Pass, Fail, Structural };

/// One record per verified law. `residual` is the largest numeric defect
/// observed while scanning the law's domain (0 for combinatorial laws);
/// `witness` names the tuple realizing it, "-" if there is none.
struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  double residual = 0.0;
  std::string witness = "-";
};

class ValidationReport {
 public:
  explicit ValidationReport(double tol = 1e-9) : tol_(tol) {}

  void pass(const std::string& id, double residual = 0.0,
            const std::string& witness = "-");
  void fail(const std::string& id, double residual,
            const std::string& witness);
  void structural(const std::string& id, const std::string& witness);

  /// Pass/fail record decided by comparing `residual` against the report
  /// tolerance; combinatorial checks should call pass()/fail() directly.
  void residual_check(const std::string& id, double residual,
                      const std::string& witness = "-");

  bool ok() const;
  double tol() const { return tol_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  const CheckRecord* find(const std::string& id) const;
  double max_residual() const;
  int failure_count() const;

  void merge(const ValidationReport& other, const std::string& prefix = "");

 private:
  double tol_;
  std::vector<CheckRecord> checks_;
};

std::string to_string(CheckStatus s);

}  // namespace zsfell

#endif
