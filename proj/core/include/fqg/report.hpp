#pragma once

#include <string>
#include <vector>

namespace fqg {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Named residual checks. `overall_pass()` holds iff every check passes;
/// an empty report passes.
class VerificationReport {
 public:
  VerificationReport() = default;

  /// Records a check; pass iff residual ≤ tolerance (NaN never passes).
  Check& add(std::string name, double residual, double tolerance, std::string note = {});
  /// Records a check whose outcome is decided by the caller.
  Check& add_outcome(std::string name, bool pass, double residual, double tolerance,
                     std::string note = {});
  /// Appends the checks of another report, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  bool overall_pass() const;
  const Check* find(const std::string& name) const;
  /// Largest residual among checks whose name starts with `prefix`.
  double max_residual(const std::string& prefix = {}) const;
  bool empty() const { return checks_.empty(); }

 private:
  std::vector<Check> checks_;
};

}  // namespace fqg
