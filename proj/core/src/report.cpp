#include "fqg/report.hpp"

#include <algorithm>
#include <cmath>

namespace fqg {

Check& VerificationReport::add(std::string name, double residual, double tolerance,
                               std::string note) {
  const bool pass = !std::isnan(residual) && residual <= tolerance;
  return add_outcome(std::move(name), pass, residual, tolerance, std::move(note));
}

Check& VerificationReport::add_outcome(std::string name, bool pass, double residual,
                                       double tolerance, std::string note) {
  checks_.push_back(Check{std::move(name), residual, tolerance, pass, std::move(note)});
  return checks_.back();
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    copy.name = prefix + copy.name;
    checks_.push_back(std::move(copy));
  }
}

bool VerificationReport::overall_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

double VerificationReport::max_residual(const std::string& prefix) const {
  double worst = 0.0;
  for (const Check& c : checks_) {
    if (c.name.compare(0, prefix.size(), prefix) == 0) worst = std::max(worst, c.residual);
  }
  return worst;
}

}  // namespace fqg
