#ifndef NECK_REPORT_HPP
#define NECK_REPORT_HPP

#include <string>
#include <vector>

namespace neck {

/// Outcome of one identity checked over a batch of samples.
struct IdentityResult {
  std::string identity;
  long long cases = 0;
  long long failures = 0;
  std::string first_witness;  // empty when the identity held everywhere

  bool pass() const { return failures == 0; }
};

/// A verification suite report: one line per identity, deterministic given
/// the suite inputs.
struct Report {
  std::string suite;
  std::vector<IdentityResult> identities;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& r : identities)
      if (!r.pass()) return false;
    return true;
  }

  void record(const std::string& identity, bool ok, const std::string& witness);
  std::string str() const;
};

}  // namespace neck

#endif
