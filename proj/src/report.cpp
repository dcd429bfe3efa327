#include "neck/report.hpp"

#include <sstream>

namespace neck {

void Report::record(const std::string& identity, bool ok, const std::string& witness) {
  for (auto& r : identities) {
    if (r.identity == identity) {
      ++r.cases;
      if (!ok && r.failures++ == 0) r.first_witness = witness;
      return;
    }
  }
  IdentityResult r;
  r.identity = identity;
  r.cases = 1;
  if (!ok) {
    r.failures = 1;
    r.first_witness = witness;
  }
  identities.push_back(r);
}

std::string Report::str() const {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const auto& r : identities) {
    os << "  " << r.identity << ": cases=" << r.cases << " failures=" << r.failures
       << " " << (r.pass() ? "PASS" : "FAIL") << "\n";
    if (!r.pass()) os << "    witness: " << r.first_witness << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace neck
