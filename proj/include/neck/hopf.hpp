#ifndef NECK_HOPF_HPP
#define NECK_HOPF_HPP

#include <map>
#include <string>
#include <vector>

#include "neck/link.hpp"
#include "neck/report.hpp"

namespace neck {

/// How the h-exponent of a coproduct summand is computed.  Both variants
/// read #(I)/4 + N'/2; they differ in N'.
///
///   Paper: N' = N - (number of non-vertex output components), the reading
///          under which the collapsed orbits of a cutting pair do not count.
///   Alt:   N' = (number of f-orbits, vertex ones included) - N.
///
/// Alt is the default: it is the unique variant whose exponents are always
/// nonnegative integers and under which the coproduct descends to the
/// relation quotient (the verification suites demonstrate both facts; Paper
/// is kept selectable so its failure is reproducible).
enum class ExponentPolicy { Paper, Alt };

/// Sign of the direct antipode: (-1)^(components incl. idempotents) or
/// (-1)^(arrows + idempotents).  Components is the convention consistent
/// with the antipode axiom; Arrows is kept selectable.
enum class SignPolicy { Components, Arrows };

enum class AntipodeMethod { Direct, Series };

struct HopfOptions {
  ExponentPolicy exponent = ExponentPolicy::Alt;
  SignPolicy sign = SignPolicy::Components;
};

ExponentPolicy parse_exponent_policy(const std::string& s);
SignPolicy parse_sign_policy(const std::string& s);

/// One coproduct summand: cutting pairs I with involution phi, a color per
/// f-orbit and idempotent slot, and the derived sign / h-exponent / output
/// links.
struct Coloring {
  int colors = 0;                             // n
  std::vector<std::pair<Pos, Pos>> pairs;     // (p, phi(p)), p first in scan order
  std::vector<std::vector<Pos>> orbits;       // f-orbits in traversal order
  std::vector<bool> orbit_is_vertex;          // collapsed to an idempotent?
  std::vector<int> orbit_color;               // 1..n
  std::vector<int> idem_color;                // per link idempotent slot
  int sign = 1;
  int exp2_paper = 0;                         // doubled exponent, Paper policy
  int exp2_alt = 0;                           // doubled exponent, Alt policy
  int exp2_active = 0;                        // per the options in force
  std::vector<Link> outputs;                  // X^1 .. X^n

  std::string describe(const Quiver& q, const Link& x) const;
};

/// All n-colorings of a link, n >= 1.  Throws ErrorKind::Integrality when
/// the active policy produces a non-integral exponent (a finding the
/// caller may catch and report).
std::vector<Coloring> enumerate_colorings(const Quiver& q, const Link& x, int n,
                                          const HopfOptions& opt = {});

/// Shared state for the Hopf operations: the quiver, the policies, the PBW
/// rewriter and a Delta cache.
class HopfCtx {
public:
  explicit HopfCtx(const Quiver& q, HopfOptions opt = {})
      : q_(&q), opt_(opt), rw_(q) {}

  const Quiver& quiver() const { return *q_; }
  const HopfOptions& options() const { return opt_; }
  Rewriter& rewriter() { return rw_; }

  /// Cached 1-fold coproduct of a single link.
  const TensorElement& delta(const Link& l);

private:
  const Quiver* q_;
  HopfOptions opt_;
  Rewriter rw_;
  std::map<Link, TensorElement> delta_cache_;
};

/// (n-1)-fold coproduct, n >= 2, by direct enumeration of n-colorings.
TensorElement coproduct(HopfCtx& ctx, const AlgebraElement& x, int n);
TensorElement coproduct(HopfCtx& ctx, const Link& x, int n);

/// Antipode; both methods return PBW-reduced elements.
AlgebraElement antipode(HopfCtx& ctx, const AlgebraElement& x, AntipodeMethod m);

/// Swap of the two tensor factors.
TensorElement sigma_swap(const TensorElement& t);

/// Hopf-axiom suite on seeded random links.
Report verify_hopf(const Quiver& q, int samples, int max_arrows,
                   unsigned long long seed, const HopfOptions& opt = {});

/// Quantization diagnostic for one cyclic word (see the quantize command).
struct QuantLedgerRow {
  std::string cut_desc;
  int sign = 1;
  int exp2_active = 0;
  int exp2_paper = 0;
  int exp2_alt = 0;
  std::string output_desc;
  bool policy_disagreement = false;  // active and Paper readings differ
};

struct QuantReport {
  std::string word;
  std::vector<QuantLedgerRow> ledger;
  bool all_cut_orbits_collapse = true;  // no cut coloring keeps a non-vertex orbit
  bool has_cut_colorings = false;

  bool enveloping_ok = true;        // reduce(XY - YX) == lift{x,y} mod h
  std::string enveloping_witness;

  enum class Identity36 { Holds, NotDivisible, Mismatch } identity = Identity36::Holds;
  std::string identity_detail;

  std::vector<std::string> findings;  // exponent disagreements etc.

  std::string str() const;
};

QuantReport quantization_diagnostic(HopfCtx& ctx, const CyclicWord& w);

}  // namespace neck

#endif
