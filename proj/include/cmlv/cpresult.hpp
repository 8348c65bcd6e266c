#pragma once

// Result record for a single prime p, shared by the exact (rational) path
// and the p-adic modular path, plus the Sha-verdict decision rule.

#include <string>

namespace cmlv {

enum class Verdict {
  ShaTrivialAtP,  // ord = rank, good ordinary reduction, parity holds
  ShaFiniteAtP,   // ord < rank + 2 (Sha(E)(p) finite)
  Inconclusive,   // parity unknown, ord >= rank + 2, or saturated at k
};

std::string to_string(Verdict v);

struct CpResult {
  long long p = 0;
  long k = -1;      // working p-adic precision; -1 on the exact path
  long ord = 0;     // ord_p of the normalized value c_p^+
  bool ord_saturated = false;  // true: only "ord >= k" is known
  long long unit_digit = 0;    // (c / p^ord) mod p, when determined
  bool unit_defined = false;
  long long table_digit = 0;   // (c / p^rank) mod p, when ord >= rank
  bool table_defined = false;
  bool exceptional = false;    // ord > rank
  Verdict verdict = Verdict::Inconclusive;
  std::string m_p_bound_note;
};

// Decision rule.  `saturated` means the modular computation only proved
// ord >= k; `good_ordinary` means a_p is a p-adic unit (automatic for
// p > 5 with good reduction).
inline Verdict decide_verdict(long ord, bool saturated, int rank, bool parity_ok,
                              bool good_ordinary) {
  if (!parity_ok || saturated || ord >= rank + 2) return Verdict::Inconclusive;
  if (ord == rank && good_ordinary) return Verdict::ShaTrivialAtP;
  return Verdict::ShaFiniteAtP;
}

// Lower-bound annotation from the trace formula: m_p >= s_p, and under the
// parity hypothesis s_p = rank.
inline std::string m_p_bound_note_for(int rank, bool parity_ok) {
  if (!parity_ok) return std::string();
  return "m_p >= " + std::to_string(rank);
}

}  // namespace cmlv
