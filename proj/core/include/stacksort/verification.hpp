#ifndef STACKSORT_VERIFICATION_HPP
#define STACKSORT_VERIFICATION_HPP

#include <functional>
#include <string>
#include <vector>

namespace stacksort::verification {

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on pass, failing check otherwise
  std::string repro;   // CLI command reproducing the failing check
};

// One exhaustively checkable claim: a theorem, lemma, bound, equivalence or
// named example, verified at desk scale. Claims are pure and may scan with
// the given worker count.
struct Claim {
  std::string name;
  std::string summary;
  std::function<ClaimResult(int workers)> run;
};

const std::vector<Claim>& acceptance_claims();

// Runs every claim (or only those whose name is listed in `filter`),
// printing one PASS/FAIL line per claim to `os`. Returns the results.
std::vector<ClaimResult> run_claims(std::ostream& os, int workers,
                                    const std::vector<std::string>& filter = {});

}  // namespace stacksort::verification

#endif
