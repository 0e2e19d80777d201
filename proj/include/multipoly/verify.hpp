#ifndef MULTIPOLY_VERIFY_HPP
#define MULTIPOLY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "multipoly/hypergraph.hpp"

namespace multipoly {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
  std::string to_text() const;  // one pass/fail line per check
  std::string to_json() const;
};

/// Per-instance verification sweeps. Suites: "exactness" (extended
/// formulation optimum vs brute force, size bounds, coefficient-sum law),
/// "facets" (cut validity and facet certificates), "decomp" (split at the
/// first nest point of the expansion vs brute force), "cuts" (cut validity
/// plus implication of filtered-out cuts), or "all".
VerifyReport run_verify(const Hypergraph& g, const std::string& suite,
                        std::uint64_t seed = 0, int trials = 100);

}  // namespace multipoly

#endif
