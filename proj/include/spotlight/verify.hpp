#pragma once

#include <string>
#include <vector>

#include "spotlight/count.hpp"

namespace spotlight {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

struct CheckReport {
  std::vector<Check> checks;

  int failures() const;
  bool all_passed() const { return failures() == 0; }

  // Stable line-oriented rendering: one "[ ok ]"/"[FAIL]" line per check,
  // then a "checks: N  failures: F" footer.
  std::string to_text() const;
};

// Enumerates every rectangle with m,n >= 1, m+n <= max_sum and compares the
// ensemble against every rectangle formula: count, bounds, size distribution,
// maximal count, exact mean, and the H/V generating function.
CheckReport crosscheck_rectangles(int max_sum);

// Enumerates every non-rectangle family instance with dimensions <= max_dim
// (corner-removed rectangles for all 16 corner subsets, trimmed rectangles
// for all valid r, corner regions, frames) and compares counts against the
// closed forms.
CheckReport crosscheck_families(int max_dim);

// Sequence prefixes read along antidiagonals (constant m+n, m ascending):
//   A051597 from rect_count (m,n >= 1),
//   A051601 from corner_removed_count({SE}) (m,n >= 2),
//   A132370 from frame_count (m,n >= 3).
// The A132370 emission tracks this library's frame counts, which diverge from
// the published sequence beyond its first term; see README.
std::vector<Count> oeis_prefix(const std::string& id, int length);

}  // namespace spotlight
