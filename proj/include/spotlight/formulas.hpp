#pragma once

#include <utility>

#include "spotlight/bipoly.hpp"
#include "spotlight/count.hpp"
#include "spotlight/region.hpp"

namespace spotlight {

// Number of spotlight tilings of an m x n rectangle:
//   C(m+n, m) - C(m+n-2, m-1),  with T(m,0) = T(0,n) = 1.
// Evaluates both the closed form and the memoized recursion
// T(m,n) = T(m-1,n) + T(m,n-1) and insists they agree.
Count rect_count(int m, int n);

// (minimum, maximum) number of spotlights over all tilings: (min{m,n}, m+n-1).
std::pair<Count, Count> rect_bounds(int m, int n);

// Number of maximal tilings (those of size m+n-1): C(m+n-2, m-1).
Count rect_max_count(int m, int n);

// Number of tilings using exactly r spotlights:
//   C(r-1, m-1) + C(r-1, n-1) for r < m+n-1; C(m+n-2, m-1) at r = m+n-1;
//   0 outside [1, m+n-1]. Zero-dimension rectangles count one empty tiling.
Count rect_size_count(int m, int n, int r);

// Exact mean number of spotlights:
//   [mn(m+n-1) / ((m+n)(m+n-1) - mn)] * [1 + (n-1)/(m+1) + (m-1)/(n+1)],
// asserted equal to sum(r * t_r) / sum(t_r) from rect_size_count.
Ratio rect_avg_size(int m, int n);

// Generating function over non-maximal tilings, H marking horizontal and V
// vertical spotlights:
//   H^m * sum_{r=0}^{n-2} C(r+m-1, m-1) V^r
//   + V^n * sum_{r=0}^{m-2} C(r+n-1, n-1) H^r,   zero for (1,1).
BiPoly rect_hv_gf(int m, int n);

// Rectangle with the given corner cells removed. Preconditions: m,n >= 2 for
// one corner, m,n >= 3 for two or more (throws std::invalid_argument).
Count corner_removed_count(int m, int n, CornerSet corners);

// Tilings lost when the top r cells of a column with n-1 columns to its left
// are removed: sum_{k=0}^{r-1} C(n-1+k, k) = C(n+r-1, r-1).
Count trimmed_column_delta(int n, int r);

// rect_count(m, n) minus trimmed_column_delta(n, r): tilings of the rectangle
// with the top r cells of its last column removed (0 <= r <= m-1).
Count trimmed_rect_count(int m, int n, int r);

// L-shaped overlap of a column of m and a row of n at the named corner
// (m, n >= 2): NW -> m+n-2; NE -> n(m-1)+1; SW -> m(n-1)+1; SE -> 2(m-1)(n-1)+1.
Count corner_region_count(int m, int n, CornerDir dir);

// Width-1 frame of an m x n rectangle (m, n >= 3):
//   2(m-2)(n-2)(m+n-2) + 3(m+n) - 10.
// The customary closed form for this family (OEIS A132370) adds
// (m-2)(m+1) + (n-2)(n+1) instead of 3(m+n)-10; it disagrees with direct
// enumeration everywhere but (3,3). See README for the derivation.
Count frame_count(int m, int n);

}  // namespace spotlight
