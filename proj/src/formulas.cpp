#include "spotlight/formulas.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace spotlight {

namespace {

[[noreturn]] void bad_param(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require_dims(int m, int n, int least, const char* what) {
  if (m < least || n < least)
    bad_param(std::string(what) + " needs m,n >= " + std::to_string(least));
}

Count rect_count_closed(int m, int n) {
  if (m == 0 || n == 0) return 1;
  return binomial(m + n, m) - binomial(m + n - 2, m - 1);
}

Count rect_count_recursive(int m, int n) {
  static std::map<std::pair<int, int>, Count> memo;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  std::function<Count(int, int)> rec = [&](int a, int b) -> Count {
    if (a == 0 || b == 0) return 1;
    if (a == 1 && b == 1) return 1;
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    Count value = rec(a - 1, b) + rec(a, b - 1);
    return memo.emplace(std::pair{a, b}, std::move(value)).first->second;
  };
  return rec(m, n);
}

}  // namespace

Count rect_count(int m, int n) {
  if (m < 0 || n < 0) bad_param("rect_count needs m,n >= 0");
  Count closed = rect_count_closed(m, n);
  if (closed != rect_count_recursive(m, n))
    throw std::logic_error("rect_count: closed form and recursion disagree");
  return closed;
}

std::pair<Count, Count> rect_bounds(int m, int n) {
  require_dims(m, n, 1, "rect_bounds");
  return {Count(std::min(m, n)), Count(m + n - 1)};
}

Count rect_max_count(int m, int n) {
  require_dims(m, n, 1, "rect_max_count");
  return binomial(m + n - 2, m - 1);
}

Count rect_size_count(int m, int n, int r) {
  if (m < 0 || n < 0) bad_param("rect_size_count needs m,n >= 0");
  if (m == 0 || n == 0) return r == 0 ? 1 : 0;
  if (r <= 0 || r > m + n - 1) return 0;
  if (r == m + n - 1) return binomial(m + n - 2, m - 1);
  return binomial(r - 1, m - 1) + binomial(r - 1, n - 1);
}

Ratio rect_avg_size(int m, int n) {
  require_dims(m, n, 1, "rect_avg_size");
  Ratio lead(Count(m) * n * (m + n - 1),
             Count(m + n) * (m + n - 1) - Count(m) * n);
  Ratio closed = lead * (Ratio(1) + Ratio(n - 1, m + 1) + Ratio(m - 1, n + 1));
  Count total = 0, weighted = 0;
  for (int r = 1; r <= m + n - 1; ++r) {
    Count t = rect_size_count(m, n, r);
    total += t;
    weighted += r * t;
  }
  if (closed != Ratio(weighted, total))
    throw std::logic_error("rect_avg_size: closed form and distribution disagree");
  return closed;
}

BiPoly rect_hv_gf(int m, int n) {
  require_dims(m, n, 1, "rect_hv_gf");
  BiPoly poly;
  if (m == 1 && n == 1) return poly;
  for (int r = 0; r <= n - 2; ++r) poly.add(m, r, binomial(r + m - 1, m - 1));
  for (int r = 0; r <= m - 2; ++r) poly.add(r, n, binomial(r + n - 1, n - 1));
  return poly;
}

namespace {

// Rectangle missing only its southeast corner. The two-binomial form needs
// m,n >= 2; a strip missing its far end has length-minus-one tilings.
Count tse(int m, int n) {
  if (m == 1) return Count(n - 1);
  if (n == 1) return Count(m - 1);
  return binomial(m + n, m) - 2 * binomial(m + n - 2, m - 1);
}

// rect_count with the zero-dimension convention, for shrunken sub-terms.
Count t_or_one(int m, int n) { return rect_count_closed(m, n); }

}  // namespace

Count corner_removed_count(int m, int n, CornerSet corners) {
  int k = corners.count();
  if (k == 0) {
    require_dims(m, n, 1, "corner_removed_count (no corners)");
    return rect_count(m, n);
  }
  require_dims(m, n, k == 1 ? 2 : 3, "corner_removed_count");

  bool nw = corners.has(CornerDir::NW), ne = corners.has(CornerDir::NE);
  bool sw = corners.has(CornerDir::SW), se = corners.has(CornerDir::SE);
  Count T = rect_count(m, n);

  if (k == 1) {
    if (ne || sw) return T - 1;
    if (se) return T - binomial(m + n - 2, m - 1);
    return t_or_one(m - 1, n - 1) + (n - 1) * t_or_one(m - 2, n) +
           (m - 1) * t_or_one(m, n - 2);
  }
  if (k == 2) {
    if (ne && sw) return T - 2;
    if (se && (ne || sw)) return tse(m, n) - 1;
    if (nw && se)
      return tse(m - 1, n - 1) + (n - 1) * tse(m - 2, n) + (m - 1) * tse(m, n - 2);
    if (nw && ne)
      return t_or_one(m - 1, n - 1) + (n - 2) * t_or_one(m - 2, n) +
             (m - 1) * t_or_one(m, n - 2) - m + 1;
    // {NW,SW} is the transpose of {NW,NE}
    return corner_removed_count(n, m, CornerSet{CornerDir::NW, CornerDir::NE});
  }
  if (k == 3) {
    if (!nw) return tse(m, n) - 2;  // {NE,SW,SE}
    if (ne && se)
      return tse(m - 1, n - 1) + (n - 2) * tse(m - 2, n) + (m - 1) * tse(m, n - 2) -
             m + 1;
    if (sw && se)  // transpose of {NW,NE,SE}
      return corner_removed_count(
          n, m, CornerSet{CornerDir::NW, CornerDir::NE, CornerDir::SE});
    // {NW,NE,SW}
    return t_or_one(m - 1, n - 1) + (n - 2) * t_or_one(m - 2, n) +
           (m - 2) * t_or_one(m, n - 2) - m - n + 4;
  }
  return tse(m - 1, n - 1) + (n - 2) * tse(m - 2, n) + (m - 2) * tse(m, n - 2) -
         m - n + 4;
}

Count trimmed_column_delta(int n, int r) {
  if (n < 1 || r < 0) bad_param("trimmed_column_delta needs n >= 1, r >= 0");
  Count delta = 0;
  for (int k = 0; k < r; ++k) delta += binomial(n - 1 + k, k);
  return delta;
}

Count trimmed_rect_count(int m, int n, int r) {
  require_dims(m, n, 1, "trimmed_rect_count");
  if (r < 0 || r > m - 1) bad_param("trimmed_rect_count needs 0 <= r <= m-1");
  return rect_count(m, n) - trimmed_column_delta(n, r);
}

Count corner_region_count(int m, int n, CornerDir dir) {
  require_dims(m, n, 2, "corner_region_count");
  switch (dir) {
    case CornerDir::NW: return Count(m) + n - 2;
    case CornerDir::NE: return Count(n) * (m - 1) + 1;
    case CornerDir::SW: return Count(m) * (n - 1) + 1;
    case CornerDir::SE: return 2 * Count(m - 1) * (n - 1) + 1;
  }
  bad_param("corner_region_count: bad direction");
}

Count frame_count(int m, int n) {
  require_dims(m, n, 3, "frame_count");
  return 2 * Count(m - 2) * (n - 2) * (m + n - 2) + 3 * (Count(m) + n) - 10;
}

}  // namespace spotlight
