#include "spotlight/verify.hpp"

#include <stdexcept>

#include "spotlight/formulas.hpp"
#include "spotlight/tiling.hpp"

namespace spotlight {

int CheckReport::failures() const {
  int n = 0;
  for (const Check& c : checks) n += !c.pass;
  return n;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const Check& c : checks) {
    out += c.pass ? "[ ok ] " : "[FAIL] ";
    out += c.name;
    if (!c.pass && !c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += '\n';
  }
  out += "checks: " + std::to_string(checks.size()) +
         "  failures: " + std::to_string(failures()) + '\n';
  return out;
}

namespace {

void expect_eq(CheckReport& report, const std::string& name, const Count& got,
               const Count& want) {
  Check c{name, got == want, {}};
  if (!c.pass) c.detail = "enumerated " + got.str() + ", formula " + want.str();
  report.checks.push_back(std::move(c));
}

std::string dims(int m, int n) {
  return std::to_string(m) + "x" + std::to_string(n);
}

}  // namespace

CheckReport crosscheck_rectangles(int max_sum) {
  if (max_sum < 2)
    throw std::invalid_argument("crosscheck_rectangles needs max_sum >= 2");
  CheckReport report;
  for (int m = 1; m < max_sum; ++m) {
    for (int n = 1; m + n <= max_sum; ++n) {
      std::string tag = "rect " + dims(m, n);
      Ensemble e = enumerate_tilings(build(Rectangle{m, n}));
      expect_eq(report, tag + " count", Count(e.tilings.size()), rect_count(m, n));

      auto [lo, hi] = rect_bounds(m, n);
      Check bounds{tag + " bounds",
                   Count(e.min_size) == lo && Count(e.max_size) == hi,
                   {}};
      if (!bounds.pass)
        bounds.detail = "enumerated [" + std::to_string(e.min_size) + ", " +
                        std::to_string(e.max_size) + "], formula [" + lo.str() +
                        ", " + hi.str() + "]";
      report.checks.push_back(std::move(bounds));

      std::map<int, Count> dist = size_distribution(e);
      bool dist_ok = true;
      for (int r = 0; r <= m + n; ++r) {
        Count want = rect_size_count(m, n, r);
        Count got = dist.count(r) ? dist.at(r) : Count(0);
        if (got != want) dist_ok = false;
      }
      report.checks.push_back(
          {tag + " size distribution", dist_ok,
           dist_ok ? "" : "pointwise mismatch against rect_size_count"});

      expect_eq(report, tag + " maximal count",
                dist.count(m + n - 1) ? dist.at(m + n - 1) : Count(0),
                rect_max_count(m, n));

      Count total = 0, weighted = 0;
      for (const auto& [size, count] : dist) {
        total += count;
        weighted += size * count;
      }
      Ratio mean(weighted, total);
      Check avg{tag + " mean size", mean == rect_avg_size(m, n), {}};
      if (!avg.pass)
        avg.detail = "enumerated " + fixed3(mean) + ", formula " +
                     fixed3(rect_avg_size(m, n));
      report.checks.push_back(std::move(avg));

      BiPoly gf = hv_polynomial(e);
      Check poly{tag + " H/V generating function", gf == rect_hv_gf(m, n), {}};
      if (!poly.pass)
        poly.detail =
            "enumerated " + gf.to_string() + ", formula " + rect_hv_gf(m, n).to_string();
      report.checks.push_back(std::move(poly));
    }
  }
  return report;
}

CheckReport crosscheck_families(int max_dim) {
  if (max_dim < 3)
    throw std::invalid_argument("crosscheck_families needs max_dim >= 3");
  CheckReport report;

  auto enumerated = [](const Region& region) {
    return Count(enumerate_tilings(region).tilings.size());
  };

  const CornerDir all_dirs[] = {CornerDir::NW, CornerDir::NE, CornerDir::SW,
                                CornerDir::SE};
  for (unsigned bits = 0; bits < 16; ++bits) {
    CornerSet corners;
    for (CornerDir d : all_dirs)
      if (bits & (1u << static_cast<unsigned>(d))) corners.add(d);
    int least = corners.count() == 0 ? 1 : (corners.count() == 1 ? 2 : 3);
    for (int m = least; m <= max_dim; ++m) {
      for (int n = least; n <= max_dim; ++n) {
        Region region = corners.count() == 0
                            ? build(Rectangle{m, n})
                            : build(RectMinusCorners{m, n, corners});
        std::string name = "corners{" + corners.to_string() + "} " + dims(m, n);
        expect_eq(report, name, enumerated(region),
                  corner_removed_count(m, n, corners));
      }
    }
  }

  for (int m = 1; m <= max_dim; ++m)
    for (int n = 1; n <= max_dim; ++n)
      for (int r = 0; r <= m - 1; ++r)
        expect_eq(report, "trimmed " + dims(m, n) + " r=" + std::to_string(r),
                  enumerated(build(TrimmedRectangle{m, n, r})),
                  trimmed_rect_count(m, n, r));

  for (int m = 2; m <= max_dim; ++m)
    for (int n = 2; n <= max_dim; ++n)
      for (CornerDir d : all_dirs)
        expect_eq(report,
                  std::string("corner-region ") + to_string(d) + " " + dims(m, n),
                  enumerated(build(CornerRegion{m, n, d})),
                  corner_region_count(m, n, d));

  for (int m = 3; m <= max_dim; ++m)
    for (int n = 3; n <= max_dim; ++n)
      expect_eq(report, "frame " + dims(m, n), enumerated(build(Frame{m, n})),
                frame_count(m, n));

  return report;
}

std::vector<Count> oeis_prefix(const std::string& id, int length) {
  if (length < 1) throw std::invalid_argument("oeis_prefix needs length >= 1");
  int start;
  Count (*value)(int, int);
  if (id == "A051597") {
    start = 1;
    value = [](int m, int n) { return rect_count(m, n); };
  } else if (id == "A051601") {
    start = 2;
    value = [](int m, int n) {
      return corner_removed_count(m, n, CornerSet{CornerDir::SE});
    };
  } else if (id == "A132370") {
    start = 3;
    value = [](int m, int n) { return frame_count(m, n); };
  } else {
    throw std::invalid_argument("oeis_prefix: unknown id " + id);
  }
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int sum = 2 * start; static_cast<int>(out.size()) < length; ++sum)
    for (int m = start; m <= sum - start && static_cast<int>(out.size()) < length;
         ++m)
      out.push_back(value(m, sum - m));
  return out;
}

}  // namespace spotlight
