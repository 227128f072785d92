#include <doctest.h>

#include <string>

#include "spotlight/verify.hpp"

using namespace spotlight;

TEST_CASE("crosscheck_rectangles finds no disagreements") {
  CheckReport tiny = crosscheck_rectangles(2);
  CHECK(tiny.failures() == 0);
  CHECK(tiny.all_passed());
  CHECK_FALSE(tiny.checks.empty());

  CheckReport report = crosscheck_rectangles(8);
  CHECK(report.failures() == 0);
  for (const Check& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(c.detail.empty());
  }

  CHECK_THROWS_AS(crosscheck_rectangles(1), std::invalid_argument);
}

TEST_CASE("crosscheck_families finds no disagreements") {
  CheckReport report = crosscheck_families(4);
  CHECK(report.failures() == 0);
  CHECK(report.all_passed());

  bool saw_plus = false, saw_frame = false, saw_trimmed = false,
       saw_corner = false;
  for (const Check& c : report.checks) {
    saw_plus |= c.name.find("corners{NW,NE,SW,SE} 3x3") != std::string::npos;
    saw_frame |= c.name.find("frame") != std::string::npos;
    saw_trimmed |= c.name.find("trimmed") != std::string::npos;
    saw_corner |= c.name.find("corner-region") != std::string::npos;
  }
  CHECK(saw_plus);
  CHECK(saw_frame);
  CHECK(saw_trimmed);
  CHECK(saw_corner);

  CHECK_THROWS_AS(crosscheck_families(2), std::invalid_argument);
}

TEST_CASE("check reports render deterministically") {
  CheckReport a = crosscheck_rectangles(6);
  CheckReport b = crosscheck_rectangles(6);
  CHECK(a.to_text() == b.to_text());

  std::string text = a.to_text();
  CHECK(text.find("[ ok ]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
  CHECK(text.find("failures: 0") != std::string::npos);

  CheckReport forced;
  forced.checks.push_back({"demo", false, "expected 1, got 2"});
  forced.checks.push_back({"fine", true, ""});
  CHECK(forced.failures() == 1);
  CHECK_FALSE(forced.all_passed());
  std::string lines = forced.to_text();
  CHECK(lines.find("[FAIL] demo") != std::string::npos);
  CHECK(lines.find("expected 1, got 2") != std::string::npos);
  CHECK(lines.find("failures: 1") != std::string::npos);
}

TEST_CASE("oeis_prefix emits antidiagonal readings") {
  CHECK(oeis_prefix("A051597", 12) ==
        std::vector<Count>{1, 2, 2, 3, 4, 3, 4, 7, 7, 4, 5, 11});
  CHECK(oeis_prefix("A051601", 1) == std::vector<Count>{2});
  CHECK(oeis_prefix("A051601", 12) ==
        std::vector<Count>{2, 4, 4, 7, 8, 7, 11, 15, 15, 11, 16, 26});

  // frame counts follow the enumerator, so this reading shares only its
  // first term with the published sequence (see README)
  CHECK(oeis_prefix("A132370", 6) ==
        std::vector<Count>{16, 31, 31, 50, 62, 50});

  CHECK(oeis_prefix("A051597", 1) == std::vector<Count>{1});
  CHECK_THROWS_AS(oeis_prefix("A000001", 3), std::invalid_argument);
  CHECK_THROWS_AS(oeis_prefix("A051597", 0), std::invalid_argument);
}
