#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spotlight/cli.hpp"
#include "spotlight/render.hpp"
#include "spotlight/tiling.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = spotlight::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& stem, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / stem) {
    std::ofstream(path_, std::ios::binary) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("count subcommand") {
  RunResult r = run_cli({"count", "--rect", "2x3"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
  CHECK(r.err.empty());

  CHECK(run_cli({"count", "--rect", "7x7"}).out == "2508\n");
  CHECK(run_cli({"count", "--family", "frame:3x4"}).out == "31\n");
  CHECK(run_cli({"count", "--family", "corners:3x3:NE,SE"}).out == "7\n");
  CHECK(run_cli({"count", "--family", "corner-region:3x4:SE"}).out == "13\n");
  CHECK(run_cli({"count", "--family", "trimmed:3x3:2"}).out == "10\n");
  CHECK(run_cli({"count", "--family", "rect:2x3"}).out == "7\n");
}

TEST_CASE("count --check cross-checks formula against enumeration") {
  RunResult r = run_cli({"count", "--rect", "3x4", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "25\n");

  CHECK(run_cli({"count", "--family", "frame:4x4", "--check"}).code == 0);
  CHECK(run_cli({"count", "--family", "corners:3x3:NW,SE", "--check"}).code == 0);
}

TEST_CASE("count --file enumerates a grid file") {
  TempFile plus("spotlight_test_plus.grid", ".#.\n###\n.#.\n");
  RunResult r = run_cli({"count", "--file", plus.str()});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");

  RunResult checked = run_cli({"count", "--file", plus.str(), "--check"});
  CHECK(checked.code == 2);
  CHECK(checked.err.find("--check needs --rect or --family") != std::string::npos);

  RunResult missing = run_cli({"count", "--file", "/nonexistent/grid.txt"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("enumerate subcommand streams tilings") {
  RunResult r = run_cli({"enumerate", "--rect", "2x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "H>\nH>\n\nH>\noo\n\nVV\nvv\n\nVo\nvo\n\n");

  RunResult limited = run_cli({"enumerate", "--rect", "2x2", "--limit", "1"});
  CHECK(limited.out == "H>\nH>\n\n");

  RunResult none = run_cli({"enumerate", "--rect", "2x2", "--limit", "0"});
  CHECK(none.code == 0);
  CHECK(none.out.empty());
}

TEST_CASE("enumerate --format json emits one parseable line per tiling") {
  RunResult r = run_cli({"enumerate", "--rect", "2x3", "--format", "json"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    spotlight::Tiling t = spotlight::tiling_from_json(line);
    CHECK(t.witness.size() == t.spots.size());
    ++count;
  }
  CHECK(count == 7);
}

TEST_CASE("enumerate --format svg") {
  RunResult r = run_cli({"enumerate", "--rect", "1x2", "--format", "svg"});
  CHECK(r.code == 0);
  std::string::size_type svgs = 0, pos = 0;
  while ((pos = r.out.find("</svg>", pos)) != std::string::npos) {
    ++svgs;
    pos += 6;
  }
  CHECK(svgs == 2);  // one document per tiling of the domino
}

TEST_CASE("enumerate --file") {
  TempFile bar("spotlight_test_bar.grid", "###\n");
  RunResult r = run_cli({"enumerate", "--file", bar.str()});
  CHECK(r.code == 0);
  CHECK(r.out == "H>>\n\noH>\n\nooo\n\n");
}

TEST_CASE("render round-trips a tiling JSON file") {
  spotlight::Tiling t;
  t.spots = spotlight::canonical_form(
      {{{0, 0}, spotlight::Dir::H, 3}, {{1, 0}, spotlight::Dir::H, 3}});
  TempFile doc("spotlight_test_tiling.json", spotlight::tiling_to_json(t));

  RunResult ascii = run_cli({"render", "--tiling", doc.str()});
  CHECK(ascii.code == 0);
  CHECK(ascii.out == "H>>\nH>>\n");

  RunResult svg = run_cli({"render", "--tiling", doc.str(), "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.substr(0, 4) == "<svg");

  RunResult missing = run_cli({"render", "--tiling", "/nonexistent/t.json"});
  CHECK(missing.code == 2);

  TempFile garbage("spotlight_test_garbage.json", "{  ");
  RunResult bad = run_cli({"render", "--tiling", garbage.str()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("tiling JSON") != std::string::npos);
}

TEST_CASE("dist subcommand prints the size distribution and exact mean") {
  RunResult r = run_cli({"dist", "--rect", "3x4"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 1\n4 4\n5 10\n6 10\nmean 129/25 = 5.160\n");

  CHECK(run_cli({"dist", "--rect", "1x1"}).out == "1 1\nmean 1/1 = 1.000\n");
}

TEST_CASE("gf subcommand prints the polynomial") {
  RunResult r = run_cli({"gf", "--rect", "2x3"});
  CHECK(r.code == 0);
  CHECK(r.out == "V^3 + H^2 + 2*H^2*V\n");

  CHECK(run_cli({"gf", "--rect", "1x1"}).out == "0\n");
}

TEST_CASE("family subcommand") {
  CHECK(run_cli({"family", "--name", "rect", "--m", "3", "--n", "4"}).out ==
        "25\n");
  CHECK(run_cli({"family", "--name", "frame", "--m", "3", "--n", "4"}).out ==
        "31\n");
  CHECK(run_cli({"family", "--name", "corners", "--m", "3", "--n", "3",
                 "--corners", "NE,SE"})
            .out == "7\n");
  // no --corners means no corners removed
  CHECK(run_cli({"family", "--name", "corners", "--m", "3", "--n", "3"}).out ==
        "14\n");
  CHECK(run_cli({"family", "--name", "corner-region", "--m", "3", "--n", "4",
                 "--dir", "SE"})
            .out == "13\n");
  CHECK(run_cli({"family", "--name", "trimmed", "--m", "3", "--n", "3", "--r",
                 "2"})
            .out == "10\n");
}

TEST_CASE("family subcommand argument errors") {
  RunResult no_dir =
      run_cli({"family", "--name", "corner-region", "--m", "3", "--n", "4"});
  CHECK(no_dir.code == 2);
  CHECK(no_dir.err.find("corner-region needs --dir") != std::string::npos);

  RunResult no_r = run_cli({"family", "--name", "trimmed", "--m", "4", "--n", "3"});
  CHECK(no_r.code == 2);
  CHECK(no_r.err.find("trimmed needs --r") != std::string::npos);

  // the formula preconditions surface as usage errors, not crashes
  RunResult thin_frame =
      run_cli({"family", "--name", "frame", "--m", "2", "--n", "4"});
  CHECK(thin_frame.code == 2);
  CHECK(thin_frame.err.find("error: ") != std::string::npos);

  CHECK(run_cli({"family", "--name", "blob", "--m", "3", "--n", "3"}).code == 2);
}

TEST_CASE("verify subcommand reports and exits clean") {
  RunResult r = run_cli({"verify", "--max-sum", "5", "--max-dim", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rectangles, m+n <= 5:") != std::string::npos);
  CHECK(r.out.find("families, m,n <= 3:") != std::string::npos);
  CHECK(r.out.find("[ ok ]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("failures: 0") != std::string::npos);
}

TEST_CASE("oeis subcommand") {
  RunResult r = run_cli({"oeis", "--id", "A051601", "--count", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  RunResult seq = run_cli({"oeis", "--id", "A051597", "--count", "6"});
  CHECK(seq.out == "1\n2\n2\n3\n4\n3\n");

  CHECK(run_cli({"oeis", "--id", "A000001", "--count", "3"}).code == 2);
  CHECK(run_cli({"oeis", "--id", "A051597", "--count", "0"}).code == 2);
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);

  RunResult bad_dims = run_cli({"count", "--rect", "3"});
  CHECK(bad_dims.code == 2);
  CHECK(bad_dims.err.find("expected dimensions like 3x4") != std::string::npos);
  CHECK(bad_dims.err.find("Run 'spotlight --help' for usage.") !=
        std::string::npos);

  CHECK(run_cli({"count", "--rect", "axb"}).code == 2);
  CHECK(run_cli({"count", "--rect", "2x3", "--file", "x.grid"}).code == 2);
  CHECK(run_cli({"count", "--family", "pent:3x3"}).code == 2);
  CHECK(run_cli({"count", "--family", "corners:3x3:XX"}).code == 2);
  CHECK(run_cli({"enumerate", "--rect", "2x2", "--format", "png"}).code == 2);
  CHECK(run_cli({"enumerate", "--rect", "2x2", "--limit", "-3"}).code == 2);
}

TEST_CASE("--help exits 0 and names the subcommands") {
  RunResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count") != std::string::npos);
  CHECK(r.out.find("enumerate") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output is byte-deterministic across invocations") {
  std::vector<std::vector<std::string>> cases = {
      {"enumerate", "--rect", "3x3"},
      {"enumerate", "--rect", "2x3", "--format", "json"},
      {"dist", "--rect", "4x4"},
      {"verify", "--max-sum", "4", "--max-dim", "3"},
  };
  for (const auto& args : cases) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
