#include "spotlight/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "spotlight/count.hpp"
#include "spotlight/formulas.hpp"
#include "spotlight/region.hpp"
#include "spotlight/render.hpp"
#include "spotlight/tiling.hpp"
#include "spotlight/verify.hpp"

namespace spotlight::cli {

namespace {

int parse_int(const std::string& text, const char* what) {
  bool ok = !text.empty() && text.size() <= 7 &&
            std::all_of(text.begin(), text.end(),
                        [](unsigned char c) { return std::isdigit(c); });
  if (!ok)
    throw std::invalid_argument(std::string("expected a number for ") + what +
                                ", got \"" + text + "\"");
  return std::stoi(text);
}

std::pair<int, int> parse_dims(const std::string& text) {
  auto sep = text.find('x');
  if (sep == std::string::npos)
    throw std::invalid_argument("expected dimensions like 3x4, got \"" + text + "\"");
  return {parse_int(text.substr(0, sep), "rows"),
          parse_int(text.substr(sep + 1), "columns")};
}

CornerDir parse_corner(const std::string& name) {
  if (name == "NW") return CornerDir::NW;
  if (name == "NE") return CornerDir::NE;
  if (name == "SW") return CornerDir::SW;
  if (name == "SE") return CornerDir::SE;
  throw std::invalid_argument("unknown corner \"" + name +
                              "\" (use NW, NE, SW, SE)");
}

CornerSet parse_corner_list(const std::string& list) {
  CornerSet corners;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) corners.add(parse_corner(item));
  return corners;
}

// rect:MxN | corners:MxN[:NW,SE,...] | frame:MxN | corner-region:MxN:DIR |
// trimmed:MxN:R
RegionFamily parse_family_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);

  auto bad = [&] {
    return std::invalid_argument("bad family spec \"" + spec +
                                 "\" (see --help for the accepted forms)");
  };
  if (parts.size() < 2) throw bad();
  auto [m, n] = parse_dims(parts[1]);

  if (parts[0] == "rect") {
    if (parts.size() != 2) throw bad();
    return Rectangle{m, n};
  }
  if (parts[0] == "corners") {
    if (parts.size() > 3) throw bad();
    CornerSet corners =
        parts.size() == 3 ? parse_corner_list(parts[2]) : CornerSet{};
    return RectMinusCorners{m, n, corners};
  }
  if (parts[0] == "frame") {
    if (parts.size() != 2) throw bad();
    return Frame{m, n};
  }
  if (parts[0] == "corner-region") {
    if (parts.size() != 3) throw bad();
    return CornerRegion{m, n, parse_corner(parts[2])};
  }
  if (parts[0] == "trimmed") {
    if (parts.size() != 3) throw bad();
    return TrimmedRectangle{m, n, parse_int(parts[2], "r")};
  }
  throw bad();
}

Count family_count(const RegionFamily& family) {
  return std::visit(
      [](const auto& f) -> Count {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Rectangle>) {
          return rect_count(f.m, f.n);
        } else if constexpr (std::is_same_v<F, RectMinusCorners>) {
          return corner_removed_count(f.m, f.n, f.corners);
        } else if constexpr (std::is_same_v<F, Frame>) {
          return frame_count(f.m, f.n);
        } else if constexpr (std::is_same_v<F, CornerRegion>) {
          return corner_region_count(f.m, f.n, f.dir);
        } else {
          return trimmed_rect_count(f.m, f.n, f.r);
        }
      },
      family);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of spotlight tilings of grid regions",
               "spotlight"};
  app.require_subcommand(1);

  std::string rect, file, family_spec, format = "ascii", tiling_path;
  std::string name, corners_list, dir_name, oeis_id;
  bool check = false;
  long long limit = -1;
  int m = 0, n = 0, r = -1;
  int max_sum = 11, max_dim = 6, terms = 0;

  auto add_region_flags = [&](CLI::App* cmd, bool with_family) {
    auto* src = cmd->add_option_group("region");
    src->add_option("--rect", rect, "Rectangle as MxN (rows x columns)");
    src->add_option("--file", file, "Grid file: '#' cell, '.' blank");
    if (with_family)
      src->add_option("--family", family_spec,
                      "rect:MxN | corners:MxN[:NW,SE,...] | frame:MxN | "
                      "corner-region:MxN:DIR | trimmed:MxN:R");
    src->require_option(1);
  };

  auto* cmd_count = app.add_subcommand("count", "Print the number of tilings");
  add_region_flags(cmd_count, true);
  cmd_count->add_flag("--check", check,
                      "Cross-check the closed form against enumeration");

  auto* cmd_enum = app.add_subcommand("enumerate", "Stream every tiling");
  add_region_flags(cmd_enum, false);
  cmd_enum->add_option("--format", format, "ascii, svg, or json (default ascii)")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));
  cmd_enum->add_option("--limit", limit, "Emit at most this many tilings")
      ->check(CLI::NonNegativeNumber);

  auto* cmd_render =
      app.add_subcommand("render", "Draw one tiling from its JSON file");
  cmd_render->add_option("--tiling", tiling_path, "Tiling JSON path")->required();
  cmd_render->add_option("--format", format, "ascii or svg (default ascii)")
      ->check(CLI::IsMember({"ascii", "svg"}));

  auto* cmd_dist =
      app.add_subcommand("dist", "Tilings by size, with the exact mean");
  cmd_dist->add_option("--rect", rect, "Rectangle as MxN")->required();

  auto* cmd_gf =
      app.add_subcommand("gf", "Generating function over non-maximal tilings");
  cmd_gf->add_option("--rect", rect, "Rectangle as MxN")->required();

  auto* cmd_family =
      app.add_subcommand("family", "Closed-form count for a region family");
  cmd_family
      ->add_option("--name", name,
                   "rect, corners, frame, corner-region, or trimmed")
      ->required()
      ->check(CLI::IsMember({"rect", "corners", "frame", "corner-region",
                             "trimmed"}));
  cmd_family->add_option("--m", m, "Rows")->required();
  cmd_family->add_option("--n", n, "Columns")->required();
  cmd_family->add_option("--corners", corners_list,
                         "Comma-separated subset of NW,NE,SW,SE");
  cmd_family->add_option("--dir", dir_name, "Corner direction")
      ->check(CLI::IsMember({"NW", "NE", "SW", "SE"}));
  cmd_family->add_option("--r", r, "Cells trimmed from the last column")
      ->check(CLI::NonNegativeNumber);

  auto* cmd_verify =
      app.add_subcommand("verify", "Cross-check every formula against enumeration");
  cmd_verify->add_option("--max-sum", max_sum,
                         "Check rectangles with m+n up to this (default 11)");
  cmd_verify->add_option("--max-dim", max_dim,
                         "Check families with m,n up to this (default 6)");

  auto* cmd_oeis = app.add_subcommand("oeis", "Emit a referenced integer sequence");
  cmd_oeis->add_option("--id", oeis_id, "A051597, A051601, or A132370")
      ->required()
      ->check(CLI::IsMember({"A051597", "A051601", "A132370"}));
  cmd_oeis->add_option("--count", terms, "How many terms")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (app.got_subcommand(cmd_count)) {
      if (!file.empty()) {
        if (check)
          throw std::invalid_argument("--check needs --rect or --family");
        Ensemble ensemble = enumerate_tilings(parse_grid(read_file(file)));
        out << ensemble.tilings.size() << "\n";
        return 0;
      }
      RegionFamily family;
      if (!family_spec.empty()) {
        family = parse_family_spec(family_spec);
      } else {
        auto [rows, cols] = parse_dims(rect);
        family = Rectangle{rows, cols};
      }
      Count value = family_count(family);
      if (check) {
        Ensemble ensemble = enumerate_tilings(build(family));
        if (Count(ensemble.tilings.size()) != value) {
          err << "cross-check failed: formula says " << value
              << ", enumeration found " << ensemble.tilings.size() << "\n";
          return 1;
        }
      }
      out << value << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_enum)) {
      Region region = file.empty()
                          ? build(Rectangle{parse_dims(rect).first,
                                            parse_dims(rect).second})
                          : parse_grid(read_file(file));
      Ensemble ensemble = enumerate_tilings(region);
      long long emitted = 0;
      for (const Tiling& tiling : ensemble.tilings) {
        if (limit >= 0 && emitted >= limit) break;
        if (format == "ascii")
          out << render_ascii(tiling) << "\n";
        else if (format == "svg")
          out << render_svg(tiling) << "\n";
        else
          out << tiling_to_json(tiling, -1);
        ++emitted;
      }
      return 0;
    }

    if (app.got_subcommand(cmd_render)) {
      Tiling tiling = tiling_from_json(read_file(tiling_path));
      out << (format == "svg" ? render_svg(tiling) : render_ascii(tiling));
      return 0;
    }

    if (app.got_subcommand(cmd_dist)) {
      auto [rows, cols] = parse_dims(rect);
      auto [lo, hi] = rect_bounds(rows, cols);
      for (Count size = lo; size <= hi; ++size)
        out << size << " " << rect_size_count(rows, cols, size.convert_to<int>())
            << "\n";
      Ratio mean = rect_avg_size(rows, cols);
      out << "mean " << numerator(mean) << "/" << denominator(mean) << " = "
          << fixed3(mean) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_gf)) {
      auto [rows, cols] = parse_dims(rect);
      out << rect_hv_gf(rows, cols).to_string() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_family)) {
      RegionFamily family;
      if (name == "rect") {
        family = Rectangle{m, n};
      } else if (name == "corners") {
        family = RectMinusCorners{m, n, parse_corner_list(corners_list)};
      } else if (name == "frame") {
        family = Frame{m, n};
      } else if (name == "corner-region") {
        if (dir_name.empty())
          throw std::invalid_argument("corner-region needs --dir");
        family = CornerRegion{m, n, parse_corner(dir_name)};
      } else {
        if (r < 0) throw std::invalid_argument("trimmed needs --r");
        family = TrimmedRectangle{m, n, r};
      }
      out << family_count(family) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      CheckReport rects = crosscheck_rectangles(max_sum);
      CheckReport families = crosscheck_families(max_dim);
      out << "rectangles, m+n <= " << max_sum << ":\n" << rects.to_text();
      out << "families, m,n <= " << max_dim << ":\n" << families.to_text();
      return rects.all_passed() && families.all_passed() ? 0 : 1;
    }

    if (app.got_subcommand(cmd_oeis)) {
      for (const Count& value : oeis_prefix(oeis_id, terms)) out << value << "\n";
      return 0;
    }

    err << "no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    err << "Run 'spotlight --help' for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spotlight::cli
