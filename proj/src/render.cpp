#include "spotlight/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spotlight {

namespace {

struct Box {
  int minr = 0, minc = 0, maxr = -1, maxc = -1;
};

Box bounding_box(const Tiling& tiling) {
  Box box;
  bool first = true;
  for (const Spotlight& s : tiling.spots) {
    for (Cell c : covered_cells(s)) {
      if (first) {
        box = {c.row, c.col, c.row, c.col};
        first = false;
      } else {
        box.minr = std::min(box.minr, c.row);
        box.minc = std::min(box.minc, c.col);
        box.maxr = std::max(box.maxr, c.row);
        box.maxc = std::max(box.maxc, c.col);
      }
    }
  }
  return box;
}

}  // namespace

std::string render_ascii(const Tiling& tiling) {
  Box box = bounding_box(tiling);
  if (box.maxr < box.minr) return "\n";
  int rows = box.maxr - box.minr + 1;
  int cols = box.maxc - box.minc + 1;
  std::vector<std::string> grid(rows, std::string(cols, '.'));
  for (const Spotlight& s : tiling.spots) {
    std::vector<Cell> cells = covered_cells(s);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      char ch;
      if (i == 0)
        ch = s.dir == Dir::H ? 'H' : (s.dir == Dir::V ? 'V' : 'o');
      else
        ch = s.dir == Dir::H ? '>' : 'v';
      grid[cells[i].row - box.minr][cells[i].col - box.minc] = ch;
    }
  }
  std::string out;
  for (const std::string& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Tiling& tiling) {
  constexpr int kCell = 28;
  constexpr int kPad = 10;
  constexpr int kInset = 3;
  Box box = bounding_box(tiling);
  int rows = box.maxr < box.minr ? 0 : box.maxr - box.minr + 1;
  int cols = box.maxc < box.minc ? 0 : box.maxc - box.minc + 1;
  int width = cols * kCell + 2 * kPad;
  int height = rows * kCell + 2 * kPad;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  auto px = [&](int col) { return kPad + (col - box.minc) * kCell; };
  auto py = [&](int row) { return kPad + (row - box.minr) * kCell; };

  // faint cell outlines under the tiles
  for (const Spotlight& s : tiling.spots)
    for (Cell c : covered_cells(s))
      svg << "<rect x=\"" << px(c.col) << "\" y=\"" << py(c.row) << "\" width=\""
          << kCell << "\" height=\"" << kCell
          << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";

  for (const Spotlight& s : tiling.spots) {
    int x = px(s.origin.col) + kInset;
    int y = py(s.origin.row) + kInset;
    int w = (s.dir == Dir::H ? s.length : 1) * kCell - 2 * kInset;
    int h = (s.dir == Dir::V ? s.length : 1) * kCell - 2 * kInset;
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
        << "\" height=\"" << h
        << "\" rx=\"6\" fill=\"#dce8f7\" stroke=\"#34495e\" stroke-width=\"1.5\"/>\n";
    int cx = x + w / 2;
    int cy = y + h / 2;
    if (s.dir == Dir::U) {
      svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"3.5\" fill=\"#34495e\"/>\n";
    } else if (s.dir == Dir::H) {
      int tip = x + w - 5;
      svg << "<path d=\"M" << tip - 8 << " " << cy - 5 << " L" << tip << " " << cy
          << " L" << tip - 8 << " " << cy + 5 << " Z\" fill=\"#34495e\"/>\n";
    } else {
      int tip = y + h - 5;
      svg << "<path d=\"M" << cx - 5 << " " << tip - 8 << " L" << cx << " " << tip
          << " L" << cx + 5 << " " << tip - 8 << " Z\" fill=\"#34495e\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string tiling_to_json(const Tiling& tiling, int indent) {
  std::vector<Cell> all;
  for (const Spotlight& s : tiling.spots) {
    std::vector<Cell> cs = covered_cells(s);
    all.insert(all.end(), cs.begin(), cs.end());
  }
  nlohmann::ordered_json doc;
  doc["region"] = serialize_grid(Region{std::move(all)});
  doc["spots"] = nlohmann::ordered_json::array();
  for (const Spotlight& s : canonical_form(tiling.spots)) {
    doc["spots"].push_back({{"row", s.origin.row},
                            {"col", s.origin.col},
                            {"dir", to_string(s.dir)},
                            {"len", s.length}});
  }
  return doc.dump(indent < 0 ? -1 : indent) + "\n";
}

Tiling tiling_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tiling JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("region") || !doc.contains("spots"))
    throw std::invalid_argument("tiling JSON: need object with region and spots");

  Region region;
  try {
    region = parse_grid(doc["region"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tiling JSON: ") + e.what());
  }

  std::vector<Spotlight> spots;
  for (const auto& js : doc["spots"]) {
    Spotlight s;
    try {
      s.origin = {js.at("row").get<int>(), js.at("col").get<int>()};
      s.length = js.at("len").get<int>();
      std::string d = js.at("dir").get<std::string>();
      if (d == "H")
        s.dir = Dir::H;
      else if (d == "V")
        s.dir = Dir::V;
      else if (d == "U")
        s.dir = Dir::U;
      else
        throw std::invalid_argument("tiling JSON: bad dir \"" + d + "\"");
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("tiling JSON: ") + e.what());
    }
    spots.push_back(s);
  }

  Tiling tiling;
  tiling.spots = canonical_form(spots);  // throws on overlap
  auto witness = find_witness(region, tiling.spots);
  if (!witness)
    throw std::invalid_argument("tiling JSON: spots do not form a reachable tiling");
  tiling.witness = std::move(*witness);
  return tiling;
}

}  // namespace spotlight
