#include "spotlight/region.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace spotlight {

Region::Region(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Region::Region(std::initializer_list<Cell> cells)
    : Region(std::vector<Cell>(cells)) {}

bool Region::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<Cell> nw_corners(const Region& region) {
  std::vector<Cell> out;
  for (Cell c : region.cells()) {
    if (!region.contains({c.row - 1, c.col}) && !region.contains({c.row, c.col - 1}))
      out.push_back(c);
  }
  return out;  // region.cells() is sorted, so this is row-major already
}

std::vector<Region> connected_components(const Region& region) {
  std::vector<Region> out;
  std::vector<bool> seen(region.size(), false);
  const auto& cells = region.cells();
  auto index_of = [&](Cell c) -> long {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) return -1;
    return it - cells.begin();
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Cell> comp;
    std::vector<std::size_t> stack = {i};
    seen[i] = true;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      Cell c = cells[j];
      comp.push_back(c);
      for (Cell nb : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col},
                      Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
        long k = index_of(nb);
        if (k >= 0 && !seen[k]) {
          seen[k] = true;
          stack.push_back(static_cast<std::size_t>(k));
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  // components surface in order of their smallest cell because the outer loop
  // scans cells row-major and each component is claimed at its first cell
  return out;
}

Region normalize(const Region& region) {
  if (region.empty()) return region;
  int minr = region.cells().front().row;
  int minc = region.cells().front().col;
  for (Cell c : region.cells()) minc = std::min(minc, c.col);
  std::vector<Cell> moved;
  moved.reserve(region.size());
  for (Cell c : region.cells()) moved.push_back({c.row - minr, c.col - minc});
  return Region(std::move(moved));
}

bool is_paper_region(const Region& region) {
  return !region.empty() && connected_components(region).size() == 1;
}

const char* to_string(CornerDir dir) {
  switch (dir) {
    case CornerDir::NW: return "NW";
    case CornerDir::NE: return "NE";
    case CornerDir::SW: return "SW";
    case CornerDir::SE: return "SE";
  }
  return "?";
}

CornerSet::CornerSet(std::initializer_list<CornerDir> dirs) {
  for (CornerDir d : dirs) add(d);
}

CornerSet& CornerSet::add(CornerDir dir) {
  bits_ |= 1u << static_cast<unsigned>(dir);
  return *this;
}

bool CornerSet::has(CornerDir dir) const {
  return bits_ & (1u << static_cast<unsigned>(dir));
}

int CornerSet::count() const {
  int n = 0;
  for (unsigned b = bits_; b; b >>= 1) n += b & 1;
  return n;
}

std::string CornerSet::to_string() const {
  std::string out;
  for (CornerDir d : {CornerDir::NW, CornerDir::NE, CornerDir::SW, CornerDir::SE}) {
    if (!has(d)) continue;
    if (!out.empty()) out += ',';
    out += spotlight::to_string(d);
  }
  return out;
}

namespace {

Cell corner_cell(int m, int n, CornerDir dir) {
  switch (dir) {
    case CornerDir::NW: return {0, 0};
    case CornerDir::NE: return {0, n - 1};
    case CornerDir::SW: return {m - 1, 0};
    case CornerDir::SE: return {m - 1, n - 1};
  }
  return {0, 0};
}

std::vector<Cell> rectangle_cells(int m, int n) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m) * n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) cells.push_back({r, c});
  return cells;
}

[[noreturn]] void bad_family(const std::string& msg) {
  throw std::invalid_argument("build: " + msg);
}

}  // namespace

Region build(const RegionFamily& family) {
  return std::visit(
      [](const auto& f) -> Region {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Rectangle>) {
          if (f.m < 1 || f.n < 1) bad_family("rectangle needs m,n >= 1");
          return Region(rectangle_cells(f.m, f.n));
        } else if constexpr (std::is_same_v<F, RectMinusCorners>) {
          bool opposite = (f.corners.has(CornerDir::NW) && f.corners.has(CornerDir::SE)) ||
                          (f.corners.has(CornerDir::NE) && f.corners.has(CornerDir::SW));
          int least = (f.corners.count() >= 3 || opposite) ? 3 : 2;
          if (f.m < least || f.n < least)
            bad_family("corner removal needs m,n >= " + std::to_string(least) +
                       " for {" + f.corners.to_string() + "}");
          std::vector<Cell> cells = rectangle_cells(f.m, f.n);
          for (CornerDir d :
               {CornerDir::NW, CornerDir::NE, CornerDir::SW, CornerDir::SE}) {
            if (f.corners.has(d))
              std::erase(cells, corner_cell(f.m, f.n, d));
          }
          return Region(std::move(cells));
        } else if constexpr (std::is_same_v<F, Frame>) {
          if (f.m < 3 || f.n < 3) bad_family("frame needs m,n >= 3");
          std::vector<Cell> cells;
          for (int r = 0; r < f.m; ++r)
            for (int c = 0; c < f.n; ++c)
              if (r == 0 || r == f.m - 1 || c == 0 || c == f.n - 1)
                cells.push_back({r, c});
          return Region(std::move(cells));
        } else if constexpr (std::is_same_v<F, CornerRegion>) {
          if (f.m < 1 || f.n < 1) bad_family("corner region needs m,n >= 1");
          int col = (f.dir == CornerDir::NE || f.dir == CornerDir::SE) ? f.n - 1 : 0;
          int row = (f.dir == CornerDir::SW || f.dir == CornerDir::SE) ? f.m - 1 : 0;
          std::vector<Cell> cells;
          for (int r = 0; r < f.m; ++r) cells.push_back({r, col});
          for (int c = 0; c < f.n; ++c) cells.push_back({row, c});
          return Region(std::move(cells));
        } else {
          static_assert(std::is_same_v<F, TrimmedRectangle>);
          if (f.m < 1 || f.n < 1) bad_family("trimmed rectangle needs m,n >= 1");
          if (f.r < 0 || f.r > f.m - 1)
            bad_family("trimmed rectangle needs 0 <= r <= m-1");
          std::vector<Cell> cells = rectangle_cells(f.m, f.n);
          for (int i = 0; i < f.r; ++i) std::erase(cells, Cell{i, f.n - 1});
          return Region(std::move(cells));
        }
      },
      family);
}

ParseError::ParseError(const std::string& what, int line, int col)
    : std::invalid_argument(what + " at line " + std::to_string(line) +
                            ", column " + std::to_string(col)),
      line(line),
      col(col) {}

Region parse_grid(const std::string& text) {
  std::vector<Cell> cells;
  int row = 0, col = 0;
  for (char ch : text) {
    if (ch == '\n') {
      ++row;
      col = 0;
    } else if (ch == '#') {
      cells.push_back({row, col});
      ++col;
    } else if (ch == '.') {
      ++col;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'",
                       row + 1, col + 1);
    }
  }
  return Region(std::move(cells));
}

std::string serialize_grid(const Region& region) {
  Region norm = normalize(region);
  if (norm.empty()) return "\n";
  int maxr = 0, maxc = 0;
  for (Cell c : norm.cells()) {
    maxr = std::max(maxr, c.row);
    maxc = std::max(maxc, c.col);
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(maxr + 1) * (maxc + 2));
  for (int r = 0; r <= maxr; ++r) {
    for (int c = 0; c <= maxc; ++c)
      out += norm.contains({r, c}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace spotlight
