#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace spotlight {

struct Cell {
  int row = 0;  // grows southward; row 0 is the north edge after normalization
  int col = 0;  // grows eastward; col 0 is the west edge after normalization
  auto operator<=>(const Cell&) const = default;
};

// Finite set of grid cells. May be empty or disconnected: the tiling recursion
// produces such intermediates even though input regions are connected.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Cell> cells);
  Region(std::initializer_list<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }  // sorted row-major
  bool contains(Cell c) const;
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool operator==(const Region&) const = default;
  auto operator<=>(const Region&) const = default;

 private:
  std::vector<Cell> cells_;
};

// Cells with neither a north nor a west neighbor in the region, row-major.
std::vector<Cell> nw_corners(const Region& region);

// Maximal 4-connected subsets, ordered by their smallest cell.
std::vector<Region> connected_components(const Region& region);

// Translate so that min row = min col = 0 (empty region maps to itself).
Region normalize(const Region& region);

// Nonempty and 4-connected: the class of regions the counting results cover.
bool is_paper_region(const Region& region);

enum class CornerDir { NW, NE, SW, SE };

const char* to_string(CornerDir dir);

// Subset of the four rectangle corners.
class CornerSet {
 public:
  CornerSet() = default;
  CornerSet(std::initializer_list<CornerDir> dirs);

  CornerSet& add(CornerDir dir);
  bool has(CornerDir dir) const;
  int count() const;
  bool operator==(const CornerSet&) const = default;

  std::string to_string() const;  // e.g. "NW,SE" in fixed NW,NE,SW,SE order

 private:
  unsigned bits_ = 0;
};

// Named region families. m counts rows, n counts columns, so a vertical
// spotlight in an m x n rectangle has length m and a horizontal one length n.
struct Rectangle {
  int m, n;  // m, n >= 1
};
struct RectMinusCorners {
  int m, n;  // >= 2; >= 3 when |corners| >= 3 or corners holds an opposite pair
  CornerSet corners;
};
struct Frame {
  int m, n;  // >= 3; the rectangle minus its centered (m-2) x (n-2) interior
};
struct CornerRegion {
  int m, n;  // >= 1; column of m and row of n sharing one square at `dir`
  CornerDir dir;
};
struct TrimmedRectangle {
  int m, n, r;  // 0 <= r <= m-1, n >= 1; top r cells of the last column removed
};

using RegionFamily =
    std::variant<Rectangle, RectMinusCorners, Frame, CornerRegion, TrimmedRectangle>;

// Construct the family's cell set; throws std::invalid_argument on bad params.
Region build(const RegionFamily& family);

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, int line, int col);
  int line;  // 1-based
  int col;   // 1-based
};

// Text format: '#' cell, '.' absent, rows north to south. Short lines are
// treated as padded with '.'. serialize_grid emits the normalized bounding box
// with a trailing newline; parse_grid(serialize_grid(r)) == normalize(r).
Region parse_grid(const std::string& text);
std::string serialize_grid(const Region& region);

}  // namespace spotlight
