#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spotlight/bipoly.hpp"
#include "spotlight/count.hpp"
#include "spotlight/region.hpp"

namespace spotlight {

enum class Dir : std::uint8_t { H, V, U };  // U: undirected, length 1 only

const char* to_string(Dir dir);

struct Spotlight {
  Cell origin;
  Dir dir = Dir::U;
  int length = 1;
  auto operator<=>(const Spotlight&) const = default;
};

// The cells a spotlight covers, in cast order.
std::vector<Cell> covered_cells(const Spotlight& spot);

// One placement step: the corner chosen and the direction actually cast.
// The direction is always H or V even when the resulting tile has length 1;
// canonical forms are where length-1 tiles lose their orientation.
struct Placement {
  Cell corner;
  Dir dir = Dir::H;
  auto operator<=>(const Placement&) const = default;
};

struct Tiling {
  std::vector<Spotlight> spots;     // canonical: singletons U, sorted by origin
  std::vector<Placement> witness;   // one placement order that realizes spots

  int size() const { return static_cast<int>(spots.size()); }
  auto operator<=>(const Tiling& other) const { return spots <=> other.spots; }
  bool operator==(const Tiling& other) const { return spots == other.spots; }
};

struct Ensemble {
  Region region;
  std::vector<Tiling> tilings;  // deduplicated, sorted by canonical form
  int min_size = 0;             // 0 only for the empty region's empty tiling
  int max_size = 0;
};

// Maximal run of untiled cells from a NW corner of `untiled`, east (H) or
// south (V). Returns dir U when the run has length 1. Throws
// std::invalid_argument if corner is not a NW corner of untiled or dir is U.
Spotlight cast_spotlight(const Region& untiled, Cell corner, Dir dir);

// All distinct tilings: branch over every NW corner of the untiled set and
// both directions, recurse (connected components independently), deduplicate
// by canonical form. Each tiling keeps one deterministic witness. The empty
// region yields exactly the empty tiling. `shuffle_seed` randomizes branch
// exploration order without affecting the resulting ensemble (test hook).
Ensemble enumerate_tilings(const Region& region,
                           std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Undirect the singletons and sort by origin; throws std::invalid_argument if
// the spotlights overlap.
std::vector<Spotlight> canonical_form(std::vector<Spotlight> spots);

// Searches for a placement order realizing the given spotlights (each step a
// maximal cast from a then-current NW corner; U tiles may be placed as either
// direction). Empty result if spots do not partition the region or no legal
// order exists.
std::optional<std::vector<Placement>> find_witness(
    const Region& region, const std::vector<Spotlight>& spots);

// True iff spots partition the region and some placement order realizes them.
bool is_valid_tiling(const Region& region, const std::vector<Spotlight>& spots);

// Tiling count by number of spotlights; values sum to the ensemble size.
std::map<int, Count> size_distribution(const Ensemble& ensemble);

struct DirCounts {
  int h = 0;
  int v = 0;
  int u = 0;
  bool operator==(const DirCounts&) const = default;
};

// Replays the witness: a placement whose east and south runs were both length
// 1 counts as u; any other placement counts as its cast direction.
DirCounts direction_counts(const Tiling& tiling);

// Sum of H^h V^v over the non-maximal tilings of a rectangle ensemble.
// Throws std::invalid_argument if the region is not a full rectangle.
BiPoly hv_polynomial(const Ensemble& ensemble);

}  // namespace spotlight
