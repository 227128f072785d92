#include "spotlight/tiling.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace spotlight {

const char* to_string(Dir dir) {
  switch (dir) {
    case Dir::H: return "H";
    case Dir::V: return "V";
    case Dir::U: return "U";
  }
  return "?";
}

std::vector<Cell> covered_cells(const Spotlight& spot) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(spot.length));
  int dr = spot.dir == Dir::V ? 1 : 0;
  int dc = spot.dir == Dir::H ? 1 : 0;
  for (int i = 0; i < spot.length; ++i)
    cells.push_back({spot.origin.row + i * dr, spot.origin.col + i * dc});
  return cells;
}

Spotlight cast_spotlight(const Region& untiled, Cell corner, Dir dir) {
  if (dir == Dir::U)
    throw std::invalid_argument("cast_spotlight: dir must be H or V");
  if (!untiled.contains(corner) || untiled.contains({corner.row - 1, corner.col}) ||
      untiled.contains({corner.row, corner.col - 1}))
    throw std::invalid_argument("cast_spotlight: not a northwest corner");
  int dr = dir == Dir::V ? 1 : 0;
  int dc = dir == Dir::H ? 1 : 0;
  int length = 1;
  while (untiled.contains({corner.row + length * dr, corner.col + length * dc}))
    ++length;
  return {corner, length == 1 ? Dir::U : dir, length};
}

namespace {

std::vector<Cell> remove_cells(const std::vector<Cell>& from,
                               const std::vector<Cell>& gone) {
  std::vector<Cell> sorted_gone = gone;
  std::sort(sorted_gone.begin(), sorted_gone.end());
  std::vector<Cell> out;
  out.reserve(from.size() - sorted_gone.size());
  std::set_difference(from.begin(), from.end(), sorted_gone.begin(),
                      sorted_gone.end(), std::back_inserter(out));
  return out;
}

std::vector<Spotlight> merge_spots(const std::vector<Spotlight>& a,
                                   const std::vector<Spotlight>& b) {
  std::vector<Spotlight> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Tiling translate(Tiling t, int dr, int dc) {
  for (Spotlight& s : t.spots) {
    s.origin.row += dr;
    s.origin.col += dc;
  }
  for (Placement& p : t.witness) {
    p.corner.row += dr;
    p.corner.col += dc;
  }
  return t;
}

// Recursive enumeration with per-call memoization. The memo is keyed on the
// normalized cell set of a connected component; disconnected remainders are
// the cross product of their components' ensembles (cells of distinct
// components are never 4-adjacent, so corners and casts are per-component and
// the concatenated witnesses stay legal).
struct Enumerator {
  std::mt19937_64* rng = nullptr;
  std::map<std::vector<Cell>, std::vector<Tiling>> memo;

  std::vector<Tiling> tile_any(const Region& region) {
    if (region.empty()) return {Tiling{}};
    std::vector<Region> comps = connected_components(region);
    if (comps.size() == 1) return tile_connected(region);
    std::vector<Tiling> acc = {Tiling{}};
    for (const Region& comp : comps) {
      std::vector<Tiling> part = tile_connected(comp);
      std::vector<Tiling> next;
      next.reserve(acc.size() * part.size());
      for (const Tiling& a : acc)
        for (const Tiling& p : part) {
          Tiling merged;
          merged.spots = merge_spots(a.spots, p.spots);
          merged.witness = a.witness;
          merged.witness.insert(merged.witness.end(), p.witness.begin(),
                                p.witness.end());
          next.push_back(std::move(merged));
        }
      acc = std::move(next);
    }
    return acc;
  }

  std::vector<Tiling> tile_connected(const Region& region) {
    int dr = region.cells().front().row;
    int dc = region.cells().front().col;
    for (Cell c : region.cells()) dc = std::min(dc, c.col);
    Region norm = normalize(region);
    auto it = memo.find(norm.cells());
    if (it == memo.end()) it = memo.emplace(norm.cells(), enumerate(norm)).first;
    std::vector<Tiling> out = it->second;
    if (dr != 0 || dc != 0)
      for (Tiling& t : out) t = translate(std::move(t), dr, dc);
    return out;
  }

  std::vector<Tiling> enumerate(const Region& region) {
    std::vector<std::pair<Cell, Dir>> branches;
    for (Cell corner : nw_corners(region)) {
      branches.push_back({corner, Dir::H});
      branches.push_back({corner, Dir::V});
    }
    if (rng) std::shuffle(branches.begin(), branches.end(), *rng);
    std::set<Tiling> dedup;
    for (auto [corner, dir] : branches) {
      Spotlight spot = cast_spotlight(region, corner, dir);
      Region rest{remove_cells(region.cells(), covered_cells(spot))};
      for (const Tiling& sub : tile_any(rest)) {
        Tiling t;
        t.spots = merge_spots(sub.spots, {spot});
        t.witness.push_back({corner, dir});
        t.witness.insert(t.witness.end(), sub.witness.begin(), sub.witness.end());
        dedup.insert(std::move(t));
      }
    }
    return {dedup.begin(), dedup.end()};
  }
};

}  // namespace

Ensemble enumerate_tilings(const Region& region,
                           std::optional<std::uint64_t> shuffle_seed) {
  Enumerator e;
  std::mt19937_64 rng;
  if (shuffle_seed) {
    rng.seed(*shuffle_seed);
    e.rng = &rng;
  }
  Ensemble out;
  out.region = region;
  out.tilings = e.tile_any(region);
  std::sort(out.tilings.begin(), out.tilings.end());
  if (!out.tilings.empty()) {
    out.min_size = out.tilings.front().size();
    out.max_size = out.min_size;
    for (const Tiling& t : out.tilings) {
      out.min_size = std::min(out.min_size, t.size());
      out.max_size = std::max(out.max_size, t.size());
    }
  }
  return out;
}

std::vector<Spotlight> canonical_form(std::vector<Spotlight> spots) {
  std::vector<Cell> all;
  for (const Spotlight& s : spots) {
    std::vector<Cell> cs = covered_cells(s);
    all.insert(all.end(), cs.begin(), cs.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("canonical_form: spotlights overlap");
  for (Spotlight& s : spots)
    if (s.length == 1) s.dir = Dir::U;
  std::sort(spots.begin(), spots.end());
  return spots;
}

namespace {

// Run length from `corner` in direction `dir` within the untiled set.
int run_length(const Region& untiled, Cell corner, Dir dir) {
  int drr = dir == Dir::V ? 1 : 0;
  int dcc = dir == Dir::H ? 1 : 0;
  int length = 1;
  while (untiled.contains({corner.row + length * drr, corner.col + length * dcc}))
    ++length;
  return length;
}

}  // namespace

std::optional<std::vector<Placement>> find_witness(
    const Region& region, const std::vector<Spotlight>& spots) {
  std::vector<Cell> all;
  for (const Spotlight& s : spots) {
    if (s.length < 1) return std::nullopt;
    if (s.dir == Dir::U && s.length != 1) return std::nullopt;
    std::vector<Cell> cs = covered_cells(s);
    all.insert(all.end(), cs.begin(), cs.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return std::nullopt;
  if (all != region.cells()) return std::nullopt;

  std::size_t n = spots.size();
  std::set<std::vector<bool>> failed;
  std::vector<bool> placed(n, false);
  std::vector<Placement> order;

  auto cells_of = [](const Spotlight& s) {
    std::vector<Cell> cs = covered_cells(s);
    std::sort(cs.begin(), cs.end());
    return cs;
  };

  std::function<bool(const Region&, std::size_t)> dfs =
      [&](const Region& untiled, std::size_t done) -> bool {
    if (done == n) return true;
    if (failed.contains(placed)) return false;
    std::vector<Cell> corners = nw_corners(untiled);
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      const Spotlight& s = spots[i];
      if (!std::binary_search(corners.begin(), corners.end(), s.origin)) continue;
      for (Dir d : {Dir::H, Dir::V}) {
        if (s.dir != Dir::U && s.dir != d) continue;
        Spotlight cast = cast_spotlight(untiled, s.origin, d);
        if (cells_of(cast) != cells_of(s)) continue;
        Region rest{remove_cells(untiled.cells(), covered_cells(cast))};
        placed[i] = true;
        order.push_back({s.origin, d});
        if (dfs(rest, done + 1)) return true;
        placed[i] = false;
        order.pop_back();
        if (s.length == 1) break;  // H and V casts of a singleton coincide
      }
    }
    failed.insert(placed);
    return false;
  };

  if (!dfs(region, 0)) return std::nullopt;
  return order;
}

bool is_valid_tiling(const Region& region, const std::vector<Spotlight>& spots) {
  return find_witness(region, spots).has_value();
}

std::map<int, Count> size_distribution(const Ensemble& ensemble) {
  std::map<int, Count> out;
  for (const Tiling& t : ensemble.tilings) ++out[t.size()];
  return out;
}

DirCounts direction_counts(const Tiling& tiling) {
  std::vector<Cell> all;
  for (const Spotlight& s : tiling.spots) {
    std::vector<Cell> cs = covered_cells(s);
    all.insert(all.end(), cs.begin(), cs.end());
  }
  Region untiled{std::move(all)};
  DirCounts out;
  for (const Placement& p : tiling.witness) {
    int east = run_length(untiled, p.corner, Dir::H);
    int south = run_length(untiled, p.corner, Dir::V);
    if (east == 1 && south == 1)
      ++out.u;
    else if (p.dir == Dir::H)
      ++out.h;
    else
      ++out.v;
    Spotlight cast = cast_spotlight(untiled, p.corner, p.dir);
    untiled = Region{remove_cells(untiled.cells(), covered_cells(cast))};
  }
  if (!untiled.empty())
    throw std::logic_error("direction_counts: witness does not cover the region");
  return out;
}

BiPoly hv_polynomial(const Ensemble& ensemble) {
  Region norm = normalize(ensemble.region);
  if (norm.empty())
    throw std::invalid_argument("hv_polynomial: region is not a rectangle");
  int rows = 0, cols = 0;
  for (Cell c : norm.cells()) {
    rows = std::max(rows, c.row + 1);
    cols = std::max(cols, c.col + 1);
  }
  if (norm.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("hv_polynomial: region is not a rectangle");
  BiPoly poly;
  for (const Tiling& t : ensemble.tilings) {
    if (t.size() == ensemble.max_size) continue;
    DirCounts dc = direction_counts(t);
    if (dc.u != 0)
      throw std::logic_error("hv_polynomial: non-maximal tiling with a U tile");
    poly.add(dc.h, dc.v, 1);
  }
  return poly;
}

}  // namespace spotlight
