#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "carkwork/modular_group.hpp"

namespace carkwork {

/// Angles are kept as integer ticks so that shared cell boundaries compare
/// exactly; a full turn is 3 * 2^32 ticks.
inline constexpr std::uint64_t full_turn_ticks = std::uint64_t{3} << 32;

inline constexpr std::size_t default_sunburst_depth = 8;

/// The depth cap: CARKWORK_MAX_DEPTH if set to a valid number, else 12.
std::size_t max_sunburst_depth();

struct SunburstCell {
  Word word;  // displayed label
  std::size_t annulus;
  std::uint64_t tick_start, tick_end;  // [start, end) within one turn
  std::optional<std::size_t> parent;   // index into the cell list

  double angle_start() const;  // radians
  double angle_end() const;
};

/// Cells of annuli 0..depth in breadth-first order. Annulus 0 holds I, L, L2
/// as three equal sectors; a cell ending in S (or I) is followed outward by
/// WL and WL2, each taking half its interval; any other cell by WS.
/// Throws depth_exceeded past max_sunburst_depth().
std::vector<SunburstCell> enumerate_cells(std::size_t depth);

/// Index of the cell labelled w. Throws unknown_cell.
std::size_t find_cell(const std::vector<SunburstCell>& cells, const Word& w);

/// Cells sharing a boundary arc or radial segment with cells[index], in index
/// order.
std::vector<std::size_t> neighbors(const std::vector<SunburstCell>& cells, std::size_t index);

/// cells[index], its parent, ..., up to annulus 0.
std::vector<std::size_t> path_to_root(const std::vector<SunburstCell>& cells, std::size_t index);

/// The layout of enumerate_cells(depth) with each label V replaced by the
/// normal form of center * V.
std::vector<SunburstCell> recenter(const Word& center, std::size_t depth);

/// Left-translates every label of a layout by m.
std::vector<SunburstCell> translate(std::vector<SunburstCell> cells, const GroupElement& m);

struct CellGeometry {
  double inner_radius, outer_radius;
  double angle_start, angle_end;
};

/// Annulus 0 is the unit disk; annulus k >= 1 spans radii [k, k + 1].
CellGeometry cell_geometry(const SunburstCell& cell);

}  // namespace carkwork
