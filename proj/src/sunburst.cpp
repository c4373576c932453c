#include "carkwork/sunburst.hpp"

#include <charconv>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>

#include "carkwork/error.hpp"

namespace carkwork {

std::size_t max_sunburst_depth() {
  constexpr std::size_t fallback = 12;
  const char* env = std::getenv("CARKWORK_MAX_DEPTH");
  if (env == nullptr) {
    return fallback;
  }
  const std::string_view text(env);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return fallback;
  }
  return value;
}

namespace {

double to_radians(std::uint64_t ticks) {
  return 2.0 * std::numbers::pi * static_cast<double>(ticks) / static_cast<double>(full_turn_ticks);
}

Letters extended(const Word& w, Letter letter) {
  Letters out = w.letters();
  out.push_back(letter);
  return out;
}

}  // namespace

double SunburstCell::angle_start() const { return to_radians(tick_start); }

double SunburstCell::angle_end() const { return to_radians(tick_end); }

std::vector<SunburstCell> enumerate_cells(std::size_t depth) {
  const std::size_t cap = max_sunburst_depth();
  if (depth > cap) {
    throw DomainError(ErrorCode::depth_exceeded, "sunburst depth " + std::to_string(depth) +
                                                     " exceeds the cap " + std::to_string(cap));
  }
  constexpr std::uint64_t third = full_turn_ticks / 3;
  std::vector<SunburstCell> cells{
      {Word(), 0, 0, third, std::nullopt},
      {Word({Letter::L}), 0, third, 2 * third, std::nullopt},
      {Word({Letter::L2}), 0, 2 * third, full_turn_ticks, std::nullopt},
  };
  std::size_t begin = 0;
  for (std::size_t annulus = 1; annulus <= depth; ++annulus) {
    const std::size_t end = cells.size();
    for (std::size_t i = begin; i < end; ++i) {
      const SunburstCell parent = cells[i];
      if (parent.word.empty() || parent.word.back() != Letter::S) {
        cells.push_back({Word(extended(parent.word, Letter::S)), annulus, parent.tick_start,
                         parent.tick_end, i});
      } else {
        const std::uint64_t mid = parent.tick_start + (parent.tick_end - parent.tick_start) / 2;
        cells.push_back(
            {Word(extended(parent.word, Letter::L)), annulus, parent.tick_start, mid, i});
        cells.push_back({Word(extended(parent.word, Letter::L2)), annulus, mid, parent.tick_end, i});
      }
    }
    begin = end;
  }
  return cells;
}

std::size_t find_cell(const std::vector<SunburstCell>& cells, const Word& w) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].word == w) {
      return i;
    }
  }
  throw DomainError(ErrorCode::unknown_cell, "no cell labelled " + w.to_string());
}

std::vector<std::size_t> neighbors(const std::vector<SunburstCell>& cells, std::size_t index) {
  if (index >= cells.size()) {
    throw DomainError(ErrorCode::unknown_cell, "cell index out of range");
  }
  const SunburstCell& cell = cells[index];
  auto touches = [&cell](const SunburstCell& other) {
    if (other.annulus == cell.annulus) {
      return other.tick_end % full_turn_ticks == cell.tick_start ||
             cell.tick_end % full_turn_ticks == other.tick_start;
    }
    if (other.annulus + 1 == cell.annulus || cell.annulus + 1 == other.annulus) {
      return other.tick_start < cell.tick_end && cell.tick_start < other.tick_end;
    }
    return false;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != index && touches(cells[i])) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> path_to_root(const std::vector<SunburstCell>& cells, std::size_t index) {
  if (index >= cells.size()) {
    throw DomainError(ErrorCode::unknown_cell, "cell index out of range");
  }
  std::vector<std::size_t> out{index};
  while (cells[out.back()].parent) {
    out.push_back(*cells[out.back()].parent);
  }
  return out;
}

std::vector<SunburstCell> translate(std::vector<SunburstCell> cells, const GroupElement& m) {
  if (m.is_identity()) {
    return cells;
  }
  const Letters prefix = matrix_to_word(m).letters();
  for (auto& cell : cells) {
    Letters joined = prefix;
    joined.insert(joined.end(), cell.word.letters().begin(), cell.word.letters().end());
    cell.word = free_reduce(joined);
  }
  return cells;
}

std::vector<SunburstCell> recenter(const Word& center, std::size_t depth) {
  return translate(enumerate_cells(depth), word_to_matrix(center));
}

CellGeometry cell_geometry(const SunburstCell& cell) {
  const auto k = static_cast<double>(cell.annulus);
  return {cell.annulus == 0 ? 0.0 : k, k + 1.0, cell.angle_start(), cell.angle_end()};
}

}  // namespace carkwork
