#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "analogy/solver.hpp"

namespace analogy {

struct FixedTerm {
  Position role;
  double value;
};

struct Axis {
  Position role;
  double min;
  double max;
  std::size_t steps;

  /// Cells are sampled at their centers: min + (i + 0.5) * (max - min) / steps.
  double at(std::size_t i) const {
    return min + (static_cast<double>(i) + 0.5) * (max - min) / static_cast<double>(steps);
  }
};

struct GridSpec {
  std::array<FixedTerm, 2> fixed;
  Axis x;
  Axis y;
  /// Symmetric display range of p in the rendered image.
  double clamp = 100.0;
  FindPOptions solver;
};

/// Throws DomainError unless the four roles are covered exactly once, steps >= 2,
/// min < max, fixed values and axis ranges positive, and clamp > 0.
void validate(const GridSpec& spec);

struct PGrid {
  GridSpec spec;
  /// Row-major, one row per y step: cells[iy * x.steps + ix].
  std::vector<PowerResult> cells;

  const PowerResult& at(std::size_t ix, std::size_t iy) const { return cells[iy * spec.x.steps + ix]; }
};

/// The quadruple of cell (ix, iy), in the grid's fixed arrangement.
Quadruple cell_quadruple(const GridSpec& spec, std::size_t ix, std::size_t iy);

/// Runs find_p_in_arrangement on every cell center. Cells are independent and
/// are spread over `workers` threads (0 = hardware concurrency).
PGrid compute_grid(const GridSpec& spec, unsigned workers = 0);

/// CSV with header "x,y,status,p", one row per cell in row-major order. status is
/// one of unique, allp, nop, inf-, inf+; p is empty unless status is unique.
/// Numbers are printed with 9 digits after the decimal point; infinite unique
/// powers print as -inf / +inf.
void write_csv(const PGrid& grid, std::ostream& out);

struct Rgb {
  std::uint8_t r;
  std::uint8_t g;
  std::uint8_t b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Palette: p clamped to [-clamp, clamp]; negative p -> (0, 0, round(255 |p|/clamp)),
/// positive p -> (round(255 p/clamp), 0, 0), so p = 0 is black. NoPower is
/// (128, 128, 128), AllPowers is white, DegenerateInfinite is pure blue (-inf) or
/// pure red (+inf).
Rgb cell_color(const PowerResult& cell, double clamp);

/// Binary P6 image, one pixel per cell, maxval 255. The top image row is the
/// largest y value.
std::vector<std::uint8_t> render_ppm(const PGrid& grid);

}  // namespace analogy
