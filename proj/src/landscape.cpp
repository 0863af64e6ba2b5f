#include "analogy/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include <fmt/core.h>

#include "analogy/error.hpp"

namespace analogy {

namespace {

std::size_t index_of(Position p) { return static_cast<std::size_t>(p); }

void validate_axis(const Axis& axis, const char* name) {
  if (axis.steps < 2) throw DomainError(fmt::format("{} axis needs at least 2 steps", name));
  if (!(axis.min < axis.max) || !std::isfinite(axis.min) || !std::isfinite(axis.max)) {
    throw DomainError(fmt::format("{} axis needs min < max", name));
  }
  if (axis.min < 0.0) throw DomainError(fmt::format("{} axis must stay in the positive reals", name));
}

std::string format_number(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  return fmt::format("{:.9f}", v);
}

}  // namespace

void validate(const GridSpec& spec) {
  std::array<int, 4> seen{};
  for (const auto& f : spec.fixed) {
    if (!(f.value > 0.0) || !std::isfinite(f.value)) {
      throw DomainError(fmt::format("fixed term {} must be positive", to_string(f.role)));
    }
    ++seen[index_of(f.role)];
  }
  ++seen[index_of(spec.x.role)];
  ++seen[index_of(spec.y.role)];
  if (std::any_of(seen.begin(), seen.end(), [](int n) { return n != 1; })) {
    throw DomainError("grid roles must cover a, b, c, d exactly once");
  }
  validate_axis(spec.x, "x");
  validate_axis(spec.y, "y");
  if (!(spec.clamp > 0.0) || !std::isfinite(spec.clamp)) throw DomainError("clamp must be positive");
}

Quadruple cell_quadruple(const GridSpec& spec, std::size_t ix, std::size_t iy) {
  std::array<double, 4> terms{};
  for (const auto& f : spec.fixed) terms[index_of(f.role)] = f.value;
  terms[index_of(spec.x.role)] = spec.x.at(ix);
  terms[index_of(spec.y.role)] = spec.y.at(iy);
  return Quadruple(terms);
}

PGrid compute_grid(const GridSpec& spec, unsigned workers) {
  validate(spec);
  const std::size_t width = spec.x.steps;
  const std::size_t total = width * spec.y.steps;
  PGrid grid{spec, std::vector<PowerResult>(total, AllPowers{})};

  const auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      grid.cells[k] = find_p_in_arrangement(cell_quadruple(spec, k % width, k / width), spec.solver);
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers <= 1) {
    fill(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t begin = 0; begin < total; begin += chunk) {
      pool.emplace_back(fill, begin, std::min(total, begin + chunk));
    }
  }
  return grid;
}

void write_csv(const PGrid& grid, std::ostream& out) {
  out << "x,y,status,p\n";
  const auto& spec = grid.spec;
  for (std::size_t iy = 0; iy < spec.y.steps; ++iy) {
    for (std::size_t ix = 0; ix < spec.x.steps; ++ix) {
      std::string status;
      std::string p;
      std::visit(
          [&](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, UniquePower>) {
              status = "unique";
              p = format_number(cell.p.value());
            } else if constexpr (std::is_same_v<T, AllPowers>) {
              status = "allp";
            } else if constexpr (std::is_same_v<T, NoPower>) {
              status = "nop";
            } else {
              status = cell.side.kind() == ExtendedPower::Kind::NegInf ? "inf-" : "inf+";
            }
          },
          grid.at(ix, iy));
      out << format_number(spec.x.at(ix)) << ',' << format_number(spec.y.at(iy)) << ',' << status
          << ',' << p << '\n';
    }
  }
  if (!out) throw std::ios_base::failure("failed to write landscape CSV");
}

Rgb cell_color(const PowerResult& cell, double clamp) {
  return std::visit(
      [&](const auto& c) -> Rgb {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, UniquePower>) {
          const double t = std::clamp(c.p.value(), -clamp, clamp) / clamp;
          const auto level = static_cast<std::uint8_t>(std::lround(255.0 * std::abs(t)));
          return t < 0 ? Rgb{0, 0, level} : Rgb{level, 0, 0};
        } else if constexpr (std::is_same_v<T, AllPowers>) {
          return {255, 255, 255};
        } else if constexpr (std::is_same_v<T, NoPower>) {
          return {128, 128, 128};
        } else {
          return c.side.kind() == ExtendedPower::Kind::NegInf ? Rgb{0, 0, 255} : Rgb{255, 0, 0};
        }
      },
      cell);
}

std::vector<std::uint8_t> render_ppm(const PGrid& grid) {
  const auto& spec = grid.spec;
  const std::string header = fmt::format("P6\n{} {}\n255\n", spec.x.steps, spec.y.steps);
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + 3 * grid.cells.size());
  for (std::size_t row = 0; row < spec.y.steps; ++row) {
    const std::size_t iy = spec.y.steps - 1 - row;
    for (std::size_t ix = 0; ix < spec.x.steps; ++ix) {
      const Rgb px = cell_color(grid.at(ix, iy), spec.clamp);
      bytes.push_back(px.r);
      bytes.push_back(px.g);
      bytes.push_back(px.b);
    }
  }
  return bytes;
}

}  // namespace analogy
