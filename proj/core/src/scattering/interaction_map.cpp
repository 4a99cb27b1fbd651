#include "rydfermi/scattering/interaction_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "rydfermi/common/errors.hpp"
#include "rydfermi/common/format.hpp"

namespace rydfermi::scattering {

std::string_view to_string(CellStatus status) noexcept {
  switch (status) {
    case CellStatus::Ok: return "ok";
    case CellStatus::Cropped: return "cropped";
    case CellStatus::Error: return "error";
  }
  return "error";
}

double cell_center(const MapSpec& spec, int index) noexcept {
  const double step = 2.0 * spec.extent / spec.resolution;
  return (index + 0.5 - 0.5 * spec.resolution) * step;
}

Vec3 map_point(const MapSpec& spec, double u, double v) noexcept {
  if (spec.plane == MapPlane::XY) return {u, v, 0.0};
  return {u, 0.0, v};
}

InteractionMap interaction_map(const FermiPseudopotential& potential, const MapSpec& spec) {
  if (spec.resolution < 16) fail(ErrorKind::ConfigInvalid, "map resolution must be at least 16");
  if (!(spec.extent > 0.0)) fail(ErrorKind::ConfigInvalid, "map extent must be positive");
  InteractionMap map;
  map.spec = spec;
  const int res = spec.resolution;
  map.cells.resize(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));

  const auto fill_row = [&](int row) {
    const double v = cell_center(spec, row);
    for (int col = 0; col < res; ++col) {
      MapCell& cell = map.cells[static_cast<std::size_t>(row * res + col)];
      cell.u = cell_center(spec, col);
      cell.v = v;
      cell.sample.position = map_point(spec, cell.u, cell.v);
      if (std::hypot(cell.u, cell.v) < spec.crop_radius) {
        cell.status = CellStatus::Cropped;
        continue;
      }
      try {
        cell.sample = potential.at(cell.sample.position);
      } catch (const std::exception& e) {
        cell.status = CellStatus::Error;
        cell.message = e.what();
      }
    }
  };

  const int threads = std::clamp(spec.threads, 1, res);
  if (threads == 1) {
    for (int row = 0; row < res; ++row) fill_row(row);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int row = t; row < res; row += threads) fill_row(row);
      });
    for (auto& th : pool) th.join();
  }
  return map;
}

std::string to_csv(const InteractionMap& map, double length_scale) {
  std::string out = "x,y_or_z,s_term_MHz,p_term_MHz,total_MHz,status\n";
  for (const auto& cell : map.cells) {
    out += format_double(cell.u * length_scale);
    out += ',';
    out += format_double(cell.v * length_scale);
    out += ',';
    out += format_double(to_MHz(cell.sample.s_term));
    out += ',';
    out += format_double(to_MHz(cell.sample.p_term));
    out += ',';
    out += format_double(to_MHz(cell.sample.total));
    out += ',';
    out += to_string(cell.status);
    out += '\n';
  }
  return out;
}

}  // namespace rydfermi::scattering
