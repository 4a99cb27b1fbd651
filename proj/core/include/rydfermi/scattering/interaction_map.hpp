#pragma once

#include <string>
#include <vector>

#include "rydfermi/scattering/pseudopotential.hpp"

namespace rydfermi::scattering {

enum class MapPlane {
  XY,  // z = 0, columns x, rows y
  RhoZ // y = 0, columns rho (signed, along x), rows z
};

enum class CellStatus { Ok, Cropped, Error };

std::string_view to_string(CellStatus status) noexcept;

struct MapSpec {
  MapPlane plane = MapPlane::XY;
  double extent = 0.0;  // half-width of the square window, atomic units
  int resolution = 64;  // cells per side, >= 16
  /// cells whose in-plane distance from the core is below this are cropped
  double crop_radius = 0.0;
  int threads = 1;
};

struct MapCell {
  double u = 0.0;  // column coordinate (x or rho)
  double v = 0.0;  // row coordinate (y or z)
  InteractionSample sample;
  CellStatus status = CellStatus::Ok;
  std::string message;
};

struct InteractionMap {
  MapSpec spec;
  std::vector<MapCell> cells;  // row-major: index = row * resolution + column

  const MapCell& at(int row, int column) const { return cells.at(static_cast<std::size_t>(row * spec.resolution + column)); }
};

/// Cell centres are c_i = (i + 1/2 - res/2) * (2 extent / res), symmetric
/// about the core. Rows are evaluated in parallel; each cell is a plain
/// v_rf call so results do not depend on the thread count.
InteractionMap interaction_map(const FermiPseudopotential& potential, const MapSpec& spec);

Vec3 map_point(const MapSpec& spec, double u, double v) noexcept;
double cell_center(const MapSpec& spec, int index) noexcept;

/// CSV with header x,y_or_z,s_term_MHz,p_term_MHz,total_MHz,status
std::string to_csv(const InteractionMap& map, double length_scale = 1.0);

}  // namespace rydfermi::scattering
