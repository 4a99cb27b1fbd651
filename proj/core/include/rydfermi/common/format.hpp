#pragma once

#include <string>

namespace rydfermi {

/// Shortest decimal form that round-trips ("%.17g" trimmed), locale-free.
std::string format_double(double x);

}  // namespace rydfermi
