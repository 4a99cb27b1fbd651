#pragma once

#include <optional>

#include "rydfermi/common/errors.hpp"

template <class F>
std::optional<rydfermi::ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const rydfermi::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
