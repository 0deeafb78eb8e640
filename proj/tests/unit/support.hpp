#pragma once

#include <cmath>

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}
