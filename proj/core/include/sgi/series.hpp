#pragma once

#include <cmath>

namespace sgi::series {

/// (e^x - 1) / x, continuous through x = 0.
inline double phi1(double x) {
  if (x == 0.0) return 1.0;
  return std::expm1(x) / x;
}

/// (e^x - 1 - x) / x^2, continuous through x = 0.
inline double phi2(double x) {
  if (std::abs(x) < 0.1) {
    // Taylor series to x^9; truncation below 1e-17 on |x| < 0.1.
    constexpr double c[] = {1.0 / 2,      1.0 / 6,       1.0 / 24,       1.0 / 120,
                            1.0 / 720,    1.0 / 5040,    1.0 / 40320,    1.0 / 362880,
                            1.0 / 3628800, 1.0 / 39916800};
    double sum = 0;
    for (int k = 9; k >= 0; --k) sum = sum * x + c[k];
    return sum;
  }
  return (std::expm1(x) - x) / (x * x);
}

}  // namespace sgi::series
