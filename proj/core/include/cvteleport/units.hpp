#pragma once

#include <cmath>

namespace cvt {

// Squeezing in decibels: kappa(dB) = 10 log10 e^{2 kappa}. 10 dB ~ 1.1513.
inline double db_to_natural(double db) { return db * std::log(10.0) / 20.0; }
inline double natural_to_db(double k) { return 20.0 * k / std::log(10.0); }

} // namespace cvt
