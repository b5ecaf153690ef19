#pragma once

namespace nrqc {

// Internal convention: angular frequencies and rates in rad/us, times in us.
// Config files and the CLI use cyclic MHz; 1 MHz of ordinary frequency is
// 2*pi rad/us of angular frequency.
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline constexpr double mhz_to_rad_us(double mhz) { return kTwoPi * mhz; }
inline constexpr double rad_us_to_mhz(double w) { return w / kTwoPi; }

}  // namespace nrqc
