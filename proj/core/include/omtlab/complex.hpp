#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace omtlab {

// Points of the plane. All library entry points reject non-finite
// coordinates, so downstream code may assume finiteness.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

// Complex literal: `<real>` or `<real>+<real>i` / `<real>-<real>i`, no
// spaces inside the literal. format_complex/parse_complex round-trip
// bit-exactly.
std::string format_complex(Complex z);
Complex parse_complex(std::string_view text);

}  // namespace omtlab
