#ifndef DG_INTEGER_HPP
#define DG_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Floor division (rounds toward -inf), matching lattice reduction needs.
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Nonnegative remainder in [0, |b|).
inline Int fmod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += boost::multiprecision::abs(b);
    return r;
}

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g, g >= 0.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x; y = old_y;
    return old_r;
}

struct dg_error : std::runtime_error {
    explicit dg_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dg

#endif
