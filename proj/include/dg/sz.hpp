#ifndef DG_SZ_HPP
#define DG_SZ_HPP

#include "dg/integer.hpp"

#include <array>
#include <sstream>

namespace dg {

/// The commutative ring Z[s,z]/((s-1)(z-2), s^2-2z-1, z^2-2z) on the basis
/// (1, s, z). The relations give the structure constants
///   s^2 = 2z + 1,  z^2 = 2z,  s*z = 2s + z - 2.
class SZBase {
public:
    SZBase() : c_{0, 0, 0} {}
    SZBase(Int one, Int s, Int z) : c_{std::move(one), std::move(s), std::move(z)} {}

    static SZBase s() { return {0, 1, 0}; }
    static SZBase z() { return {0, 0, 1}; }
    static SZBase from_int(Int n) { return {std::move(n), 0, 0}; }

    const Int& coeff(int i) const { return c_[i]; }

    SZBase operator-() const { return {-c_[0], -c_[1], -c_[2]}; }
    SZBase operator+(const SZBase& o) const {
        return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]};
    }
    SZBase operator-(const SZBase& o) const { return *this + (-o); }

    SZBase operator*(const SZBase& o) const {
        const Int &a1 = c_[0], &b1 = c_[1], &d1 = c_[2];
        const Int &a2 = o.c_[0], &b2 = o.c_[1], &d2 = o.c_[2];
        Int one = a1 * a2 + b1 * b2 - 2 * (b1 * d2 + d1 * b2);
        Int s = a1 * b2 + b1 * a2 + 2 * (b1 * d2 + d1 * b2);
        Int z = a1 * d2 + d1 * a2 + 2 * b1 * b2 + b1 * d2 + d1 * b2 + 2 * d1 * d2;
        return {one, s, z};
    }

    bool operator==(const SZBase& o) const { return c_ == o.c_; }
    bool operator!=(const SZBase& o) const { return !(*this == o); }

    std::string str() const {
        static const char* names[3] = {"", "s", "z"};
        std::string out;
        for (int i = 0; i < 3; ++i) {
            if (c_[i] == 0) continue;
            Int a = c_[i];
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            if (i == 0) out += a.str();
            else {
                if (a != 1) out += a.str() + "*";
                out += names[i];
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<Int, 3> c_;
};

} // namespace dg

#endif
