#ifndef DG_MODULAR_HPP
#define DG_MODULAR_HPP

#include "dg/integer.hpp"

#include <optional>

namespace dg {

/// Residue in [0, n) with all operations reduced mod n.
class ModularInt {
public:
    ModularInt(Int value, Int modulus) : n_(std::move(modulus)) {
        if (n_ <= 0) throw dg_error("modulus must be positive");
        r_ = fmod(value, n_);
    }

    const Int& residue() const { return r_; }
    const Int& modulus() const { return n_; }

    ModularInt operator+(const ModularInt& o) const { return {r_ + check(o).r_, n_}; }
    ModularInt operator-(const ModularInt& o) const { return {r_ - check(o).r_, n_}; }
    ModularInt operator*(const ModularInt& o) const { return {r_ * check(o).r_, n_}; }
    ModularInt operator-() const { return {-r_, n_}; }

    bool is_unit() const { return gcd(r_, n_) == 1; }

    std::optional<ModularInt> inverse() const {
        Int x, y;
        if (xgcd(r_, n_, x, y) != 1) return std::nullopt;
        return ModularInt(x, n_);
    }

    /// Division defined only when o is a unit.
    ModularInt operator/(const ModularInt& o) const {
        auto inv = check(o).inverse();
        if (!inv) throw dg_error("division by non-unit mod " + n_.str());
        return *this * *inv;
    }

    bool operator==(const ModularInt& o) const { return n_ == o.n_ && r_ == o.r_; }
    bool operator!=(const ModularInt& o) const { return !(*this == o); }

private:
    const ModularInt& check(const ModularInt& o) const {
        if (o.n_ != n_) throw dg_error("modulus mismatch");
        return o;
    }

    Int r_, n_;
};

} // namespace dg

#endif
