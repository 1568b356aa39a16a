#ifndef DG_EISENSTEIN_HPP
#define DG_EISENSTEIN_HPP

#include "dg/integer.hpp"

#include <optional>
#include <sstream>

namespace dg {

/// Element of Z[t, 3^-1]/(t^2 - t + 1): (a + b*t)/3^k in lowest terms.
/// Since t^2 = t - 1, the conjugate of a+b*t is (a+b) - b*t and the norm is
/// N(a + b*t) = a^2 + a*b + b^2; units are exactly the elements of norm 3^m.
class EisensteinLoc {
public:
    EisensteinLoc() : a_(0), b_(0), k_(0) {}
    EisensteinLoc(Int a, Int b, int k = 0) : a_(std::move(a)), b_(std::move(b)), k_(k) {
        normalize();
    }

    static EisensteinLoc t() { return EisensteinLoc(0, 1); }
    static EisensteinLoc from_int(Int n) { return EisensteinLoc(std::move(n), 0); }
    /// 3^-k
    static EisensteinLoc third_power(int k) { return EisensteinLoc(1, 0, k); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    int k() const { return k_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    EisensteinLoc operator-() const { return EisensteinLoc(-a_, -b_, k_); }

    EisensteinLoc operator+(const EisensteinLoc& o) const {
        int k = std::max(k_, o.k_);
        Int s1 = pow3(k - k_), s2 = pow3(k - o.k_);
        return EisensteinLoc(a_ * s1 + o.a_ * s2, b_ * s1 + o.b_ * s2, k);
    }

    EisensteinLoc operator-(const EisensteinLoc& o) const { return *this + (-o); }

    EisensteinLoc operator*(const EisensteinLoc& o) const {
        // (a1+b1 t)(a2+b2 t), t^2 = t-1
        return EisensteinLoc(a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_,
                             k_ + o.k_);
    }

    /// Norm of the numerator a + b*t (ignores the 3-power denominator).
    Int numerator_norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    /// Inverse if the element is a unit (norm a power of 3), else nullopt.
    std::optional<EisensteinLoc> inverse() const {
        if (is_zero()) return std::nullopt;
        Int n = numerator_norm();
        int m = 0;
        Int v = n;
        while (v % 3 == 0) { v /= 3; ++m; }
        if (v != 1) return std::nullopt; // NotAUnit
        // 1/x = 3^k * conj / 3^m
        Int ca = a_ + b_, cb = -b_;
        if (k_ >= m) {
            Int s = pow3(k_ - m);
            return EisensteinLoc(ca * s, cb * s, 0);
        }
        return EisensteinLoc(ca, cb, m - k_);
    }

    bool operator==(const EisensteinLoc& o) const {
        return a_ == o.a_ && b_ == o.b_ && k_ == o.k_;
    }
    bool operator!=(const EisensteinLoc& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        std::string num;
        if (a_ == 0 && b_ == 0) return "0";
        if (a_ != 0) num += a_.str();
        if (b_ != 0) {
            if (b_ > 0 && !num.empty()) num += " + ";
            else if (b_ < 0) num += num.empty() ? "-" : " - ";
            Int ab = boost::multiprecision::abs(b_);
            if (ab != 1) num += ab.str() + "*";
            num += "t";
        }
        if (k_ == 0) return num;
        bool compound = num.find(' ') != std::string::npos;
        os << (compound ? "(" + num + ")" : num) << "/" << pow3(k_).str();
        return os.str();
    }

private:
    static Int pow3(int k) {
        Int r = 1;
        for (int i = 0; i < k; ++i) r *= 3;
        return r;
    }

    void normalize() {
        if (a_ == 0 && b_ == 0) { k_ = 0; return; }
        while (k_ > 0 && a_ % 3 == 0 && b_ % 3 == 0) {
            a_ /= 3;
            b_ /= 3;
            --k_;
        }
        if (k_ < 0) { // scale up (shouldn't normally happen)
            a_ *= pow3(-k_);
            b_ *= pow3(-k_);
            k_ = 0;
        }
    }

    Int a_, b_;
    int k_;
};

} // namespace dg

#endif
