#ifndef DG_POLY_HPP
#define DG_POLY_HPP

#include "dg/integer.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

namespace dg {

/// A set of named (commutative) variables; each may be a Laurent variable
/// (negative exponents allowed). Variables are kept sorted by name so the
/// term order (lex on names, then exponents) is canonical.
struct PolyRing {
    std::vector<std::string> vars;
    std::vector<bool> laurent;

    PolyRing() = default;
    PolyRing(std::vector<std::string> names, std::vector<bool> laurent_flags) {
        std::vector<size_t> idx(names.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return names[a] < names[b]; });
        for (size_t i : idx) {
            vars.push_back(names[i]);
            laurent.push_back(laurent_flags[i]);
        }
        for (size_t i = 1; i < vars.size(); ++i)
            if (vars[i] == vars[i - 1]) throw dg_error("duplicate variable " + vars[i]);
    }

    int index(const std::string& name) const {
        auto it = std::lower_bound(vars.begin(), vars.end(), name);
        if (it == vars.end() || *it != name) throw dg_error("unknown variable " + name);
        return int(it - vars.begin());
    }

    bool operator==(const PolyRing& o) const {
        return vars == o.vars && laurent == o.laurent;
    }
};

/// Sparse multivariate (Laurent) polynomial with exact integer coefficients.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    MultiPoly() : ring_(nullptr) {}
    explicit MultiPoly(const PolyRing* ring) : ring_(ring) {}

    static MultiPoly constant(const PolyRing* ring, Int c) {
        MultiPoly p(ring);
        if (c != 0) p.terms_[Expo(ring->vars.size(), 0)] = std::move(c);
        return p;
    }

    static MultiPoly monomial(const PolyRing* ring, const std::string& var, int exp = 1,
                              Int coeff = 1) {
        int i = ring->index(var);
        if (exp < 0 && !ring->laurent[i])
            throw dg_error("negative exponent for non-Laurent variable " + var);
        MultiPoly p(ring);
        if (coeff != 0) {
            Expo e(ring->vars.size(), 0);
            e[i] = exp;
            p.terms_[std::move(e)] = std::move(coeff);
        }
        return p;
    }

    const PolyRing* ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Int>& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Expo& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Int constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw dg_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(ring_);
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r = *this;
        for (auto& [e, c] : o.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        check_ring(o);
        MultiPoly r(ring_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) {
                Expo e(e1.size());
                for (size_t i = 0; i < e.size(); ++i) {
                    e[i] = e1[i] + e2[i];
                    if (e[i] < 0 && !ring_->laurent[i])
                        throw dg_error("negative exponent for non-Laurent variable " +
                                       ring_->vars[i]);
                }
                Int c = c1 * c2;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    if (c != 0) r.terms_[std::move(e)] = std::move(c);
                } else {
                    it->second += c;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    MultiPoly pow(int n) const {
        if (n < 0) throw dg_error("negative power of a polynomial");
        MultiPoly r = constant(ring_, 1), base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = n > 1 ? base * base : base;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (ring_ != o.ring_ && !(ring_ && o.ring_ && *ring_ == *o.ring_)) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    bool operator<(const MultiPoly& o) const { return terms_ < o.terms_; }

    /// Evaluate under a ring homomorphism. `M` supplies Elem, add, mul, one,
    /// from_int. var_images[i] is the image of variable i; for Laurent
    /// variables with negative exponents, var_inv_images[i] must be set.
    template <class M>
    typename M::Elem eval(const M& m, const std::vector<typename M::Elem>& var_images,
                          const std::vector<typename M::Elem>& var_inv_images) const {
        typename M::Elem acc = m.from_int(0);
        for (auto& [e, c] : terms_) {
            typename M::Elem t = m.from_int(c);
            for (size_t i = 0; i < e.size(); ++i) {
                int k = e[i];
                const typename M::Elem& base = k >= 0 ? var_images[i] : var_inv_images[i];
                for (int j = 0; j < std::abs(k); ++j) t = m.mul(t, base);
            }
            acc = m.add(acc, t);
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono = mono_str(e);
            if (mono.empty()) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << mono;
            }
        }
        return os.str();
    }

private:
    void check_ring(const MultiPoly& o) const {
        if (ring_ != o.ring_ && !(ring_ && o.ring_ && *ring_ == *o.ring_))
            throw dg_error("incompatible variable sets");
    }

    std::string mono_str(const Expo& e) const {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring_->vars[i];
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    const PolyRing* ring_;
    std::map<Expo, Int> terms_;
};

enum class PolyOp { add, mul, neg };

/// Single entry point for polynomial arithmetic.
inline MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
    switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::mul: return p * q;
    case PolyOp::neg: return -p;
    }
    throw dg_error("bad op");
}

} // namespace dg

#endif
