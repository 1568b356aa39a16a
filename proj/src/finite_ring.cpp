#include "dg/finite_ring.hpp"

#include <sstream>

namespace dg {

Vec FiniteRankRing::basis(int i) const {
    Vec v = zero();
    v[i] = 1;
    return v;
}

Vec FiniteRankRing::from_int(const Int& n) const { return reduce(scale(n, one)); }

Vec FiniteRankRing::reduce(Vec v) const {
    for (int i = 0; i < rank(); ++i)
        if (moduli[i] > 0) {
            v[i] %= moduli[i];
            if (v[i] < 0) v[i] += moduli[i];
        }
    return v;
}

Vec FiniteRankRing::add(const Vec& a, const Vec& b) const {
    Vec v = a;
    for (int i = 0; i < rank(); ++i) v[i] += b[i];
    return reduce(std::move(v));
}

Vec FiniteRankRing::sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

Vec FiniteRankRing::neg(const Vec& a) const {
    Vec v = a;
    for (auto& x : v) x = -x;
    return reduce(std::move(v));
}

Vec FiniteRankRing::scale(const Int& n, const Vec& a) const {
    Vec v = a;
    for (auto& x : v) x *= n;
    return reduce(std::move(v));
}

Vec FiniteRankRing::mul(const Vec& a, const Vec& b) const {
    Vec v = zero();
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (b[j] == 0) continue;
            const Vec& t = table[i][j];
            Int c = a[i] * b[j];
            for (int k = 0; k < rank(); ++k) v[k] += c * t[k];
        }
    }
    return reduce(std::move(v));
}

std::optional<Vec> FiniteRankRing::inv(const Vec& a) const {
    // solve a*x = 1 over the mixed module (slack columns absorb the torsion)
    IntMat m = left_mul(a);
    std::vector<int> tors;
    for (int i = 0; i < rank(); ++i)
        if (moduli[i] > 0) tors.push_back(i);
    IntMat aug(rank(), rank() + int(tors.size()));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) aug.at(i, j) = m.at(i, j);
    for (size_t k = 0; k < tors.size(); ++k) aug.at(tors[k], rank() + int(k)) = moduli[tors[k]];
    auto sol = solve_int(aug, one);
    if (!sol) return std::nullopt;
    Vec x(sol->begin(), sol->begin() + rank());
    x = reduce(std::move(x));
    if (mul(x, a) != one || mul(a, x) != one) return std::nullopt;
    return x;
}

Vec FiniteRankRing::trace_of(const Vec& a) const {
    if (!has_trace()) throw dg_error("ring has no trace data");
    Vec v = zero();
    for (int i = 0; i < rank(); ++i)
        for (int k = 0; k < rank(); ++k) v[k] += a[i] * trace[i][k];
    return reduce(std::move(v));
}

IntMat FiniteRankRing::left_mul(const Vec& v) const {
    IntMat m(rank(), rank());
    for (int j = 0; j < rank(); ++j) {
        Vec col = mul(v, basis(j));
        for (int i = 0; i < rank(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::vector<Vec> FiniteRankRing::torsion_rows() const {
    std::vector<Vec> rows;
    for (int i = 0; i < rank(); ++i)
        if (moduli[i] > 0) {
            Vec v = zero();
            v[i] = moduli[i];
            rows.push_back(std::move(v));
        }
    return rows;
}

void FiniteRankRing::check_associative() const {
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            for (int k = 0; k < rank(); ++k)
                if (mul(mul(basis(i), basis(j)), basis(k)) !=
                    mul(basis(i), mul(basis(j), basis(k))))
                    throw dg_error("associativity fails at basis triple " + names[i] +
                                   ", " + names[j] + ", " + names[k]);
}

bool FiniteRankRing::commutes_with_all(const Vec& v) const {
    for (int i = 0; i < rank(); ++i)
        if (mul(v, basis(i)) != mul(basis(i), v)) return false;
    return true;
}

std::string FiniteRankRing::format(const Vec& v, bool reverse) const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n < rank(); ++n) {
        int i = reverse ? rank() - 1 - n : n;
        Int c = v[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (names[i] == "1") os << c;
        else if (c == 1) os << names[i];
        else os << c << "*" << names[i];
    }
    return first ? "0" : os.str();
}

MixedLattice centralizer_of(const FiniteRankRing& r, const std::vector<Vec>& gens) {
    int n = r.rank();
    std::vector<int> tors;
    for (int i = 0; i < n; ++i)
        if (r.moduli[i] > 0) tors.push_back(i);
    // unknowns: x_0..x_{n-1}, then one slack per (generator, torsion coord)
    int cols = n + int(tors.size() * gens.size());
    int rows = n * int(gens.size());
    IntMat m(rows, cols);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (int i = 0; i < n; ++i) {
            Vec d = r.sub(r.mul(r.basis(i), gens[gi]), r.mul(gens[gi], r.basis(i)));
            for (int j = 0; j < n; ++j) m.at(int(gi) * n + j, i) = d[j];
        }
        for (size_t k = 0; k < tors.size(); ++k)
            m.at(int(gi) * n + tors[k], n + int(gi * tors.size() + k)) =
                r.moduli[tors[k]];
    }
    std::vector<Vec> sols;
    for (auto& row : int_kernel(m)) sols.emplace_back(row.begin(), row.begin() + n);
    return MixedLattice::make(n, r.torsion_rows(), std::move(sols));
}

namespace {

std::vector<std::function<Vec(const Vec&)>> mul_actions(const FiniteRankRing& r) {
    std::vector<std::function<Vec(const Vec&)>> acts;
    for (int i = 0; i < r.rank(); ++i) {
        Vec b = r.basis(i);
        acts.push_back([&r, b](const Vec& v) { return r.mul(b, v); });
        acts.push_back([&r, b](const Vec& v) { return r.mul(v, b); });
    }
    return acts;
}

} // namespace

MixedLattice two_sided_ideal(const FiniteRankRing& r, const std::vector<Vec>& gens) {
    MixedLattice start = MixedLattice::make(r.rank(), r.torsion_rows(), gens);
    return lattice_saturate(start, mul_actions(r));
}

MixedLattice ideal_trace_closure(const FiniteRankRing& r, const std::vector<Vec>& gens) {
    if (!r.has_trace()) throw dg_error("ideal_trace_closure requires trace data");
    auto acts = mul_actions(r);
    acts.push_back([&r](const Vec& v) { return r.trace_of(v); });
    for (int i = 0; i < r.rank(); ++i) {
        Vec x = r.basis(i);
        Vec lx = r.trace_of(x);
        acts.push_back([&r, x, lx](const Vec& y) {
            // x L(y) + L(xy - L(x) y)
            Vec xy = r.mul(x, y);
            return r.add(r.mul(x, r.trace_of(y)),
                         r.trace_of(r.sub(xy, r.mul(lx, y))));
        });
    }
    MixedLattice start = MixedLattice::make(r.rank(), r.torsion_rows(), gens);
    return lattice_saturate(start, acts);
}

FiniteRankRing quotient_ring(const FiniteRankRing& r, const std::vector<Vec>& gens,
                             QuotientDesc* desc) {
    MixedLattice ideal = two_sided_ideal(r, gens);
    QuotientDesc q = module_quotient(r.rank(), r.torsion_rows(), ideal);

    auto is_zero = [&](const Vec& v) {
        for (auto& x : v)
            if (x != 0) return false;
        return true;
    };
    // well-definedness: ideal representatives multiply into the ideal
    for (auto& row : ideal.basis)
        for (int j = 0; j < r.rank(); ++j) {
            if (!is_zero(q.project(r.mul(row, r.basis(j)))) ||
                !is_zero(q.project(r.mul(r.basis(j), row))))
                throw dg_error("quotient multiplication is not well defined");
        }

    FiniteRankRing out;
    out.moduli = q.moduli;
    out.one = q.project(r.one);
    for (int i = 0; i < q.new_rank; ++i) {
        Vec ei(q.new_rank, 0);
        ei[i] = 1;
        out.names.push_back("[" + r.format(r.reduce(q.section(ei))) + "]");
    }
    out.table.assign(q.new_rank, std::vector<Vec>(q.new_rank));
    for (int i = 0; i < q.new_rank; ++i) {
        Vec ei(q.new_rank, 0);
        ei[i] = 1;
        Vec si = r.reduce(q.section(ei));
        for (int j = 0; j < q.new_rank; ++j) {
            Vec ej(q.new_rank, 0);
            ej[j] = 1;
            out.table[i][j] = out.reduce(q.project(r.mul(si, r.reduce(q.section(ej)))));
        }
    }
    out.one = out.reduce(out.one);
    if (r.has_trace()) {
        bool descends = true;
        for (auto& row : ideal.basis)
            if (!is_zero(q.project(r.trace_of(row)))) descends = false;
        if (descends) {
            for (int i = 0; i < q.new_rank; ++i) {
                Vec ei(q.new_rank, 0);
                ei[i] = 1;
                out.trace.push_back(out.reduce(q.project(r.trace_of(r.reduce(q.section(ei))))));
            }
        }
    }
    if (desc) *desc = q;
    return out;
}

SymmetryReport check_symmetric(const FiniteRankRing& r) {
    SymmetryReport rep;
    if (!r.has_trace()) throw dg_error("check_symmetric requires trace data");
    Vec two = r.from_int(2);
    auto qf = [&](const Vec& e) { return r.sub(r.mul(r.trace_of(e), e), r.mul(e, e)); };
    for (int i = 0; i < r.rank(); ++i) {
        Vec e = r.basis(i);
        Vec le = r.trace_of(e);
        if (r.trace_of(le) != r.mul(two, le)) rep.trace_of_trace = false;
        Vec qe = qf(e);
        if (!r.commutes_with_all(qe)) rep.q_central = false;
        for (int j = 0; j < r.rank(); ++j) {
            Vec f = r.basis(j);
            Vec lf = r.trace_of(f);
            Vec ef = r.mul(e, f), fe = r.mul(f, e);
            Vec pairing = r.sub(r.sub(qf(r.add(e, f)), qe), qf(f));
            if (pairing != r.sub(r.mul(le, lf), r.trace_of(ef)))
                rep.symmetric_identity = false;
            if (r.trace_of(ef) != r.trace_of(fe)) rep.trace_commutes = false;
            if (qf(ef) != r.mul(qe, qf(f))) rep.q_multiplicative = false;
            Vec lhs = r.add(ef, fe);
            Vec rhs = r.add(r.neg(pairing), r.add(r.mul(le, f), r.mul(lf, e)));
            if (lhs != rhs) rep.anticommutator = false;
        }
    }
    return rep;
}

} // namespace dg
