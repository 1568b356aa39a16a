#include "dg/lattice.hpp"

namespace dg {

MixedLattice MixedLattice::make(int rank, std::vector<Vec> torsion, std::vector<Vec> gens) {
    MixedLattice l;
    l.rank = rank;
    for (auto& v : torsion)
        if (int(v.size()) != rank) throw dg_error("torsion relation dimension mismatch");
    for (auto& v : gens)
        if (int(v.size()) != rank) throw dg_error("generator dimension mismatch");
    l.torsion = std::move(torsion);
    std::vector<Vec> all = gens;
    all.insert(all.end(), l.torsion.begin(), l.torsion.end());
    l.basis = hermite_rows(std::move(all));
    return l;
}

bool MixedLattice::contains(const MixedLattice& sub) const {
    if (sub.rank != rank) return false;
    for (const Vec& v : sub.basis) {
        Vec w = v;
        if (!hnf_reduce(basis, w)) return false;
    }
    return true;
}

MixedLattice MixedLattice::with_extra(std::vector<Vec> more) const {
    std::vector<Vec> gens = basis;
    gens.insert(gens.end(), more.begin(), more.end());
    return make(rank, torsion, std::move(gens));
}

MixedLattice lattice_saturate(const MixedLattice& start,
                              const std::vector<std::function<Vec(const Vec&)>>& actions) {
    MixedLattice cur = start;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Vec> extra;
        for (const Vec& v : cur.basis)
            for (const auto& act : actions) {
                Vec w = act(v);
                if (int(w.size()) != cur.rank) throw dg_error("action dimension mismatch");
                Vec r = w;
                if (!hnf_reduce(cur.basis, r)) extra.push_back(std::move(w));
            }
        if (!extra.empty()) {
            cur = cur.with_extra(std::move(extra));
            changed = true;
        }
    }
    return cur;
}

Vec QuotientDesc::project(const Vec& x) const {
    if (int(x.size()) != old_rank) throw dg_error("project: dimension mismatch");
    Vec y = v.apply_row(x);
    Vec q(new_rank);
    for (int i = 0; i < new_rank; ++i) {
        q[i] = y[kept_cols[i]];
        if (moduli[i] != 0) q[i] = fmod(q[i], moduli[i]);
    }
    return q;
}

Vec QuotientDesc::section(const Vec& q) const {
    if (int(q.size()) != new_rank) throw dg_error("section: dimension mismatch");
    Vec y(old_rank, 0);
    for (int i = 0; i < new_rank; ++i) y[kept_cols[i]] = q[i];
    return v_inv.apply_row(y);
}

QuotientDesc module_quotient(int rank, const std::vector<Vec>& torsion,
                             const MixedLattice& sub) {
    if (sub.rank != rank) throw dg_error("module_quotient: rank mismatch");
    MixedLattice ambient = MixedLattice::make(
        rank, torsion, [&] {
            std::vector<Vec> full;
            for (int i = 0; i < rank; ++i) {
                Vec e(rank, 0);
                e[i] = 1;
                full.push_back(std::move(e));
            }
            return full;
        }());
    if (!ambient.contains(sub)) throw dg_error("module_quotient: sub not contained in ambient");

    std::vector<Vec> rel = sub.basis;
    if (rel.empty()) rel.push_back(Vec(rank, 0));
    IntMat r = IntMat::from_rows(rel);
    SmithResult s = smith_normal_form(r);

    QuotientDesc q;
    q.old_rank = rank;
    q.v = s.v;
    q.v_inv = s.v_inv;
    int n = std::min(r.rows, r.cols);
    for (int j = 0; j < rank; ++j) {
        Int d = j < n ? s.d.at(j, j) : Int(0);
        if (d == 1) continue; // dead coordinate
        q.kept_cols.push_back(j);
        q.moduli.push_back(d);
    }
    q.new_rank = int(q.kept_cols.size());
    return q;
}

} // namespace dg
