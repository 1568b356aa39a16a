#include "dg/groupoid.hpp"

#include <algorithm>

namespace dg {

int FiniteGroupoid::add_object(const std::string& name) {
    objects.push_back(name);
    return int(objects.size()) - 1;
}

int FiniteGroupoid::add_morphism(const std::string& name, int dom, int cod) {
    if (dom < 0 || dom >= int(objects.size()) || cod < 0 || cod >= int(objects.size()))
        throw dg_error("morphism " + name + ": bad object index");
    morphisms.push_back({name, dom, cod});
    int idx = int(morphisms.size()) - 1;
    for (auto& row : comp) row.push_back(-1);
    comp.emplace_back(morphisms.size(), -1);
    return idx;
}

void FiniteGroupoid::set_compose(int x, int y, int xy) {
    if (!composable(x, y))
        throw dg_error("compose " + morphisms[x].name + " " + morphisms[y].name +
                       ": cod/dom mismatch");
    if (morphisms[xy].dom != morphisms[x].dom || morphisms[xy].cod != morphisms[y].cod)
        throw dg_error("compose " + morphisms[x].name + " " + morphisms[y].name +
                       ": product has wrong endpoints");
    comp[x][y] = xy;
}

int FiniteGroupoid::object_index(const std::string& name) const {
    auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end()) throw dg_error("unknown object " + name);
    return int(it - objects.begin());
}

int FiniteGroupoid::morphism_index(const std::string& name) const {
    for (size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].name == name) return int(i);
    throw dg_error("unknown morphism " + name);
}

void FiniteGroupoid::finalize() {
    int n = int(morphisms.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (composable(x, y) != (comp[x][y] != -1))
                throw dg_error("composition table incomplete or inconsistent at " +
                               morphisms[x].name + ", " + morphisms[y].name);
        }
    // associativity
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (comp[x][y] == -1) continue;
            for (int z = 0; z < n; ++z) {
                if (comp[y][z] == -1) continue;
                if (comp[comp[x][y]][z] != comp[x][comp[y][z]])
                    throw dg_error("composition is not associative");
            }
        }
    // identities: for each object, the unique two-sided unit among endomorphisms
    id_of.assign(objects.size(), -1);
    for (int e = 0; e < n; ++e) {
        if (morphisms[e].dom != morphisms[e].cod) continue;
        bool unit = true;
        for (int x = 0; x < n && unit; ++x) {
            if (comp[e][x] != -1 && comp[e][x] != x) unit = false;
            if (comp[x][e] != -1 && comp[x][e] != x) unit = false;
        }
        if (unit) {
            if (id_of[morphisms[e].dom] != -1) throw dg_error("duplicate identity");
            id_of[morphisms[e].dom] = e;
        }
    }
    for (size_t a = 0; a < objects.size(); ++a)
        if (id_of[a] == -1) throw dg_error("object " + objects[a] + " has no identity");
    // inverses
    inv.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (comp[x][y] == id_of[morphisms[x].dom] &&
                comp[y][x] == id_of[morphisms[x].cod]) {
                inv[x] = y;
                break;
            }
        if (inv[x] == -1) throw dg_error("morphism " + morphisms[x].name + " has no inverse");
    }
}

static int j_checked(const FiniteGroupoid& g, const DeltaData& d, int x) {
    if (!d.in_H[x]) throw dg_error("j applied outside H: " + g.morphisms[x].name);
    int y = d.j[x];
    if (y < 0 || y >= int(g.morphisms.size()))
        throw dg_error("j undefined on " + g.morphisms[x].name);
    if (!d.in_H[y])
        throw dg_error("j image outside H: " + g.morphisms[x].name + " -> " +
                       g.morphisms[y].name);
    return y;
}

int k_of(const FiniteGroupoid& g, const DeltaData& d, int x) {
    if (!d.in_H[x]) throw dg_error("k applied outside H: " + g.morphisms[x].name);
    int ix = g.inv[x];
    if (!d.in_H[ix])
        throw dg_error("H not closed under inverse at " + g.morphisms[x].name);
    return g.inv[j_checked(g, d, ix)];
}

bool h_composable(const FiniteGroupoid& g, const DeltaData& d, int x, int y) {
    if (!d.in_H[x] || !d.in_H[y] || !g.composable(x, y)) return false;
    return d.in_H[g.compose(x, y)] != 0;
}

AxiomReport check_delta(const FiniteGroupoid& g, const DeltaData& d) {
    int n = int(g.morphisms.size());
    if (int(d.in_H.size()) != n || int(d.j.size()) != n)
        throw dg_error("delta data size mismatch");
    // malformed-input checks, separate from axiom failures: j must be a map H -> H
    for (int x = 0; x < n; ++x)
        if (d.in_H[x]) j_checked(g, d, x);

    AxiomReport r;
    // (i) i(H) = H
    for (int x = 0; x < n && r.inv_closure.pass; ++x)
        if (d.in_H[x] && !d.in_H[g.inv[x]]) r.inv_closure = {false, x, x};

    // S3 closure of H (a consequence of (i) plus j: H->H, but checked up front
    // so the remaining axioms can evaluate k); failure here is malformed input.
    if (r.inv_closure.pass)
        for (int x = 0; x < n; ++x)
            if (d.in_H[x]) k_of(g, d, x);

    // (ii) j^2 = id and iji = jij on H
    if (r.inv_closure.pass)
        for (int x = 0; x < n && r.s3_action.pass; ++x) {
            if (!d.in_H[x]) continue;
            if (d.j[d.j[x]] != x) {
                r.s3_action = {false, x, x};
                break;
            }
            int iji = g.inv[d.j[g.inv[x]]];
            int jij = d.j[g.inv[d.j[x]]];
            if (iji != jij) r.s3_action = {false, x, x};
        }

    bool k_ok = r.inv_closure.pass && r.s3_action.pass;
    // (iii) composable pairs in H^2 stay composable after (k, j)
    if (k_ok)
        for (int x = 0; x < n && r.composability.pass; ++x) {
            if (!d.in_H[x]) continue;
            for (int y = 0; y < n; ++y) {
                if (!d.in_H[y] || !g.composable(x, y)) continue;
                if (!g.composable(k_of(g, d, x), d.j[y])) {
                    r.composability = {false, x, y};
                    break;
                }
            }
        }

    // (iv) H-composable pairs: (k(x), j(y)) H-composable and the product rule
    if (k_ok)
        for (int x = 0; x < n && r.product_rule.pass; ++x) {
            if (!d.in_H[x]) continue;
            for (int y = 0; y < n; ++y) {
                if (!h_composable(g, d, x, y)) continue;
                int kx = k_of(g, d, x), jy = d.j[y];
                if (!h_composable(g, d, kx, jy)) {
                    r.product_rule = {false, x, y};
                    break;
                }
                int lhs = d.j[g.compose(x, y)];
                int rhs = g.compose(d.j[x], d.j[g.compose(kx, jy)]);
                if (lhs != rhs) {
                    r.product_rule = {false, x, y};
                    break;
                }
            }
        }

    // generation: close H under product and inverse; must reach every morphism
    {
        std::vector<char> seen(n, 0);
        std::vector<int> work;
        // the subgroupoid generated by H is wide: identities are always in
        for (int e : g.id_of) {
            seen[e] = 1;
            work.push_back(e);
        }
        for (int x = 0; x < n; ++x)
            if (d.in_H[x] && !seen[x]) {
                seen[x] = 1;
                work.push_back(x);
            }
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            if (!seen[g.inv[x]]) {
                seen[g.inv[x]] = 1;
                work.push_back(g.inv[x]);
            }
            for (int y = 0; y < n; ++y)
                if (seen[y]) {
                    for (int p : {g.comp[x][y], g.comp[y][x]})
                        if (p != -1 && !seen[p]) {
                            seen[p] = 1;
                            work.push_back(p);
                        }
                }
        }
        // a groupoid with no morphisms at all is generated by the empty H
        for (int x = 0; x < n; ++x)
            if (!seen[x]) {
                r.generation = {false, x, x};
                break;
            }
    }
    return r;
}

int star(const FiniteGroupoid& g, const DeltaData& d, int x, int y) {
    if (!h_composable(g, d, x, y))
        throw dg_error("pair (" + g.morphisms[x].name + ", " + g.morphisms[y].name +
                       ") is not H-composable");
    return d.j[g.compose(k_of(g, d, x), d.j[y])];
}

int object_dual(const FiniteGroupoid& g, const DeltaData& d, int a) {
    int dual = -1;
    for (size_t x = 0; x < g.morphisms.size(); ++x) {
        if (!d.in_H[x] || g.morphisms[x].dom != a) continue;
        int cand = g.morphisms[d.j[x]].dom;
        if (dual == -1) dual = cand;
        else if (dual != cand)
            throw dg_error("object dual not independent of witness at " + g.objects[a]);
    }
    if (dual == -1) throw dg_error("no element of H starts at " + g.objects[a]);
    return dual;
}

} // namespace dg
