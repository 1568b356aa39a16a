#include "dg/delta_examples.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace dg {

int Group::inverse(int x) const {
    for (int y = 0; y < size(); ++y)
        if (mul[x][y] == 0) return y;
    throw dg_error("group element " + names[x] + " has no inverse");
}

void Group::validate() const {
    int n = size();
    for (int x = 0; x < n; ++x) {
        if (mul[0][x] != x || mul[x][0] != x) throw dg_error("element 0 is not a unit");
        inverse(x);
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mul[mul[x][y]][z] != mul[x][mul[y][z]])
                    throw dg_error("group multiplication is not associative");
    }
}

Group cyclic_group(int n) {
    if (n < 1) throw dg_error("cyclic group order must be positive");
    Group g;
    for (int i = 0; i < n; ++i) g.names.push_back(std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    return g;
}

Group klein4() {
    Group g;
    g.names = {"e", "a", "b", "c"};
    g.mul.assign(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.mul[i][j] = i ^ j;
    return g;
}

Group sym3() {
    // permutations of {0,1,2}; product pq acts as "p then q"
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    Group g;
    g.names = {"e", "t01", "t02", "t12", "c012", "c021"};
    int n = 6;
    g.mul.assign(n, std::vector<int>(n, -1));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            std::array<int, 3> r;
            for (int x = 0; x < 3; ++x) r[x] = perms[q][perms[p][x]];
            for (int s = 0; s < n; ++s)
                if (perms[s] == r) g.mul[p][q] = s;
        }
    return g;
}

Group group_by_name(const std::string& name) {
    if (name == "klein4") return klein4();
    if (name == "s3") return sym3();
    if (name.size() >= 2 && name[0] == 'z') {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 12) return cyclic_group(n);
    }
    throw dg_error("unknown group " + name);
}

DeltaModel build_coarse(const Group& grp) {
    grp.validate();
    int n = grp.size();
    DeltaModel m;
    for (int i = 0; i < n; ++i) m.g.add_object(grp.names[i]);
    std::vector<std::vector<int>> idx(n, std::vector<int>(n));
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            idx[f][g] = m.g.add_morphism("(" + grp.names[f] + "," + grp.names[g] + ")", f, g);
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) m.g.set_compose(idx[f][g], idx[g][h], idx[f][h]);
    m.g.finalize();
    m.d.in_H.assign(n * n, 1);
    m.d.j.assign(n * n, -1);
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            int fi = grp.inverse(f);
            m.d.j[idx[f][g]] = idx[fi][grp.mul[fi][g]];
        }
    return m;
}

namespace {

DeltaModel build_triples(int n, bool distinct_only) {
    if (n < (distinct_only ? 3 : 1)) throw dg_error("set too small");
    DeltaModel m;
    auto nm = [](int x) { return std::to_string(x); };
    std::map<std::pair<int, int>, int> obj;
    std::map<std::array<int, 3>, int> mor;
    auto ok2 = [&](int a, int b) { return !distinct_only || b != a; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (ok2(a, b))
                obj[{a, b}] = m.g.add_object("(" + nm(a) + "," + nm(b) + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (ok2(a, b) && ok2(a, c))
                    mor[{a, b, c}] = m.g.add_morphism(
                        "(" + nm(a) + "," + nm(b) + "," + nm(c) + ")", obj[{a, b}],
                        obj[{a, c}]);
    for (auto& [t1, i1] : mor)
        for (auto& [t2, i2] : mor)
            if (t1[0] == t2[0] && t1[2] == t2[1])
                m.g.set_compose(i1, i2, mor[{t1[0], t1[1], t2[2]}]);
    m.g.finalize();
    int nm_count = int(m.g.morphisms.size());
    m.d.in_H.assign(nm_count, 0);
    m.d.j.assign(nm_count, -1);
    for (auto& [t, i] : mor) {
        bool in_h = !distinct_only || (t[0] != t[1] && t[0] != t[2] && t[1] != t[2]);
        m.d.in_H[i] = in_h;
        if (in_h) m.d.j[i] = mor.at({t[1], t[0], t[2]});
    }
    return m;
}

} // namespace

DeltaModel build_triple(int n) { return build_triples(n, false); }
DeltaModel build_tetra(int n) { return build_triples(n, true); }

namespace {

/// Closure of a generating set inside a finite group given by a Cayley table.
std::vector<int> subgroup_closure(const Group& grp, std::vector<int> gens) {
    std::set<int> seen{0};
    std::vector<int> work{0};
    for (int g : gens)
        if (seen.insert(g).second) work.push_back(g);
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        std::vector<int> cur(seen.begin(), seen.end());
        for (int y : cur) {
            for (int p : {grp.mul[x][y], grp.mul[y][x], grp.inverse(x)})
                if (seen.insert(p).second) work.push_back(p);
        }
    }
    return {seen.begin(), seen.end()};
}

DeltaModel delta_group_from(const Group& grp, const std::vector<int>& h,
                            const std::vector<int>& j_images) {
    // restrict to the subgroup generated by h
    std::vector<int> elems = subgroup_closure(grp, h);
    std::map<int, int> pos;
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = int(i);
    DeltaModel m;
    m.g.add_object("*");
    for (int e : elems) m.g.add_morphism(grp.names[e], 0, 0);
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t k = 0; k < elems.size(); ++k)
            m.g.set_compose(int(i), int(k), pos.at(grp.mul[elems[i]][elems[k]]));
    m.g.finalize();
    m.d.in_H.assign(elems.size(), 0);
    m.d.j.assign(elems.size(), -1);
    for (size_t t = 0; t < h.size(); ++t) {
        m.d.in_H[pos.at(h[t])] = 1;
        m.d.j[pos.at(h[t])] = pos.at(j_images[t]);
    }
    return m;
}

Group unit_semidirect(int n, std::vector<std::pair<int, int>>& elems) {
    // Z/n ⋊ (Z/n)*: elements (x,y) with y a unit, product (x,y)(u,v) = (x+yu, yv)
    elems.clear();
    for (int y = 0; y < n; ++y) {
        Int g = gcd(Int(y), Int(n));
        if (g != 1) continue;
        for (int x = 0; x < n; ++x) elems.emplace_back(x, y);
    }
    // put the unit (0,1) first
    std::stable_partition(elems.begin(), elems.end(),
                          [](auto& e) { return e.first == 0 && e.second == 1; });
    Group grp;
    std::map<std::pair<int, int>, int> pos;
    for (size_t i = 0; i < elems.size(); ++i) {
        pos[elems[i]] = int(i);
        grp.names.push_back("(" + std::to_string(elems[i].first) + "," +
                            std::to_string(elems[i].second) + ")");
    }
    grp.mul.assign(elems.size(), std::vector<int>(elems.size()));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t k = 0; k < elems.size(); ++k) {
            auto [x, y] = elems[i];
            auto [u, v] = elems[k];
            grp.mul[i][k] = pos.at({(x + y * u) % n, (y * v) % n});
        }
    return grp;
}

int mod_inverse(int x, int n) {
    Int a, b;
    if (xgcd(Int(x), Int(n), a, b) != 1) throw dg_error("not a unit");
    return fmod(a, Int(n)).convert_to<int>();
}

} // namespace

DeltaModel build_ar(int n) {
    if (n < 2) throw dg_error("modulus must be at least 2");
    Group grp; // multiplicative group (Z/n)* as abstract group
    std::vector<int> units;
    for (int x = 1; x < n; ++x)
        if (gcd(Int(x), Int(n)) == 1) units.push_back(x);
    std::map<int, int> pos;
    for (size_t i = 0; i < units.size(); ++i) {
        pos[units[i]] = int(i);
        grp.names.push_back(std::to_string(units[i]));
    }
    grp.mul.assign(units.size(), std::vector<int>(units.size()));
    for (size_t i = 0; i < units.size(); ++i)
        for (size_t k = 0; k < units.size(); ++k)
            grp.mul[i][k] = pos.at(int((Int(units[i]) * units[k]) % n));

    std::vector<int> h, jh;
    for (int x : units) {
        int om = ((1 - x) % n + n) % n;
        if (!pos.count(om)) continue; // 1 - x not a unit
        h.push_back(pos.at(x));
        // j(x) = (1 - x^-1)^-1
        int xi = mod_inverse(x, n);
        int y = ((1 - xi) % n + n) % n;
        jh.push_back(pos.at(mod_inverse(y, n)));
    }
    return delta_group_from(grp, h, jh);
}

DeltaModel build_br(int n) {
    if (n < 2) throw dg_error("modulus must be at least 2");
    std::vector<std::pair<int, int>> elems;
    Group grp = unit_semidirect(n, elems);
    std::map<std::pair<int, int>, int> pos;
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = int(i);
    std::vector<int> h, jh;
    for (size_t i = 0; i < elems.size(); ++i) {
        auto [x, y] = elems[i];
        if (gcd(Int(x), Int(n)) != 1) continue; // H = units x units
        h.push_back(int(i));
        // j(x,y) = (x^-1, -x^-1 y)
        int xi = mod_inverse(x, n);
        jh.push_back(pos.at({xi, ((-Int(xi) * y) % n + n).convert_to<int>() % n}));
    }
    return delta_group_from(grp, h, jh);
}

DeltaModel build_malnormal(const Group& a, const std::vector<int>& b_elems) {
    a.validate();
    std::set<int> b(b_elems.begin(), b_elems.end());
    if (!b.count(0)) throw dg_error("subgroup must contain the unit");
    for (int x : b)
        for (int y : b)
            if (!b.count(a.mul[x][y])) throw dg_error("subgroup not closed");
    // malnormality: x B x^-1 ∩ B = {1} for all x outside B
    for (int x = 0; x < a.size(); ++x) {
        if (b.count(x)) continue;
        int xi = a.inverse(x);
        for (int y : b) {
            if (y == 0) continue;
            if (b.count(a.mul[a.mul[x][y]][xi]))
                throw dg_error("subgroup is not malnormal");
        }
    }
    // nontrivial left cosets xB, x outside B
    auto coset = [&](int x) {
        std::set<int> c;
        for (int y : b) c.insert(a.mul[x][y]);
        return std::vector<int>(c.begin(), c.end());
    };
    std::map<std::vector<int>, int> coset_id;
    std::vector<std::vector<int>> cosets;
    std::vector<int> rep; // a representative element of each coset
    for (int x = 0; x < a.size(); ++x) {
        if (b.count(x)) continue;
        auto c = coset(x);
        if (!coset_id.count(c)) {
            coset_id[c] = int(cosets.size());
            cosets.push_back(c);
            rep.push_back(x);
        }
    }
    int nx = int(cosets.size());
    if (nx == 0) throw dg_error("no nontrivial cosets");
    // left action of B on cosets
    auto act = [&](int g, int ci) { return coset_id.at(coset(a.mul[g][rep[ci]])); };
    // objects: B-orbits on cosets
    std::vector<int> obj_of(nx, -1);
    int nobj = 0;
    for (int c = 0; c < nx; ++c) {
        if (obj_of[c] != -1) continue;
        for (int g : b) obj_of[act(g, c)] = nobj;
        ++nobj;
    }
    // morphisms: B-orbits on pairs of cosets
    std::map<std::pair<int, int>, int> mor_of;
    std::vector<std::pair<int, int>> mor_rep;
    for (int c1 = 0; c1 < nx; ++c1)
        for (int c2 = 0; c2 < nx; ++c2) {
            if (mor_of.count({c1, c2})) continue;
            int id = int(mor_rep.size());
            mor_rep.emplace_back(c1, c2);
            for (int g : b) mor_of[{act(g, c1), act(g, c2)}] = id;
        }
    DeltaModel m;
    for (int o = 0; o < nobj; ++o) m.g.add_object("O" + std::to_string(o));
    for (auto& [c1, c2] : mor_rep)
        m.g.add_morphism("[" + a.names[rep[c1]] + "B," + a.names[rep[c2]] + "B]",
                         obj_of[c1], obj_of[c2]);
    // composition: translate the second pair so its first coset matches
    for (size_t i = 0; i < mor_rep.size(); ++i)
        for (size_t k = 0; k < mor_rep.size(); ++k) {
            auto [x, y] = mor_rep[i];
            auto [y2, z] = mor_rep[k];
            if (obj_of[y] != obj_of[y2]) continue;
            int prod = -1;
            for (int g : b)
                if (act(g, y2) == y) {
                    prod = mor_of.at({x, act(g, z)});
                    break;
                }
            if (prod == -1) throw dg_error("action is not transitive on the orbit");
            m.g.set_compose(int(i), int(k), prod);
        }
    m.g.finalize();
    int nm = int(mor_rep.size());
    m.d.in_H.assign(nm, 0);
    m.d.j.assign(nm, -1);
    for (int i = 0; i < nm; ++i) {
        auto [c1, c2] = mor_rep[i];
        if (c1 == c2) continue; // identity morphism
        m.d.in_H[i] = 1;
    }
    for (int i = 0; i < nm; ++i) {
        if (!m.d.in_H[i]) continue;
        // j over every representative pair in the orbit; results must agree
        int image = -1;
        auto [c1, c2] = mor_rep[i];
        for (int g : b) {
            int p = a.mul[g][rep[c1]];
            // the second coset of this representative pair is g c2; find one
            // of its elements of the form p * (element of the target coset)
            int q = a.mul[g][rep[c2]];
            int pi = a.inverse(p);
            int jc1 = coset_id.at(coset(pi));
            int jc2 = coset_id.at(coset(a.mul[pi][q]));
            int img = mor_of.at({jc1, jc2});
            if (image == -1) image = img;
            else if (image != img) throw dg_error("j is not well defined");
        }
        m.d.j[i] = image;
    }
    return m;
}

DeltaModel build_example(const std::string& desc) {
    auto colon = desc.find(':');
    if (colon == std::string::npos) throw dg_error("model description needs kind:arg");
    std::string kind = desc.substr(0, colon), arg = desc.substr(colon + 1);
    auto num = [&]() {
        try {
            return std::stoi(arg);
        } catch (...) {
            throw dg_error("bad numeric argument " + arg);
        }
    };
    if (kind == "coarse") return build_coarse(group_by_name(arg));
    if (kind == "triple") return build_triple(num());
    if (kind == "tetra") return build_tetra(num());
    if (kind == "ar") return build_ar(num());
    if (kind == "br") return build_br(num());
    if (kind == "malnormal") {
        if (arg == "s3") return build_malnormal(sym3(), {0, 1});
        throw dg_error("malnormal model supports the s3 example only");
    }
    throw dg_error("unknown model kind " + kind);
}

} // namespace dg
