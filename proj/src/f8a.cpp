#include "dg/knot_models.hpp"

namespace dg {

namespace {

// basis order (1, s, z, a, g, ag)
Vec v6(std::initializer_list<std::pair<int, int>> entries) {
    Vec v(6, 0);
    for (auto& [i, c] : entries) v[i] += c;
    return v;
}

} // namespace

FiniteRankRing build_f8a() {
    FiniteRankRing r;
    r.names = {"1", "s", "z", "a", "g", "ag"};
    r.moduli.assign(6, 0);
    r.one = v6({{0, 1}});
    r.table.assign(6, std::vector<Vec>(6));

    // defining rules with s, z central:
    //   s^2 = 2z+1, z^2 = 2z, sz = 2s+z-2,
    //   a^2 = a+z-s, g^2 = z-2, ag+ga = 2-z+g,
    //   sa = a-s+z+1, sg = g, za = s-1, zg = 0
    const Vec g = v6({{4, 1}}), ag = v6({{5, 1}});

    const Vec ss = v6({{0, 1}, {2, 2}});
    const Vec sz = v6({{0, -2}, {1, 2}, {2, 1}});
    const Vec sa = v6({{0, 1}, {1, -1}, {2, 1}, {3, 1}});
    const Vec zz = v6({{2, 2}});
    const Vec za = v6({{0, -1}, {1, 1}});
    const Vec zero = v6({});
    const Vec aa = v6({{1, -1}, {2, 1}, {3, 1}});
    const Vec gg = v6({{0, -2}, {2, 1}});
    const Vec ga = v6({{0, 2}, {2, -1}, {4, 1}, {5, -1}});
    // derived by reduction with the rules above:
    const Vec a_ag = v6({{4, -1}, {5, 1}});                 // a(ag) = a^2 g
    const Vec g_ag = v6({{0, -1}, {1, -1}, {2, 1}, {3, 2}, {4, 2}}); // g(ag) = (ga)g
    const Vec ag_a = v6({{0, 1}, {1, -1}, {3, 2}, {4, 1}}); // (ag)a = a(ga)
    const Vec ag_g = v6({{0, -1}, {1, 1}, {3, -2}});        // (ag)g = a g^2
    const Vec ag_ag = v6({{0, -2}, {2, 1}, {5, 2}});        // (ag)(ag)

    auto set = [&](int i, int j, const Vec& v) { r.table[i][j] = v; };
    for (int i = 0; i < 6; ++i) {
        set(0, i, r.basis(i));
        set(i, 0, r.basis(i));
    }
    set(1, 1, ss);
    set(1, 2, sz); set(2, 1, sz);
    set(1, 3, sa); set(3, 1, sa);
    set(1, 4, g); set(4, 1, g);
    set(1, 5, ag); set(5, 1, ag);
    set(2, 2, zz);
    set(2, 3, za); set(3, 2, za);
    set(2, 4, zero); set(4, 2, zero);
    set(2, 5, zero); set(5, 2, zero);
    set(3, 3, aa);
    set(3, 4, ag);
    set(3, 5, a_ag);
    set(4, 3, ga);
    set(4, 4, gg);
    set(4, 5, g_ag);
    set(5, 3, ag_a);
    set(5, 4, ag_g);
    set(5, 5, ag_ag);

    return r;
}

} // namespace dg
