#include "dg/triangulation.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace dg {

Diagram parse_diagram(const std::string& text, bool allow_free_faces) {
    static const std::regex label_re("[A-Za-z][A-Za-z0-9_]*");
    Diagram d;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, int> occurrences;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw dg_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw != "tet") fail("expected `tet`, got " + kw);
        LotTet t;
        for (auto& l : t.g) {
            if (!(ls >> l)) fail("tet needs four labels");
            if (!std::regex_match(l, label_re)) fail("bad label " + l);
            ++occurrences[l];
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens after tet line");
        d.tets.push_back(std::move(t));
    }
    for (auto& [label, n] : occurrences) {
        if (n > 2) throw dg_error("label " + label + " occurs " + std::to_string(n) +
                                  " times (at most twice allowed)");
        if (n == 1 && !allow_free_faces)
            throw dg_error("label " + label + " occurs only once (free face)");
    }
    return d;
}

std::string DeltaPresentation::str() const {
    std::string out;
    for (auto& [lhs, rhs] : relations) out += lhs.str() + "=" + rhs.str() + "\n";
    return out;
}

DeltaPresentation delta_presentation(const Diagram& d) {
    DeltaPresentation p;
    for (auto& t : d.tets)
        for (auto& l : t.g)
            if (std::find(p.generators.begin(), p.generators.end(), l) ==
                p.generators.end())
                p.generators.push_back(l);
    for (auto& t : d.tets) {
        Term g1 = Term::make_gen(t.g[0]), g3 = Term::make_gen(t.g[2]);
        p.relations.emplace_back(Term::make_gen(t.g[1]), Term::make_prod({g1, g3}));
        p.relations.emplace_back(Term::make_gen(t.g[3]), Term::make_star(g1, g3));
    }
    return p;
}

namespace {

bool is_plain_gen(const Term& t, const std::string& g) {
    return t.kind == Term::Kind::Gen && t.sigma == S3::E && t.gen == g;
}

bool has_star(const Term& t) { return t.str().find('*') != std::string::npos; }

Term substitute(const Term& t, const std::string& g, const Term& w) {
    switch (t.kind) {
    case Term::Kind::Gen:
        if (t.gen != g) return t;
        return Term::make_app(t.sigma, w);
    case Term::Kind::Prod: {
        std::vector<Term> factors;
        for (auto& f : t.sub) factors.push_back(substitute(f, g, w));
        return Term::make_prod(std::move(factors));
    }
    case Term::Kind::App:
        return Term::make_app(t.sigma, substitute(t.sub[0], g, w));
    }
    throw dg_error("bad term");
}

} // namespace

DeltaPresentation eliminate(const DeltaPresentation& p, const std::string& g) {
    if (std::find(p.generators.begin(), p.generators.end(), g) == p.generators.end())
        throw dg_error("unknown generator " + g);
    // find a defining relation g = W, preferring star-free W
    int best = -1;
    bool best_starfree = false;
    Term w;
    for (size_t r = 0; r < p.relations.size(); ++r) {
        const auto& [lhs, rhs] = p.relations[r];
        const Term* cand = nullptr;
        if (is_plain_gen(lhs, g) && !rhs.mentions(g)) cand = &rhs;
        else if (is_plain_gen(rhs, g) && !lhs.mentions(g)) cand = &lhs;
        if (!cand) continue;
        bool starfree = !has_star(*cand);
        if (best == -1 || (starfree && !best_starfree)) {
            best = int(r);
            best_starfree = starfree;
            w = *cand;
        }
    }
    if (best == -1) throw dg_error("no defining relation for generator " + g);
    DeltaPresentation out;
    for (auto& name : p.generators)
        if (name != g) out.generators.push_back(name);
    for (size_t r = 0; r < p.relations.size(); ++r) {
        if (int(r) == best) continue;
        Term lhs = substitute(p.relations[r].first, g, w);
        Term rhs = substitute(p.relations[r].second, g, w);
        // display convention: the star-free side goes on the left
        if (has_star(lhs) && !has_star(rhs)) std::swap(lhs, rhs);
        out.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
    return out;
}

DeltaPresentation reduce_presentation(const DeltaPresentation& p, const Diagram& d) {
    DeltaPresentation cur = p;
    for (auto& t : d.tets)
        for (int slot : {1, 3}) {
            const std::string& g = t.g[slot];
            if (std::find(cur.generators.begin(), cur.generators.end(), g) ==
                cur.generators.end())
                continue;
            bool has_defining = false;
            for (auto& [lhs, rhs] : cur.relations)
                if ((is_plain_gen(lhs, g) && !rhs.mentions(g)) ||
                    (is_plain_gen(rhs, g) && !lhs.mentions(g)))
                    has_defining = true;
            if (has_defining) cur = eliminate(cur, g);
        }
    return cur;
}

long count_solutions(const DeltaPresentation& p, const FiniteGroupoid& g,
                     const DeltaData& dd) {
    std::vector<int> h;
    for (size_t x = 0; x < dd.in_H.size(); ++x)
        if (dd.in_H[x]) h.push_back(int(x));
    int n = int(p.generators.size());
    if (n > 0 && h.empty()) return 0;
    std::vector<int> assignment(n, 0);
    long count = 0;
    std::vector<size_t> idx(n, 0);
    while (true) {
        for (int v = 0; v < n; ++v) assignment[v] = h[idx[v]];
        bool ok = true;
        for (auto& [lhs, rhs] : p.relations) {
            auto a = eval_term(lhs, g, dd, p.generators, assignment);
            auto b = eval_term(rhs, g, dd, p.generators, assignment);
            if (!a || !b || *a != *b) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int pos = n - 1;
        while (pos >= 0 && ++idx[pos] == h.size()) idx[pos--] = 0;
        if (pos < 0) break;
        if (n == 0) break;
    }
    return count;
}

} // namespace dg
