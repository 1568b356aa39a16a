#include "dg/term.hpp"

#include <algorithm>

namespace dg {

namespace {

// permutation tables: value = image of position index
constexpr std::array<std::array<int, 3>, 6> kPerm = {{
    {0, 1, 2}, // E
    {1, 0, 2}, // I
    {0, 2, 1}, // J
    {2, 1, 0}, // K = iji
    {1, 2, 0}, // IJ = i after j
    {2, 0, 1}, // JI = j after i
}};

S3 from_perm(const std::array<int, 3>& p) {
    for (int s = 0; s < 6; ++s)
        if (kPerm[s] == p) return S3(s);
    throw dg_error("not a permutation");
}

} // namespace

S3 s3_mul(S3 a, S3 b) {
    std::array<int, 3> p;
    for (int x = 0; x < 3; ++x) p[x] = kPerm[int(a)][kPerm[int(b)][x]];
    return from_perm(p);
}

S3 s3_inverse(S3 a) {
    std::array<int, 3> p;
    for (int x = 0; x < 3; ++x) p[kPerm[int(a)][x]] = x;
    return from_perm(p);
}

const char* s3_name(S3 a) {
    static const char* names[6] = {"", "i", "j", "k", "ij", "ji"};
    return names[int(a)];
}

S3 s3_normalize(const std::string& word) {
    S3 acc = S3::E;
    // letters act in application order: the leftmost letter is applied last
    for (char c : word) {
        if (c == 'i') acc = s3_mul(acc, S3::I);
        else if (c == 'j') acc = s3_mul(acc, S3::J);
        else if (c == 'k') acc = s3_mul(acc, S3::K);
        else throw dg_error(std::string("bad letter in S3 word: ") + c);
    }
    return acc;
}

Term Term::make_gen(const std::string& name, S3 s) {
    Term t;
    t.kind = Kind::Gen;
    t.gen = name;
    t.sigma = s;
    return t;
}

Term Term::make_prod(std::vector<Term> factors) {
    std::vector<Term> flat;
    for (auto& f : factors) {
        if (f.kind == Kind::Prod)
            flat.insert(flat.end(), f.sub.begin(), f.sub.end());
        else
            flat.push_back(std::move(f));
    }
    if (flat.size() == 1) return flat[0];
    Term t;
    t.kind = Kind::Prod;
    t.sub = std::move(flat);
    return t;
}

Term Term::make_app(S3 s, Term t) {
    if (s == S3::E) return t;
    if (t.kind == Kind::Gen) {
        t.sigma = s3_mul(s, t.sigma);
        return t;
    }
    Term r;
    r.kind = Kind::App;
    r.sigma = s;
    r.sub.push_back(std::move(t));
    return r;
}

Term Term::make_star(Term a, Term b) {
    return make_app(S3::J, make_prod({make_app(S3::K, std::move(a)),
                                      make_app(S3::J, std::move(b))}));
}

bool Term::mentions(const std::string& g) const {
    if (kind == Kind::Gen) return gen == g;
    return std::any_of(sub.begin(), sub.end(),
                       [&](const Term& t) { return t.mentions(g); });
}

bool Term::operator==(const Term& o) const {
    return kind == o.kind && sigma == o.sigma && gen == o.gen && sub == o.sub;
}

std::optional<std::pair<Term, Term>> Term::star_parts() const {
    if (kind != Kind::App || sigma != S3::J) return std::nullopt;
    const Term& p = sub[0];
    if (p.kind != Kind::Prod || p.sub.size() != 2) return std::nullopt;
    const Term &f1 = p.sub[0], &f2 = p.sub[1];
    // x*y = j(k(x) j(y)): recover x and y from k- and j-prefixed factors
    auto unapply = [](S3 s, const Term& f) -> std::optional<Term> {
        if (f.kind == Kind::App && f.sigma == s) return f.sub[0];
        if (f.kind == Kind::Gen && (f.sigma == s || s3_mul(s, f.sigma) == S3::E))
            return make_gen(f.gen, s3_mul(s, f.sigma));
        return std::nullopt;
    };
    auto a = unapply(S3::K, f1);
    auto b = unapply(S3::J, f2);
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
}

std::string Term::str() const {
    if (auto st = star_parts()) {
        auto wrap = [](const Term& t) {
            std::string s = t.str();
            return t.kind == Kind::Gen ? s : "(" + s + ")";
        };
        return wrap(st->first) + "*" + wrap(st->second);
    }
    switch (kind) {
    case Kind::Gen:
        return sigma == S3::E ? gen : std::string(s3_name(sigma)) + "(" + gen + ")";
    case Kind::Prod: {
        std::string out;
        for (auto& f : sub) {
            std::string s = f.str();
            bool needs_parens = s.find('*') != std::string::npos && f.star_parts();
            out += needs_parens ? "(" + s + ")" : s;
        }
        return out;
    }
    case Kind::App:
        return std::string(s3_name(sigma)) + "(" + sub[0].str() + ")";
    }
    throw dg_error("bad term");
}

namespace {

std::optional<int> apply_s3_model(S3 s, int x, const FiniteGroupoid& g,
                                  const DeltaData& d) {
    auto j = [&](int m) -> std::optional<int> {
        if (!d.in_H[m]) return std::nullopt;
        return d.j[m];
    };
    switch (s) {
    case S3::E: return x;
    case S3::I: return g.inv[x];
    case S3::J: return j(x);
    case S3::IJ: {
        auto r = j(x);
        return r ? std::optional<int>(g.inv[*r]) : std::nullopt;
    }
    case S3::JI: return j(g.inv[x]);
    case S3::K: {
        auto r = j(g.inv[x]);
        return r ? std::optional<int>(g.inv[*r]) : std::nullopt;
    }
    }
    return std::nullopt;
}

} // namespace

std::optional<int> eval_term(const Term& t, const FiniteGroupoid& g, const DeltaData& d,
                             const std::vector<std::string>& gens,
                             const std::vector<int>& assignment) {
    switch (t.kind) {
    case Term::Kind::Gen: {
        auto it = std::find(gens.begin(), gens.end(), t.gen);
        if (it == gens.end()) throw dg_error("unassigned generator " + t.gen);
        return apply_s3_model(t.sigma, assignment[it - gens.begin()], g, d);
    }
    case Term::Kind::Prod: {
        std::optional<int> acc;
        for (auto& f : t.sub) {
            auto v = eval_term(f, g, d, gens, assignment);
            if (!v) return std::nullopt;
            if (!acc) {
                acc = v;
            } else {
                if (!g.composable(*acc, *v)) return std::nullopt;
                acc = g.compose(*acc, *v);
            }
        }
        return acc;
    }
    case Term::Kind::App: {
        auto v = eval_term(t.sub[0], g, d, gens, assignment);
        if (!v) return std::nullopt;
        return apply_s3_model(t.sigma, *v, g, d);
    }
    }
    return std::nullopt;
}

} // namespace dg
