#include "dg/groupoid_io.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace dg {

DeltaModel parse_groupoid(std::istream& in) {
    DeltaModel m;
    struct Pending {
        std::vector<std::array<std::string, 3>> compose;
        std::vector<std::string> h;
        std::vector<std::pair<std::string, std::string>> j;
    } pending;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw dg_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "object") {
            std::string name;
            if (!(ls >> name)) fail("object needs a name");
            m.g.add_object(name);
        } else if (kw == "mor") {
            std::string name, dom, cod;
            if (!(ls >> name >> dom >> cod)) fail("mor needs name dom cod");
            try {
                m.g.add_morphism(name, m.g.object_index(dom), m.g.object_index(cod));
            } catch (dg_error& e) {
                fail(e.what());
            }
        } else if (kw == "compose") {
            std::array<std::string, 3> t;
            if (!(ls >> t[0] >> t[1] >> t[2])) fail("compose needs f g fg");
            pending.compose.push_back(t);
        } else if (kw == "H") {
            std::string name;
            while (ls >> name) pending.h.push_back(name);
        } else if (kw == "j") {
            std::string f, jf;
            if (!(ls >> f >> jf)) fail("j needs f jf");
            pending.j.emplace_back(f, jf);
        } else {
            fail("unknown keyword " + kw);
        }
    }
    for (auto& t : pending.compose)
        m.g.set_compose(m.g.morphism_index(t[0]), m.g.morphism_index(t[1]),
                        m.g.morphism_index(t[2]));
    m.g.finalize();
    m.d.in_H.assign(m.g.morphisms.size(), 0);
    m.d.j.assign(m.g.morphisms.size(), -1);
    for (auto& name : pending.h) m.d.in_H[m.g.morphism_index(name)] = 1;
    for (auto& [f, jf] : pending.j)
        m.d.j[m.g.morphism_index(f)] = m.g.morphism_index(jf);
    return m;
}

DeltaModel parse_groupoid_text(const std::string& text) {
    std::istringstream in(text);
    return parse_groupoid(in);
}

std::string print_groupoid(const DeltaModel& m) {
    std::ostringstream os;
    for (auto& o : m.g.objects) os << "object " << o << "\n";
    for (auto& mor : m.g.morphisms)
        os << "mor " << mor.name << " " << m.g.objects[mor.dom] << " "
           << m.g.objects[mor.cod] << "\n";
    for (size_t x = 0; x < m.g.morphisms.size(); ++x)
        for (size_t y = 0; y < m.g.morphisms.size(); ++y)
            if (m.g.comp[x][y] != -1)
                os << "compose " << m.g.morphisms[x].name << " " << m.g.morphisms[y].name
                   << " " << m.g.morphisms[m.g.comp[x][y]].name << "\n";
    bool any_h = false;
    for (size_t x = 0; x < m.d.in_H.size(); ++x)
        if (m.d.in_H[x]) {
            os << (any_h ? " " : "H ") << m.g.morphisms[x].name;
            any_h = true;
        }
    if (any_h) os << "\n";
    for (size_t x = 0; x < m.d.j.size(); ++x)
        if (m.d.in_H[x] && m.d.j[x] != -1)
            os << "j " << m.g.morphisms[x].name << " " << m.g.morphisms[m.d.j[x]].name
               << "\n";
    return os.str();
}

} // namespace dg
