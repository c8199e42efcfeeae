#include "algred/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "algred/error.hpp"
#include "algred/parser.hpp"

namespace algred {

namespace {

struct Entry {
    std::string key;
    std::string value;
    size_t line;
};

struct Section {
    std::string name;
    std::vector<Entry> entries;

    const Entry* find(const std::string& key) const {
        for (const Entry& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }
    std::vector<const Entry*> all(const std::string& key) const {
        std::vector<const Entry*> out;
        for (const Entry& e : entries)
            if (e.key == key) out.push_back(&e);
        return out;
    }
};

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

[[noreturn]] void fail_at(size_t line, const std::string& what) {
    throw parse_error("line " + std::to_string(line) + ": " + what);
}

size_t parse_uint(const std::string& value, size_t line) {
    if (value.empty()) fail_at(line, "expected a nonnegative integer");
    size_t out = 0;
    for (char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail_at(line, "expected a nonnegative integer, got '" + value + "'");
        out = out * 10 + static_cast<size_t>(c - '0');
        if (out > 1000000) fail_at(line, "integer too large");
    }
    return out;
}

std::vector<Section> parse_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail_at(lineno, "unterminated section header");
            sections.push_back(Section{trim(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail_at(lineno, "expected 'key = value'");
        if (sections.empty()) fail_at(lineno, "entry before any [section] header");
        sections.back().entries.push_back(
            Entry{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno});
    }
    return sections;
}

const Section* find_section(const std::vector<Section>& sections, const std::string& name) {
    for (const Section& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

Matrix parse_matrix_rows(const std::string& value, size_t rows, size_t cols, size_t line) {
    std::vector<std::string> row_texts = split(value, ';');
    if (row_texts.size() != rows)
        fail_at(line, "expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(row_texts.size()));
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        std::vector<std::string> entries = words(row_texts[r]);
        if (entries.size() != cols)
            fail_at(line, "row " + std::to_string(r + 1) + ": expected " + std::to_string(cols) +
                              " entries, got " + std::to_string(entries.size()));
        for (size_t c = 0; c < cols; ++c) {
            try {
                m.at(r, c) = parse_scalar(entries[c]);
            } catch (const Error& e) {
                fail_at(line, "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                  "): " + e.what());
            }
        }
    }
    return m;
}

PhaseSpace build_space(const Section& sec, const std::vector<std::string>& names) {
    const Entry* omega = sec.find("omega");
    if (!omega || omega->value == "canonical") {
        if (names.size() % 2 != 0)
            throw validation_error("[" + sec.name +
                                   "] canonical omega needs an even number of coordinates");
        return PhaseSpace::canonical(names);
    }
    Matrix m = parse_matrix_rows(omega->value, names.size(), names.size(), omega->line);
    return PhaseSpace(make_vars(names), std::move(m));
}

LieAlgebra build_algebra(const Section* sec) {
    if (!sec) throw validation_error("missing [lie] section");
    const Entry* dim = sec->find("dim");
    if (!dim) throw validation_error("[lie] missing dim");
    size_t k = parse_uint(dim->value, dim->line);
    if (k == 0) throw validation_error("[lie] dim must be positive");
    std::vector c(k, std::vector(k, std::vector<Gaussian>(k)));
    for (const Entry* e : sec->all("c")) {
        std::vector<std::string> parts = split(e->value, ':');
        if (parts.size() != 2) fail_at(e->line, "expected 'c = j l : m v [m v ...]'");
        std::vector<std::string> jl = words(parts[0]);
        std::vector<std::string> mv = words(parts[1]);
        if (jl.size() != 2 || mv.empty() || mv.size() % 2 != 0)
            fail_at(e->line, "expected 'c = j l : m v [m v ...]'");
        size_t j = parse_uint(jl[0], e->line), l = parse_uint(jl[1], e->line);
        if (j < 1 || j > k || l < 1 || l > k) fail_at(e->line, "generator index out of range");
        for (size_t t = 0; t < mv.size(); t += 2) {
            size_t m = parse_uint(mv[t], e->line);
            if (m < 1 || m > k) fail_at(e->line, "generator index out of range");
            Gaussian v;
            try {
                v = parse_gaussian(mv[t + 1]);
            } catch (const Error& err) {
                fail_at(e->line, err.what());
            }
            c[j - 1][l - 1][m - 1] = v;
            c[l - 1][j - 1][m - 1] = -v;
        }
    }
    return LieAlgebra(k, std::move(c));
}

RepData build_rep(const Section& sec, const LieAlgebra& algebra) {
    const Entry* dim_entry = sec.find("dim");
    if (!dim_entry) throw validation_error("[" + sec.name + "] missing dim");
    size_t dim = parse_uint(dim_entry->value, dim_entry->line);
    if (dim == 0) throw validation_error("[" + sec.name + "] dim must be positive");

    std::vector<Matrix> gens;
    for (const Entry* e : sec.all("gen"))
        gens.push_back(parse_matrix_rows(e->value, dim, dim, e->line));
    if (gens.size() != algebra.dim())
        throw validation_error("[" + sec.name + "] expected " + std::to_string(algebra.dim()) +
                               " generator matrices, got " + std::to_string(gens.size()));

    std::optional<Matrix> form;
    if (const Entry* f = sec.find("form"); f && f->value != "identity")
        form = parse_matrix_rows(f->value, dim, dim, f->line);

    auto flag = [&](const std::string& key) {
        const Entry* e = sec.find(key);
        if (!e) return false;
        if (e->value == "true" || e->value == "1") return true;
        if (e->value == "false" || e->value == "0") return false;
        fail_at(e->line, key + " must be true or false");
        return false;
    };
    return make_rep(algebra, dim, std::move(gens), std::move(form), flag("unitary"),
                    flag("irreducible"));
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Scenario parse_scenario_text(const std::string& text, const std::string& path_label) {
    Scenario sc;
    sc.path = path_label;
    sc.digest = fnv1a_hex(text);

    std::vector<Section> sections = parse_sections(text);
    const Section* space_sec = find_section(sections, "space");
    const Section* lie_sec = find_section(sections, "lie");
    const Section* momentum_sec = find_section(sections, "momentum");

    std::optional<LieAlgebra> algebra;
    if (lie_sec) algebra = build_algebra(lie_sec);

    std::optional<PhaseSpace> space;
    if (space_sec) {
        const Entry* coords = space_sec->find("coords");
        if (!coords) throw validation_error("[space] missing coords");
        std::vector<std::string> names = words(coords->value);
        if (names.empty()) throw validation_error("[space] coords is empty");
        space = build_space(*space_sec, names);
        if (const Entry* deg = space_sec->find("degree"))
            sc.degree = static_cast<unsigned>(parse_uint(deg->value, deg->line));
    }

    if (momentum_sec) {
        if (!space) throw validation_error("[momentum] requires a [space] section");
        if (!algebra) throw validation_error("[momentum] requires a [lie] section");
        std::vector<Poly> components;
        for (const Entry* e : momentum_sec->all("J")) {
            try {
                components.push_back(parse_poly(e->value, space->coords()));
            } catch (const Error& err) {
                fail_at(e->line, err.what());
            }
        }
        if (components.empty()) throw validation_error("[momentum] has no J components");
        sc.momentum = MomentumMap(*space, *algebra, std::move(components));
        if (const Entry* mu = momentum_sec->find("mu")) {
            for (const std::string& w : words(mu->value)) {
                try {
                    sc.mu.push_back(parse_gaussian(w));
                } catch (const Error& err) {
                    fail_at(mu->line, err.what());
                }
            }
            if (sc.mu.size() != sc.momentum->dim())
                fail_at(mu->line, "mu needs one value per momentum component");
        }
    }

    if (const Section* chart_sec = find_section(sections, "chart")) {
        if (!sc.momentum) throw validation_error("[chart] requires [space] and [momentum]");
        const Entry* alpha = chart_sec->find("alpha");
        if (!alpha) throw validation_error("[chart] missing alpha");
        std::vector<std::string> comps = split(alpha->value, ';');
        const PhaseSpace& sp = sc.momentum->space();
        if (comps.size() != sp.dim())
            fail_at(alpha->line, "alpha needs " + std::to_string(sp.dim()) + " components");
        OneForm form{sp.coords(), {}};
        for (const std::string& comp : comps) {
            try {
                form.comp.push_back(comp.empty() ? Poly(sp.coords())
                                                 : parse_poly(comp, sp.coords()));
            } catch (const Error& err) {
                fail_at(alpha->line, err.what());
            }
        }
        sc.chart = make_chart(std::move(form), sp);
    }

    if (const Section* pol_sec = find_section(sections, "polarization")) {
        if (!sc.momentum) throw validation_error("[polarization] requires [space]");
        const Entry* span = pol_sec->find("span");
        if (!span) throw validation_error("[polarization] missing span");
        const PhaseSpace& sp = sc.momentum->space();
        std::vector<size_t> leaf;
        for (const std::string& name : words(span->value)) {
            auto idx = sp.coords()->index_of(name);
            if (!idx) fail_at(span->line, "unknown coordinate '" + name + "'");
            leaf.push_back(*idx);
        }
        sc.polarization = make_polarization(sp, std::move(leaf));
    }

    if (const Section* orbit_sec = find_section(sections, "orbit")) {
        if (!algebra) throw validation_error("[orbit] requires a [lie] section");
        const Entry* coords = orbit_sec->find("coords");
        std::vector<std::string> names = coords ? words(coords->value) : std::vector<std::string>{};
        PhaseSpace orbit_space =
            names.empty() ? PhaseSpace(make_vars({}), Matrix(0, 0)) : build_space(*orbit_sec, names);
        std::vector<Poly> components;
        for (const Entry* e : orbit_sec->all("J")) {
            try {
                components.push_back(parse_poly(e->value, orbit_space.coords()));
            } catch (const Error& err) {
                fail_at(e->line, err.what());
            }
        }
        if (components.empty()) throw validation_error("[orbit] has no J components");
        sc.orbit = MomentumMap(std::move(orbit_space), *algebra, std::move(components));
    }

    if (const Section* jets_sec = find_section(sections, "jets")) {
        if (const Entry* mo = jets_sec->find("max_order"))
            sc.max_order = static_cast<unsigned>(parse_uint(mo->value, mo->line));
        if (const Entry* sup = jets_sec->find("supports")) {
            std::vector<JetPoint> points;
            for (const std::string& pt : split(sup->value, ';')) {
                JetPoint point;
                for (const std::string& w : words(pt)) {
                    try {
                        point.push_back(parse_gaussian(w));
                    } catch (const Error& err) {
                        fail_at(sup->line, err.what());
                    }
                }
                points.push_back(std::move(point));
            }
            sc.supports = std::move(points);
        }
        for (const Entry* e : jets_sec->all("action")) sc.actions.push_back(e->value);
    }

    if (const Section* rep_sec = find_section(sections, "rep H")) {
        if (!algebra) throw validation_error("[rep H] requires a [lie] section");
        sc.rep_h = build_rep(*rep_sec, *algebra);
    }
    if (const Section* rep_sec = find_section(sections, "rep HO")) {
        if (!algebra) throw validation_error("[rep HO] requires a [lie] section");
        sc.rep_ho = build_rep(*rep_sec, *algebra);
    }

    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

}  // namespace algred
