#include "complicial/omega_cat.hpp"

#include <algorithm>

namespace complicial {

bool OmegaCat::has(const std::string& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

const std::string& OmegaCat::src_at(int n, const std::string& x) const {
    if (n >= level_bound) return x;
    auto it = levels[n].src.find(x);
    if (it == levels[n].src.end()) throw std::invalid_argument("src: unknown element " + x);
    return it->second;
}

const std::string& OmegaCat::tgt_at(int n, const std::string& x) const {
    if (n >= level_bound) return x;
    auto it = levels[n].tgt.find(x);
    if (it == levels[n].tgt.end()) throw std::invalid_argument("tgt: unknown element " + x);
    return it->second;
}

bool OmegaCat::composable(int n, const std::string& a, const std::string& b) const {
    return src_at(n, a) == tgt_at(n, b);
}

const std::string& OmegaCat::compose_at(int n, const std::string& a,
                                        const std::string& b) const {
    if (n >= level_bound) {
        if (a != b) throw std::invalid_argument("compose above level bound");
        return a;
    }
    auto it = levels[n].comp.find({a, b});
    if (it == levels[n].comp.end())
        throw std::invalid_argument("compose: pair not composable at level " +
                                    std::to_string(n) + ": " + a + " * " + b);
    return it->second;
}

int OmegaCat::cell_dimension(const std::string& x) const {
    for (int n = 0; n < level_bound; ++n)
        if (src_at(n, x) == x) return n;
    return level_bound;
}

bool OmegaCat::is_n_category(int n) const {
    for (const auto& x : elements)
        if (cell_dimension(x) > n) return false;
    return true;
}

OmegaCatPtr share(OmegaCat c) { return std::make_shared<const OmegaCat>(std::move(c)); }

namespace {

void check_level(const OmegaCat& c, int n, std::vector<Violation>& v) {
    auto add = [&](std::string code, std::string detail) {
        v.push_back(Violation{std::move(code), std::move(detail)});
    };
    const auto& L = c.levels[n];
    std::string lv = std::to_string(n);
    for (const auto& x : c.elements) {
        if (!L.src.count(x)) { add("missing-src", lv + ":" + x); continue; }
        if (!L.tgt.count(x)) { add("missing-tgt", lv + ":" + x); continue; }
        const auto& s = L.src.at(x);
        const auto& t = L.tgt.at(x);
        if (!c.has(s)) add("src-unknown", lv + ":" + x);
        if (!c.has(t)) add("tgt-unknown", lv + ":" + x);
        if (!c.has(s) || !c.has(t)) continue;
        // ss = ts = s and tt = st = t
        if (L.src.count(s) && (L.src.at(s) != s || L.tgt.at(s) != s))
            add("source-not-object", lv + ":" + x);
        if (L.src.count(t) && (L.src.at(t) != t || L.tgt.at(t) != t))
            add("target-not-object", lv + ":" + x);
    }
    if (!v.empty()) return;
    for (const auto& a : c.elements)
        for (const auto& b : c.elements) {
            bool compat = L.src.at(a) == L.tgt.at(b);
            bool present = L.comp.count({a, b}) != 0;
            if (compat && !present) add("comp-missing", lv + ":" + a + " * " + b);
            if (!compat && present) add("comp-extraneous", lv + ":" + a + " * " + b);
            if (compat && present) {
                const auto& ab = L.comp.at({a, b});
                if (!c.has(ab)) { add("comp-unknown", lv + ":" + a + " * " + b); continue; }
                if (L.src.at(ab) != L.src.at(b) || L.tgt.at(ab) != L.tgt.at(a))
                    add("comp-boundary", lv + ":" + a + " * " + b);
            }
        }
    if (!v.empty()) return;
    for (const auto& a : c.elements) {
        const auto& s = L.src.at(a);
        const auto& t = L.tgt.at(a);
        if (L.comp.at({a, s}) != a) add("right-identity", lv + ":" + a);
        if (L.comp.at({t, a}) != a) add("left-identity", lv + ":" + a);
    }
    for (const auto& a : c.elements)
        for (const auto& b : c.elements) {
            if (L.src.at(a) != L.tgt.at(b)) continue;
            for (const auto& d : c.elements) {
                if (L.src.at(b) != L.tgt.at(d)) continue;
                const auto& left = L.comp.at({L.comp.at({a, b}), d});
                const auto& right = L.comp.at({a, L.comp.at({b, d})});
                if (left != right)
                    add("associativity", lv + ":" + a + " * " + b + " * " + d);
            }
        }
}

void check_two_level(const OmegaCat& c, int m, int n, std::vector<Violation>& v) {
    auto add = [&](std::string code, std::string detail) {
        v.push_back(Violation{std::move(code), std::move(detail)});
    };
    std::string lv = std::to_string(m) + "," + std::to_string(n);
    for (const auto& x : c.elements) {
        const auto& sm = c.src_at(m, x);
        const auto& tm = c.tgt_at(m, x);
        // globularity: s_m s_n = s_m = s_m t_n, t_m s_n = t_m = t_m t_n,
        // and m-boundaries are n-discrete
        if (c.src_at(m, c.src_at(n, x)) != sm || c.src_at(m, c.tgt_at(n, x)) != sm)
            add("globularity-src", lv + ":" + x);
        if (c.tgt_at(m, c.src_at(n, x)) != tm || c.tgt_at(m, c.tgt_at(n, x)) != tm)
            add("globularity-tgt", lv + ":" + x);
        if (c.src_at(n, sm) != sm || c.tgt_at(n, sm) != sm)
            add("boundary-not-n-cell", lv + ":" + x);
        if (c.src_at(n, tm) != tm || c.tgt_at(n, tm) != tm)
            add("boundary-not-n-cell", lv + ":" + x);
    }
    if (!v.empty()) return;
    // 1-cell boundaries of horizontal composites are composites
    for (const auto& [pair, ab] : c.levels[m].comp) {
        const auto& [a, b] = pair;
        if (c.src_at(n, ab) != c.compose_at(m, c.src_at(n, a), c.src_at(n, b)))
            add("horizontal-src", lv + ":" + a + " * " + b);
        if (c.tgt_at(n, ab) != c.compose_at(m, c.tgt_at(n, a), c.tgt_at(n, b)))
            add("horizontal-tgt", lv + ":" + a + " * " + b);
    }
    if (!v.empty()) return;
    // middle four interchange
    for (const auto& [pair1, a1b1] : c.levels[n].comp) {
        const auto& [a, b] = pair1;
        for (const auto& [pair2, a2b2] : c.levels[n].comp) {
            const auto& [a2, b2] = pair2;
            if (c.src_at(m, a) != c.tgt_at(m, a2)) continue;
            const auto& left = c.compose_at(m, a1b1, a2b2);
            const auto& right =
                c.compose_at(n, c.compose_at(m, a, a2), c.compose_at(m, b, b2));
            if (left != right)
                add("interchange", lv + ": (" + a + "*" + b + ") , (" + a2 + "*" + b2 + ")");
        }
    }
}

} // namespace

std::vector<Violation> validate(const OmegaCat& c) {
    std::vector<Violation> v;
    if (!std::is_sorted(c.elements.begin(), c.elements.end()) ||
        std::adjacent_find(c.elements.begin(), c.elements.end()) != c.elements.end())
        v.push_back({"elements-unsorted", ""});
    if (static_cast<int>(c.levels.size()) != c.level_bound)
        v.push_back({"level-count", ""});
    if (!v.empty()) return v;
    for (int n = 0; n < c.level_bound; ++n) {
        check_level(c, n, v);
        if (!v.empty()) return v;
    }
    // levels at or above level_bound are discrete, so the two-level axioms
    // hold there trivially
    for (int m = 0; m < c.level_bound; ++m)
        for (int n = m + 1; n < c.level_bound; ++n) {
            check_two_level(c, m, n, v);
            if (!v.empty()) return v;
        }
    return v;
}

std::vector<Violation> validate(const OmegaFunctor& f) {
    std::vector<Violation> v;
    auto add = [&](std::string code, std::string detail) {
        v.push_back(Violation{std::move(code), std::move(detail)});
    };
    const auto& dom = *f.domain;
    const auto& cod = *f.codomain;
    for (const auto& x : dom.elements) {
        if (!f.map.count(x)) { add("functor-missing", x); continue; }
        if (!cod.has(f.map.at(x))) add("functor-image-unknown", x);
    }
    if (!v.empty()) return v;
    int levels = std::max(dom.level_bound, cod.level_bound);
    for (int n = 0; n < levels; ++n) {
        for (const auto& x : dom.elements) {
            if (f.apply(dom.src_at(n, x)) != cod.src_at(n, f.apply(x)))
                add("functor-src", std::to_string(n) + ":" + x);
            if (f.apply(dom.tgt_at(n, x)) != cod.tgt_at(n, f.apply(x)))
                add("functor-tgt", std::to_string(n) + ":" + x);
        }
        if (n < dom.level_bound)
            for (const auto& [pair, ab] : dom.levels[n].comp) {
                const auto& fa = f.apply(pair.first);
                const auto& fb = f.apply(pair.second);
                if (!cod.composable(n, fa, fb) ||
                    cod.compose_at(n, fa, fb) != f.apply(ab))
                    add("functor-comp", std::to_string(n) + ":" + pair.first + " * " +
                                            pair.second);
            }
    }
    return v;
}

OmegaFunctor compose(const OmegaFunctor& second, const OmegaFunctor& first) {
    OmegaFunctor out;
    out.domain = first.domain;
    out.codomain = second.codomain;
    for (const auto& [x, y] : first.map) out.map[x] = second.apply(y);
    return out;
}

std::set<std::string> detect_isos_1(const OmegaCat& c) {
    if (!c.is_n_category(1)) throw std::invalid_argument("detect_isos_1: not a 1-category");
    std::set<std::string> isos;
    for (const auto& f : c.elements) {
        for (const auto& g : c.elements) {
            if (!c.composable(0, f, g) || !c.composable(0, g, f)) continue;
            if (c.compose_at(0, f, g) == c.tgt_at(0, f) &&
                c.compose_at(0, g, f) == c.src_at(0, f)) {
                isos.insert(f);
                break;
            }
        }
    }
    return isos;
}

TwoCatEquivalences detect_equivalences_2(const OmegaCat& c) {
    if (!c.is_n_category(2))
        throw std::invalid_argument("detect_equivalences_2: not a 2-category");
    TwoCatEquivalences out;
    for (const auto& a : c.elements) {
        for (const auto& b : c.elements) {
            if (!c.composable(1, a, b) || !c.composable(1, b, a)) continue;
            if (c.compose_at(1, a, b) == c.tgt_at(1, a) &&
                c.compose_at(1, b, a) == c.src_at(1, a)) {
                out.invertible_2_cells.insert(a);
                break;
            }
        }
    }
    auto invertible_between = [&](const std::string& u, const std::string& v) {
        for (const auto& w : out.invertible_2_cells)
            if (c.src_at(1, w) == u && c.tgt_at(1, w) == v) return true;
        return false;
    };
    for (const auto& f : c.elements) {
        if (c.cell_dimension(f) > 1) continue;
        for (const auto& g : c.elements) {
            if (c.cell_dimension(g) > 1) continue;
            if (c.src_at(0, g) != c.tgt_at(0, f) || c.tgt_at(0, g) != c.src_at(0, f))
                continue;
            const auto& gf = c.compose_at(0, g, f);
            const auto& fg = c.compose_at(0, f, g);
            if (invertible_between(gf, c.src_at(0, f)) &&
                invertible_between(fg, c.tgt_at(0, f))) {
                out.equivalence_1_cells.insert(f);
                break;
            }
        }
    }
    return out;
}

namespace {

struct TableBuilder {
    std::vector<std::string> elements;
    std::map<std::string, std::string> src0, tgt0, src1, tgt1;
    bool has_level1 = false;

    void finish_level(OmegaCat::Level& level, const std::map<std::string, std::string>& src,
                      const std::map<std::string, std::string>& tgt,
                      const std::map<std::pair<std::string, std::string>, std::string>& comp) {
        level.src = src;
        level.tgt = tgt;
        level.comp = comp;
        for (const auto& a : elements)
            for (const auto& b : elements) {
                if (src.at(a) != tgt.at(b)) continue;
                if (level.comp.count({a, b})) continue;
                if (src.at(a) == a) level.comp[{a, b}] = b;       // a is an identity here
                else if (src.at(b) == b) level.comp[{a, b}] = a;  // b is an identity here
                else throw std::invalid_argument("composition table incomplete: " + a +
                                                 " * " + b);
            }
    }
};

} // namespace

OmegaCat from_category(const std::vector<std::string>& objects,
                       const std::vector<ArrowSpec>& arrows,
                       const std::map<std::pair<std::string, std::string>, std::string>& comp) {
    TableBuilder tb;
    for (const auto& o : objects) {
        tb.elements.push_back(o);
        tb.src0[o] = o;
        tb.tgt0[o] = o;
    }
    for (const auto& a : arrows) {
        tb.elements.push_back(a.name);
        tb.src0[a.name] = a.src;
        tb.tgt0[a.name] = a.tgt;
    }
    std::sort(tb.elements.begin(), tb.elements.end());
    OmegaCat c;
    c.elements = tb.elements;
    c.level_bound = 1;
    c.levels.resize(1);
    tb.finish_level(c.levels[0], tb.src0, tb.tgt0, comp);
    return c;
}

OmegaCat from_two_category(
    const std::vector<std::string>& objects, const std::vector<ArrowSpec>& arrows,
    const std::map<std::pair<std::string, std::string>, std::string>& comp0,
    const std::vector<TwoCellSpec>& two_cells,
    const std::map<std::pair<std::string, std::string>, std::string>& comp0_two,
    const std::map<std::pair<std::string, std::string>, std::string>& comp1) {
    TableBuilder tb;
    std::map<std::string, std::string> src1, tgt1;
    for (const auto& o : objects) {
        tb.elements.push_back(o);
        tb.src0[o] = o;
        tb.tgt0[o] = o;
        src1[o] = o;
        tgt1[o] = o;
    }
    for (const auto& a : arrows) {
        tb.elements.push_back(a.name);
        tb.src0[a.name] = a.src;
        tb.tgt0[a.name] = a.tgt;
        src1[a.name] = a.name;
        tgt1[a.name] = a.name;
    }
    for (const auto& t : two_cells) {
        tb.elements.push_back(t.name);
        src1[t.name] = t.src;
        tgt1[t.name] = t.tgt;
        tb.src0[t.name] = tb.src0.at(t.src);
        tb.tgt0[t.name] = tb.tgt0.at(t.src);
    }
    std::sort(tb.elements.begin(), tb.elements.end());
    OmegaCat c;
    c.elements = tb.elements;
    c.level_bound = 2;
    c.levels.resize(2);
    auto comp0_all = comp0;
    for (const auto& [p, r] : comp0_two) comp0_all[p] = r;
    tb.finish_level(c.levels[0], tb.src0, tb.tgt0, comp0_all);
    tb.finish_level(c.levels[1], src1, tgt1, comp1);
    return c;
}

OmegaCat poset_three_chain() {
    return from_category({"p0", "p1", "p2"},
                         {{"p01", "p0", "p1"}, {"p12", "p1", "p2"}, {"p02", "p0", "p2"}},
                         {{{"p12", "p01"}, "p02"}});
}

OmegaCat walking_isomorphism() {
    return from_category({"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}},
                         {{{"f", "g"}, "b"}, {{"g", "f"}, "a"}});
}

OmegaCat cyclic_group_3() {
    return from_category({"e"}, {{"g1", "e", "e"}, {"g2", "e", "e"}},
                         {{{"g1", "g1"}, "g2"},
                          {{"g1", "g2"}, "e"},
                          {{"g2", "g1"}, "e"},
                          {{"g2", "g2"}, "g1"}});
}

OmegaCat walking_two_cell() {
    return from_two_category({"x", "y"}, {{"f", "x", "y"}, {"g", "x", "y"}}, {},
                             {{"al", "f", "g"}}, {}, {});
}

OmegaCat walking_invertible_two_cell() {
    return from_two_category({"x", "y"}, {{"f", "x", "y"}, {"g", "x", "y"}}, {},
                             {{"al", "f", "g"}, {"be", "g", "f"}}, {},
                             {{{"al", "be"}, "g"}, {{"be", "al"}, "f"}});
}

} // namespace complicial
