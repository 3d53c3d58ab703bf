#include "complicial/orientals.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>

namespace complicial {
namespace orientals {

int face_dim(Face f) { return std::popcount(f) - 1; }

Face face_from_vertices(const std::vector<int>& verts) {
    Face f = 0;
    for (int v : verts) f |= (Face{1} << v);
    return f;
}

std::string face_name(Face f) {
    std::string s;
    for (int v = 0; v < 32; ++v)
        if (f & (Face{1} << v)) s += "0123456789abcdef"[v];
    return s;
}

Face parse_face(const std::string& s) {
    std::vector<int> verts;
    for (char c : s) {
        auto pos = std::string("0123456789abcdef").find(c);
        if (pos == std::string::npos) throw std::invalid_argument("bad face: " + s);
        verts.push_back(static_cast<int>(pos));
    }
    return face_from_vertices(verts);
}

namespace {

std::vector<int> vertices_of(Face f) {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if (f & (Face{1} << v)) out.push_back(v);
    return out;
}

std::vector<Face> parity_faces(Face f, int parity) {
    std::vector<Face> out;
    auto verts = vertices_of(f);
    if (verts.size() < 2) return out; // vertices contribute nothing
    for (std::size_t p = parity; p < verts.size(); p += 2)
        out.push_back(f & ~(Face{1} << verts[p]));
    return out;
}

} // namespace

std::vector<Face> odd_faces(Face f) { return parity_faces(f, 1); }
std::vector<Face> even_faces(Face f) { return parity_faces(f, 0); }

FaceSet face_set(std::initializer_list<std::string> names) {
    FaceSet s;
    for (const auto& n : names) s.push_back(parse_face(n));
    std::sort(s.begin(), s.end());
    return s;
}

namespace {

bool name_order(Face a, Face b) {
    if (face_dim(a) != face_dim(b)) return face_dim(a) < face_dim(b);
    return a < b;
}

} // namespace

std::string face_set_name(const FaceSet& s) {
    FaceSet sorted = s;
    std::sort(sorted.begin(), sorted.end(), name_order);
    std::string out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ",";
        out += face_name(sorted[i]);
    }
    return out;
}

FaceSet set_union(const FaceSet& a, const FaceSet& b) {
    FaceSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

FaceSet set_minus(const FaceSet& a, const FaceSet& b) {
    FaceSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

FaceSet elements_of_dim(const FaceSet& s, int k) {
    FaceSet out;
    for (Face f : s)
        if (face_dim(f) == k) out.push_back(f);
    return out;
}

FaceSet elements_up_to_dim(const FaceSet& s, int k) {
    FaceSet out;
    for (Face f : s)
        if (face_dim(f) <= k) out.push_back(f);
    return out;
}

int top_dim(const FaceSet& s) {
    int d = -1;
    for (Face f : s) d = std::max(d, face_dim(f));
    return d;
}

namespace {

FaceSet boundary(const FaceSet& s, int parity) {
    FaceSet out;
    for (Face f : s)
        for (Face g : parity_faces(f, parity)) out.push_back(g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

FaceSet odd_boundary(const FaceSet& s) { return boundary(s, 1); }
FaceSet even_boundary(const FaceSet& s) { return boundary(s, 0); }

WellFormedReport is_well_formed(const FaceSet& s) {
    WellFormedReport r;
    Face vertex_seen = 0;
    for (Face f : s) {
        if (face_dim(f) != 0) continue;
        if (vertex_seen) {
            r.well_formed = false;
            r.first = vertex_seen;
            r.second = f;
            r.reason = "two vertices";
            return r;
        }
        vertex_seen = f;
    }
    std::map<Face, Face> source_owner, target_owner;
    for (Face f : s) {
        for (Face g : odd_faces(f)) {
            auto [it, fresh] = source_owner.try_emplace(g, f);
            if (!fresh && it->second != f) {
                r.well_formed = false;
                r.first = it->second;
                r.second = f;
                r.reason = "common source " + face_name(g);
                return r;
            }
        }
        for (Face g : even_faces(f)) {
            auto [it, fresh] = target_owner.try_emplace(g, f);
            if (!fresh && it->second != f) {
                r.well_formed = false;
                r.first = it->second;
                r.second = f;
                r.reason = "common target " + face_name(g);
                return r;
            }
        }
    }
    return r;
}

bool moves(const FaceSet& s, const FaceSet& m, const FaceSet& p) {
    FaceSet minus = odd_boundary(s);
    FaceSet plus = even_boundary(s);
    return m == set_minus(set_union(p, minus), plus) &&
           p == set_minus(set_union(m, plus), minus);
}

int CellMP::dim() const { return std::max(top_dim(m), top_dim(p)); }

std::string cell_name(const CellMP& c) {
    return face_set_name(c.m) + "|" + face_set_name(c.p);
}

CellMP parse_cell(const std::string& name) {
    auto bar = name.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("bad cell name: " + name);
    auto parse_side = [](const std::string& part) {
        FaceSet s;
        std::string cur;
        for (char c : part + ",") {
            if (c == ',') {
                if (!cur.empty()) s.push_back(parse_face(cur));
                cur.clear();
            } else cur += c;
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    return CellMP{parse_side(name.substr(0, bar)), parse_side(name.substr(bar + 1))};
}

bool is_cell(const CellMP& c) {
    if (c.m.empty() || c.p.empty()) return false;
    if (!is_well_formed(c.m).well_formed || !is_well_formed(c.p).well_formed) return false;
    return moves(c.m, c.m, c.p) && moves(c.p, c.m, c.p);
}

CellMP atom(Face a) {
    CellMP c;
    FaceSet m{a}, p{a};
    c.m = m;
    c.p = p;
    FaceSet cur_m = m, cur_p = p;
    for (int i = face_dim(a); i >= 1; --i) {
        cur_m = set_minus(odd_boundary(cur_m), even_boundary(cur_m));
        cur_p = set_minus(even_boundary(cur_p), odd_boundary(cur_p));
        c.m = set_union(c.m, cur_m);
        c.p = set_union(c.p, cur_p);
    }
    return c;
}

CellMP source_k(const CellMP& c, int k) {
    if (k >= c.dim()) return c;
    return CellMP{elements_up_to_dim(c.m, k),
                  set_union(elements_of_dim(c.m, k), elements_up_to_dim(c.p, k - 1))};
}

CellMP target_k(const CellMP& c, int k) {
    if (k >= c.dim()) return c;
    return CellMP{set_union(elements_up_to_dim(c.m, k - 1), elements_of_dim(c.p, k)),
                  elements_up_to_dim(c.p, k)};
}

bool composable_k(const CellMP& c, const CellMP& d, int k) {
    return source_k(c, k) == target_k(d, k);
}

CellMP compose_k(const CellMP& c, const CellMP& d, int k) {
    if (!composable_k(c, d, k))
        throw std::invalid_argument("compose_k: s_k(c) != t_k(d)");
    // the pasting formula is diagrammatic, so the earlier factor d sits on
    // the left
    return CellMP{set_union(d.m, set_minus(c.m, elements_of_dim(c.m, k))),
                  set_union(set_minus(d.p, elements_of_dim(d.p, k)), c.p)};
}

CellMP Oriental::top_cell() const {
    CellMP found;
    int hits = 0;
    for (const auto& c : cells)
        if (c.dim() == n) {
            found = c;
            ++hits;
        }
    if (hits != 1)
        throw std::logic_error("oriental does not have a unique top cell");
    return found;
}

namespace {

std::vector<Face> all_faces(int n) {
    std::vector<Face> out;
    for (Face mask = 1; mask < (Face{1} << (n + 1)); ++mask) out.push_back(mask);
    std::sort(out.begin(), out.end(), name_order);
    return out;
}

struct ClosureState {
    int n;
    Budget* budget;
    std::map<CellMP, CellWitness> witnesses;
    // composition index: for each level k, cells keyed by s_k / t_k
    std::vector<std::map<CellMP, std::vector<CellMP>>> by_source, by_target;
    std::deque<CellMP> queue;

    explicit ClosureState(int n_, Budget* b)
        : n(n_), budget(b), by_source(n_ + 1), by_target(n_ + 1) {}

    void add(const CellMP& c, CellWitness w) {
        if (witnesses.count(c)) return;
        witnesses.emplace(c, std::move(w));
        queue.push_back(c);
    }

    void close(int level) {
        while (!queue.empty()) {
            CellMP c = queue.front();
            queue.pop_front();
            budget->spend("build_oriental");
            for (int k = 0; k < level; ++k) {
                CellMP s = source_k(c, k);
                CellMP t = target_k(c, k);
                add(s, CellWitness{CellWitness::Kind::source, 0, k, {}, {}, c});
                add(t, CellWitness{CellWitness::Kind::target, 0, k, {}, {}, c});
                for (const auto& d : by_target[k][s])
                    add(compose_k(c, d, k),
                        CellWitness{CellWitness::Kind::compose, 0, k, c, d, {}});
                for (const auto& d : by_source[k][t])
                    add(compose_k(d, c, k),
                        CellWitness{CellWitness::Kind::compose, 0, k, d, c, {}});
                by_source[k][s].push_back(c);
                by_target[k][t].push_back(c);
            }
        }
    }
};

} // namespace

int oriental_cap() {
    if (const char* env = std::getenv("COMPLICIAL_ORIENTAL_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 4;
}

Oriental build_oriental(int n, Budget& budget) {
    if (n < 0) throw std::invalid_argument("build_oriental: n >= 0 required");
    if (n > oriental_cap())
        throw std::invalid_argument("build_oriental: n exceeds the oriental cap of " +
                                    std::to_string(oriental_cap()));
    ClosureState st(n, &budget);
    for (int level = 0; level <= n; ++level) {
        for (Face f : all_faces(n))
            if (face_dim(f) == level)
                st.add(atom(f), CellWitness{CellWitness::Kind::atom, f, 0, {}, {}, {}});
        st.close(level);
    }

    Oriental o;
    o.n = n;
    o.witnesses = std::move(st.witnesses);
    for (const auto& [c, w] : o.witnesses) o.cells.push_back(c);
    std::sort(o.cells.begin(), o.cells.end());

    OmegaCat cat;
    for (const auto& c : o.cells) cat.elements.push_back(cell_name(c));
    std::sort(cat.elements.begin(), cat.elements.end());
    cat.level_bound = n;
    cat.levels.resize(n);
    for (int k = 0; k < n; ++k) {
        for (const auto& c : o.cells) {
            cat.levels[k].src[cell_name(c)] = cell_name(source_k(c, k));
            cat.levels[k].tgt[cell_name(c)] = cell_name(target_k(c, k));
        }
        for (const auto& c : o.cells)
            for (const auto& d : o.cells) {
                budget.spend("build_oriental tables");
                if (!composable_k(c, d, k)) continue;
                CellMP cd = compose_k(c, d, k);
                if (!o.witnesses.count(cd))
                    throw std::logic_error(
                        "oriental closure is not closed under composition at " +
                        cell_name(c) + " * " + cell_name(d));
                cat.levels[k].comp[{cell_name(c), cell_name(d)}] = cell_name(cd);
            }
    }
    o.category = share(std::move(cat));
    return o;
}

Oriental build_oriental(int n) {
    Budget b;
    b.limit = default_budget_limit();
    return build_oriental(n, b);
}

namespace {

struct SearchState {
    const std::vector<Face>* faces;
    std::vector<std::vector<Face>> odd, even; // per face index
    Budget* budget;
    std::set<CellMP>* out;

    bool compatible(const std::vector<int>& chosen, int candidate) const {
        if (face_dim((*faces)[candidate]) == 0)
            for (int i : chosen)
                if (face_dim((*faces)[i]) == 0) return false;
        for (int i : chosen) {
            for (Face g : odd[i])
                for (Face h : odd[candidate])
                    if (g == h) return false;
            for (Face g : even[i])
                for (Face h : even[candidate])
                    if (g == h) return false;
        }
        return true;
    }

    void try_record(const std::vector<int>& chosen) {
        FaceSet m;
        for (int i : chosen) m.push_back((*faces)[i]);
        std::sort(m.begin(), m.end());
        FaceSet p = set_minus(set_union(m, even_boundary(m)), odd_boundary(m));
        if (p.empty()) return;
        if (!moves(m, m, p)) return;
        if (!is_well_formed(p).well_formed) return;
        if (!moves(p, m, p)) return;
        out->insert(CellMP{m, p});
    }

    void dfs(std::vector<int>& chosen, int from) {
        budget->spend("enumerate_cells_search");
        if (!chosen.empty()) try_record(chosen);
        for (int i = from; i < static_cast<int>(faces->size()); ++i) {
            if (!compatible(chosen, i)) continue;
            chosen.push_back(i);
            dfs(chosen, i + 1);
            chosen.pop_back();
        }
    }
};

} // namespace

std::set<CellMP> enumerate_cells_search(int n, Budget& budget) {
    auto faces = all_faces(n);
    SearchState st;
    st.faces = &faces;
    st.budget = &budget;
    for (Face f : faces) {
        st.odd.push_back(odd_faces(f));
        st.even.push_back(even_faces(f));
    }
    std::set<CellMP> out;
    st.out = &out;
    std::vector<int> chosen;
    st.dfs(chosen, 0);
    return out;
}

OmegaFunctor induced_functor(const MonotoneMap& phi, const Oriental& dom,
                             const Oriental& cod) {
    if (!phi.is_monotone() || !phi.is_injective())
        throw std::invalid_argument("induced_functor: operator must be injective monotone");
    if (phi.domain_arity() != dom.n || phi.codomain_arity != cod.n)
        throw std::invalid_argument("induced_functor: arity mismatch");
    auto relabel_face = [&](Face f) {
        Face out = 0;
        for (int v : vertices_of(f)) out |= (Face{1} << phi.values[v]);
        return out;
    };
    auto relabel_set = [&](const FaceSet& s) {
        FaceSet out;
        for (Face f : s) out.push_back(relabel_face(f));
        std::sort(out.begin(), out.end());
        return out;
    };
    OmegaFunctor f;
    f.domain = dom.category;
    f.codomain = cod.category;
    for (const auto& c : dom.cells) {
        CellMP image{relabel_set(c.m), relabel_set(c.p)};
        if (!std::binary_search(cod.cells.begin(), cod.cells.end(), image))
            throw std::logic_error("induced_functor: image cell missing in codomain");
        f.map[cell_name(c)] = cell_name(image);
    }
    auto violations = validate(f);
    if (!violations.empty())
        throw std::logic_error("induced_functor: functor axioms fail: " +
                               violations.front().code);
    return f;
}

} // namespace orientals
} // namespace complicial
