#include "complicial/lifting.hpp"

#include "complicial/constructions.hpp"

#include <algorithm>
#include <functional>

namespace complicial {

std::vector<Violation> validate_problem(const LiftingProblem& p) {
    std::vector<Violation> v = validate_map(p.inclusion.map);
    auto w = validate_map(p.attempt);
    v.insert(v.end(), w.begin(), w.end());
    if (p.attempt.domain != p.inclusion.map.domain &&
        !same_underlying(*p.attempt.domain, *p.inclusion.map.domain))
        v.push_back({"problem-domain-mismatch", ""});
    if (!v.empty()) return v;
    std::set<SimplexRef> images;
    for (const auto& [id, ref] : p.inclusion.map.assignment) {
        if (ref.degenerate()) v.push_back({"inclusion-degenerate-image", id});
        else if (!images.insert(ref).second) v.push_back({"inclusion-not-injective", id});
    }
    return v;
}

namespace {

struct Searcher {
    const StratifiedComplex& v;
    const StratifiedComplex& a;
    std::size_t max_results;
    Budget& budget;

    std::vector<std::string> free_ids;
    std::map<std::string, SimplexRef> current;
    std::vector<std::vector<SimplexRef>> candidates_by_dim;
    std::vector<ComplexMap> results;
    ComplexPtr v_ptr, a_ptr;

    bool faces_match(const std::string& id, int d, const SimplexRef& cand) {
        if (d == 0) return true;
        const auto& fl = v.faces_of(id);
        for (int i = 0; i <= d; ++i) {
            const auto& ref = fl[i];
            auto it = current.find(ref.target);
            SimplexRef image = apply_word(it->second, ref.word, a.dim_of(it->second));
            if (a.face(cand, i) != image) return false;
        }
        return true;
    }

    bool run(std::size_t pos) {
        if (pos == free_ids.size()) {
            ComplexMap m;
            m.domain = v_ptr;
            m.codomain = a_ptr;
            m.assignment = current;
            results.push_back(std::move(m));
            return results.size() >= max_results;
        }
        const auto& id = free_ids[pos];
        int d = v.dim_of(id);
        bool need_thin = d > 0 && v.is_marked(id);
        for (const auto& cand : candidates_by_dim[d]) {
            budget.spend("search_maps");
            if (need_thin && !a.is_thin(cand)) continue;
            if (!faces_match(id, d, cand)) continue;
            current[id] = cand;
            bool done = run(pos + 1);
            current.erase(id);
            if (done) return true;
        }
        return false;
    }
};

} // namespace

std::vector<ComplexMap> search_maps(const ComplexPtr& v, const ComplexPtr& a,
                                    const std::map<std::string, SimplexRef>& partial,
                                    std::size_t max_results, Budget& budget) {
    if (max_results == 0) return {};
    Searcher s{*v, *a, max_results, budget, {}, partial, {}, {}, v, a};
    // preassigned marked simplices must already be thin
    for (const auto& [id, ref] : partial)
        if (v->dim_of(id) > 0 && v->is_marked(id) && !a->is_thin(ref)) return {};
    for (const auto& level : v->cells)
        for (const auto& id : level)
            if (!partial.count(id)) s.free_ids.push_back(id);
    std::stable_sort(s.free_ids.begin(), s.free_ids.end(),
                     [&](const std::string& x, const std::string& y) {
                         return v->dim_of(x) < v->dim_of(y);
                     });
    int max_dim = static_cast<int>(v->cells.size());
    s.candidates_by_dim.resize(max_dim);
    for (int d = 0; d < max_dim; ++d)
        if (!v->cells[d].empty()) s.candidates_by_dim[d] = a->simplices_of_dim(d);
    s.run(0);
    return std::move(s.results);
}

std::vector<ComplexMap> enumerate_extensions(const LiftingProblem& p,
                                             std::size_t max_results, Budget& budget) {
    std::map<std::string, SimplexRef> partial;
    for (const auto& [u_id, v_ref] : p.inclusion.map.assignment)
        partial[v_ref.target] = p.attempt.assignment.at(u_id);
    return search_maps(p.inclusion.map.codomain, p.attempt.codomain, partial, max_results,
                       budget);
}

namespace {

/// Checks one family member against every map of its domain into a; returns
/// a failing problem, or nothing when extensions behave.
std::optional<CheckReport> check_member(const Inclusion& inc, const ComplexPtr& a,
                                        bool unique, Budget& budget) {
    auto attempts = search_maps(inc.map.domain, a, {}, SIZE_MAX, budget);
    for (auto& attempt : attempts) {
        LiftingProblem p{inc, attempt};
        auto exts = enumerate_extensions(p, unique ? 2 : 1, budget);
        if (exts.size() == 1) continue;
        CheckReport r;
        r.pass = false;
        r.witness = std::move(p);
        if (exts.empty()) r.note = "no-extension";
        else {
            r.note = "non-unique-extension";
            r.extensions = std::move(exts);
        }
        return r;
    }
    return std::nullopt;
}

CheckReport run_family(const std::string& name, const std::vector<Inclusion>& members,
                       const ComplexPtr& a, int bound, bool unique, Budget& budget) {
    CheckReport ok;
    ok.check = name;
    ok.bound = bound;
    for (const auto& inc : members) {
        bool entire = inc.kind == InclusionKind::entire;
        if (auto fail = check_member(inc, a, unique && !entire, budget)) {
            fail->check = name;
            fail->bound = bound;
            return std::move(*fail);
        }
    }
    return ok;
}

} // namespace

CheckReport is_complicial(const ComplexPtr& a, int bound, Budget& budget) {
    return run_family("complicial", family(FamilyName::J, bound), a, bound, false, budget);
}

CheckReport is_strict_complicial(const ComplexPtr& a, int bound, Budget& budget) {
    return run_family("strict-complicial", family(FamilyName::J, bound), a, bound, true,
                      budget);
}

CheckReport is_saturated(const ComplexPtr& a, int bound, Budget& budget) {
    return run_family("saturated", saturation_family_left(bound), a, bound, false, budget);
}

CheckReport unique_sphere_fillers(const ComplexPtr& a, int r_min, int bound,
                                  Budget& budget) {
    std::vector<Inclusion> members;
    for (int r = r_min; r <= bound; ++r) members.push_back(sphere_inclusion_flat(r));
    return run_family("coskeletal", members, a, bound, true, budget);
}

bool replay_witness(const CheckReport& report, Budget& budget) {
    if (report.pass || !report.witness) return false;
    if (!validate_problem(*report.witness).empty()) return false;
    bool unique = report.note == "non-unique-extension";
    auto exts = enumerate_extensions(*report.witness, 2, budget);
    if (unique) return exts.size() >= 2;
    return exts.empty();
}

std::set<std::string> detect_1_equivalences(const StratifiedComplex& a) {
    std::set<std::string> right_ok, left_ok, out;
    if (a.cells.size() < 3) return out;
    for (const auto& t : a.cells[2]) {
        if (!a.is_marked(t)) continue;
        const auto& fl = a.faces_of(t);
        if (!fl[1].degenerate()) continue;
        if (!fl[0].degenerate()) right_ok.insert(fl[0].target);
        if (!fl[2].degenerate()) left_ok.insert(fl[2].target);
    }
    for (const auto& f : right_ok)
        if (left_ok.count(f)) out.insert(f);
    return out;
}

bool is_1_equivalence(const StratifiedComplex& a, const SimplexRef& edge) {
    if (a.dim_of(edge) != 1) throw std::invalid_argument("is_1_equivalence: not an edge");
    if (edge.degenerate()) return true;
    return detect_1_equivalences(a).count(edge.target) != 0;
}

namespace {

/// Assignment for a horn attempt from would-be codimension-one face images;
/// entry k stays empty.
ComplexMap horn_attempt(const ComplexPtr& horn, int n, int k, const ComplexPtr& a,
                        const std::vector<std::optional<SimplexRef>>& codim_faces) {
    ComplexMap m;
    m.domain = horn;
    m.codomain = a;
    for (const auto& [id, d] : horn->dims) {
        int j = -1;
        for (int cand = 0; cand <= n && j < 0; ++cand) {
            if (cand == k) continue;
            if (id.find(vertex_label(cand)) == std::string::npos) j = cand;
        }
        MonotoneMap op;
        op.codomain_arity = n - 1;
        for (char c : id) {
            int vtx = static_cast<int>(std::string("0123456789abcdef").find(c));
            op.values.push_back(vtx < j ? vtx : vtx - 1);
        }
        m.assignment[id] = a->act(*codim_faces[j], op);
    }
    auto violations = validate_map(m);
    if (!violations.empty())
        throw std::invalid_argument("horn_attempt: inconsistent faces: " +
                                    violations.front().code + " " +
                                    violations.front().detail);
    return m;
}

SimplexRef fill_horn(int n, int k, const ComplexPtr& a,
                     const std::vector<std::optional<SimplexRef>>& codim_faces,
                     Budget& budget, const char* what) {
    Inclusion inc = horn_inclusion(n, k);
    ComplexMap attempt = horn_attempt(inc.map.domain, n, k, a, codim_faces);
    LiftingProblem p{std::move(inc), std::move(attempt)};
    auto exts = enumerate_extensions(p, 1, budget);
    if (exts.empty()) throw std::runtime_error(std::string("no filler for ") + what);
    std::string top;
    for (int v = 0; v <= n; ++v) top += vertex_label(v);
    return exts.front().assignment.at(top);
}

} // namespace

std::set<std::string> detect_n_equivalences(const ComplexPtr& a, int n, Budget& budget) {
    if (n < 1) throw std::invalid_argument("detect_n_equivalences: n >= 1 required");
    if (!is_n_trivial(*a, n))
        throw std::invalid_argument("detect_n_equivalences: input is not n-trivial");
    std::set<std::string> out;
    if (static_cast<int>(a->cells.size()) <= n) return out;

    // the ambient shape Delta[3]_eq * Delta[n-2] and the n-face through the
    // edge [1,2] and all join vertices
    ComplexPtr shape;
    std::vector<std::string> face_vertices;
    if (n == 1) {
        shape = share(delta3_eq());
        face_vertices = {"1", "2"};
    } else {
        JoinComplex jc(share(delta3_eq()), share(standard_simplex(n - 2)));
        shape = share(jc.complex());
        face_vertices = {jc.left_vertex("1"), jc.left_vertex("2")};
        for (int v = 0; v <= n - 2; ++v)
            face_vertices.push_back(jc.right_vertex(std::string(1, vertex_label(v))));
    }

    // nondegenerate simplices of the embedded n-face, by vertex subset
    std::vector<std::pair<std::string, MonotoneMap>> embedded;
    std::vector<std::vector<int>> subsets;
    for (int size = 1; size <= n + 1; ++size) {
        std::vector<int> acc;
        std::vector<std::vector<int>> subs;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(acc.size()) == size) {
                subs.push_back(acc);
                return;
            }
            for (int v = from; v <= n; ++v) {
                acc.push_back(v);
                rec(v + 1);
                acc.pop_back();
            }
        };
        rec(0);
        for (auto& s : subs) subsets.push_back(std::move(s));
    }
    for (const auto& sub : subsets) {
        std::vector<std::string> verts;
        for (int v : sub) verts.push_back(face_vertices[v]);
        std::string id = simplex_spanned_by(*shape, verts).target;
        MonotoneMap op;
        op.codomain_arity = n;
        for (int v : sub) op.values.push_back(v);
        embedded.emplace_back(id, op);
    }

    for (const auto& x : a->cells[n]) {
        SimplexRef sigma{x, {}};
        std::map<std::string, SimplexRef> partial;
        for (const auto& [id, op] : embedded) partial[id] = a->act(sigma, op);
        auto exts = search_maps(shape, a, partial, 1, budget);
        if (!exts.empty()) out.insert(x);
    }
    return out;
}

Translation translate_2_simplex(const ComplexPtr& a, const SimplexRef& alpha,
                                Budget& budget) {
    if (a->dim_of(alpha) != 2)
        throw std::invalid_argument("translate_2_simplex: not a 2-simplex");
    SimplexRef f = a->face(alpha, 2);
    SimplexRef g = a->face(alpha, 0);

    // thin witness (f, g; c) for the inner horn on f and g
    SimplexRef w = fill_horn(2, 1, a, {g, std::nullopt, f}, budget, "composite witness");

    // hat: Lambda^2[3] on (w, alpha, -, s_0 f); the missing face has a
    // degenerate first edge
    SimplexRef t_hat = fill_horn(3, 2, a, {w, alpha, std::nullopt, degenerate_ref(f, 0)},
                                 budget, "first-edge translation");
    SimplexRef hat = a->face(t_hat, 2);

    // check: Lambda^1[3] on (s_1 g, -, alpha, w); the missing face has a
    // degenerate last edge
    SimplexRef t_check = fill_horn(3, 1, a, {degenerate_ref(g, 1), std::nullopt, alpha, w},
                                   budget, "last-edge translation");
    SimplexRef check = a->face(t_check, 1);

    Translation tr{hat, check, false};
    bool ta = a->is_thin(alpha), th = a->is_thin(hat), tc = a->is_thin(check);
    tr.thinness_linked = (ta == th && th == tc);
    return tr;
}

} // namespace complicial
