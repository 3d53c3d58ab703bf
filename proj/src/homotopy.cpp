#include "complicial/homotopy.hpp"

#include "complicial/assemble.hpp"
#include "complicial/constructions.hpp"
#include "complicial/shapes.hpp"

#include <algorithm>

namespace complicial {

CheckReport is_quasicategory(const ComplexPtr& x, int bound, Budget& budget) {
    CheckReport ok;
    ok.check = "quasicategory";
    ok.bound = bound;
    for (int n = 2; n <= bound; ++n)
        for (int k = 1; k < n; ++k) {
            Inclusion inc = flat_horn_inclusion(n, k);
            auto attempts = search_maps(inc.map.domain, x, {}, SIZE_MAX, budget);
            for (auto& attempt : attempts) {
                LiftingProblem p{inc, std::move(attempt)};
                if (enumerate_extensions(p, 1, budget).empty()) {
                    CheckReport r;
                    r.pass = false;
                    r.check = ok.check;
                    r.bound = bound;
                    r.note = "no-extension";
                    r.witness = std::move(p);
                    return r;
                }
            }
        }
    return ok;
}

namespace {

struct Pattern {
    int f_face, g_face, deg_face;
};

Pattern pattern_of(HomotopyVariant v) {
    switch (v) {
        case HomotopyVariant::deg0: return {2, 1, 0};         // d2 = f, d1 = g, d0 deg
        case HomotopyVariant::deg0_swapped: return {1, 2, 0}; // d2 = g, d1 = f
        case HomotopyVariant::deg2: return {0, 1, 2};         // d0 = f, d1 = g, d2 deg
        case HomotopyVariant::deg2_swapped: return {1, 0, 2};
    }
    return {2, 1, 0};
}

} // namespace

std::set<std::pair<SimplexRef, SimplexRef>> edge_homotopy_witnesses(
    const StratifiedComplex& x, HomotopyVariant variant) {
    Pattern pat = pattern_of(variant);
    std::set<std::pair<SimplexRef, SimplexRef>> out;
    for (const auto& t : x.simplices_of_dim(2)) {
        std::vector<SimplexRef> fl;
        for (int i = 0; i <= 2; ++i) fl.push_back(x.face(t, i));
        if (!fl[pat.deg_face].degenerate()) continue;
        out.emplace(fl[pat.f_face], fl[pat.g_face]);
    }
    return out;
}

namespace {

std::map<SimplexRef, int> close_to_partition(const std::vector<SimplexRef>& edges,
                                             const std::set<std::pair<SimplexRef, SimplexRef>>& rel) {
    std::map<SimplexRef, int> cls;
    int next = 0;
    for (const auto& e : edges) cls[e] = next++;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : rel) {
            int ca = cls.at(a), cb = cls.at(b);
            if (ca == cb) continue;
            int lo = std::min(ca, cb), hi = std::max(ca, cb);
            for (auto& [e, c] : cls)
                if (c == hi) c = lo;
            changed = true;
        }
    }
    return cls;
}

} // namespace

std::map<SimplexRef, int> edge_homotopy_classes(const StratifiedComplex& x,
                                                HomotopyVariant variant) {
    auto edges = x.simplices_of_dim(1);
    return close_to_partition(edges, edge_homotopy_witnesses(x, variant));
}

HomotopyCategory homotopy_category(const ComplexPtr& x, Budget& budget) {
    auto qc = is_quasicategory(x, std::min(3, std::max(2, x->dimension_bound)), budget);
    if (!qc.pass)
        throw std::invalid_argument("homotopy_category: not a quasi-category up to the bound");

    auto edges = x->simplices_of_dim(1);
    auto classes = edge_homotopy_classes(*x, HomotopyVariant::deg0);

    // canonical class names from the least representative
    std::map<int, SimplexRef> representative;
    for (const auto& e : edges) {
        auto it = representative.find(classes.at(e));
        if (it == representative.end() || e < it->second) representative[classes.at(e)] = e;
    }
    auto class_name = [&](const SimplexRef& e) {
        return "[" + to_string(representative.at(classes.at(e))) + "]";
    };

    HomotopyCategory out;
    for (const auto& e : edges) out.edge_class[e] = class_name(e);
    for (const auto& v : x->cells.empty() ? std::vector<std::string>{} : x->cells[0])
        out.vertex_object[v] = class_name(degenerate_ref(SimplexRef{v, {}}, 0));

    OmegaCat cat;
    for (const auto& [cl, rep] : representative) cat.elements.push_back(class_name(rep));
    std::sort(cat.elements.begin(), cat.elements.end());
    cat.elements.erase(std::unique(cat.elements.begin(), cat.elements.end()),
                       cat.elements.end());
    cat.level_bound = 1;
    cat.levels.resize(1);
    for (const auto& [cl, rep] : representative) {
        std::string name = class_name(rep);
        cat.levels[0].src[name] =
            out.vertex_object.at(x->vertices_of(rep)[0]);
        cat.levels[0].tgt[name] =
            out.vertex_object.at(x->vertices_of(rep)[1]);
    }

    // composition by inner-horn filling on representatives, checked to be
    // independent of the choices
    Inclusion inner = flat_horn_inclusion(2, 1);
    auto compose_edges = [&](const SimplexRef& f, const SimplexRef& g)
        -> std::optional<std::string> {
        // g after f: vertices 0,1,2 with [01] = f, [12] = g
        std::map<std::string, SimplexRef> partial;
        partial["0"] = SimplexRef{x->vertices_of(f)[0], {}};
        partial["1"] = SimplexRef{x->vertices_of(f)[1], {}};
        partial["2"] = SimplexRef{x->vertices_of(g)[1], {}};
        partial["01"] = f;
        partial["12"] = g;
        auto fillers = search_maps(inner.map.codomain, x, partial, 1, budget);
        if (fillers.empty()) return std::nullopt;
        return class_name(x->face(fillers.front().assignment.at("012"), 1));
    };
    for (const auto& f : edges)
        for (const auto& g : edges) {
            if (x->vertices_of(g)[0] != x->vertices_of(f)[1]) continue;
            auto got = compose_edges(f, g);
            if (!got)
                throw std::logic_error("homotopy_category: missing inner-horn filler");
            auto key = std::make_pair(class_name(g), class_name(f));
            auto it = cat.levels[0].comp.find(key);
            if (it == cat.levels[0].comp.end()) cat.levels[0].comp[key] = *got;
            else if (it->second != *got)
                throw std::logic_error("homotopy_category: composition not well-defined");
        }

    auto violations = validate(cat);
    if (!violations.empty())
        throw std::logic_error("homotopy_category: result fails 1-category axioms: " +
                               violations.front().code);
    out.category = std::move(cat);
    return out;
}

bool homotopic_maps(const ComplexMap& f, const ComplexMap& g, Budget& budget) {
    bool parallel = same_underlying(*f.domain, *g.domain) &&
                    f.domain->marking == g.domain->marking &&
                    same_underlying(*f.codomain, *g.codomain) &&
                    f.codomain->marking == g.codomain->marking;
    if (!parallel) throw std::invalid_argument("homotopic_maps: maps are not parallel");
    auto interval = share(sharp_simplex(1));
    ProductComplex cyl(f.domain, interval);
    auto cyl_ptr = share(cyl.complex());

    std::map<std::string, SimplexRef> partial;
    for (const auto& [id, d] : f.domain->dims) {
        for (int end = 0; end <= 1; ++end) {
            std::vector<int> word;
            for (int i = d - 1; i >= 0; --i) word.push_back(i);
            SimplexRef vert{std::string(1, "01"[end]), word};
            SimplexRef at = cyl.ref_of(SimplexRef{id, {}}, vert);
            if (at.degenerate())
                throw std::logic_error("homotopic_maps: cylinder end is degenerate");
            partial[at.target] = (end == 0 ? f : g).assignment.at(id);
        }
    }
    return !search_maps(cyl_ptr, f.codomain, partial, 1, budget).empty();
}

namespace {

struct HomAdapter {
    using Token = std::map<std::string, SimplexRef>; // assignment on X x Delta[d]

    ComplexPtr x, a;
    Budget* budget;
    std::shared_ptr<std::vector<ProductComplex>> flat_products;  // X x Delta[d]
    std::shared_ptr<std::vector<StratifiedComplex>> thin_products; // X x Delta[d]_t
    std::shared_ptr<std::vector<std::vector<Token>>> by_dim;
    std::shared_ptr<std::map<Token, std::string>> names;

    std::vector<Token> simplices(int d) const { return (*by_dim)[d]; }

    Token precompose(const Token& t, int d_from, const MonotoneMap& phi) const {
        // phi : [d_from] -> [d_to]; the token lives over Delta[d_to]
        int d_to = phi.codomain_arity;
        const ProductComplex& pf = (*flat_products)[d_from];
        const ProductComplex& pt = (*flat_products)[d_to];
        auto delta_map = simplex_operator_map(share(standard_simplex(d_from)),
                                              share(standard_simplex(d_to)), phi);
        Token out;
        for (const auto& [id, dim] : pf.complex().dims) {
            auto [xa, xb] = pf.components(id);
            SimplexRef image_in_target = pt.ref_of(xa, delta_map.apply(xb));
            auto it = t.find(image_in_target.target);
            out[id] = apply_word(it->second, image_in_target.word,
                                 a->dim_of(it->second));
        }
        return out;
    }

    Token face(const Token& t, int i) const {
        int d = arity_of(t);
        return precompose(t, d - 1, MonotoneMap::coface(d, i));
    }

    Token degeneracy(const Token& t, int i) const {
        int d = arity_of(t);
        return precompose(t, d + 1, MonotoneMap::codegeneracy(d, i));
    }

    int arity_of(const Token& t) const {
        // tokens of dimension d are maps out of X x Delta[d]; the simplex
        // counts grow strictly with d, so the key count recovers d
        for (std::size_t d = 0; d < flat_products->size(); ++d)
            if ((*flat_products)[d].complex().nondegenerate_count() == t.size())
                return static_cast<int>(d);
        throw std::logic_error("hom token of unknown arity");
    }

    bool marked(const Token& t, int d) const {
        const auto& thin = (*thin_products)[d];
        for (const auto& id : thin.marking) {
            const SimplexRef& image = t.at(id);
            if (!a->is_thin(image)) return false;
        }
        return true;
    }

    std::string name(const Token& t, int) const { return names->at(t); }
};

} // namespace

StratifiedComplex hom_complex(const ComplexPtr& x, const ComplexPtr& a, int bound,
                              Budget& budget) {
    HomAdapter ad;
    ad.x = x;
    ad.a = a;
    ad.budget = &budget;
    ad.flat_products = std::make_shared<std::vector<ProductComplex>>();
    ad.thin_products = std::make_shared<std::vector<StratifiedComplex>>();
    ad.by_dim = std::make_shared<std::vector<std::vector<HomAdapter::Token>>>();
    ad.names = std::make_shared<std::map<HomAdapter::Token, std::string>>();
    for (int d = 0; d <= bound + 1; ++d) {
        ad.flat_products->emplace_back(x, share(standard_simplex(d)));
        ad.thin_products->push_back(
            d >= 1 ? product(x, share(thin_top_simplex(d))) : product(x, share(standard_simplex(d))));
    }
    for (int d = 0; d <= bound; ++d) {
        auto maps =
            search_maps(share((*ad.flat_products)[d].complex()), a, {}, SIZE_MAX, budget);
        std::vector<HomAdapter::Token> toks;
        for (auto& m : maps) toks.push_back(std::move(m.assignment));
        std::sort(toks.begin(), toks.end());
        for (std::size_t i = 0; i < toks.size(); ++i) {
            std::string idx = std::to_string(i);
            (*ad.names)[toks[i]] =
                "h" + std::to_string(d) + "_" +
                std::string(4 - std::min<std::size_t>(4, idx.size()), '0') + idx;
        }
        ad.by_dim->push_back(std::move(toks));
    }
    return AssembledComplex<HomAdapter>(std::move(ad), bound).take();
}

} // namespace complicial
