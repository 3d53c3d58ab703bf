#include "complicial/shapes.hpp"

#include "complicial/constructions.hpp"

#include <algorithm>

namespace complicial {

char vertex_label(int v) {
    if (v < 0 || v > 15) throw std::out_of_range("vertex label");
    return "0123456789abcdef"[v];
}

std::string vertex_word(const std::vector<int>& verts) {
    std::string id;
    for (int v : verts) id += vertex_label(v);
    return id;
}

namespace {

char vertex_char(int v) { return vertex_label(v); }

std::string subset_id(const std::vector<int>& verts) { return vertex_word(verts); }

void subsets_of_size(int n, int size, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out, int from = 0) {
    if (static_cast<int>(acc.size()) == size) {
        out.push_back(acc);
        return;
    }
    for (int v = from; v <= n; ++v) {
        acc.push_back(v);
        subsets_of_size(n, size, acc, out, v + 1);
        acc.pop_back();
    }
}

StratifiedComplex plain_simplex(int n) {
    if (n < 0 || n > 15) throw std::invalid_argument("standard_simplex: n out of range");
    StratifiedComplex x;
    x.dimension_bound = n;
    x.cells.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        std::vector<std::vector<int>> subs;
        std::vector<int> acc;
        subsets_of_size(n, d + 1, acc, subs);
        for (const auto& s : subs) {
            std::string id = subset_id(s);
            std::vector<SimplexRef> face_list;
            for (int i = 0; i <= d && d > 0; ++i) {
                std::vector<int> f = s;
                f.erase(f.begin() + i);
                face_list.push_back(SimplexRef{subset_id(f), {}});
            }
            x.insert_simplex(id, d, std::move(face_list));
        }
    }
    x.sort_cells();
    return x;
}

bool contains_all(const std::string& id, const std::vector<int>& required) {
    for (int v : required)
        if (id.find(vertex_char(v)) == std::string::npos) return false;
    return true;
}

std::vector<int> admissible_core(int n, int k) {
    std::vector<int> req;
    for (int v : {k - 1, k, k + 1})
        if (v >= 0 && v <= n) req.push_back(v);
    return req;
}

std::set<std::string> admissible_marking(const StratifiedComplex& x, int n, int k) {
    std::set<std::string> marking;
    auto req = admissible_core(n, k);
    for (std::size_t d = 1; d < x.cells.size(); ++d)
        for (const auto& id : x.cells[d])
            if (contains_all(id, req)) marking.insert(id);
    return marking;
}

std::string codim_one_face_id(int n, int skip) {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
        if (v != skip) verts.push_back(v);
    return subset_id(verts);
}

std::set<std::string> horn_cells(int n, int k) {
    // faces S with at least one vertex other than k missing
    std::set<std::string> keep;
    StratifiedComplex full = plain_simplex(n);
    for (const auto& level : full.cells)
        for (const auto& id : level) {
            int missing_other = 0;
            for (int v = 0; v <= n; ++v)
                if (v != k && id.find(vertex_char(v)) == std::string::npos) ++missing_other;
            if (missing_other > 0) keep.insert(id);
        }
    return keep;
}

Inclusion entire_inclusion(StratifiedComplex dom, StratifiedComplex cod) {
    auto d = share(std::move(dom));
    auto c = share(std::move(cod));
    ComplexMap m;
    m.domain = d;
    m.codomain = c;
    for (const auto& [id, dim] : d->dims) m.assignment[id] = SimplexRef{id, {}};
    return make_inclusion(std::move(m));
}

void require_horn_params(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        throw std::invalid_argument("horn parameters require n >= 1 and 0 <= k <= n");
}

} // namespace

StratifiedComplex standard_simplex(int n) { return plain_simplex(n); }

StratifiedComplex sharp_simplex(int n) {
    StratifiedComplex x = plain_simplex(n);
    for (std::size_t d = 1; d < x.cells.size(); ++d)
        for (const auto& id : x.cells[d]) x.marking.insert(id);
    return x;
}

StratifiedComplex thin_top_simplex(int n) {
    if (n < 1) throw std::invalid_argument("thin_top_simplex: n >= 1 required");
    StratifiedComplex x = plain_simplex(n);
    x.marking.insert(x.cells[n].front());
    return x;
}

StratifiedComplex boundary_complex(int n) {
    StratifiedComplex full = plain_simplex(n);
    std::set<std::string> keep;
    for (int d = 0; d < n; ++d)
        for (const auto& id : full.cells[d]) keep.insert(id);
    return *induced_subcomplex(share(std::move(full)), keep, std::max(0, n - 1))
                .map.domain;
}

StratifiedComplex admissible_simplex(int n, int k) {
    require_horn_params(n, k);
    StratifiedComplex x = plain_simplex(n);
    x.marking = admissible_marking(x, n, k);
    return x;
}

StratifiedComplex admissible_horn(int n, int k) {
    require_horn_params(n, k);
    auto ambient = share(admissible_simplex(n, k));
    return *induced_subcomplex(ambient, horn_cells(n, k), n - 1).map.domain;
}

StratifiedComplex flat_horn(int n, int k) {
    require_horn_params(n, k);
    auto ambient = share(plain_simplex(n));
    return *induced_subcomplex(ambient, horn_cells(n, k), n - 1).map.domain;
}

StratifiedComplex primed_simplex(int n, int k) {
    require_horn_params(n, k);
    StratifiedComplex x = admissible_simplex(n, k);
    for (int skip : {k - 1, k + 1})
        if (skip >= 0 && skip <= n && n >= 2) x.marking.insert(codim_one_face_id(n, skip));
    return x;
}

StratifiedComplex double_primed_simplex(int n, int k) {
    require_horn_params(n, k);
    StratifiedComplex x = admissible_simplex(n, k);
    if (n >= 2)
        for (int skip = 0; skip <= n; ++skip) x.marking.insert(codim_one_face_id(n, skip));
    return x;
}

StratifiedComplex delta3_eq() {
    StratifiedComplex x = trivialize(plain_simplex(3), 1);
    x.marking.insert("02");
    x.marking.insert("13");
    return x;
}

StratifiedComplex delta3_sharp() { return sharp_simplex(3); }

Inclusion horn_inclusion(int n, int k) {
    auto ambient = share(admissible_simplex(n, k));
    return induced_subcomplex(ambient, horn_cells(n, k), n - 1);
}

Inclusion flat_horn_inclusion(int n, int k) {
    auto ambient = share(plain_simplex(n));
    return induced_subcomplex(ambient, horn_cells(n, k), n - 1);
}

Inclusion thinness_inclusion(int n, int k) {
    if (n < 2) throw std::invalid_argument("thinness_inclusion: n >= 2 required");
    return entire_inclusion(primed_simplex(n, k), double_primed_simplex(n, k));
}

Inclusion boundary_inclusion(int n) {
    auto ambient = share(plain_simplex(n));
    std::set<std::string> keep;
    for (int d = 0; d < n; ++d)
        for (const auto& id : ambient->cells[d]) keep.insert(id);
    return induced_subcomplex(ambient, keep, std::max(0, n - 1));
}

Inclusion sphere_inclusion_flat(int n) { return boundary_inclusion(n); }

Inclusion thin_top_inclusion(int n) {
    return entire_inclusion(plain_simplex(n), thin_top_simplex(n));
}

namespace {

StratifiedComplex saturation_side(int m, int n, bool sharp) {
    if (m < -1 || n < -1) throw std::invalid_argument("saturation: m, n >= -1 required");
    auto eq = share(sharp ? delta3_sharp() : delta3_eq());
    if (m >= 0) {
        auto left = share(standard_simplex(m));
        eq = share(join(left, eq));
    }
    if (n >= 0) {
        auto right = share(standard_simplex(n));
        eq = share(join(eq, right));
    }
    return *eq;
}

} // namespace

Inclusion saturation_inclusion(int m, int n) {
    return entire_inclusion(saturation_side(m, n, false), saturation_side(m, n, true));
}

ComplexMap simplex_operator_map(const ComplexPtr& dom, const ComplexPtr& cod,
                                const MonotoneMap& phi) {
    if (!phi.is_monotone() || phi.domain_arity() != dom->dimension_bound ||
        phi.codomain_arity != cod->dimension_bound)
        throw std::invalid_argument("simplex_operator_map: bad operator");
    ComplexMap out;
    out.domain = dom;
    out.codomain = cod;
    std::string top;
    for (int v = 0; v <= cod->dimension_bound; ++v) top += vertex_label(v);
    SimplexRef top_ref{top, {}};
    for (const auto& [id, d] : dom->dims) {
        // vertex word of id composed with phi, acting on the top simplex
        MonotoneMap alpha;
        alpha.codomain_arity = phi.codomain_arity;
        for (char ch : id) {
            int v = static_cast<int>(std::string("0123456789abcdef").find(ch));
            alpha.values.push_back(phi.values[v]);
        }
        out.assignment[id] = cod->act(top_ref, alpha);
    }
    return out;
}

Generator make(const GeneratorSpec& spec) {
    switch (spec.family) {
        case GeneratorFamily::standard:
        case GeneratorFamily::flat: return standard_simplex(spec.n);
        case GeneratorFamily::sharp: return sharp_simplex(spec.n);
        case GeneratorFamily::thin_top: return thin_top_simplex(spec.n);
        case GeneratorFamily::boundary: return boundary_complex(spec.n);
        case GeneratorFamily::horn: return admissible_horn(spec.n, spec.k);
        case GeneratorFamily::admissible: return admissible_simplex(spec.n, spec.k);
        case GeneratorFamily::admissible_horn: return horn_inclusion(spec.n, spec.k);
        case GeneratorFamily::primed: return primed_simplex(spec.n, spec.k);
        case GeneratorFamily::double_primed: return double_primed_simplex(spec.n, spec.k);
        case GeneratorFamily::thinness: return thinness_inclusion(spec.n, spec.k);
        case GeneratorFamily::delta3_eq: return delta3_eq();
        case GeneratorFamily::delta3_sharp: return delta3_sharp();
        case GeneratorFamily::saturation: return saturation_inclusion(spec.m, spec.n);
    }
    throw std::invalid_argument("make: unknown generator family");
}

std::vector<Inclusion> family(FamilyName name, int bound, int n) {
    if (bound < 1) throw std::invalid_argument("family: bound >= 1 required");
    std::vector<Inclusion> out;
    switch (name) {
        case FamilyName::I:
            for (int r = 0; r <= bound; ++r) {
                out.push_back(boundary_inclusion(r));
                if (r >= 1) out.push_back(thin_top_inclusion(r));
            }
            break;
        case FamilyName::J:
            for (int r = 1; r <= bound; ++r) {
                for (int k = 0; k <= r; ++k) out.push_back(horn_inclusion(r, k));
                if (r >= 2)
                    for (int k = 0; k <= r; ++k) out.push_back(thinness_inclusion(r, k));
            }
            break;
        case FamilyName::Ktr:
            for (int r = n + 1; r <= bound; ++r) out.push_back(thin_top_inclusion(r));
            break;
        case FamilyName::Ks:
            for (int total = 3; total <= bound; ++total)
                for (int m = -1; m + 4 <= total; ++m) {
                    int r = total - m - 5;
                    if (r >= -1) out.push_back(saturation_inclusion(m, r));
                }
            break;
    }
    return out;
}

std::vector<Inclusion> saturation_family_left(int bound) {
    std::vector<Inclusion> out;
    for (int r = -1; r + 4 <= bound; ++r) out.push_back(saturation_inclusion(-1, r));
    return out;
}

} // namespace complicial
