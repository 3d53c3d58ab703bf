#include "complicial/constructions.hpp"

#include <algorithm>

namespace complicial {

namespace detail {

std::vector<ProductAdapter::Token> ProductAdapter::simplices(int d) const {
    std::vector<Token> out;
    auto ls = left->simplices_of_dim(d);
    auto rs = right->simplices_of_dim(d);
    for (const auto& a : ls)
        for (const auto& b : rs) out.emplace_back(a, b);
    return out;
}

ProductAdapter::Token ProductAdapter::face(const Token& t, int i) const {
    return {left->face(t.first, i), right->face(t.second, i)};
}

ProductAdapter::Token ProductAdapter::degeneracy(const Token& t, int i) const {
    return {degenerate_ref(t.first, i), degenerate_ref(t.second, i)};
}

bool ProductAdapter::marked(const Token& t, int) const {
    return left->is_thin(t.first) && right->is_thin(t.second);
}

std::string ProductAdapter::name(const Token& t, int) const {
    return "(" + to_string(t.first) + "," + to_string(t.second) + ")";
}

int JoinAdapter::left_dim(const Token& t) const {
    return t.first ? left->dim_of(*t.first) : -1;
}

std::vector<JoinAdapter::Token> JoinAdapter::simplices(int d) const {
    std::vector<Token> out;
    for (int k = -1; k <= d; ++k) {
        std::vector<std::optional<SimplexRef>> ls, rs;
        if (k == -1) ls.push_back(std::nullopt);
        else
            for (const auto& a : left->simplices_of_dim(k)) ls.push_back(a);
        if (k == d) rs.push_back(std::nullopt);
        else
            for (const auto& b : right->simplices_of_dim(d - k - 1)) rs.push_back(b);
        for (const auto& a : ls)
            for (const auto& b : rs) out.emplace_back(a, b);
    }
    return out;
}

JoinAdapter::Token JoinAdapter::face(const Token& t, int i) const {
    int k = left_dim(t);
    if (i <= k) {
        if (k == 0) return {std::nullopt, t.second};
        return {left->face(*t.first, i), t.second};
    }
    int j = i - k - 1;
    if (right->dim_of(*t.second) == 0) return {t.first, std::nullopt};
    return {t.first, right->face(*t.second, j)};
}

JoinAdapter::Token JoinAdapter::degeneracy(const Token& t, int i) const {
    int k = left_dim(t);
    if (i <= k) return {degenerate_ref(*t.first, i), t.second};
    return {t.first, degenerate_ref(*t.second, i - k - 1)};
}

bool JoinAdapter::marked(const Token& t, int) const {
    return (t.first && left->is_thin(*t.first)) || (t.second && right->is_thin(*t.second));
}

std::string JoinAdapter::name(const Token& t, int) const {
    std::string a = t.first ? to_string(*t.first) : "-";
    std::string b = t.second ? to_string(*t.second) : "-";
    return "(" + a + "|" + b + ")";
}

std::vector<SliceAdapter::Token> SliceAdapter::simplices(int d) const {
    std::vector<Token> out;
    int big = d + over_dim + 1;
    MonotoneMap pick;
    pick.codomain_arity = big;
    for (int j = 0; j <= over_dim; ++j)
        pick.values.push_back(from_left ? j : j + d + 1);
    for (const auto& tau : base->simplices_of_dim(big))
        if (base->act(tau, pick) == over) out.push_back(tau);
    return out;
}

SliceAdapter::Token SliceAdapter::face(const Token& t, int i) const {
    return base->face(t, from_left ? i + over_dim + 1 : i);
}

SliceAdapter::Token SliceAdapter::degeneracy(const Token& t, int i) const {
    return degenerate_ref(t, from_left ? i + over_dim + 1 : i);
}

bool SliceAdapter::marked(const Token& t, int) const { return base->is_thin(t); }

std::string SliceAdapter::name(const Token& t, int) const {
    // '~' instead of the ref caret: identifiers must not end in a
    // degeneracy-word suffix or they would parse as degenerate references
    std::string out = to_string(t);
    for (char& c : out)
        if (c == '^') c = '~';
    return out;
}

} // namespace detail

ProductComplex::ProductComplex(ComplexPtr left, ComplexPtr right)
    : left_(left), right_(right),
      assembled_(detail::ProductAdapter{left, right},
                 left->dimension_bound + right->dimension_bound) {}

SimplexRef ProductComplex::ref_of(const SimplexRef& a, const SimplexRef& b) const {
    int d = left_->dim_of(a);
    if (right_->dim_of(b) != d)
        throw std::invalid_argument("product ref_of: component dimensions differ");
    return assembled_.ref_of({a, b}, d);
}

std::pair<SimplexRef, SimplexRef> ProductComplex::components(const std::string& id) const {
    return assembled_.token_of(id);
}

StratifiedComplex product(const ComplexPtr& a, const ComplexPtr& b) {
    return ProductComplex(a, b).complex();
}

ComplexMap product_map(const ProductComplex& dom, const ProductComplex& cod,
                       const ComplexMap& f, const ComplexMap& g) {
    ComplexMap m;
    m.domain = share(dom.complex());
    m.codomain = share(cod.complex());
    for (const auto& [id, d] : dom.complex().dims) {
        auto [a, b] = dom.components(id);
        m.assignment[id] = cod.ref_of(f.apply(a), g.apply(b));
    }
    return m;
}

JoinComplex::JoinComplex(ComplexPtr left, ComplexPtr right)
    : left_(left), right_(right),
      assembled_(detail::JoinAdapter{left, right},
                 left->dimension_bound + right->dimension_bound + 1) {}

std::string JoinComplex::left_vertex(const std::string& vertex_id) const {
    return "(" + vertex_id + "|-)";
}

std::string JoinComplex::right_vertex(const std::string& vertex_id) const {
    return "(-|" + vertex_id + ")";
}

std::pair<std::optional<SimplexRef>, std::optional<SimplexRef>>
JoinComplex::components(const std::string& id) const {
    return assembled_.token_of(id);
}

StratifiedComplex join(const ComplexPtr& a, const ComplexPtr& b) {
    return JoinComplex(a, b).complex();
}

SliceComplex::SliceComplex(ComplexPtr base, SimplexRef over, SliceSide side)
    : base_(base),
      // a nondegenerate k-simplex of the slice can be represented by a
      // base-degenerate simplex whose collapses all sit in the slicing block,
      // so k ranges up to the full base bound
      assembled_(detail::SliceAdapter{base, over, base->dim_of(over),
                                      side == SliceSide::left},
                 base->dimension_bound) {}

SimplexRef SliceComplex::representative(const std::string& id) const {
    return assembled_.token_of(id);
}

StratifiedComplex slice(const ComplexPtr& a, const SimplexRef& over, SliceSide side) {
    if (!a->has(over.target)) throw std::invalid_argument("slice: simplex not in complex");
    return SliceComplex(a, over, side).complex();
}

StratifiedComplex trivialize(const StratifiedComplex& x, int n) {
    StratifiedComplex y = x;
    for (int d = n + 1; d < static_cast<int>(y.cells.size()); ++d)
        for (const auto& id : y.cells[d]) y.marking.insert(id);
    return y;
}

StratifiedComplex core(const StratifiedComplex& x, int n) {
    std::set<std::string> keep;
    for (const auto& level : x.cells)
        for (const auto& id : level) {
            // every nondegenerate iterated face above dimension n must be thin
            bool ok = x.dim_of(id) <= n || x.is_marked(id);
            if (ok && x.dim_of(id) > 0) {
                std::vector<std::string> stack = {id};
                std::set<std::string> visited;
                while (ok && !stack.empty()) {
                    std::string cur = stack.back();
                    stack.pop_back();
                    if (!visited.insert(cur).second) continue;
                    if (x.dim_of(cur) > n && !x.is_marked(cur)) ok = false;
                    if (x.dim_of(cur) > 0)
                        for (const auto& f : x.faces_of(cur)) stack.push_back(f.target);
                }
            }
            if (ok) keep.insert(id);
        }
    // vertices and low simplices whose ancestors fail are still kept when all
    // their own faces qualify; keep must be face-closed, which it is because
    // faces of a qualifying simplex qualify
    StratifiedComplex y;
    y.dimension_bound = x.dimension_bound;
    y.cells.resize(x.cells.size());
    for (std::size_t d = 0; d < x.cells.size(); ++d)
        for (const auto& id : x.cells[d])
            if (keep.count(id)) {
                y.cells[d].push_back(id);
                y.dims[id] = static_cast<int>(d);
                if (d > 0) y.faces[id] = x.faces_of(id);
                if (x.is_marked(id)) y.marking.insert(id);
            }
    return y;
}

Inclusion core_inclusion(const ComplexPtr& x, int n) {
    auto c = share(core(*x, n));
    ComplexMap m;
    m.domain = c;
    m.codomain = x;
    for (const auto& [id, d] : c->dims) m.assignment[id] = SimplexRef{id, {}};
    return make_inclusion(std::move(m));
}

bool is_n_trivial(const StratifiedComplex& x, int n) {
    for (int d = n + 1; d < static_cast<int>(x.cells.size()); ++d)
        for (const auto& id : x.cells[d])
            if (!x.is_marked(id)) return false;
    return true;
}

Inclusion induced_subcomplex(const ComplexPtr& ambient, const std::set<std::string>& keep,
                             int bound) {
    StratifiedComplex y;
    y.dimension_bound = bound;
    y.cells.resize(bound + 1);
    for (const auto& id : keep) {
        int d = ambient->dim_of(id);
        if (d > bound) throw std::invalid_argument("subcomplex: simplex above bound");
        y.cells[d].push_back(id);
        y.dims[id] = d;
        if (d > 0) {
            for (const auto& f : ambient->faces_of(id))
                if (!keep.count(f.target))
                    throw std::invalid_argument("subcomplex: not face-closed at " + id);
            y.faces[id] = ambient->faces_of(id);
        }
        if (ambient->is_marked(id)) y.marking.insert(id);
    }
    y.sort_cells();
    ComplexMap m;
    m.domain = share(std::move(y));
    m.codomain = ambient;
    for (const auto& id : keep) m.assignment[id] = SimplexRef{id, {}};
    return make_inclusion(std::move(m));
}

SimplexRef simplex_spanned_by(const StratifiedComplex& x,
                              const std::vector<std::string>& vertices) {
    int d = static_cast<int>(vertices.size()) - 1;
    if (d < 0 || d >= static_cast<int>(x.cells.size()))
        throw std::invalid_argument("simplex_spanned_by: no such dimension");
    for (const auto& id : x.cells[d]) {
        SimplexRef ref{id, {}};
        if (x.vertices_of(ref) == vertices) return ref;
    }
    throw std::invalid_argument("simplex_spanned_by: no simplex with those vertices");
}

std::vector<AttachmentStep> mono_decomposition(const Inclusion& inc) {
    const auto& dom = *inc.map.domain;
    const auto& cod = *inc.map.codomain;
    std::set<std::string> present;
    std::set<std::string> marked;
    for (const auto& [id, ref] : inc.map.assignment) {
        present.insert(ref.target);
        if (dom.dim_of(id) > 0 && dom.is_marked(id)) marked.insert(ref.target);
    }

    std::vector<AttachmentStep> steps;
    for (std::size_t d = 0; d < cod.cells.size(); ++d)
        for (const auto& id : cod.cells[d])
            if (!present.count(id))
                steps.push_back({AttachmentStep::Kind::attach, id, static_cast<int>(d)});
    for (std::size_t d = 1; d < cod.cells.size(); ++d)
        for (const auto& id : cod.cells[d])
            if (cod.is_marked(id) && !marked.count(id))
                steps.push_back({AttachmentStep::Kind::mark, id, static_cast<int>(d)});

    // replay: rebuild the codomain from the image and verify each step
    for (const auto& step : steps) {
        if (step.kind == AttachmentStep::Kind::attach) {
            if (present.count(step.simplex))
                throw std::logic_error("mono_decomposition: double attachment");
            if (step.dim > 0)
                for (const auto& f : cod.faces_of(step.simplex))
                    if (!present.count(f.target))
                        throw std::logic_error("mono_decomposition: boundary missing for " +
                                               step.simplex);
            present.insert(step.simplex);
        } else {
            if (!present.count(step.simplex) || marked.count(step.simplex))
                throw std::logic_error("mono_decomposition: bad marking step");
            marked.insert(step.simplex);
        }
    }
    if (present.size() != cod.nondegenerate_count() || marked != cod.marking)
        throw std::logic_error("mono_decomposition: replay does not rebuild codomain");
    return steps;
}

} // namespace complicial
