#include "complicial/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace complicial {

bool MonotoneMap::is_monotone() const {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] > values[i + 1]) return false;
    return values.empty() ||
           (values.front() >= 0 && values.back() <= codomain_arity);
}

bool MonotoneMap::is_injective() const {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] == values[i + 1]) return false;
    return true;
}

bool MonotoneMap::is_surjective() const {
    int expect = 0;
    for (int v : values) {
        if (v == expect) ++expect;
        else if (v > expect) return false;
    }
    return expect == codomain_arity + 1;
}

MonotoneMap MonotoneMap::identity(int n) {
    MonotoneMap m;
    m.codomain_arity = n;
    m.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) m.values[i] = i;
    return m;
}

MonotoneMap MonotoneMap::coface(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::out_of_range("coface index");
    MonotoneMap m;
    m.codomain_arity = n;
    for (int j = 0; j <= n - 1; ++j) m.values.push_back(j < i ? j : j + 1);
    return m;
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
    if (i < 0 || i > n) throw std::out_of_range("codegeneracy index");
    MonotoneMap m;
    m.codomain_arity = n;
    for (int j = 0; j <= n + 1; ++j) m.values.push_back(j <= i ? j : j - 1);
    return m;
}

MonotoneMap MonotoneMap::after(const MonotoneMap& other) const {
    if (other.codomain_arity != domain_arity())
        throw std::invalid_argument("MonotoneMap::after: arity mismatch");
    MonotoneMap m;
    m.codomain_arity = codomain_arity;
    m.values.reserve(other.values.size());
    for (int v : other.values) m.values.push_back(values[v]);
    return m;
}

std::pair<MonotoneMap, MonotoneMap> MonotoneMap::epi_mono() const {
    std::vector<int> image;
    for (int v : values)
        if (image.empty() || image.back() != v) image.push_back(v);
    MonotoneMap mono;
    mono.codomain_arity = codomain_arity;
    mono.values = image;
    MonotoneMap epi;
    epi.codomain_arity = static_cast<int>(image.size()) - 1;
    for (int v : values) {
        auto it = std::lower_bound(image.begin(), image.end(), v);
        epi.values.push_back(static_cast<int>(it - image.begin()));
    }
    return {epi, mono};
}

std::vector<int> word_of_surjection(const MonotoneMap& epi) {
    std::vector<int> word;
    for (int i = static_cast<int>(epi.values.size()) - 2; i >= 0; --i)
        if (epi.values[i] == epi.values[i + 1]) word.push_back(i);
    return word;
}

MonotoneMap surjection_of_word(const std::vector<int>& word, int domain_arity) {
    MonotoneMap m;
    m.codomain_arity = domain_arity - static_cast<int>(word.size());
    std::set<int> collapse(word.begin(), word.end());
    int v = 0;
    for (int i = 0; i <= domain_arity; ++i) {
        m.values.push_back(v);
        if (!collapse.count(i)) ++v;
    }
    return m;
}

std::string to_string(const SimplexRef& ref) {
    std::string out = ref.target;
    for (int w : ref.word) {
        out += '^';
        out += std::to_string(w);
    }
    return out;
}

SimplexRef degenerate_ref(const SimplexRef& ref, int i) {
    // canonical word of s_i composed onto an already canonical word, via
    // s_i s_j = s_{j+1} s_i for i <= j
    std::vector<int> word;
    std::size_t pos = 0;
    int carry = i;
    while (pos < ref.word.size() && carry <= ref.word[pos]) {
        word.push_back(ref.word[pos] + 1);
        ++pos;
    }
    word.push_back(carry);
    for (; pos < ref.word.size(); ++pos) word.push_back(ref.word[pos]);
    return SimplexRef{ref.target, word};
}

SimplexRef apply_word(const SimplexRef& ref, const std::vector<int>& word, int ref_dim) {
    if (word.empty()) return ref;
    auto sigma = surjection_of_word(ref.word, ref_dim);
    auto extra = surjection_of_word(word, ref_dim + static_cast<int>(word.size()));
    auto total = sigma.after(extra);
    return SimplexRef{ref.target, word_of_surjection(total)};
}

int StratifiedComplex::dim_of(const std::string& id) const {
    auto it = dims.find(id);
    if (it == dims.end()) throw std::invalid_argument("unknown simplex id: " + id);
    return it->second;
}

int StratifiedComplex::dim_of(const SimplexRef& ref) const {
    return dim_of(ref.target) + static_cast<int>(ref.word.size());
}

const std::vector<SimplexRef>& StratifiedComplex::faces_of(const std::string& id) const {
    auto it = faces.find(id);
    if (it == faces.end()) throw std::invalid_argument("no face table for: " + id);
    return it->second;
}

std::size_t StratifiedComplex::nondegenerate_count() const {
    std::size_t n = 0;
    for (const auto& level : cells) n += level.size();
    return n;
}

bool StratifiedComplex::is_thin(const SimplexRef& ref) const {
    if (ref.degenerate()) return true;
    if (dim_of(ref.target) == 0) return false;
    return is_marked(ref.target);
}

SimplexRef StratifiedComplex::act(const SimplexRef& ref, const MonotoneMap& op) const {
    if (op.codomain_arity != dim_of(ref))
        throw std::invalid_argument("act: operator arity does not match simplex dimension");
    std::string target = ref.target;
    MonotoneMap gamma = surjection_of_word(ref.word, dim_of(ref)).after(op);
    for (;;) {
        auto [epi, mono] = gamma.epi_mono();
        if (mono.is_surjective()) return SimplexRef{target, word_of_surjection(epi)};
        // strip the largest value missing from the image of gamma
        int missing = -1;
        {
            std::set<int> image(mono.values.begin(), mono.values.end());
            for (int v = mono.codomain_arity; v >= 0; --v)
                if (!image.count(v)) { missing = v; break; }
        }
        const SimplexRef& f = faces_of(target)[missing];
        // gamma = delta_missing . gamma' ; substitute the stored face
        MonotoneMap gprime;
        gprime.codomain_arity = gamma.codomain_arity - 1;
        for (int v : gamma.values) gprime.values.push_back(v < missing ? v : v - 1);
        target = f.target;
        gamma = surjection_of_word(f.word, gprime.codomain_arity).after(gprime);
    }
}

SimplexRef StratifiedComplex::face(const SimplexRef& ref, int i) const {
    int d = dim_of(ref);
    if (d == 0) throw std::out_of_range("face of a vertex");
    if (i < 0 || i > d) throw std::out_of_range("face index out of range");
    if (ref.word.empty()) return faces_of(ref.target)[i];
    return act(ref, MonotoneMap::coface(d, i));
}

namespace {

void descending_words(int length, int max_index, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
    if (length == 0) {
        out.push_back(acc);
        return;
    }
    // strictly decreasing: the next letter ranges over [length-1, max_index]
    for (int a = max_index; a >= length - 1; --a) {
        acc.push_back(a);
        descending_words(length - 1, a - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<SimplexRef> StratifiedComplex::simplices_of_dim(int d) const {
    std::vector<SimplexRef> out;
    for (int m = 0; m <= d && m < static_cast<int>(cells.size()); ++m) {
        std::vector<std::vector<int>> words;
        std::vector<int> acc;
        descending_words(d - m, d - 1, acc, words);
        for (const auto& id : cells[m])
            for (const auto& w : words) out.push_back(SimplexRef{id, w});
    }
    return out;
}

std::vector<std::string> StratifiedComplex::vertices_of(const SimplexRef& ref) const {
    int d = dim_of(ref);
    std::vector<std::string> out;
    for (int j = 0; j <= d; ++j) {
        MonotoneMap pick;
        pick.codomain_arity = d;
        pick.values = {j};
        out.push_back(act(ref, pick).target);
    }
    return out;
}

void StratifiedComplex::insert_simplex(const std::string& id, int dim,
                                       std::vector<SimplexRef> face_list) {
    if (dims.count(id)) throw std::invalid_argument("duplicate simplex id: " + id);
    if (dim >= static_cast<int>(cells.size())) cells.resize(dim + 1);
    cells[dim].push_back(id);
    dims[id] = dim;
    if (dim > 0) faces[id] = std::move(face_list);
}

void StratifiedComplex::sort_cells() {
    for (auto& level : cells) std::sort(level.begin(), level.end());
}

ComplexPtr share(StratifiedComplex complex) {
    return std::make_shared<const StratifiedComplex>(std::move(complex));
}

namespace {

// identifiers travel through the exchange format: no whitespace, and no
// trailing ^<digits> group, which would read back as a degeneracy word
bool id_ok(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id)
        if (static_cast<unsigned char>(c) <= ' ') return false;
    std::size_t pos = id.size();
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(id[pos - 1]))) --pos;
    if (pos > 0 && pos < id.size() && id[pos - 1] == '^') return false;
    return true;
}

bool word_ok(const std::vector<int>& word, int big_dim) {
    int prev = big_dim; // word letters < dim of the ref they produce
    for (int w : word) {
        if (w < 0 || w >= prev) return false;
        prev = w;
    }
    return true;
}

} // namespace

std::vector<Violation> validate_complex(const StratifiedComplex& x) {
    std::vector<Violation> v;
    auto add = [&](std::string code, std::string detail) {
        v.push_back(Violation{std::move(code), std::move(detail)});
    };

    if (x.dimension_bound < 0) add("bad-bound", "negative dimension bound");
    if (static_cast<int>(x.cells.size()) > x.dimension_bound + 1)
        add("bad-bound", "cells listed above the dimension bound");

    std::set<std::string> seen;
    for (std::size_t d = 0; d < x.cells.size(); ++d) {
        for (std::size_t i = 0; i < x.cells[d].size(); ++i) {
            const auto& id = x.cells[d][i];
            if (!id_ok(id)) add("id-format", id);
            if (i > 0 && !(x.cells[d][i - 1] < id))
                add("cells-unsorted", "dimension " + std::to_string(d) + ": " + id);
            if (!seen.insert(id).second) add("duplicate-id", id);
            auto it = x.dims.find(id);
            if (it == x.dims.end() || it->second != static_cast<int>(d))
                add("dims-mismatch", id);
        }
    }
    for (const auto& [id, d] : x.dims)
        if (!seen.count(id)) add("dims-mismatch", "dangling dimension entry: " + id);

    // face tables
    for (const auto& [id, d] : x.dims) {
        if (d == 0) {
            if (x.faces.count(id)) add("vertex-with-faces", id);
            continue;
        }
        auto it = x.faces.find(id);
        if (it == x.faces.end()) {
            add("missing-faces", id);
            continue;
        }
        if (static_cast<int>(it->second.size()) != d + 1) {
            add("face-count", id);
            continue;
        }
        bool refs_ok = true;
        for (const auto& ref : it->second) {
            if (!x.has(ref.target)) {
                add("unknown-face-target", id + " -> " + ref.target);
                refs_ok = false;
                continue;
            }
            if (!word_ok(ref.word, d - 1) ||
                x.dim_of(ref.target) + static_cast<int>(ref.word.size()) != d - 1) {
                add("bad-face-ref", id + " -> " + to_string(ref));
                refs_ok = false;
            }
        }
        if (!refs_ok || d < 2) continue;
        // simplicial identities d_i d_j = d_{j-1} d_i for i < j
        SimplexRef self{id, {}};
        for (int j = 1; j <= d; ++j)
            for (int i = 0; i < j; ++i) {
                try {
                    SimplexRef a = x.face(x.face(self, j), i);
                    SimplexRef b = x.face(x.face(self, i), j - 1);
                    if (a != b)
                        add("simplicial-identity",
                            id + ": d" + std::to_string(i) + " d" + std::to_string(j));
                } catch (const std::exception& e) {
                    add("simplicial-identity", id + ": " + e.what());
                }
            }
    }
    for (const auto& [id, fl] : x.faces)
        if (!x.dims.count(id)) add("dangling-face-table", id);

    for (const auto& id : x.marking) {
        if (!x.has(id)) add("marked-unknown", id);
        else if (x.dim_of(id) == 0) add("marked-vertex", id);
    }
    return v;
}

SimplexRef ComplexMap::apply(const SimplexRef& ref) const {
    auto it = assignment.find(ref.target);
    if (it == assignment.end())
        throw std::invalid_argument("map undefined on simplex: " + ref.target);
    return apply_word(it->second, ref.word, codomain->dim_of(it->second));
}

ComplexMap identity_map(const ComplexPtr& x) {
    ComplexMap m;
    m.domain = x;
    m.codomain = x;
    for (const auto& [id, d] : x->dims) m.assignment[id] = SimplexRef{id, {}};
    return m;
}

ComplexMap compose(const ComplexMap& second, const ComplexMap& first) {
    ComplexMap m;
    m.domain = first.domain;
    m.codomain = second.codomain;
    for (const auto& [id, ref] : first.assignment) m.assignment[id] = second.apply(ref);
    return m;
}

bool same_underlying(const StratifiedComplex& a, const StratifiedComplex& b) {
    return a.dimension_bound == b.dimension_bound && a.cells == b.cells &&
           a.faces == b.faces;
}

std::vector<Violation> validate_map(const ComplexMap& m) {
    std::vector<Violation> v;
    auto add = [&](std::string code, std::string detail) {
        v.push_back(Violation{std::move(code), std::move(detail)});
    };
    if (!m.domain || !m.codomain) {
        add("null-complex", "map without domain or codomain");
        return v;
    }
    const auto& dom = *m.domain;
    const auto& cod = *m.codomain;
    for (const auto& [id, ref] : m.assignment) {
        if (!dom.has(id)) {
            add("assign-unknown", id);
            continue;
        }
        if (!cod.has(ref.target)) {
            add("image-unknown", id + " -> " + ref.target);
            continue;
        }
        if (cod.dim_of(ref) != dom.dim_of(id)) add("image-dimension", id);
    }
    for (const auto& [id, d] : dom.dims)
        if (!m.assignment.count(id)) add("assign-missing", id);
    if (!v.empty()) return v;

    for (const auto& [id, d] : dom.dims) {
        if (d == 0) continue;
        SimplexRef self{id, {}};
        for (int i = 0; i <= d; ++i) {
            SimplexRef via_dom = m.apply(dom.face(self, i));
            SimplexRef via_cod = cod.face(m.apply(self), i);
            if (via_dom != via_cod)
                add("face-commutation", id + " at face " + std::to_string(i));
        }
        if (dom.is_marked(id) && !cod.is_thin(m.assignment.at(id)))
            add("marking-lost", id);
    }
    return v;
}

std::string to_string(InclusionKind kind) {
    switch (kind) {
        case InclusionKind::regular: return "regular";
        case InclusionKind::entire: return "entire";
        case InclusionKind::mixed: return "mixed";
    }
    return "mixed";
}

Inclusion make_inclusion(ComplexMap map) {
    auto violations = validate_map(map);
    if (!violations.empty())
        throw std::invalid_argument("make_inclusion: invalid map: " + violations.front().code +
                                    " " + violations.front().detail);
    std::set<SimplexRef> images;
    for (const auto& [id, ref] : map.assignment) {
        if (ref.degenerate())
            throw std::invalid_argument("make_inclusion: degenerate image of " + id);
        if (!images.insert(ref).second)
            throw std::invalid_argument("make_inclusion: not injective at " + id);
    }
    Inclusion inc;
    bool entire = same_underlying(*map.domain, *map.codomain);
    if (entire)
        for (const auto& [id, ref] : map.assignment)
            if (ref.target != id) { entire = false; break; }
    bool regular = true;
    for (const auto& [id, ref] : map.assignment)
        if (map.domain->dim_of(id) > 0 &&
            map.domain->is_marked(id) != map.codomain->is_marked(ref.target)) {
            regular = false;
            break;
        }
    inc.kind = entire ? InclusionKind::entire
                      : (regular ? InclusionKind::regular : InclusionKind::mixed);
    inc.map = std::move(map);
    return inc;
}

StratifiedComplex with_marking(const StratifiedComplex& x, std::set<std::string> marking) {
    StratifiedComplex y = x;
    y.marking = std::move(marking);
    return y;
}

} // namespace complicial
