#include "oracles.hpp"

#include <functional>

namespace oracle {

using complicial::OmegaCat;

StratifiedComplex classical_nerve(const OmegaCat& c, int bound) {
    StratifiedComplex x;
    x.dimension_bound = bound;
    x.cells.resize(bound + 1);

    std::vector<std::string> objects, arrows;
    for (const auto& e : c.elements)
        (c.cell_dimension(e) == 0 ? objects : arrows).push_back(e);

    // nondegenerate k-simplices: strings a_k, ..., a_1 of composable
    // nonidentity arrows; identifier "a1;a2;...;ak" in composition order
    std::map<std::string, std::vector<std::string>> strings; // id -> arrows
    for (const auto& o : objects) x.insert_simplex("<" + o + ">", 0, {});
    std::vector<std::vector<std::string>> by_dim(bound + 1);
    std::function<void(std::vector<std::string>&)> grow = [&](std::vector<std::string>& s) {
        if (!s.empty()) {
            std::string id;
            for (const auto& a : s) id += (id.empty() ? "" : ";") + a;
            strings[id] = s;
            by_dim[s.size()].push_back(id);
        }
        if (static_cast<int>(s.size()) == bound) return;
        for (const auto& a : arrows) {
            if (!s.empty() && c.src_at(0, a) != c.tgt_at(0, s.back())) continue;
            s.push_back(a);
            grow(s);
            s.pop_back();
        }
    };
    std::vector<std::string> acc;
    grow(acc);

    // faces: d_0 drops the last arrow, d_k the first, inner faces compose
    auto ref_for = [&](const std::vector<std::string>& s) -> SimplexRef {
        // normalises a string that may contain identities: an identity in
        // arrow slot i collapses vertices i, i+1, so the degeneracy word is
        // the descending list of identity slots
        std::vector<std::string> clean;
        std::vector<int> word;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (c.cell_dimension(s[i]) == 0) word.push_back(static_cast<int>(i));
            else clean.push_back(s[i]);
        }
        std::sort(word.begin(), word.end(), std::greater<int>());
        std::string id;
        if (clean.empty()) {
            id = "<" + c.src_at(0, s.front()) + ">";
        } else {
            for (const auto& a : clean) id += (id.empty() ? "" : ";") + a;
        }
        return SimplexRef{id, word};
    };

    for (int k = 1; k <= bound; ++k)
        for (const auto& id : by_dim[k]) {
            const auto& s = strings.at(id);
            std::vector<SimplexRef> faces;
            for (int i = 0; i <= k; ++i) {
                // face i deletes vertex i of the string a_k ... a_1 read as
                // x0 -a1-> x1 ... -ak-> xk
                std::vector<std::string> f;
                for (int j = 0; j < k; ++j) f.push_back(s[j]);
                if (i == 0) f.erase(f.begin());
                else if (i == k) f.pop_back();
                else {
                    f[i - 1] = c.compose_at(0, f[i], f[i - 1]);
                    f.erase(f.begin() + i);
                }
                if (f.empty()) {
                    int v = i == 0 ? 1 : 0;
                    faces.push_back(SimplexRef{
                        "<" + (v == 0 ? c.src_at(0, s[0]) : c.tgt_at(0, s[0])) + ">", {}});
                } else faces.push_back(ref_for(f));
            }
            x.insert_simplex(id, k, std::move(faces));
        }
    x.sort_cells();
    return x;
}

namespace {

struct IsoSearch {
    const StratifiedComplex& a;
    const StratifiedComplex& b;
    bool require_marking;
    std::map<std::string, std::string> fwd;

    bool compatible(const std::string& x, const std::string& y) {
        int d = a.dim_of(x);
        if (b.dim_of(y) != d) return false;
        if (require_marking && a.is_marked(x) != b.is_marked(y)) return false;
        if (d == 0) return true;
        const auto& fx = a.faces_of(x);
        const auto& fy = b.faces_of(y);
        for (int i = 0; i <= d; ++i) {
            SimplexRef want{fwd.at(fx[i].target), fx[i].word};
            if (want != fy[i]) return false;
        }
        return true;
    }

    bool run(std::vector<std::pair<int, std::string>>& order, std::size_t pos,
             std::set<std::string>& used) {
        if (pos == order.size()) return true;
        const auto& [d, x] = order[pos];
        if (d >= static_cast<int>(b.cells.size())) return false;
        for (const auto& y : b.cells[d]) {
            if (used.count(y) || !compatible(x, y)) continue;
            fwd[x] = y;
            used.insert(y);
            if (run(order, pos + 1, used)) return true;
            used.erase(y);
            fwd.erase(x);
        }
        return false;
    }
};

} // namespace

bool isomorphic(const StratifiedComplex& a, const StratifiedComplex& b,
                bool require_marking) {
    for (std::size_t d = 0; d < std::max(a.cells.size(), b.cells.size()); ++d) {
        std::size_t na = d < a.cells.size() ? a.cells[d].size() : 0;
        std::size_t nb = d < b.cells.size() ? b.cells[d].size() : 0;
        if (na != nb) return false;
    }
    IsoSearch search{a, b, require_marking, {}};
    std::vector<std::pair<int, std::string>> order;
    for (std::size_t d = 0; d < a.cells.size(); ++d)
        for (const auto& id : a.cells[d]) order.emplace_back(static_cast<int>(d), id);
    std::set<std::string> used;
    return search.run(order, 0, used);
}

} // namespace oracle
