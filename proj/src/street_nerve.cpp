#include "complicial/street_nerve.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>

namespace complicial {

using orientals::CellMP;
using orientals::CellWitness;
using orientals::Face;
using orientals::Oriental;

int NerveSimplex::arity() const {
    int size = static_cast<int>(values.size());
    int n = 0;
    while ((2 << n) < size) ++n;
    return n;
}

namespace {

const Oriental& cached_oriental(int n, Budget& budget) {
    static std::mutex mu;
    static std::map<int, Oriental> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, orientals::build_oriental(n, budget)).first;
    return it->second;
}

struct Evaluator {
    const OmegaCat& c;
    const Oriental& o;
    const std::vector<std::string>& assignment; // by mask
    std::map<CellMP, std::optional<std::string>> memo;

    std::optional<std::string> eval(const CellMP& cell) {
        auto it = memo.find(cell);
        if (it != memo.end()) return it->second;
        const CellWitness& w = o.witnesses.at(cell);
        std::optional<std::string> out;
        switch (w.kind) {
            case CellWitness::Kind::atom: {
                const auto& v = assignment[w.generator];
                out = v.empty() ? std::nullopt : std::optional<std::string>(v);
                break;
            }
            case CellWitness::Kind::source: {
                auto arg = eval(w.argument);
                if (arg) out = c.src_at(w.level, *arg);
                break;
            }
            case CellWitness::Kind::target: {
                auto arg = eval(w.argument);
                if (arg) out = c.tgt_at(w.level, *arg);
                break;
            }
            case CellWitness::Kind::compose: {
                auto l = eval(w.left);
                auto r = eval(w.right);
                if (l && r && c.composable(w.level, *l, *r))
                    out = c.compose_at(w.level, *l, *r);
                break;
            }
        }
        memo.emplace(cell, out);
        return out;
    }
};

std::vector<Face> masks_by_dim_order(int n) {
    std::vector<Face> masks;
    for (Face m = 1; m < (Face{1} << (n + 1)); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](Face a, Face b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    return masks;
}

} // namespace

std::optional<OmegaFunctor> extend_assignment(const OmegaCatPtr& c, const Oriental& o,
                                              const NerveSimplex& s) {
    Evaluator ev{*c, o, s.values, {}};
    OmegaFunctor f;
    f.domain = o.category;
    f.codomain = c;
    for (const auto& cell : o.cells) {
        auto v = ev.eval(cell);
        if (!v) return std::nullopt;
        f.map[orientals::cell_name(cell)] = *v;
    }
    if (!validate(f).empty()) return std::nullopt;
    return f;
}

std::vector<NerveSimplex> nerve_simplices(const OmegaCatPtr& c, const Oriental& o,
                                          Budget& budget) {
    const int n = o.n;
    auto masks = masks_by_dim_order(n);
    // boundary cells of each atom, for the source/target constraints
    std::map<Face, std::pair<CellMP, CellMP>> boundaries;
    for (Face m : masks) {
        int k = std::popcount(m) - 1;
        if (k == 0) continue;
        CellMP a = orientals::atom(m);
        boundaries.emplace(m, std::make_pair(orientals::source_k(a, k - 1),
                                             orientals::target_k(a, k - 1)));
    }

    std::vector<NerveSimplex> out;
    NerveSimplex current;
    current.values.assign(std::size_t{1} << (n + 1), std::string());

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        budget.spend("nerve_simplices");
        if (pos == masks.size()) {
            if (extend_assignment(c, o, current)) out.push_back(current);
            return;
        }
        Face m = masks[pos];
        int k = std::popcount(m) - 1;
        std::optional<std::string> want_src, want_tgt;
        if (k > 0) {
            Evaluator ev{*c, o, current.values, {}};
            const auto& [bs, bt] = boundaries.at(m);
            want_src = ev.eval(bs);
            want_tgt = ev.eval(bt);
            if (!want_src || !want_tgt) return;
        }
        for (const auto& x : c->elements) {
            if (c->cell_dimension(x) > k) continue;
            if (k > 0 &&
                (c->src_at(k - 1, x) != *want_src || c->tgt_at(k - 1, x) != *want_tgt))
                continue;
            current.values[m] = x;
            rec(pos + 1);
            current.values[m].clear();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct NerveAdapter {
    using Token = NerveSimplex;

    OmegaCatPtr c;
    Stratification strat;
    MarkingRule rule;
    std::shared_ptr<std::vector<std::vector<NerveSimplex>>> by_dim;
    std::shared_ptr<std::map<NerveSimplex, std::string>> names;
    std::set<std::string> isos, equivs1, invertible2;

    std::vector<Token> simplices(int d) const { return (*by_dim)[d]; }

    Token face(const Token& t, int i) const {
        int n = t.arity();
        Token out;
        out.values.assign(std::size_t{1} << n, std::string());
        for (Face m = 1; m < (Face{1} << n); ++m) {
            Face big = 0;
            for (int v = 0; v < n; ++v)
                if (m & (Face{1} << v)) big |= Face{1} << (v < i ? v : v + 1);
            out.values[m] = t.values[big];
        }
        return out;
    }

    Token degeneracy(const Token& t, int i) const {
        int n = t.arity();
        Token out;
        out.values.assign(std::size_t{1} << (n + 2), std::string());
        for (Face m = 1; m < (Face{1} << (n + 2)); ++m) {
            Face small = 0;
            for (int v = 0; v <= n + 1; ++v)
                if (m & (Face{1} << v)) small |= Face{1} << (v <= i ? v : v - 1);
            out.values[m] = t.values[small];
        }
        return out;
    }

    bool marked(const Token& t, int d) const {
        Face full = (Face{1} << (d + 1)) - 1;
        const std::string& top = t.values[full];
        switch (strat) {
            case Stratification::identity: return c->cell_dimension(top) < d;
            case Stratification::saturated1: return d >= 2 || isos.count(top) != 0;
            case Stratification::saturated2:
                if (d >= 3) return true;
                if (d == 2) return invertible2.count(top) != 0;
                return equivs1.count(top) != 0;
            case Stratification::custom: return rule(t, d, *c);
        }
        return false;
    }

    std::string name(const Token& t, int) const { return names->at(t); }
};

} // namespace detail

NerveComplex::~NerveComplex() = default;
NerveComplex::NerveComplex(NerveComplex&&) noexcept = default;

NerveComplex::NerveComplex(OmegaCatPtr c, int bound, Stratification strat, Budget& budget,
                           MarkingRule custom_rule)
    : category_(c) {
    if (validate(*c).size())
        throw std::invalid_argument("nerve: category fails validation");
    if (strat == Stratification::custom && !custom_rule)
        throw std::invalid_argument("nerve: custom stratification needs a rule");

    detail::NerveAdapter ad;
    ad.c = c;
    ad.strat = strat;
    ad.rule = std::move(custom_rule);
    if (strat == Stratification::saturated1) ad.isos = detect_isos_1(*c);
    if (strat == Stratification::saturated2) {
        auto eq = detect_equivalences_2(*c);
        ad.equivs1 = std::move(eq.equivalence_1_cells);
        ad.invertible2 = std::move(eq.invertible_2_cells);
    }
    ad.by_dim = std::make_shared<std::vector<std::vector<NerveSimplex>>>();
    ad.names = std::make_shared<std::map<NerveSimplex, std::string>>();
    for (int d = 0; d <= bound; ++d) {
        auto toks = nerve_simplices(c, cached_oriental(d, budget), budget);
        for (std::size_t i = 0; i < toks.size(); ++i) {
            std::string idx = std::to_string(i);
            (*ad.names)[toks[i]] =
                "n" + std::to_string(d) + "_" + std::string(4 - std::min<std::size_t>(
                                                      4, idx.size()), '0') + idx;
        }
        ad.by_dim->push_back(std::move(toks));
    }
    assembled_ =
        std::make_unique<AssembledComplex<detail::NerveAdapter>>(std::move(ad), bound);
}

const StratifiedComplex& NerveComplex::complex() const { return assembled_->complex(); }

SimplexRef NerveComplex::ref_of(const NerveSimplex& s) const {
    return assembled_->ref_of(s, s.arity());
}

const NerveSimplex& NerveComplex::simplex_of(const std::string& id) const {
    return assembled_->token_of(id);
}

StratifiedComplex nerve(const OmegaCatPtr& c, int bound, Stratification strat,
                        Budget& budget, MarkingRule custom_rule) {
    return NerveComplex(c, bound, strat, budget, std::move(custom_rule)).complex();
}

StratifiedComplex nerve(const OmegaCatPtr& c, int bound, Stratification strat) {
    Budget b;
    b.limit = default_budget_limit();
    return nerve(c, bound, strat, b);
}

int default_nerve_bound(const OmegaCat& c) {
    int n = 0;
    while (!c.is_n_category(n)) ++n;
    return n + 2;
}

CheckReport coskeletality_check(const OmegaCatPtr& c, int n, int bound, Budget& budget) {
    if (!c->is_n_category(n))
        throw std::invalid_argument("coskeletality_check: input is not an n-category");
    auto nc = share(nerve(c, bound, Stratification::identity, budget));
    return unique_sphere_fillers(nc, n + 2, bound, budget);
}

} // namespace complicial
