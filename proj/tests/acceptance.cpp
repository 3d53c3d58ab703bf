// acceptance.cpp -- the acceptance suite: one criterion per case, one
// pass/fail line each, exit nonzero when any criterion fails.

#include "complicial/constructions.hpp"
#include "complicial/homotopy.hpp"
#include "complicial/io.hpp"
#include "complicial/lifting.hpp"
#include "complicial/orientals.hpp"
#include "complicial/shapes.hpp"
#include "complicial/street_nerve.hpp"

#include "oracles.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace complicial;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

Budget fresh_budget() {
    // pinned rather than read from the environment: acceptance runs must
    // reproduce exactly
    Budget b;
    b.limit = 50'000'000;
    return b;
}

ComplexPtr make_nerve(const OmegaCat& c, int bound, Stratification s) {
    Budget b = fresh_budget();
    return share(nerve(share(c), bound, s, b));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::size_t> counts(const StratifiedComplex& x) {
    std::vector<std::size_t> out;
    for (const auto& lv : x.cells) out.push_back(lv.size());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// 1. admissibility markings, frozen as golden files.
void criterion_admissibility() {
    const std::pair<std::pair<int, int>, std::string> cases[] = {
        {{2, 1}, "delta_k1_n2.txt"},
        {{2, 0}, "delta_k0_n2.txt"},
        {{3, 2}, "delta_k2_n3.txt"},
        {{3, 0}, "delta_k0_n3.txt"},
    };
    for (const auto& [nk, file] : cases) {
        auto text = print(wrap(admissible_simplex(nk.first, nk.second)));
        require(text == read_file(std::string(GOLDEN_DIR) + "/" + file),
                "marking table differs from golden " + file);
    }
    require(admissible_simplex(2, 0).marking == std::set<std::string>{"01", "012"},
            "Delta^0[2] must mark the 2-simplex and the edge 01");
}

// 2. atom(01234) expands to the frozen source and target sets.
void criterion_o4_atom() {
    using namespace orientals;
    auto a = atom(parse_face("01234"));
    auto m = face_set({"01234", "0124", "0234", "012", "023", "034", "04", "0"});
    auto p = face_set({"01234", "0123", "0134", "1234", "124", "234", "014", "01", "12",
                       "23", "34", "4"});
    require(a.m == m, "M component differs");
    require(a.p == p, "P component differs");
}

// 3. Oriental counts and search/closure agreement.
void criterion_oriental_counts() {
    using namespace orientals;
    Budget b = fresh_budget();
    auto count_dim = [](const Oriental& o, int d) {
        std::size_t n = 0;
        for (const auto& c : o.cells)
            if (c.dim() == d) ++n;
        return n;
    };
    auto o2 = build_oriental(2, b);
    require(count_dim(o2, 0) == 3 && count_dim(o2, 1) == 4 && count_dim(o2, 2) == 1,
            "O_2 cell counts are not 3/4/1");
    auto o3 = build_oriental(3, b);
    require(count_dim(o3, 1) == 11, "O_3 does not have 11 one-cells");
    for (int n = 0; n <= 4; ++n) {
        auto o = build_oriental(n, b);
        require(count_dim(o, n) == 1, "O_n does not have a unique top cell");
        o.top_cell();
        auto searched = enumerate_cells_search(n, b);
        require(std::set<CellMP>(o.cells.begin(), o.cells.end()) == searched,
                "search and closure disagree at n = " + std::to_string(n));
    }
}

// 4. Street nerves of 1-categories agree with the classical nerve.
void criterion_classical_nerve() {
    for (const OmegaCat& c : {poset_three_chain(), walking_isomorphism()}) {
        auto nc = make_nerve(c, 4, Stratification::identity);
        auto classical = oracle::classical_nerve(c, 4);
        require(counts(*nc) == counts(classical), "nondegenerate counts differ");
        require(oracle::isomorphic(*nc, classical, false),
                "face structure differs from the classical nerve");
    }
    auto po = make_nerve(poset_three_chain(), 4, Stratification::identity);
    require(counts(*po) == std::vector<std::size_t>{3, 3, 1}, "poset nerve counts");
}

// 5. identity-stratified nerves of strict categories are strict
// complicial sets; breaking one marking breaks the property.
void criterion_street_roberts() {
    Budget b = fresh_budget();
    for (const OmegaCat& c :
         {poset_three_chain(), walking_isomorphism(), walking_two_cell()}) {
        require(c.elements.size() <= 6, "fixture size");
        auto nc = make_nerve(c, 4, Stratification::identity);
        require(is_strict_complicial(nc, 4, b).pass,
                "identity-stratified nerve is not strict complicial");
    }
    require(walking_two_cell().elements.size() == 5, "the 2-category fixture has 5 elements");

    // unmark one thin 2-simplex of the poset nerve: strictness breaks with a
    // replayable witness
    auto nc = make_nerve(poset_three_chain(), 4, Stratification::identity);
    StratifiedComplex broken = *nc;
    bool removed = false;
    for (const auto& id : broken.cells[2])
        if (broken.marking.erase(id)) {
            removed = true;
            break;
        }
    require(removed, "no marked 2-simplex to remove");
    auto r = is_strict_complicial(share(std::move(broken)), 4, b);
    require(!r.pass, "mutated marking still passes");
    require(r.witness.has_value(), "no witness on the mutated nerve");
    require(replay_witness(r, b), "witness does not replay");
    auto reparsed = parse(print(wrap(r)));
    require(replay_witness(std::get<CheckReport>(reparsed.payload), b),
            "serialised witness does not replay");
}

// 6. Coskeletality of nerves.
void criterion_coskeletality() {
    Budget b = fresh_budget();
    require(coskeletality_check(share(poset_three_chain()), 1, 4, b).pass,
            "poset nerve spheres of dimension 3, 4 do not fill uniquely");
    require(coskeletality_check(share(walking_isomorphism()), 1, 4, b).pass,
            "isomorphism nerve spheres do not fill uniquely");
    require(coskeletality_check(share(walking_two_cell()), 2, 4, b).pass,
            "2-category nerve spheres of dimension 4 do not fill uniquely");
}

// 7. Marked edges of complicial fixtures are 1-equivalences.
void criterion_marked_edges() {
    Budget b = fresh_budget();
    std::vector<ComplexPtr> corpus = {
        make_nerve(poset_three_chain(), 3, Stratification::identity),
        make_nerve(walking_isomorphism(), 3, Stratification::identity),
        make_nerve(walking_isomorphism(), 3, Stratification::saturated1),
        make_nerve(walking_two_cell(), 3, Stratification::identity),
        make_nerve(walking_invertible_two_cell(), 3, Stratification::saturated2),
        share(trivialize(*make_nerve(cyclic_group_3(), 3, Stratification::identity), 0)),
    };
    for (const auto& a : corpus) {
        require(is_complicial(a, 3, b).pass, "corpus member is not complicial");
        auto eq = detect_1_equivalences(*a);
        for (const auto& id : a->cells[1])
            if (a->is_marked(id))
                require(eq.count(id) == 1, "marked edge " + id + " is not a 1-equivalence");
    }
}

// 8. Saturation dichotomy on the walking isomorphism, with exhaustive search.
void criterion_saturation_dichotomy() {
    Budget b = fresh_budget();
    auto ident = make_nerve(walking_isomorphism(), 3, Stratification::identity);
    auto r = is_saturated(ident, 3, b);
    require(!r.pass, "identity stratification should not be saturated");
    require(replay_witness(r, b), "saturation witness does not replay");

    auto natural = make_nerve(walking_isomorphism(), 3, Stratification::saturated1);
    require(is_saturated(natural, 3, b).pass, "natural marking should be saturated");
    require(is_complicial(natural, 3, b).pass, "natural marking should be complicial");

    // exhaustive search over 1-trivial markings: the natural one is the
    // unique saturated complicial marking
    std::vector<std::string> edges(ident->cells[1].begin(), ident->cells[1].end());
    require(edges.size() == 2, "fixture should have two nondegenerate edges");
    std::size_t winners = 0;
    std::set<std::string> winning;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::set<std::string> marking = trivialize(*ident, 1).marking;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask & (1u << i)) marking.insert(edges[i]);
        auto candidate = share(with_marking(*ident, marking));
        if (is_complicial(candidate, 3, b).pass && is_saturated(candidate, 3, b).pass) {
            ++winners;
            winning = marking;
        }
    }
    require(winners == 1, "expected a unique saturated 1-trivial marking");
    require(winning == natural->marking, "the winner is not the natural marking");
}

// 9. Weak-not-strict saturated 2-trivial nerve.
void criterion_weak_not_strict() {
    Budget b = fresh_budget();
    auto a = make_nerve(walking_invertible_two_cell(), 4, Stratification::saturated2);
    require(is_n_trivial(*a, 2), "saturated2 nerve should be 2-trivial");
    require(is_complicial(a, 4, b).pass, "saturated2 nerve should be complicial");
    auto r = is_strict_complicial(a, 4, b);
    require(!r.pass, "saturated2 nerve should not be strict");
    require(r.note == "non-unique-extension", "failure should be a uniqueness failure");
    require(r.extensions.size() == 2, "uniqueness failure should carry two extensions");
    require(replay_witness(r, b), "strictness witness does not replay");
}

// 10. Homotopy categories of nerves recover the category; all relation
// variants agree.
void criterion_homotopy_category() {
    Budget b = fresh_budget();
    for (const OmegaCat& c :
         {poset_three_chain(), walking_isomorphism(), cyclic_group_3()}) {
        Budget nb = fresh_budget();
        auto cp = share(c);
        NerveComplex nc(cp, 3, Stratification::identity, nb);
        auto x = share(nc.complex());
        auto hc = homotopy_category(x, b);
        require(validate(hc.category).empty(), "homotopy category fails the axioms");
        OmegaFunctor cmp;
        cmp.domain = cp;
        cmp.codomain = share(hc.category);
        std::set<std::string> hit;
        for (const auto& el : c.elements) {
            NerveSimplex tok;
            tok.values.assign(4, std::string());
            tok.values[1] = c.src_at(0, el);
            tok.values[2] = c.tgt_at(0, el);
            tok.values[3] = el;
            cmp.map[el] = hc.class_of(nc.ref_of(tok));
            hit.insert(cmp.map[el]);
        }
        require(validate(cmp).empty(), "comparison with the homotopy category fails");
        require(hit.size() == c.elements.size() &&
                    hit.size() == hc.category.elements.size(),
                "comparison is not a bijection");

        auto base = edge_homotopy_classes(*x, HomotopyVariant::deg0);
        for (auto v : {HomotopyVariant::deg0_swapped, HomotopyVariant::deg2,
                       HomotopyVariant::deg2_swapped}) {
            auto other = edge_homotopy_classes(*x, v);
            for (const auto& [e1, c1] : base)
                for (const auto& [e2, c2] : base)
                    require((c1 == c2) == (other.at(e1) == other.at(e2)),
                            "relation variants induce different quotients");
        }
    }
}

// 11. The sharp nerve of the 3-element group is a 0-trivial complicial set.
void criterion_kan() {
    Budget b = fresh_budget();
    auto nc = make_nerve(cyclic_group_3(), 3, Stratification::identity);
    auto sharp = share(trivialize(*nc, 0));
    require(is_n_trivial(*sharp, 0), "sharp nerve should be 0-trivial");
    require(is_complicial(sharp, 3, b).pass, "sharp group nerve should be complicial");
}

// 12. Ten random monomorphisms decompose and recompose.
void criterion_mono_decomposition() {
    std::mt19937 rng(1551129);
    auto ambient = share(standard_simplex(4));
    int rounds = 0;
    while (rounds < 10) {
        std::set<std::string> big;
        for (int d = 0; d <= 3; ++d)
            for (const auto& id : ambient->cells[d])
                if (rng() % 3) big.insert(id);
        for (int d = 3; d >= 1; --d)
            for (const auto& id : std::set<std::string>(big)) {
                if (!big.count(id) || ambient->dim_of(id) != d) continue;
                for (const auto& f : ambient->faces_of(id)) big.insert(f.target);
            }
        if (big.empty()) continue;
        StratifiedComplex v = *induced_subcomplex(ambient, big, 3).map.domain;
        for (const auto& [id, d] : v.dims)
            if (d > 0 && rng() % 2) v.marking.insert(id);
        auto v_ptr = share(std::move(v));

        std::set<std::string> small;
        for (const auto& [id, d] : v_ptr->dims)
            if (rng() % 2) small.insert(id);
        for (int d = 3; d >= 1; --d)
            for (const auto& id : std::set<std::string>(small)) {
                if (!small.count(id) || v_ptr->dim_of(id) != d) continue;
                for (const auto& f : v_ptr->faces_of(id)) small.insert(f.target);
            }
        if (small.empty()) small.insert(*big.begin());
        StratifiedComplex u = *induced_subcomplex(v_ptr, small, 3).map.domain;
        std::set<std::string> kept;
        for (const auto& id : u.marking)
            if (rng() % 2) kept.insert(id);
        u.marking = kept;

        ComplexMap m;
        m.domain = share(std::move(u));
        m.codomain = v_ptr;
        for (const auto& [id, d] : m.domain->dims) m.assignment[id] = SimplexRef{id, {}};
        auto inc = make_inclusion(std::move(m));
        auto steps = mono_decomposition(inc); // throws unless the replay rebuilds V
        std::size_t attaches = 0;
        for (const auto& s : steps)
            if (s.kind == AttachmentStep::Kind::attach) ++attaches;
        require(attaches ==
                    v_ptr->nondegenerate_count() - inc.map.domain->nondegenerate_count(),
                "attachment count mismatch");
        ++rounds;
    }
}

// 13. tr_n -| core_n by the identity on underlying assignments.
void criterion_adjunction() {
    Budget b = fresh_budget();
    std::vector<std::pair<ComplexPtr, ComplexPtr>> pairs = {
        {share(standard_simplex(2)), share(delta3_eq())},
        {share(admissible_simplex(2, 1)), share(thin_top_simplex(2))},
        {share(admissible_horn(3, 1)), share(sharp_simplex(2))},
    };
    for (const auto& [x, y] : pairs) {
        require(x->nondegenerate_count() <= 20 && y->nondegenerate_count() <= 20,
                "fixtures exceed the stated size bound");
        for (int n = 0; n <= 2; ++n) {
            auto trx = share(trivialize(*x, n));
            auto corey = share(core(*y, n));
            auto left = search_maps(trx, y, {}, SIZE_MAX, b);
            auto right = search_maps(x, corey, {}, SIZE_MAX, b);
            std::set<std::map<std::string, SimplexRef>> ls, rs;
            for (const auto& f : left) ls.insert(f.assignment);
            for (const auto& f : right) rs.insert(f.assignment);
            require(ls == rs, "map sets differ at n = " + std::to_string(n));
        }
    }
}

} // namespace

int main() {
    const std::pair<std::string, std::function<void()>> criteria[] = {
        {"admissibility tables match the golden files", criterion_admissibility},
        {"atom(01234) equals the frozen (M,P) pair", criterion_o4_atom},
        {"oriental counts and search/closure agreement", criterion_oriental_counts},
        {"Street nerves of 1-categories equal classical nerves", criterion_classical_nerve},
        {"identity-stratified nerves are strict complicial; mutation breaks",
         criterion_street_roberts},
        {"nerves of n-categories are (n+1)-coskeletal", criterion_coskeletality},
        {"marked edges are 1-equivalences across the corpus", criterion_marked_edges},
        {"saturation dichotomy on the walking isomorphism", criterion_saturation_dichotomy},
        {"saturated 2-trivial nerve is weak, not strict", criterion_weak_not_strict},
        {"homotopy categories recover the category; variants agree",
         criterion_homotopy_category},
        {"sharp nerve of a finite group is 0-trivial complicial", criterion_kan},
        {"random monomorphisms decompose and recompose", criterion_mono_decomposition},
        {"tr_n is left adjoint to core_n on map sets", criterion_adjunction},
    };

    int failures = 0;
    int number = 0;
    for (const auto& [label, run] : criteria) {
        ++number;
        std::string status = "PASS";
        std::string detail;
        try {
            run();
        } catch (const Failure& f) {
            status = "FAIL";
            detail = f.detail;
            ++failures;
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = e.what();
            ++failures;
        }
        std::printf("criterion %02d %-4s %s%s\n", number, status.c_str(), label.c_str(),
                    detail.empty() ? "" : ("  [" + detail + "]").c_str());
    }
    if (failures) std::printf("%d of 13 criteria failed\n", failures);
    else std::printf("all 13 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
