// omega_cat.hpp -- finite single-sorted strict omega-categories given by
// per-level source/target/composition tables, their axioms, functors, and
// the invertibility detectors used by nerve stratifications.
#pragma once

#include "complicial/simplicial.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace complicial {

/// A finite omega-category.  Levels at or above level_bound are discrete:
/// s_n = t_n = id and x *_n x = x there.  Composition is stored only on
/// compatible pairs; looking up an incompatible pair is an error.
struct OmegaCat {
    std::vector<std::string> elements; // sorted
    int level_bound = 0;

    struct Level {
        std::map<std::string, std::string> src, tgt;
        std::map<std::pair<std::string, std::string>, std::string> comp;
    };
    std::vector<Level> levels; // size level_bound

    bool has(const std::string& x) const;
    const std::string& src_at(int n, const std::string& x) const;
    const std::string& tgt_at(int n, const std::string& x) const;
    bool composable(int n, const std::string& a, const std::string& b) const;
    /// a *_n b, defined when s_n(a) = t_n(b).
    const std::string& compose_at(int n, const std::string& a, const std::string& b) const;

    /// Least n with s_n(x) = x.
    int cell_dimension(const std::string& x) const;
    /// True when every level above n is discrete.
    bool is_n_category(int n) const;
};

using OmegaCatPtr = std::shared_ptr<const OmegaCat>;
OmegaCatPtr share(OmegaCat c);

/// Exhaustive check of the single-sorted axioms: per-level 1-category laws,
/// globularity, boundaries of horizontal composites, and middle four
/// interchange for every pair of levels.
std::vector<Violation> validate(const OmegaCat& c);

struct OmegaFunctor {
    OmegaCatPtr domain, codomain;
    std::map<std::string, std::string> map;

    const std::string& apply(const std::string& x) const { return map.at(x); }
};

std::vector<Violation> validate(const OmegaFunctor& f);
OmegaFunctor compose(const OmegaFunctor& second, const OmegaFunctor& first);

/// Isomorphisms of a 1-category (two-sided inverse search).  Identities are
/// included.
std::set<std::string> detect_isos_1(const OmegaCat& c);

struct TwoCatEquivalences {
    std::set<std::string> equivalence_1_cells; // includes identities
    std::set<std::string> invertible_2_cells;  // *_1-invertible, includes low cells
};

/// Equivalence 1-cells and invertible 2-cells of a 2-category.
TwoCatEquivalences detect_equivalences_2(const OmegaCat& c);

// -- convenience constructors -----------------------------------------------

struct ArrowSpec {
    std::string name, src, tgt;
};

/// A 1-category from objects, arrows and a composition table on nonidentity
/// arrows; identity composites are filled in automatically.
OmegaCat from_category(const std::vector<std::string>& objects,
                       const std::vector<ArrowSpec>& arrows,
                       const std::map<std::pair<std::string, std::string>, std::string>& comp);

struct TwoCellSpec {
    std::string name, src, tgt; // src, tgt are 1-cells (or objects)
};

/// A 2-category from a 1-categorical base plus 2-cells; *_0 on nonidentity
/// 2-cells and *_1 tables are supplied explicitly where nontrivial.
OmegaCat from_two_category(
    const std::vector<std::string>& objects, const std::vector<ArrowSpec>& arrows,
    const std::map<std::pair<std::string, std::string>, std::string>& comp0,
    const std::vector<TwoCellSpec>& two_cells,
    const std::map<std::pair<std::string, std::string>, std::string>& comp0_two,
    const std::map<std::pair<std::string, std::string>, std::string>& comp1);

// -- fixtures used across the test and acceptance suites ---------------------

OmegaCat poset_three_chain();      // the poset [2] as a 1-category
OmegaCat walking_isomorphism();    // two objects, inverse arrows f, g
OmegaCat cyclic_group_3();         // 3-element group as one-object groupoid
OmegaCat walking_two_cell();       // 5 elements: noninvertible alpha: f => g
OmegaCat walking_invertible_two_cell(); // 6 elements: alpha invertible

} // namespace complicial
