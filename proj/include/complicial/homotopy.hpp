// homotopy.hpp -- quasi-categories, the homotopy category, homotopies of
// maps through the marked cylinder, and the desk-scale internal hom.
#pragma once

#include "complicial/budget.hpp"
#include "complicial/lifting.hpp"
#include "complicial/omega_cat.hpp"
#include "complicial/simplicial.hpp"

namespace complicial {

/// Inner horn fillers exist up to the bound; markings are ignored.
CheckReport is_quasicategory(const ComplexPtr& x, int bound, Budget& budget);

/// Variants of the edge relation f ~ g: the degenerate edge sits in face 0
/// or face 2, with f and g in either order.
enum class HomotopyVariant { deg0, deg0_swapped, deg2, deg2_swapped };

/// Witness pairs (f, g) of parallel 1-simplices related by a 2-simplex of
/// the given pattern; includes degenerate edges.
std::set<std::pair<SimplexRef, SimplexRef>> edge_homotopy_witnesses(
    const StratifiedComplex& x, HomotopyVariant variant);

/// Partition of all 1-simplices up to the witness relation closed to an
/// equivalence relation.
std::map<SimplexRef, int> edge_homotopy_classes(const StratifiedComplex& x,
                                                HomotopyVariant variant);

struct HomotopyCategory {
    OmegaCat category;                     // a 1-category; elements are class names
    std::map<SimplexRef, std::string> edge_class;
    std::map<std::string, std::string> vertex_object; // vertex id -> element name

    const std::string& class_of(const SimplexRef& edge) const { return edge_class.at(edge); }
};

/// Objects are vertices, morphisms are edge classes under the f ~ g relation,
/// composition by inner-horn filler search; refuses non-quasi-categories.
HomotopyCategory homotopy_category(const ComplexPtr& x, Budget& budget);

/// f ~ g through a cylinder X x Delta[1]#; the maps must be parallel.
bool homotopic_maps(const ComplexMap& f, const ComplexMap& g, Budget& budget);

/// hom(X, A) computed to the bound: n-simplices are maps X x Delta[n] -> A,
/// marked when they extend over X x Delta[n]_t.
StratifiedComplex hom_complex(const ComplexPtr& x, const ComplexPtr& a, int bound,
                              Budget& budget);

} // namespace complicial
