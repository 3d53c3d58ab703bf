// orientals.hpp -- the parity calculus of oriented simplexes: faces, odd and
// even boundaries, well-formed sets, the move relation, cells (M,P), atoms,
// sources/targets/composition, and the assembly of the oriental O_n as a
// finite omega-category.
#pragma once

#include "complicial/budget.hpp"
#include "complicial/omega_cat.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace complicial {
namespace orientals {

/// A face of Delta[n]: a nonempty vertex subset stored as a bitmask over
/// vertices 0..n.  Dimension is one less than the popcount.
using Face = std::uint32_t;

int face_dim(Face f);
Face face_from_vertices(const std::vector<int>& verts);
std::string face_name(Face f);
Face parse_face(const std::string& s);

/// Codimension-one faces obtained by deleting a vertex in odd (resp. even)
/// position; vertices contribute nothing.
std::vector<Face> odd_faces(Face f);
std::vector<Face> even_faces(Face f);

/// A finite set of faces, kept sorted.
using FaceSet = std::vector<Face>;

FaceSet face_set(std::initializer_list<std::string> names);
std::string face_set_name(const FaceSet& s);

FaceSet set_union(const FaceSet& a, const FaceSet& b);
FaceSet set_minus(const FaceSet& a, const FaceSet& b);
FaceSet elements_of_dim(const FaceSet& s, int k);      // S_k
FaceSet elements_up_to_dim(const FaceSet& s, int k);   // |S|_k
int top_dim(const FaceSet& s);

FaceSet odd_boundary(const FaceSet& s);   // S^-
FaceSet even_boundary(const FaceSet& s);  // S^+

struct WellFormedReport {
    bool well_formed = true;
    Face first = 0, second = 0; // offending pair (or duplicate vertex pair)
    std::string reason;
};

/// At most one vertex, and distinct elements share no sources and no targets.
WellFormedReport is_well_formed(const FaceSet& s);

/// S moves M to P: M = (P u S^-) \ S^+ and P = (M u S^+) \ S^-.
bool moves(const FaceSet& s, const FaceSet& m, const FaceSet& p);

/// A cell of an oriental: a pair of nonempty well-formed face sets, each of
/// which moves M to P.
struct CellMP {
    FaceSet m, p;

    int dim() const;
    auto operator<=>(const CellMP&) const = default;
};

std::string cell_name(const CellMP& c);
CellMP parse_cell(const std::string& name);

/// True when (m, p) satisfies the cell condition.
bool is_cell(const CellMP& c);

/// The atom generated by a single face, with iterated odd-face source and
/// even-face target.
CellMP atom(Face a);

CellMP source_k(const CellMP& c, int k);
CellMP target_k(const CellMP& c, int k);
bool composable_k(const CellMP& c, const CellMP& d, int k);
/// c *_k d in applicative order: defined when s_k(c) = t_k(d).
CellMP compose_k(const CellMP& c, const CellMP& d, int k);

/// How a cell of O_n was first reached during the closure; used to evaluate
/// freely generated functors by structural recursion.
struct CellWitness {
    enum class Kind { atom, source, target, compose } kind = Kind::atom;
    Face generator = 0;          // atom
    int level = 0;               // source/target/compose level
    CellMP left, right;          // compose operands (applicative order)
    CellMP argument;             // source/target argument
};

struct Oriental {
    int n = 0;
    OmegaCatPtr category;                 // element ids are cell names
    std::map<CellMP, CellWitness> witnesses;
    std::vector<CellMP> cells;            // sorted

    CellMP top_cell() const;              // the unique n-cell
};

/// The largest n build_oriental accepts; 4 unless overridden through the
/// COMPLICIAL_ORIENTAL_CAP environment variable.  Cell counts explode past
/// the default.
int oriental_cap();

/// Builds O_n by closing the atoms under sources, targets and binary
/// composition, level by level, and assembling the full tables.  Throws
/// std::invalid_argument above the cap and BudgetExceeded past the budget.
Oriental build_oriental(int n, Budget& budget);
Oriental build_oriental(int n);

/// Independently enumerates every (M,P) pair satisfying the cell condition
/// by pruned backtracking over well-formed sets.
std::set<CellMP> enumerate_cells_search(int n, Budget& budget);

/// The omega-functor O_n -> O_m relabelling faces along an injective
/// monotone map.
OmegaFunctor induced_functor(const MonotoneMap& phi, const Oriental& dom,
                             const Oriental& cod);

} // namespace orientals
} // namespace complicial
