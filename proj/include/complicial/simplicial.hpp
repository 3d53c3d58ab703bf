// simplicial.hpp -- finite stratified simplicial sets in Eilenberg-Zilber
// normal form: simplex references, monotone operators, complexes, maps and
// inclusions.
#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace complicial {

/// A monotone map [m] -> [n] between finite ordinals, stored by its value
/// list.  These act contravariantly on simplices.
struct MonotoneMap {
    int codomain_arity = 0;       // the n of [n]
    std::vector<int> values;      // size m+1, weakly increasing, in [0, n]

    int domain_arity() const { return static_cast<int>(values.size()) - 1; }
    bool is_monotone() const;
    bool is_injective() const;
    bool is_surjective() const;

    static MonotoneMap identity(int n);
    static MonotoneMap coface(int n, int i);      // delta_i : [n-1] -> [n]
    static MonotoneMap codegeneracy(int n, int i); // sigma_i : [n+1] -> [n]

    /// this after other: [k] -> [m] -> [n].
    MonotoneMap after(const MonotoneMap& other) const;

    /// Epi-mono factorisation: returns (epi, mono) with *this = mono ∘ epi.
    std::pair<MonotoneMap, MonotoneMap> epi_mono() const;

    auto operator<=>(const MonotoneMap&) const = default;
};

/// Degeneracy words: a surjection [n] ->> [n-r] is coded by its collapse set
/// {i : s(i) = s(i+1)} listed strictly decreasing.  The empty word is the
/// identity.
std::vector<int> word_of_surjection(const MonotoneMap& epi);
MonotoneMap surjection_of_word(const std::vector<int>& word, int domain_arity);

/// A simplex in EZ normal form: a degeneracy word applied to a nondegenerate
/// simplex.  word = (a1 > a2 > ... > ar) stands for s_{a1} s_{a2} ... s_{ar}.
struct SimplexRef {
    std::string target;
    std::vector<int> word;

    bool degenerate() const { return !word.empty(); }
    auto operator<=>(const SimplexRef&) const = default;
};

std::string to_string(const SimplexRef& ref);

/// Applies the degeneracy operator s_i to a ref, renormalising the word.
SimplexRef degenerate_ref(const SimplexRef& ref, int i);

/// Applies a surjective operator (degeneracy word) to a ref.
SimplexRef apply_word(const SimplexRef& ref, const std::vector<int>& word, int ref_dim);

struct Violation {
    std::string code;
    std::string detail;
};

/// A finite stratified simplicial set, truncated at dimension_bound.  Only
/// nondegenerate simplices are stored; everything else is reached through
/// degeneracy words.  The marking set lists thin nondegenerate simplices of
/// positive dimension; degenerate simplices are thin by fiat.
struct StratifiedComplex {
    int dimension_bound = 0;
    std::vector<std::vector<std::string>> cells;           // per dimension, sorted ids
    std::map<std::string, std::vector<SimplexRef>> faces;  // id -> d_0..d_m
    std::map<std::string, int> dims;                       // id -> dimension
    std::set<std::string> marking;

    bool has(const std::string& id) const { return dims.count(id) != 0; }
    int dim_of(const std::string& id) const;
    int dim_of(const SimplexRef& ref) const;
    const std::vector<SimplexRef>& faces_of(const std::string& id) const;
    std::size_t nondegenerate_count() const;

    bool is_marked(const std::string& id) const { return marking.count(id) != 0; }
    /// Thinness as seen by queries: degenerate simplices count as thin,
    /// vertices never do.
    bool is_thin(const SimplexRef& ref) const;

    /// Contravariant action of a monotone operator op : [k] -> [dim ref] on a
    /// simplex, producing the EZ normal form of ref . op.
    SimplexRef act(const SimplexRef& ref, const MonotoneMap& op) const;
    SimplexRef face(const SimplexRef& ref, int i) const;

    /// All simplices of a given dimension (nondegenerate and degenerate), in
    /// a deterministic order.
    std::vector<SimplexRef> simplices_of_dim(int d) const;

    /// Vertices of a simplex, in order: the images of the operators
    /// [0] -> [dim], 0 |-> j.
    std::vector<std::string> vertices_of(const SimplexRef& ref) const;

    void insert_simplex(const std::string& id, int dim, std::vector<SimplexRef> face_list);
    void sort_cells();

    bool operator==(const StratifiedComplex&) const = default;
};

using ComplexPtr = std::shared_ptr<const StratifiedComplex>;
ComplexPtr share(StratifiedComplex complex);

/// Structural validation: EZ-well-formed face tables, simplicial identities
/// checked exhaustively up to the bound, marking positive-dimensional.
std::vector<Violation> validate_complex(const StratifiedComplex& x);

/// A stratified map, given by its values on nondegenerate simplices.
struct ComplexMap {
    ComplexPtr domain;
    ComplexPtr codomain;
    std::map<std::string, SimplexRef> assignment;

    SimplexRef apply(const SimplexRef& ref) const;
    SimplexRef apply(const std::string& id) const { return apply(SimplexRef{id, {}}); }
};

ComplexMap identity_map(const ComplexPtr& x);
ComplexMap compose(const ComplexMap& second, const ComplexMap& first);
bool same_underlying(const StratifiedComplex& a, const StratifiedComplex& b);

/// Checks that the assignment commutes with faces, preserves dimension and
/// sends marked simplices to thin ones.
std::vector<Violation> validate_map(const ComplexMap& m);

enum class InclusionKind { regular, entire, mixed };
std::string to_string(InclusionKind kind);

/// A monomorphism of stratified complexes: injective on nondegenerate
/// simplices with nondegenerate images.
struct Inclusion {
    ComplexMap map;
    InclusionKind kind = InclusionKind::mixed;
};

/// Classifies a validated injective map; throws std::invalid_argument when
/// the map is not a monomorphism of the required form.
Inclusion make_inclusion(ComplexMap map);

/// Rebuilds a complex that is structurally identical to `x` except for the
/// marking set.  Marking entries must name positive-dimensional simplices.
StratifiedComplex with_marking(const StratifiedComplex& x, std::set<std::string> marking);

} // namespace complicial
