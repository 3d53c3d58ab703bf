// constructions.hpp -- product, join, slice, trivialisation, core,
// subcomplexes and the generator decomposition of monomorphisms.
#pragma once

#include "complicial/assemble.hpp"
#include "complicial/simplicial.hpp"

#include <optional>

namespace complicial {

namespace detail {

struct ProductAdapter {
    using Token = std::pair<SimplexRef, SimplexRef>;
    ComplexPtr left, right;

    std::vector<Token> simplices(int d) const;
    Token face(const Token& t, int i) const;
    Token degeneracy(const Token& t, int i) const;
    bool marked(const Token& t, int) const;
    std::string name(const Token& t, int) const;
};

struct JoinAdapter {
    using Token = std::pair<std::optional<SimplexRef>, std::optional<SimplexRef>>;
    ComplexPtr left, right;

    int left_dim(const Token& t) const;
    std::vector<Token> simplices(int d) const;
    Token face(const Token& t, int i) const;
    Token degeneracy(const Token& t, int i) const;
    bool marked(const Token& t, int) const;
    std::string name(const Token& t, int) const;
};

struct SliceAdapter {
    using Token = SimplexRef;
    ComplexPtr base;
    SimplexRef over;
    int over_dim = 0;
    bool from_left = false; // left slice acts on the trailing coordinates

    std::vector<Token> simplices(int d) const;
    Token face(const Token& t, int i) const;
    Token degeneracy(const Token& t, int i) const;
    bool marked(const Token& t, int) const;
    std::string name(const Token& t, int) const;
};

} // namespace detail

/// The cartesian product in Strat: a pair is thin iff both projections are
/// thin, degenerate components counting as thin.
class ProductComplex {
  public:
    ProductComplex(ComplexPtr left, ComplexPtr right);

    const StratifiedComplex& complex() const { return assembled_.complex(); }
    const ComplexPtr& left() const { return left_; }
    const ComplexPtr& right() const { return right_; }

    SimplexRef ref_of(const SimplexRef& a, const SimplexRef& b) const;
    std::pair<SimplexRef, SimplexRef> components(const std::string& id) const;

  private:
    ComplexPtr left_, right_;
    AssembledComplex<detail::ProductAdapter> assembled_;
};

StratifiedComplex product(const ComplexPtr& a, const ComplexPtr& b);

/// Image of f x g under deterministic product construction on both sides.
ComplexMap product_map(const ProductComplex& dom, const ProductComplex& cod,
                       const ComplexMap& f, const ComplexMap& g);

/// The stratified join: a pair is thin iff at least one component is thin.
class JoinComplex {
  public:
    JoinComplex(ComplexPtr left, ComplexPtr right);

    const StratifiedComplex& complex() const { return assembled_.complex(); }
    std::string left_vertex(const std::string& vertex_id) const;
    std::string right_vertex(const std::string& vertex_id) const;
    std::pair<std::optional<SimplexRef>, std::optional<SimplexRef>>
    components(const std::string& id) const;

  private:
    ComplexPtr left_, right_;
    AssembledComplex<detail::JoinAdapter> assembled_;
};

StratifiedComplex join(const ComplexPtr& a, const ComplexPtr& b);

enum class SliceSide { left, right };

/// Slice of a complex over a simplex: k-simplices of the right slice A/sigma
/// are the (k+n+1)-simplices of A whose final face is sigma, and dually for
/// the left slice sigma\A.  A slice simplex is marked iff its representing
/// simplex is thin in A.
class SliceComplex {
  public:
    SliceComplex(ComplexPtr base, SimplexRef over, SliceSide side);

    const StratifiedComplex& complex() const { return assembled_.complex(); }
    /// Representing simplex of a slice simplex in the base complex.
    SimplexRef representative(const std::string& id) const;

  private:
    ComplexPtr base_;
    AssembledComplex<detail::SliceAdapter> assembled_;
};

StratifiedComplex slice(const ComplexPtr& a, const SimplexRef& over, SliceSide side);

/// tr_n: marks every nondegenerate simplex above dimension n.
StratifiedComplex trivialize(const StratifiedComplex& x, int n);

/// core_n: keeps the simplices all of whose faces above dimension n are thin.
StratifiedComplex core(const StratifiedComplex& x, int n);
/// The regular inclusion core_n X -> X.
Inclusion core_inclusion(const ComplexPtr& x, int n);

bool is_n_trivial(const StratifiedComplex& x, int n);

/// Induced subcomplex on a face-closed set of nondegenerate simplices, with
/// the restricted marking; returns the inclusion into the ambient complex.
Inclusion induced_subcomplex(const ComplexPtr& ambient, const std::set<std::string>& keep,
                             int bound);

/// Finds the nondegenerate simplex with the given ordered vertex list; only
/// meaningful for complexes where vertices determine simplices.
SimplexRef simplex_spanned_by(const StratifiedComplex& x,
                              const std::vector<std::string>& vertices);

struct AttachmentStep {
    enum class Kind { attach, mark };
    Kind kind;
    std::string simplex; // identifier in the ambient complex
    int dim;
};

/// Writes a monomorphism as a sequence of boundary attachments (pushouts of
/// boundary inclusions) followed by marking steps (pushouts of thin-top
/// inclusions), dimension ascending then identifier order; the recomposition
/// is replayed internally and must rebuild the codomain exactly.
std::vector<AttachmentStep> mono_decomposition(const Inclusion& inc);

} // namespace complicial
