// street_nerve.hpp -- the Street nerve of a finite omega-category as a
// stratified complex, under identity / saturated / custom stratifications,
// plus the coskeletality check.
#pragma once

#include "complicial/assemble.hpp"
#include "complicial/budget.hpp"
#include "complicial/lifting.hpp"
#include "complicial/omega_cat.hpp"
#include "complicial/orientals.hpp"

#include <functional>

namespace complicial {

/// An n-simplex of the nerve: the generator assignment of an omega-functor
/// O_n -> C, one value per nonempty subset of [n] (indexed by bitmask).
struct NerveSimplex {
    std::vector<std::string> values; // size 2^(n+1); entry 0 unused

    int arity() const;
    const std::string& at(orientals::Face mask) const { return values[mask]; }
    auto operator<=>(const NerveSimplex&) const = default;
};

enum class Stratification { identity, saturated1, saturated2, custom };

/// A custom rule receives the simplex, its dimension and the category.
using MarkingRule = std::function<bool(const NerveSimplex&, int, const OmegaCat&)>;

namespace detail {
struct NerveAdapter;
}

class NerveComplex {
  public:
    NerveComplex(OmegaCatPtr c, int bound, Stratification strat, Budget& budget,
                 MarkingRule custom_rule = nullptr);
    ~NerveComplex();
    NerveComplex(NerveComplex&&) noexcept;

    const StratifiedComplex& complex() const;
    /// EZ normal form of an arbitrary functor assignment.
    SimplexRef ref_of(const NerveSimplex& s) const;
    const NerveSimplex& simplex_of(const std::string& id) const;
    const OmegaCatPtr& category() const { return category_; }

  private:
    OmegaCatPtr category_;
    std::unique_ptr<AssembledComplex<detail::NerveAdapter>> assembled_;
};

/// The Street nerve up to `bound`.  For saturated1 the input must be a
/// 1-category, for saturated2 a 2-category.
StratifiedComplex nerve(const OmegaCatPtr& c, int bound, Stratification strat,
                        Budget& budget, MarkingRule custom_rule = nullptr);
StratifiedComplex nerve(const OmegaCatPtr& c, int bound, Stratification strat);

/// Default nerve bound for an n-category input: n + 2, coskeletality making
/// higher dimensions determined.
int default_nerve_bound(const OmegaCat& c);

/// Every sphere dDelta[r] -> NC with n+1 < r <= bound has exactly one filler.
CheckReport coskeletality_check(const OmegaCatPtr& c, int n, int bound, Budget& budget);

/// All omega-functor assignments O_n -> C (the n-simplices of the nerve,
/// degenerate included), in a deterministic order.
std::vector<NerveSimplex> nerve_simplices(const OmegaCatPtr& c, const orientals::Oriental& o,
                                          Budget& budget);

/// Materialises the functor O_n -> C extending a generator assignment and
/// validates it; empty optional when the assignment does not extend.
std::optional<OmegaFunctor> extend_assignment(const OmegaCatPtr& c,
                                              const orientals::Oriental& o,
                                              const NerveSimplex& s);

} // namespace complicial
