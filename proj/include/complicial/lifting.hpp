// lifting.hpp -- the extension-search engine and the property checkers
// defined by lifting: complicial, strict complicial, saturated, coskeletal,
// equivalence detection and the 2-simplex translation argument.
#pragma once

#include "complicial/budget.hpp"
#include "complicial/shapes.hpp"
#include "complicial/simplicial.hpp"

#include <optional>

namespace complicial {

/// An inclusion U -> V together with a stratified map U -> A to extend.
struct LiftingProblem {
    Inclusion inclusion;
    ComplexMap attempt;
};

std::vector<Violation> validate_problem(const LiftingProblem& p);

/// All stratified maps V -> A agreeing with a partial assignment on some of
/// the nondegenerate simplices.  Backtracks dimension ascending, candidates
/// in stable ref order; faces and markings prune.
std::vector<ComplexMap> search_maps(const ComplexPtr& v, const ComplexPtr& a,
                                    const std::map<std::string, SimplexRef>& partial,
                                    std::size_t max_results, Budget& budget);

/// All stratified maps of the inclusion codomain into the attempt codomain
/// restricting to the attempt.  The empty list is a valid answer.
std::vector<ComplexMap> enumerate_extensions(const LiftingProblem& p,
                                             std::size_t max_results, Budget& budget);

struct CheckReport {
    bool pass = true;
    std::string check;
    int bound = 0;
    std::string note; // machine-readable failure code
    std::optional<LiftingProblem> witness;
    std::vector<ComplexMap> extensions; // the offending pair on uniqueness failures

    explicit operator bool() const { return pass; }
};

/// Extensions exist along every member of the family J of shape dimension at
/// most `bound`, for every stratified map of the member's domain into A.
CheckReport is_complicial(const ComplexPtr& a, int bound, Budget& budget);
/// As above with unique extensions.
CheckReport is_strict_complicial(const ComplexPtr& a, int bound, Budget& budget);
/// Extensions exist along the one-sided saturation family within the bound.
CheckReport is_saturated(const ComplexPtr& a, int bound, Budget& budget);

/// Every sphere dDelta[r] -> A with r_min <= r <= bound has exactly one
/// filler; markings are ignored (flat domains).
CheckReport unique_sphere_fillers(const ComplexPtr& a, int r_min, int bound, Budget& budget);

/// Re-runs a failed report's witness; true when the recorded verdict is
/// reproduced.
bool replay_witness(const CheckReport& report, Budget& budget);

/// Nondegenerate edges admitting thin right- and left-inverse triangles with
/// degenerate long edge (degenerate edges are 1-equivalences by fiat and are
/// not listed).
std::set<std::string> detect_1_equivalences(const StratifiedComplex& a);
bool is_1_equivalence(const StratifiedComplex& a, const SimplexRef& edge);

/// Nondegenerate n-simplices admitting an extension along
/// Delta[n] -> Delta[3]_eq * Delta[n-2] through the edge [1,2]; requires an
/// n-trivial input.
std::set<std::string> detect_n_equivalences(const ComplexPtr& a, int n, Budget& budget);

struct Translation {
    SimplexRef hat;        // companion with first edge degenerate
    SimplexRef check_face; // companion with last edge degenerate
    bool thinness_linked;  // markedness constant across the triple
};

/// Companions of a 2-simplex produced by admissible 3-horn fillings; throws
/// std::runtime_error when a required filler is missing (A not complicial).
Translation translate_2_simplex(const ComplexPtr& a, const SimplexRef& alpha, Budget& budget);

} // namespace complicial
