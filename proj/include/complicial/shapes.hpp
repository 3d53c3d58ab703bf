// shapes.hpp -- the named generator shapes: standard simplices, boundaries,
// horns, admissible simplices and their primed variants, Delta[3]_eq, and the
// generating families I, J, K^tr_n, K^s.
#pragma once

#include "complicial/simplicial.hpp"

#include <variant>

namespace complicial {

// Vertices of a shape are canonically labelled 0..n; identifiers of
// nondegenerate simplices are the ascending vertex words ("0", "01", ...).
char vertex_label(int v);
std::string vertex_word(const std::vector<int>& verts);

StratifiedComplex standard_simplex(int n);                  // Delta[n] flat
StratifiedComplex sharp_simplex(int n);                     // Delta[n]#, all positive marked
StratifiedComplex thin_top_simplex(int n);                  // Delta[n]_t
StratifiedComplex boundary_complex(int n);                  // dDelta[n] flat
StratifiedComplex admissible_simplex(int n, int k);         // Delta^k[n]
StratifiedComplex admissible_horn(int n, int k);            // Lambda^k[n], marking restricted
StratifiedComplex primed_simplex(int n, int k);             // Delta^k[n]'
StratifiedComplex double_primed_simplex(int n, int k);      // Delta^k[n]''
StratifiedComplex flat_horn(int n, int k);                  // Lambda^k[n] with no marking
StratifiedComplex delta3_eq();                              // Delta[3]_eq
StratifiedComplex delta3_sharp();                            // Delta[3]#

Inclusion horn_inclusion(int n, int k);         // Lambda^k[n] -> Delta^k[n], regular
Inclusion flat_horn_inclusion(int n, int k);    // Lambda^k[n] -> Delta[n], both flat
Inclusion thinness_inclusion(int n, int k);     // Delta^k[n]' -> Delta^k[n]'', entire
Inclusion boundary_inclusion(int n);            // dDelta[n] -> Delta[n], regular
Inclusion thin_top_inclusion(int n);            // Delta[n] -> Delta[n]_t, entire
Inclusion sphere_inclusion_flat(int n);         // dDelta[n] -> Delta[n], flat both sides
/// Delta[m] * Delta[3]_eq * Delta[n] -> Delta[m] * Delta[3]# * Delta[n]
/// with m, n >= -1; entire.
Inclusion saturation_inclusion(int m, int n);

/// The simplicial map Delta[m] -> Delta[n] induced by a monotone phi.
ComplexMap simplex_operator_map(const ComplexPtr& dom, const ComplexPtr& cod,
                                const MonotoneMap& phi);

enum class GeneratorFamily {
    standard,
    flat,
    sharp,
    thin_top,
    boundary,
    horn,
    admissible,
    admissible_horn,
    primed,
    double_primed,
    thinness,
    delta3_eq,
    delta3_sharp,
    saturation,
};

struct GeneratorSpec {
    GeneratorFamily family;
    int n = 0;
    int k = 0;
    int m = 0;
};

using Generator = std::variant<StratifiedComplex, Inclusion>;

/// Builds the named shape or inclusion; throws std::invalid_argument on
/// out-of-range parameters.
Generator make(const GeneratorSpec& spec);

enum class FamilyName { I, J, Ktr, Ks };

/// All members of a generating family whose shape dimension is at most
/// `bound`, in a deterministic order (dimension ascending, then index).  The
/// Ktr family takes the triviality level n; the others ignore it.
std::vector<Inclusion> family(FamilyName name, int bound, int n = 0);

/// The one-sided saturation family used by the saturation check:
/// Delta[3]_eq * Delta[r] -> Delta[3]# * Delta[r] for r >= -1, dimension at
/// most `bound`.
std::vector<Inclusion> saturation_family_left(int bound);

} // namespace complicial
