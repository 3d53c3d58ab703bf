// oracles.hpp -- independent reference implementations used by the tests:
// a vertex-tuple model of standard simplices, a classical nerve builder and
// an isomorphism checker for small complexes.
#pragma once

#include "complicial/omega_cat.hpp"
#include "complicial/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using complicial::MonotoneMap;
using complicial::SimplexRef;
using complicial::StratifiedComplex;

/// A simplex of Delta[n] is a weakly increasing vertex tuple; operators act
/// by composition, the EZ normal form by deduplication.
struct Tuple {
    std::vector<int> verts;

    Tuple act(const MonotoneMap& op) const {
        Tuple out;
        for (int v : op.values) out.verts.push_back(verts[v]);
        return out;
    }
};

inline std::string tuple_target_id(const Tuple& t) {
    std::string id;
    for (std::size_t i = 0; i < t.verts.size(); ++i)
        if (i == 0 || t.verts[i] != t.verts[i - 1]) id += "0123456789abcdef"[t.verts[i]];
    return id;
}

inline std::vector<int> tuple_word(const Tuple& t) {
    std::vector<int> word;
    for (int i = static_cast<int>(t.verts.size()) - 2; i >= 0; --i)
        if (t.verts[i] == t.verts[i + 1]) word.push_back(i);
    return word;
}

inline SimplexRef tuple_ref(const Tuple& t) { return {tuple_target_id(t), tuple_word(t)}; }

inline Tuple tuple_of_ref(const SimplexRef& ref) {
    std::vector<int> base;
    for (char c : ref.target)
        base.push_back(static_cast<int>(std::string("0123456789abcdef").find(c)));
    MonotoneMap sigma = complicial::surjection_of_word(
        ref.word, static_cast<int>(base.size()) - 1 + static_cast<int>(ref.word.size()));
    Tuple out;
    for (int v : sigma.values) out.verts.push_back(base[v]);
    return out;
}

/// The classical nerve of a finite 1-category: nondegenerate k-simplices are
/// the composable strings of nonidentity arrows.
StratifiedComplex classical_nerve(const complicial::OmegaCat& c, int bound);

/// Stratified isomorphism search between small complexes.
bool isomorphic(const StratifiedComplex& a, const StratifiedComplex& b,
                bool require_marking = true);

} // namespace oracle
