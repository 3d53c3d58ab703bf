// assemble.hpp -- builds a StratifiedComplex in EZ normal form from an
// adapter that presents all simplices of each dimension as abstract tokens
// with face and degeneracy actions.
#pragma once

#include "complicial/simplicial.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace complicial {

// An adapter must provide:
//   using Token = ...;                       ordered and equality-comparable
//   std::vector<Token> simplices(int d);     every d-simplex, degenerate included
//   Token face(const Token&, int i);
//   Token degeneracy(const Token&, int i);
//   bool marked(const Token&, int d);        consulted for nondegenerate, d >= 1
//   std::string name(const Token&, int d);   unique, deterministic
template <typename Adapter>
class AssembledComplex {
  public:
    AssembledComplex(Adapter adapter, int bound) : adapter_(std::move(adapter)) {
        complex_.dimension_bound = bound;
        complex_.cells.resize(bound + 1);
        for (int d = 0; d <= bound; ++d) {
            std::vector<std::pair<std::string, typename Adapter::Token>> nondeg;
            for (const auto& tok : adapter_.simplices(d))
                if (!is_degenerate(tok, d)) nondeg.emplace_back(adapter_.name(tok, d), tok);
            std::sort(nondeg.begin(), nondeg.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [id, tok] : nondeg) {
                ids_[tok] = id;
                tokens_.emplace(id, tok);
            }
            for (const auto& [id, tok] : nondeg) {
                std::vector<SimplexRef> face_list;
                for (int i = 0; i <= d && d > 0; ++i)
                    face_list.push_back(normalize(adapter_.face(tok, i), d - 1));
                complex_.insert_simplex(id, d, std::move(face_list));
                if (d >= 1 && adapter_.marked(tok, d)) complex_.marking.insert(id);
            }
        }
    }

    const StratifiedComplex& complex() const { return complex_; }
    StratifiedComplex take() { return std::move(complex_); }

    /// EZ normal form of an arbitrary token.
    SimplexRef ref_of(const typename Adapter::Token& tok, int d) const {
        return normalize(tok, d);
    }

    const typename Adapter::Token& token_of(const std::string& id) const {
        return tokens_.at(id);
    }

  private:
    bool is_degenerate_at(const typename Adapter::Token& tok, int i) const {
        return adapter_.degeneracy(adapter_.face(tok, i + 1), i) == tok;
    }

    bool is_degenerate(const typename Adapter::Token& tok, int d) const {
        for (int i = 0; i < d; ++i)
            if (is_degenerate_at(tok, i)) return true;
        return false;
    }

    SimplexRef normalize(const typename Adapter::Token& tok, int d) const {
        for (int i = 0; i < d; ++i)
            if (is_degenerate_at(tok, i))
                return degenerate_ref(normalize(adapter_.face(tok, i + 1), d - 1), i);
        return SimplexRef{ids_.at(tok), {}};
    }

    mutable Adapter adapter_;
    StratifiedComplex complex_;
    std::map<typename Adapter::Token, std::string> ids_;
    std::map<std::string, typename Adapter::Token> tokens_;
};

} // namespace complicial
