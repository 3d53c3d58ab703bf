// io.hpp -- the exchange format: a line-based structured text format with a
// bit-exact canonical printing, so golden tests diff cleanly and every fail
// report replays.
#pragma once

#include "complicial/constructions.hpp"
#include "complicial/lifting.hpp"
#include "complicial/omega_cat.hpp"
#include "complicial/simplicial.hpp"

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace complicial {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_, column_;
};

struct SimplexSet {
    std::vector<SimplexRef> items; // sorted
};

struct StepList {
    std::vector<AttachmentStep> steps;
};

struct Document {
    int version = 1;
    std::variant<StratifiedComplex, ComplexMap, Inclusion, LiftingProblem, CheckReport,
                 OmegaCat, SimplexSet, StepList>
        payload;
};

/// Canonical printing: dimension-major, identifier order, markings explicit.
std::string print(const Document& doc);
Document parse(const std::string& text);

std::string print_ref(const SimplexRef& ref);
SimplexRef parse_ref(const std::string& token); // right-to-left word parse

Document wrap(StratifiedComplex x);
Document wrap(ComplexMap m);
Document wrap(Inclusion i);
Document wrap(LiftingProblem p);
Document wrap(CheckReport r);
Document wrap(OmegaCat c);
Document wrap(SimplexSet s);
Document wrap(StepList s);

} // namespace complicial
