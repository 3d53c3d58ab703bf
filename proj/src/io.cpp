#include "complicial/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace complicial {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

std::string print_ref(const SimplexRef& ref) { return to_string(ref); }

SimplexRef parse_ref(const std::string& token) {
    // degeneracy word letters are the maximal run of trailing ^<digits>
    // groups; identifiers never end in such a group
    std::size_t cut = token.size();
    std::vector<int> word;
    for (;;) {
        std::size_t pos = cut;
        while (pos > 0 && std::isdigit(static_cast<unsigned char>(token[pos - 1]))) --pos;
        if (pos == cut || pos == 0 || token[pos - 1] != '^') break;
        word.push_back(std::stoi(token.substr(pos, cut - pos)));
        cut = pos - 1;
    }
    std::reverse(word.begin(), word.end());
    if (cut == 0) throw std::invalid_argument("empty simplex reference");
    return SimplexRef{token.substr(0, cut), word};
}

namespace {

// ---------------------------------------------------------------- printing

struct Printer {
    std::ostringstream out;

    void line(const std::string& s) { out << s << "\n"; }

    static std::vector<std::pair<int, std::string>> ordered_ids(const StratifiedComplex& x) {
        std::vector<std::pair<int, std::string>> ids;
        for (std::size_t d = 0; d < x.cells.size(); ++d)
            for (const auto& id : x.cells[d]) ids.emplace_back(static_cast<int>(d), id);
        return ids;
    }

    void complex(const StratifiedComplex& x) {
        line("complex");
        line("bound " + std::to_string(x.dimension_bound));
        for (int d = 0; d <= x.dimension_bound; ++d) {
            std::string l = "dim " + std::to_string(d);
            if (d < static_cast<int>(x.cells.size()))
                for (const auto& id : x.cells[d]) l += " " + id;
            line(l);
        }
        for (const auto& [d, id] : ordered_ids(x)) {
            if (d == 0) continue;
            std::string l = "faces " + id;
            for (const auto& ref : x.faces_of(id)) l += " " + print_ref(ref);
            line(l);
        }
        std::string m = "marked";
        for (const auto& [d, id] : ordered_ids(x))
            if (x.is_marked(id)) m += " " + id;
        line(m);
        line("end");
    }

    void assignment_lines(const std::string& keyword, const ComplexMap& m) {
        for (const auto& [d, id] : ordered_ids(*m.domain))
            line(keyword + " " + id + " " + print_ref(m.assignment.at(id)));
    }

    void map(const ComplexMap& m) {
        line("map");
        line("domain");
        complex(*m.domain);
        line("codomain");
        complex(*m.codomain);
        assignment_lines("assign", m);
        line("end");
    }

    void inclusion(const Inclusion& i) {
        line("inclusion");
        line("kind " + to_string(i.kind));
        line("domain");
        complex(*i.map.domain);
        line("codomain");
        complex(*i.map.codomain);
        assignment_lines("assign", i.map);
        line("end");
    }

    void problem(const LiftingProblem& p) {
        line("problem");
        inclusion(p.inclusion);
        line("target");
        complex(*p.attempt.codomain);
        assignment_lines("attempt", p.attempt);
        line("end");
    }

    void report(const CheckReport& r) {
        line("report");
        line("check " + r.check);
        line("bound " + std::to_string(r.bound));
        line(std::string("verdict ") + (r.pass ? "pass" : "fail"));
        if (!r.note.empty()) line("note " + r.note);
        if (r.witness) {
            line("witness");
            problem(*r.witness);
        }
        for (const auto& ext : r.extensions) {
            line("extension");
            assignment_lines("assign", ext);
            line("end");
        }
        line("end");
    }

    void omegacat(const OmegaCat& c) {
        line("omegacat");
        line("bound " + std::to_string(c.level_bound));
        std::string e = "elements";
        for (const auto& x : c.elements) e += " " + x;
        line(e);
        for (int k = 0; k < c.level_bound; ++k) {
            line("level " + std::to_string(k));
            for (const auto& x : c.elements) line("s " + x + " " + c.levels[k].src.at(x));
            for (const auto& x : c.elements) line("t " + x + " " + c.levels[k].tgt.at(x));
            for (const auto& [key, val] : c.levels[k].comp)
                line("c " + key.first + " " + key.second + " " + val);
        }
        line("end");
    }

    void simplexset(const SimplexSet& s) {
        line("simplexset");
        for (const auto& ref : s.items) line("item " + print_ref(ref));
        line("end");
    }

    void steplist(const StepList& s) {
        line("steps");
        for (const auto& st : s.steps)
            line((st.kind == AttachmentStep::Kind::attach ? "attach " : "mark ") +
                 st.simplex + " " + std::to_string(st.dim));
        line("end");
    }
};

// ----------------------------------------------------------------- parsing

struct Token {
    std::string text;
    int line, col;
};

struct Reader {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    int last_line = 1;

    explicit Reader(const std::string& text) {
        int line = 1, col = 1;
        std::string cur;
        int cur_col = 1;
        auto flush = [&]() {
            if (!cur.empty()) {
                tokens.push_back({cur, line, cur_col});
                cur.clear();
            }
        };
        for (char ch : text) {
            if (ch == '\n') {
                flush();
                tokens.push_back({"\n", line, col});
                ++line;
                col = 1;
                continue;
            }
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                flush();
                ++col;
                continue;
            }
            if (cur.empty()) cur_col = col;
            cur += ch;
            ++col;
        }
        flush();
        last_line = line;
    }

    [[noreturn]] void fail(const std::string& msg) {
        if (pos < tokens.size()) throw ParseError(tokens[pos].line, tokens[pos].col, msg);
        throw ParseError(last_line, 1, msg);
    }

    bool at_end() {
        skip_newlines();
        return pos == tokens.size();
    }

    void skip_newlines() {
        while (pos < tokens.size() && tokens[pos].text == "\n") ++pos;
    }

    const Token& peek() {
        skip_newlines();
        if (pos == tokens.size()) fail("unexpected end of input");
        return tokens[pos];
    }

    std::string next() {
        skip_newlines();
        if (pos == tokens.size()) fail("unexpected end of input");
        return tokens[pos++].text;
    }

    /// Remaining tokens on the current line (no newline crossing).
    std::vector<std::string> rest_of_line() {
        std::vector<std::string> out;
        while (pos < tokens.size() && tokens[pos].text != "\n") out.push_back(tokens[pos++].text);
        return out;
    }

    void expect(const std::string& keyword) {
        skip_newlines();
        if (pos == tokens.size() || tokens[pos].text != keyword)
            fail("expected '" + keyword + "'");
        ++pos;
    }

    int integer() {
        std::string t = next();
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            --pos;
            fail("expected an integer, got '" + t + "'");
        }
    }

    SimplexRef ref() {
        std::string t = next();
        try {
            return parse_ref(t);
        } catch (const std::exception&) {
            --pos;
            fail("bad simplex reference '" + t + "'");
        }
    }
};

StratifiedComplex parse_complex(Reader& r) {
    r.expect("complex");
    StratifiedComplex x;
    bool have_bound = false;
    for (;;) {
        std::string field = r.next();
        if (field == "end") break;
        if (field == "bound") {
            x.dimension_bound = r.integer();
            x.cells.resize(x.dimension_bound + 1);
            have_bound = true;
        } else if (field == "dim") {
            if (!have_bound) r.fail("'dim' before 'bound'");
            int d = r.integer();
            if (d < 0 || d > x.dimension_bound) r.fail("dimension out of range");
            for (const auto& id : r.rest_of_line()) {
                if (x.dims.count(id)) r.fail("duplicate simplex '" + id + "'");
                x.cells[d].push_back(id);
                x.dims[id] = d;
            }
        } else if (field == "faces") {
            std::string id = r.next();
            if (!x.has(id)) r.fail("faces for unknown simplex '" + id + "'");
            std::vector<SimplexRef> fl;
            for (const auto& t : r.rest_of_line()) {
                try {
                    fl.push_back(parse_ref(t));
                } catch (const std::exception&) {
                    r.fail("bad simplex reference '" + t + "'");
                }
            }
            x.faces[id] = std::move(fl);
        } else if (field == "marked") {
            for (const auto& id : r.rest_of_line()) {
                if (!x.has(id)) r.fail("marked unknown simplex '" + id + "'");
                x.marking.insert(id);
            }
        } else {
            --r.pos;
            r.fail("unknown field '" + field + "' in complex");
        }
    }
    return x;
}

void parse_assignments(Reader& r, const std::string& keyword, ComplexMap& m,
                       bool consume_end) {
    for (;;) {
        r.skip_newlines();
        if (r.pos == r.tokens.size()) r.fail("unexpected end of input");
        if (r.tokens[r.pos].text != keyword) break;
        ++r.pos;
        std::string id = r.next();
        m.assignment[id] = r.ref();
    }
    if (consume_end) r.expect("end");
}

ComplexMap parse_map_body(Reader& r) {
    ComplexMap m;
    r.expect("domain");
    m.domain = share(parse_complex(r));
    r.expect("codomain");
    m.codomain = share(parse_complex(r));
    parse_assignments(r, "assign", m, true);
    return m;
}

ComplexMap parse_map(Reader& r) {
    r.expect("map");
    return parse_map_body(r);
}

Inclusion parse_inclusion(Reader& r) {
    r.expect("inclusion");
    r.expect("kind");
    std::string kind = r.next();
    if (kind != "regular" && kind != "entire" && kind != "mixed") {
        --r.pos;
        r.fail("unknown inclusion kind '" + kind + "'");
    }
    Inclusion inc;
    inc.map = parse_map_body(r);
    inc.kind = kind == "regular" ? InclusionKind::regular
               : kind == "entire" ? InclusionKind::entire
                                  : InclusionKind::mixed;
    return inc;
}

LiftingProblem parse_problem(Reader& r) {
    r.expect("problem");
    LiftingProblem p;
    p.inclusion = parse_inclusion(r);
    r.expect("target");
    p.attempt.domain = p.inclusion.map.domain;
    p.attempt.codomain = share(parse_complex(r));
    parse_assignments(r, "attempt", p.attempt, true);
    return p;
}

CheckReport parse_report(Reader& r) {
    r.expect("report");
    CheckReport rep;
    for (;;) {
        std::string field = r.next();
        if (field == "end") break;
        if (field == "check") rep.check = r.next();
        else if (field == "bound") rep.bound = r.integer();
        else if (field == "verdict") {
            std::string v = r.next();
            if (v != "pass" && v != "fail") {
                --r.pos;
                r.fail("unknown verdict '" + v + "'");
            }
            rep.pass = v == "pass";
        } else if (field == "note") rep.note = r.next();
        else if (field == "witness") rep.witness = parse_problem(r);
        else if (field == "extension") {
            ComplexMap ext;
            if (!rep.witness) r.fail("extension without witness");
            ext.domain = rep.witness->inclusion.map.codomain;
            ext.codomain = rep.witness->attempt.codomain;
            parse_assignments(r, "assign", ext, true);
            rep.extensions.push_back(std::move(ext));
        } else {
            --r.pos;
            r.fail("unknown field '" + field + "' in report");
        }
    }
    return rep;
}

OmegaCat parse_omegacat(Reader& r) {
    r.expect("omegacat");
    OmegaCat c;
    int level = -1;
    for (;;) {
        std::string field = r.next();
        if (field == "end") break;
        if (field == "bound") {
            c.level_bound = r.integer();
            c.levels.resize(c.level_bound);
        } else if (field == "elements") {
            for (const auto& x : r.rest_of_line()) c.elements.push_back(x);
        } else if (field == "level") {
            level = r.integer();
            if (level < 0 || level >= c.level_bound) r.fail("level out of range");
        } else if (field == "s" || field == "t") {
            if (level < 0) r.fail("'" + field + "' before 'level'");
            std::string x = r.next(), y = r.next();
            (field == "s" ? c.levels[level].src : c.levels[level].tgt)[x] = y;
        } else if (field == "c") {
            if (level < 0) r.fail("'c' before 'level'");
            std::string a = r.next(), b = r.next(), ab = r.next();
            c.levels[level].comp[{a, b}] = ab;
        } else {
            --r.pos;
            r.fail("unknown field '" + field + "' in omegacat");
        }
    }
    return c;
}

SimplexSet parse_simplexset(Reader& r) {
    r.expect("simplexset");
    SimplexSet s;
    for (;;) {
        std::string field = r.next();
        if (field == "end") break;
        if (field == "item") s.items.push_back(r.ref());
        else {
            --r.pos;
            r.fail("unknown field '" + field + "' in simplexset");
        }
    }
    return s;
}

StepList parse_steps(Reader& r) {
    r.expect("steps");
    StepList s;
    for (;;) {
        std::string field = r.next();
        if (field == "end") break;
        if (field == "attach" || field == "mark") {
            AttachmentStep st;
            st.kind = field == "attach" ? AttachmentStep::Kind::attach
                                        : AttachmentStep::Kind::mark;
            st.simplex = r.next();
            st.dim = r.integer();
            s.steps.push_back(std::move(st));
        } else {
            --r.pos;
            r.fail("unknown field '" + field + "' in steps");
        }
    }
    return s;
}

} // namespace

std::string print(const Document& doc) {
    Printer p;
    p.line("complicial " + std::to_string(doc.version));
    std::visit(
        [&](const auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, StratifiedComplex>) p.complex(payload);
            else if constexpr (std::is_same_v<T, ComplexMap>) p.map(payload);
            else if constexpr (std::is_same_v<T, Inclusion>) p.inclusion(payload);
            else if constexpr (std::is_same_v<T, LiftingProblem>) p.problem(payload);
            else if constexpr (std::is_same_v<T, CheckReport>) p.report(payload);
            else if constexpr (std::is_same_v<T, OmegaCat>) p.omegacat(payload);
            else if constexpr (std::is_same_v<T, SimplexSet>) p.simplexset(payload);
            else p.steplist(payload);
        },
        doc.payload);
    return p.out.str();
}

Document parse(const std::string& text) {
    Reader r(text);
    r.expect("complicial");
    Document doc;
    doc.version = r.integer();
    if (doc.version != 1) {
        --r.pos;
        r.fail("unsupported format version");
    }
    const std::string& kind = r.peek().text;
    if (kind == "complex") doc.payload = parse_complex(r);
    else if (kind == "map") doc.payload = parse_map(r);
    else if (kind == "inclusion") doc.payload = parse_inclusion(r);
    else if (kind == "problem") doc.payload = parse_problem(r);
    else if (kind == "report") doc.payload = parse_report(r);
    else if (kind == "omegacat") doc.payload = parse_omegacat(r);
    else if (kind == "simplexset") doc.payload = parse_simplexset(r);
    else if (kind == "steps") doc.payload = parse_steps(r);
    else r.fail("unknown document kind '" + kind + "'");
    if (!r.at_end()) r.fail("trailing content after document");
    return doc;
}

Document wrap(StratifiedComplex x) { return Document{1, std::move(x)}; }
Document wrap(ComplexMap m) { return Document{1, std::move(m)}; }
Document wrap(Inclusion i) { return Document{1, std::move(i)}; }
Document wrap(LiftingProblem p) { return Document{1, std::move(p)}; }
Document wrap(CheckReport r) { return Document{1, std::move(r)}; }
Document wrap(OmegaCat c) { return Document{1, std::move(c)}; }
Document wrap(SimplexSet s) { return Document{1, std::move(s)}; }
Document wrap(StepList s) { return Document{1, std::move(s)}; }

} // namespace complicial
