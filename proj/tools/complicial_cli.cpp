// complicial_cli.cpp -- command-line surface: generate shapes, validate
// documents, run checks, compute nerves, orientals, homotopy categories,
// mono decompositions and equivalence detection.
//
// Exit codes: 0 success / property holds, 1 property fails (witness
// emitted), 2 usage or input error, 3 search budget exceeded.

#include "complicial/budget.hpp"
#include "complicial/constructions.hpp"
#include "complicial/homotopy.hpp"
#include "complicial/io.hpp"
#include "complicial/lifting.hpp"
#include "complicial/orientals.hpp"
#include "complicial/shapes.hpp"
#include "complicial/street_nerve.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace complicial;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

template <typename T>
const T* payload_as(const Document& doc) {
    return std::get_if<T>(&doc.payload);
}

int run_gen(const std::string& shape, int n, int k, int m, const std::string& output) {
    GeneratorSpec spec;
    spec.n = n;
    spec.k = k;
    spec.m = m;
    static const std::map<std::string, GeneratorFamily> names = {
        {"standard", GeneratorFamily::standard},
        {"flat", GeneratorFamily::flat},
        {"sharp", GeneratorFamily::sharp},
        {"thin-top", GeneratorFamily::thin_top},
        {"boundary", GeneratorFamily::boundary},
        {"horn", GeneratorFamily::horn},
        {"admissible", GeneratorFamily::admissible},
        {"horn-inclusion", GeneratorFamily::admissible_horn},
        {"primed", GeneratorFamily::primed},
        {"double-primed", GeneratorFamily::double_primed},
        {"thinness-inclusion", GeneratorFamily::thinness},
        {"delta3eq", GeneratorFamily::delta3_eq},
        {"delta3sharp", GeneratorFamily::delta3_sharp},
        {"saturation", GeneratorFamily::saturation},
    };
    auto it = names.find(shape);
    if (it == names.end()) throw std::invalid_argument("unknown shape: " + shape);
    spec.family = it->second;
    Generator g = make(spec);
    if (auto* complex = std::get_if<StratifiedComplex>(&g))
        write_output(output, print(wrap(std::move(*complex))));
    else write_output(output, print(wrap(std::move(std::get<Inclusion>(g)))));
    return 0;
}

int report_violations(const std::string& what, const std::vector<Violation>& violations,
                      const std::string& output) {
    CheckReport r;
    r.check = what;
    r.pass = violations.empty();
    if (!r.pass) r.note = violations.front().code;
    write_output(output, print(wrap(std::move(r))));
    for (const auto& v : violations)
        std::cerr << what << ": " << v.code << (v.detail.empty() ? "" : " (" + v.detail + ")")
                  << "\n";
    return violations.empty() ? 0 : 1;
}

int run_validate(const std::string& input, const std::string& output, Budget& budget) {
    Document doc = parse(read_input(input));
    if (auto* x = payload_as<StratifiedComplex>(doc))
        return report_violations("validate-complex", validate_complex(*x), output);
    if (auto* m = payload_as<ComplexMap>(doc))
        return report_violations("validate-map", validate_map(*m), output);
    if (auto* i = payload_as<Inclusion>(doc))
        return report_violations("validate-inclusion", validate_map(i->map), output);
    if (auto* p = payload_as<LiftingProblem>(doc))
        return report_violations("validate-problem", validate_problem(*p), output);
    if (auto* c = payload_as<OmegaCat>(doc))
        return report_violations("validate-omegacat", validate(*c), output);
    if (auto* r = payload_as<CheckReport>(doc)) {
        if (r->pass) {
            write_output(output, print(wrap(CheckReport{true, "replay", r->bound, "", {}, {}})));
            return 0;
        }
        bool reproduced = replay_witness(*r, budget);
        CheckReport out;
        out.check = "replay";
        out.bound = r->bound;
        out.pass = reproduced;
        if (!reproduced) out.note = "witness-does-not-replay";
        write_output(output, print(wrap(std::move(out))));
        return reproduced ? 0 : 1;
    }
    // simplex sets and step lists have nothing further to validate
    write_output(output, print(wrap(CheckReport{true, "validate", 0, "", {}, {}})));
    return 0;
}

int run_check(const std::string& property, const std::string& input, int bound, int n,
              const std::string& output, Budget& budget) {
    Document doc = parse(read_input(input));
    auto* x = payload_as<StratifiedComplex>(doc);
    if (!x) throw std::invalid_argument("check expects a complex document");
    auto violations = validate_complex(*x);
    if (!violations.empty())
        throw std::invalid_argument("input complex is invalid: " + violations.front().code);
    auto ptr = share(*x);
    CheckReport r;
    if (property == "complicial") r = is_complicial(ptr, bound, budget);
    else if (property == "strict-complicial") r = is_strict_complicial(ptr, bound, budget);
    else if (property == "saturated") r = is_saturated(ptr, bound, budget);
    else if (property == "quasicategory") r = is_quasicategory(ptr, bound, budget);
    else if (property == "n-trivial") {
        r.check = "n-trivial";
        r.bound = n;
        r.pass = is_n_trivial(*x, n);
        if (!r.pass) r.note = "unmarked-simplex-above-dimension";
    } else throw std::invalid_argument("unknown property: " + property);
    write_output(output, print(wrap(r)));
    return r.pass ? 0 : 1;
}

int run_nerve(const std::string& input, int bound, const std::string& strat_name,
              const std::string& output, Budget& budget) {
    Document doc = parse(read_input(input));
    auto* c = payload_as<OmegaCat>(doc);
    if (!c) throw std::invalid_argument("nerve expects an omegacat document");
    auto violations = validate(*c);
    if (!violations.empty())
        throw std::invalid_argument("input category is invalid: " + violations.front().code);
    Stratification strat;
    if (strat_name == "identity") strat = Stratification::identity;
    else if (strat_name == "saturated1") strat = Stratification::saturated1;
    else if (strat_name == "saturated2") strat = Stratification::saturated2;
    else throw std::invalid_argument("unknown stratification: " + strat_name);
    auto ptr = share(*c);
    int b = bound >= 0 ? bound : default_nerve_bound(*ptr);
    write_output(output, print(wrap(nerve(ptr, b, strat, budget))));
    return 0;
}

int run_oriental(int n, const std::string& output, Budget& budget) {
    auto o = orientals::build_oriental(n, budget);
    write_output(output, print(wrap(*o.category)));
    return 0;
}

int run_hocat(const std::string& input, const std::string& output, Budget& budget) {
    Document doc = parse(read_input(input));
    auto* x = payload_as<StratifiedComplex>(doc);
    if (!x) throw std::invalid_argument("hocat expects a complex document");
    auto hc = homotopy_category(share(*x), budget);
    write_output(output, print(wrap(std::move(hc.category))));
    return 0;
}

int run_decompose(const std::string& input, const std::string& output) {
    Document doc = parse(read_input(input));
    auto* inc = payload_as<Inclusion>(doc);
    if (!inc) throw std::invalid_argument("decompose expects an inclusion document");
    auto violations = validate_map(inc->map);
    if (!violations.empty())
        throw std::invalid_argument("input inclusion is invalid: " + violations.front().code);
    StepList steps{mono_decomposition(*inc)};
    write_output(output, print(wrap(std::move(steps))));
    return 0;
}

int run_equivs(const std::string& input, int n, const std::string& output, Budget& budget) {
    Document doc = parse(read_input(input));
    auto* x = payload_as<StratifiedComplex>(doc);
    if (!x) throw std::invalid_argument("equivs expects a complex document");
    SimplexSet s;
    if (n <= 1) {
        for (const auto& id : detect_1_equivalences(*x)) s.items.push_back(SimplexRef{id, {}});
    } else {
        for (const auto& id : detect_n_equivalences(share(*x), n, budget))
            s.items.push_back(SimplexRef{id, {}});
    }
    std::sort(s.items.begin(), s.items.end());
    write_output(output, print(wrap(std::move(s))));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite stratified simplicial sets, complicial checks and Street nerves"};
    app.require_subcommand(1);

    std::string output = "-";
    long long budget_limit = complicial::default_budget_limit();
    app.add_option("--output", output, "output path (default stdout)");
    app.add_option("--budget", budget_limit, "search budget in nodes");

    auto* gen = app.add_subcommand("gen", "generate a named shape or inclusion");
    std::string shape;
    int gen_n = 1, gen_k = 0, gen_m = -1;
    gen->add_option("shape", shape, "shape name")->required();
    gen->add_option("--n", gen_n, "simplex arity");
    gen->add_option("--k", gen_k, "horn/admissibility index");
    gen->add_option("--m", gen_m, "left join arity (saturation)");

    auto* validate_cmd = app.add_subcommand("validate", "validate or replay a document");
    std::string val_input = "-";
    validate_cmd->add_option("file", val_input, "input document");

    auto* check = app.add_subcommand("check", "decide a lifting property");
    std::string property, check_input = "-";
    int check_bound = 3, check_n = 1;
    check->add_option("property", property, "property name")->required();
    check->add_option("file", check_input, "input complex");
    check->add_option("--bound", check_bound, "dimension bound for the generating family");
    check->add_option("--n", check_n, "triviality level for n-trivial");

    auto* nerve_cmd = app.add_subcommand("nerve", "Street nerve of an omega-category");
    std::string nerve_input = "-", strat = "identity";
    int nerve_bound = -1;
    nerve_cmd->add_option("file", nerve_input, "input omegacat");
    nerve_cmd->add_option("--bound", nerve_bound, "nerve dimension bound (default n+2)");
    nerve_cmd->add_option("--stratification", strat, "identity | saturated1 | saturated2");

    auto* oriental_cmd = app.add_subcommand("oriental", "the oriental O_n as tables");
    int oriental_n = 2;
    oriental_cmd->add_option("--n", oriental_n, "oriental index")->required();

    auto* hocat = app.add_subcommand("hocat", "homotopy category of a quasi-category");
    std::string hocat_input = "-";
    hocat->add_option("file", hocat_input, "input complex");

    auto* decompose = app.add_subcommand("decompose", "generator decomposition of a mono");
    std::string dec_input = "-";
    decompose->add_option("file", dec_input, "input inclusion");

    auto* equivs = app.add_subcommand("equivs", "detect n-equivalences");
    std::string eq_input = "-";
    int eq_n = 1;
    equivs->add_option("file", eq_input, "input complex");
    equivs->add_option("--n", eq_n, "equivalence dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    complicial::Budget budget;
    budget.limit = budget_limit;
    try {
        if (gen->parsed()) return run_gen(shape, gen_n, gen_k, gen_m, output);
        if (validate_cmd->parsed()) return run_validate(val_input, output, budget);
        if (check->parsed())
            return run_check(property, check_input, check_bound, check_n, output, budget);
        if (nerve_cmd->parsed()) return run_nerve(nerve_input, nerve_bound, strat, output, budget);
        if (oriental_cmd->parsed()) return run_oriental(oriental_n, output, budget);
        if (hocat->parsed()) return run_hocat(hocat_input, output, budget);
        if (decompose->parsed()) return run_decompose(dec_input, output);
        if (equivs->parsed()) return run_equivs(eq_input, eq_n, output, budget);
    } catch (const complicial::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const complicial::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
