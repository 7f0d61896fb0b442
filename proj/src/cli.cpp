#include "freeavg/cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>

#include "freeavg/avgroup.hpp"
#include "freeavg/io.hpp"
#include "freeavg/linearalg.hpp"
#include "freeavg/suites.hpp"

namespace freeavg {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reported on stdout and mapped to exit code 1.
class MathFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses a word; a raw word that is not normal is normalized with a notice.
NormalWord read_element(const std::string& text, std::ostream& err)
{
    Word w = parse(text);
    if (is_normal(w)) return NormalWord::certify(std::move(w));
    NormalWord n = NormalWord::normalize(w);
    err << "note: '" << text << "' is not in normal form; using '" << render(n) << "'\n";
    return n;
}

FiniteGroup load_group(const GroupFile& file)
{
    try {
        return FiniteGroup(file.table);
    } catch (const StructureError& e) {
        std::string what = std::string("group table does not define a group: ") + e.what();
        if (e.violation()) what += " (" + describe(*e.violation(), file.table.elements) + ")";
        throw InputError(what);
    }
}

std::map<std::string, std::size_t> parse_assignment(const std::string& spec, const FiniteGroup& g)
{
    std::map<std::string, std::size_t> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("bad map entry '" + item + "', expected x=element");
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        try {
            out[name] = g.index_of(value);
        } catch (const std::out_of_range&) {
            throw UsageError("map sends '" + name + "' to unknown element '" + value + "'");
        }
    }
    return out;
}

std::vector<std::string> split_alphabet(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Word w = parse(item);
        if (w.size() != 1 || !w.front().is_generator() || w.front().sign() != 1 || render(w) != item)
            throw UsageError("alphabet entry '" + item + "' is not a generator name");
        out.push_back(item);
    }
    if (out.empty()) throw UsageError("alphabet must not be empty");
    return out;
}

struct Options {
    std::string word, word2;
    bool oracle = false, trace = false, check_only = false;
    std::string strategy = "innermost";
    int iter = 1;
    std::string group_file, op_file, map_spec, structure_file, operator_file;
    bool pointed = false;
    SuiteConfig suite;
    std::string alphabet = "x,y,z";
};

int cmd_normalize(const Options& o, std::ostream& out)
{
    Word w = parse(o.word);
    if (o.check_only) {
        if (auto why = normal_form_violation(w)) {
            out << "not normal: " << *why << "\n";
            return kExitMathFailure;
        }
        out << "normal\n";
        return kExitOk;
    }
    RewriteTrace trace;
    NormalizeOptions options;
    options.strategy = o.strategy == "outermost" ? Strategy::outermost_rightmost : Strategy::innermost_leftmost;
    if (o.trace) options.trace = &trace;
    Word n = oracle_normalize(w, options);
    for (const RewriteStep& step : trace) out << format_step(step) << "\n";
    out << render(n) << "\n";
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err)
{
    GroupFile file = load_group_file(o.group_file);
    FiniteGroup g = load_group(file);
    if (!file.op) throw UsageError("group file '" + o.group_file + "' has no \"op\" entry");
    OperatorTable op = resolve_operator(g, *file.op);
    if (auto v = validate_averaging(g, op))
        throw MathFailure("operator is not averaging: " + describe(*v, g.names()));
    auto assignment = parse_assignment(o.map_spec, g);
    NormalWord w = read_element(o.word, err);
    for (const auto& name : generators_of(w.word()))
        if (!assignment.count(name)) throw UsageError("no assignment for generator '" + name + "'");
    auto f = extend_hom(assignment, FiniteAveragingGroup(g, op));
    out << g.name(f(w)) << "\n";
    return kExitOk;
}

int cmd_search_ops(const Options& o, std::ostream& out)
{
    FiniteGroup g = load_group(load_group_file(o.group_file));
    auto ops = search_averaging_ops(g, o.pointed);
    for (const auto& op : ops) out << describe_operator(g, op) << "\n";
    out << ops.size() << (o.pointed ? " pointed" : "") << " averaging operator" << (ops.size() == 1 ? "" : "s") << "\n";
    return kExitOk;
}

int cmd_hopf_check(const Options& o, std::ostream& out)
{
    GroupFile file = load_group_file(o.group_file);
    FiniteGroup g = load_group(file);
    std::map<std::string, std::string> by_name;
    if (!o.op_file.empty())
        by_name = load_operator_map(o.op_file);
    else if (file.op)
        by_name = *file.op;
    else
        throw UsageError("no operator: pass --op or add \"op\" to the group file");
    OperatorTable op = resolve_operator(g, by_name);

    HopfVerdict v;
    try {
        v = check_hopf_equivalence(g, op);
    } catch (const HopfDisagreement& e) {
        out << "disagreement: " << e.what() << "\n";
        return kExitMathFailure;
    }
    out << "(group: " << (v.group_ok() ? "ok" : "fail") << ", algebra: " << (v.algebra_ok() ? "ok" : "fail") << ")\n";
    if (v.group) out << "group: " << describe(*v.group, g.names()) << "\n";
    if (v.algebra) out << "algebra: " << describe(*v.algebra, g.names()) << "\n";
    return v.group_ok() ? kExitOk : kExitMathFailure;
}

int cmd_lie_check(const Options& o, std::ostream& out)
{
    LieAlgebraSpec lie = load_lie_file(o.structure_file);
    LinearOperatorMatrix a = load_matrix_file(o.operator_file);
    if (auto why = lie.validation_error()) throw InputError("not a Lie algebra: " + *why);
    if (a.dim() != lie.dim()) throw InputError("operator matrix dimension does not match the Lie algebra");
    if (auto v = check_averaging_lie(lie, a)) {
        out << "averaging: fail " << describe(*v, {}) << "\n";
        out << "leibniz: skipped (operator is not averaging)\n";
        return kExitMathFailure;
    }
    out << "averaging: ok\n";
    if (auto v = check_leibniz(lie, a)) {
        out << "leibniz: fail " << describe(*v, {}) << "\n";
        return kExitMathFailure;
    }
    out << "leibniz: ok\n";
    return kExitOk;
}

int cmd_check(Options o, std::ostream& out)
{
    o.suite.alphabet = split_alphabet(o.alphabet);
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suites(o.suite);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& line : report.lines()) out << line << "\n";
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
    char timing[64];
    std::snprintf(timing, sizeof timing, "time: %.3f s", seconds);
    out << timing << "\n";
    return report.ok() ? kExitOk : kExitMathFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Free averaging groups: normal words, their operations, and law checks"};
    app.name("freeavg");
    app.require_subcommand(1);
    Options o;

    auto* normalize = app.add_subcommand("normalize", "Normalize a word with the rewriting oracle");
    normalize->add_option("word", o.word, "Bracketed word")->required();
    normalize->add_flag("--oracle", o.oracle, "Use the rewriting oracle (the default)");
    normalize->add_flag("--trace", o.trace, "Print every rewriting step");
    normalize->add_flag("--check-only", o.check_only, "Only report whether the word is normal");
    normalize->add_option("--strategy", o.strategy, "Rewriting strategy")
        ->check(CLI::IsMember({"innermost", "outermost"}));

    auto* mul = app.add_subcommand("mul", "Product of two elements");
    mul->add_option("u", o.word, "Left factor")->required();
    mul->add_option("v", o.word2, "Right factor")->required();

    auto* op = app.add_subcommand("op", "Apply the averaging operator");
    op->add_option("word", o.word, "Element")->required();
    op->add_option("--iter", o.iter, "Number of applications")->check(CLI::NonNegativeNumber);

    auto* inv = app.add_subcommand("inv", "Inverse of an element");
    inv->add_option("word", o.word, "Element")->required();

    auto* check = app.add_subcommand("check", "Run randomized law suites");
    check->add_option("--suite", o.suite.suite, "Suite to run")
        ->check(CLI::IsMember({"assoc", "averaging", "closure", "oracle", "hom", "derived", "all"}));
    check->add_option("--trials", o.suite.trials, "Trials per suite")->check(CLI::PositiveNumber);
    check->add_option("--seed", o.suite.seed, "Random seed");
    check->add_option("--max-depth", o.suite.max_depth, "Maximal bracket depth")->check(CLI::NonNegativeNumber);
    check->add_option("--max-breadth", o.suite.max_breadth, "Maximal breadth")->check(CLI::PositiveNumber);
    check->add_option("--alphabet", o.alphabet, "Comma-separated generator names");

    auto* eval = app.add_subcommand("eval", "Evaluate a word in a finite averaging group");
    eval->add_option("--group", o.group_file, "Group file with an \"op\" entry")->required();
    eval->add_option("--map", o.map_spec, "Generator assignment, e.g. x=a,y=b")->required();
    eval->add_option("word", o.word, "Element")->required();

    auto* search = app.add_subcommand("search-ops", "List all averaging operators on a finite group");
    search->add_option("--group", o.group_file, "Group file")->required();
    search->add_flag("--pointed", o.pointed, "Only operators with A(e) = e");

    auto* hopf = app.add_subcommand("hopf-check", "Compare group and group-algebra averaging verdicts");
    hopf->add_option("--group", o.group_file, "Group file")->required();
    hopf->add_option("--op", o.op_file, "Operator file (defaults to the group file's \"op\")");

    auto* lie = app.add_subcommand("lie-check", "Check an averaging operator on a Lie algebra");
    lie->add_option("--structure", o.structure_file, "Lie structure-constant file")->required();
    lie->add_option("--operator", o.operator_file, "Operator matrix file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (normalize->parsed()) return cmd_normalize(o, out);
        if (mul->parsed()) {
            NormalWord u = read_element(o.word, err);
            NormalWord v = read_element(o.word2, err);
            out << render(diamond(u, v)) << "\n";
            return kExitOk;
        }
        if (op->parsed()) {
            out << render(op_iter(read_element(o.word, err), o.iter)) << "\n";
            return kExitOk;
        }
        if (inv->parsed()) {
            out << render(inverse(read_element(o.word, err))) << "\n";
            return kExitOk;
        }
        if (check->parsed()) return cmd_check(o, out);
        if (eval->parsed()) return cmd_eval(o, out, err);
        if (search->parsed()) return cmd_search_ops(o, out);
        if (hopf->parsed()) return cmd_hopf_check(o, out);
        if (lie->parsed()) return cmd_lie_check(o, out);
    } catch (const MathFailure& e) {
        out << e.what() << "\n";
        return kExitMathFailure;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StepLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace freeavg
