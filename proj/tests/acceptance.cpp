// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "freeavg/avgroup.hpp"
#include "freeavg/linearalg.hpp"
#include "freeavg/structures.hpp"
#include "freeavg/suites.hpp"

using namespace freeavg;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s)
{
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(3);
    o << s << " s";
    return o.str();
}

SuiteOutcome suite(const std::string& name, std::size_t trials = 1000)
{
    SuiteConfig c;
    c.suite = name;
    c.trials = trials;
    c.seed = 7;
    return run_suite(name, c);
}

void require_suite(Verdict& v, const SuiteOutcome& s, std::size_t min_checked)
{
    for (const LawOutcome& l : s.laws) {
        v.require(l.checked >= min_checked, s.suite + ": " + l.law + " checked only " + std::to_string(l.checked));
        if (l.failures == 0) continue;
        std::string minimal;
        for (std::size_t i = 0; i < l.minimal.size(); ++i)
            minimal += (i ? ", " : "") + l.input_names.at(i) + " = " + render(l.minimal[i]);
        v.require(false, s.suite + ": " + l.law + " [" + std::to_string(l.checked - l.failures) + "/" +
                             std::to_string(l.checked) + " passed]; minimal " + minimal + "; sides " + l.detail);
    }
}

// 1. Exact example strings.
Verdict examples()
{
    Verdict v;
    struct Example {
        std::string kind, a, b, expected;
    };
    const std::vector<Example> cases{
        {"mul", "[x [y]]@2", "[z]^-1", "[x [y]]@2 [z]^-1"}, {"mul", "[z]^-1", "[z]@3", "[z]^-1 [z]@3"},
        {"mul", "[x [y]]@2", "[z]@3", "[x [y [z]]]@4"},     {"op", "[x [y]]@2", "", "[x [y]]@3"},
        {"op", "[z]^-1", "", "[[z]^-1]"},                    {"op", "[x]@3 y [z]@2", "", "[x [y [z]]]@4"}};
    double worst = 0;
    for (const Example& e : cases) {
        auto t0 = Clock::now();
        std::string got = e.kind == "mul" ? render(diamond(NormalWord::parse(e.a), NormalWord::parse(e.b)))
                                          : render(op_apply(NormalWord::parse(e.a)));
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        v.require(got == e.expected, e.kind + " " + e.a + " " + e.b + " gave " + got);
        v.require(dt < 1e-3, e.kind + " " + e.a + " took " + fmt_seconds(dt));
    }
    v.notes.push_back("6 examples, slowest " + std::to_string(static_cast<long>(worst * 1e6)) + " us");
    return v;
}

// 2 to 6. Randomized suites.
Verdict suites(const std::vector<std::string>& names, double limit, std::size_t min_checked)
{
    Verdict v;
    auto t0 = Clock::now();
    std::size_t laws = 0;
    for (const std::string& n : names) {
        SuiteOutcome s = suite(n);
        laws += s.laws.size();
        require_suite(v, s, min_checked);
    }
    double dt = seconds_since(t0);
    v.require(dt < limit, "took " + fmt_seconds(dt));
    v.notes.insert(v.notes.begin(), std::to_string(laws) + " laws x 1000 trials, " + fmt_seconds(dt));
    return v;
}

// 7. Finite structure theory.
Verdict structure_theory()
{
    Verdict v;
    FiniteGroup z2 = cyclic_group(2);
    v.require(search_averaging_ops(z2) ==
                  std::vector<OperatorTable>{constant_operator(z2, 0), identity_operator(z2), shift_operator(z2, 1).op()},
              "Z2 search is not {constant-0, identity, shift-1}");

    const std::string unit = "dimonoid unit g -| e = g = e |- g";
    std::size_t handles = 0, pointed = 0;
    std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                    klein_four_group(), cyclic_group(5), cyclic_group(6), symmetric_group_3()};
    for (const FiniteGroup& g : groups) {
        for (const OperatorTable& op : search_averaging_ops(g)) {
            FiniteAveragingGroup h(g, op);
            std::string label = "order " + std::to_string(g.size()) + " A = " + describe_operator(g, op);
            ++handles;
            LawReport d = check_disemigroup(h);
            for (const LawResult& l : d.results)
                if (l.law != unit) v.require(l.status == LawStatus::holds, label + ": " + l.law);
            bool unit_holds = d.find(unit)->status == LawStatus::holds;
            LawReport rack = check_rack(h);
            bool rack_applies = std::all_of(rack.results.begin(), rack.results.end(),
                                            [](const LawResult& l) { return l.status != LawStatus::inapplicable; });
            v.require(unit_holds == h.is_pointed(), label + ": dimonoid unit vs pointedness");
            v.require(rack_applies == h.is_pointed(), label + ": rack applicability vs pointedness");
            if (h.is_pointed()) {
                ++pointed;
                v.require(rack.ok(), label + ": rack");
                for (const LawResult& l : check_pointed_consequences(h).results)
                    v.require(l.status == LawStatus::holds, label + ": " + l.law);
            }
        }
    }
    FiniteGroup s3 = symmetric_group_3();
    FiniteAveragingGroup sign(s3, sign_retraction(s3));
    v.require(sign.is_pointed() && check_rack(sign).ok() && check_disemigroup(sign).ok(), "S3 sign retraction");
    v.notes.push_back(std::to_string(handles) + " handles, " + std::to_string(pointed) + " pointed");
    return v;
}

std::vector<OperatorTable> all_maps(std::size_t n)
{
    std::vector<OperatorTable> out;
    OperatorTable op(n, 0);
    while (true) {
        out.push_back(op);
        std::size_t i = 0;
        while (i < n && ++op[i] == n) op[i++] = 0;
        if (i == n) return out;
    }
}

// 8. Hopf equivalence.
Verdict hopf()
{
    Verdict v;
    auto t0 = Clock::now();
    std::size_t maps = 0, averaging = 0;
    for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4)}) {
        for (const OperatorTable& op : all_maps(g.size())) {
            ++maps;
            try {
                HopfVerdict h = check_hopf_equivalence(g, op);
                if (h.group_ok()) ++averaging;
            } catch (const HopfDisagreement& e) {
                v.require(false, e.what());
            }
            v.require(!check_coalgebra_map(g, linear_extend(op)).has_value(),
                      "coalgebra map on order " + std::to_string(g.size()) + " " + describe_operator(g, op));
        }
    }
    v.require(maps == 4 + 27 + 256, "map count " + std::to_string(maps));
    for (const auto& [label, g] : {std::pair{"Z2", cyclic_group(2)}, std::pair{"Z2xZ2", klein_four_group()}}) {
        AntipodeVerdict a = check_antipode_averaging(g);
        v.require(a.idempotent_antipode && !a.averaging && !a.coalgebra, std::string("antipode on ") + label);
    }
    double dt = seconds_since(t0);
    v.require(dt < 60, "took " + fmt_seconds(dt));
    v.notes.insert(v.notes.begin(), std::to_string(maps) + " maps, " + std::to_string(averaging) +
                                        " averaging; " + fmt_seconds(dt));
    return v;
}

// 9. Lie layer.
Verdict lie()
{
    Verdict v;
    LieAlgebraSpec l = solvable_lie_algebra_2d();
    LinearOperatorMatrix p1(2), p2(2);
    p1.set(0, 0, 1);
    p2.set(1, 1, 1);
    v.require(!check_averaging_lie(l, p1), "e1-projection averaging");
    v.require(!check_leibniz(l, p1), "e1-projection Leibniz");
    auto bad = check_averaging_lie(l, p2);
    v.require(bad.has_value() && bad->basis.size() == 2, "e2-projection must be rejected with a basis pair");
    if (bad) v.notes.push_back("e2-projection rejected: " + describe(*bad, {}));

    std::uint64_t state = 0x5eed;
    auto next = [&state](std::uint64_t m) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 33) % m;
    };
    for (int t = 0; t < 100; ++t) {
        std::size_t d = 1 + next(4);
        LieAlgebraSpec ab = abelian_lie_algebra(d);
        LinearOperatorMatrix a(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                a.set(i, j, Rational(static_cast<std::int64_t>(next(11)) - 5, 1 + static_cast<std::int64_t>(next(4))));
        v.require(!check_averaging_lie(ab, a) && !check_leibniz(ab, a), "abelian trial " + std::to_string(t));
    }
    v.notes.push_back("100 abelian trials");
    return v;
}

struct Process {
    int code;
    std::string out;
};

Process run_process(const std::string& command)
{
    Process p{-1, ""};
    FILE* f = popen((command + " 2>/dev/null").c_str(), "r");
    if (!f) return p;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
    int status = pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

// 10. Each mutant must break the exact examples or the oracle suite.
Verdict mutation()
{
    Verdict v;
    const std::vector<std::pair<std::string, std::string>> mutants{{"exponent", FREEAVG_MUT_EXPONENT_CLI},
                                                                   {"literal", FREEAVG_MUT_LITERAL_CLI}};
    const std::vector<std::pair<std::string, std::string>> examples{
        {"mul '[x [y]]@2' '[z]^-1'", "[x [y]]@2 [z]^-1"}, {"mul '[z]^-1' '[z]@3'", "[z]^-1 [z]@3"},
        {"mul '[x [y]]@2' '[z]@3'", "[x [y [z]]]@4"},     {"op '[x [y]]@2'", "[x [y]]@3"},
        {"op '[z]^-1'", "[[z]^-1]"},                       {"op '[x]@3 y [z]@2'", "[x [y [z]]]@4"}};
    for (const auto& [name, exe] : mutants) {
        std::size_t wrong = 0;
        for (const auto& [args, expected] : examples) {
            Process p = run_process("'" + exe + "' " + args);
            if (p.code != 0 || p.out != expected + "\n") ++wrong;
        }
        Process oracle = run_process("'" + exe + "' check --suite oracle --trials 1000 --seed 7");
        bool caught = wrong > 0 || oracle.code == 1;
        v.require(oracle.code == 0 || oracle.code == 1, name + " mutant did not run (exit " + std::to_string(oracle.code) + ")");
        v.require(caught, name + " mutant survived");
        v.notes.push_back(name + " mutant: " + std::to_string(wrong) + "/6 examples wrong, oracle suite exit " +
                          std::to_string(oracle.code));
    }
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"exact product and operator examples", examples},
        {"group laws of the diamond product", [] { return suites({"assoc"}, 30, 1000); }},
        {"averaging law and derived laws", [] { return suites({"averaging", "derived"}, 30, 1000); }},
        {"closure of normal words", [] { return suites({"closure"}, 30, 1000); }},
        {"agreement with the rewriting oracle", [] { return suites({"oracle"}, 60, 1000); }},
        {"homomorphisms into small averaging groups", [] { return suites({"hom"}, 60, 100); }},
        {"finite structure theory", structure_theory},
        {"group and group-algebra verdicts agree", hopf},
        {"averaging Lie operators", lie},
        {"mutants are detected", mutation}};

    std::size_t passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        if (v.pass) ++passed;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << "\n";
        for (const std::string& n : v.notes) std::cout << "     " << n << "\n";
    }
    std::cout << passed << "/" << criteria.size() << " criteria passed\n";
    return passed == criteria.size() ? 0 : 1;
}
