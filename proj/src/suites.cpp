#include "freeavg/suites.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "freeavg/structures.hpp"

namespace freeavg {

namespace {

constexpr std::size_t kShrinkBudget = 20000;  // law evaluations per shrink

// One trial: its inputs and a check per law, in the suite's law order.
struct TrialCase {
    std::vector<Word> inputs;
    std::vector<LawCheck> checks;
};

struct SuiteDef {
    std::vector<std::string> input_names;
    bool normal_inputs = true;
    std::vector<std::string> laws;
    std::function<TrialCase(WordSampler&)> draw;
};

NormalWord as_normal(const Word& w) { return NormalWord::certify(w); }

std::optional<std::string> compare(const NormalWord& lhs, const NormalWord& rhs)
{
    if (lhs == rhs) return std::nullopt;
    return render(lhs) + " vs " + render(rhs);
}

std::optional<std::string> compare(const Word& lhs, const Word& rhs)
{
    if (lhs == rhs) return std::nullopt;
    return render(lhs) + " vs " + render(rhs);
}

std::optional<std::string> require_normal(const NormalWord& w)
{
    if (auto why = normal_form_violation(w.word())) return render(w) + ": " + *why;
    return std::nullopt;
}

// Mostly grammar-grown words, with one in four drawn raw and normalized so
// that normal forms reached by rewriting are exercised too.
NormalWord draw_normal(WordSampler& s) { return s.next(4) == 0 ? s.normalized_raw_word() : s.grammar_word(); }

template <class F>
LawCheck unary(F f)
{
    return [f](const std::vector<Word>& in) { return f(as_normal(in.at(0))); };
}

template <class F>
LawCheck binary(F f)
{
    return [f](const std::vector<Word>& in) { return f(as_normal(in.at(0)), as_normal(in.at(1))); };
}

SuiteDef assoc_suite()
{
    SuiteDef def;
    def.input_names = {"u", "v", "w"};
    def.laws = {"(u*v)*w = u*(v*w)", "1*u = u = u*1", "u*u^-1 = 1 = u^-1*u"};
    def.draw = [](WordSampler& s) {
        TrialCase c;
        for (int i = 0; i < 3; ++i) c.inputs.push_back(draw_normal(s).word());
        c.checks.push_back([](const std::vector<Word>& in) {
            NormalWord u = as_normal(in[0]), v = as_normal(in[1]), w = as_normal(in[2]);
            return compare(diamond(diamond(u, v), w), diamond(u, diamond(v, w)));
        });
        c.checks.push_back(unary([](const NormalWord& u) -> std::optional<std::string> {
            if (auto d = compare(diamond(NormalWord(), u), u)) return "1*u: " + *d;
            if (auto d = compare(diamond(u, NormalWord()), u)) return "u*1: " + *d;
            return std::nullopt;
        }));
        c.checks.push_back(unary([](const NormalWord& u) -> std::optional<std::string> {
            if (auto d = compare(diamond(u, inverse(u)), NormalWord())) return "u*u^-1: " + *d;
            if (auto d = compare(diamond(inverse(u), u), NormalWord())) return "u^-1*u: " + *d;
            return std::nullopt;
        }));
        return c;
    };
    return def;
}

SuiteDef averaging_suite()
{
    SuiteDef def;
    def.input_names = {"u", "v"};
    def.laws = {"A(u)*A(v) = A(A(u)*v)", "A(u)*A(v) = A(u*A(v))"};
    def.draw = [](WordSampler& s) {
        TrialCase c;
        c.inputs = {draw_normal(s).word(), draw_normal(s).word()};
        c.checks.push_back(binary([](const NormalWord& u, const NormalWord& v) {
            return compare(diamond(op_apply(u), op_apply(v)), op_apply(diamond(op_apply(u), v)));
        }));
        c.checks.push_back(binary([](const NormalWord& u, const NormalWord& v) {
            return compare(diamond(op_apply(u), op_apply(v)), op_apply(diamond(u, op_apply(v))));
        }));
        return c;
    };
    return def;
}

SuiteDef derived_suite()
{
    SuiteDef def;
    def.input_names = {"u", "v"};
    for (int n = 2; n <= 4; ++n)
        def.laws.push_back("A(u*A^" + std::to_string(n) + "(v)) = A^" + std::to_string(n) + "(u*A(v))");
    def.draw = [](WordSampler& s) {
        TrialCase c;
        c.inputs = {draw_normal(s).word(), draw_normal(s).word()};
        for (int n = 2; n <= 4; ++n)
            c.checks.push_back(binary([n](const NormalWord& u, const NormalWord& v) {
                return compare(op_apply(diamond(u, op_iter(v, n))), op_iter(diamond(u, op_apply(v)), n));
            }));
        return c;
    };
    return def;
}

SuiteDef closure_suite()
{
    SuiteDef def;
    def.input_names = {"u", "v"};
    def.laws = {"u*v is normal", "A(u) is normal", "u^-1 is normal", "A^3(u) is normal"};
    def.draw = [](WordSampler& s) {
        TrialCase c;
        c.inputs = {draw_normal(s).word(), draw_normal(s).word()};
        c.checks.push_back(binary([](const NormalWord& u, const NormalWord& v) { return require_normal(diamond(u, v)); }));
        c.checks.push_back(unary([](const NormalWord& u) { return require_normal(op_apply(u)); }));
        c.checks.push_back(unary([](const NormalWord& u) { return require_normal(inverse(u)); }));
        c.checks.push_back(unary([](const NormalWord& u) { return require_normal(op_iter(u, 3)); }));
        return c;
    };
    return def;
}

Word oracle(const Word& w, Strategy strategy = Strategy::innermost_leftmost)
{
    NormalizeOptions options;
    options.strategy = strategy;
    return oracle_normalize(w, options);
}

// Inputs (u, v, r): u and v normal, r raw. Shrinking keeps u and v normal
// because every candidate of a normal word is renormalized, and a normalized
// raw word is still a legitimate raw word.
SuiteDef oracle_suite()
{
    SuiteDef def;
    def.input_names = {"u", "v", "r"};
    def.laws = {"u*v = N(u v)", "A(u) = N([u])", "N(u) = u", "N(r) is normal", "N(N(r)) = N(r)",
                "N(r) is strategy-independent"};
    def.draw = [](WordSampler& s) {
        TrialCase c;
        c.inputs = {draw_normal(s).word(), draw_normal(s).word(), s.raw_word()};
        c.checks.push_back(binary([](const NormalWord& u, const NormalWord& v) {
            return compare(diamond(u, v).word(), oracle(reduce_concat(u.word(), v.word())));
        }));
        c.checks.push_back(unary([](const NormalWord& u) {
            return compare(op_apply(u).word(), oracle(bracket_literal(u.word())));
        }));
        c.checks.push_back(unary([](const NormalWord& u) { return compare(oracle(u.word()), u.word()); }));
        c.checks.push_back([](const std::vector<Word>& in) -> std::optional<std::string> {
            Word n = oracle(in.at(2));
            if (auto why = normal_form_violation(n)) return render(n) + ": " + *why;
            return std::nullopt;
        });
        c.checks.push_back([](const std::vector<Word>& in) {
            Word n = oracle(in.at(2));
            return compare(oracle(n), n);
        });
        c.checks.push_back([](const std::vector<Word>& in) {
            return compare(oracle(in.at(2), Strategy::innermost_leftmost),
                           oracle(in.at(2), Strategy::outermost_rightmost));
        });
        return c;
    };
    return def;
}

struct HomTarget {
    std::string label;
    FiniteAveragingGroup group;
};

const std::vector<HomTarget>& hom_targets()
{
    static const std::vector<HomTarget> targets = [] {
        std::vector<HomTarget> out;
        for (std::size_t n : {2, 3, 4}) {
            FiniteGroup g = cyclic_group(n);
            for (const OperatorTable& op : search_averaging_ops(g))
                out.push_back({"Z" + std::to_string(n) + " A = " + describe_operator(g, op), FiniteAveragingGroup(g, op)});
        }
        FiniteGroup s3 = symmetric_group_3();
        out.push_back({"S3 sign retraction", FiniteAveragingGroup(s3, sign_retraction(s3))});
        return out;
    }();
    return targets;
}

std::string assignment_label(const FiniteGroup& g, const std::map<std::string, std::size_t>& a)
{
    std::string out;
    for (const auto& [x, v] : a) out += (out.empty() ? "" : ",") + x + "=" + g.name(v);
    return out;
}

// Inputs (u, v); each trial draws one generator assignment per target.
SuiteDef hom_suite(const std::vector<std::string>& alphabet)
{
    SuiteDef def;
    def.input_names = {"u", "v"};
    def.laws = {"f(u*v) = f(u)f(v)", "f(A(u)) = A(f(u))", "f(u^-1) = f(u)^-1", "self-evaluation is the identity"};
    def.draw = [alphabet](WordSampler& s) {
        TrialCase c;
        c.inputs = {draw_normal(s).word(), draw_normal(s).word()};
        using Assignment = std::map<std::string, std::size_t>;
        auto assignments = std::make_shared<std::vector<Assignment>>();
        for (const HomTarget& t : hom_targets()) {
            Assignment a;
            for (const auto& x : alphabet) a[x] = s.next(t.group.group().size());
            assignments->push_back(std::move(a));
        }
        // Runs `law` against every target; the first failure names the target.
        auto over_targets = [assignments](auto law) {
            return [assignments, law](const std::vector<Word>& in) -> std::optional<std::string> {
                NormalWord u = as_normal(in.at(0)), v = as_normal(in.at(1));
                const auto& targets = hom_targets();
                for (std::size_t i = 0; i < targets.size(); ++i) {
                    const FiniteAveragingGroup& h = targets[i].group;
                    auto f = extend_hom((*assignments)[i], h);
                    if (auto d = law(h, f, u, v))
                        return targets[i].label + " with " + assignment_label(h.group(), (*assignments)[i]) + ": " + *d;
                }
                return std::nullopt;
            };
        };
        auto differ = [](const FiniteAveragingGroup& h, std::size_t lhs, std::size_t rhs) -> std::optional<std::string> {
            if (lhs == rhs) return std::nullopt;
            return h.group().name(lhs) + " vs " + h.group().name(rhs);
        };
        c.checks.push_back(over_targets([differ](const FiniteAveragingGroup& h, const auto& f, const NormalWord& u,
                                                 const NormalWord& v) {
            return differ(h, f(diamond(u, v)), h.multiply(f(u), f(v)));
        }));
        c.checks.push_back(over_targets([differ](const FiniteAveragingGroup& h, const auto& f, const NormalWord& u,
                                                 const NormalWord&) { return differ(h, f(op_apply(u)), h.apply(f(u))); }));
        c.checks.push_back(over_targets([differ](const FiniteAveragingGroup& h, const auto& f, const NormalWord& u,
                                                 const NormalWord&) { return differ(h, f(inverse(u)), h.inverse(f(u))); }));
        std::vector<std::string> letters = alphabet;
        c.checks.push_back([letters](const std::vector<Word>& in) {
            NormalWord u = as_normal(in.at(0));
            auto self = extend_hom(canonical_embedding(letters), FreeAveragingGroup{});
            return compare(self(u), u);
        });
        return c;
    };
    return def;
}

SuiteDef make_suite(const std::string& name, const SuiteConfig& cfg)
{
    if (name == "assoc") return assoc_suite();
    if (name == "averaging") return averaging_suite();
    if (name == "closure") return closure_suite();
    if (name == "oracle") return oracle_suite();
    if (name == "hom") return hom_suite(cfg.alphabet);
    if (name == "derived") return derived_suite();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name)
{
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    return seed ^ h;
}

void push_unique(std::vector<Word>& out, std::set<std::string>& seen, Word w)
{
    if (seen.insert(render(w)).second) out.push_back(std::move(w));
}

// Raw candidates: factor deletion, bracket unwrapping, iteration lowering and
// the same moves inside bracket contents.
std::vector<Word> raw_candidates(const Word& w)
{
    std::vector<Word> out;
    const auto& fs = w.factors();
    if (!fs.empty()) out.push_back(Word::identity());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto with = [&](const std::vector<Factor>& replacement) {
            std::vector<Factor> next(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
            next.insert(next.end(), replacement.begin(), replacement.end());
            next.insert(next.end(), fs.begin() + static_cast<std::ptrdiff_t>(i + 1), fs.end());
            out.push_back(free_reduce(Word(std::move(next))));
        };
        with({});
        const Factor& f = fs[i];
        if (!f.is_bracket()) continue;
        Word unwrapped = f.sign() > 0 ? f.content() : invert(f.content());
        with(unwrapped.factors());
        if (f.iter() >= 2) with({f.with_iter(f.iter() - 1)});
        for (const Word& inner : raw_candidates(f.content())) with({Factor::bracket(inner, f.iter(), f.sign())});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"assoc", "averaging", "closure", "oracle", "hom", "derived"};
    return names;
}

std::size_t word_weight(const Word& w)
{
    std::size_t total = 0;
    for (const Factor& f : w.factors())
        total += f.is_generator() ? 1 : static_cast<std::size_t>(f.iter()) + word_weight(f.content());
    return total;
}

std::vector<Word> shrink_candidates(const Word& w, bool normal)
{
    const std::size_t weight = word_weight(w);
    std::vector<Word> out;
    std::set<std::string> seen;
    for (Word c : raw_candidates(w)) {
        if (normal) c = oracle_normalize(c);
        if (word_weight(c) < weight) push_unique(out, seen, std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return word_weight(a) < word_weight(b); });
    return out;
}

std::vector<Word> shrink(std::vector<Word> inputs, const LawCheck& law, bool normal)
{
    std::size_t budget = kShrinkBudget;
    bool progress = true;
    while (progress && budget > 0) {
        progress = false;
        for (std::size_t i = 0; i < inputs.size() && !progress; ++i) {
            for (Word& candidate : shrink_candidates(inputs[i], normal)) {
                if (budget-- == 0) break;
                std::vector<Word> trial = inputs;
                trial[i] = std::move(candidate);
                if (law(trial)) {
                    inputs = std::move(trial);
                    progress = true;
                    break;
                }
            }
        }
    }
    return inputs;
}

bool SuiteOutcome::ok() const
{
    return std::all_of(laws.begin(), laws.end(), [](const LawOutcome& l) { return l.failures == 0; });
}

bool SuiteReport::ok() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteOutcome& s) { return s.ok(); });
}

namespace {

std::string render_inputs(const std::vector<std::string>& names, const std::vector<Word>& words)
{
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ", ";
        out += names[i] + " = " + render(words[i]);
    }
    return out;
}

}  // namespace

std::vector<std::string> SuiteReport::lines() const
{
    std::vector<std::string> out;
    std::size_t passed = 0;
    for (const SuiteOutcome& s : suites) {
        out.push_back("suite " + s.suite + ": " + std::to_string(s.trials) + " trials");
        for (const LawOutcome& l : s.laws) {
            std::ostringstream line;
            if (l.failures == 0) {
                line << "  ok   " << l.law << "  [" << l.checked << "/" << l.checked << "]";
                out.push_back(line.str());
                continue;
            }
            line << "  FAIL " << l.law << "  [" << (l.checked - l.failures) << "/" << l.checked
                 << " passed; first failure at trial " << *l.first_trial << "]";
            out.push_back(line.str());
            out.push_back("       original: " + render_inputs(l.input_names, l.original));
            out.push_back("       minimal:  " + render_inputs(l.input_names, l.minimal));
            out.push_back("       sides:    " + l.detail);
        }
        if (s.ok()) ++passed;
    }
    out.push_back("summary: " + std::to_string(passed) + "/" + std::to_string(suites.size()) + " suites passed");
    return out;
}

SuiteOutcome run_suite(const std::string& name, const SuiteConfig& cfg)
{
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    SuiteDef def = make_suite(name, cfg);
    GenParams params;
    params.max_depth = cfg.max_depth;
    params.max_breadth = cfg.max_breadth;
    params.alphabet = cfg.alphabet;
    params.seed = suite_seed(cfg.seed, name);
    WordSampler sampler(params);

    SuiteOutcome outcome;
    outcome.suite = name;
    outcome.trials = cfg.trials;
    for (const auto& law : def.laws) {
        LawOutcome l;
        l.law = law;
        l.input_names = def.input_names;
        outcome.laws.push_back(std::move(l));
    }
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        TrialCase c = def.draw(sampler);
        for (std::size_t k = 0; k < def.laws.size(); ++k) {
            LawOutcome& l = outcome.laws[k];
            ++l.checked;
            if (!c.checks[k](c.inputs)) continue;
            if (l.failures++ > 0) continue;
            l.first_trial = trial;
            l.original = c.inputs;
            l.minimal = shrink(c.inputs, c.checks[k], def.normal_inputs);
            l.detail = c.checks[k](l.minimal).value_or("?");
        }
    }
    return outcome;
}

SuiteReport run_suites(const SuiteConfig& cfg)
{
    if (cfg.alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
    if (cfg.max_depth < 0 || cfg.max_breadth < 1) throw std::invalid_argument("bad word shape bounds");
    SuiteReport report;
    if (cfg.suite == "all") {
        for (const auto& name : suite_names()) report.suites.push_back(run_suite(name, cfg));
    } else {
        report.suites.push_back(run_suite(cfg.suite, cfg));
    }
    return report;
}

}  // namespace freeavg
