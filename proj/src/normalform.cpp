#include "freeavg/normalform.hpp"

#include <sstream>

namespace freeavg {

namespace {

std::optional<std::string> level_violation(const Word& w, const std::string& where)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Factor& f = w[i];
        if (i + 1 < w.size()) {
            const Factor& g = w[i + 1];
            if (f.is_inverse_of(g))
                return where + "cancelling pair at factor " + std::to_string(i);
            if (f.is_positive_bracket() && g.is_positive_bracket())
                return where + "adjacent positive brackets at factor " + std::to_string(i);
            if (f.is_negative_bracket() && g.is_negative_bracket())
                return where + "adjacent negative brackets at factor " + std::to_string(i);
        }
        if (!f.is_bracket()) continue;
        const Word& c = f.content();
        std::string inner = where + "factor " + std::to_string(i) + " content: ";
        if (c.size() == 1 && c.front().is_positive_bracket())
            return inner + "unfolded lone positive bracket";
        if (c.size() >= 2) {
            if (c.front().is_positive_bracket()) return inner + "starts with a positive bracket";
            if (c.back().is_positive_bracket() && c.back().iter() >= 2)
                return inner + "ends with a positive bracket of iteration >= 2";
        }
        if (auto v = level_violation(c, inner)) return v;
    }
    return std::nullopt;
}

struct Redex {
    Rule rule;
    std::vector<std::size_t> word_path;
    std::size_t index;
};

std::optional<Rule> seam_rule(const Factor& a, const Factor& b)
{
    if (a.is_inverse_of(b)) return Rule::cancel;
    if (a.is_positive_bracket() && b.is_positive_bracket()) return Rule::merge_positive;
    if (a.is_negative_bracket() && b.is_negative_bracket()) return Rule::merge_negative;
    return std::nullopt;
}

std::optional<Rule> bracket_rule(const Factor& f)
{
    if (!f.is_bracket()) return std::nullopt;
    const Word& c = f.content();
    if (c.size() < 2) return std::nullopt;
    if (c.front().is_positive_bracket()) return Rule::pull_front;
    if (c.back().is_positive_bracket() && c.back().iter() >= 2) return Rule::lower_back;
    return std::nullopt;
}

std::optional<Redex> find_innermost_leftmost(const Word& w, std::vector<std::size_t>& path)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_bracket()) continue;
        path.push_back(i);
        auto r = find_innermost_leftmost(w[i].content(), path);
        path.pop_back();
        if (r) return r;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (auto rule = bracket_rule(w[i])) return Redex{*rule, path, i};
        if (i + 1 < w.size())
            if (auto rule = seam_rule(w[i], w[i + 1])) return Redex{*rule, path, i};
    }
    return std::nullopt;
}

std::optional<Redex> find_outermost_rightmost(const Word& w, std::vector<std::size_t>& path)
{
    for (std::size_t k = w.size(); k-- > 0;) {
        if (k + 1 < w.size())
            if (auto rule = seam_rule(w[k], w[k + 1])) return Redex{*rule, path, k};
        if (auto rule = bracket_rule(w[k])) return Redex{*rule, path, k};
    }
    for (std::size_t k = w.size(); k-- > 0;) {
        if (!w[k].is_bracket()) continue;
        path.push_back(k);
        auto r = find_outermost_rightmost(w[k].content(), path);
        path.pop_back();
        if (r) return r;
    }
    return std::nullopt;
}

Word append_bracket(const Word& prefix, const Word& bracketed)
{
    std::vector<Factor> out = prefix.factors();
    out.push_back(Factor::bracket(bracketed));
    return Word(std::move(out));
}

std::vector<Factor> rewrite_segment(Rule rule, const Word& w, std::size_t i)
{
    switch (rule) {
    case Rule::cancel:
        return {};
    case Rule::merge_positive: {
        const Factor& a = w[i];
        const Factor& b = w[i + 1];
        return {Factor::bracket(append_bracket(a.content(), b.content()), a.iter() + b.iter() - 1, 1)};
    }
    case Rule::merge_negative: {
        const Factor& a = w[i];
        const Factor& b = w[i + 1];
        return {Factor::bracket(append_bracket(b.content(), a.content()), a.iter() + b.iter() - 1, -1)};
    }
    case Rule::pull_front: {
        const Factor& f = w[i];
        const Word& c = f.content();
        const Factor& head = c.front();
        Word rest = c.slice(1, c.size());
        return {Factor::bracket(append_bracket(head.content(), rest), f.iter() + head.iter() - 1, f.sign())};
    }
    case Rule::lower_back: {
        const Factor& f = w[i];
        const Word& c = f.content();
        const Factor& tail = c.back();
        Word prefix = c.slice(0, c.size() - 1);
        return {Factor::bracket(append_bracket(prefix, tail.content()), f.iter() + tail.iter() - 1, f.sign())};
    }
    }
    return {};
}

std::size_t redex_width(Rule rule)
{
    return (rule == Rule::pull_front || rule == Rule::lower_back) ? 1 : 2;
}

// Rebuilds w with factors [index, index + width) of the word at word_path
// replaced; enclosing brackets are re-folded on the way up.
Word replace_at(const Word& w, const std::vector<std::size_t>& word_path, std::size_t depth,
                std::size_t index, std::size_t width, const std::vector<Factor>& replacement)
{
    std::vector<Factor> factors = w.factors();
    if (depth == word_path.size()) {
        if (index + width > factors.size()) throw std::invalid_argument("rewrite position out of range");
        auto first = factors.begin() + static_cast<std::ptrdiff_t>(index);
        factors.erase(first, first + static_cast<std::ptrdiff_t>(width));
        factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(index), replacement.begin(),
                       replacement.end());
        return Word(std::move(factors));
    }
    std::size_t j = word_path[depth];
    if (j >= factors.size() || !factors[j].is_bracket())
        throw std::invalid_argument("rewrite path does not address a bracket");
    const Factor& f = factors[j];
    Word inner = replace_at(f.content(), word_path, depth + 1, index, width, replacement);
    factors[j] = Factor::bracket(std::move(inner), f.iter(), f.sign());
    return Word(std::move(factors));
}

const Word& word_at(const Word& w, const std::vector<std::size_t>& word_path)
{
    const Word* cur = &w;
    for (std::size_t j : word_path) {
        if (j >= cur->size() || !(*cur)[j].is_bracket())
            throw std::invalid_argument("rewrite path does not address a bracket");
        cur = &(*cur)[j].content();
    }
    return *cur;
}

}  // namespace

bool is_normal(const Word& w) { return !level_violation(w, "").has_value(); }

std::optional<std::string> normal_form_violation(const Word& w) { return level_violation(w, ""); }

std::string rule_name(Rule rule)
{
    switch (rule) {
    case Rule::cancel: return "R0";
    case Rule::merge_positive: return "R1";
    case Rule::merge_negative: return "R1-";
    case Rule::pull_front: return "R2";
    case Rule::lower_back: return "R3";
    }
    return "?";
}

std::string format_step(const RewriteStep& step)
{
    std::ostringstream out;
    out << rule_name(step.rule) << ' ';
    for (std::size_t i = 0; i < step.path.size(); ++i) {
        if (i > 0) out << '.';
        out << step.path[i];
    }
    out << ": " << render(step.before) << " => " << render(step.after);
    return out.str();
}

std::optional<RewriteStep> rewrite_once(const Word& w, Strategy strategy, Word& out)
{
    std::vector<std::size_t> path;
    auto redex = strategy == Strategy::innermost_leftmost ? find_innermost_leftmost(w, path)
                                                          : find_outermost_rightmost(w, path);
    if (!redex) return std::nullopt;

    const Word& level = word_at(w, redex->word_path);
    std::size_t width = redex_width(redex->rule);
    std::vector<Factor> replacement = rewrite_segment(redex->rule, level, redex->index);

    RewriteStep step;
    step.rule = redex->rule;
    step.path = redex->word_path;
    step.path.push_back(redex->index);
    step.before = level.slice(redex->index, redex->index + width);
    step.after = Word(replacement);
    out = replace_at(w, redex->word_path, 0, redex->index, width, replacement);
    return step;
}

Word apply_step(const Word& w, const RewriteStep& step)
{
    if (step.path.empty()) throw std::invalid_argument("rewrite step has an empty path");
    std::vector<std::size_t> word_path(step.path.begin(), step.path.end() - 1);
    std::size_t index = step.path.back();
    std::size_t width = redex_width(step.rule);
    const Word& level = word_at(w, word_path);
    if (index + width > level.size() || level.slice(index, index + width) != step.before)
        throw std::invalid_argument("rewrite step does not match the word: " + format_step(step));
    return replace_at(w, word_path, 0, index, width, step.after.factors());
}

Word oracle_normalize(const Word& w, const NormalizeOptions& options)
{
    Word current = w;
    std::size_t steps = 0;
    Word next;
    while (auto step = rewrite_once(current, options.strategy, next)) {
        if (++steps > options.step_limit) throw StepLimitExceeded(options.step_limit);
        if (options.trace) options.trace->push_back(std::move(*step));
        current = std::move(next);
    }
    return current;
}

}  // namespace freeavg
