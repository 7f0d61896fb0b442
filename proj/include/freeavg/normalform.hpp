#pragma once

// Averaging normal forms and the rewriting normalizer used as an independent
// oracle for the constructive product and operator.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freeavg/words.hpp"

namespace freeavg {

/// True iff w is an averaging word: freely reduced, no two adjacent brackets of
/// the same sign, and every bracket content of breadth ≥ 2 neither starts with
/// a positive bracket nor ends with a positive bracket of iteration ≥ 2. The
/// conditions apply recursively inside every bracket.
bool is_normal(const Word& w);

/// The first place where w fails is_normal, for diagnostics.
std::optional<std::string> normal_form_violation(const Word& w);

enum class Rule {
    cancel,          // R0: x x^-1 -> 1
    merge_positive,  // R1: ⌊a⌋^(s)⌊b⌋^(t) -> ⌊a⌊b⌋⌋^(s+t-1)
    merge_negative,  // R1⁻: inverse orientation of R1 on the reversed pair
    pull_front,      // R2: ⌊⌊a⌋^(t) r⌋^(n) -> ⌊a⌊r⌋⌋^(n+t-1)
    lower_back,      // R3: ⌊p⌊b⌋^(m)⌋^(n) -> ⌊p⌊b⌋⌋^(n+m-1), m ≥ 2
};

std::string rule_name(Rule rule);

enum class Strategy { innermost_leftmost, outermost_rightmost };

/// One rewrite. `path` addresses the first factor of the redex: each entry is
/// a factor index, every entry but the last descends into a bracket content.
/// Seam rules (R0, R1, R1⁻) rewrite the two factors at path and path+1; the
/// bracket rules (R2, R3) rewrite the single factor at path.
struct RewriteStep {
    Rule rule;
    std::vector<std::size_t> path;
    Word before;
    Word after;
};

using RewriteTrace = std::vector<RewriteStep>;

/// "RULE path: before => after", path rendered as dot-separated indices.
std::string format_step(const RewriteStep& step);

class StepLimitExceeded : public std::runtime_error {
public:
    explicit StepLimitExceeded(std::size_t limit)
        : std::runtime_error("rewrite step limit of " + std::to_string(limit) +
                             " exceeded (suspected non-termination)") {}
};

struct NormalizeOptions {
    Strategy strategy = Strategy::innermost_leftmost;
    std::size_t step_limit = 1'000'000;
    RewriteTrace* trace = nullptr;
};

/// Applies R0–R3 at every nesting level until no rule applies.
Word oracle_normalize(const Word& w, const NormalizeOptions& options = {});

/// Finds the next redex under the given strategy and rewrites it.
std::optional<RewriteStep> rewrite_once(const Word& w, Strategy strategy, Word& out);

/// Replays a recorded step on w. Throws std::invalid_argument if the subword
/// at the step's path differs from step.before.
Word apply_step(const Word& w, const RewriteStep& step);

}  // namespace freeavg
