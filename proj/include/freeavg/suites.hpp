#pragma once

// Randomized law suites behind `freeavg check`. Every failure is shrunk to a
// small counterexample that still fails the same law.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "freeavg/avgroup.hpp"

namespace freeavg {

struct SuiteConfig {
    std::string suite = "all";  // assoc | averaging | closure | oracle | hom | derived | all
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    int max_depth = 3;
    int max_breadth = 4;
    std::vector<std::string> alphabet{"x", "y", "z"};
};

/// Names accepted for SuiteConfig::suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// A law over a tuple of words: nullopt if it holds, otherwise a short
/// description of the two sides. Most laws take normal words; the oracle laws
/// also take raw words.
using LawCheck = std::function<std::optional<std::string>(const std::vector<Word>&)>;

/// Size used to rank counterexamples: letters plus bracket iterations,
/// summed over all levels.
std::size_t word_weight(const Word& w);

/// Strictly lighter words obtained from w by deleting one factor or
/// truncating one bracket, at any depth. With `normal` set every candidate is
/// oracle-normalized, so normal inputs shrink to normal words.
std::vector<Word> shrink_candidates(const Word& w, bool normal);

/// Greedy shrink: repeatedly replaces one input by a lighter candidate while
/// the law still fails, until no candidate is accepted.
std::vector<Word> shrink(std::vector<Word> inputs, const LawCheck& law, bool normal);

struct LawOutcome {
    std::string law;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<std::size_t> first_trial;
    std::vector<std::string> input_names;
    std::vector<Word> original;
    std::vector<Word> minimal;
    std::string detail;  // the failing sides for the minimal inputs
};

struct SuiteOutcome {
    std::string suite;
    std::size_t trials = 0;
    std::vector<LawOutcome> laws;

    bool ok() const;
};

struct SuiteReport {
    std::vector<SuiteOutcome> suites;

    bool ok() const;
    /// Deterministic report body, one line per item.
    std::vector<std::string> lines() const;
};

/// Throws std::invalid_argument for an unknown suite or bad parameters.
SuiteReport run_suites(const SuiteConfig& cfg);
SuiteOutcome run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace freeavg
