#pragma once

// The free averaging group on a set: normal words under the product ⋄ and the
// averaging operator A_X, plus the homomorphisms out of it.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "freeavg/normalform.hpp"
#include "freeavg/words.hpp"

namespace freeavg {

class NotNormal : public std::invalid_argument {
public:
    explicit NotNormal(const std::string& what) : std::invalid_argument(what) {}
};

/// An element of the free averaging group: a word certified by is_normal.
/// Structural equality of words is equality of elements.
class NormalWord {
public:
    NormalWord() = default;

    /// Throws NotNormal if w is not an averaging word.
    static NormalWord certify(Word w);
    /// Parses and certifies; ParseError or NotNormal on failure.
    static NormalWord parse(std::string_view text);
    /// Any word, brought to normal form by the rewriting oracle.
    static NormalWord normalize(const Word& w);
    static NormalWord generator(std::string name, int sign = 1);

    const Word& word() const { return word_; }
    std::size_t breadth() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }

    friend bool operator==(const NormalWord& a, const NormalWord& b) { return a.word_ == b.word_; }
    friend bool operator!=(const NormalWord& a, const NormalWord& b) { return !(a == b); }

private:
    friend struct NormalWordAccess;
    explicit NormalWord(Word w) : word_(std::move(w)) {}

    Word word_;
};

std::string render(const NormalWord& w);

/// The product ⋄.
NormalWord diamond(const NormalWord& u, const NormalWord& v);
/// The averaging operator A_X.
NormalWord op_apply(const NormalWord& w);
/// n-fold A_X; n = 0 is the identity map.
NormalWord op_iter(const NormalWord& w, int n);
NormalWord inverse(const NormalWord& w);

/// The free averaging group as an operated-group target, so that it can serve
/// as the codomain of its own universal homomorphism.
struct FreeAveragingGroup {
    using element_type = NormalWord;
    NormalWord identity() const { return {}; }
    NormalWord multiply(const NormalWord& a, const NormalWord& b) const { return diamond(a, b); }
    NormalWord inverse(const NormalWord& a) const { return freeavg::inverse(a); }
    NormalWord apply(const NormalWord& a) const { return op_apply(a); }
};

/// The averaging-group homomorphism out of the free averaging group that
/// extends a generator assignment. The target must already satisfy the
/// averaging law (finite targets come validated from the structures module).
template <class Target>
class Evaluator {
public:
    using element_type = typename Target::element_type;

    Evaluator(Target target, std::map<std::string, element_type> assignment)
        : target_(std::move(target)), assignment_(std::move(assignment)) {}

    element_type operator()(const NormalWord& w) const { return eval_operated(w.word(), target_, assignment_); }

    const Target& target() const { return target_; }

private:
    Target target_;
    std::map<std::string, element_type> assignment_;
};

template <class Target>
Evaluator<Target> extend_hom(std::map<std::string, typename Target::element_type> assignment, Target target)
{
    return Evaluator<Target>(std::move(target), std::move(assignment));
}

/// The embedding of generators, x ↦ x, as an assignment into the free group.
std::map<std::string, NormalWord> canonical_embedding(const std::vector<std::string>& alphabet);

struct GenParams {
    int max_depth = 3;
    int max_breadth = 4;
    std::vector<std::string> alphabet{"x", "y", "z"};
    std::uint64_t seed = 0;
};

/// Deterministic source of random words.
class WordSampler {
public:
    explicit WordSampler(GenParams params);

    /// Grows a normal word directly under the normal-form constraints.
    NormalWord grammar_word();
    /// A random raw word of the same shape bounds, then oracle-normalized.
    NormalWord normalized_raw_word();
    /// A random freely reduced raw word (not necessarily normal).
    Word raw_word();

    std::uint64_t next(std::uint64_t bound);
    const GenParams& params() const { return params_; }

private:
    std::size_t draw_length();
    Factor random_generator();
    Word grow_normal(int depth_budget, bool as_content);
    Word grow_raw(int depth_budget);

    GenParams params_;
    std::mt19937_64 rng_;
};

/// One grammar-grown normal word; identical for identical params.
NormalWord random_normal_word(const GenParams& params);

}  // namespace freeavg
