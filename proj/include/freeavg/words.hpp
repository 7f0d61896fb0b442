#pragma once

// Bracketed words: elements of the free operated group on a set of
// generators. A word is a freely reduced sequence of letters; a letter is
// either a signed generator or a signed iterated bracket around another word.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freeavg {

class Word;

/// One letter of a bracketed word.
///
/// A bracket letter Br{c, n, s} denotes (⌊c⌋^(n))^s, the n-fold bracketing of
/// the word c raised to the sign s. Bracket letters are kept folded: the
/// content is never a lone positive bracket, so ⌊⌊c⌋⌋ is stored as Br{c, 2, +}
/// and the iteration count is always maximal.
class Factor {
public:
    static Factor generator(std::string name, int sign = 1);
    /// Builds Br{content, iter, sign}, folding a lone positive bracket content
    /// into the iteration count.
    static Factor bracket(Word content, int iter = 1, int sign = 1);

    bool is_generator() const { return content_ == nullptr; }
    bool is_bracket() const { return content_ != nullptr; }
    bool is_positive_bracket() const { return is_bracket() && sign_ > 0; }
    bool is_negative_bracket() const { return is_bracket() && sign_ < 0; }

    const std::string& name() const { return name_; }
    const Word& content() const;
    int iter() const { return iter_; }
    int sign() const { return sign_; }

    Factor inverse() const;
    Factor with_sign(int sign) const;
    Factor with_iter(int iter) const;

    /// Same free-group letter with opposite sign.
    bool is_inverse_of(const Factor& other) const;

    friend bool operator==(const Factor& a, const Factor& b);
    friend bool operator!=(const Factor& a, const Factor& b) { return !(a == b); }

private:
    Factor() = default;

    std::string name_;
    std::shared_ptr<const Word> content_;
    int iter_ = 0;
    int sign_ = 1;
};

/// A sequence of letters. Values produced by the public operations are freely
/// reduced at every nesting level; the rewriting oracle also uses this type for
/// intermediate terms that may transiently contain cancelling pairs.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    static Word identity() { return Word(); }
    static Word generator(std::string name, int sign = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    const Factor& operator[](std::size_t i) const { return factors_[i]; }
    const Factor& front() const { return factors_.front(); }
    const Factor& back() const { return factors_.back(); }

    /// Factors [first, last) as a word, without reduction.
    Word slice(std::size_t first, std::size_t last) const;

    friend bool operator==(const Word& a, const Word& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    std::vector<Factor> factors_;
};

struct WordMetrics {
    std::size_t breadth = 0;
    std::size_t depth = 0;
    std::size_t op_degree = 0;

    friend bool operator==(const WordMetrics&, const WordMetrics&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnassignedGenerator : public std::runtime_error {
public:
    explicit UnassignedGenerator(const std::string& name)
        : std::runtime_error("generator '" + name + "' has no assigned value"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Parses the word grammar
///
///     word   := factor* ;
///     factor := base iter? power? ;
///     base   := IDENT | "[" word "]" | "1" ;
///     iter   := "@" POSINT ;     (only after a bracket)
///     power  := "^" NZINT ;
///
/// `^k` is the group power, `@n` is n-fold bracketing. The result is freely
/// reduced and canonically folded.
Word parse(std::string_view text);

/// Canonical text; parse(render(w)) == w. The identity renders as "1".
std::string render(const Word& w);
std::string render(const Factor& f);

/// Free-group product: concatenation with cascading cancellation at the seam.
Word reduce_concat(const Word& u, const Word& v);
/// Cancels adjacent inverse letters at the top level until none remain.
Word free_reduce(const Word& w);
Word invert(const Word& w);
/// The one-letter word ⌊w⌋ (folded).
Word bracket_literal(const Word& w);

bool is_freely_reduced(const Word& w);
/// True if no bracket anywhere in w has a lone positive bracket as content.
bool is_canonically_folded(const Word& w);

WordMetrics metrics(const Word& w);

/// Generator names used anywhere in w, sorted.
std::vector<std::string> generators_of(const Word& w);

/// Operated-group homomorphism image of w: generators map through the
/// assignment, Br{c, n, s} maps to (Pⁿ(eval c))^s, sequences multiply in order.
///
/// Target must provide element_type, identity(), multiply(a, b), inverse(a)
/// and apply(a) (the operator P).
template <class Target>
typename Target::element_type eval_operated(
    const Word& w, const Target& target,
    const std::map<std::string, typename Target::element_type>& assignment)
{
    using E = typename Target::element_type;
    E acc = target.identity();
    for (const Factor& f : w.factors()) {
        E value;
        if (f.is_generator()) {
            auto it = assignment.find(f.name());
            if (it == assignment.end()) throw UnassignedGenerator(f.name());
            value = it->second;
        } else {
            value = eval_operated(f.content(), target, assignment);
            for (int i = 0; i < f.iter(); ++i) value = target.apply(value);
        }
        if (f.sign() < 0) value = target.inverse(value);
        acc = target.multiply(acc, value);
    }
    return acc;
}

}  // namespace freeavg
