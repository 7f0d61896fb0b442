#include "freeavg/avgroup.hpp"

#include <cassert>

// Mutant builds used to prove that the test suites notice wrong recursions.
// FREEAVG_MUTATE_EXPONENT merges ⌊a⌋^(s)⌊b⌋^(t) with exponent s+t instead of
// s+t-1; FREEAVG_MUTATE_LITERAL_ITERATION realizes the outer iteration in A_X
// by literal bracketing instead of repeated application of A_X.
#ifndef FREEAVG_MUTATE_EXPONENT
#define FREEAVG_MUTATE_EXPONENT 0
#endif
#ifndef FREEAVG_MUTATE_LITERAL_ITERATION
#define FREEAVG_MUTATE_LITERAL_ITERATION 0
#endif

namespace freeavg {

struct NormalWordAccess {
    static NormalWord make(Word w) { return NormalWord(std::move(w)); }
};

namespace {

Word diamond_words(const Word& u, const Word& v);
Word op_apply_word(const Word& w);

Word op_iter_word(Word w, int n)
{
    for (int i = 0; i < n; ++i) w = op_apply_word(w);
    return w;
}

Word single_bracket(const Word& content) { return Word({Factor::bracket(content)}); }

// ⌊a⌋^(s) ⋄ ⌊b⌋^(t) = A^(s+t-1)(a ⋄ ⌊b⌋), a single positive bracket.
Factor merge_positive(const Factor& a, const Factor& b)
{
    Word inner = diamond_words(a.content(), single_bracket(b.content()));
    int n = a.iter() + b.iter() - (FREEAVG_MUTATE_EXPONENT ? 0 : 1);
    Word merged = op_iter_word(std::move(inner), n);
    assert(merged.size() == 1 && merged.front().is_positive_bracket());
    return merged.front();
}

// (⌊a⌋^(s))^-1 ⋄ (⌊b⌋^(t))^-1 = (⌊b⌋^(t) ⋄ ⌊a⌋^(s))^-1.
Factor merge_negative(const Factor& a, const Factor& b)
{
    return merge_positive(b.inverse(), a.inverse()).inverse();
}

// Pushes one letter onto a normal word held as a stack, resolving the seam.
// A merge produces a new letter that is fed back against the new top, so
// cancellations and merges cascade until the seam is stable.
void push_letter(std::vector<Factor>& stack, Factor incoming)
{
    while (!stack.empty()) {
        const Factor& top = stack.back();
        if (top.is_inverse_of(incoming)) {
            stack.pop_back();
            return;
        }
        if (top.is_positive_bracket() && incoming.is_positive_bracket()) {
            incoming = merge_positive(top, incoming);
        } else if (top.is_negative_bracket() && incoming.is_negative_bracket()) {
            incoming = merge_negative(top, incoming);
        } else {
            break;
        }
        stack.pop_back();
    }
    stack.push_back(std::move(incoming));
}

Word diamond_words(const Word& u, const Word& v)
{
    if (u.empty()) return v;
    if (v.empty()) return u;
    std::vector<Factor> stack = u.factors();
    for (const Factor& f : v.factors()) push_letter(stack, f);
    return Word(std::move(stack));
}

Word op_apply_word(const Word& w)
{
    const std::size_t k = w.size();
    if (k <= 1) return bracket_literal(w);

    if (w.front().is_positive_bracket()) {
        // A(A^t(a) r) = A^t(a ⋄ A(r))
        const Factor& head = w.front();
        Word rest = op_apply_word(w.slice(1, k));
        Word inner = diamond_words(head.content(), rest);
        if (FREEAVG_MUTATE_LITERAL_ITERATION) return Word({Factor::bracket(inner, head.iter())});
        return op_iter_word(std::move(inner), head.iter());
    }

    const Factor& tail = w.back();
    if (tail.is_positive_bracket() && tail.iter() >= 2) {
        // A(p A^s(b)) = A^s(p ⋄ A(b))
        Word prefix = w.slice(0, k - 1);
        if (FREEAVG_MUTATE_LITERAL_ITERATION) {
            Word inner = reduce_concat(prefix, op_apply_word(tail.content()));
            return Word({Factor::bracket(inner, tail.iter())});
        }
        Word inner = diamond_words(prefix, single_bracket(tail.content()));
        return op_iter_word(std::move(inner), tail.iter());
    }

    return bracket_literal(w);
}

}  // namespace

NormalWord NormalWord::certify(Word w)
{
    if (auto violation = normal_form_violation(w))
        throw NotNormal("not an averaging normal word (" + *violation + "): " + freeavg::render(w));
    return NormalWord(std::move(w));
}

NormalWord NormalWord::parse(std::string_view text) { return certify(freeavg::parse(text)); }

NormalWord NormalWord::normalize(const Word& w) { return NormalWord(oracle_normalize(w)); }

NormalWord NormalWord::generator(std::string name, int sign)
{
    return NormalWord(Word::generator(std::move(name), sign));
}

std::string render(const NormalWord& w) { return render(w.word()); }

NormalWord diamond(const NormalWord& u, const NormalWord& v)
{
    return NormalWordAccess::make(diamond_words(u.word(), v.word()));
}

NormalWord op_apply(const NormalWord& w) { return NormalWordAccess::make(op_apply_word(w.word())); }

NormalWord op_iter(const NormalWord& w, int n)
{
    if (n < 0) throw std::invalid_argument("operator iteration count must be non-negative");
    return NormalWordAccess::make(op_iter_word(w.word(), n));
}

NormalWord inverse(const NormalWord& w) { return NormalWordAccess::make(invert(w.word())); }

std::map<std::string, NormalWord> canonical_embedding(const std::vector<std::string>& alphabet)
{
    std::map<std::string, NormalWord> out;
    for (const auto& name : alphabet) out.emplace(name, NormalWord::generator(name));
    return out;
}

}  // namespace freeavg
