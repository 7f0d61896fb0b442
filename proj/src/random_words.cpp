#include <algorithm>

#include "freeavg/avgroup.hpp"

namespace freeavg {

namespace {

// Adjacency constraints of a normal word at one level.
bool compatible(const Factor& left, const Factor& right)
{
    if (left.is_inverse_of(right)) return false;
    if (left.is_positive_bracket() && right.is_positive_bracket()) return false;
    if (left.is_negative_bracket() && right.is_negative_bracket()) return false;
    return true;
}

bool content_ends_ok(const std::vector<Factor>& factors)
{
    if (factors.size() < 2) return true;
    if (factors.front().is_positive_bracket()) return false;
    const Factor& last = factors.back();
    return !(last.is_positive_bracket() && last.iter() >= 2);
}

}  // namespace

WordSampler::WordSampler(GenParams params) : params_(std::move(params)), rng_(params_.seed)
{
    if (params_.alphabet.empty()) throw std::invalid_argument("sampler alphabet is empty");
    if (params_.max_breadth < 1) throw std::invalid_argument("max_breadth must be at least 1");
    if (params_.max_depth < 0) throw std::invalid_argument("max_depth must be non-negative");
}

std::uint64_t WordSampler::next(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }

// Empty words (the identity, or ⌊1⌋ as a content) one time in ten.
std::size_t WordSampler::draw_length()
{
    if (next(10) == 0) return 0;
    return 1 + next(static_cast<std::uint64_t>(params_.max_breadth));
}

Factor WordSampler::random_generator()
{
    const auto& name = params_.alphabet[next(params_.alphabet.size())];
    return Factor::generator(name, next(2) == 0 ? 1 : -1);
}

Word WordSampler::grow_normal(int depth_budget, bool as_content)
{
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::size_t length = draw_length();
        std::vector<Factor> factors;
        for (std::size_t i = 0; i < length; ++i) {
            for (int tries = 0; tries < 8; ++tries) {
                Factor candidate = random_generator();
                if (depth_budget > 0 && next(2) == 0) {
                    int iter = 1 + static_cast<int>(next(static_cast<std::uint64_t>(std::min(depth_budget, 2))));
                    Word content = grow_normal(depth_budget - iter, true);
                    candidate = Factor::bracket(std::move(content), iter, next(2) == 0 ? 1 : -1);
                }
                if (factors.empty() || compatible(factors.back(), candidate)) {
                    factors.push_back(std::move(candidate));
                    break;
                }
            }
        }
        if (!as_content || content_ends_ok(factors)) return Word(std::move(factors));
    }
    return Word({random_generator()});
}

Word WordSampler::grow_raw(int depth_budget)
{
    std::size_t length = draw_length();
    std::vector<Factor> factors;
    for (std::size_t i = 0; i < length; ++i) {
        if (depth_budget > 0 && next(2) == 0) {
            int iter = 1 + static_cast<int>(next(static_cast<std::uint64_t>(std::min(depth_budget, 2))));
            Word content = grow_raw(depth_budget - iter);
            factors.push_back(Factor::bracket(std::move(content), iter, next(3) == 0 ? -1 : 1));
        } else {
            factors.push_back(random_generator());
        }
    }
    return free_reduce(Word(std::move(factors)));
}

NormalWord WordSampler::grammar_word() { return NormalWord::certify(grow_normal(params_.max_depth, false)); }

Word WordSampler::raw_word() { return grow_raw(params_.max_depth); }

NormalWord WordSampler::normalized_raw_word() { return NormalWord::normalize(raw_word()); }

NormalWord random_normal_word(const GenParams& params) { return WordSampler(params).grammar_word(); }

}  // namespace freeavg
