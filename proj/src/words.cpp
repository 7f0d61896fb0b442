#include "freeavg/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace freeavg {

Factor Factor::generator(std::string name, int sign)
{
    Factor f;
    f.name_ = std::move(name);
    f.sign_ = sign < 0 ? -1 : 1;
    return f;
}

Factor Factor::bracket(Word content, int iter, int sign)
{
    if (iter < 1) throw std::invalid_argument("bracket iteration must be at least 1");
    // ⌊⌊c⌋^(m)⌋^(n) is the letter ⌊c⌋^(m+n).
    if (content.size() == 1 && content.front().is_positive_bracket()) {
        const Factor& inner = content.front();
        return Factor::bracket(inner.content(), inner.iter() + iter, sign);
    }
    Factor f;
    f.content_ = std::make_shared<const Word>(std::move(content));
    f.iter_ = iter;
    f.sign_ = sign < 0 ? -1 : 1;
    return f;
}

const Word& Factor::content() const
{
    if (!content_) throw std::logic_error("generator letter has no content");
    return *content_;
}

Factor Factor::inverse() const { return with_sign(-sign_); }

Factor Factor::with_sign(int sign) const
{
    Factor f = *this;
    f.sign_ = sign < 0 ? -1 : 1;
    return f;
}

Factor Factor::with_iter(int iter) const
{
    if (!is_bracket()) throw std::logic_error("generator letter has no iteration");
    return Factor::bracket(*content_, iter, sign_);
}

bool Factor::is_inverse_of(const Factor& other) const
{
    if (sign_ == other.sign_) return false;
    if (is_generator() != other.is_generator()) return false;
    if (is_generator()) return name_ == other.name_;
    return iter_ == other.iter_ && (content_ == other.content_ || *content_ == *other.content_);
}

bool operator==(const Factor& a, const Factor& b)
{
    if (a.sign_ != b.sign_ || a.is_generator() != b.is_generator()) return false;
    if (a.is_generator()) return a.name_ == b.name_;
    return a.iter_ == b.iter_ && (a.content_ == b.content_ || *a.content_ == *b.content_);
}

Word Word::generator(std::string name, int sign)
{
    return Word({Factor::generator(std::move(name), sign)});
}

Word Word::slice(std::size_t first, std::size_t last) const
{
    return Word(std::vector<Factor>(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                                    factors_.begin() + static_cast<std::ptrdiff_t>(last)));
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position)
{
}

namespace {

void push_reduced(std::vector<Factor>& stack, const Factor& f)
{
    if (!stack.empty() && stack.back().is_inverse_of(f))
        stack.pop_back();
    else
        stack.push_back(f);
}

bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Word parse_all()
    {
        Word w = parse_word();
        skip_space();
        if (pos_ < text_.size()) {
            if (text_[pos_] == ']') fail("unmatched ']'");
            fail("expected identifier, '[', '1' or end of input");
        }
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_factor_start()
    {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return is_ident_start(c) || c == '[' || c == '1';
    }

    Word parse_word()
    {
        std::vector<Factor> stack;
        while (at_factor_start()) {
            for (const Factor& f : parse_factor()) push_reduced(stack, f);
        }
        return Word(std::move(stack));
    }

    long long parse_int(bool allow_sign)
    {
        std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) {
            pos_ = digits;
            fail(allow_sign ? "expected integer" : "expected positive integer");
        }
        long long value = 0;
        std::string_view token = text_.substr(start, pos_ - start);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            pos_ = start;
            fail("integer out of range");
        }
        return value;
    }

    // A factor expands to a list of letters: powers repeat the base.
    std::vector<Factor> parse_factor()
    {
        skip_space();
        std::size_t start = pos_;
        char c = text_[pos_];
        std::vector<Factor> base;
        bool bracketed = false;
        if (is_ident_start(c)) {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            base.push_back(Factor::generator(std::string(text_.substr(start, pos_ - start))));
        } else if (c == '1') {
            ++pos_;
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                pos_ = start;
                fail("expected identifier, '[' or '1'");
            }
        } else {
            ++pos_;  // '['
            Word inner = parse_word();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
            ++pos_;
            base.push_back(Factor::bracket(std::move(inner)));
            bracketed = true;
        }

        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '@') {
            if (!bracketed) fail("'@' iteration is only valid after a bracket");
            ++pos_;
            skip_space();
            std::size_t at = pos_;
            long long n = parse_int(false);
            if (n < 1) {
                pos_ = at;
                fail("iteration count must be at least 1");
            }
            if (n > 1'000'000) {
                pos_ = at;
                fail("iteration count too large");
            }
            base.front() = base.front().with_iter(base.front().iter() + static_cast<int>(n) - 1);
            skip_space();
        }
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_space();
            std::size_t at = pos_;
            long long k = parse_int(true);
            if (k == 0) {
                pos_ = at;
                fail("exponent 0 is not allowed");
            }
            if (k > 1'000'000 || k < -1'000'000) {
                pos_ = at;
                fail("exponent too large");
            }
            std::vector<Factor> out;
            if (base.empty()) return out;
            Factor letter = k < 0 ? base.front().inverse() : base.front();
            out.assign(static_cast<std::size_t>(k < 0 ? -k : k), letter);
            return out;
        }
        return base;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render_into(std::ostream& out, const Factor& f);

void render_word_into(std::ostream& out, const Word& w)
{
    if (w.empty()) {
        out << '1';
        return;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out << ' ';
        render_into(out, w[i]);
    }
}

void render_into(std::ostream& out, const Factor& f)
{
    if (f.is_generator()) {
        out << f.name();
    } else {
        out << '[';
        render_word_into(out, f.content());
        out << ']';
        if (f.iter() > 1) out << '@' << f.iter();
    }
    if (f.sign() < 0) out << "^-1";
}

void collect_generators(const Word& w, std::set<std::string>& names)
{
    for (const Factor& f : w.factors()) {
        if (f.is_generator())
            names.insert(f.name());
        else
            collect_generators(f.content(), names);
    }
}

}  // namespace

Word parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Word& w)
{
    std::ostringstream out;
    render_word_into(out, w);
    return out.str();
}

std::string render(const Factor& f)
{
    std::ostringstream out;
    render_into(out, f);
    return out.str();
}

Word reduce_concat(const Word& u, const Word& v)
{
    std::vector<Factor> stack = u.factors();
    for (const Factor& f : v.factors()) push_reduced(stack, f);
    return Word(std::move(stack));
}

Word free_reduce(const Word& w)
{
    std::vector<Factor> stack;
    for (const Factor& f : w.factors()) push_reduced(stack, f);
    return Word(std::move(stack));
}

Word invert(const Word& w)
{
    std::vector<Factor> out;
    out.reserve(w.size());
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out));
}

Word bracket_literal(const Word& w) { return Word({Factor::bracket(w)}); }

bool is_freely_reduced(const Word& w)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size() && w[i].is_inverse_of(w[i + 1])) return false;
        if (w[i].is_bracket() && !is_freely_reduced(w[i].content())) return false;
    }
    return true;
}

bool is_canonically_folded(const Word& w)
{
    for (const Factor& f : w.factors()) {
        if (!f.is_bracket()) continue;
        const Word& c = f.content();
        if (c.size() == 1 && c.front().is_positive_bracket()) return false;
        if (!is_canonically_folded(c)) return false;
    }
    return true;
}

WordMetrics metrics(const Word& w)
{
    WordMetrics m;
    m.breadth = w.size();
    for (const Factor& f : w.factors()) {
        if (f.is_generator()) continue;
        WordMetrics inner = metrics(f.content());
        m.op_degree += static_cast<std::size_t>(f.iter()) + inner.op_degree;
        m.depth = std::max(m.depth, static_cast<std::size_t>(f.iter()) + inner.depth);
    }
    return m;
}

std::vector<std::string> generators_of(const Word& w)
{
    std::set<std::string> names;
    collect_generators(w, names);
    return {names.begin(), names.end()};
}

}  // namespace freeavg
