#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace freeavg {

/// Exact rational number in canonical form (coprime, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit from integers
    Rational(std::int64_t num, std::int64_t den);

    /// "p", "-p" or "p/q". Throws std::invalid_argument on bad input or q = 0.
    static Rational parse(std::string_view text);

    std::string to_string() const { return value_.get_str(); }
    bool is_zero() const { return sgn(value_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.to_string(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

}  // namespace freeavg
