#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Thin value type over GMP's mpq_class. gmpxx expression templates are kept
 * behind the class boundary so that generic code (Octonion<S>, auto-typed
 * intermediates) always sees a concrete Rational.
 *
 * Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kmo {

using BigInt = mpz_class;

/// base^exp for a nonnegative exponent.
inline BigInt ipow(const BigInt& base, unsigned long exp)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

/// 2^exp.
inline BigInt pow2(unsigned long exp)
{
    BigInt out;
    mpz_setbit(out.get_mpz_t(), exp);
    return out;
}

class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I v) : q_(static_cast<long>(v)) // NOLINT(google-explicit-constructor)
    {
        static_assert(sizeof(I) <= sizeof(long));
    }

    template <std::unsigned_integral I>
    Rational(I v) : q_(static_cast<unsigned long>(v)) // NOLINT(google-explicit-constructor)
    {
        static_assert(sizeof(I) <= sizeof(unsigned long));
    }

    Rational(const BigInt& v) : q_(v) {} // NOLINT(google-explicit-constructor)

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }

    /// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
    static Rational parse(std::string_view text)
    {
        const auto slash = text.find('/');
        const auto num = parse_int(text.substr(0, slash));
        if (slash == std::string_view::npos) {
            return Rational(num);
        }
        return Rational(num, parse_int(text.substr(slash + 1)));
    }

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const noexcept { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    /// Only valid when is_integer().
    [[nodiscard]] BigInt to_integer() const
    {
        if (!is_integer()) {
            throw std::domain_error("Rational: " + to_string() + " is not an integer");
        }
        return q_.get_num();
    }

    /// "p" for integers, "p/q" otherwise; never scientific notation.
    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a)
    {
        Rational out;
        mpq_neg(out.q_.get_mpq_t(), a.q_.get_mpq_t());
        return out;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static BigInt parse_int(std::string_view s)
    {
        std::string text(s);
        const bool digits_only = !text.empty() && text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos
                                 && text != "-";
        if (!digits_only) {
            throw std::invalid_argument("Rational: malformed integer '" + text + "'");
        }
        return BigInt(text, 10);
    }

    mpq_class q_;
};

// Scalar-ring hooks used by Octonion<S>.
inline Rational zero_like(const Rational&) { return {}; }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool same_ring(const Rational&, const Rational&) noexcept { return true; }

} // namespace kmo
