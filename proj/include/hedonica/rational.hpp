#ifndef HEDONICA_RATIONAL_HPP
#define HEDONICA_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hedonica {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    /// Parses `n` or `p/q` (optional leading '-', decimal digits only).
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// `p` for integers, `p/q` otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hedonica

#endif  // HEDONICA_RATIONAL_HPP
