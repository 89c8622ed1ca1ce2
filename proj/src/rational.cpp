#include "hedonica/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hedonica {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : q_(static_cast<long>(numerator), 1) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    q_ /= mpq_class(static_cast<long>(denominator));
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!is_digits(num_digits)) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    if (slash == std::string_view::npos) return Rational(mpq_class(n));

    if (!is_digits(den)) {
        throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hedonica
