#include "detail/kernels.hpp"

#include <limits>

namespace hedonica::detail {

std::optional<ValueTable<std::int64_t>> integer_table(const Game& g) {
    const int n = g.size();
    mpz_class common = 1;
    for (Player i = 1; i <= n; ++i) {
        for (Player j = 1; j <= n; ++j) {
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), g.value(i, j).raw().get_den_mpz_t());
        }
    }
    // Room for a sum of n*n entries of the largest magnitude.
    const mpz_class bound = mpz_class(std::numeric_limits<std::int64_t>::max() / 2) / (n * n + 1);

    ValueTable<std::int64_t> t;
    t.n = n;
    t.scale = Rational(mpq_class(common));
    t.v.reserve(static_cast<std::size_t>(n) * n);
    for (Player i = 1; i <= n; ++i) {
        for (Player j = 1; j <= n; ++j) {
            const mpq_class& q = g.value(i, j).raw();
            mpz_class scaled = q.get_num() * (common / q.get_den());
            if (abs(scaled) > bound) return std::nullopt;
            t.v.push_back(scaled.get_si());
        }
    }
    return t;
}

ValueTable<Rational> rational_table(const Game& g) {
    ValueTable<Rational> t;
    t.n = g.size();
    t.v.reserve(static_cast<std::size_t>(t.n) * t.n);
    for (Player i = 1; i <= t.n; ++i) {
        for (Player j = 1; j <= t.n; ++j) t.v.push_back(g.value(i, j));
    }
    return t;
}

}  // namespace hedonica::detail
