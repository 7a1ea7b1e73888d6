#include "augur/harmonic.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace augur {

namespace {

std::mutex table_mutex;
std::vector<Rational>& table() {
    static std::vector<Rational> values{Rational(0)};
    return values;
}

}  // namespace

Rational harmonic(int n) {
    if (n <= 0) throw std::domain_error("harmonic: n must be positive");
    std::lock_guard lock(table_mutex);
    auto& values = table();
    while (static_cast<int>(values.size()) <= n) {
        const int next = static_cast<int>(values.size());
        values.push_back(values.back() + Rational(1, next));
    }
    return values[n];
}

double harmonic_value(int n) { return to_double(harmonic(n)); }

Rational witness_psi(int p, const Rational& delta) {
    return 2 * harmonic(p + 1) - (p - 1) * (Rational(1, 3) + delta) - harmonic(2);
}

Rational parse_rational(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q(text);
        q.canonicalize();
        return q;
    }
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    mpz_class denom = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
    const bool negative = !whole.empty() && whole[0] == '-';
    mpz_class whole_part(whole.empty() || whole == "-" ? "0" : whole);
    mpz_class frac_part(frac.empty() ? "0" : frac);
    if (negative) frac_part = -frac_part;
    Rational q(whole_part * denom + frac_part, denom);
    q.canonicalize();
    return q;
}

}  // namespace augur
