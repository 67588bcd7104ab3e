#include "polyspan/exact.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace polyspan {

int sign(const Rational& r) { return sgn(r); }

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    std::string_view body = text.substr(pos);

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!digits(num) || !digits(den)) return fail();
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) return fail();
        value = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail();
        if ((!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac))) return fail();
        mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
        value = Rational(n, d);
    } else {
        if (!digits(body)) return fail();
        value = Rational(mpz_class(std::string(body), 10));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

bool is_finite_decimal(const Rational& r) {
    mpz_class d = r.get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
    return d == 1;
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    if (!is_finite_decimal(r)) return r.get_str();

    // den = 2^a 5^b; scale to 10^k with k = max(a, b).
    mpz_class d = r.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
    const unsigned k = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    mpz_class scaled = r.get_num() * (scale / r.get_den());
    const bool negative = scaled < 0;
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
    digits.insert(digits.size() - k, ".");
    return negative ? "-" + digits : digits;
}

int ExactScalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 3 b^2.
    const int c = cmp(Rational(a_ * a_), Rational(3 * b_ * b_));
    if (c == 0) return 0;  // unreachable for rationals unless both parts vanish
    return c > 0 ? sa : sb;
}

long double ExactScalar::to_long_double() const {
    static const long double kSqrt3 = std::sqrt(3.0L);
    // mpq -> double loses nothing we care about at desk scale; long double
    // keeps the sum from cancelling too early.
    return static_cast<long double>(a_.get_d()) + static_cast<long double>(b_.get_d()) * kSqrt3;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    // 1 / (c + d sqrt3) = (c - d sqrt3) / (c^2 - 3 d^2)
    Rational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
    if (norm == 0) throw std::domain_error("ExactScalar division by zero");
    ExactScalar conj(Rational(o.a_ / norm), Rational(-o.b_ / norm));
    return *this *= conj;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
    return os << format_rational(s.rational_part()) << (sgn(s.sqrt3_part()) < 0 ? " - " : " + ")
              << format_rational(abs(s.sqrt3_part())) << "*sqrt3";
}

}  // namespace polyspan
