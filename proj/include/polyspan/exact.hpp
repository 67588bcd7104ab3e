#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyspan {

using Rational = mpq_class;

int sign(const Rational& r);

/// Parses "12", "-0.25", "+3.5" or "7/4" into an exact rational.
/// Throws std::invalid_argument on anything else (exponents included).
Rational parse_rational(std::string_view text);

/// Shortest exact text for r: an integer, a finite decimal, or "p/q".
std::string format_rational(const Rational& r);

bool is_finite_decimal(const Rational& r);

/// Element a + b*sqrt(3) of Q(sqrt 3). Cone boundaries have slopes 0 and
/// +-sqrt 3 and bisector projections land here, so every comparison the
/// constructions make stays exact.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    ExactScalar(long v) : a_(v), b_(0) {}
    ExactScalar(int v) : a_(v), b_(0) {}

    static ExactScalar sqrt3() { return ExactScalar(0, 1); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    /// Exact sign of a + b*sqrt3.
    int sign() const;
    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }

    ExactScalar operator-() const { return ExactScalar(-a_, -b_); }
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    /// Throws std::domain_error on division by zero.
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar l, const ExactScalar& r) { return l += r; }
    friend ExactScalar operator-(ExactScalar l, const ExactScalar& r) { return l -= r; }
    friend ExactScalar operator*(ExactScalar l, const ExactScalar& r) { return l *= r; }
    friend ExactScalar operator/(ExactScalar l, const ExactScalar& r) { return l /= r; }

    friend bool operator==(const ExactScalar& l, const ExactScalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend std::strong_ordering operator<=>(const ExactScalar& l, const ExactScalar& r) {
        const int s = (l - r).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace polyspan
