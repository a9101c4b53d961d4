#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hombol {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary-precision numerator over a positive
/// denominator, always stored reduced. A deliberate thin wrapper around
/// boost::multiprecision::cpp_rational with a closed operator set, so it
/// slots into Eigen dense types without boost's converting-constructor
/// templates getting in the way.
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT: implicit by design, mirrors field literals
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(int num, int den) : v_(num, den) {}
    explicit Rational(Backend v) : v_(std::move(v)) {}
    explicit Rational(BigInt num, BigInt den) : v_(std::move(num), std::move(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    const Backend& backend() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ / b.v_)); }
    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational operator+() const { return *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    Backend v_;
};

/// True iff `text` matches ^-?[0-9]+(/[1-9][0-9]*)?$ (the wire format
/// for rationals; denominators carry no sign).
bool is_rational_literal(std::string_view text);

/// Parse a rational literal. Throws FormatError on anything that does
/// not match is_rational_literal.
Rational parse_rational(std::string_view text);

/// Render as "n" or "n/d" with d > 1.
std::string to_string(const Rational& q);

}  // namespace hombol
