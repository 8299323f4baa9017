#pragma once

/**
 * Exact rationals and slopes.
 *
 * Everything in this library is computed over arbitrary-precision integers.
 * A Fraction is always stored reduced with a positive denominator, so
 * structural equality is numeric equality. A Slope extends the rationals by
 * a single point at infinity; the slope of a column vector (x, y) is y/x.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace tcs {

using BigInt = boost::multiprecision::cpp_int;

BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

class Fraction {
public:
    Fraction() = default;
    Fraction(BigInt num);  // NOLINT(google-explicit-constructor)
    Fraction(int num) : Fraction(BigInt(num)) {}  // NOLINT
    Fraction(BigInt num, BigInt den);

    /// Accepts `[-]p/q` or `[-]p` with optional surrounding whitespace.
    static Fraction parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    BigInt floor() const { return floor_div(num_, den_); }
    BigInt ceil() const { return ceil_div(num_, den_); }
    Fraction abs() const;
    Fraction reciprocal() const;

    std::string str() const;

    Fraction operator-() const;
    Fraction& operator+=(const Fraction& rhs);
    Fraction& operator-=(const Fraction& rhs);
    Fraction& operator*=(const Fraction& rhs);
    Fraction& operator/=(const Fraction& rhs);

    friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
    friend Fraction operator-(Fraction lhs, const Fraction& rhs) { return lhs -= rhs; }
    friend Fraction operator*(Fraction lhs, const Fraction& rhs) { return lhs *= rhs; }
    friend Fraction operator/(Fraction lhs, const Fraction& rhs) { return lhs /= rhs; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// Reduced representative of num/den. Throws InputError when den == 0.
Fraction reduce_fraction(const BigInt& num, const BigInt& den);

struct Vec2 {
    BigInt x;
    BigInt y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

class Slope {
public:
    struct Infinity {
        friend bool operator==(Infinity, Infinity) { return true; }
    };

    Slope(Fraction value) : value_(std::move(value)) {}  // NOLINT
    Slope(int value) : value_(Fraction(value)) {}  // NOLINT
    static Slope infinity() { return Slope(Infinity{}); }

    /// Accepts the Fraction grammar plus the token `inf`.
    static Slope parse(std::string_view text);

    bool is_infinite() const noexcept { return std::holds_alternative<Infinity>(value_); }
    bool is_finite() const noexcept { return !is_infinite(); }
    /// Throws InputError for the infinite slope.
    const Fraction& value() const;

    /// Primitive vector with this slope: (den, num) for finite, (0, 1) for infinity.
    Vec2 vector() const;

    std::string str() const;

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    explicit Slope(Infinity) : value_(Infinity{}) {}
    std::variant<Fraction, Infinity> value_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

/// Slope y/x of the column vector (x, y); Infinity when x == 0.
Slope slope_of_vector(const BigInt& x, const BigInt& y);
inline Slope slope_of_vector(const Vec2& v) { return slope_of_vector(v.x, v.y); }

/// s = floor + b/a with a > b >= 0 and gcd(a, b) = 1.
struct FloorDecomposition {
    BigInt floor;
    BigInt b;
    BigInt a;

    Fraction fractional_part() const { return Fraction(b, a); }
    friend bool operator==(const FloorDecomposition&, const FloorDecomposition&) = default;
};

FloorDecomposition floor_decompose(const Fraction& s);

} // namespace tcs
