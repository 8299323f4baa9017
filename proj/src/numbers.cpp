#include "tcs/numbers.hpp"

#include "tcs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace tcs {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
        throw InputError("malformed number '" + std::string(whole) + "'");
    }
    BigInt value{std::string(text)};
    return negative ? BigInt(-value) : value;
}

} // namespace

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InputError("division by zero");
    }
    BigInt q = num / den;  // truncates toward zero
    if (q * den != num && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    return -floor_div(-num, den);
}

Fraction::Fraction(BigInt num) : num_(std::move(num)), den_(1) {}

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw InputError("zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction reduce_fraction(const BigInt& num, const BigInt& den) {
    return Fraction(num, den);
}

Fraction Fraction::parse(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Fraction(parse_integer(text, whole));
    }
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) {
        throw InputError("zero denominator in '" + std::string(whole) + "'");
    }
    return Fraction(parse_integer(text.substr(0, slash), whole), std::move(den));
}

Fraction Fraction::abs() const {
    Fraction out = *this;
    if (out.num_ < 0) {
        out.num_ = -out.num_;
    }
    return out;
}

Fraction Fraction::reciprocal() const {
    if (num_ == 0) {
        throw InputError("reciprocal of zero");
    }
    return Fraction(den_, num_);
}

std::string Fraction::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Fraction Fraction::operator-() const {
    Fraction out = *this;
    out.num_ = -out.num_;
    return out;
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
    *this = Fraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) {
    *this = Fraction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Fraction& Fraction::operator*=(const Fraction& rhs) {
    *this = Fraction(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
    if (rhs.num_ == 0) {
        throw InputError("division by zero");
    }
    *this = Fraction(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.str();
}

Slope Slope::parse(std::string_view text) {
    const std::string_view t = trim(text);
    if (t == "inf" || t == "infinity" || t == "oo") {
        return infinity();
    }
    return Slope(Fraction::parse(t));
}

const Fraction& Slope::value() const {
    if (is_infinite()) {
        throw InputError("slope is infinite");
    }
    return std::get<Fraction>(value_);
}

Vec2 Slope::vector() const {
    if (is_infinite()) {
        return {0, 1};
    }
    const auto& f = std::get<Fraction>(value_);
    return {f.den(), f.num()};
}

std::string Slope::str() const {
    return is_infinite() ? std::string("inf") : std::get<Fraction>(value_).str();
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.str();
}

Slope slope_of_vector(const BigInt& x, const BigInt& y) {
    if (x == 0 && y == 0) {
        throw InputError("zero vector has no slope");
    }
    if (x == 0) {
        return Slope::infinity();
    }
    return Slope(Fraction(y, x));
}

FloorDecomposition floor_decompose(const Fraction& s) {
    BigInt fl = s.floor();
    // s - fl = (num - fl*den)/den, already reduced since gcd(num, den) = 1.
    BigInt b = s.num() - fl * s.den();
    return {std::move(fl), std::move(b), s.den()};
}

} // namespace tcs
