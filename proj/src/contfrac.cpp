#include "tcs/contfrac.hpp"

#include "tcs/errors.hpp"

namespace tcs {

NegCF::NegCF(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw InputError("negative continued fraction needs at least one coefficient");
    }
    for (const auto& c : coeffs_) {
        if (c > -2) {
            throw InputError("negative continued fraction coefficient " + c.str() + " > -2");
        }
    }
}

PosCF::PosCF(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw InputError("positive continued fraction needs at least one coefficient");
    }
    if (coeffs_.size() == 2 && coeffs_[1] == 1) {
        if (coeffs_[0] < 2) {
            throw InputError("integer-case leading coefficient must be >= 2");
        }
        return;
    }
    for (const auto& c : coeffs_) {
        if (c < 2) {
            throw InputError("positive continued fraction coefficient " + c.str() + " < 2");
        }
    }
}

NegCF neg_cf(const Fraction& r) {
    if (r <= Fraction(0) || r >= Fraction(1)) {
        throw InputError("neg_cf expects 0 < r < 1, got " + r.str());
    }
    std::vector<BigInt> coeffs;
    Fraction x = -r.reciprocal();  // x < -1
    for (;;) {
        BigInt a = x.floor();
        coeffs.push_back(a);
        if (x.is_integer()) {
            break;
        }
        // x = a - 1/x', with a - x in (-1, 0) so x' < -1.
        x = (Fraction(a) - x).reciprocal();
    }
    return NegCF(std::move(coeffs));
}

Fraction eval_neg_cf(const NegCF& cf) {
    const auto c = cf.coefficients();
    Fraction x(c.back());
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        x = Fraction(c[j]) - x.reciprocal();
    }
    return x;
}

PosCF pos_cf_complement(const BigInt& b, const BigInt& a) {
    if (!(a > b && b >= 0) || boost::multiprecision::gcd(a, b) != 1) {
        throw InputError("pos_cf_complement expects a > b >= 0 with gcd(a, b) = 1");
    }
    Fraction y(a, a - b);  // 1/(1 - b/a) >= 1
    if (y.is_integer()) {
        return PosCF({y.num() + 1, 1});
    }
    std::vector<BigInt> coeffs;
    for (;;) {
        BigInt c = y.ceil();
        coeffs.push_back(c);
        if (y.is_integer()) {
            break;
        }
        y = (Fraction(c) - y).reciprocal();  // > 1
    }
    return PosCF(std::move(coeffs));
}

Fraction eval_pos_cf(const PosCF& cf, const BigInt& tail_increment) {
    const auto c = cf.coefficients();
    Fraction y(c.back() + tail_increment);
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        y = Fraction(c[j]) - y.reciprocal();
    }
    return y;
}

PosCF slope_coefficients(const Fraction& s) {
    const auto d = floor_decompose(s);
    return pos_cf_complement(d.b, d.a);
}

Fraction r3_from_slope(const Fraction& s) {
    return eval_pos_cf(slope_coefficients(s), 1).reciprocal();
}

} // namespace tcs
