#include "tcs/gluing.hpp"

#include "tcs/errors.hpp"

#include <ostream>

namespace tcs {

GluingMatrix::GluingMatrix(BigInt m11, BigInt m12, BigInt m21, BigInt m22)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {
    if (m11_ * m22_ - m12_ * m21_ != 1) {
        throw InputError("gluing matrix " + str() + " does not have determinant 1");
    }
}

Vec2 GluingMatrix::apply(const Vec2& v) const {
    return {m11_ * v.x + m12_ * v.y, m21_ * v.x + m22_ * v.y};
}

GluingMatrix operator*(const GluingMatrix& a, const GluingMatrix& b) {
    return {a.m11_ * b.m11_ + a.m12_ * b.m21_, a.m11_ * b.m12_ + a.m12_ * b.m22_,
            a.m21_ * b.m11_ + a.m22_ * b.m21_, a.m21_ * b.m12_ + a.m22_ * b.m22_};
}

std::string GluingMatrix::str() const {
    return "[[" + m11_.str() + ", " + m12_.str() + "], [" + m21_.str() + ", " + m22_.str() + "]]";
}

std::ostream& operator<<(std::ostream& os, const GluingMatrix& m) {
    return os << m.str();
}

Bezout extended_gcd(const BigInt& a, const BigInt& b) {
    BigInt old_r = a, r = b;
    BigInt old_x = 1, x = 0;
    BigInt old_y = 0, y = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        return {-old_r, -old_x, -old_y};
    }
    return {old_r, old_x, old_y};
}

namespace {

// Representative of (value mod p) in [0, p).
BigInt mod_positive(const BigInt& value, const BigInt& p) {
    BigInt r = value % p;
    if (r < 0) {
        r += p;
    }
    return r;
}

// Inverse of q modulo p, in [1, p).
BigInt inverse_mod(const BigInt& q, const BigInt& p) {
    const Bezout e = extended_gcd(q, p);
    if (e.g != 1) {
        throw InputError(q.str() + "/" + p.str() + " is not in lowest terms");
    }
    return mod_positive(e.x, p);
}

} // namespace

GluingMatrix build_phi(const BigInt& q, const BigInt& p) {
    if (p < 1) {
        throw InputError("build_phi expects a positive denominator");
    }
    if (boost::multiprecision::gcd(q, p) != 1) {
        throw InputError(q.str() + "/" + p.str() + " is not in lowest terms");
    }
    if (p == 1) {
        throw InputError("build_phi: integer ratio " + q.str() + " admits no u with 0 < u < 1");
    }
    // u*q = 1 (mod p) pins u in (0, p); then v = (u*q - 1)/p.
    BigInt u = inverse_mod(q, p);
    BigInt v = (u * q - 1) / p;
    return {p, u, -q, -v};
}

GluingMatrix build_phi(const Fraction& ratio) {
    return build_phi(ratio.num(), ratio.den());
}

GluingMatrix build_phi_neg(const Fraction& ratio) {
    if (ratio <= Fraction(0) || ratio >= Fraction(1)) {
        throw InputError("build_phi_neg expects 0 < q/p < 1, got " + ratio.str());
    }
    const BigInt& q = ratio.num();
    const BigInt& p = ratio.den();
    // p*v - q*u = 1  <=>  u = -q^{-1} (mod p).
    BigInt u = mod_positive(-inverse_mod(q, p), p);
    BigInt v = (1 + q * u) / p;
    return {p, u, q, v};
}

Slope act_on_slope(const GluingMatrix& m, const Slope& s) {
    return slope_of_vector(m.apply(s.vector()));
}

Fraction twist_slope_attach(const Fraction& r, const BigInt& t) {
    if (r <= Fraction(0) || r >= Fraction(1)) {
        throw InputError("twist_slope_attach expects 0 < r < 1, got " + r.str());
    }
    if (t >= 0) {
        throw InputError("twist_slope_attach expects a negative twisting number");
    }
    const GluingMatrix phi = build_phi(r);
    const BigInt& p = phi.m11();
    const BigInt& u = phi.m12();
    return -r + Fraction(1, p * (t * p + u));
}

Fraction twist_slope_neg(const Fraction& ratio, const BigInt& t) {
    if (t >= -2) {
        throw InputError("twist_slope_neg expects twisting number < -2");
    }
    const GluingMatrix phi = build_phi_neg(ratio);
    const BigInt& p = phi.m11();
    const BigInt& u = phi.m12();
    return ratio + Fraction(1, p * (p * t + u));
}

Slope reparam_slope(const Slope& s, const BigInt& n1, const BigInt& n2) {
    if (s.is_infinite()) {
        return s;
    }
    return Slope(s.value() + Fraction(n1 + n2));
}

GluingMatrix phi_from_cf(const BigInt& n, const PosCF& cf) {
    GluingMatrix product = GluingMatrix::shear(n);
    const auto c = cf.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        const BigInt entry = j + 1 == c.size() ? BigInt(c[j] + 1) : c[j];
        product = product * GluingMatrix(entry, 1, -1, 0);
    }
    return product;
}

PhiIdentityReport verify_phi_identity(const Fraction& s, const BigInt& n) {
    const FloorDecomposition d = floor_decompose(s);
    const PosCF coeffs = pos_cf_complement(d.b, d.a);
    GluingMatrix phi = phi_from_cf(n, coeffs);

    const Vec2 image = phi.apply({-1, 1});
    const Vec2 expected{-d.a, n * d.a + d.a - d.b};
    if (image != expected) {
        throw InternalError("phi(-1, 1) = (" + image.x.str() + ", " + image.y.str() +
                            ") but expected (" + expected.x.str() + ", " + expected.y.str() +
                            ") for s = " + s.str() + ", n = " + n.str());
    }

    const bool normalized = phi.m12() > 0 && phi.m12() < phi.m11();
    bool matches = false;
    if (normalized) {
        const Fraction ratio = Fraction(n) + r3_from_slope(s);
        matches = build_phi(ratio) == phi;
        if (!matches) {
            throw InternalError("phi_from_cf disagrees with build_phi(" + ratio.str() + ")");
        }
    }
    return {s, n, std::move(phi), image, expected, normalized, matches};
}

} // namespace tcs
