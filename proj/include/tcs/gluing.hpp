#pragma once

// SL(2, Z) gluing maps between solid-torus boundaries and the boundary tori
// of a pair of pants times a circle. Column vectors (x, y) carry slope y/x.

#include "tcs/contfrac.hpp"
#include "tcs/numbers.hpp"

#include <iosfwd>
#include <string>

namespace tcs {

/// Integer 2x2 matrix of determinant one.
class GluingMatrix {
public:
    /// Throws InputError when the determinant is not 1.
    GluingMatrix(BigInt m11, BigInt m12, BigInt m21, BigInt m22);

    static GluingMatrix identity() { return {1, 0, 0, 1}; }
    /// [[1, 0], [-n, 1]]: the fibre-direction shear.
    static GluingMatrix shear(const BigInt& n) { return {1, 0, -n, 1}; }

    const BigInt& m11() const noexcept { return m11_; }
    const BigInt& m12() const noexcept { return m12_; }
    const BigInt& m21() const noexcept { return m21_; }
    const BigInt& m22() const noexcept { return m22_; }

    /// Adjugate; exact because det = 1.
    GluingMatrix inverse() const { return {m22_, -m12_, -m21_, m11_}; }
    Vec2 apply(const Vec2& v) const;

    std::string str() const;

    friend GluingMatrix operator*(const GluingMatrix& a, const GluingMatrix& b);
    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;

private:
    BigInt m11_, m12_, m21_, m22_;
};

std::ostream& operator<<(std::ostream& os, const GluingMatrix& m);

/// Solution of a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
    BigInt g;
    BigInt x;
    BigInt y;
};
Bezout extended_gcd(const BigInt& a, const BigInt& b);

/**
 * Boundary-convention gluing map [[p, u], [-q, -v]] for the ratio q/p, with
 * u*q - p*v = 1 and 0 < u < p. The pair (u, v) is unique. Requires p >= 2;
 * the raw-integer overload also rejects a non-reduced pair.
 */
GluingMatrix build_phi(const Fraction& ratio);
GluingMatrix build_phi(const BigInt& q, const BigInt& p);

/// Negative-invariant convention [[p, u], [q, v]] with p*v - q*u = 1 and p > u > 0, for 0 < q/p < 1.
GluingMatrix build_phi_neg(const Fraction& ratio);

Slope act_on_slope(const GluingMatrix& m, const Slope& s);

/// Slope on T_i of a standard neighbourhood of a Legendrian singular fibre
/// with twisting t < 0: -q/p + 1/(p(tp + u)).
Fraction twist_slope_attach(const Fraction& r, const BigInt& t);

/// Same for the negative-invariant convention, t < -2: q/p + 1/(p(pt + u)).
Fraction twist_slope_neg(const Fraction& ratio, const BigInt& t);

/// Boundary slope after shifting the two invariants by n1 and n2.
Slope reparam_slope(const Slope& s, const BigInt& n1, const BigInt& n2);

/// [[1,0],[-n,1]] * [[a1,1],[-1,0]] * ... * [[a(m-1),1],[-1,0]] * [[am+1,1],[-1,0]].
GluingMatrix phi_from_cf(const BigInt& n, const PosCF& cf);

struct PhiIdentityReport {
    Fraction slope;
    BigInt n;
    GluingMatrix phi;
    Vec2 image;         ///< phi * (-1, 1)
    Vec2 expected;      ///< (-a, n*a + a - b)
    bool normalized;    ///< 0 < u < p holds for phi
    bool matches_build_phi;  ///< phi == build_phi(n + r3); only meaningful when normalized
};

/// Checks phi_from_cf(n, coeffs) * (-1, 1) = (-a, na + a - b) for the
/// coefficients attached to s. Throws InternalError when either the vector
/// identity fails or a normalized product disagrees with build_phi(n + r3).
PhiIdentityReport verify_phi_identity(const Fraction& s, const BigInt& n);

} // namespace tcs
