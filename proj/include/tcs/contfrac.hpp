#pragma once

// Continued fractions in the two sign conventions used for Seifert invariants.
//
//   NegCF: x = a0 - 1/(a1 - 1/(... - 1/al)),  every aj <= -2.
//   PosCF: y = a1 - 1/(a2 - 1/(... - 1/am)),  every aj >= 2, except the
//          integer special case [y + 1, 1].

#include "tcs/numbers.hpp"

#include <span>
#include <vector>

namespace tcs {

class NegCF {
public:
    /// Throws InputError unless the list is nonempty and every entry is <= -2.
    explicit NegCF(std::vector<BigInt> coefficients);

    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t j) const { return coeffs_.at(j); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    /// Index of the last coefficient.
    std::size_t last_index() const noexcept { return coeffs_.size() - 1; }

    friend bool operator==(const NegCF&, const NegCF&) = default;

private:
    std::vector<BigInt> coeffs_;
};

class PosCF {
public:
    /// Throws InputError unless all entries are >= 2, or the list is [a1, 1] with a1 >= 2.
    explicit PosCF(std::vector<BigInt> coefficients);

    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
    /// One-based access, a(1) .. a(m).
    const BigInt& a(std::size_t j) const { return coeffs_.at(j - 1); }
    std::size_t m() const noexcept { return coeffs_.size(); }
    bool is_integer_case() const noexcept { return coeffs_.size() == 2 && coeffs_[1] == 1; }

    friend bool operator==(const PosCF&, const PosCF&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Expansion of -1/r for 0 < r < 1.
NegCF neg_cf(const Fraction& r);
Fraction eval_neg_cf(const NegCF& cf);

/// Expansion of 1/(1 - b/a), with the integer special case [1/(1 - b/a) + 1, 1].
PosCF pos_cf_complement(const BigInt& b, const BigInt& a);

/// a1 - 1/(a2 - ... - 1/(am + tail_increment)).
Fraction eval_pos_cf(const PosCF& cf, const BigInt& tail_increment = 0);

/// Coefficients a1..am attached to a boundary slope (depends on s - [s] only).
PosCF slope_coefficients(const Fraction& s);

/// r3 = 1/(a1 - 1/(a2 - ... - 1/(am + 1))), an element of (0, 1).
Fraction r3_from_slope(const Fraction& s);

} // namespace tcs
