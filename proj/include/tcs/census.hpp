#pragma once

/**
 * Census of tight contact structures on M(D^2; r1, r2) with minimal convex
 * boundary of slope s and prescribed Giroux torsion along the boundary.
 *
 * classify_case() sorts a query into one of the covered regimes:
 *
 *   C1a   s < -1                                  closed-form count
 *   C1b   -1 <= s < 0                             closed-form count
 *   C2    0 <= s < 1,  r1, r2 >= 1/2              reduces to M(-1; r1, r2, r3)
 *   C3    1 <= s < 2,  r1, r2 < 1/2               closed-form count
 *   C4    s >= 2                                  closed-form count
 *
 * plus the two regimes specific to r1 = r2 = 1/2 (slope inf with torsion 0,
 * and any slope with positive torsion). Everything else is Uncovered, which
 * is a result and not an error.
 *
 * In the formulas, aj^i are the coefficients of -1/ri (all <= -2) and
 * a1..am those attached to the fractional part of s.
 */

#include "tcs/contfrac.hpp"
#include "tcs/numbers.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tcs {

struct BoundedSeifert {
    /// Throws InputError unless r1, r2 lie strictly inside (0, 1) and torsion >= 0.
    BoundedSeifert(Fraction r1, Fraction r2, Slope slope, BigInt torsion = 0);

    Fraction r1;
    Fraction r2;
    Slope slope;
    BigInt torsion;
};

/// M(e0; r1, r2, r3).
struct ClosedSeifert {
    BigInt e0;
    std::array<Fraction, 3> r;

    std::string str() const;
    friend bool operator==(const ClosedSeifert&, const ClosedSeifert&) = default;
};

enum class CaseKind {
    C1a,
    C1b,
    C2,
    C3,
    C4,
    HalfHalfInfSlopeTorsion0,
    HalfHalfTorsionPositive,
    Uncovered,
};

struct CaseTag {
    CaseKind kind;
    std::string reason;  ///< set only for Uncovered

    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// Stable short name: "1a", "1b", "2", "3", "4", "half_half_inf_torsion0",
/// "half_half_torsion_positive", "uncovered".
std::string case_name(CaseKind kind);

namespace count {
struct Exact {
    BigInt value;
    friend bool operator==(const Exact&, const Exact&) = default;
};
/// A family indexed by `index_set` together with `extra` further structures.
struct InfiniteFamilyPlusFinite {
    std::string index_set;
    BigInt extra;
    friend bool operator==(const InfiniteFamilyPlusFinite&, const InfiniteFamilyPlusFinite&) = default;
};
struct ReducesTo {
    ClosedSeifert target;
    friend bool operator==(const ReducesTo&, const ReducesTo&) = default;
};
struct Uncovered {
    std::string reason;
    friend bool operator==(const Uncovered&, const Uncovered&) = default;
};
} // namespace count

/// Warning code attached to Case 4 counts at integer slopes.
inline constexpr const char* kWarnIntegerSlopeCase4 = "integer_slope_case4";

struct CountResult {
    std::variant<count::Exact, count::InfiniteFamilyPlusFinite, count::ReducesTo, count::Uncovered> value;
    std::vector<std::string> warnings;

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

CaseTag classify_case(const BoundedSeifert& q);

/// M(-1 - [s]; r1, r2, r3). Throws InputError for an infinite slope.
ClosedSeifert reduction_target(const BoundedSeifert& q);

CountResult count_tcs(const BoundedSeifert& q);

enum class TorsionSign { Positive, Negative };

struct HalfHalfClass {
    struct Holonomy {
        BigInt k;
        friend bool operator==(const Holonomy&, const Holonomy&) = default;
    };
    struct Torsional {
        BigInt t;
        TorsionSign sign;
        friend bool operator==(const Torsional&, const Torsional&) = default;
    };
    std::variant<Holonomy, Torsional> label;

    std::string str() const;
    friend bool operator==(const HalfHalfClass&, const HalfHalfClass&) = default;
};

/// Classes for r1 = r2 = 1/2. With torsion 0 and slope inf the holonomy
/// family {Holonomy(k) : k in Z} is returned symbolically via the flag.
struct HalfHalfLabels {
    bool holonomy_family = false;
    std::vector<HalfHalfClass> explicit_labels;

    /// Membership test for a concrete label.
    bool contains(const HalfHalfClass& c) const;
};

/// Throws InputError outside the two half-half regimes.
HalfHalfLabels half_half_labels(const BigInt& torsion, const Slope& slope);

enum class VerticalTwisting { AdmitsZeroTwisting, MaxTwistingMinusOne, Undetermined };

/// Which of the twisting-number criteria applies. Requires torsion 0 and a
/// finite slope.
VerticalTwisting vertical_twisting_info(const BoundedSeifert& q);

} // namespace tcs
