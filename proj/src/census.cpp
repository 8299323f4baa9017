#include "tcs/census.hpp"

#include "tcs/errors.hpp"

#include <algorithm>

namespace tcs {

namespace {

const Fraction kHalf(1, 2);

bool in_open_unit_interval(const Fraction& r) {
    return r > Fraction(0) && r < Fraction(1);
}

BigInt abs_value(const BigInt& v) {
    return v < 0 ? BigInt(-v) : v;
}

bool is_half_half(const BoundedSeifert& q) {
    return q.r1 == kHalf && q.r2 == kHalf;
}

// prod_{j >= from} |aj + 1| over the expansion of -1/r.
BigInt singular_fiber_factor(const Fraction& r, std::size_t from) {
    const NegCF cf = neg_cf(r);
    BigInt product = 1;
    for (std::size_t j = from; j < cf.size(); ++j) {
        product *= abs_value(cf[j] + 1);
    }
    return product;
}

// (a2 - 1)...(a(m-1) - 1) * am; the middle product is empty for m = 2.
BigInt slope_tail(const PosCF& cf) {
    BigInt product = cf.a(cf.m());
    for (std::size_t j = 2; j < cf.m(); ++j) {
        product *= cf.a(j) - 1;
    }
    return product;
}

BigInt count_case1a(const BoundedSeifert& q, const PosCF& cf) {
    const NegCF c1 = neg_cf(q.r1);
    const NegCF c2 = neg_cf(q.r2);
    const BigInt outer = abs_value(c1[0] * c2[0]);
    return outer * singular_fiber_factor(q.r1, 1) * singular_fiber_factor(q.r2, 1) * cf.a(1) *
           slope_tail(cf);
}

BigInt count_case1b(const BoundedSeifert& q, const PosCF& cf) {
    const BigInt x = neg_cf(q.r1)[0];
    const BigInt y = neg_cf(q.r2)[0];
    const BigInt& a1 = cf.a(1);
    const BigInt bracket = x * y * a1 - (x + 1) * (y + 1) * (a1 - 1);
    if (bracket <= 0) {
        throw InternalError("Case 1b bracket is not positive: " + bracket.str());
    }
    return bracket * slope_tail(cf) * singular_fiber_factor(q.r1, 1) *
           singular_fiber_factor(q.r2, 1);
}

// Shared by Cases 3 and 4: prod_i prod_{j=0..li} |aj^i + 1| * (a1 - 1) * tail.
BigInt count_case3_core(const BoundedSeifert& q, const PosCF& cf) {
    return singular_fiber_factor(q.r1, 0) * singular_fiber_factor(q.r2, 0) * (cf.a(1) - 1) *
           slope_tail(cf);
}

} // namespace

BoundedSeifert::BoundedSeifert(Fraction r1_, Fraction r2_, Slope slope_, BigInt torsion_)
    : r1(std::move(r1_)), r2(std::move(r2_)), slope(std::move(slope_)), torsion(std::move(torsion_)) {
    if (!in_open_unit_interval(r1)) {
        throw InputError("r1 must lie in (0, 1), got " + r1.str());
    }
    if (!in_open_unit_interval(r2)) {
        throw InputError("r2 must lie in (0, 1), got " + r2.str());
    }
    if (torsion < 0) {
        throw InputError("torsion must be nonnegative, got " + torsion.str());
    }
}

std::string ClosedSeifert::str() const {
    return "M(" + e0.str() + "; " + r[0].str() + ", " + r[1].str() + ", " + r[2].str() + ")";
}

std::string case_name(CaseKind kind) {
    switch (kind) {
    case CaseKind::C1a: return "1a";
    case CaseKind::C1b: return "1b";
    case CaseKind::C2: return "2";
    case CaseKind::C3: return "3";
    case CaseKind::C4: return "4";
    case CaseKind::HalfHalfInfSlopeTorsion0: return "half_half_inf_torsion0";
    case CaseKind::HalfHalfTorsionPositive: return "half_half_torsion_positive";
    case CaseKind::Uncovered: return "uncovered";
    }
    throw InternalError("unknown case kind");
}

CaseTag classify_case(const BoundedSeifert& q) {
    if (is_half_half(q)) {
        if (q.torsion >= 1) {
            return {CaseKind::HalfHalfTorsionPositive, {}};
        }
        if (q.slope.is_infinite()) {
            return {CaseKind::HalfHalfInfSlopeTorsion0, {}};
        }
    }
    if (q.torsion >= 1) {
        return {CaseKind::Uncovered, "positive_torsion_requires_r1_r2_half"};
    }
    if (q.slope.is_infinite()) {
        return {CaseKind::Uncovered, "infinite_slope_requires_r1_r2_half"};
    }

    const Fraction& s = q.slope.value();
    if (s < Fraction(-1)) {
        return {CaseKind::C1a, {}};
    }
    if (s < Fraction(0)) {
        return {CaseKind::C1b, {}};
    }
    if (s < Fraction(1)) {
        if (q.r1 >= kHalf && q.r2 >= kHalf) {
            return {CaseKind::C2, {}};
        }
        return {CaseKind::Uncovered, "slope_in_[0,1)_requires_r1_r2_at_least_half"};
    }
    if (s < Fraction(2)) {
        if (q.r1 < kHalf && q.r2 < kHalf) {
            return {CaseKind::C3, {}};
        }
        return {CaseKind::Uncovered, "slope_in_[1,2)_requires_r1_r2_below_half"};
    }
    return {CaseKind::C4, {}};
}

ClosedSeifert reduction_target(const BoundedSeifert& q) {
    if (q.slope.is_infinite()) {
        throw InputError("reduction target needs a finite slope");
    }
    const Fraction& s = q.slope.value();
    return {-1 - s.floor(), {q.r1, q.r2, r3_from_slope(s)}};
}

CountResult count_tcs(const BoundedSeifert& q) {
    const CaseTag tag = classify_case(q);
    switch (tag.kind) {
    case CaseKind::HalfHalfTorsionPositive:
        return {count::Exact{2}, {}};
    case CaseKind::HalfHalfInfSlopeTorsion0:
        return {count::InfiniteFamilyPlusFinite{"Z", 2}, {}};
    case CaseKind::Uncovered:
        return {count::Uncovered{tag.reason}, {}};
    case CaseKind::C2:
        return {count::ReducesTo{reduction_target(q)}, {}};
    default:
        break;
    }

    const Fraction& s = q.slope.value();
    const PosCF cf = slope_coefficients(s);
    switch (tag.kind) {
    case CaseKind::C1a:
        return {count::Exact{count_case1a(q, cf)}, {}};
    case CaseKind::C1b:
        return {count::Exact{count_case1b(q, cf)}, {}};
    case CaseKind::C3:
        return {count::Exact{count_case3_core(q, cf)}, {}};
    case CaseKind::C4: {
        CountResult out{count::Exact{s.floor() * count_case3_core(q, cf)}, {}};
        if (s.is_integer()) {
            out.warnings.emplace_back(kWarnIntegerSlopeCase4);
        }
        return out;
    }
    default:
        throw InternalError("unhandled case " + case_name(tag.kind));
    }
}

std::string HalfHalfClass::str() const {
    if (const auto* h = std::get_if<Holonomy>(&label)) {
        return "holonomy(" + h->k.str() + ")";
    }
    const auto& t = std::get<Torsional>(label);
    return std::string("torsional(") + t.t.str() + (t.sign == TorsionSign::Positive ? ",+)" : ",-)");
}

bool HalfHalfLabels::contains(const HalfHalfClass& c) const {
    if (holonomy_family && std::holds_alternative<HalfHalfClass::Holonomy>(c.label)) {
        return true;
    }
    return std::find(explicit_labels.begin(), explicit_labels.end(), c) != explicit_labels.end();
}

HalfHalfLabels half_half_labels(const BigInt& torsion, const Slope& slope) {
    if (torsion < 0) {
        throw InputError("torsion must be nonnegative");
    }
    if (torsion == 0 && slope.is_finite()) {
        throw InputError("torsion 0 half-half labels exist only for slope inf");
    }
    HalfHalfLabels out;
    out.holonomy_family = torsion == 0;
    out.explicit_labels = {
        HalfHalfClass{HalfHalfClass::Torsional{torsion, TorsionSign::Positive}},
        HalfHalfClass{HalfHalfClass::Torsional{torsion, TorsionSign::Negative}},
    };
    return out;
}

VerticalTwisting vertical_twisting_info(const BoundedSeifert& q) {
    if (q.torsion != 0) {
        throw InputError("vertical twisting criteria need torsion 0");
    }
    const Fraction& s = q.slope.value();

    const Fraction rmax = std::max(q.r1, q.r2);
    const bool zero_twisting =
        s <= rmax || (s > Fraction(0) && s < Fraction(1) && q.r1 >= kHalf && q.r2 >= kHalf);

    // After shifting both invariants by -1: slope s - 2, q_i/p_i = 1 - r_i.
    const Fraction shifted = s - Fraction(2);
    const bool minus_one =
        shifted >= Fraction(0) ||
        (shifted >= Fraction(-1) && Fraction(1) - q.r1 > kHalf && Fraction(1) - q.r2 > kHalf);

    if (zero_twisting && minus_one) {
        throw InternalError("both twisting criteria fire for slope " + s.str());
    }
    if (zero_twisting) {
        return VerticalTwisting::AdmitsZeroTwisting;
    }
    if (minus_one) {
        return VerticalTwisting::MaxTwistingMinusOne;
    }
    return VerticalTwisting::Undetermined;
}

} // namespace tcs
