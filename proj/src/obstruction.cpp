#include "tcs/obstruction.hpp"

#include "tcs/contfrac.hpp"
#include "tcs/errors.hpp"

namespace tcs {

namespace {

// Largest integer strictly below x.
BigInt strict_floor(const Fraction& x) {
    return x.is_integer() ? BigInt(x.num() - 1) : x.floor();
}

} // namespace

bool is_witness(const ObstructionQuery& q, const ObstructionWitness& w) {
    if (w.k <= 0) {
        return false;
    }
    const std::array<const Fraction*, 3> bounds{&q.c1, &q.c2, &q.c3};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(Fraction(w.h[i], w.k) < *bounds[i])) {
            return false;
        }
    }
    return w.h[0] + w.h[1] + w.h[2] == -w.k - 1;
}

std::optional<ObstructionWitness> witness_for_k(const ObstructionQuery& q, const BigInt& k) {
    if (k <= 0) {
        throw InputError("witness_for_k expects k > 0");
    }
    const Fraction kf(k);
    ObstructionWitness w{k, {strict_floor(kf * q.c1), strict_floor(kf * q.c2), strict_floor(kf * q.c3)}};
    const BigInt target = -k - 1;
    const BigInt surplus = w.h[0] + w.h[1] + w.h[2] - target;
    if (surplus < 0) {
        return std::nullopt;
    }
    // Lowering any hi keeps hi/k < ci; put the whole surplus on h1.
    w.h[0] -= surplus;
    if (!is_witness(q, w)) {
        throw InternalError("constructed obstruction witness fails verification");
    }
    return w;
}

SearchOutcome search_witness(const ObstructionQuery& q) {
    if (q.c3 >= Fraction(0)) {
        throw InputError("search_witness expects c3 < 0, got " + q.c3.str());
    }
    SearchOutcome out;
    out.n = (-q.c3).reciprocal().ceil();
    out.bound_holds = q.c1 + q.c2 + q.c3 < Fraction(-1) - Fraction(1, out.n);

    for (BigInt k = 1; k < out.n; ++k) {
        if (auto w = witness_for_k(q, k)) {
            out.status = SearchStatus::Witness;
            out.witness = std::move(w);
            return out;
        }
    }
    out.status = out.bound_holds ? SearchStatus::None : SearchStatus::Undetermined;
    return out;
}

ObstructionQuery case3_query(const Fraction& r1, const Fraction& r2, const Fraction& s) {
    const Fraction half(1, 2);
    for (const Fraction* r : {&r1, &r2}) {
        if (*r <= Fraction(0) || *r >= half) {
            throw InputError("Case 3 invariants must lie in (0, 1/2), got " + r->str());
        }
    }
    if (s < Fraction(1) || s >= Fraction(2)) {
        throw InputError("Case 3 slope must lie in [1, 2), got " + s.str());
    }
    // qi/pi = 1 - ri, so ci = -qi/pi = ri - 1.
    return {r1 - Fraction(1), r2 - Fraction(1), r3_from_slope(s) - Fraction(1)};
}

bool case3_no_transverse(const Fraction& r1, const Fraction& r2, const Fraction& s) {
    return search_witness(case3_query(r1, r2, s)).status == SearchStatus::None;
}

} // namespace tcs
