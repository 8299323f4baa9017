#pragma once

// Bounded search for the data (k; h1, h2, h3) that a positive transverse
// contact structure on M(-1; q1/p1, q2/p2, 1 - r3) would produce:
//
//   hi / k < ci   for i = 1, 2, 3,
//   h1 + h2 + h3 = -k - 1,
//
// with c1 = -q1/p1, c2 = -q2/p2, c3 = r3 - 1. Any witness must satisfy
// -1 - 1/k < c1 + c2 + c3. When c1 + c2 + c3 < -1 - 1/n for the smallest
// n >= 1/(-c3), this bounds k <= n - 1 and the search is decisive.

#include "tcs/numbers.hpp"

#include <array>
#include <optional>

namespace tcs {

struct ObstructionQuery {
    Fraction c1;
    Fraction c2;
    Fraction c3;
};

struct ObstructionWitness {
    BigInt k;
    std::array<BigInt, 3> h;

    friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

enum class SearchStatus {
    Witness,       ///< a verified witness was found
    None,          ///< the bound holds and no k in 1..n-1 admits a witness
    Undetermined,  ///< the bound fails and no witness was found within 1..n-1
};

struct SearchOutcome {
    SearchStatus status;
    std::optional<ObstructionWitness> witness;
    BigInt n;            ///< ceil(1 / -c3)
    bool bound_holds;    ///< c1 + c2 + c3 < -1 - 1/n
};

/// Witness for a fixed k > 0, if one exists.
std::optional<ObstructionWitness> witness_for_k(const ObstructionQuery& q, const BigInt& k);

/// Exact recheck of both defining conditions.
bool is_witness(const ObstructionQuery& q, const ObstructionWitness& w);

/// Throws InputError unless c3 < 0.
SearchOutcome search_witness(const ObstructionQuery& q);

/// c1 = r1 - 1, c2 = r2 - 1, c3 = r3(s) - 1 for 0 < ri < 1/2, 1 <= s < 2.
ObstructionQuery case3_query(const Fraction& r1, const Fraction& r2, const Fraction& s);

/// True iff the search over the Case 3 data finds no witness.
bool case3_no_transverse(const Fraction& r1, const Fraction& r2, const Fraction& s);

} // namespace tcs
