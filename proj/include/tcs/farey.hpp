#pragma once

// Farey tessellation navigation and basic-slice bookkeeping for thickened
// tori and solid tori.
//
// Paths follow the orientation used by minimally twisting layers: a path
// from s0 to s1 only visits slopes met when moving from s0 in the direction
// of increasing slope (through infinity if necessary) until s1 is reached.
// For s0 = inf that is the arc [-inf, s1].

#include "tcs/contfrac.hpp"
#include "tcs/numbers.hpp"

#include <vector>

namespace tcs {

/// |p*q' - p'*q| == 1 with inf = 1/0. Throws InputError when s1 == s2.
bool is_farey_edge(const Slope& s1, const Slope& s2);

struct FareyPath {
    std::vector<Slope> vertices;

    std::size_t edges() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Shortest path inside the arc from `from` to `to`. Equal endpoints give a
/// single-vertex path with no edges.
FareyPath farey_shortest_path(const Slope& from, const Slope& to);

/// True when consecutive vertices are distinct and Farey-adjacent.
bool is_valid_farey_path(const FareyPath& path);

enum class ProfileKind {
    OuterInfinity,  ///< layer from slope inf down to s, s < 0
    IntegerFloor,   ///< layer from [s] - 2 to s - 2, s >= 1
};

/// Number of basic slices in each continued-fraction block.
struct BlockProfile {
    std::vector<BigInt> sizes;

    BigInt total() const;
};

BlockProfile block_profile_case(ProfileKind kind, const PosCF& cf);

/// Product over blocks of (size + 1): sign assignments modulo shuffling.
BigInt shuffle_count(const BlockProfile& profile);

/// Product over j >= from_index of |aj + 1|.
BigInt solid_torus_count(const NegCF& cf, std::size_t from_index);

/// |a0|: minimally twisting structures on the layer between inf and 1/(a0 + 1).
BigInt outer_layer_count(const NegCF& cf);

} // namespace tcs
