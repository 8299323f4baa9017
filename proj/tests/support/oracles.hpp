#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check; everything runs on int64 or on
// hand-rolled recursions.

#include "tcs/contfrac.hpp"
#include "tcs/farey.hpp"
#include "tcs/numbers.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tcs::oracle {

using i64 = std::int64_t;

/// Small fraction p/q, q >= 0, q == 0 meaning infinity (stored as 1/0).
struct Small {
    i64 p;
    i64 q;

    friend bool operator==(const Small&, const Small&) = default;
    friend bool operator<(const Small& a, const Small& b) {
        return std::pair(a.p, a.q) < std::pair(b.p, b.q);
    }
};

inline Small small(i64 p, i64 q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) {
        return {1, 0};
    }
    const i64 g = std::gcd(p < 0 ? -p : p, q);
    return {p / g, q / g};
}

inline Small small_of(const Slope& s) {
    if (s.is_infinite()) {
        return {1, 0};
    }
    return small(static_cast<i64>(s.value().num()), static_cast<i64>(s.value().den()));
}

inline Slope slope_of(const Small& s) {
    return s.q == 0 ? Slope::infinity() : Slope(Fraction(s.p, s.q));
}

// a <= b for finite a, b.
inline bool le(const Small& a, const Small& b) {
    return static_cast<__int128>(a.p) * b.q <= static_cast<__int128>(b.p) * a.q;
}

/**
 * Breadth-first search in the Farey graph restricted to slopes with
 * denominator <= max_den inside the closed window [lo, hi], optionally
 * together with infinity. Neighbours of p/q are the r/s with |p*s - r*q| = 1,
 * generated as mediant-translates r/s + t*(p/q). Returns the edge count or
 * nullopt when the cap prevents reaching the target.
 */
inline std::optional<int> farey_bfs(Small from, Small to, Small lo, Small hi, bool include_infinity, i64 max_den) {
    auto admissible = [&](const Small& v) {
        if (v.q == 0) {
            return include_infinity;
        }
        return v.q <= max_den && le(lo, v) && le(v, hi);
    };
    auto neighbours = [&](const Small& v) {
        std::vector<Small> out;
        if (v.q == 0) {
            for (i64 n = lo.p / lo.q - 1; n <= hi.p / hi.q + 1; ++n) {
                out.push_back({n, 1});
            }
            return out;
        }
        // Base solutions of p*s - r*q = +-1 via brute force over s in [0, q).
        for (i64 sign : {1, -1}) {
            for (i64 s0 = 0; s0 < std::max<i64>(v.q, 1); ++s0) {
                const i64 num = v.p * s0 - sign;
                if (num % v.q != 0) {
                    continue;
                }
                const i64 r0 = num / v.q;
                for (i64 t = 0; s0 + t * v.q <= max_den; ++t) {
                    out.push_back(small(r0 + t * v.p, s0 + t * v.q));
                }
            }
        }
        return out;
    };

    std::map<Small, int> dist;
    std::queue<Small> frontier;
    dist[from] = 0;
    frontier.push(from);
    while (!frontier.empty()) {
        const Small v = frontier.front();
        frontier.pop();
        if (v == to) {
            return dist[v];
        }
        for (const Small& w : neighbours(v)) {
            if (admissible(w) && !dist.count(w)) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return std::nullopt;
}

/// Edge count from infinity to s along the arc [-inf, s], by BFS.
inline std::optional<int> bfs_from_infinity(const Fraction& s, i64 max_den) {
    const Small target = small_of(Slope(s));
    const i64 fl = static_cast<i64>(s.floor());
    return farey_bfs({1, 0}, target, {fl - 1, 1}, target, true, max_den);
}

/// Edge count from infinity to s with no arc restriction (window [fl-2, fl+2]).
inline std::optional<int> bfs_unrestricted_from_infinity(const Fraction& s, i64 max_den) {
    const Small target = small_of(Slope(s));
    const i64 fl = static_cast<i64>(s.floor());
    return farey_bfs({1, 0}, target, {fl - 2, 1}, {fl + 2, 1}, true, max_den);
}

/// Edge count from integer k up to k <= x along [k, x].
inline std::optional<int> bfs_from_integer(i64 k, const Fraction& x, i64 max_den) {
    const Small target = small_of(Slope(x));
    return farey_bfs({k, 1}, target, {k, 1}, target, false, max_den);
}

/// 2x2 integer matrix product oracle on plain int64.
struct M2 {
    i64 a, b, c, d;
    friend M2 operator*(const M2& x, const M2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

/// All u in (0, p) with u*q - p*v = 1 for some integer v.
inline std::vector<std::pair<i64, i64>> scan_boundary_uv(i64 q, i64 p) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 u = 1; u < p; ++u) {
        if ((u * q - 1) % p == 0) {
            out.emplace_back(u, (u * q - 1) / p);
        }
    }
    return out;
}

/// All u in (0, p) with p*v - q*u = 1.
inline std::vector<std::pair<i64, i64>> scan_negative_uv(i64 q, i64 p) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 u = 1; u < p; ++u) {
        if ((1 + q * u) % p == 0) {
            out.emplace_back(u, (1 + q * u) / p);
        }
    }
    return out;
}

/// Component-factorization count for C1a: outer layers x solid tori x shuffles.
inline BigInt factorized_case1a(const Fraction& r1, const Fraction& r2, const Fraction& s) {
    const NegCF c1 = neg_cf(r1), c2 = neg_cf(r2);
    return outer_layer_count(c1) * outer_layer_count(c2) * solid_torus_count(c1, 1) * solid_torus_count(c2, 1) *
           shuffle_count(block_profile_case(ProfileKind::OuterInfinity, slope_coefficients(s)));
}

/// Component-factorization count for C4.
inline BigInt factorized_case4(const Fraction& r1, const Fraction& r2, const Fraction& s) {
    return s.floor() * solid_torus_count(neg_cf(r1), 0) * solid_torus_count(neg_cf(r2), 0) *
           shuffle_count(block_profile_case(ProfileKind::IntegerFloor, slope_coefficients(s)));
}

/// Brute-force obstruction check for fixed k over h_i in [-k-3, 0].
inline bool brute_force_witness(const Fraction& c1, const Fraction& c2, const Fraction& c3, i64 k) {
    const std::array<const Fraction*, 3> cs{&c1, &c2, &c3};
    for (i64 h1 = -k - 3; h1 <= 0; ++h1) {
        for (i64 h2 = -k - 3; h2 <= 0; ++h2) {
            const i64 h3 = -k - 1 - h1 - h2;
            if (h3 < -k - 3 || h3 > 0) {
                continue;
            }
            const std::array<i64, 3> h{h1, h2, h3};
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                ok = Fraction(h[i], k) < *cs[i];
            }
            if (ok) {
                return true;
            }
        }
    }
    return false;
}

/// Random reduced fraction with denominator in [1, max_den], lying in [lo, hi).
inline Fraction random_fraction(std::mt19937_64& rng, i64 max_den, const Fraction& lo, const Fraction& hi) {
    std::uniform_int_distribution<i64> den_dist(1, max_den);
    for (;;) {
        const i64 d = den_dist(rng);
        const i64 nlo = static_cast<i64>((lo * Fraction(d)).ceil());
        const i64 nhi = static_cast<i64>((hi * Fraction(d)).ceil()) - 1;
        if (nhi < nlo) {
            continue;
        }
        std::uniform_int_distribution<i64> num_dist(nlo, nhi);
        Fraction f(num_dist(rng), d);
        if (f >= lo && f < hi) {
            return f;
        }
    }
}

/// Every reduced b/a in [0, 1) with a <= max_den.
inline std::vector<std::pair<i64, i64>> fractional_parts(i64 max_den) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 a = 1; a <= max_den; ++a) {
        for (i64 b = 0; b < a; ++b) {
            if (std::gcd(a, b) == 1) {
                out.emplace_back(b, a);
            }
        }
    }
    return out;
}

} // namespace tcs::oracle
