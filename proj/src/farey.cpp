#include "tcs/farey.hpp"

#include "tcs/errors.hpp"
#include "tcs/gluing.hpp"

namespace tcs {

namespace {

BigInt cross(const Vec2& a, const Vec2& b) {
    return a.x * b.y - a.y * b.x;
}

BigInt abs_value(const BigInt& v) {
    return v < 0 ? BigInt(-v) : v;
}

// Orientation-preserving change of coordinates sending `s` to infinity.
GluingMatrix send_to_infinity(const Slope& s) {
    if (s.is_infinite()) {
        return GluingMatrix::identity();
    }
    // s = (x, y) = (q, p); first row (-p, q) kills it, second row (c, d)
    // needs -p*d - q*c = 1.
    const Vec2 v = s.vector();
    const Bezout e = extended_gcd(v.x, v.y);  // x*e.x + y*e.y = 1
    return {-v.y, v.x, -e.x, -e.y};
}

} // namespace

bool is_farey_edge(const Slope& s1, const Slope& s2) {
    if (s1 == s2) {
        throw InputError("is_farey_edge expects distinct slopes");
    }
    return abs_value(cross(s1.vector(), s2.vector())) == 1;
}

FareyPath farey_shortest_path(const Slope& from, const Slope& to) {
    FareyPath path{{from}};
    if (from == to) {
        return path;
    }
    // `coords` maps original vectors to the current frame, in which the
    // last vertex sits at infinity and the remaining arc is [-inf, x].
    GluingMatrix coords = send_to_infinity(from);
    Slope target = act_on_slope(coords, to);
    for (;;) {
        const Fraction& x = target.value();
        const BigInt k = x.floor();
        path.vertices.push_back(act_on_slope(coords.inverse(), Slope(Fraction(k))));
        if (x.is_integer()) {
            break;
        }
        // z -> -1/(z - k) sends k to infinity and [k, x] to [-inf, x'].
        const GluingMatrix step(-k, 1, -1, 0);
        coords = step * coords;
        target = act_on_slope(step, target);
    }
    if (path.vertices.back() != to) {
        throw InternalError("farey path does not end at " + to.str());
    }
    return path;
}

bool is_valid_farey_path(const FareyPath& path) {
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Slope& a = path.vertices[i];
        const Slope& b = path.vertices[i + 1];
        if (a == b || !is_farey_edge(a, b)) {
            return false;
        }
    }
    return !path.vertices.empty();
}

BigInt BlockProfile::total() const {
    BigInt sum = 0;
    for (const auto& s : sizes) {
        sum += s;
    }
    return sum;
}

BlockProfile block_profile_case(ProfileKind kind, const PosCF& cf) {
    const auto c = cf.coefficients();
    const std::size_t m = c.size();
    BlockProfile profile;
    profile.sizes.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        BigInt size;
        if (j + 1 == m) {
            size = c[j] - 1;
        } else if (j == 0) {
            size = kind == ProfileKind::OuterInfinity ? BigInt(c[j] - 1) : BigInt(c[j] - 2);
        } else {
            size = c[j] - 2;
        }
        profile.sizes.push_back(std::move(size));
    }
    return profile;
}

BigInt shuffle_count(const BlockProfile& profile) {
    BigInt product = 1;
    for (const auto& s : profile.sizes) {
        product *= s + 1;
    }
    return product;
}

BigInt solid_torus_count(const NegCF& cf, std::size_t from_index) {
    if (from_index > cf.size()) {
        throw InputError("solid_torus_count start index past the end");
    }
    BigInt product = 1;
    const auto c = cf.coefficients();
    for (std::size_t j = from_index; j < c.size(); ++j) {
        product *= abs_value(c[j] + 1);
    }
    return product;
}

BigInt outer_layer_count(const NegCF& cf) {
    return abs_value(cf[0]);
}

} // namespace tcs
