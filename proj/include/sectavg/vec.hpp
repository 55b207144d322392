#pragma once

#include <array>
#include <string>

#include "sectavg/rational.hpp"

namespace sectavg {

// Point or direction with exact coordinates. dim is 2 or 3; in the 2D case
// the third coordinate is kept at zero so storage is uniform.
struct Vec {
    int dim = 3;
    std::array<Rat, 3> c{};

    Vec() = default;
    Vec(Rat x, Rat y) : dim(2), c{std::move(x), std::move(y), Rat(0)} {}
    Vec(Rat x, Rat y, Rat z) : dim(3), c{std::move(x), std::move(y), std::move(z)} {}

    static Vec zero(int dim) { return dim == 2 ? Vec(Rat(0), Rat(0)) : Vec(Rat(0), Rat(0), Rat(0)); }

    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (int i = 0; i < dim; ++i)
            if (c[static_cast<size_t>(i)] != 0) return false;
        return true;
    }

    bool operator==(const Vec& o) const { return dim == o.dim && c == o.c; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
    // lexicographic, used for canonical vertex ordering
    bool operator<(const Vec& o) const { return c < o.c; }
};

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] += b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] -= b[i];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] = -r[i];
    return r;
}

inline Vec operator*(const Rat& s, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] *= s;
    return r;
}

inline Rat dot(const Vec& a, const Vec& b) {
    Rat r(0);
    for (int i = 0; i < a.dim; ++i) r += a[i] * b[i];
    return r;
}

inline Vec cross(const Vec& a, const Vec& b) {
    return Vec(a[1] * b[2] - a[2] * b[1],
               a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]);
}

// scalar cross product of two 2D vectors
inline Rat cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline bool parallel(const Vec& a, const Vec& b) {
    if (a.dim == 2) return cross2(a, b) == 0;
    return cross(a, b).is_zero();
}

inline std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (int i = 0; i < v.dim; ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

// Integer vector; the canonical representative of rational directions.
using IVec = std::array<Int, 3>;

// clears denominators: returns the unique integer vector L*v with L = lcm of
// the coordinate denominators (no gcd reduction)
inline IVec scale_to_integer(const Vec& v) {
    Int l(1);
    for (int i = 0; i < v.dim; ++i) l = lcm(l, rat_den(v[i]));
    IVec r{Int(0), Int(0), Int(0)};
    for (int i = 0; i < v.dim; ++i) r[static_cast<size_t>(i)] = rat_num(v[i]) * (l / rat_den(v[i]));
    return r;
}

inline IVec reduce_gcd(IVec v) {
    Int g(0);
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

// Unique key for the line through the origin spanned by v: coprime integer
// coordinates with the first nonzero one positive. Throws on the zero vector.
inline IVec canonical_line_direction(const Vec& v) {
    if (v.is_zero()) throw ZeroDirection("canonical direction of zero vector");
    IVec r = reduce_gcd(scale_to_integer(v));
    for (const Int& x : r) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : r) y = -y;
        break;
    }
    return r;
}

// True when the canonicalization above had to flip the sign.
inline bool canonical_flips_sign(const Vec& v) {
    IVec s = scale_to_integer(v);
    for (const Int& x : s) {
        if (x == 0) continue;
        return x < 0;
    }
    throw ZeroDirection("canonical direction of zero vector");
}

} // namespace sectavg
