#pragma once

#include <string>

#include "amideal/rat.hpp"

namespace amideal {

// Three-valued answer for comparisons between overlapping intervals.
enum class Tri { no, yes, unknown };

// Closed interval with exact rational endpoints.  A "point" interval
// (lo == hi) represents an exactly known value.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const Rat& v) : lo(v), hi(v) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw BadParams("interval endpoints out of order");
    }

    static Interval point(const Rat& v) { return Interval(v); }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }

    // The exact value of a point interval.
    const Rat& value() const {
        if (!is_point()) throw BadParams("interval is not a point");
        return lo;
    }

    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
    Interval operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }
    Interval operator*(const Interval& o) const;
    // Division requires 0 ∉ o.
    Interval operator/(const Interval& o) const;

    Interval& operator+=(const Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }

    Interval scale(const Rat& c) const {
        return c >= 0 ? Interval(lo * c, hi * c) : Interval(hi * c, lo * c);
    }
};

Interval imin(const Interval& a, const Interval& b);
Interval imax(const Interval& a, const Interval& b);
Interval ipow_int(const Interval& a, long e);  // requires a.lo ≥ 0 when e could split monotonicity

// Enclosing interval whose endpoints have denominator 2^frac_bits.  Keeps
// long-running accumulators cheap without giving up certified bounds.
Interval round_outward(const Interval& a, unsigned frac_bits = 128);

// Certified comparisons: `yes`/`no` only when every pair of realizations agrees.
inline Tri cmp_le(const Interval& a, const Interval& b) {
    if (a.hi <= b.lo) return Tri::yes;
    if (a.lo > b.hi) return Tri::no;
    return Tri::unknown;
}
inline Tri cmp_lt(const Interval& a, const Interval& b) {
    if (a.hi < b.lo) return Tri::yes;
    if (a.lo >= b.hi) return Tri::no;
    return Tri::unknown;
}
inline Tri cmp_ge(const Interval& a, const Interval& b) { return cmp_le(b, a); }
inline Tri cmp_gt(const Interval& a, const Interval& b) { return cmp_lt(b, a); }

inline bool surely(Tri t) { return t == Tri::yes; }

std::string to_string(const Interval& I);

// Enclosure of x^(1/b) for x ≥ 0, b ≥ 1, with width ≤ 2^−frac_bits.
Interval root_enclosure(const Rat& x, unsigned long b, unsigned frac_bits);

// Enclosure of x^p for x ≥ 0 and rational p (exact when p is an integer).
Interval rat_pow(const Rat& x, const Rat& p, unsigned frac_bits = 128);

// Monotone extension to interval bases (x.lo ≥ 0, p > 0).
Interval ipow(const Interval& x, const Rat& p, unsigned frac_bits = 128);

}  // namespace amideal
