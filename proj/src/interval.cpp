#include "amideal/interval.hpp"

#include <algorithm>

namespace amideal {

Interval Interval::operator*(const Interval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return Interval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

Interval Interval::operator/(const Interval& o) const {
    if (o.lo <= 0 && o.hi >= 0) throw BadParams("interval division by an interval containing 0");
    Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return Interval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

Interval imin(const Interval& a, const Interval& b) {
    return Interval(rat_min(a.lo, b.lo), rat_min(a.hi, b.hi));
}

Interval imax(const Interval& a, const Interval& b) {
    return Interval(rat_max(a.lo, b.lo), rat_max(a.hi, b.hi));
}

Interval ipow_int(const Interval& a, long e) {
    if (e == 0) return Interval(Rat(1));
    if (a.lo < 0) throw BadParams("interval power with negative base");
    if (e > 0) return Interval(pow_int(a.lo, e), pow_int(a.hi, e));
    if (a.lo == 0) throw BadParams("negative power of an interval containing 0");
    return Interval(pow_int(a.hi, e), pow_int(a.lo, e));
}

std::string to_string(const Interval& I) {
    if (I.is_point()) return to_string(I.lo);
    return "[" + to_string(I.lo) + ", " + to_string(I.hi) + "]";
}

Interval root_enclosure(const Rat& x, unsigned long b, unsigned frac_bits) {
    if (x < 0) throw BadParams("root of a negative rational");
    if (b == 0) throw BadParams("zeroth root");
    if (b == 1 || x == 0) return Interval(x);
    // x = N/D.  T := N · D^(b−1) · 2^(bF); with r := ⌊T^(1/b)⌋ we get
    // r ≤ (N/D)^(1/b) · D · 2^F < r+1, hence x^(1/b) ∈ [r, r+1] / (D·2^F).
    const Int& N = x.get_num();
    const Int& D = x.get_den();
    Int T, Dp;
    mpz_pow_ui(Dp.get_mpz_t(), D.get_mpz_t(), b - 1);
    T = N * Dp;
    mpz_mul_2exp(T.get_mpz_t(), T.get_mpz_t(), static_cast<mp_bitcnt_t>(b) * frac_bits);
    Int r;
    int exact = mpz_root(r.get_mpz_t(), T.get_mpz_t(), b);
    Int denom = D;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), frac_bits);
    Rat lo(r, denom);
    lo.canonicalize();
    if (exact) return Interval(lo);
    Rat hi(r + 1, denom);
    hi.canonicalize();
    return Interval(lo, hi);
}

Interval rat_pow(const Rat& x, const Rat& p, unsigned frac_bits) {
    if (x < 0) throw BadParams("power of a negative base");
    if (x == 0) {
        if (p <= 0) throw BadParams("0 raised to a nonpositive power");
        return Interval(Rat(0));
    }
    const Int& a = p.get_num();
    const Int& b = p.get_den();
    if (!a.fits_slong_p() || !b.fits_ulong_p()) throw BadParams("exponent too large");
    Rat xa = pow_int(x, a.get_si());  // exact integer power (handles negative a)
    if (b == 1) return Interval(xa);
    return root_enclosure(xa, b.get_ui(), frac_bits);
}

Interval ipow(const Interval& x, const Rat& p, unsigned frac_bits) {
    if (x.lo < 0) throw BadParams("interval power with negative base");
    if (p <= 0) throw BadParams("ipow requires a positive exponent");
    if (x.is_point()) return rat_pow(x.lo, p, frac_bits);
    Interval lo = rat_pow(x.lo, p, frac_bits);
    Interval hi = rat_pow(x.hi, p, frac_bits);
    return Interval(lo.lo, hi.hi);  // t ↦ t^p is increasing for p > 0, t ≥ 0
}

Interval round_outward(const Interval& a, unsigned frac_bits) {
    Int scale = Int(1) << frac_bits;
    Rat lo(floor_rat(a.lo * scale));
    Rat hi(ceil_rat(a.hi * scale));
    lo /= scale;
    hi /= scale;
    lo.canonicalize();
    hi.canonicalize();
    return Interval(lo, hi);
}

}  // namespace amideal
