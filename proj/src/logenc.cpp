#include "amideal/logenc.hpp"

#include <mpfr.h>

#include <mutex>
#include <unordered_map>

namespace amideal {
namespace {

constexpr mpfr_prec_t kPrec = 192;  // working precision; leaves ≥160 fractional bits for ln(k), k ≤ 2^30-ish

Rat mpfr_to_rat(mpfr_t x) {
    if (mpfr_zero_p(x)) return Rat(0);
    Int z;
    mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);  // x = z * 2^e exactly
    Rat r(z);
    if (e >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rat(p);
    } else {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rat(p);
    }
    return r;
}

std::mutex g_mutex;
std::unordered_map<Index, Interval> g_cache;

}  // namespace

Interval ln_enclosure(Index k) {
    if (k == 0) throw BadParams("ln(0)");
    if (k == 1) return Interval(Rat(0));
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_cache.find(k);
        if (it != g_cache.end()) return it->second;
    }
    mpfr_t x, r;
    mpfr_init2(x, kPrec);
    mpfr_init2(r, kPrec);
    mpfr_set_ui(x, static_cast<unsigned long>(k), MPFR_RNDN);  // exact for k < 2^192
    mpfr_log(r, x, MPFR_RNDD);
    Rat lo = mpfr_to_rat(r);
    mpfr_log(r, x, MPFR_RNDU);
    Rat hi = mpfr_to_rat(r);
    mpfr_clear(x);
    mpfr_clear(r);
    Interval I(std::move(lo), std::move(hi));
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache.emplace(k, I);
    return I;
}

Interval ln_enclosure_z(const Int& k) {
    if (k <= 0) throw BadParams("ln of a nonpositive integer");
    if (k == 1) return Interval(Rat(0));
    if (mpz_fits_ulong_p(k.get_mpz_t())) return ln_enclosure(mpz_get_ui(k.get_mpz_t()));
    // ln(k) can itself be large; pad the precision so the fractional part keeps
    // at least LOG_FRACTIONAL_BITS bits for any argument below 2^(2^64).
    mpfr_t x, r;
    mpfr_init2(x, LOG_FRACTIONAL_BITS + 80);
    mpfr_init2(r, LOG_FRACTIONAL_BITS + 80);
    mpfr_set_z(x, k.get_mpz_t(), MPFR_RNDD);
    mpfr_log(r, x, MPFR_RNDD);
    Rat lo = mpfr_to_rat(r);
    mpfr_set_z(x, k.get_mpz_t(), MPFR_RNDU);
    mpfr_log(r, x, MPFR_RNDU);
    Rat hi = mpfr_to_rat(r);
    mpfr_clear(x);
    mpfr_clear(r);
    return Interval(std::move(lo), std::move(hi));
}

Interval ln_pow_enclosure(Index k, unsigned m) {
    if (m == 0) return Interval(Rat(1));
    Interval l = ln_enclosure(k);
    return ipow_int(l, static_cast<long>(m));
}

}  // namespace amideal
