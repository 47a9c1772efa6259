#include "amideal/corpus.hpp"

#include <algorithm>
#include <mutex>

#include "amideal/errors.hpp"
#include "amideal/logenc.hpp"

namespace amideal {
namespace {

using detail::SeqImpl;

Rat q_over(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int int_pow2(unsigned long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

Int to_int(Index n) { return Int(static_cast<unsigned long>(n)); }

// Shared factorial tables.  k! overflows Index near k = 21, so block lookups
// work on Int; 70 entries cover every oracle cutoff used below.
const std::vector<Int>& fact_table() {
    static const std::vector<Int> t = [] {
        std::vector<Int> v(71);
        v[0] = 1;
        for (unsigned k = 1; k <= 70; ++k) v[k] = v[k - 1] * k;
        return v;
    }();
    return t;
}

// E[k] = (k!)^2 with E[0] := 0, so block k of ex220 is (E[k-1], E[k]].
const std::vector<Int>& fact_sq_table() {
    static const std::vector<Int> t = [] {
        std::vector<Int> v(47);
        v[0] = 0;
        for (unsigned k = 1; k <= 46; ++k) v[k] = fact_table()[k] * fact_table()[k];
        return v;
    }();
    return t;
}

unsigned k_ex220(Index j) {
    const auto& E = fact_sq_table();
    Int J = to_int(j);
    unsigned k = 1;
    while (E[k] < J) ++k;
    return k;
}

// k with k! <= j < (k+1)!.
unsigned k_ex38(Index j) {
    const auto& F = fact_table();
    Int J = to_int(j);
    unsigned k = 1;
    while (F[k + 1] <= J) ++k;
    return k;
}

// smallest k >= 2 with j <= k!.
unsigned k_ex315(Index j) {
    const auto& F = fact_table();
    Int J = to_int(j);
    unsigned k = 2;
    while (F[k] < J) ++k;
    return k;
}

// ---- exact harmonic numbers up to a fixed cutoff, ln-bounds beyond --------

constexpr unsigned long kHarmonicCutoff = 5039;  // 7! - 1; factorial blocks never straddle it

Rat harmonic_exact(unsigned long i) {
    static std::vector<Rat> H{Rat(0)};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (H.size() <= i) {
        Rat next = H.back() + Rat(1, static_cast<unsigned long>(H.size()));
        H.push_back(std::move(next));
    }
    return H[i];
}

// Bounds on sum_{a < j <= b} 1/j.
Interval harmonic_segment(const Int& a, const Int& b) {
    if (a > b) throw BadParams("harmonic segment reversed");
    if (a == b) return Interval(Rat(0));
    if (b <= kHarmonicCutoff) {
        unsigned long au = mpz_get_ui(a.get_mpz_t()), bu = mpz_get_ui(b.get_mpz_t());
        return Interval(harmonic_exact(bu) - harmonic_exact(au));
    }
    if (a < kHarmonicCutoff)
        return harmonic_segment(a, Int(kHarmonicCutoff)) +
               harmonic_segment(Int(kHarmonicCutoff), b);
    // integral comparison: ln((b+1)/(a+1)) <= sum <= ln(b/a)
    Interval lo = ln_enclosure_z(b + 1) - ln_enclosure_z(a + 1);
    Interval hi = ln_enclosure_z(b) - ln_enclosure_z(a);
    return Interval(lo.lo, hi.hi);
}

// ---- closed-form tails for the factorial-block examples --------------------

Interval ex38_tail(Index n) {
    const auto& F = fact_table();
    if (n == 0) return Interval(Rat(1)) + ex38_tail(1);
    unsigned k = k_ex38(n);
    Interval acc = harmonic_segment(to_int(n), F[k + 1] - 1).scale(q_over(Int(1), F[k]));
    unsigned K = k + 40;
    for (unsigned m = k + 1; m <= K; ++m)
        acc += harmonic_segment(F[m] - 1, F[m + 1] - 1).scale(q_over(Int(1), F[m]));
    // each block m > K contributes at most ln(2(m+1))/m! <= 1/(m-1)!
    acc += Interval(Rat(0), q_over(Int(2), F[K]));
    return acc;
}

Interval ex315_tail(Index n) {
    const auto& F = fact_table();
    if (n == 0) return Interval(Rat(1, 8)) + ex315_tail(1);
    unsigned k = k_ex315(n);
    Rat acc = q_over(F[k] - to_int(n), int_pow2(k) * F[k]);  // rest of the current block
    unsigned K = k + 48;
    for (unsigned m = k + 1; m <= K; ++m)
        acc += q_over(F[m] - F[m - 1], int_pow2(m) * F[m]);
    return Interval(acc, acc + q_over(Int(1), int_pow2(K)));  // later blocks sum below 2^-K
}

// -------------------------------------------------------------------- atoms

Seq make_omega() {
    SeqImpl im;
    im.name = "omega";
    im.atom = "omega";
    im.traits = cone_traits(Tri::no);
    im.eval = [](Index n) { return Interval(Rat(1, static_cast<unsigned long>(n))); };
    im.ratio_tail_sup = [](Index) { return Interval(Rat(1)); };
    im.ratio_tail_inf = [](Index) { return Interval(Rat(1)); };
    return Seq::make(std::move(im));
}

Seq make_const(const Rat& c) {
    if (c < 0) throw BadParams("const requires c >= 0");
    SeqImpl im;
    im.name = "const(" + to_string(c) + ")";
    im.atom = "const";
    Tri zero = (c == 0) ? Tri::yes : Tri::no;
    im.traits = SeqTraits{Tri::yes, Tri::yes, zero, zero};
    im.eval = [c](Index) { return Interval(c); };
    im.tail_sup = [c](Index) { return Interval(c); };
    im.tail_inf = [c](Index) { return Interval(c); };
    im.partial_sum = [c](Index n) { return Interval(c * Rat(static_cast<unsigned long>(n))); };
    if (c == 0) {
        im.tail_sum = [](Index) { return Interval(Rat(0)); };
        im.ratio_tail_sup = [](Index) { return Interval(Rat(0)); };
    }
    im.ratio_tail_inf = [c](Index n) {
        return Interval(c * Rat(static_cast<unsigned long>(n == 0 ? 1 : n)));
    };
    return Seq::make(std::move(im));
}

Seq make_zeta(const Rat& param) {
    if (param.get_den() != 1 || param < 2 || param > 64)
        throw BadParams("zeta requires an integer exponent in [2, 64]");
    unsigned long p = mpz_get_ui(param.get_num().get_mpz_t());
    auto ipw = [](Index n, unsigned long e) {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), e);
        return r;
    };
    SeqImpl im;
    im.name = "zeta(" + std::to_string(p) + ")";
    im.atom = "zeta";
    im.traits = cone_traits(Tri::yes);
    im.eval = [p, ipw](Index n) { return Interval(q_over(Int(1), ipw(n, p))); };
    im.tail_sum = [p, ipw](Index n) {
        if (n == 0)
            return Interval(Rat(1) + q_over(Int(1), to_int(p - 1) * ipw(2, p - 1)),
                            Rat(1) + q_over(Int(1), to_int(p - 1)));
        // integral comparison around <j^-p>
        return Interval(q_over(Int(1), to_int(p - 1) * ipw(n + 1, p - 1)),
                        q_over(Int(1), to_int(p - 1) * ipw(n, p - 1)));
    };
    im.ratio_tail_sup = [p, ipw](Index n) {
        return Interval(q_over(Int(1), ipw(n == 0 ? 1 : n, p - 1)));
    };
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    return Seq::make(std::move(im));
}

Seq make_geometric(const Rat& q) {
    if (q <= 0 || q >= 1) throw BadParams("geometric requires 0 < q < 1");
    SeqImpl im;
    im.name = "geometric(" + to_string(q) + ")";
    im.atom = "geometric";
    im.traits = cone_traits(Tri::yes);
    im.eval = [q](Index n) { return Interval(pow_int(q, static_cast<long>(n))); };
    Rat gfac = Rat(1) / (Rat(1) - q);  // sum_{j>n} q^j = q^{n+1}/(1-q)
    im.tail_sum = [q, gfac](Index n) {
        return Interval(pow_int(q, static_cast<long>(n + 1)) * gfac);
    };
    im.partial_sum = [q, gfac](Index n) {
        return Interval((q - pow_int(q, static_cast<long>(n + 1))) * gfac);
    };
    // i*q^i is unimodal with its peak near q/(1-q); wire the sup oracle only
    // when that peak sits at a small index.
    Int pk = floor_rat(q / (Rat(1) - q)) + 1;
    if (pk <= 1000000) {
        Index nstar = mpz_get_ui(pk.get_mpz_t());
        im.ratio_tail_sup = [q, nstar](Index n) {
            if (n == 0) n = 1;
            Rat best(0);
            for (Index i : {nstar > 1 ? nstar - 1 : nstar, nstar, nstar + 1}) {
                Index j = std::max(n, i);
                best = rat_max(best,
                               Rat(static_cast<unsigned long>(j)) * pow_int(q, static_cast<long>(j)));
            }
            return Interval(best);
        };
    }
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    return Seq::make(std::move(im));
}

Seq make_omlog(const Rat& param) {
    if (param.get_den() != 1 || param < 0 || param > 64)
        throw BadParams("omlog requires an integer power in [0, 64]");
    unsigned m = static_cast<unsigned>(mpz_get_ui(param.get_num().get_mpz_t()));
    if (m == 0) return make_omega();
    SeqImpl im;
    im.name = "omlog(" + std::to_string(m) + ")";
    im.atom = "omlog";
    // ln(n+1)/n is nonincreasing; for m >= 2 the sequence rises at the start.
    im.traits.nonincreasing = (m == 1) ? Tri::yes : Tri::no;
    im.traits.nonnegative = Tri::yes;
    im.traits.null = Tri::yes;
    im.traits.summable = Tri::no;
    im.exact = false;
    im.eval = [m](Index n) {
        return ln_pow_enclosure(n + 1, m).scale(Rat(1, static_cast<unsigned long>(n)));
    };
    return Seq::make(std::move(im));
}

// -------- factorial-block examples ------------------------------------------

// value 1/k! on block (E[k-1], E[k]], E[k] = (k!)^2
Seq make_ex220() {
    SeqImpl im;
    im.name = "ex220";
    im.atom = "ex220";
    im.traits = cone_traits(Tri::no);
    im.eval = [](Index j) { return Interval(q_over(Int(1), fact_table()[k_ex220(j)])); };
    im.partial_sum = [](Index n) {
        const auto& E = fact_sq_table();
        const auto& F = fact_table();
        unsigned k = k_ex220(n);
        Rat acc(0);
        for (unsigned m = 1; m < k; ++m) acc += q_over(E[m] - E[m - 1], F[m]);
        acc += q_over(to_int(n) - E[k - 1], F[k]);
        return Interval(acc);
    };
    im.ratio_tail_inf = [](Index n) {
        if (n == 0) n = 1;
        const auto& E = fact_sq_table();
        const auto& F = fact_table();
        unsigned k = k_ex220(n);
        // In-block the ratio j/k! rises, so the minimum over the tail is at the
        // current index or at the first index of a later block; those block
        // minima (E[m-1]+1)/m! increase once m >= 3.
        Rat best = q_over(to_int(n), F[k]);
        for (unsigned m = k + 1; m <= std::max(k + 4, 4u); ++m)
            best = rat_min(best, q_over(E[m - 1] + 1, F[m]));
        return Interval(best);
    };
    return Seq::make(std::move(im));
}

// value 1/(j*k!) on k! <= j < (k+1)!; the k = 1 block covers j = 1 alone.
Seq make_ex38() {
    SeqImpl im;
    im.name = "ex38";
    im.atom = "ex38";
    im.traits = cone_traits(Tri::yes);
    im.eval = [](Index j) {
        return Interval(q_over(Int(1), to_int(j) * fact_table()[k_ex38(j)]));
    };
    im.ratio_tail_sup = [](Index n) {
        if (n == 0) n = 1;
        return Interval(q_over(Int(1), fact_table()[k_ex38(n)]));
    };
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    im.tail_sum = ex38_tail;
    return Seq::make(std::move(im));
}

// value 1/(2^k k!) on (k-1)! < j <= k! for k >= 2, with xi_1 := 1/8.
Seq make_ex315() {
    SeqImpl im;
    im.name = "ex315";
    im.atom = "ex315";
    im.traits = cone_traits(Tri::yes);
    im.eval = [](Index j) {
        unsigned k = k_ex315(j);
        return Interval(q_over(Int(1), int_pow2(k) * fact_table()[k]));
    };
    im.ratio_tail_sup = [](Index n) {
        if (n == 0) n = 1;
        return Interval(q_over(Int(1), int_pow2(k_ex315(n))));
    };
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    im.tail_sum = ex315_tail;
    return Seq::make(std::move(im));
}

// -------- doubling-block pair ------------------------------------------------

// n_k = 2^(2^k); Int beyond k = 5.  Blocks (n_{k-1}, n_k] with n_0 = 0 read as
// block 1 = [1, 4].
const std::vector<Int>& min24_ends() {
    static const std::vector<Int> t = [] {
        std::vector<Int> v(8);
        v[0] = 0;
        for (unsigned k = 1; k <= 7; ++k) v[k] = int_pow2(1UL << k);
        return v;
    }();
    return t;
}

unsigned k_min24(Index j) {
    const auto& N = min24_ends();
    Int J = to_int(j);
    unsigned k = 1;
    while (N[k] < J) ++k;  // n_7 = 2^128 exceeds every machine index
    return k;
}

Int min24_end_checked(unsigned k) {
    if (k > 26) throw BadParams("ex24min block index too large");
    if (k <= 7) return min24_ends()[k];
    return int_pow2(1UL << k);
}

Rat min24_value(char which, unsigned k) {
    Int nk = min24_end_checked(k);
    bool big = (which == 'a') ? (k % 2 == 1) : (k % 2 == 0);
    return big ? q_over(Int(1), nk) : q_over(Int(1), nk * nk);
}

Seq make_ex24min(char which) {
    SeqImpl im;
    im.name = std::string("ex24min_") + which;
    im.atom = im.name;
    im.traits = cone_traits(Tri::no);
    im.eval = [which](Index j) { return Interval(min24_value(which, k_min24(j))); };
    im.partial_sum = [which](Index n) {
        const auto& N = min24_ends();
        unsigned k = k_min24(n);
        Rat acc(0);
        for (unsigned m = 1; m < k; ++m) acc += Rat(N[m] - N[m - 1]) * min24_value(which, m);
        acc += Rat(to_int(n) - N[k - 1]) * min24_value(which, k);
        return Interval(acc);
    };
    // every later odd (for a) or even (for b) block ends with ratio j*s_j = 1
    im.ratio_tail_sup = [](Index) { return Interval(Rat(1)); };
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    return Seq::make(std::move(im));
}

// -------- exact splitting of omega -------------------------------------------

struct SplitTable {
    std::mutex mutex;
    std::vector<SplitPhase> phases;  // phases[k-1] = {m_k, h_k}
};

SplitTable& split_table() {
    static SplitTable t;
    return t;
}

// Extend to phase k.  Phase 1 holds h_1 = 1/4 (the j = 1 split is 3/4 + 1/4);
// each phase ends just before the decreasing partner, omega_j - h_k, would
// drop under delta_k * omega_j with delta_k = 4^-k, and the value reached at
// the phase end becomes the next held constant.
void split_extend(std::vector<SplitPhase>& ph, unsigned k) {
    if (ph.empty()) {
        Rat h(1, 4);
        Int m = floor_rat((Rat(1) - Rat(1, 4)) / h);  // ceil((1-delta)/h) below
        if (Rat(m) * h < Rat(1) - Rat(1, 4)) m += 1;
        if (Rat(m) * h >= 1) m -= 1;
        ph.push_back(SplitPhase{m, h});
    }
    while (ph.size() < k) {
        unsigned next = static_cast<unsigned>(ph.size()) + 1;
        const SplitPhase& prev = ph.back();
        Rat h = q_over(Int(1), prev.end) - prev.held;
        if (h <= 0) throw BadParams("split schedule degenerated");
        Rat delta = q_over(Int(1), int_pow2(2 * next));
        Rat target = (Rat(1) - delta) / h;
        Int m = floor_rat(target);
        if (Rat(m) < target) m += 1;
        if (Rat(m) * h >= 1) m -= 1;
        if (m <= prev.end) m = prev.end + 1;
        ph.push_back(SplitPhase{m, h});
    }
}

// phase index and held value covering j >= 2
SplitPhase split_phase_for(const Int& j, unsigned& k_out) {
    SplitTable& t = split_table();
    std::lock_guard<std::mutex> lock(t.mutex);
    unsigned k = 1;
    split_extend(t.phases, 1);
    while (t.phases[k - 1].end < j) {
        ++k;
        split_extend(t.phases, k);
    }
    k_out = k;
    return t.phases[k - 1];
}

Seq make_ex24split(char which) {
    SeqImpl im;
    im.name = std::string("ex24split_") + which;
    im.atom = im.name;
    im.traits = cone_traits(Tri::no);
    im.eval = [which](Index j) {
        if (j == 1) return Interval(which == 'a' ? Rat(3, 4) : Rat(1, 4));
        unsigned k = 0;
        SplitPhase ph = split_phase_for(to_int(j), k);
        bool held = (which == 'a') ? (k % 2 == 0) : (k % 2 == 1);
        if (held) return Interval(ph.held);
        return Interval(Rat(1, static_cast<unsigned long>(j)) - ph.held);
    };
    // at each phase end the starved partner equals roughly 4^-k * omega
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    return Seq::make(std::move(im));
}

// -------- remaining atoms ----------------------------------------------------

Seq make_ex415eta() {
    SeqImpl im;
    im.name = "ex415eta";
    im.atom = "ex415eta";
    im.traits = cone_traits(Tri::yes);
    auto term = [](Index j) {
        Int d = to_int(j) * to_int(j);
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(j));
        return q_over(Int(1), d * p);
    };
    im.eval = [term](Index n) { return Interval(term(n)); };
    im.tail_sum = [term](Index n) {
        Rat acc(0);
        for (Index j = n + 1; j <= n + 30; ++j) acc += term(j);
        // remainder: sum_{j > n+30} <= (1/(n+31)^2) * 3^{-(n+31)} * 3/2
        Index r = n + 31;
        Int d = to_int(r) * to_int(r);
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(r));
        Rat rem = Rat(3, 2) * q_over(Int(1), d * p);
        return Interval(acc, acc + rem);
    };
    im.ratio_tail_sup = [](Index n) {
        if (n == 0) n = 1;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
        return Interval(q_over(Int(1), to_int(n) * p));
    };
    im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    return Seq::make(std::move(im));
}

}  // namespace

Seq pow3_seq() {
    SeqImpl im;
    im.name = "pow3";
    im.atom = "pow3";
    im.traits = SeqTraits{Tri::no, Tri::yes, Tri::no, Tri::no};
    im.eval = [](Index n) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
        return Interval(Rat(p));
    };
    return Seq::make(std::move(im));
}

Seq isqrt_seq() {
    SeqImpl im;
    im.name = "isqrt";
    im.traits = cone_traits(Tri::no);
    im.eval = [](Index n) {
        return Interval(Rat(1, static_cast<unsigned long>(ceil_sqrt(n))));
    };
    return Seq::make(std::move(im));
}

Int ex24min_block_end(unsigned k) { return k == 0 ? Int(0) : min24_end_checked(k); }

Rat ex24min_partial_at_block(char which, unsigned K) {
    if (which != 'a' && which != 'b') throw BadParams("which must be a or b");
    Rat acc(0);
    Int prev(0);
    for (unsigned k = 1; k <= K; ++k) {
        Int nk = min24_end_checked(k);
        acc += Rat(nk - prev) * min24_value(which, k);
        prev = nk;
    }
    return acc;
}

Interval ex24min_min_total(unsigned K) {
    Rat acc(0);
    Int prev(0);
    for (unsigned k = 1; k <= K; ++k) {
        Int nk = min24_end_checked(k);
        acc += q_over(nk - prev, nk * nk);  // min(a,b) = 1/n_k^2 on block k
        prev = nk;
    }
    // tail: sum_{k>K} (n_k - n_{k-1})/n_k^2 < sum_{k>K} 1/n_k < 2/n_{K+1}
    Rat rem = Rat(2) * q_over(Int(1), min24_end_checked(K + 1));
    return Interval(acc, acc + rem);
}

SplitPhase ex24split_phase(unsigned k) {
    if (k == 0) throw BadParams("phases are 1-indexed");
    SplitTable& t = split_table();
    std::lock_guard<std::mutex> lock(t.mutex);
    split_extend(t.phases, k);
    return t.phases[k - 1];
}

std::vector<std::string> corpus_names() {
    return {"omega",      "const",       "zeta",        "geometric",   "omlog",
            "ex220",      "ex38",        "ex315",       "ex24min_a",   "ex24min_b",
            "ex24split_a", "ex24split_b", "ex415eta",    "e1"};
}

Seq corpus_seq(const std::string& name, const std::vector<Rat>& params) {
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw BadParams(name + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (name == "omega") { want(0); return make_omega(); }
    if (name == "const") { want(1); return make_const(params[0]); }
    if (name == "zeta") { want(1); return make_zeta(params[0]); }
    if (name == "geometric") { want(1); return make_geometric(params[0]); }
    if (name == "omlog") { want(1); return make_omlog(params[0]); }
    if (name == "ex220") { want(0); return make_ex220(); }
    if (name == "ex38") { want(0); return make_ex38(); }
    if (name == "ex315") { want(0); return make_ex315(); }
    if (name == "ex24min_a") { want(0); return make_ex24min('a'); }
    if (name == "ex24min_b") { want(0); return make_ex24min('b'); }
    if (name == "ex24split_a") { want(0); return make_ex24split('a'); }
    if (name == "ex24split_b") { want(0); return make_ex24split('b'); }
    if (name == "ex415eta") { want(0); return make_ex415eta(); }
    if (name == "e1") { want(0); return finite_support_seq({Rat(1)}, "e1", "e1"); }
    throw UnknownName(name);
}

}  // namespace amideal
