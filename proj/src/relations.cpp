#include "amideal/relations.hpp"

#include <algorithm>
#include <cmath>

namespace amideal {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::holds: return "holds";
        case Decision::fails: return "fails";
        default: return "indeterminate";
    }
}

namespace {

constexpr std::size_t kMaxIndices = 64;

void push_capped(std::vector<Index>& v, Index n) {
    if (v.size() == kMaxIndices) v.erase(v.begin());
    v.push_back(n);
}

// Pointwise ratio with the conventions used throughout: an exactly-zero
// numerator over an exactly-zero denominator counts as 0, any other zero in
// the denominator is an error.
Interval ratio_at(const Interval& num, const Interval& den, Index n) {
    if (den.lo <= 0 && den.hi >= 0) {
        if (den.is_point() && num.is_point() && num.lo == 0) return Interval(Rat(0));
        throw DivisionByZeroAtIndex(n);
    }
    return num / den;
}

std::string growth_note(const Interval& rm_full, const Interval& rm_half, Index last_inc) {
    return "running max " + to_string(rm_full) + " (half-window " + to_string(rm_half) +
           "), last raised at n=" + std::to_string(last_inc);
}

}  // namespace

Verdict big_o(const Seq& xi, const Seq& eta, const CheckConfig& cfg) {
    Verdict v;
    v.horizon = cfg.horizon;
    const Index N = cfg.horizon;
    if (N < 2 * cfg.n0 || N < 2) {
        v.note = "horizon too small for the stability statistics";
        return v;
    }
    const Index half = N / 2;

    // Checkpoints of the running max at N/2^B, ..., N/2, N for the
    // additive-creep test below.
    std::vector<Index> cp_at(cfg.B + 1);
    for (unsigned i = 0; i <= cfg.B; ++i) cp_at[i] = N >> (cfg.B - i);
    std::vector<Interval> cp(cfg.B + 1, Interval(Rat(0)));

    auto cx = xi.cursor();
    auto ce = eta.cursor();
    Interval all_max(Rat(0));  // sup of the ratio over [1, N]
    Interval rm(Rat(0));       // running max over [n0, N]
    Interval rm_half(Rat(0));  // its value at the half-window
    Index last_inc = cfg.n0;
    std::vector<Index> events;
    for (Index n = 1; n <= N; ++n) {
        Interval r = ratio_at(cx.next(), ce.next(), n);
        all_max = n == 1 ? r : imax(all_max, r);
        if (n < cfg.n0) continue;
        if (n == cfg.n0) {
            rm = r;
            push_capped(events, n);
        } else if (r.hi > rm.hi) {
            rm = imax(rm, r);
            last_inc = n;
            push_capped(events, n);
        }
        if (n == half) rm_half = rm;
        for (unsigned i = 0; i <= cfg.B; ++i)
            if (n == cp_at[i]) cp[i] = rm;
    }

    v.bound = all_max.hi;
    v.note = growth_note(rm, rm_half, last_inc);

    if (rm_half.hi == 0) {  // nothing observed in the first half
        if (rm.hi == 0) {
            v.decision = Decision::holds;
            return v;
        }
        if (rm.lo > 0) {
            v.decision = Decision::fails;
            v.indices = std::move(events);
            return v;
        }
        return v;
    }

    if (rm.lo > cfg.growth * rm_half.hi) {
        v.decision = Decision::fails;
        v.margin = rm.lo / rm_half.hi - cfg.growth;
        // report the raises that happened after the half-window
        for (Index e : events)
            if (e > half) push_capped(v.indices, e);
        if (v.indices.empty()) v.indices = std::move(events);
        return v;
    }

    // Additive creep: a bounded ratio's running max gains ever-smaller steps
    // per window doubling, while log-like growth gains a stable step each
    // time.  Persistent non-decaying positive steps across all B doublings
    // refute boundedness at this horizon.
    const Rat kCreepDecay(7, 8);
    if (cfg.B >= 2 && cp_at[0] >= cfg.n0 && last_inc > half) {
        bool creeping = true;
        Rat worst(0);
        bool have_worst = false;
        for (unsigned i = 0; creeping && i < cfg.B; ++i) {
            Interval inc = cp[i + 1] - cp[i];
            if (!(inc.lo > 0)) { creeping = false; break; }
            if (i > 0) {
                Interval prev = cp[i] - cp[i - 1];
                if (!(inc.lo >= kCreepDecay * prev.hi)) { creeping = false; break; }
                Rat q = inc.lo / prev.hi - kCreepDecay;
                if (!have_worst || q < worst) { worst = q; have_worst = true; }
            }
        }
        if (creeping) {
            v.decision = Decision::fails;
            v.margin = worst;
            for (Index e : events)
                if (e > half) push_capped(v.indices, e);
            if (v.indices.empty()) v.indices = std::move(events);
            v.note += "; max climbs by a non-decaying step each window doubling";
            return v;
        }
    }

    const Rat stab = 1 + (cfg.growth - 1) / 4;
    if (last_inc <= half) {
        v.decision = Decision::holds;
        v.margin = cfg.growth - (rm_half.lo > 0 ? rm.hi / rm_half.lo : Rat(1));
        v.indices.push_back(last_inc);
        return v;
    }
    if (rm_half.lo > 0 && rm.hi <= stab * rm_half.lo) {
        v.decision = Decision::holds;
        v.margin = cfg.growth - rm.hi / rm_half.lo;
        v.indices.push_back(last_inc);
        v.note += "; max still creeping but within the stability margin";
        return v;
    }
    v.indices = std::move(events);
    return v;
}

Verdict little_o(const Seq& xi, const Seq& eta, const CheckConfig& cfg) {
    Verdict v;
    v.horizon = cfg.horizon;
    const Index N = cfg.horizon;
    // the newest cfg.B dyadic windows (N/2^w, N/2^{w-1}] must fit above n0
    if (cfg.B < 2 || N >> cfg.B < std::max<Index>(cfg.n0, 1)) {
        v.note = "horizon too small for " + std::to_string(cfg.B) + " dyadic windows";
        return v;
    }

    std::vector<Index> bounds;  // window boundaries, oldest first
    for (unsigned w = 0; w <= cfg.B; ++w) bounds.push_back(N >> (cfg.B - w));

    auto cx = xi.cursor();
    auto ce = eta.cursor();
    std::vector<Interval> sups(cfg.B, Interval(Rat(0)));
    std::vector<Index> argmax(cfg.B, 0);
    for (Index n = 1; n <= N; ++n) {
        Interval r = ratio_at(cx.next(), ce.next(), n);
        if (n <= bounds[0]) continue;
        unsigned w = 0;
        while (n > bounds[w + 1]) ++w;  // window index, oldest = 0
        if (argmax[w] == 0 || r.hi > sups[w].hi) {
            sups[w] = argmax[w] == 0 ? r : imax(sups[w], r);
            argmax[w] = n;
        }
    }

    const Interval& last = sups[cfg.B - 1];
    const Interval& prev = sups[cfg.B - 2];
    v.bound = last.hi;
    v.note = "window suprema (oldest first):";
    for (const auto& s : sups) v.note += " " + to_string(s);

    // Shrink test at scale granularity: the recent half of the windows must
    // sit at or below the older half.  Per-window monotonicity is too
    // brittle -- one long block of the input can straddle several dyadic
    // windows while still rising towards its interior peak.
    const unsigned mid = cfg.B / 2;
    Interval older = sups[0];
    for (unsigned w = 1; w < mid; ++w) older = imax(older, sups[w]);
    Interval recent = sups[mid];
    for (unsigned w = mid + 1; w < cfg.B; ++w) recent = imax(recent, sups[w]);
    bool shrinking = recent.hi <= older.hi;
    if (last.hi < cfg.delta && shrinking) {
        v.decision = Decision::holds;
        v.margin = cfg.delta - last.hi;
        v.indices.push_back(argmax[cfg.B - 1]);
        return v;
    }
    if (last.lo >= cfg.delta && cfg.growth * last.lo >= prev.hi) {
        v.decision = Decision::fails;
        v.margin = last.lo - cfg.delta;
        v.indices.push_back(argmax[cfg.B - 1]);
        return v;
    }
    return v;
}

Verdict delta_half(const Seq& xi, const CheckConfig& cfg) {
    Verdict v = big_o(xi, seq_contract(2, xi), cfg);
    v.note = "sup xi_n/xi_2n; " + v.note;
    return v;
}

Verdict summable(const Seq& xi, const CheckConfig& cfg) {
    Verdict v;
    v.horizon = cfg.horizon;

    if (xi.traits().summable == Tri::yes && xi.has_tail_sum()) {
        v.decision = Decision::holds;
        v.bound = xi.tail_sum(0).hi;
        v.note = "certified by the tail oracle";
        return v;
    }
    if (xi.traits().summable == Tri::no) {
        v.decision = Decision::fails;
        v.note = "divergent by construction";
        return v;
    }

    const Index N = cfg.horizon;
    auto c = xi.cursor();
    Interval acc(Rat(0));
    Interval block(Rat(0));
    std::vector<Interval> blocks;  // sums over (2^{w-1}, 2^w]
    Index next_boundary = 1;
    Index sentinel_at = 0;
    for (Index n = 1; n <= N; ++n) {
        Interval val = c.next();
        if (val.hi < 0) throw BadParams("summable: negative entry at index " + std::to_string(n));
        acc = round_outward(acc + val);
        block = round_outward(block + val);
        if (sentinel_at == 0 && acc.lo > cfg.sentinel) sentinel_at = n;
        if (n == next_boundary) {
            blocks.push_back(block);
            block = Interval(Rat(0));
            next_boundary *= 2;
        }
    }

    v.bound = acc.hi;
    v.note = "partial sum " + to_string(acc) + " at n=" + std::to_string(N);

    const std::size_t K = blocks.size();
    // Resolution floor: block enclosures are rounded outward onto a 2^-128 grid
    // and each added term can widen the sum by one quantum, so blocks this small
    // are indistinguishable from zero and count as decayed.
    const Rat kBlockFloor = pow_int(Rat(1, 2), 96);
    bool decaying = K >= cfg.B + 1;
    for (std::size_t i = 0; decaying && i < cfg.B; ++i) {
        const Interval& newer = blocks[K - 1 - i];
        const Interval& older = blocks[K - 2 - i];
        if (newer.hi <= kBlockFloor) continue;
        if (!(newer.hi <= cfg.block_decay * older.lo)) decaying = false;
    }

    if (decaying) {
        v.decision = Decision::holds;
        // blocks beyond the window keep decaying by cfg.block_decay in this model
        Rat extrapolated = blocks[K - 1].hi * cfg.block_decay / (1 - cfg.block_decay);
        v.bound = acc.hi + extrapolated;
        v.margin = cfg.sentinel - acc.hi;
        v.note += "; dyadic blocks decay geometrically (extrapolated bound)";
        return v;
    }
    if (sentinel_at != 0) {
        v.decision = Decision::fails;
        v.margin = acc.lo - cfg.sentinel;
        v.indices.push_back(sentinel_at);
        v.note += "; crossed the divergence sentinel at n=" + std::to_string(sentinel_at);
        return v;
    }
    v.note += "; no geometric block decay and sentinel not reached";
    return v;
}

Verdict majorizes(const Prefix& eta, const Prefix& xi) {
    if (eta.size() != xi.size())
        throw LengthMismatch("majorizes needs equal lengths, got " + std::to_string(eta.size()) +
                             " and " + std::to_string(xi.size()));
    Verdict v;
    v.horizon = eta.size();
    Rat se(0), sx(0);
    bool ok = true;
    bool have_margin = false;
    for (Index k = 1; k <= eta.size(); ++k) {
        se += eta[k];
        sx += xi[k];
        if (se > sx) {
            ok = false;
            push_capped(v.indices, k);
            if (!have_margin || se - sx > v.margin) {
                v.margin = se - sx;
                have_margin = true;
            }
        } else if (ok && (!have_margin || sx - se < v.margin)) {
            v.margin = sx - se;
            have_margin = true;
        }
    }
    v.decision = ok ? Decision::holds : Decision::fails;
    v.note = ok ? "partial sums dominated at every k" : "partial-sum violation";
    return v;
}

Verdict majorizes_inf(const Seq& eta, const Seq& xi, Index N) {
    if (eta.traits().summable == Tri::no) throw NotSummable(eta.name());
    if (xi.traits().summable == Tri::no) throw NotSummable(xi.name());
    if (!eta.has_tail_sum()) throw NoTailOracle(eta.name());
    if (!xi.has_tail_sum()) throw NoTailOracle(xi.name());

    Verdict v;
    v.horizon = N;
    bool overlap = false;
    bool violated = false;
    bool have_margin = false;
    for (Index n = 1; n <= N; ++n) {
        Interval te = eta.tail_sum(n);
        Interval tx = xi.tail_sum(n);
        if (te.hi <= tx.lo) {
            if (!violated && (!have_margin || tx.lo - te.hi < v.margin)) {
                v.margin = tx.lo - te.hi;
                have_margin = true;
            }
            continue;
        }
        if (te.lo > tx.hi) {
            if (!violated) {
                violated = true;
                v.margin = te.lo - tx.hi;
            }
            push_capped(v.indices, n);
        } else {
            overlap = true;
            if (!violated) push_capped(v.indices, n);
        }
    }
    if (violated)
        v.decision = Decision::fails;
    else if (!overlap)
        v.decision = Decision::holds;
    else
        v.note = "tail enclosures overlap at the recorded indices";
    return v;
}

Verdict regular(const Seq& xi, const CheckConfig& cfg) {
    Verdict v = big_o(seq_am(xi), xi, cfg);
    v.note = "am(xi) = O(xi); " + v.note;
    return v;
}

Verdict inf_regular(const Seq& xi, const CheckConfig& cfg) {
    Seq a = seq_aminf(xi);
    Verdict fwd = big_o(a, xi, cfg);
    Verdict bwd = big_o(xi, a, cfg);
    Verdict v;
    v.horizon = cfg.horizon;
    if (fwd.fails() || bwd.fails()) {
        const Verdict& bad = fwd.fails() ? fwd : bwd;
        v.decision = Decision::fails;
        v.indices = bad.indices;
        v.margin = bad.margin;
        v.note = std::string(fwd.fails() ? "am_inf(xi) != O(xi)" : "xi != O(am_inf(xi))") + "; " +
                 bad.note;
        return v;
    }
    if (fwd.holds() && bwd.holds()) {
        v.decision = Decision::holds;
        v.bound = rat_max(*fwd.bound, *bwd.bound);
        v.margin = rat_min(fwd.margin, bwd.margin);
        v.note = "both directions bounded";
        return v;
    }
    v.note = "one direction indeterminate";
    return v;
}

}  // namespace amideal
