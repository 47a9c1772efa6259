#include "amideal/envelopes.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "amideal/corpus.hpp"
#include "amideal/errors.hpp"

namespace amideal {

namespace {

// ------------------------------------------------------------------ hulls

struct Pt {
    Index x;
    Rat y;
};

// sign of slope(b, c) - slope(a, b), exact; requires a.x < b.x < c.x.
int slope_turn(const Pt& a, const Pt& b, const Pt& c) {
    Rat lhs = (c.y - b.y) * rat(b.x - a.x);
    Rat rhs = (b.y - a.y) * rat(c.x - b.x);
    return cmp(lhs, rhs);
}

// Monotone chain over points already sorted by x.  Upper hulls keep slopes
// strictly decreasing, lower hulls strictly increasing; collinear interior
// points are dropped, so the result lists the hull's corner vertices only.
std::vector<Pt> chain(const std::vector<Pt>& pts, bool upper) {
    std::vector<Pt> h;
    h.reserve(pts.size());
    for (const Pt& p : pts) {
        while (h.size() >= 2) {
            int t = slope_turn(h[h.size() - 2], h.back(), p);
            if (upper ? t >= 0 : t <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(p);
    }
    return h;
}

// Evaluate the piecewise-linear function through the hull vertices at the
// integers 1..N.  Vertices may extend past N (synthetic boundary points).
Prefix interpolate(const std::vector<Pt>& hull, Index N) {
    Prefix out;
    out.raw().reserve(N);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const Pt& a = hull[e];
        const Pt& b = hull[e + 1];
        Rat slope = (b.y - a.y) / rat(b.x - a.x);
        Index stop = std::min<Index>(b.x - 1, N);
        for (Index n = a.x; n <= stop; ++n) out.push_back(a.y + slope * rat(n - a.x));
    }
    if (out.size() < N && !hull.empty() && hull.back().x <= N) out.push_back(hull.back().y);
    return out;
}

// Index of the last hull vertex strictly before N (0 if there is none).
Index last_vertex_before(const std::vector<Pt>& hull, Index N) {
    Index v = 0;
    for (const Pt& p : hull)
        if (p.x < N) v = p.x;
    return v;
}

std::vector<Pt> window_points(const Prefix& phi) {
    std::vector<Pt> pts;
    pts.reserve(phi.size());
    for (Index i = 1; i <= phi.size(); ++i) pts.push_back({i, phi[i]});
    return pts;
}

// phi must be nondecreasing with phi_n / n nonincreasing (and hence >= 0 once
// phi_1 >= 0); reports the first offending index.
void require_quasiconcave(const Prefix& phi) {
    if (phi.empty()) throw BadParams("empty window");
    if (phi[1] < 0) throw NotQuasiconcave(1);
    for (Index i = 1; i + 1 <= phi.size(); ++i) {
        if (phi[i + 1] < phi[i]) throw NotQuasiconcave(i + 1);
        if (phi[i + 1] * rat(i) > phi[i] * rat(i + 1)) throw NotQuasiconcave(i + 1);
    }
}

// ------------------------------------------------------- envelope windows

std::vector<Rat> running(const std::vector<Rat>& v, bool want_max) {
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0)
            out[i] = v[i];
        else
            out[i] = want_max ? std::max(out[i - 1], v[i]) : std::min(out[i - 1], v[i]);
    }
    return out;
}

std::vector<Rat> suffix(const std::vector<Rat>& v, bool want_max) {
    std::vector<Rat> out(v.size());
    for (std::size_t i = v.size(); i-- > 0;) {
        if (i + 1 == v.size())
            out[i] = v[i];
        else
            out[i] = want_max ? std::max(out[i + 1], v[i]) : std::min(out[i + 1], v[i]);
    }
    return out;
}

WindowedPrefix from_values(std::vector<Rat> vals, Index valid) {
    WindowedPrefix w;
    w.values = Prefix(std::move(vals));
    w.valid_upto = valid;
    return w;
}

}  // namespace

EnvMode env_mode_from_string(const std::string& s) {
    if (s == "und") return EnvMode::und;
    if (s == "lnd") return EnvMode::lnd;
    if (s == "uni") return EnvMode::uni;
    if (s == "lni") return EnvMode::lni;
    throw UnknownName(s);
}

WindowedPrefix envelope(EnvMode mode, const Prefix& p) {
    if (p.empty()) throw BadParams("empty window");
    switch (mode) {
        case EnvMode::und: return from_values(running(p.raw(), true), p.size());
        case EnvMode::lni: return from_values(running(p.raw(), false), p.size());
        // Future-dependent modes: the window alone certifies nothing.
        case EnvMode::lnd: return from_values(suffix(p.raw(), false), 0);
        case EnvMode::uni: return from_values(suffix(p.raw(), true), 0);
    }
    throw BadParams("unknown envelope mode");
}

WindowedPrefix envelope(EnvMode mode, const Seq& s, Index N) {
    if (N < 1) throw BadParams("envelope requires N >= 1");
    Prefix p = materialize(s, N);
    if (mode == EnvMode::und || mode == EnvMode::lni) {
        return from_values(running(p.raw(), mode == EnvMode::und), N);
    }

    const bool is_uni = (mode == EnvMode::uni);
    if (is_uni ? !s.has_tail_sup() : !s.has_tail_inf())
        throw NoTailOracle((is_uni ? "uni envelope of " : "lnd envelope of ") + s.name());
    Interval t = is_uni ? s.tail_sup(N + 1) : s.tail_inf(N + 1);
    std::vector<Rat> suf = suffix(p.raw(), is_uni);

    std::vector<Rat> vals(N);
    Index valid = 0;
    if (t.is_point()) {
        for (Index n = 1; n <= N; ++n)
            vals[n - 1] = is_uni ? std::max(suf[n - 1], t.lo) : std::min(suf[n - 1], t.lo);
        valid = N;
    } else {
        // The window value is exact exactly where the in-window extremum
        // dominates the whole tail enclosure; that set is an initial segment.
        for (Index n = 1; n <= N; ++n) {
            if (is_uni) {
                if (suf[n - 1] >= t.hi) valid = n;
                vals[n - 1] = std::max(suf[n - 1], t.hi);
            } else {
                if (suf[n - 1] <= t.lo) valid = n;
                vals[n - 1] = std::min(suf[n - 1], t.lo);
            }
        }
        if (valid == 0)
            throw NoTailOracle("tail enclosure of " + s.name() +
                               " is too wide for any certified envelope window");
    }
    return from_values(std::move(vals), valid);
}

namespace {

struct RunningCursor : detail::CursorBase {
    SeqCursor inner;
    bool want_max;
    bool started = false;
    Interval cur;
    RunningCursor(SeqCursor c, bool m) : inner(std::move(c)), want_max(m) {}
    Interval next() override {
        Interval v = inner.next();
        if (!started) {
            cur = v;
            started = true;
        } else {
            cur = want_max ? imax(cur, v) : imin(cur, v);
        }
        return cur;
    }
};

Seq running_seq(const Seq& s, bool want_max) {
    detail::SeqImpl im;
    im.name = (want_max ? "und(" : "lni(") + s.name() + ")";
    im.exact = s.exact();
    const SeqTraits& st = s.traits();
    if (want_max) {
        im.traits.nonnegative = st.nonnegative;
        // inf over i >= n of a nondecreasing sequence is the value at n.
        im.tail_inf = [s](Index n) {
            SeqCursor c = s.cursor();
            Interval cur = c.next();
            for (Index i = 2; i <= n; ++i) cur = imax(cur, c.next());
            return cur;
        };
        if (s.has_tail_sup())
            im.tail_sup = [s](Index n) {
                SeqCursor c = s.cursor();
                Interval cur = c.next();
                for (Index i = 2; i <= n; ++i) cur = imax(cur, c.next());
                return imax(cur, s.tail_sup(n));
            };
    } else {
        im.traits.nonincreasing = Tri::yes;
        im.traits.nonnegative = st.nonnegative;
        if (st.null == Tri::yes && st.nonnegative == Tri::yes) im.traits.null = Tri::yes;
        // the running min sits below the sequence pointwise
        if (st.summable == Tri::yes && st.nonnegative == Tri::yes)
            im.traits.summable = Tri::yes;
    }
    im.eval = [s, want_max](Index n) {
        SeqCursor c = s.cursor();
        Interval cur = c.next();
        for (Index i = 2; i <= n; ++i)
            cur = want_max ? imax(cur, c.next()) : imin(cur, c.next());
        return cur;
    };
    im.make_cursor = [s, want_max]() -> std::unique_ptr<detail::CursorBase> {
        return std::make_unique<RunningCursor>(s.cursor(), want_max);
    };
    return Seq::make(std::move(im));
}

Seq tail_extremum_seq(const Seq& s, bool want_sup) {
    if (want_sup ? !s.has_tail_sup() : !s.has_tail_inf())
        throw NoTailOracle((want_sup ? "uni envelope of " : "lnd envelope of ") + s.name());
    detail::SeqImpl im;
    im.name = (want_sup ? "uni(" : "lnd(") + s.name() + ")";
    im.exact = false;  // oracle enclosures may be fat; pointness is per value
    const SeqTraits& st = s.traits();
    im.traits.nonnegative = st.nonnegative;
    if (want_sup) {
        im.traits.nonincreasing = Tri::yes;
        if (st.null == Tri::yes && st.nonnegative == Tri::yes) im.traits.null = Tri::yes;
        if (st.summable == Tri::no && st.nonnegative == Tri::yes) im.traits.summable = Tri::no;
        im.eval = [s](Index n) { return s.tail_sup(n); };
    } else {
        if (st.null == Tri::yes && st.nonnegative == Tri::yes) {
            im.traits.null = Tri::yes;  // tail infima of a nonnegative null sequence vanish
            im.traits.summable = Tri::yes;
        }
        im.eval = [s](Index n) { return s.tail_inf(n); };
    }
    return Seq::make(std::move(im));
}

}  // namespace

Seq envelope_seq(EnvMode mode, const Seq& s) {
    switch (mode) {
        case EnvMode::und: return running_seq(s, true);
        case EnvMode::lni: return running_seq(s, false);
        case EnvMode::uni: return tail_extremum_seq(s, true);
        case EnvMode::lnd: return tail_extremum_seq(s, false);
    }
    throw BadParams("unknown envelope mode");
}

// ---------------------------------------------------------------- hull API

WindowedPrefix concave_majorant(const Prefix& phi) {
    require_quasiconcave(phi);
    std::vector<Pt> hull = chain(window_points(phi), /*upper=*/true);
    WindowedPrefix w;
    w.values = interpolate(hull, phi.size());
    w.valid_upto = last_vertex_before(hull, phi.size());
    return w;
}

WindowedPrefix concave_majorant(const Prefix& phi, const Rat& sup_hint) {
    require_quasiconcave(phi);
    const Index N = phi.size();
    if (sup_hint < phi[N]) throw BadParams("sup hint is below the window maximum");
    std::vector<Pt> hull = chain(window_points(phi), /*upper=*/true);
    WindowedPrefix w;
    w.values = interpolate(hull, N);
    // The first point is always a vertex of the infinite hull.  A later vertex
    // survives every admissible continuation (values <= sup_hint) as long as
    // the steepest possible future chord out of its predecessor -- towards a
    // value of sup_hint just past the window -- stays below the incoming edge.
    Index valid = 1;
    for (std::size_t m = 1; m < hull.size(); ++m) {
        const Pt& a = hull[m - 1];
        const Pt& b = hull[m];
        Rat edge = (b.y - a.y) / rat(b.x - a.x);
        Rat threat = (sup_hint - a.y) / rat(N + 1 - a.x);
        if (threat <= edge)
            valid = b.x;
        else
            break;
    }
    w.valid_upto = valid;
    return w;
}

WindowedPrefix convex_minorant(const Prefix& phi, ConvexBoundary boundary) {
    if (phi.empty()) throw BadParams("empty window");
    const Index N = phi.size();
    for (Index i = 1; i <= N; ++i)
        if (phi[i] <= 0) throw NonpositiveEntry(i);
    std::vector<Pt> pts = window_points(phi);
    if (boundary == ConvexBoundary::zero_limit) {
        if (N < 2) throw BadParams("zero_limit needs a window of at least two entries");
        // One window-width past the end the decay to zero is taken at face
        // value; the hull may descend to it.
        pts.push_back({2 * N - 1, Rat(0)});
    }
    std::vector<Pt> hull = chain(pts, /*upper=*/false);
    WindowedPrefix w;
    w.values = interpolate(hull, N);
    w.valid_upto = last_vertex_before(hull, N);
    return w;
}

// --------------------------------------------------------- mean generators

WindowedPrefix mean_ideal_generator(GenKind kind, const Seq& xi, Index N,
                                    const CheckConfig* guard_cfg) {
    if (N < 1) throw BadParams("mean_ideal_generator requires N >= 1");
    CheckConfig cfg = guard_cfg ? *guard_cfg : CheckConfig{};
    if (!guard_cfg) cfg.horizon = std::max<Index>(N, cfg.horizon);
    Seq ratio = ratio_with_omega(xi);

    WindowedPrefix env;
    switch (kind) {
        case GenKind::am_interior:
            env = envelope(EnvMode::lnd, ratio, N);
            break;
        case GenKind::am_oo:
            env = envelope(EnvMode::und, ratio, N);
            break;
        case GenKind::aminf_interior: {
            Verdict v = big_o(corpus_seq("omega"), xi, cfg);
            if (!v.fails())
                throw GuardFailed("aminf_interior generator needs omega = O(" + xi.name() +
                                  ") refuted at the horizon; verdict: " + to_string(v.decision));
            env = envelope(EnvMode::lni, ratio, N);
            break;
        }
        case GenKind::aminf_oo: {
            Verdict v = little_o(xi, corpus_seq("omega"), cfg);
            if (!v.holds())
                throw GuardFailed("aminf_oo generator needs " + xi.name() +
                                  " = o(omega) at the horizon; verdict: " + to_string(v.decision));
            env = envelope(EnvMode::uni, ratio, N);
            break;
        }
    }

    WindowedPrefix out;
    out.valid_upto = env.valid_upto;
    out.values.raw().reserve(N);
    for (Index n = 1; n <= N; ++n) out.values.push_back(env.values[n] / rat(n));
    return out;
}

}  // namespace amideal
