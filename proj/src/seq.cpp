#include "amideal/seq.hpp"

#include <sstream>

#include "amideal/errors.hpp"
#include "amideal/logenc.hpp"

namespace amideal {

bool Prefix::nonincreasing() const {
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (v_[i - 1] < v_[i]) return false;
    return true;
}

bool Prefix::nonnegative() const {
    for (const Rat& r : v_)
        if (r < 0) return false;
    return true;
}

Rat Prefix::sum() const {
    Rat s(0);
    for (const Rat& r : v_) s += r;
    return s;
}

std::string to_string(const Prefix& p) {
    std::ostringstream os;
    os << "<";
    for (Index i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ", ";
        os << to_string(p[i]);
    }
    os << ">";
    return os.str();
}

Blocks::Blocks(std::vector<Index> ends) : ends_(std::move(ends)) {
    if (ends_.empty()) throw BlocksOutOfRange("empty block list");
    if (ends_.front() < 1) throw BlocksOutOfRange("first block end must be >= 1");
    for (std::size_t i = 1; i < ends_.size(); ++i)
        if (ends_[i] <= ends_[i - 1]) throw BlocksOutOfRange("block ends must strictly increase");
}

namespace {

using detail::CursorBase;
using detail::SeqImpl;

struct GenericCursor final : CursorBase {
    Seq s;
    Index n = 0;
    explicit GenericCursor(Seq seq) : s(std::move(seq)) {}
    Interval next() override { return s.at(++n); }
};

Rat inv(Index n) { return Rat(1, static_cast<unsigned long>(n)); }

}  // namespace

Seq Seq::make(detail::SeqImpl impl) {
    if (!impl.eval) throw BadParams("sequence without an evaluator");
    Seq s;
    s.impl_ = std::make_shared<const detail::SeqImpl>(std::move(impl));
    return s;
}

Interval Seq::at(Index n) const {
    if (n == 0) throw BadParams("sequences are 1-indexed");
    return impl_->eval(n);
}

Rat Seq::exact_at(Index n) const {
    Interval v = at(n);
    if (!v.is_point()) throw NonPointInterval(n);
    return v.lo;
}

SeqCursor Seq::cursor() const {
    if (impl_->make_cursor) return SeqCursor(impl_->make_cursor());
    return SeqCursor(std::make_unique<GenericCursor>(*this));
}

Interval Seq::tail_sum(Index n) const {
    if (!impl_->tail_sum) throw NoTailOracle(name() + " has no tail-sum oracle");
    return impl_->tail_sum(n);
}

bool Seq::has_tail_sup() const {
    return static_cast<bool>(impl_->tail_sup) || impl_->traits.nonincreasing == Tri::yes;
}

Interval Seq::tail_sup(Index n) const {
    if (impl_->tail_sup) return impl_->tail_sup(n);
    if (impl_->traits.nonincreasing == Tri::yes) return at(n);
    throw NoTailOracle(name() + " has no tail-sup oracle");
}

bool Seq::has_tail_inf() const {
    return static_cast<bool>(impl_->tail_inf) ||
           (impl_->traits.nonincreasing == Tri::yes && impl_->traits.null == Tri::yes);
}

Interval Seq::tail_inf(Index n) const {
    if (impl_->tail_inf) return impl_->tail_inf(n);
    // A nonincreasing null sequence has every tail infimum equal to its limit 0.
    if (impl_->traits.nonincreasing == Tri::yes && impl_->traits.null == Tri::yes)
        return Interval(Rat(0));
    (void)n;
    throw NoTailOracle(name() + " has no tail-inf oracle");
}

Interval Seq::ratio_tail_sup(Index n) const {
    if (!impl_->ratio_tail_sup) throw NoTailOracle(name() + " has no ratio tail-sup oracle");
    return impl_->ratio_tail_sup(n);
}

Interval Seq::ratio_tail_inf(Index n) const {
    if (!impl_->ratio_tail_inf) throw NoTailOracle(name() + " has no ratio tail-inf oracle");
    return impl_->ratio_tail_inf(n);
}

Interval Seq::partial_sum(Index n) const {
    if (impl_->partial_sum) return impl_->partial_sum(n);
    Interval acc;
    SeqCursor c = cursor();
    for (Index i = 0; i < n; ++i) acc += c.next();
    return acc;
}

// ---------------------------------------------------------------- combinators

namespace {

struct ZipCursor final : CursorBase {
    SeqCursor a, b;
    Index n = 0;
    std::function<Interval(const Interval&, const Interval&, Index)> op;
    ZipCursor(const Seq& x, const Seq& y,
              std::function<Interval(const Interval&, const Interval&, Index)> f)
        : a(x.cursor()), b(y.cursor()), op(std::move(f)) {}
    Interval next() override {
        ++n;
        return op(a.next(), b.next(), n);
    }
};

Interval div_values(const Interval& x, const Interval& y, Index n) {
    if (y.lo <= 0 && y.hi >= 0) {
        if (x.is_point() && x.lo == 0 && y.is_point()) return Interval(Rat(0));
        throw DivisionByZeroAtIndex(n);
    }
    return x / y;
}

Tri tri_both(Tri a, Tri b) { return (a == Tri::yes && b == Tri::yes) ? Tri::yes : Tri::unknown; }

}  // namespace

Seq seq_add(const Seq& a, const Seq& b) {
    SeqImpl im;
    im.name = "plus(" + a.name() + "," + b.name() + ")";
    im.traits.nonincreasing = tri_both(a.traits().nonincreasing, b.traits().nonincreasing);
    im.traits.nonnegative = tri_both(a.traits().nonnegative, b.traits().nonnegative);
    im.traits.null = tri_both(a.traits().null, b.traits().null);
    {
        Tri sa = a.traits().summable, sb = b.traits().summable;
        if (sa == Tri::yes && sb == Tri::yes)
            im.traits.summable = Tri::yes;
        else if (im.traits.nonnegative == Tri::yes && (sa == Tri::no || sb == Tri::no))
            im.traits.summable = Tri::no;  // a nonnegative term cannot cancel divergence
    }
    im.exact = a.exact() && b.exact();
    im.eval = [a, b](Index n) { return a.at(n) + b.at(n); };
    im.make_cursor = [a, b]() {
        return std::make_unique<ZipCursor>(
            a, b, [](const Interval& x, const Interval& y, Index) { return x + y; });
    };
    if (a.has_tail_sum() && b.has_tail_sum())
        im.tail_sum = [a, b](Index n) { return a.tail_sum(n) + b.tail_sum(n); };
    if (a.has_fast_partial_sum() && b.has_fast_partial_sum())
        im.partial_sum = [a, b](Index n) { return a.partial_sum(n) + b.partial_sum(n); };
    return Seq::make(std::move(im));
}

Seq seq_mul(const Seq& a, const Seq& b) {
    SeqImpl im;
    im.name = "times(" + a.name() + "," + b.name() + ")";
    bool mono_a = a.traits().nonincreasing == Tri::yes && a.traits().nonnegative == Tri::yes;
    bool mono_b = b.traits().nonincreasing == Tri::yes && b.traits().nonnegative == Tri::yes;
    im.traits.nonincreasing = (mono_a && mono_b) ? Tri::yes : Tri::unknown;
    im.traits.nonnegative = tri_both(a.traits().nonnegative, b.traits().nonnegative);
    if ((a.traits().null == Tri::yes && mono_b) || (b.traits().null == Tri::yes && mono_a))
        im.traits.null = Tri::yes;
    if ((a.traits().summable == Tri::yes && a.traits().nonnegative == Tri::yes && mono_b) ||
        (b.traits().summable == Tri::yes && b.traits().nonnegative == Tri::yes && mono_a))
        im.traits.summable = Tri::yes;
    im.exact = a.exact() && b.exact();
    im.eval = [a, b](Index n) { return a.at(n) * b.at(n); };
    im.make_cursor = [a, b]() {
        return std::make_unique<ZipCursor>(
            a, b, [](const Interval& x, const Interval& y, Index) { return x * y; });
    };
    return Seq::make(std::move(im));
}

Seq seq_div(const Seq& a, const Seq& b) {
    if (b.atom() == "omega") return ratio_with_omega(a);
    SeqImpl im;
    im.name = "div(" + a.name() + "," + b.name() + ")";
    im.traits.nonnegative = tri_both(a.traits().nonnegative, b.traits().nonnegative);
    im.exact = a.exact() && b.exact();
    im.eval = [a, b](Index n) { return div_values(a.at(n), b.at(n), n); };
    im.make_cursor = [a, b]() { return std::make_unique<ZipCursor>(a, b, div_values); };
    return Seq::make(std::move(im));
}

Seq seq_min(const Seq& a, const Seq& b) {
    SeqImpl im;
    im.name = "min(" + a.name() + "," + b.name() + ")";
    im.traits.nonincreasing = tri_both(a.traits().nonincreasing, b.traits().nonincreasing);
    im.traits.nonnegative = tri_both(a.traits().nonnegative, b.traits().nonnegative);
    if (im.traits.nonnegative == Tri::yes &&
        (a.traits().null == Tri::yes || b.traits().null == Tri::yes))
        im.traits.null = Tri::yes;
    if (im.traits.nonnegative == Tri::yes &&
        (a.traits().summable == Tri::yes || b.traits().summable == Tri::yes))
        im.traits.summable = Tri::yes;
    im.exact = a.exact() && b.exact();
    im.eval = [a, b](Index n) { return imin(a.at(n), b.at(n)); };
    im.make_cursor = [a, b]() {
        return std::make_unique<ZipCursor>(
            a, b, [](const Interval& x, const Interval& y, Index) { return imin(x, y); });
    };
    if (im.traits.nonnegative == Tri::yes && (a.has_tail_sum() || b.has_tail_sum())) {
        im.tail_sum = [a, b](Index n) {
            Rat hi;
            bool have = false;
            if (a.has_tail_sum()) {
                hi = a.tail_sum(n).hi;
                have = true;
            }
            if (b.has_tail_sum()) {
                Rat h2 = b.tail_sum(n).hi;
                hi = have ? rat_min(hi, h2) : h2;
            }
            return Interval(Rat(0), hi);
        };
    }
    return Seq::make(std::move(im));
}

Seq seq_scale(const Rat& c, const Seq& s) {
    if (c < 0) throw BadParams("negative scale factor");
    SeqImpl im;
    im.name = "scale(" + to_string(c) + "," + s.name() + ")";
    im.traits = s.traits();
    if (c == 0) im.traits = cone_traits(Tri::yes);
    im.exact = s.exact();
    im.eval = [c, s](Index n) { return s.at(n).scale(c); };
    im.make_cursor = [c, s]() {
        struct Cur final : CursorBase {
            Rat c;
            SeqCursor base;
            Cur(Rat cc, SeqCursor b) : c(std::move(cc)), base(std::move(b)) {}
            Interval next() override { return base.next().scale(c); }
        };
        return std::make_unique<Cur>(c, s.cursor());
    };
    if (s.has_tail_sum()) im.tail_sum = [c, s](Index n) { return s.tail_sum(n).scale(c); };
    if (s.has_tail_sup()) im.tail_sup = [c, s](Index n) { return s.tail_sup(n).scale(c); };
    if (s.has_tail_inf()) im.tail_inf = [c, s](Index n) { return s.tail_inf(n).scale(c); };
    if (s.has_ratio_tail_sup())
        im.ratio_tail_sup = [c, s](Index n) { return s.ratio_tail_sup(n).scale(c); };
    if (s.has_ratio_tail_inf())
        im.ratio_tail_inf = [c, s](Index n) { return s.ratio_tail_inf(n).scale(c); };
    if (s.has_fast_partial_sum())
        im.partial_sum = [c, s](Index n) { return s.partial_sum(n).scale(c); };
    return Seq::make(std::move(im));
}

Seq seq_pow(const Seq& s, const Rat& p) {
    if (p <= 0) throw BadParams("pow requires a positive exponent");
    SeqImpl im;
    im.name = "pow(" + s.name() + "," + to_string(p) + ")";
    bool mono = s.traits().nonincreasing == Tri::yes && s.traits().nonnegative == Tri::yes;
    im.traits.nonnegative = s.traits().nonnegative;
    im.traits.nonincreasing = mono ? Tri::yes : Tri::unknown;
    im.traits.null = (s.traits().null == Tri::yes && s.traits().nonnegative == Tri::yes)
                         ? Tri::yes
                         : Tri::unknown;
    if (p >= 1 && mono && s.traits().summable == Tri::yes)
        im.traits.summable = Tri::yes;  // xi^p <= xi_1^{p-1} * xi for p >= 1
    im.exact = s.exact() && p.get_den() == 1;
    im.eval = [s, p](Index n) { return ipow(s.at(n), p); };
    if (s.has_tail_sup()) im.tail_sup = [s, p](Index n) { return ipow(s.tail_sup(n), p); };
    if (s.has_tail_inf()) im.tail_inf = [s, p](Index n) { return ipow(s.tail_inf(n), p); };
    return Seq::make(std::move(im));
}

Seq seq_ampliate(Index m, const Seq& s) {
    if (m == 0) throw BadParams("ampliation factor must be >= 1");
    if (m == 1) return s;
    SeqImpl im;
    im.name = "d(" + std::to_string(m) + "," + s.name() + ")";
    im.traits = s.traits();  // repetition preserves all four traits
    im.exact = s.exact();
    auto up = [m](Index n) { return (n + m - 1) / m; };
    im.eval = [s, up](Index n) { return s.at(up(n)); };
    im.make_cursor = [s, m]() {
        struct Cur final : CursorBase {
            SeqCursor base;
            Index m, left = 0;
            Interval cur;
            Cur(SeqCursor b, Index mm) : base(std::move(b)), m(mm) {}
            Interval next() override {
                if (left == 0) {
                    cur = base.next();
                    left = m;
                }
                --left;
                return cur;
            }
        };
        return std::make_unique<Cur>(s.cursor(), m);
    };
    if (s.has_tail_sum()) {
        im.tail_sum = [s, m, up](Index n) {
            // sum_{j>n} (D_m s)_j = (m*i - n)*s_i + m*sum_{j>i} s_j,  i = ceil((n+1)/m)
            Index i = up(n + 1);
            Rat cnt(static_cast<unsigned long>(m * i - n));
            return s.at(i).scale(cnt) + s.tail_sum(i).scale(Rat(static_cast<unsigned long>(m)));
        };
    }
    if (s.has_tail_sup()) im.tail_sup = [s, up](Index n) { return s.tail_sup(up(n)); };
    if (s.has_tail_inf()) im.tail_inf = [s, up](Index n) { return s.tail_inf(up(n)); };
    if (s.has_fast_partial_sum()) {
        im.partial_sum = [s, m, up](Index n) {
            Index i = up(n);
            Interval full = i > 1 ? s.partial_sum(i - 1) : Interval(Rat(0));
            Rat cnt(static_cast<unsigned long>(n - m * (i - 1)));
            return full.scale(Rat(static_cast<unsigned long>(m))) + s.at(i).scale(cnt);
        };
    }
    return Seq::make(std::move(im));
}

Seq seq_contract(Index m, const Seq& s) {
    if (m == 0) throw BadParams("contraction factor must be >= 1");
    if (m == 1) return s;
    SeqImpl im;
    im.name = "dinv(" + std::to_string(m) + "," + s.name() + ")";
    im.traits = s.traits();  // subsampling preserves the shape traits
    if (s.traits().summable == Tri::yes && s.traits().nonnegative != Tri::yes)
        im.traits.summable = Tri::unknown;  // conditional convergence does not subsample
    if (s.traits().summable == Tri::no &&
        !(s.traits().nonincreasing == Tri::yes && s.traits().nonnegative == Tri::yes))
        im.traits.summable = Tri::unknown;  // m * sum xi_{mn} >= tail sum needs monotonicity
    im.exact = s.exact();
    im.eval = [s, m](Index n) { return s.at(m * n); };
    im.make_cursor = [s, m]() {
        struct Cur final : CursorBase {
            SeqCursor base;
            Index m;
            Cur(SeqCursor b, Index mm) : base(std::move(b)), m(mm) {}
            Interval next() override {
                Interval v;
                for (Index i = 0; i < m; ++i) v = base.next();
                return v;
            }
        };
        return std::make_unique<Cur>(s.cursor(), m);
    };
    if (s.has_tail_sup()) im.tail_sup = [s, m](Index n) { return s.tail_sup(m * n); };
    if (s.has_tail_inf()) im.tail_inf = [s, m](Index n) { return s.tail_inf(m * n); };
    if (s.has_tail_sum() && s.traits().nonincreasing == Tri::yes &&
        s.traits().nonnegative == Tri::yes) {
        im.tail_sum = [s, m](Index n) {
            // grouping consecutive m-term windows of the nonincreasing base
            Rat minv(1, static_cast<unsigned long>(m));
            Rat lo = s.tail_sum(m * (n + 1) - 1).lo * minv;
            Rat hi = s.tail_sum(m * n).hi * minv;
            return Interval(lo, hi);
        };
    }
    return Seq::make(std::move(im));
}

Seq seq_am(const Seq& s) {
    SeqImpl im;
    im.name = "am(" + s.name() + ")";
    bool mono = s.traits().nonincreasing == Tri::yes && s.traits().nonnegative == Tri::yes;
    im.traits.nonincreasing = mono ? Tri::yes : Tri::unknown;
    im.traits.nonnegative = s.traits().nonnegative;
    im.traits.null = s.traits().null;
    if (s.traits().nonnegative == Tri::yes && s.at(1).lo > 0)
        im.traits.summable = Tri::no;  // mean >= s_1/n, a harmonic lower bound
    im.exact = s.exact();
    im.eval = [s](Index n) {
        Interval acc = s.partial_sum(n);
        return acc.scale(inv(n));
    };
    im.make_cursor = [s]() {
        struct Cur final : CursorBase {
            SeqCursor base;
            Interval acc;
            Index n = 0;
            explicit Cur(SeqCursor b) : base(std::move(b)) {}
            Interval next() override {
                ++n;
                acc += base.next();
                return acc.scale(inv(n));
            }
        };
        return std::make_unique<Cur>(s.cursor());
    };
    return Seq::make(std::move(im));
}

Seq seq_aminf(const Seq& s) {
    if (s.traits().summable == Tri::no)
        throw NotSummable("arithmetic mean at infinity of a nonsummable sequence");
    if (!s.has_tail_sum())
        throw NoTailOracle("arithmetic mean at infinity of " + s.name());
    SeqImpl im;
    im.name = "aminf(" + s.name() + ")";
    // For nonnegative s:  (1/n) T(n) >= (1/(n+1)) T(n+1)  since T is nonincreasing.
    if (s.traits().nonnegative == Tri::yes) im.traits = cone_traits(Tri::unknown);
    im.exact = false;  // pointness depends on the oracle; exact_at checks per value
    im.eval = [s](Index n) { return s.tail_sum(n).scale(inv(n)); };
    im.tail_sup = [s](Index n) { return s.tail_sum(n).scale(inv(n)); };
    if (s.traits().nonnegative == Tri::yes) {
        im.ratio_tail_sup = [s](Index n) { return s.tail_sum(n); };  // n*(aminf)_n = T(n), nonincreasing
        im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };  // T(n) -> 0
    }
    return Seq::make(std::move(im));
}

Seq ratio_with_omega(const Seq& s) {
    SeqImpl im;
    im.name = "div(" + s.name() + ",omega)";
    im.traits.nonnegative = s.traits().nonnegative;
    im.exact = s.exact();
    im.eval = [s](Index n) { return s.at(n).scale(Rat(static_cast<unsigned long>(n))); };
    im.make_cursor = [s]() {
        struct Cur final : CursorBase {
            SeqCursor base;
            Index n = 0;
            explicit Cur(SeqCursor b) : base(std::move(b)) {}
            Interval next() override {
                ++n;
                return base.next().scale(Rat(static_cast<unsigned long>(n)));
            }
        };
        return std::make_unique<Cur>(s.cursor());
    };
    if (s.has_ratio_tail_sup()) im.tail_sup = [s](Index n) { return s.ratio_tail_sup(n); };
    if (s.has_ratio_tail_inf()) im.tail_inf = [s](Index n) { return s.ratio_tail_inf(n); };
    return Seq::make(std::move(im));
}

Seq seq_mul_log_pow(const Seq& s, unsigned k) {
    if (k == 0) return s;
    SeqImpl im;
    im.name = s.name() + "*log^" + std::to_string(k);
    im.traits.nonnegative = s.traits().nonnegative;
    im.exact = false;
    im.eval = [s, k](Index n) { return s.at(n) * ln_pow_enclosure(n + 1, k); };
    return Seq::make(std::move(im));
}

Seq finite_support_seq(std::vector<Rat> head, std::string name, std::string atom) {
    auto vals = std::make_shared<const std::vector<Rat>>(std::move(head));
    SeqImpl im;
    im.name = std::move(name);
    im.atom = std::move(atom);
    bool nonneg = true, noninc = true;
    for (std::size_t i = 0; i < vals->size(); ++i) {
        if ((*vals)[i] < 0) nonneg = false;
        if (i > 0 && (*vals)[i - 1] < (*vals)[i]) noninc = false;
    }
    if (!vals->empty() && vals->back() < 0) noninc = false;  // trailing zeros exceed it
    im.traits.nonnegative = nonneg ? Tri::yes : Tri::no;
    im.traits.nonincreasing = noninc ? Tri::yes : Tri::unknown;
    im.traits.null = Tri::yes;
    im.traits.summable = Tri::yes;
    im.eval = [vals](Index n) {
        return n <= vals->size() ? Interval((*vals)[n - 1]) : Interval(Rat(0));
    };
    im.tail_sum = [vals](Index n) {
        Rat s(0);
        for (std::size_t j = n; j < vals->size(); ++j) s += (*vals)[j];
        return Interval(s);
    };
    im.partial_sum = [vals](Index n) {
        Rat s(0);
        for (std::size_t j = 0; j < std::min<std::size_t>(n, vals->size()); ++j) s += (*vals)[j];
        return Interval(s);
    };
    if (nonneg) {
        im.tail_sup = [vals](Index n) {
            Rat m(0);
            for (std::size_t j = n - 1; j < vals->size(); ++j) m = rat_max(m, (*vals)[j]);
            return Interval(m);
        };
        im.tail_inf = [](Index) { return Interval(Rat(0)); };
        im.ratio_tail_sup = [vals](Index n) {
            Rat m(0);
            for (std::size_t j = n - 1; j < vals->size(); ++j)
                m = rat_max(m, Rat(static_cast<unsigned long>(j + 1)) * (*vals)[j]);
            return Interval(m);
        };
        im.ratio_tail_inf = [](Index) { return Interval(Rat(0)); };
    }
    return Seq::make(std::move(im));
}

// ------------------------------------------------------------- materialization

Prefix materialize(const Seq& s, Index N) {
    if (N < 1) throw BadParams("materialize requires N >= 1");
    std::vector<Rat> out;
    out.reserve(N);
    SeqCursor c = s.cursor();
    bool check = s.traits().nonincreasing == Tri::yes;
    for (Index n = 1; n <= N; ++n) {
        Interval v = c.next();
        if (!v.is_point()) throw NonPointInterval(n);
        if (check && n > 1 && out.back() < v.lo) throw MonotonicityViolated(n);
        out.push_back(v.lo);
    }
    return Prefix(std::move(out));
}

std::vector<Interval> materialize_intervals(const Seq& s, Index N) {
    if (N < 1) throw BadParams("materialize requires N >= 1");
    std::vector<Interval> out;
    out.reserve(N);
    SeqCursor c = s.cursor();
    bool check = s.traits().nonincreasing == Tri::yes;
    for (Index n = 1; n <= N; ++n) {
        Interval v = c.next();
        if (check && n > 1 && surely(cmp_lt(out.back(), v))) throw MonotonicityViolated(n);
        out.push_back(v);
    }
    return out;
}

TailBounds tail_sum_bounds(const Seq& s, Index n, std::optional<Index> horizon) {
    if (s.has_tail_sum()) return TailBounds{s.tail_sum(n), false};
    if (!horizon) throw NoTailOracle(s.name() + " (supply a truncation horizon)");
    if (*horizon < n) throw BadParams("truncation horizon below tail start");
    Interval acc;
    SeqCursor c = s.cursor();
    for (Index j = 1; j <= *horizon; ++j) {
        Interval v = c.next();
        if (j > n) acc += v;
    }
    return TailBounds{acc, true};
}

}  // namespace amideal
