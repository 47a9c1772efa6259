#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amideal/interval.hpp"

namespace amideal {

struct SeqTraits {
    Tri nonincreasing = Tri::unknown;
    Tri nonnegative = Tri::unknown;
    Tri null = Tri::unknown;  // tends to 0
    Tri summable = Tri::unknown;
};

// Monotone nonincreasing, nonnegative, null, with the given summability.
inline SeqTraits cone_traits(Tri summable) {
    return SeqTraits{Tri::yes, Tri::yes, Tri::yes, summable};
}

// Materialized finite initial segment, 1-indexed.
class Prefix {
  public:
    Prefix() = default;
    explicit Prefix(std::vector<Rat> vals) : v_(std::move(vals)) {}

    Index size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const Rat& operator[](Index i) const { return v_.at(i - 1); }  // i in [1, size()]
    Rat& operator[](Index i) { return v_.at(i - 1); }
    void push_back(Rat r) { v_.push_back(std::move(r)); }

    const std::vector<Rat>& raw() const { return v_; }
    std::vector<Rat>& raw() { return v_; }

    bool nonincreasing() const;
    bool nonnegative() const;
    Rat sum() const;

    bool operator==(const Prefix& o) const { return v_ == o.v_; }

  private:
    std::vector<Rat> v_;
};

std::string to_string(const Prefix& p);

// Strictly increasing block ends n_1 < n_2 < …; n_0 = 0 is implicit, so
// block k is the index range (end(k-1), end(k)].
class Blocks {
  public:
    explicit Blocks(std::vector<Index> ends);
    Index count() const { return ends_.size(); }
    Index end(Index k) const { return ends_.at(k - 1); }           // k in [1, count()]
    Index begin(Index k) const { return k == 1 ? 1 : ends_.at(k - 2) + 1; }
    Index last() const { return ends_.back(); }
    const std::vector<Index>& raw() const { return ends_; }

  private:
    std::vector<Index> ends_;
};

struct WindowedPrefix {
    Prefix values;
    Index valid_upto = 0;  // entries beyond this are boundary-affected
};

namespace detail {

struct CursorBase {
    virtual ~CursorBase() = default;
    virtual Interval next() = 0;  // yields values at n = 1, 2, 3, …
};

struct SeqImpl {
    std::string name;
    std::string atom;  // registry atom tag ("" for composites)
    SeqTraits traits;
    bool exact = true;  // every value is a point interval
    std::function<Interval(Index)> eval;                      // required, n >= 1
    std::function<std::unique_ptr<CursorBase>()> make_cursor;  // optional streaming path
    std::function<Interval(Index)> tail_sum;        // bounds sum_{j>n}, n >= 0
    std::function<Interval(Index)> tail_sup;        // bounds sup_{i>=n}
    std::function<Interval(Index)> tail_inf;        // bounds inf_{i>=n}
    std::function<Interval(Index)> partial_sum;     // closed form for sum_{j<=n}
    std::function<Interval(Index)> ratio_tail_sup;  // bounds sup_{i>=n} i*eval(i)
    std::function<Interval(Index)> ratio_tail_inf;  // bounds inf_{i>=n} i*eval(i)
};

}  // namespace detail

// Streaming reader; one pass over n = 1, 2, 3, … with O(1) state.
class SeqCursor {
  public:
    explicit SeqCursor(std::unique_ptr<detail::CursorBase> impl) : impl_(std::move(impl)) {}
    Interval next() {
        ++n_;
        return impl_->next();
    }
    Index pos() const { return n_; }  // index of the last yielded value

  private:
    std::unique_ptr<detail::CursorBase> impl_;
    Index n_ = 0;
};

// Lazily evaluable sequence with optional certified tail oracles.
// Immutable and cheap to copy (shared handle).
class Seq {
  public:
    Seq() = default;
    static Seq make(detail::SeqImpl impl);

    bool valid() const { return impl_ != nullptr; }
    const std::string& name() const { return impl_->name; }
    const std::string& atom() const { return impl_->atom; }
    const SeqTraits& traits() const { return impl_->traits; }
    bool exact() const { return impl_->exact; }

    Interval at(Index n) const;
    Rat exact_at(Index n) const;  // throws NonPointInterval

    SeqCursor cursor() const;

    bool has_tail_sum() const { return static_cast<bool>(impl_->tail_sum); }
    Interval tail_sum(Index n) const;

    // tail_sup/tail_inf fall back on the monotonicity/null traits when they
    // determine the answer (nonincreasing: sup_{i>=n} = eval(n); nonincreasing
    // null: inf_{i>=n} = 0).
    bool has_tail_sup() const;
    Interval tail_sup(Index n) const;
    bool has_tail_inf() const;
    Interval tail_inf(Index n) const;

    bool has_ratio_tail_sup() const { return static_cast<bool>(impl_->ratio_tail_sup); }
    Interval ratio_tail_sup(Index n) const;
    bool has_ratio_tail_inf() const { return static_cast<bool>(impl_->ratio_tail_inf); }
    Interval ratio_tail_inf(Index n) const;

    bool has_fast_partial_sum() const { return static_cast<bool>(impl_->partial_sum); }
    Interval partial_sum(Index n) const;  // closed form if present, else one O(n) scan

  private:
    std::shared_ptr<const detail::SeqImpl> impl_;
};

// ---- pointwise and structural combinators ----

Seq seq_add(const Seq& a, const Seq& b);
Seq seq_mul(const Seq& a, const Seq& b);
Seq seq_div(const Seq& a, const Seq& b);  // routes div(x, omega) through ratio_with_omega
Seq seq_min(const Seq& a, const Seq& b);
Seq seq_scale(const Rat& c, const Seq& s);  // c >= 0
Seq seq_pow(const Seq& s, const Rat& p);    // p > 0, s nonnegative

Seq seq_ampliate(Index m, const Seq& s);  // entry i repeated m times
Seq seq_contract(Index m, const Seq& s);  // entry i -> s(m*i)

Seq seq_am(const Seq& s);     // arithmetic mean <(1/n) sum_{i<=n} s_i>
Seq seq_aminf(const Seq& s);  // arithmetic mean at infinity <(1/n) sum_{i>n} s_i>

// <n * s_n> with tail_sup/tail_inf wired from s's ratio oracles.
Seq ratio_with_omega(const Seq& s);

// <s_n * ln(n+1)^k> as certified intervals.
Seq seq_mul_log_pow(const Seq& s, unsigned k);

// Finitely supported sequence: given head values then zeros; exact oracles.
Seq finite_support_seq(std::vector<Rat> head, std::string name = "finite",
                       std::string atom = "");

// ---- materialization ----

Prefix materialize(const Seq& s, Index N);  // spot-checks the nonincreasing trait
std::vector<Interval> materialize_intervals(const Seq& s, Index N);

struct TailBounds {
    Interval bounds;
    bool lower_only = false;  // true: truncation-based, the true tail may exceed bounds.hi
};
// Oracle-backed if available; otherwise sums (n, horizon] as a certified lower bound.
TailBounds tail_sum_bounds(const Seq& s, Index n, std::optional<Index> horizon = std::nullopt);

}  // namespace amideal
