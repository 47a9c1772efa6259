#include "amideal/transforms.hpp"

#include "amideal/errors.hpp"

namespace amideal {

namespace {

Rat rational_index(Index n) { return Rat(static_cast<unsigned long>(n)); }

}  // namespace

Prefix am(const Prefix& p) {
    std::vector<Rat> out;
    out.reserve(p.size());
    Rat acc(0);
    for (Index n = 1; n <= p.size(); ++n) {
        acc += p[n];
        out.push_back(acc / rational_index(n));
    }
    Prefix result(std::move(out));
    if (p.nonincreasing() && p.nonnegative()) {
        for (Index n = 2; n <= result.size(); ++n)
            if (result[n - 1] < result[n]) throw MonotonicityViolated(n);
    }
    return result;
}

std::vector<Interval> am_inf(const Seq& s, Index N) {
    if (s.traits().summable == Tri::no) throw NotSummable(s.name());
    if (!s.has_tail_sum()) throw NoTailOracle(s.name());
    std::vector<Interval> out;
    out.reserve(N);
    for (Index n = 1; n <= N; ++n)
        out.push_back(s.tail_sum(n).scale(Rat(1, static_cast<unsigned long>(n))));
    return out;
}

Prefix mean_inverse(const Prefix& p) {
    std::vector<Rat> out;
    out.reserve(p.size());
    for (Index n = 1; n <= p.size(); ++n) {
        Rat v = rational_index(n) * p[n];
        if (n > 1) v -= rational_index(n - 1) * p[n - 1];
        out.push_back(std::move(v));
    }
    return Prefix(std::move(out));
}

Prefix mean_inf_inverse(const std::vector<Interval>& p) {
    if (p.size() < 2) throw BadParams("tail-mean inversion needs length >= 2");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_point()) throw NonPointInterval(i + 1);
    std::vector<Rat> out;
    out.reserve(p.size() - 1);
    for (std::size_t n = 1; n < p.size(); ++n)
        out.push_back(rational_index(n) * p[n - 1].lo - rational_index(n + 1) * p[n].lo);
    return Prefix(std::move(out));
}

Prefix ampliate(Index m, const Prefix& p) {
    if (m == 0) throw BadParams("ampliation factor must be >= 1");
    std::vector<Rat> out;
    out.reserve(p.size() * m);
    for (Index i = 1; i <= p.size(); ++i)
        for (Index r = 0; r < m; ++r) out.push_back(p[i]);
    return Prefix(std::move(out));
}

Prefix contract(Index m, const Prefix& p) {
    if (m == 0) throw BadParams("contraction factor must be >= 1");
    if (p.size() < m) throw BadParams("contraction needs length >= m");
    std::vector<Rat> out;
    out.reserve(p.size() / m);
    for (Index i = 1; m * i <= p.size(); ++i) out.push_back(p[m * i]);
    return Prefix(std::move(out));
}

Prefix step_boost(const Prefix& xi, const Blocks& blocks) {
    if (blocks.last() > xi.size()) throw BlocksOutOfRange("blocks exceed prefix");
    if (!xi.nonincreasing() || !xi.nonnegative())
        throw BadParams("step boost needs a nonincreasing nonnegative prefix");
    std::vector<Rat> out;
    out.reserve(blocks.last());
    Index k = 1;
    Rat running;
    for (Index i = 1; i <= blocks.last(); ++i) {
        if (i > blocks.end(k)) ++k;
        Rat v = rational_index(k) * xi[i];
        running = (i == 1) ? v : rat_min(running, v);
        out.push_back(running);
    }
    return Prefix(std::move(out));
}

Prefix block_flatten_am(const Prefix& eta, const Blocks& blocks) {
    if (blocks.last() > eta.size()) throw BlocksOutOfRange("blocks exceed prefix");
    Prefix means = am(eta);
    for (Index k = 1; k <= blocks.count(); ++k) {
        Index a = blocks.begin(k), b = blocks.end(k);
        Rat block_sum(0);
        for (Index i = a; i <= b; ++i) block_sum += eta[i];
        // density condition: block mean covers half the Cesàro mean at the end
        if (block_sum / rational_index(b - a + 1) < means[b] / 2) throw HypothesisViolated(k);
    }
    std::vector<Rat> out;
    out.reserve(blocks.last());
    for (Index k = 1; k <= blocks.count(); ++k)
        for (Index i = blocks.begin(k); i <= blocks.end(k); ++i) out.push_back(means[blocks.end(k)]);
    return Prefix(std::move(out));
}

Prefix block_flatten_aminf(const Seq& eta, const Blocks& blocks, Index N) {
    if (eta.traits().summable == Tri::no) throw NotSummable(eta.name());
    if (!eta.has_tail_sum()) throw NoTailOracle(eta.name());
    std::vector<Rat> vals;  // eta values over the window, summed exactly
    vals.reserve(blocks.last());
    {
        SeqCursor c = eta.cursor();
        for (Index i = 1; i <= blocks.last(); ++i) {
            Interval v = c.next();
            if (!v.is_point()) throw NonPointInterval(i);
            vals.push_back(v.lo);
        }
    }
    for (Index k = 1; k <= blocks.count(); ++k) {
        Rat block_sum(0);
        for (Index i = blocks.begin(k); i <= blocks.end(k); ++i) block_sum += vals[i - 1];
        // the block must carry half of everything ahead of its start
        if (block_sum < eta.tail_sum(blocks.begin(k) - 1).hi / 2) throw HypothesisViolated(k);
    }
    std::vector<Rat> out;
    out.reserve(blocks.last());
    for (Index k = 1; k <= blocks.count(); ++k) {
        Rat flat = eta.tail_sum(blocks.end(k)).hi / rational_index(blocks.end(k));
        for (Index i = blocks.begin(k); i <= blocks.end(k); ++i) out.push_back(flat);
    }
    // certify the factor-3 tail comparison on the window
    Index upto = std::min<Index>(N, blocks.last());
    Rat suffix(0);
    std::vector<Rat> xi_suffix(upto + 1, Rat(0));
    for (Index j = blocks.last(); j > 0; --j) {
        suffix += out[j - 1];
        if (j - 1 <= upto) xi_suffix[j - 1] = suffix;
    }
    for (Index j = 0; j <= upto && j < blocks.last(); ++j)
        if (xi_suffix[j] > Rat(3) * eta.tail_sum(j).lo)
            throw BadParams("flatten certification failed at " + std::to_string(j));
    return Prefix(std::move(out));
}

Prefix gamma_monotonize(const Prefix& eta, const Prefix& beta) {
    if (eta.size() != beta.size()) throw LengthMismatch("weights vs sequence");
    for (Index i = 1; i <= eta.size(); ++i)
        if (eta[i] <= 0 || beta[i] <= 0) throw NonpositiveEntry(i);
    if (!eta.nonincreasing()) throw BadParams("gamma recursion needs nonincreasing eta");
    // replace beta by its greatest nondecreasing minorant (suffix minima)
    std::vector<Rat> floor_beta(beta.size());
    for (Index i = beta.size(); i >= 1; --i) {
        floor_beta[i - 1] = beta[i];
        if (i < beta.size()) floor_beta[i - 1] = rat_min(floor_beta[i - 1], floor_beta[i]);
    }
    std::vector<Rat> gamma(eta.size());
    gamma[0] = floor_beta[0];
    for (Index n = 2; n <= eta.size(); ++n)
        gamma[n - 1] = rat_min(gamma[n - 2] * eta[n - 1], floor_beta[n - 1] * eta[n]) / eta[n];
    return Prefix(std::move(gamma));
}

Blocks find_am_blocks(const Prefix& eta) {
    Prefix means = am(eta);
    std::vector<Index> ends;
    Index prev = 0;
    while (prev < eta.size()) {
        Rat block_sum(0);
        bool found = false;
        for (Index n = prev + 1; n <= eta.size(); ++n) {
            block_sum += eta[n];
            if (block_sum / rational_index(n - prev) >= means[n] / 2) {
                ends.push_back(n);
                prev = n;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    if (ends.empty()) throw BlocksOutOfRange("no valid first block");
    return Blocks(std::move(ends));
}

Blocks find_aminf_blocks(const Seq& eta, Index N) {
    if (eta.traits().summable == Tri::no) throw NotSummable(eta.name());
    if (!eta.has_tail_sum()) throw NoTailOracle(eta.name());
    Prefix vals = materialize(eta, N);
    std::vector<Index> ends;
    Index prev = 0;
    while (prev < N) {
        Rat half = eta.tail_sum(prev).hi / 2;
        Rat block_sum(0);
        bool found = false;
        for (Index n = prev + 1; n <= N; ++n) {
            block_sum += vals[n];
            if (block_sum >= half) {
                ends.push_back(n);
                prev = n;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    if (ends.empty()) throw BlocksOutOfRange("no valid first block");
    return Blocks(std::move(ends));
}

}  // namespace amideal
