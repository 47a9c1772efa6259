#include "amideal/majorization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "amideal/errors.hpp"
#include "amideal/rat.hpp"

namespace amideal {

namespace {

using Vec = std::vector<Rat>;

Vec to_vec(const Prefix& p) {
    Vec v;
    v.reserve(p.size());
    for (Index i = 1; i <= p.size(); ++i) v.push_back(p[i]);
    return v;
}

Prefix to_prefix(const Vec& v) {
    Prefix p;
    for (const auto& x : v) p.push_back(x);
    return p;
}

// S[k] = x_1 + ... + x_k with S[0] = 0.
Vec psums(const Vec& x) {
    Vec s(x.size() + 1, Rat(0));
    for (std::size_t k = 0; k < x.size(); ++k) s[k + 1] = s[k] + x[k];
    return s;
}

void require_nonneg(const Vec& v, const char* name) {
    for (const auto& x : v)
        if (x < 0) throw BadParams(std::string(name) + " has a negative entry");
}

void require_shape(const Vec& v, const char* name) {
    require_nonneg(v, name);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) throw BadParams(std::string(name) + " is not nonincreasing");
}

// Direct solve for a window whose feasibility ratio peaks only at the far
// end.  A_k tracks the running eta~ prefix sum inside the corridor
// H_k <= A_k <= Xi_k - M_k with slopes in [0, xi_k]; L_k is the smallest
// value at k from which every later floor H_m stays reachable.
void corridor_split(const Vec& xi, const Vec& H, Vec& eta_out, Vec& mu_out) {
    const std::size_t n = xi.size();
    Vec L(n + 1);
    L[n] = H[n];
    for (std::size_t k = n - 1; k >= 1; --k)
        L[k] = rat_max(H[k], Rat(L[k + 1] - xi[k]));  // xi[k] is xi_{k+1}, 0-based
    Rat prev(0);
    for (std::size_t k = 1; k <= n; ++k) {
        Rat a = rat_max(L[k], prev);
        eta_out.push_back(a - prev);
        mu_out.push_back(xi[k - 1] - (a - prev));
        prev = a;
    }
}

// xi = eta~ + mu~ on a feasible window; recursion on the scaled sequence
// split at the smallest index where the prefix-sum ratio peaks.
void split_recurse(Vec xi, Vec eta, Vec mu, Vec& eta_out, Vec& mu_out) {
    const std::size_t n = xi.size();
    if (n == 0) return;
    std::size_t lead = 0;
    while (lead < n && xi[lead] == 0) ++lead;
    if (lead > 0) {
        // The hypothesis pins eta and mu to zero over a zero prefix of xi.
        for (std::size_t k = 0; k < lead; ++k) {
            eta_out.push_back(Rat(0));
            mu_out.push_back(Rat(0));
        }
        if (lead == n) return;
        split_recurse(Vec(xi.begin() + lead, xi.end()),
                      Vec(eta.begin() + lead, eta.end()),
                      Vec(mu.begin() + lead, mu.end()), eta_out, mu_out);
        return;
    }
    Vec H = psums(eta), M = psums(mu), Xi = psums(xi);
    Rat gamma(0);
    std::size_t kstar = n;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat r = (H[k] + M[k]) / Xi[k];
        if (r > gamma) {
            gamma = r;
            kstar = k;
        }
    }
    if (gamma == 0) {  // eta and mu vanish; any split works
        for (std::size_t k = 0; k < n; ++k) {
            eta_out.push_back(xi[k]);
            mu_out.push_back(Rat(0));
        }
        return;
    }
    if (kstar == n) {
        corridor_split(xi, H, eta_out, mu_out);
        return;
    }
    Vec sxi(n);
    for (std::size_t k = 0; k < n; ++k) sxi[k] = gamma * xi[k];
    Vec rho, sigma;
    split_recurse(Vec(sxi.begin(), sxi.begin() + kstar),
                  Vec(eta.begin(), eta.begin() + kstar),
                  Vec(mu.begin(), mu.begin() + kstar), rho, sigma);
    split_recurse(Vec(sxi.begin() + kstar, sxi.end()),
                  Vec(eta.begin() + kstar, eta.end()),
                  Vec(mu.begin() + kstar, mu.end()), rho, sigma);
    for (std::size_t k = 0; k < n; ++k) {
        eta_out.push_back(rho[k] / gamma);
        mu_out.push_back(sigma[k] / gamma);
    }
}

}  // namespace

Rat SubstochasticMatrix::at(Index r, Index c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Rat(0) : it->second;
}

SubstochasticMatrix matrix_from_dense(const std::vector<std::vector<Rat>>& m) {
    SubstochasticMatrix p;
    p.nrows = m.size();
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != m[0].size())
            throw DimensionMismatch("ragged rows in dense matrix");
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (m[r][c] != 0) p.entries[{r + 1, c + 1}] = m[r][c];
    }
    p.ncols = m.empty() ? 0 : m[0].size();
    validate_substochastic(p);
    return p;
}

void validate_substochastic(const SubstochasticMatrix& m) {
    std::map<Index, Rat> row_sum, col_sum;
    for (const auto& [rc, v] : m.entries) {
        if (rc.first < 1 || rc.first > m.nrows || rc.second < 1 || rc.second > m.ncols)
            throw BadParams("matrix entry out of range");
        if (v < 0) throw BadParams("negative matrix entry");
        row_sum[rc.first] += v;
        col_sum[rc.second] += v;
    }
    for (const auto& [r, s] : row_sum)
        if (s > 1) throw BadParams("row sum exceeds 1 at row " + std::to_string(r));
    for (const auto& [c, s] : col_sum)
        if (s > 1) throw BadParams("column sum exceeds 1 at column " + std::to_string(c));
}

std::pair<Prefix, Prefix> lemma31_split(const Prefix& xi, const Prefix& eta, const Prefix& mu) {
    if (xi.size() != eta.size() || xi.size() != mu.size())
        throw LengthMismatch("lemma31_split arguments must share a length");
    Vec vxi = to_vec(xi), veta = to_vec(eta), vmu = to_vec(mu);
    require_nonneg(vxi, "xi");
    require_nonneg(veta, "eta");
    require_nonneg(vmu, "mu");
    Vec H = psums(veta), M = psums(vmu), Xi = psums(vxi);
    for (std::size_t k = 1; k <= vxi.size(); ++k)
        if (H[k] + M[k] > Xi[k]) throw HypothesisViolated(k);
    Vec eta_out, mu_out;
    split_recurse(std::move(vxi), std::move(veta), std::move(vmu), eta_out, mu_out);
    return {to_prefix(eta_out), to_prefix(mu_out)};
}

SubstochasticMatrix markus_matrix(const Prefix& eta, const Prefix& xi) {
    if (eta.size() != xi.size())
        throw LengthMismatch("markus_matrix arguments must share a length");
    Vec veta = to_vec(eta), vxi = to_vec(xi);
    require_shape(veta, "eta");
    require_shape(vxi, "xi");
    const std::size_t n = vxi.size();
    Vec H = psums(veta), Xi = psums(vxi);
    for (std::size_t k = 1; k <= n; ++k)
        if (H[k] > Xi[k]) throw NotMajorized(k);

    SubstochasticMatrix p;
    p.nrows = p.ncols = n;

    bool pointwise = true;
    for (std::size_t j = 0; j < n && pointwise; ++j)
        if (veta[j] > vxi[j]) pointwise = false;
    if (pointwise) {
        for (std::size_t j = 0; j < n; ++j)
            if (veta[j] != 0) p.entries[{j + 1, j + 1}] = veta[j] / vxi[j];
        validate_substochastic(p);
        return p;
    }

    // Trim xi's tail mass so totals match, then move the surplus backwards
    // with pairwise averaging transforms until the target is reached.
    Vec y(n);
    Rat remaining = H[n];
    for (std::size_t j = 0; j < n; ++j) {
        y[j] = rat_min(vxi[j], remaining);
        remaining -= y[j];
    }
    std::vector<Vec> rows(n, Vec(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j)
        if (vxi[j] != 0) rows[j][j] = y[j] / vxi[j];

    for (std::size_t step = 0; step <= 2 * n; ++step) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (y[i] < veta[i]) {
                k = i;
                break;
            }
        if (k == n) break;  // no deficit and equal totals: y == eta
        std::size_t j = n;
        for (std::size_t i = 0; i < k; ++i)
            if (y[i] > veta[i]) j = i;
        if (j == n) throw Error("transfer chain lost prefix domination");
        Rat delta = rat_min(Rat(y[j] - veta[j]), Rat(veta[k] - y[k]));
        Rat spread = y[j] - y[k];
        Rat lam = 1 - delta / spread;
        for (std::size_t c = 0; c < n; ++c) {
            Rat rj = lam * rows[j][c] + (1 - lam) * rows[k][c];
            Rat rk = lam * rows[k][c] + (1 - lam) * rows[j][c];
            rows[j][c] = rj;
            rows[k][c] = rk;
        }
        y[j] -= delta;
        y[k] += delta;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (y[i] != veta[i]) throw Error("transfer chain failed to converge");

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rows[r][c] != 0 && vxi[c] != 0) p.entries[{r + 1, c + 1}] = rows[r][c];
    validate_substochastic(p);
    return p;
}

Prefix apply_matrix(const SubstochasticMatrix& P, const Prefix& xi) {
    if (xi.size() != P.ncols)
        throw DimensionMismatch("matrix has " + std::to_string(P.ncols) +
                                " columns, vector has " + std::to_string(xi.size()));
    Vec out(P.nrows, Rat(0));
    for (const auto& [rc, v] : P.entries) out[rc.first - 1] += v * xi[rc.second];
    return to_prefix(out);
}

std::pair<Prefix, Permutation> monotonize(const Prefix& x) {
    std::vector<Index> idx(x.size());
    std::iota(idx.begin(), idx.end(), Index{1});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Index a, Index b) { return x[a] > x[b]; });
    Prefix sorted;
    for (Index i : idx) sorted.push_back(x[i]);
    return {std::move(sorted), Permutation{std::move(idx)}};
}

SubstochasticMatrix compose_monotone(const SubstochasticMatrix& P, const Permutation& pi) {
    if (pi.image.size() > P.nrows)
        throw DimensionMismatch("permutation longer than matrix row count");
    std::vector<bool> seen(P.nrows + 1, false);
    for (Index v : pi.image) {
        if (v < 1 || v > P.nrows) throw BadParams("permutation image out of range");
        if (seen[v]) throw BadParams("permutation image repeats " + std::to_string(v));
        seen[v] = true;
    }
    SubstochasticMatrix q;
    q.nrows = pi.image.size();
    q.ncols = P.ncols;
    for (std::size_t i = 0; i < pi.image.size(); ++i) {
        Index src = pi.image[i];
        auto it = P.entries.lower_bound({src, 0});
        for (; it != P.entries.end() && it->first.first == src; ++it)
            q.entries[{static_cast<Index>(i + 1), it->first.second}] = it->second;
    }
    validate_substochastic(q);
    return q;
}

FanResult fan_dominates(const Prefix& rho, const Prefix& mu) {
    if (rho.size() != mu.size())
        throw LengthMismatch("fan_dominates arguments must share a length");
    const Index n = rho.size();
    Vec vr = to_vec(rho), vm = to_vec(mu);
    Vec sum(n);
    for (Index i = 0; i < n; ++i) sum[i] = vr[i] + vm[i];
    auto desc = [](Vec v) {
        std::sort(v.begin(), v.end(), std::greater<Rat>());
        return v;
    };
    Vec s = desc(sum), rs = desc(vr), ms = desc(vm);
    FanResult out;
    out.holds = true;
    for (Index i = 1; i <= n; ++i) {
        out.lhs.push_back(s[i - 1]);
        Rat rhs = rs[(i - 1) / 2] + ms[(i - 1) / 2];
        out.rhs.push_back(rhs);
        if (s[i - 1] > rhs) out.holds = false;
    }
    return out;
}

Prefix sum_decomposition_witness(const Prefix& xi, const Prefix& rho) {
    if (xi.size() != rho.size())
        throw LengthMismatch("sum_decomposition_witness arguments must share a length");
    Vec v;
    v.reserve(xi.size());
    for (Index i = 1; i <= xi.size(); ++i)
        v.push_back(rat_max(Rat(xi[i] - rho[i]), Rat(0)));
    std::sort(v.begin(), v.end(), std::greater<Rat>());
    return to_prefix(v);
}

}  // namespace amideal
