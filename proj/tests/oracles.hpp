#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Parts = std::vector<std::int64_t>;
using Exps = std::vector<int>;
using Poly = std::map<Exps, std::int64_t>;

/// Transpose the Ferrers diagram drawn as a boolean grid.
inline Parts transpose_diagram(const Parts& rows) {
    if (rows.empty())
        return {};
    const auto width = static_cast<std::size_t>(rows.front());
    std::vector<std::vector<bool>> grid(rows.size(), std::vector<bool>(width, false));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::int64_t c = 0; c < rows[r]; ++c)
            grid[r][static_cast<std::size_t>(c)] = true;
    Parts cols;
    for (std::size_t c = 0; c < width; ++c) {
        std::int64_t len = 0;
        for (std::size_t r = 0; r < rows.size(); ++r)
            len += grid[r][c] ? 1 : 0;
        cols.push_back(len);
    }
    return cols;
}

/// p(n) by Euler's pentagonal recurrence.
inline std::vector<std::int64_t> partition_counts(int n_max) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

/// is_partition with the pairwise quantifier exactly as written.
inline bool is_partition_pairwise(const std::vector<std::int64_t>& t) {
    const auto max = static_cast<std::int64_t>(t.size());
    for (std::int64_t i = 1; i < max; ++i)
        if (!(0 <= t[i] && t[i] < max - 1))
            return false;
    for (std::int64_t i = 1; i < max; ++i)
        for (std::int64_t j = i; j < max; ++j)
            if (!(t[j] <= t[i]))
                return false;
    return t[max - 1] == 0;
}

/// Every filling of the shape with 1..m, filtered by the row/column rules.
inline std::vector<std::vector<std::int64_t>> brute_force_ssyt(const Parts& shape, std::int64_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (std::int64_t c = 0; c < shape[r]; ++c)
            cells.emplace_back(r, static_cast<std::size_t>(c));
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> fill(cells.size(), 1);
    if (m < 1)
        return cells.empty() ? std::vector<std::vector<std::int64_t>>{{}} : out;
    while (true) {
        std::map<std::pair<std::size_t, std::size_t>, std::int64_t> at;
        for (std::size_t i = 0; i < cells.size(); ++i)
            at[cells[i]] = fill[i];
        bool ok = true;
        for (auto [r, c] : cells) {
            if (c > 0 && at[{r, c - 1}] > at[{r, c}])
                ok = false;
            if (r > 0 && at[{r - 1, c}] >= at[{r, c}])
                ok = false;
        }
        if (ok)
            out.push_back(fill);
        std::size_t pos = 0;
        while (pos < fill.size() && fill[pos] == m)
            fill[pos++] = 1;
        if (pos == fill.size())
            break;
        ++fill[pos];
    }
    return out;
}

inline Poly poly_times(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = ea[v] + eb[v];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// Complete homogeneous h_k(x1..xn): every exponent vector of total k.
inline Poly complete_homogeneous(int k, int n) {
    Poly out;
    if (k < 0)
        return out;
    Exps e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out[e] = 1;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[static_cast<std::size_t>(var)] = x;
            self(self, var + 1, left - x);
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded over all
/// permutations.
inline Poly jacobi_trudi(const Parts& lambda, int n) {
    const auto l = lambda.size();
    if (l == 0)
        return {{Exps(static_cast<std::size_t>(n), 0), 1}};
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < l; ++a)
            for (std::size_t b = a + 1; b < l; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Poly term{{Exps(static_cast<std::size_t>(n), 0), inversions % 2 ? -1 : 1}};
        for (std::size_t i = 0; i < l && !term.empty(); ++i) {
            int idx = static_cast<int>(lambda[i]) - static_cast<int>(i) + static_cast<int>(perm[i]);
            term = poly_times(term, complete_homogeneous(idx, n));
        }
        for (const auto& [e, c] : term)
            total[e] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    return total;
}

/// Invariance under every permutation of the variables.
inline bool symmetric_under_all_permutations(const Poly& p, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Poly q;
        for (const auto& [e, c] : p) {
            Exps f(e.size());
            for (std::size_t v = 0; v < e.size(); ++v)
                f[static_cast<std::size_t>(perm[v])] = e[v];
            q[f] = c;
        }
        if (q != p)
            return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace oracle
