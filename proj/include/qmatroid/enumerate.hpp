#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "qmatroid/subspace.hpp"

namespace qmatroid {

/// Default ceiling on exhaustive subspace enumeration.
inline constexpr std::uint64_t default_enumeration_guard = 10'000'000;

namespace detail {
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > std::numeric_limits<std::uint64_t>::max() - b)
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}
}  // namespace detail

/// Gaussian binomial [n choose k]_q, the number of k-dim subspaces of
/// F_q^n. Saturates at 2^64-1; only used at desk scale and for guards.
inline std::uint64_t count_subspaces(int n, int k, std::uint64_t q) {
    require(0 <= k && k <= n, errc::invalid_range, "need 0 <= k <= n");
    // recurrence [n k] = [n-1 k-1] + q^k [n-1 k]
    std::vector<std::uint64_t> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> nxt(static_cast<size_t>(n) + 1, 0);
        nxt[0] = 1;
        std::uint64_t qpow = 1;
        for (int j = 1; j <= i; ++j) {
            qpow = detail::sat_mul(qpow, q);
            nxt[j] = detail::sat_add(row[j - 1], detail::sat_mul(qpow, row[j]));
        }
        row = std::move(nxt);
    }
    return row[k];
}

inline std::uint64_t count_all_subspaces(int n, std::uint64_t q) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) total = detail::sat_add(total, count_subspaces(n, k, q));
    return total;
}

/// All k-dim subspaces of F_q^n as canonical RREFs, sorted by encoding.
/// Pivot-column choice plus free entries generates each exactly once.
inline std::vector<Subspace> enumerate_dim(const FieldPtr& f, int n, int k,
                                           std::uint64_t guard = default_enumeration_guard) {
    require(0 <= k && k <= n, errc::invalid_range, "need 0 <= k <= n");
    require(count_subspaces(n, k, f->order()) <= guard, errc::enumeration_too_large,
            "subspace count exceeds the enumeration guard");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(f, n));
        return out;
    }
    const std::uint32_t q = f->order();
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    auto next_combination = [&]() {
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) return false;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        return true;
    };
    do {
        std::vector<bool> is_piv(n, false);
        for (int c : piv) is_piv[c] = true;
        // free slots: (row i, col j) with j > piv[i], j not a pivot column
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_slots.emplace_back(i, j);
        std::vector<std::uint32_t> vals(free_slots.size(), 0);
        while (true) {
            Matrix m(f, k, n);
            for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
            for (size_t t = 0; t < free_slots.size(); ++t)
                m.at(free_slots[t].first, free_slots[t].second) =
                    static_cast<Field::value_type>(vals[t]);
            out.push_back(Subspace(std::move(m)));
            size_t t = 0;
            while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
            if (t == vals.size()) break;
            if (vals.empty()) break;
        }
    } while (next_combination());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Subspace> enumerate_all(const FieldPtr& f, int n,
                                           std::uint64_t guard = default_enumeration_guard) {
    require(count_all_subspaces(n, f->order()) <= guard, errc::enumeration_too_large,
            "subspace count exceeds the enumeration guard");
    std::vector<Subspace> out;
    for (int k = 0; k <= n; ++k) {
        auto level = enumerate_dim(f, n, k, guard);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// The (q^d - 1)/(q - 1) one-dimensional subspaces of A, each once.
inline std::vector<Subspace> one_dims_of(const Subspace& A) {
    const auto& f = A.field();
    const std::uint32_t q = f->order();
    const int d = A.dim();
    std::vector<Subspace> out;
    if (d == 0) return out;
    // projective coordinate vectors: last nonzero entry normalized to 1
    std::vector<Field::value_type> y(d, 0);
    for (int lead = 0; lead < d; ++lead) {
        std::fill(y.begin(), y.end(), 0);
        y[lead] = 1;
        while (true) {
            out.push_back(Subspace::line(f, A.from_coordinates(y)));
            int t = 0;
            while (t < lead && ++y[t] == q) y[t++] = 0;
            if (t == lead) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Codimension-1 subspaces of A: kernels of the projective functionals on
/// A's coordinate space, mapped through its basis.
inline std::vector<Subspace> hyperplanes_of(const Subspace& A) {
    const auto& f = A.field();
    const std::uint32_t q = f->order();
    const int d = A.dim();
    std::vector<Subspace> out;
    if (d == 0) return out;
    std::vector<Field::value_type> c(d, 0);
    for (int lead = 0; lead < d; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        while (true) {
            // kernel of y -> c.y inside F_q^d: for j != lead, basis vector
            // e_j - (c_j / c_lead) e_lead ... with c_lead = 1.
            std::vector<Subspace::Vector> gens;
            for (int j = 0; j < d; ++j) {
                if (j == lead) continue;
                std::vector<Field::value_type> y(d, 0);
                y[j] = 1;
                y[lead] = f->neg(c[j]);
                gens.push_back(A.from_coordinates(y));
            }
            out.push_back(Subspace::span(f, A.ambient(), gens));
            int t = 0;
            while (t < lead && ++c[t] == q) c[t++] = 0;
            if (t == lead) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All subspaces B with A <= B <= F_q^n, lifted through a fixed complement
/// (the non-pivot standard basis vectors of A).
inline std::vector<Subspace> superspaces_of(const Subspace& A,
                                            std::uint64_t guard = default_enumeration_guard) {
    const auto& f = A.field();
    const int n = A.ambient();
    const int d = A.dim();
    std::vector<bool> is_piv(n, false);
    for (int c : A.pivots()) is_piv[c] = true;
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
        if (!is_piv[j]) comp.push_back(j);
    std::vector<Subspace> out;
    for (const Subspace& T : enumerate_all(f, n - d, guard)) {
        std::vector<Subspace::Vector> gens;
        for (int i = 0; i < A.dim(); ++i)
            gens.emplace_back(A.basis().row(i).begin(), A.basis().row(i).end());
        for (int i = 0; i < T.dim(); ++i) {
            Subspace::Vector g(n, 0);
            for (int j = 0; j < n - d; ++j) g[comp[j]] = T.basis().at(i, j);
            gens.push_back(std::move(g));
        }
        out.push_back(Subspace::span(f, n, gens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Materialized list of every subspace of F_q^n with O(1) key lookup.
/// Shared scratch structure for exhaustive checks and reconstruction.
struct SubspaceUniverse {
    FieldPtr field;
    int n = 0;
    std::vector<Subspace> all;                   // sorted by (dim, encoding)
    std::unordered_map<std::string, int> index;  // encode() -> position

    static SubspaceUniverse make(const FieldPtr& f, int n,
                                 std::uint64_t guard = default_enumeration_guard) {
        SubspaceUniverse u;
        u.field = f;
        u.n = n;
        u.all = enumerate_all(f, n, guard);
        u.index.reserve(u.all.size() * 2);
        for (size_t i = 0; i < u.all.size(); ++i) u.index.emplace(u.all[i].encode(), static_cast<int>(i));
        return u;
    }

    int of(const Subspace& s) const {
        auto it = index.find(s.encode());
        require(it != index.end(), errc::ambient_mismatch, "subspace not in universe");
        return it->second;
    }
    size_t size() const noexcept { return all.size(); }
};

}  // namespace qmatroid
