#pragma once

#include "hfold/rings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfold {

/// Row-sparse square matrix over a ring spec. No zero entries are stored;
/// rows keep columns sorted so equality is representation equality.
template <CommutativeRing R>
struct SparseMatrix {
    using Elem = typename R::Elem;
    int dim = 0;
    std::vector<std::vector<std::pair<int, Elem>>> rows;

    SparseMatrix() = default;
    explicit SparseMatrix(int n) : dim(n), rows(n) {}

    static SparseMatrix identity(const R& ring, int n)
    {
        SparseMatrix m(n);
        for (int i = 0; i < n; ++i)
            m.rows[i].emplace_back(i, ring.one());
        return m;
    }

    void set(const R& ring, int r, int c, Elem v)
    {
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, int col) { return p.first < col; });
        if (it != row.end() && it->first == c) {
            if (ring.is_zero(v))
                row.erase(it);
            else
                it->second = std::move(v);
        } else if (!ring.is_zero(v)) {
            row.insert(it, {c, std::move(v)});
        }
    }

    void add_to(const R& ring, int r, int c, const Elem& v)
    {
        if (ring.is_zero(v))
            return;
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, int col) { return p.first < col; });
        if (it != row.end() && it->first == c) {
            it->second = ring.add(it->second, v);
            if (ring.is_zero(it->second))
                row.erase(it);
        } else {
            row.insert(it, {c, v});
        }
    }

    Elem get(const R& ring, int r, int c) const
    {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, int col) { return p.first < col; });
        if (it != row.end() && it->first == c)
            return it->second;
        return ring.zero();
    }

    size_t nnz() const
    {
        size_t n = 0;
        for (const auto& row : rows)
            n += row.size();
        return n;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.dim == b.dim && a.rows == b.rows;
    }
};

template <CommutativeRing R>
SparseMatrix<R> mul(const R& ring, const SparseMatrix<R>& a, const SparseMatrix<R>& b)
{
    if (a.dim != b.dim)
        throw std::domain_error("SparseMatrix: dimension mismatch");
    SparseMatrix<R> out(a.dim);
    // scratch accumulator per row: dense values plus a touched list
    std::vector<typename R::Elem> acc(a.dim, ring.zero());
    std::vector<int> touched;
    std::vector<char> is_touched(a.dim, 0);
    for (int i = 0; i < a.dim; ++i) {
        touched.clear();
        for (const auto& [k, av] : a.rows[i]) {
            bool unit = ring.is_one(av);
            for (const auto& [j, bv] : b.rows[k]) {
                if (!is_touched[j]) {
                    is_touched[j] = 1;
                    touched.push_back(j);
                    acc[j] = unit ? bv : ring.mul(av, bv);
                } else {
                    acc[j] = ring.add(acc[j], unit ? bv : ring.mul(av, bv));
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = out.rows[i];
        row.reserve(touched.size());
        for (int j : touched) {
            if (!ring.is_zero(acc[j]))
                row.emplace_back(j, std::move(acc[j]));
            acc[j] = ring.zero();
            is_touched[j] = 0;
        }
    }
    return out;
}

template <CommutativeRing R>
SparseMatrix<R> mul(const R& ring, std::initializer_list<const SparseMatrix<R>*> factors)
{
    SparseMatrix<R> out;
    bool first = true;
    for (const auto* f : factors) {
        if (first) {
            out = *f;
            first = false;
        } else {
            out = mul(ring, out, *f);
        }
    }
    return out;
}

template <CommutativeRing R>
SparseMatrix<R> conjugate(const R& ring, const SparseMatrix<R>& x,
                          const SparseMatrix<R>& w, const SparseMatrix<R>& w_inv)
{
    // x^w = w^{-1} x w
    return mul(ring, mul(ring, w_inv, x), w);
}

template <CommutativeRing R>
bool is_identity(const R& ring, const SparseMatrix<R>& m)
{
    for (int i = 0; i < m.dim; ++i) {
        if (m.rows[i].size() != 1)
            return false;
        if (m.rows[i][0].first != i || !ring.eq(m.rows[i][0].second, ring.one()))
            return false;
    }
    return true;
}

template <CommutativeRing R>
std::string first_difference(const R& ring, const SparseMatrix<R>& a, const SparseMatrix<R>& b)
{
    for (int i = 0; i < a.dim; ++i) {
        size_t pa = 0, pb = 0;
        while (pa < a.rows[i].size() || pb < b.rows[i].size()) {
            int ca = pa < a.rows[i].size() ? a.rows[i][pa].first : a.dim;
            int cb = pb < b.rows[i].size() ? b.rows[i][pb].first : b.dim;
            if (ca == cb) {
                if (!ring.eq(a.rows[i][pa].second, b.rows[i][pb].second))
                    return "entry (" + std::to_string(i) + "," + std::to_string(ca) + "): " +
                           ring.to_string(a.rows[i][pa].second) + " vs " +
                           ring.to_string(b.rows[i][pb].second);
                ++pa, ++pb;
            } else if (ca < cb) {
                return "entry (" + std::to_string(i) + "," + std::to_string(ca) + "): " +
                       ring.to_string(a.rows[i][pa].second) + " vs 0";
            } else {
                return "entry (" + std::to_string(i) + "," + std::to_string(cb) + "): 0 vs " +
                       ring.to_string(b.rows[i][pb].second);
            }
        }
    }
    return "";
}

} // namespace hfold
