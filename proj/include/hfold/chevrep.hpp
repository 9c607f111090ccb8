#pragma once

// Integer-level representation data for the three Chevalley models: the
// natural 5-dimensional module for A4, the 12-dimensional module for D6,
// and the 248-dimensional adjoint module for E8. Every root element is
// exp of a nilpotent with integer entries, so each root gets a linear and
// (for E8) a quadratic coefficient matrix; the ring-generic model layers
// arguments and twists on top.

#include "hfold/rootsys.hpp"

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hfold {

struct IntEntry {
    int row, col, val;
};

struct RootMatrixData {
    std::vector<IntEntry> linear;    // coefficient of r
    std::vector<IntEntry> quadratic; // coefficient of r^2
};

class ChevalleyRep {
public:
    Kind kind;
    const RootSystem* sys;
    int dim;
    std::vector<RootMatrixData> mats; // per root index

    explicit ChevalleyRep(Kind k) : kind(k), sys(&RootSystem::get(k))
    {
        switch (k) {
        case Kind::A4: build_a4(); break;
        case Kind::D6: build_d6(); break;
        case Kind::E8: build_e8(); break;
        default: throw std::domain_error("ChevalleyRep: A4, D6 or E8 only");
        }
    }

    /// Sign cocycle on the root lattice (E8 only): bilinear with
    /// eps(d_i, d_i) = -1 and eps(d_i, d_j) = -1 exactly for diagram edges
    /// with i < j. Structure constants are N_{a,b} = eps(a,b).
    int eps(int root_a, int root_b) const
    {
        if (kind != Kind::E8)
            throw std::domain_error("eps: E8 only");
        const auto& ca = sys->base_coords[root_a];
        const auto& cb = sys->base_coords[root_b];
        long total = 0;
        for (int i = 0; i < 8; ++i) {
            if (ca[i].is_zero())
                continue;
            long ai = static_cast<long>(ca[i].num.a.convert_to<long>());
            for (int j = 0; j < 8; ++j) {
                if (cb[j].is_zero() || !eps_table_[i][j])
                    continue;
                total += ai * static_cast<long>(cb[j].num.a.convert_to<long>());
            }
        }
        return (total % 2 == 0) ? 1 : -1;
    }

    /// Structure constant N_{a,b} of the basis actually used: the bilinear
    /// cocycle with the basis vectors of negative roots flipped, which
    /// restores the standard pairing [y_a, y_{-a}] = h_a.
    int nconst(int root_a, int root_b) const
    {
        int s = 1;
        if (!sys->positive[root_a])
            s = -s;
        if (!sys->positive[root_b])
            s = -s;
        int sum = sum_root(root_a, root_b);
        if (sum < 0)
            throw std::domain_error("nconst: a+b is not a root");
        if (!sys->positive[sum])
            s = -s;
        return s * eps(root_a, root_b);
    }

    /// Chevalley structure constant c_{a,b} with [x_a(r), x_b(s)] =
    /// x_{a+b}(c_{a,b} rs) whenever a+b is a root (untwisted model).
    int structure_sign(int root_a, int root_b) const;

    /// Index of root a + root b, or -1.
    int sum_root(int a, int b) const
    {
        std::vector<GoldenRat> v(sys->space_dim);
        for (int i = 0; i < sys->space_dim; ++i)
            v[i] = sys->roots[a].c[i] + sys->roots[b].c[i];
        return sys->index_of(v);
    }

private:
    int eps_table_[8][8] = {};

    void build_a4()
    {
        dim = 5;
        mats.resize(sys->size());
        for (int r = 0; r < static_cast<int>(sys->size()); ++r) {
            int i = -1, j = -1;
            for (int t = 0; t < 5; ++t) {
                if (sys->roots[r].c[t] == GoldenRat(1))
                    i = t;
                if (sys->roots[r].c[t] == GoldenRat(-1))
                    j = t;
            }
            mats[r].linear.push_back(IntEntry{i, j, 1});
        }
    }

    void build_d6()
    {
        dim = 12;
        mats.resize(sys->size());
        for (int r = 0; r < static_cast<int>(sys->size()); ++r) {
            int pi = -1, pj = -1, ni = -1, nj = -1;
            for (int t = 0; t < 6; ++t) {
                if (sys->roots[r].c[t] == GoldenRat(1))
                    (pi < 0 ? pi : pj) = t;
                if (sys->roots[r].c[t] == GoldenRat(-1))
                    (ni < 0 ? ni : nj) = t;
            }
            auto& m = mats[r].linear;
            if (pi >= 0 && ni >= 0) {
                // e_i - e_j: id + r (E_ij (+) -E_ji')
                m.push_back(IntEntry{pi, ni, 1});
                m.push_back(IntEntry{6 + ni, 6 + pi, -1});
            } else if (pi >= 0) {
                // e_i + e_j (i<j): upper-right block E_ij - E_ji
                m.push_back(IntEntry{pi, 6 + pj, 1});
                m.push_back(IntEntry{pj, 6 + pi, -1});
            } else {
                // -e_i - e_j (i<j): lower-left block E_ji - E_ij
                m.push_back(IntEntry{6 + nj, ni, 1});
                m.push_back(IntEntry{6 + ni, nj, -1});
            }
        }
    }

    void build_e8()
    {
        dim = 248;
        // basis order: x_root (root index), then h_1..h_8 at 240..247
        static const int edges[][2] = {{7, 1}, {1, 2}, {2, 3}, {3, 4},
                                       {4, 5}, {4, 6}, {6, 8}};
        for (int i = 0; i < 8; ++i)
            eps_table_[i][i] = 1;
        for (auto& e : edges) {
            int i = e[0] - 1, j = e[1] - 1;
            eps_table_[std::min(i, j)][std::max(i, j)] = 1;
        }
        int n = static_cast<int>(sys->size());
        mats.resize(n);
        auto ipz = [&](int a, int b) {
            const GoldenRat& v = sys->ip(a, b);
            return static_cast<int>(v.num.a.convert_to<long>());
        };
        for (int xi = 0; xi < n; ++xi) {
            auto& m = mats[xi];
            for (int beta = 0; beta < n; ++beta) {
                if (beta == sys->neg[xi])
                    continue;
                int sum = sum_root(xi, beta);
                if (sum >= 0)
                    m.linear.push_back(IntEntry{sum, beta, nconst(xi, beta)});
            }
            // ad y_xi (y_{-xi}) = h_xi = sum coords(xi)_i h_i
            for (int i = 0; i < 8; ++i) {
                const auto& c = sys->base_coords[xi][i];
                if (!c.is_zero())
                    m.linear.push_back(IntEntry{
                        240 + i, sys->neg[xi],
                        static_cast<int>(c.num.a.convert_to<long>())});
            }
            // ad x_xi (h_i) = -<xi, d_i^v> x_xi
            for (int i = 0; i < 8; ++i) {
                int p = ipz(xi, sys->base_index(i));
                if (p != 0)
                    m.linear.push_back(IntEntry{xi, 240 + i, -p});
            }
            // (ad^2/2)(y_{-xi}) = -y_xi, the only quadratic term
            m.quadratic.push_back(IntEntry{xi, sys->neg[xi], -1});
        }
    }
};

inline int ChevalleyRep::structure_sign(int root_a, int root_b) const
{
    int sum = sum_root(root_a, root_b);
    if (sum < 0)
        throw std::domain_error("structure_sign: a+b is not a root");
    if (kind == Kind::E8)
        return nconst(root_a, root_b);
    // read the sign off the matrix product: [x_a(1), x_b(1)] = x_{a+b}(c)
    // and for these nilpotents c E_{a+b} = A_a A_b - A_b A_a at the first
    // marker entry of A_{a+b}
    auto val_at = [&](const std::vector<IntEntry>& m, int r, int c) {
        for (const auto& e : m)
            if (e.row == r && e.col == c)
                return e.val;
        return 0;
    };
    const auto& target = mats[sum].linear.front();
    const auto& A = mats[root_a].linear;
    const auto& B = mats[root_b].linear;
    int acc = 0;
    for (const auto& ea : A)
        if (ea.row == target.row)
            acc += ea.val * val_at(B, ea.col, target.col);
    for (const auto& eb : B)
        if (eb.row == target.row)
            acc -= eb.val * val_at(A, eb.col, target.col);
    if (acc % target.val != 0 || (acc / target.val != 1 && acc / target.val != -1))
        throw std::logic_error("structure_sign: commutator is not a unit multiple");
    return acc / target.val;
}

/// Check the Jacobi identity on basis triples of the E8 Chevalley basis:
/// all triples of root elements (exhaustive over unordered root triples)
/// and all (root, root, coroot) triples.
struct JacobiReport {
    long triples_checked = 0;
    long failures = 0;
};

inline JacobiReport verify_jacobi_e8(const ChevalleyRep& rep)
{
    if (rep.kind != Kind::E8)
        throw std::domain_error("verify_jacobi_e8: wrong kind");
    const RootSystem& s = *rep.sys;
    const int n = static_cast<int>(s.size());
    const int dim = n + 8;
    JacobiReport out;

    // flat precomputed bracket table of basis elements
    struct Term {
        std::int16_t idx;
        std::int8_t coeff;
    };
    std::vector<std::array<Term, 8>> table(dim * dim);
    std::vector<std::uint8_t> tsize(dim * dim, 0);
    auto ipz = [&](int a, int b) {
        return static_cast<int>(s.ip(a, b).num.a.convert_to<long>());
    };
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            auto& slot = table[u * dim + v];
            auto& sz = tsize[u * dim + v];
            if (u >= n && v >= n)
                continue;
            if (u >= n || v >= n) {
                int h = (u >= n ? u : v) - n;
                int x = u >= n ? v : u;
                int sign = u >= n ? 1 : -1;
                int p = ipz(x, s.base_index(h));
                if (p)
                    slot[sz++] = {static_cast<std::int16_t>(x),
                                  static_cast<std::int8_t>(sign * p)};
                continue;
            }
            if (v == s.neg[u]) {
                // [y_u, y_{-u}] = h_u
                for (int i = 0; i < 8; ++i) {
                    int c = static_cast<int>(s.base_coords[u][i].num.a.convert_to<long>());
                    if (c)
                        slot[sz++] = {static_cast<std::int16_t>(n + i),
                                      static_cast<std::int8_t>(c)};
                }
                continue;
            }
            int sum = rep.sum_root(u, v);
            if (sum >= 0)
                slot[sz++] = {static_cast<std::int16_t>(sum),
                              static_cast<std::int8_t>(rep.nconst(u, v))};
        }

    std::vector<long> acc(dim, 0);
    std::vector<int> touched;
    auto add_term = [&](int u, int v, int w, long mult) {
        // mult * [[u, v], w]
        const auto& t1 = table[u * dim + v];
        int s1 = tsize[u * dim + v];
        for (int i = 0; i < s1; ++i) {
            const auto& t2 = table[t1[i].idx * dim + w];
            int s2 = tsize[t1[i].idx * dim + w];
            for (int j = 0; j < s2; ++j) {
                int idx = t2[j].idx;
                if (acc[idx] == 0)
                    touched.push_back(idx);
                acc[idx] += mult * t1[i].coeff * t2[j].coeff;
            }
        }
    };
    auto jacobi_zero = [&](int a, int b, int c) {
        touched.clear();
        add_term(a, b, c, 1);
        add_term(b, c, a, 1);
        add_term(c, a, b, 1);
        bool ok = true;
        for (int idx : touched) {
            if (acc[idx])
                ok = false;
            acc[idx] = 0;
        }
        return ok;
    };

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                ++out.triples_checked;
                if (!jacobi_zero(a, b, c))
                    ++out.failures;
            }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int h = 0; h < 8; ++h) {
                ++out.triples_checked;
                if (!jacobi_zero(a, b, n + h))
                    ++out.failures;
            }
    return out;
}

} // namespace hfold
