#pragma once

#include <cstdint>
#include <vector>

#include "nw/quadruple.hpp"
#include "nw/row.hpp"

namespace nw {

// Dense square integer matrix, row-major.  Only verification and export paths
// materialize these; the search loop never does.
class IntMatrix {
  public:
    explicit IntMatrix(int dim) : dim_(dim), v_(static_cast<std::size_t>(dim) * dim, 0) {}

    int dim() const { return dim_; }
    int& at(int i, int j) { return v_[static_cast<std::size_t>(i) * dim_ + j]; }
    int at(int i, int j) const { return v_[static_cast<std::size_t>(i) * dim_ + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.dim_ == y.dim_ && x.v_ == y.v_;
    }

  private:
    int dim_;
    std::vector<int> v_;
};

// Circulant matrix from its first row: entry (i,j) = row[(j-i) mod n].
inline IntMatrix circulant(const CirculantRow& row) {
    const int n = row.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = row.entry(((j - i) % n + n) % n);
    return m;
}

// Back circulant matrix from its first row: entry (i,j) = row[(i+j) mod n].
inline IntMatrix back_circulant(const CirculantRow& row) {
    const int n = row.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = row.entry((i + j) % n);
    return m;
}

// The reversal permutation R: back circulant with first row (0, ..., 0, 1).
inline IntMatrix reversal_matrix(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, (n - 1 - i + n) % n) = 1;
    return m;
}

// A*R as a dense matrix: back circulant whose first row is A's first row
// reversed (entry j = a_{n-1-j}), hence symmetric for every A.
inline IntMatrix apply_reversal(const CirculantRow& row) {
    const int n = row.order();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = row.entry(((n - 1 - (i + j)) % n + n) % n);
    return m;
}

inline IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    const int d = x.dim();
    IntMatrix out(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const int xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < d; ++j) out.at(i, j) += xv * y.at(k, j);
        }
    return out;
}

inline IntMatrix transpose(const IntMatrix& x) {
    IntMatrix out(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) out.at(j, i) = x.at(i, j);
    return out;
}

// Pairwise amicability X*Y^T = Y*X^T over explicit integer matrices.
inline bool verify_amicability(const std::vector<IntMatrix>& mats) {
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            if (mats[i].dim() != mats[j].dim())
                throw MixedOrders("amicability check on mixed dimensions");
            IntMatrix t1 = multiply(mats[i], transpose(mats[j]));
            IntMatrix t2 = multiply(mats[j], transpose(mats[i]));
            if (!(t1 == t2)) return false;
        }
    return true;
}

// Row-level overload.  Each row is materialized the way the Hadamard
// constructions consume it: symmetric rows as plain circulants, a general or
// almost-symmetric row as its reversal product X*R (the substitution that
// makes a near Williamson quadruple amicable).
inline bool verify_amicability(const std::vector<CirculantRow>& rows,
                               const std::vector<SymmetryKind>& kinds) {
    std::vector<IntMatrix> mats;
    mats.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].order() != rows[0].order())
            throw MixedOrders("amicability check on mixed orders");
        if (kinds.at(i) == SymmetryKind::Symmetric)
            mats.push_back(circulant(rows[i]));
        else
            mats.push_back(apply_reversal(rows[i]));
    }
    return verify_amicability(mats);
}

// The 4n x 4n Williamson array over the amicable set {A*R, B, C, D}:
//   [  X1  X2  X3  X4 ]
//   [ -X2  X1  X4 -X3 ]
//   [ -X3 -X4  X1  X2 ]
//   [ -X4  X3 -X2  X1 ]
inline IntMatrix build_williamson_block(const Quadruple& q) {
    if (!verify_additivity(q))
        throw NotAdditive("williamson block requires the additivity identity");
    const int n = q.order();
    const IntMatrix x1 = apply_reversal(q.a);
    const IntMatrix x2 = circulant(q.b);
    const IntMatrix x3 = circulant(q.c);
    const IntMatrix x4 = circulant(q.d);
    const IntMatrix* blk[4][4] = {{&x1, &x2, &x3, &x4},
                                  {&x2, &x1, &x4, &x3},
                                  {&x3, &x4, &x1, &x2},
                                  {&x4, &x3, &x2, &x1}};
    const int sgn[4][4] = {{1, 1, 1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}};
    IntMatrix w(4 * n);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    w.at(bi * n + i, bj * n + j) = sgn[bi][bj] * blk[bi][bj]->at(i, j);
    return w;
}

// Exact Hadamard check M*M^T = dim * I.
inline bool is_hadamard(const IntMatrix& m) {
    const int d = m.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            long long dot = 0;
            for (int k = 0; k < d; ++k)
                dot += static_cast<long long>(m.at(i, k)) * m.at(j, k);
            if (dot != (i == j ? d : 0)) return false;
        }
    return true;
}

}  // namespace nw
