#pragma once

#include <cstdint>
#include <vector>

#include "nw/matrix.hpp"
#include "nw/quadruple.hpp"

namespace nw {

struct GaussianInt {
    int re = 0;
    int im = 0;
    friend bool operator==(GaussianInt x, GaussianInt y) {
        return x.re == y.re && x.im == y.im;
    }
};

// Square matrix over Gaussian integers; for quaternary Hadamard matrices every
// entry is one of 1, -1, i, -i.
class GaussianMatrix {
  public:
    explicit GaussianMatrix(int dim)
        : dim_(dim), v_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    GaussianInt& at(int i, int j) { return v_[static_cast<std::size_t>(i) * dim_ + j]; }
    GaussianInt at(int i, int j) const { return v_[static_cast<std::size_t>(i) * dim_ + j]; }

  private:
    int dim_;
    std::vector<GaussianInt> v_;
};

// The order-2n quaternary Hadamard construction over the amicable set
// {A*R, B, C, D}:
//   (1+i)/2 * [ X1 + iB   C + iD  ]      with X1 = A*R.
//             [ iC + D   -iX1 - B ]
// To stay in exact integers the entry is produced as (1+i)(x+iy) = (x-y) +
// (x+y)i and halved; both components are even whenever x, y are +-1, and the
// result is always a Gaussian unit.
inline GaussianMatrix build_quaternary(const Quadruple& q) {
    if (!verify_additivity(q))
        throw NotAdditive("quaternary construction requires the additivity identity");
    const int n = q.order();
    const IntMatrix x1 = apply_reversal(q.a);
    const IntMatrix mb = circulant(q.b);
    const IntMatrix mc = circulant(q.c);
    const IntMatrix md = circulant(q.d);
    auto unit = [](int x, int y) {
        // (1+i)(x+iy)/2 for x, y in {-1, +1}
        return GaussianInt{(x - y) / 2, (x + y) / 2};
    };
    GaussianMatrix h(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            h.at(i, j) = unit(x1.at(i, j), mb.at(i, j));           // X1 + iB
            h.at(i, n + j) = unit(mc.at(i, j), md.at(i, j));       // C + iD
            h.at(n + i, j) = unit(md.at(i, j), mc.at(i, j));       // D + iC
            h.at(n + i, n + j) = unit(-mb.at(i, j), -x1.at(i, j)); // -B - iX1
        }
    return h;
}

// Exact check H*H^adjoint = dim*I over Gaussian integers.
inline bool verify_quaternary(const GaussianMatrix& h) {
    const int d = h.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            GaussianInt e = h.at(i, j);
            if (e.re * e.re + e.im * e.im != 1)
                throw NonUnitEntry("quaternary entry must be a Gaussian unit");
        }
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            long long re = 0, im = 0;
            for (int k = 0; k < d; ++k) {
                const GaussianInt x = h.at(i, k), y = h.at(j, k);
                re += static_cast<long long>(x.re) * y.re + static_cast<long long>(x.im) * y.im;
                im += static_cast<long long>(x.im) * y.re - static_cast<long long>(x.re) * y.im;
            }
            if (im != 0 || re != (i == j ? d : 0)) return false;
        }
    return true;
}

}  // namespace nw
