#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pog {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Dense matrix over arbitrary-precision integers, row-major.
// Hermite reduction blows up intermediate entries, so fixed-width
// integers are never used here.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix from_columns(int rows, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Vec column(int j) const;
    Vec row(int i) const;
    std::vector<Vec> columns() const;

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const;

    IntMatrix operator*(const IntMatrix& o) const;
    Vec apply(const Vec& v) const;  // this * v
    IntMatrix transpose() const;
    IntMatrix hstack(const IntMatrix& o) const;

    Int determinant() const;                    // square only
    std::optional<IntMatrix> inverse() const;   // exact; exists iff det = +-1

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Column-style Hermite normal form: returns H whose nonzero columns are a
// basis of the column lattice of M.  Pivot rows strictly increase column by
// column, pivots are positive, and every entry sitting left of a pivot in
// its row is reduced into [0, pivot).  Zero columns are dropped.
IntMatrix hnf(const IntMatrix& M);

// Same reduction, also returning a unimodular U with M * U = [H | 0].
// The trailing cols(M) - cols(H) columns of U span the kernel of M.
std::pair<IntMatrix, IntMatrix> hnf_with_transform(const IntMatrix& M);

// Basis of { x : M x = 0 }, columns in HNF.
IntMatrix kernel_basis(const IntMatrix& M);

// One integer solution of M x = b, if any.
std::optional<Vec> solve(const IntMatrix& M, const Vec& b);

// Nonzero invariant factors d1 | d2 | ... of M.
std::vector<Int> snf(const IntMatrix& M);

// Full Smith decomposition data for building quotients Z^n / col(M):
// P (n x n, unimodular) and the invariant factor of each transformed
// coordinate (0 meaning a free coordinate): y = P x, coordinate i taken
// modulo factor[i] when factor[i] > 0.
struct SmithQuotient {
    IntMatrix P;              // change of coordinates on the ambient Z^n
    IntMatrix Pinv;
    std::vector<Int> factor;  // size n; 1 = coordinate dies, 0 = free
};
SmithQuotient smith_quotient(int ambient_rank, const IntMatrix& M);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& v);

}  // namespace pog
