#include "pog/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "pog/verdict.hpp"

namespace pog {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.resize(size_t(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw ModelError("ragged matrix literal");
        int j = 0;
        for (long v : r) at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<Vec>& cols) {
    IntMatrix m(rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != rows) throw ModelError("column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec IntMatrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec IntMatrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

std::vector<Vec> IntMatrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return a_[k] < o.a_[k];
    return false;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ModelError("matrix product dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Vec IntMatrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw ModelError("matrix apply dimension mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw ModelError("hstack row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw ModelError("determinant of non-square matrix");
    // fraction-free Gaussian elimination (Bareiss)
    IntMatrix m = *this;
    int n = rows_;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::optional<IntMatrix> IntMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Int d = determinant();
    if (d != 1 && d != -1) return std::nullopt;
    int n = rows_;
    // adjugate via cofactors; n stays tiny in this code base
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = at(r, c);
                }
                ++rr;
            }
            Int cof = (n == 1) ? Int(1) : minor.determinant();
            if ((i + j) % 2) cof = -cof;
            inv.at(j, i) = cof / d;
        }
    return inv;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? "," : "");
        os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

namespace {

void negate_column(IntMatrix& m, int j) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

void axpy_column(IntMatrix& m, int dst, int src, const Int& q) {
    // column dst -= q * column src
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

// Shared reduction; U accumulates the column operations when present.
IntMatrix hnf_impl(const IntMatrix& M, IntMatrix* U) {
    IntMatrix m = M;
    if (U) *U = IntMatrix::identity(M.cols());
    int c = 0;
    for (int i = 0; i < m.rows() && c < m.cols(); ++i) {
        // Euclid across columns c.. in row i until one nonzero entry remains.
        while (true) {
            int best = -1;
            for (int j = c; j < m.cols(); ++j) {
                if (m.at(i, j) == 0) continue;
                if (best < 0 || cmp(abs(m.at(i, j)), abs(m.at(i, best))) < 0) best = j;
            }
            if (best < 0) break;
            if (best != c) {
                for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, c), m.at(r, best));
                if (U)
                    for (int r = 0; r < U->rows(); ++r) std::swap(U->at(r, c), U->at(r, best));
            }
            bool done = true;
            for (int j = c + 1; j < m.cols(); ++j) {
                if (m.at(i, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(i, c).get_mpz_t());
                axpy_column(m, j, c, q);
                if (U) axpy_column(*U, j, c, q);
                if (m.at(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(i, c) == 0) continue;
        if (m.at(i, c) < 0) {
            negate_column(m, c);
            if (U) negate_column(*U, c);
        }
        // reduce entries left of this pivot into [0, pivot)
        for (int j = 0; j < c; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(i, c).get_mpz_t());
            axpy_column(m, j, c, q);
            if (U) axpy_column(*U, j, c, q);
        }
        ++c;
    }
    IntMatrix h(m.rows(), c);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < c; ++j) h.at(i, j) = m.at(i, j);
    return h;
}

}  // namespace

IntMatrix hnf(const IntMatrix& M) { return hnf_impl(M, nullptr); }

std::pair<IntMatrix, IntMatrix> hnf_with_transform(const IntMatrix& M) {
    IntMatrix U;
    IntMatrix H = hnf_impl(M, &U);
    return {H, U};
}

IntMatrix kernel_basis(const IntMatrix& M) {
    auto [H, U] = hnf_with_transform(M);
    int k = M.cols() - H.cols();
    IntMatrix ker(M.cols(), k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < M.cols(); ++i) ker.at(i, j) = U.at(i, H.cols() + j);
    return hnf(ker);
}

std::optional<Vec> solve(const IntMatrix& M, const Vec& b) {
    if (int(b.size()) != M.rows()) throw ModelError("solve dimension mismatch");
    auto [H, U] = hnf_with_transform(M);
    Vec residual = b;
    Vec y(H.cols(), 0);
    int row = 0;
    for (int j = 0; j < H.cols(); ++j) {
        while (row < H.rows() && H.at(row, j) == 0) {
            if (residual[row] != 0) return std::nullopt;
            ++row;
        }
        if (row >= H.rows()) return std::nullopt;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), residual[row].get_mpz_t(), H.at(row, j).get_mpz_t());
        if (r != 0) return std::nullopt;
        y[j] = q;
        for (int i = row; i < H.rows(); ++i) residual[i] -= q * H.at(i, j);
        ++row;
    }
    for (int i = 0; i < H.rows(); ++i)
        if (residual[i] != 0) return std::nullopt;
    Vec x(M.cols(), 0);
    for (int i = 0; i < M.cols(); ++i)
        for (int j = 0; j < H.cols(); ++j) x[i] += U.at(i, j) * y[j];
    return x;
}

namespace {

// Elementary row/column reduction to diagonal form; P tracks row operations
// when requested (P * M * Q = D).
void smith_reduce(IntMatrix& m, IntMatrix* P) {
    int n = m.rows(), c = m.cols();
    int t = 0;
    const int steps = std::min(n, c);
    while (t < steps) {
        // find nonzero entry of smallest absolute value in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < c; ++j) {
                if (m.at(i, j) == 0) continue;
                if (pi < 0 || cmp(abs(m.at(i, j)), abs(m.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) {
            for (int j = 0; j < c; ++j) std::swap(m.at(t, j), m.at(pi, j));
            if (P)
                for (int j = 0; j < P->cols(); ++j) std::swap(P->at(t, j), P->at(pi, j));
        }
        if (pj != t)
            for (int i = 0; i < n; ++i) std::swap(m.at(i, t), m.at(i, pj));
        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (int j = 0; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
            if (P)
                for (int j = 0; j < P->cols(); ++j) P->at(i, j) -= q * P->at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < c; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (int i = 0; i < n; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        if (m.at(t, t) < 0) {
            for (int j = 0; j < c; ++j) m.at(t, j) = -m.at(t, j);
            if (P)
                for (int j = 0; j < P->cols(); ++j) P->at(t, j) = -P->at(t, j);
        }
        // divisibility: fold any non-divisible entry into the pivot block
        bool redo = false;
        for (int i = t + 1; i < n && !redo; ++i)
            for (int j = t + 1; j < c && !redo; ++j) {
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = 0; jj < c; ++jj) m.at(t, jj) += m.at(i, jj);
                    if (P)
                        for (int jj = 0; jj < P->cols(); ++jj) P->at(t, jj) += P->at(i, jj);
                    redo = true;
                }
            }
        if (redo) continue;
        ++t;
    }
}

}  // namespace

std::vector<Int> snf(const IntMatrix& M) {
    IntMatrix m = M;
    smith_reduce(m, nullptr);
    std::vector<Int> d;
    for (int t = 0; t < std::min(m.rows(), m.cols()); ++t)
        if (m.at(t, t) != 0) d.push_back(m.at(t, t));
    return d;
}

SmithQuotient smith_quotient(int ambient_rank, const IntMatrix& M) {
    if (M.cols() > 0 && M.rows() != ambient_rank) throw ModelError("smith_quotient rank mismatch");
    IntMatrix m = M.cols() ? M : IntMatrix(ambient_rank, 0);
    IntMatrix P = IntMatrix::identity(ambient_rank);
    smith_reduce(m, &P);
    SmithQuotient q;
    q.P = P;
    auto inv = P.inverse();
    if (!inv) throw ModelError("smith transform not unimodular");
    q.Pinv = *inv;
    q.factor.assign(ambient_rank, Int(0));
    for (int t = 0; t < std::min(m.rows(), m.cols()); ++t)
        if (m.at(t, t) != 0) q.factor[t] = m.at(t, t);
    return q;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
Vec vec_scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}
std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        s += v[i].get_str();
        if (i + 1 < v.size()) s += ",";
    }
    return s + ")";
}

}  // namespace pog
