#include "curvco/linalg.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace curvco {

Mat mat_mul(const CoeffRing& R, const Mat& A, const Mat& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat C(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.cols(); ++k) {
            int64_t a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols(); ++j)
                if (B.at(k, j) != 0) C.at(i, j) = R.add(C.at(i, j), R.mul(a, B.at(k, j)));
        }
    return C;
}

Mat mat_add(const CoeffRing& R, const Mat& A, const Mat& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("mat_add: shape mismatch");
    Mat C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) C.at(i, j) = R.add(A.at(i, j), B.at(i, j));
    return C;
}

Mat mat_sub(const CoeffRing& R, const Mat& A, const Mat& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("mat_sub: shape mismatch");
    Mat C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) C.at(i, j) = R.sub(A.at(i, j), B.at(i, j));
    return C;
}

Mat mat_scale(const CoeffRing& R, int64_t c, const Mat& A) {
    Mat C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) C.at(i, j) = R.mul(c, A.at(i, j));
    return C;
}

Mat mat_transpose(const Mat& A) {
    Mat C(A.cols(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) C.at(j, i) = A.at(i, j);
    return C;
}

void mat_normalize(const CoeffRing& R, Mat& A) {
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) A.at(i, j) = R.normalize(A.at(i, j));
}

void hermite_form(const Mat& A, Mat& H, Mat& U) {
    int m = A.rows(), n = A.cols();
    H = A;
    U = Mat::identity(m);
    auto swap_rows = [&](Mat& M, int a, int b) {
        for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
    };
    auto addmul_row = [&](Mat& M, int dst, int src, int64_t c) {
        for (int j = 0; j < M.cols(); ++j) {
            int64_t t;
            if (__builtin_mul_overflow(c, M.at(src, j), &t)) throw std::overflow_error("hnf overflow");
            if (__builtin_add_overflow(M.at(dst, j), t, &t)) throw std::overflow_error("hnf overflow");
            M.at(dst, j) = t;
        }
    };
    auto negate_row = [&](Mat& M, int r) {
        for (int j = 0; j < M.cols(); ++j) M.at(r, j) = -M.at(r, j);
    };

    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // eliminate below (row) in this column by gcd steps
        while (true) {
            int piv = -1;
            for (int i = row; i < m; ++i)
                if (H.at(i, col) != 0 && (piv == -1 || std::llabs(H.at(i, col)) < std::llabs(H.at(piv, col))))
                    piv = i;
            if (piv == -1) break;
            if (piv != row) {
                swap_rows(H, row, piv);
                swap_rows(U, row, piv);
            }
            bool clean = true;
            for (int i = row + 1; i < m; ++i) {
                if (H.at(i, col) == 0) continue;
                int64_t q = H.at(i, col) / H.at(row, col);
                if (q != 0) {
                    addmul_row(H, i, row, -q);
                    addmul_row(U, i, row, -q);
                }
                if (H.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(row, col) == 0) continue;
        if (H.at(row, col) < 0) {
            negate_row(H, row);
            negate_row(U, row);
        }
        // reduce entries above the pivot
        for (int i = 0; i < row; ++i) {
            int64_t q = H.at(i, col) / H.at(row, col);
            if (H.at(i, col) % H.at(row, col) < 0) q -= 1; // floor division
            if (q != 0) {
                addmul_row(H, i, row, -q);
                addmul_row(U, i, row, -q);
            }
        }
        ++row;
    }
}

namespace {

// Gaussian elimination over a prime field, in place; returns pivot columns.
std::vector<int> rref_field(const CoeffRing& R, Mat& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < M.rows(); ++i)
            if (R.normalize(M.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv == -1) continue;
        if (piv != row)
            for (int j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(row, j));
        int64_t inv = R.inv(M.at(row, col));
        for (int j = 0; j < M.cols(); ++j) M.at(row, j) = R.mul(inv, M.at(row, j));
        for (int i = 0; i < M.rows(); ++i) {
            if (i == row) continue;
            int64_t c = R.normalize(M.at(i, col));
            if (c == 0) continue;
            for (int j = 0; j < M.cols(); ++j) M.at(i, j) = R.sub(M.at(i, j), R.mul(c, M.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<std::vector<int64_t>> solve_row(const CoeffRing& R, const Mat& A,
                                              const std::vector<int64_t>& b) {
    if (int(b.size()) != A.cols()) throw std::invalid_argument("solve_row: shape mismatch");
    int m = A.rows(), n = A.cols();
    if (R.is_field()) {
        // Solve A^T y = b^T by Gaussian elimination on the augmented matrix.
        Mat aug(n, m + 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) aug.at(i, j) = R.normalize(A.at(j, i));
            aug.at(i, m) = R.normalize(b[i]);
        }
        std::vector<int> piv = rref_field(R, aug);
        std::vector<int64_t> x(m, 0);
        for (size_t k = 0; k < piv.size(); ++k) {
            if (piv[k] == m) return std::nullopt; // pivot in the rhs column: inconsistent
            x[piv[k]] = aug.at(int(k), m);
        }
        // rows after the pivots must be fully zero
        for (int i = int(piv.size()); i < n; ++i)
            if (R.normalize(aug.at(i, m)) != 0) return std::nullopt;
        return x;
    }
    // Over Z: U*A = H, substitute x = y*U and solve y*H = b along pivots.
    Mat H, U;
    hermite_form(A, H, U);
    std::vector<int64_t> y(m, 0);
    std::vector<int64_t> acc(n, 0);
    for (int i = 0; i < m; ++i) {
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (H.at(i, j) != 0) {
                pc = j;
                break;
            }
        if (pc == -1) break;
        int64_t r = b[pc] - acc[pc];
        if (r % H.at(i, pc) != 0) return std::nullopt;
        y[i] = r / H.at(i, pc);
        if (y[i] != 0)
            for (int j = 0; j < n; ++j) {
                int64_t t;
                if (__builtin_mul_overflow(y[i], H.at(i, j), &t)) throw std::overflow_error("solve overflow");
                if (__builtin_add_overflow(acc[j], t, &t)) throw std::overflow_error("solve overflow");
                acc[j] = t;
            }
    }
    for (int j = 0; j < n; ++j)
        if (acc[j] != b[j]) return std::nullopt;
    std::vector<int64_t> x(m, 0);
    for (int i = 0; i < m; ++i)
        if (y[i] != 0)
            for (int j = 0; j < m; ++j) {
                int64_t t;
                if (__builtin_mul_overflow(y[i], U.at(i, j), &t)) throw std::overflow_error("solve overflow");
                if (__builtin_add_overflow(x[j], t, &t)) throw std::overflow_error("solve overflow");
                x[j] = t;
            }
    return x;
}

std::vector<std::vector<int64_t>> left_nullspace_field(const CoeffRing& R, const Mat& A) {
    // x*A = 0  <=>  A^T x^T = 0
    int m = A.rows();
    Mat M = mat_transpose(A);
    mat_normalize(R, M);
    std::vector<int> piv = rref_field(R, M);
    std::vector<bool> is_pivot(m, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<int64_t>> basis;
    for (int free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int64_t> v(m, 0);
        v[free] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = R.neg(M.at(int(k), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> mat_inverse(const CoeffRing& R, const Mat& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    int n = A.rows();
    if (R.is_field()) {
        Mat aug(n, 2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug.at(i, j) = R.normalize(A.at(i, j));
            aug.at(i, n + i) = 1;
        }
        std::vector<int> piv = rref_field(R, aug);
        if (int(piv.size()) != n) return std::nullopt;
        Mat inv(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
        return inv;
    }
    Mat H, U;
    hermite_form(A, H, U);
    if (!(H == Mat::identity(n))) return std::nullopt;
    return U;
}

IdempotentSplit split_idempotent(const CoeffRing& R, const Mat& P) {
    if (P.rows() != P.cols()) throw std::invalid_argument("split_idempotent: square matrix expected");
    {
        Mat PP = mat_mul(R, P, P);
        mat_normalize(R, PP);
        Mat Pn = P;
        mat_normalize(R, Pn);
        if (!(PP == Pn)) throw std::invalid_argument("split_idempotent: matrix is not idempotent");
    }
    int dim = P.rows();
    // Basis of the row space (the image of v -> v*P).
    Mat B(0, 0);
    if (R.is_field()) {
        Mat M = P;
        mat_normalize(R, M);
        std::vector<int> piv = rref_field(R, M);
        B = Mat(int(piv.size()), dim);
        for (size_t i = 0; i < piv.size(); ++i)
            for (int j = 0; j < dim; ++j) B.at(int(i), j) = M.at(int(i), j);
    } else {
        Mat H, U;
        hermite_form(P, H, U);
        int r = 0;
        for (int i = 0; i < H.rows(); ++i) {
            bool nz = false;
            for (int j = 0; j < dim; ++j) nz = nz || H.at(i, j) != 0;
            if (nz) ++r;
        }
        B = Mat(r, dim);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < dim; ++j) B.at(i, j) = H.at(i, j);
    }
    int r = B.rows();
    Mat opr(dim, r), oin = B;
    for (int i = 0; i < dim; ++i) {
        std::vector<int64_t> rhs(dim);
        for (int j = 0; j < dim; ++j) rhs[j] = R.normalize(P.at(i, j));
        auto x = solve_row(R, B, rhs);
        if (!x) throw std::logic_error("split_idempotent: image vector not in span");
        for (int k = 0; k < r; ++k) opr.at(i, k) = R.normalize((*x)[k]);
    }
    // oin*opr must be the identity on the summand.
    Mat check = mat_mul(R, oin, opr);
    mat_normalize(R, check);
    if (!(check == Mat::identity(r))) throw std::logic_error("split_idempotent: section check failed");
    return IdempotentSplit{std::move(opr), std::move(oin)};
}

} // namespace curvco
