#pragma once

#include "curvco/ring.hpp"

#include <optional>
#include <vector>

namespace curvco {

// Dense row-major matrix of exact scalars. Elements of a graded component are
// row vectors; a map sends v to v*M, so composition is plain matrix product.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    int64_t at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (int64_t v : a_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_, cols_;
    std::vector<int64_t> a_;
};

Mat mat_mul(const CoeffRing& R, const Mat& A, const Mat& B);
Mat mat_add(const CoeffRing& R, const Mat& A, const Mat& B);
Mat mat_sub(const CoeffRing& R, const Mat& A, const Mat& B);
Mat mat_scale(const CoeffRing& R, int64_t c, const Mat& A);
Mat mat_transpose(const Mat& A);
void mat_normalize(const CoeffRing& R, Mat& A);

// Splitting of an idempotent P (dim x dim, P*P = P) into opr (dim x r) and
// oin (r x dim) with opr*oin ... acting on row vectors: v*P factors as
// (v*opr)*oin with oin*... Conventions: opr*oin = P and oin*opr = I_r,
// where "first opr then oin" is the matrix product opr ... see split docs.
struct IdempotentSplit {
    Mat opr; // dim x r
    Mat oin; // r x dim
};
IdempotentSplit split_idempotent(const CoeffRing& R, const Mat& P);

// Solve x*A = b for a single row vector x (exact; over Z uses HNF).
// Returns nullopt when the system has no solution over the ring.
std::optional<std::vector<int64_t>> solve_row(const CoeffRing& R, const Mat& A,
                                              const std::vector<int64_t>& b);

// Null space of x -> x*A over a prime field: basis rows of {x : x*A = 0}.
std::vector<std::vector<int64_t>> left_nullspace_field(const CoeffRing& R, const Mat& A);

// Inverse of a square matrix (field: Gaussian; Z: requires det +-1).
std::optional<Mat> mat_inverse(const CoeffRing& R, const Mat& A);

// Row-style Hermite normal form: returns (H, U) with U*A = H, U unimodular.
void hermite_form(const Mat& A, Mat& H, Mat& U);

} // namespace curvco
