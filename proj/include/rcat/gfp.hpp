#pragma once

#include <optional>
#include <vector>

#include "rcat/core.hpp"

namespace rcat {

/// Modular inverse for prime p.
int mod_inv(int a, int p);

/// Dense matrix over GF(p), row-major. All arithmetic is exact; every
/// predicate downstream (rank, kernel, solvability) is decidable.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols, int p);

    static Mat eye(int n, int p);
    static Mat zero(int rows, int cols, int p) { return Mat(rows, cols, p); }

    int rows() const { return r_; }
    int cols() const { return c_; }
    int modulus() const { return p_; }

    int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * c_ + c]; }
    int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * c_ + c]; }

    const std::vector<int>& data() const { return a_; }
    std::vector<int>& data() { return a_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(int s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    bool is_zero() const;

    int rank() const;

    /// Reduced row echelon form; pivot column indices returned if requested.
    Mat rref(std::vector<int>* pivots = nullptr) const;

    /// Columns form a basis of the null space (deterministic: rref-based).
    Mat kernel() const;

    /// Any X with (*this) * X == b, or nullopt when inconsistent.
    std::optional<Mat> solve(const Mat& b) const;

    std::optional<Mat> right_inverse() const;  // A * X = I
    std::optional<Mat> left_inverse() const;   // X * A = I
    std::optional<Mat> inverse() const;

    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);
    static Mat kron(const Mat& a, const Mat& b);
    static Mat block_diag(const std::vector<Mat>& blocks, int p);

    /// Columns [c0, c1) as a new matrix.
    Mat col_range(int c0, int c1) const;
    Mat row_range(int r0, int r1) const;

  private:
    int r_ = 0, c_ = 0, p_ = 2;
    std::vector<int> a_;
};

}  // namespace rcat
