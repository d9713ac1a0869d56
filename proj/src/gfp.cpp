#include "rcat/gfp.hpp"

#include <algorithm>

namespace rcat {

int mod_inv(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw StructuralError("mod_inv: zero has no inverse");
    // Fermat: a^(p-2) mod p
    long long base = a, acc = 1;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

Mat::Mat(int rows, int cols, int p) : r_(rows), c_(cols), p_(p) {
    if (rows < 0 || cols < 0 || p < 2) throw StructuralError("Mat: bad shape");
    a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Mat Mat::eye(int n, int p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_ || p_ != o.p_) throw StructuralError("Mat::mul: shape/modulus mismatch");
    Mat out(r_, o.c_, p_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                out.at(i, j) = (out.at(i, j) + v * o.at(k, j)) % p_;
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_ || p_ != o.p_) throw StructuralError("Mat::add: mismatch");
    Mat out(r_, c_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + o.a_[i]) % p_;
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_ || p_ != o.p_) throw StructuralError("Mat::sub: mismatch");
    Mat out(r_, c_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ((a_[i] - o.a_[i]) % p_ + p_) % p_;
    return out;
}

Mat Mat::scaled(int s) const {
    s %= p_;
    if (s < 0) s += p_;
    Mat out(r_, c_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s % p_;
    return out;
}

bool Mat::operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && p_ == o.p_ && a_ == o.a_;
}

Mat Mat::transpose() const {
    Mat out(c_, r_, p_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

Mat Mat::rref(std::vector<int>* pivots) const {
    Mat m = *this;
    if (pivots) pivots->clear();
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int piv = -1;
        for (int i = row; i < r_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(row, j));
        int inv = mod_inv(m.at(row, col), p_);
        for (int j = 0; j < c_; ++j) m.at(row, j) = m.at(row, j) * inv % p_;
        for (int i = 0; i < r_; ++i) {
            if (i == row) continue;
            int f = m.at(i, col);
            if (f == 0) continue;
            for (int j = 0; j < c_; ++j)
                m.at(i, j) = ((m.at(i, j) - f * m.at(row, j)) % p_ + p_) % p_;
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

int Mat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

Mat Mat::kernel() const {
    std::vector<int> piv;
    Mat r = rref(&piv);
    std::vector<bool> is_piv(c_, false);
    for (int c : piv) is_piv[c] = true;
    int nf = c_ - static_cast<int>(piv.size());
    Mat out(c_, nf, p_);
    int k = 0;
    for (int free_col = 0; free_col < c_; ++free_col) {
        if (is_piv[free_col]) continue;
        out.at(free_col, k) = 1;
        for (int i = 0; i < static_cast<int>(piv.size()); ++i) {
            int v = r.at(i, free_col);
            if (v != 0) out.at(piv[i], k) = (p_ - v) % p_;
        }
        ++k;
    }
    return out;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
    if (b.r_ != r_ || b.p_ != p_) throw StructuralError("Mat::solve: mismatch");
    Mat aug = hstack(*this, b);
    std::vector<int> piv;
    Mat r = aug.rref(&piv);
    // inconsistent if a pivot lands in the RHS block
    for (int c : piv)
        if (c >= c_) return std::nullopt;
    Mat x(c_, b.c_, p_);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
        for (int j = 0; j < b.c_; ++j) x.at(piv[i], j) = r.at(i, c_ + j);
    return x;
}

std::optional<Mat> Mat::right_inverse() const {
    return solve(eye(r_, p_));
}

std::optional<Mat> Mat::left_inverse() const {
    auto t = transpose().solve(eye(c_, p_));
    if (!t) return std::nullopt;
    return t->transpose();
}

std::optional<Mat> Mat::inverse() const {
    if (r_ != c_) return std::nullopt;
    auto inv = right_inverse();
    if (!inv) return std::nullopt;
    if (!(*inv * *this == eye(r_, p_))) return std::nullopt;
    return inv;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.p_ != b.p_) throw StructuralError("Mat::hstack: mismatch");
    Mat out(a.r_, a.c_ + b.c_, a.p_);
    for (int i = 0; i < a.r_; ++i) {
        for (int j = 0; j < a.c_; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.c_; ++j) out.at(i, a.c_ + j) = b.at(i, j);
    }
    return out;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.c_ != b.c_ || a.p_ != b.p_) throw StructuralError("Mat::vstack: mismatch");
    Mat out(a.r_ + b.r_, a.c_, a.p_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) out.at(a.r_ + i, j) = b.at(i, j);
    return out;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    if (a.p_ != b.p_) throw StructuralError("Mat::kron: modulus mismatch");
    Mat out(a.r_ * b.r_, a.c_ * b.c_, a.p_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j) {
            int v = a.at(i, j);
            if (v == 0) continue;
            for (int k = 0; k < b.r_; ++k)
                for (int l = 0; l < b.c_; ++l)
                    out.at(i * b.r_ + k, j * b.c_ + l) = v * b.at(k, l) % a.p_;
        }
    return out;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks, int p) {
    int r = 0, c = 0;
    for (const auto& b : blocks) { r += b.r_; c += b.c_; }
    Mat out(r, c, p);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.r_; ++i)
            for (int j = 0; j < b.c_; ++j) out.at(ro + i, co + j) = b.at(i, j);
        ro += b.r_;
        co += b.c_;
    }
    return out;
}

Mat Mat::col_range(int c0, int c1) const {
    Mat out(r_, c1 - c0, p_);
    for (int i = 0; i < r_; ++i)
        for (int j = c0; j < c1; ++j) out.at(i, j - c0) = at(i, j);
    return out;
}

Mat Mat::row_range(int r0, int r1) const {
    Mat out(r1 - r0, c_, p_);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < c_; ++j) out.at(i - r0, j) = at(i, j);
    return out;
}

}  // namespace rcat
