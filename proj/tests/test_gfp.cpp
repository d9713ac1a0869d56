#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcat/core.hpp"
#include "rcat/gfp.hpp"

using namespace rcat;

static Mat random_mat(Rng& rng, int r, int c, int p) {
    Mat m(r, c, p);
    for (int& v : m.data()) v = rng.below(p);
    return m;
}

TEST_CASE("mod_inv agrees with brute force") {
    for (int p : {2, 3, 5, 7, 13}) {
        for (int a = 1; a < p; ++a) {
            int inv = mod_inv(a, p);
            CHECK(a * inv % p == 1);
        }
    }
}

TEST_CASE("rank of hand-checked matrices") {
    Mat m(3, 3, 5);
    int vals[9] = {1, 2, 3, 2, 4, 6, 0, 1, 1};  // row2 = 2*row1
    for (int i = 0; i < 9; ++i) m.data()[i] = vals[i];
    CHECK(m.rank() == 2);
    CHECK(Mat::eye(4, 7).rank() == 4);
    CHECK(Mat(3, 2, 3).rank() == 0);
}

TEST_CASE("kernel columns are null vectors and complete") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int p = (trial % 2 == 0) ? 2 : 5;
        Mat m = random_mat(rng, 1 + rng.below(5), 1 + rng.below(5), p);
        Mat k = m.kernel();
        CHECK((m * k).is_zero());
        CHECK(k.rank() == k.cols());
        CHECK(m.cols() - m.rank() == k.cols());
    }
}

TEST_CASE("solve returns an exact solution or nullopt correctly") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int p = 3;
        Mat a = random_mat(rng, 1 + rng.below(4), 1 + rng.below(4), p);
        Mat x = random_mat(rng, a.cols(), 2, p);
        Mat b = a * x;
        auto sol = a.solve(b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
    // inconsistent system
    Mat a(2, 1, 2);
    a.at(0, 0) = 1;
    Mat b(2, 1, 2);
    b.at(1, 0) = 1;
    CHECK(!a.solve(b).has_value());
}

TEST_CASE("inverse, right and left inverse") {
    Rng rng(11);
    int found = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int p = 5;
        int n = 1 + rng.below(4);
        Mat a = random_mat(rng, n, n, p);
        auto inv = a.inverse();
        if (a.rank() == n) {
            REQUIRE(inv.has_value());
            CHECK(a * *inv == Mat::eye(n, p));
            CHECK(*inv * a == Mat::eye(n, p));
            ++found;
        } else {
            CHECK(!inv.has_value());
        }
    }
    CHECK(found > 10);

    Mat wide(2, 4, 3);
    wide.at(0, 1) = 1;
    wide.at(1, 3) = 2;
    auto ri = wide.right_inverse();
    REQUIRE(ri.has_value());
    CHECK(wide * *ri == Mat::eye(2, 3));
    Mat tall = wide.transpose();
    auto li = tall.left_inverse();
    REQUIRE(li.has_value());
    CHECK(*li * tall == Mat::eye(2, 3));
}

TEST_CASE("kron is multiplicative") {
    Rng rng(3);
    int p = 7;
    Mat a = random_mat(rng, 2, 3, p), b = random_mat(rng, 3, 2, p);
    Mat c = random_mat(rng, 2, 2, p), d = random_mat(rng, 2, 3, p);
    CHECK(Mat::kron(a * b, c * d) == Mat::kron(a, c) * Mat::kron(b, d));
}

TEST_CASE("row-major vec identity: vec(G X F) = kron(G, F^T) vec(X)") {
    Rng rng(9);
    int p = 5;
    Mat g = random_mat(rng, 2, 3, p), x = random_mat(rng, 3, 4, p), f = random_mat(rng, 4, 2, p);
    Mat gxf = g * x * f;
    Mat vec_x(x.rows() * x.cols(), 1, p);
    for (std::size_t i = 0; i < x.data().size(); ++i) vec_x.data()[i] = x.data()[i];
    Mat out = Mat::kron(g, f.transpose()) * vec_x;
    for (std::size_t i = 0; i < gxf.data().size(); ++i) CHECK(out.data()[i] == gxf.data()[i]);
}

TEST_CASE("stacking and slicing round trips") {
    Rng rng(5);
    Mat a = random_mat(rng, 3, 2, 3), b = random_mat(rng, 3, 4, 3);
    Mat h = Mat::hstack(a, b);
    CHECK(h.col_range(0, 2) == a);
    CHECK(h.col_range(2, 6) == b);
    Mat v = Mat::vstack(a.transpose(), b.transpose());
    CHECK(v.row_range(0, 2) == a.transpose());
    CHECK(v.row_range(2, 6) == b.transpose());
    Mat bd = Mat::block_diag({a, b}, 3);
    CHECK(bd.rows() == 6);
    CHECK(bd.cols() == 6);
    CHECK(bd.row_range(0, 3).col_range(0, 2) == a);
    CHECK(bd.row_range(3, 6).col_range(2, 6) == b);
}
