#include <doctest.h>

#include <cmath>
#include <smoothpatch/bspline.hpp>

using namespace smoothpatch;

TEST_CASE("open knot vector layout and dimension") {
    auto s = make_space(3, 1, 2);
    std::vector<double> expect = {0, 0, 0, 0, 1. / 3, 1. / 3, 2. / 3, 2. / 3, 1, 1, 1, 1};
    REQUIRE(s.knots.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(s.knots[i] == doctest::Approx(expect[i]).epsilon(1e-15));
    CHECK(s.dim() == 8);
    CHECK(make_space(2, 1, 1).dim() == 4);
    CHECK(make_space(5, 2, 4).dim() == 18);
}

TEST_CASE("partition of unity and nonnegativity") {
    for (auto [p, r, k] : {std::tuple{2, 1, 3}, {3, 1, 4}, {5, 2, 6}, {3, 2, 5}}) {
        auto s = make_space(p, r, k);
        for (int q = 0; q <= 40; ++q) {
            double x = q / 40.0;
            Vector v = eval_basis(s, 0, x);
            CHECK(std::abs(v.sum() - 1.0) < 1e-13);
            CHECK(v.minCoeff() > -1e-14);
        }
    }
}

TEST_CASE("Greville coefficients reproduce the identity") {
    auto s = make_space(4, 2, 5);
    Vector g(s.dim());
    for (int j = 0; j < s.dim(); ++j) {
        double sum = 0.0;
        for (int q = 1; q <= s.p; ++q) sum += s.knots[j + q];
        g(j) = sum / s.p;
    }
    for (int q = 0; q <= 30; ++q) {
        double x = q / 30.0;
        CHECK(eval_spline(s, g, 0, x) == doctest::Approx(x).epsilon(1e-13));
        CHECK(std::abs(eval_spline(s, g, 1, x) - 1.0) < 1e-12);
        CHECK(std::abs(eval_spline(s, g, 2, x)) < 1e-10);
    }
}

TEST_CASE("derivatives agree with central differences") {
    auto s = make_space(5, 3, 3);
    Vector c = Vector::Zero(s.dim());
    for (int j = 0; j < s.dim(); ++j) c(j) = std::sin(1.7 * j + 0.3);
    const double eps = 1e-5;
    for (double x : {0.1, 0.37, 0.62, 0.9}) {
        for (int d = 1; d <= 3; ++d) {
            double fd = (eval_spline(s, c, d - 1, x + eps) - eval_spline(s, c, d - 1, x - eps)) /
                        (2 * eps);
            CHECK(eval_spline(s, c, d, x) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("evaluation at x = 1 takes the left limit") {
    auto s = make_space(3, 1, 2);
    Vector c = Vector::LinSpaced(s.dim(), 0.0, 1.0);
    CHECK(eval_spline(s, c, 0, 1.0) == doctest::Approx(c(s.dim() - 1)).epsilon(1e-15));
    double left = eval_spline(s, c, 1, 1.0 - 1e-9);
    CHECK(eval_spline(s, c, 1, 1.0) == doctest::Approx(left).epsilon(1e-6));
}

TEST_CASE("bezier extraction round trip") {
    auto s = make_space(4, 1, 3);
    Vector c(s.dim());
    for (int j = 0; j < s.dim(); ++j) c(j) = std::cos(0.9 * j) + 0.01 * j * j;
    Matrix bez = to_bezier(s, c);
    // Bernstein evaluation on each span must match the spline.
    for (int m = 0; m <= s.k; ++m) {
        for (double t : {0.0, 0.31, 0.77, 1.0}) {
            double x = (m + t) * s.h;
            if (m == s.k && t == 1.0) x = 1.0;
            BernsteinPoly seg{bez.row(m)};
            CHECK(seg.eval(t) == doctest::Approx(eval_spline(s, c, 0, x)).epsilon(1e-12));
        }
    }
    Vector back = from_bezier(s, bez);
    CHECK((back - c).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("spline derivative lands in the rough space") {
    auto s = make_space(3, 2, 4);
    Vector c(s.dim());
    for (int j = 0; j < s.dim(); ++j) c(j) = 1.0 / (j + 1);
    auto [ds, dc] = derivative(s, c);
    CHECK(ds.p == 2);
    CHECK(ds.r == 1);
    for (double x : {0.05, 0.33, 0.71, 0.98})
        CHECK(eval_spline(ds, dc, 0, x) == doctest::Approx(eval_spline(s, c, 1, x)).epsilon(1e-12));
}

TEST_CASE("polynomial times spline is exact") {
    auto s = make_space(3, 1, 3);
    Vector c(s.dim());
    for (int j = 0; j < s.dim(); ++j) c(j) = std::sin(j + 0.5);
    BernsteinPoly b = BernsteinPoly::linear(1.0, -2.0).times(BernsteinPoly::linear(0.5, 3.0));
    auto [ps, pc] = spline_multiply(s, c, b);
    CHECK(ps.p == 5);
    CHECK(ps.r == 1);
    for (int q = 0; q <= 25; ++q) {
        double x = q / 25.0;
        CHECK(eval_spline(ps, pc, 0, x) ==
              doctest::Approx(b.eval(x) * eval_spline(s, c, 0, x)).epsilon(1e-12));
    }
    CHECK_THROWS(spline_multiply(s, c, b, 4));
}

TEST_CASE("representation matrix reproduces coarse functions in the fine space") {
    auto coarse = make_space(2, 1, 4);
    auto fine = make_space(3, 1, 4);
    Matrix mu = representation_matrix(coarse, fine);
    REQUIRE(mu.rows() == fine.dim());
    REQUIRE(mu.cols() == coarse.dim());
    for (int i = 0; i < coarse.dim(); ++i) {
        Vector fc = mu.col(i);
        for (int q = 0; q <= 33; ++q) {
            double x = q / 33.0;
            CHECK(eval_spline(fine, fc, 0, x) ==
                  doctest::Approx(eval_basis(coarse, 0, x)(i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("truncation only touches the outermost coefficients") {
    const int s = 1, p1 = 2, k = 4;
    auto coarse = make_space(p1, p1 - 1, k);
    auto fine = make_space(2 * s + 1, s, k);
    Matrix mu = representation_matrix(coarse, fine);
    const int n1 = coarse.dim(), n2 = fine.dim();
    // Interior coarse functions vanish at the bands that truncation zeroes,
    // so they pass through unchanged.
    for (int i = s + 1; i <= n1 - s - 2; ++i)
        CHECK((truncate(coarse, fine, s, i) - mu.col(i)).norm() < 1e-14);
    // The outermost nontrivial ones lose exactly their boundary band.
    Vector t1 = truncate(coarse, fine, s, 1);
    CHECK(t1(0) == 0.0);
    CHECK(t1(1) == 0.0);
    CHECK(t1.tail(s + 1).norm() == 0.0);
    CHECK(t1.norm() > 0.0);
    // Endpoint derivatives up to order s vanish after truncation.
    for (int d = 0; d <= s; ++d) {
        CHECK(std::abs(eval_spline(fine, t1, d, 0.0)) < 1e-13);
        CHECK(std::abs(eval_spline(fine, t1, d, 1.0)) < 1e-13);
    }
}

TEST_CASE("mixed basis group sizes") {
    auto count = [](const MixedBasis1d& b, MixedGroup g) {
        int n = 0;
        for (const auto& f : b.functions) n += f.group == g;
        return n;
    };
    auto b1 = build_mixed_1d(1, 2, 3);
    CHECK(count(b1, MixedGroup::S1) == 2);
    CHECK(count(b1, MixedGroup::S1bar) == 2);
    CHECK(count(b1, MixedGroup::S2) == 4);
    auto b2 = build_mixed_1d(2, 5, 5);
    CHECK(count(b2, MixedGroup::S1) == 5);
    CHECK(count(b2, MixedGroup::S1bar) == 4);
    CHECK(count(b2, MixedGroup::S2) == 6);
}

TEST_CASE("mixed basis functions are linearly independent") {
    for (auto [s, p1, k] : {std::tuple{1, 2, 3}, {2, 3, 3}, {2, 5, 5}, {1, 3, 2}}) {
        auto b = build_mixed_1d(s, p1, k);
        Matrix F(b.fine.dim(), b.functions.size());
        for (size_t i = 0; i < b.functions.size(); ++i) F.col(i) = b.fine_coeffs(b.functions[i]);
        Eigen::JacobiSVD<Matrix> svd(F);
        CHECK(svd.singularValues()(svd.singularValues().size() - 1) > 1e-8);
    }
}

TEST_CASE("admissibility guard") {
    CHECK(min_breakpoints(1, 2) == 2);
    CHECK(min_breakpoints(2, 3) == 3);
    CHECK(min_breakpoints(2, 5) == 2);
    CHECK_THROWS(build_mixed_1d(2, 3, 2));
    CHECK_THROWS(build_mixed_1d(1, 4, 3));
    CHECK_THROWS(build_mixed_1d(0, 1, 3));
}
