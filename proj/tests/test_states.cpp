#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "slocc/states.hpp"

using namespace slocc;

TEST_CASE("psi6, psi17 and W3 match their kets") {
    PureState p6 = representative(StateId::psi(6));
    REQUIRE(p6.dims == std::vector<int>{2, 3, 3});
    const double r2 = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(p6.amps[0] - r2) < 1e-15);                // |000>
    CHECK(std::abs(p6.amps[(1 * 3 + 1) * 3 + 1] - r2) < 1e-15);  // |111>
    CHECK(p6.amps.cwiseAbs().sum() == doctest::Approx(2 * r2).epsilon(1e-14));

    PureState w3 = representative(StateId::w(3));
    const double r3 = 1.0 / std::sqrt(3.0);
    for (int q = 0; q < 3; ++q) CHECK(std::abs(w3.amps[1 << q] - r3) < 1e-15);
    CHECK(w3.norm() == doctest::Approx(1.0).epsilon(1e-14));

    PureState p17 = representative(StateId::psi(17));
    const double r5 = 1.0 / std::sqrt(5.0);
    std::set<int> expected = {0, 1 * 3 + 1, 2 * 3 + 2, (1 * 3 + 0) * 3 + 1, (1 * 3 + 1) * 3 + 2};
    int nonzero = 0;
    for (int k = 0; k < 18; ++k) {
        if (std::abs(p17.amps[k]) > 0) {
            ++nonzero;
            CHECK(expected.count(k) == 1);
            CHECK(std::abs(p17.amps[k] - r5) < 1e-15);
        }
    }
    CHECK(nonzero == 5);
}

TEST_CASE("every catalog state is normalized and fully tripartite entangled") {
    for (int idx = 6; idx <= 17; ++idx) {
        PureState s = representative(StateId::psi(idx));
        CHECK(std::abs(s.norm() - 1.0) < 1e-12);
        // Schmidt rank >= 2 across each bipartition: second singular value of
        // every matricization stays away from zero.
        for (int p = 0; p < 3; ++p) {
            Mat m = matricize(s, p);
            Eigen::JacobiSVD<Mat> svd(m);
            CHECK(svd.singularValues()[1] > 1e-8);
        }
    }
}

TEST_CASE("ghz and product-zero constructors") {
    PureState g4 = representative(StateId::ghz(4));
    CHECK(g4.total_dim() == 16);
    CHECK(std::abs(g4.amps[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(g4.amps[15] - 1.0 / std::numbers::sqrt2) < 1e-15);

    PureState z = representative(StateId::zero({2, 3, 3}));
    CHECK(z.amps[0] == cxd(1, 0));
    CHECK(z.amps.tail(17).norm() == 0.0);
}

TEST_CASE("state id grammar round-trips and rejects junk") {
    CHECK(parse_state_id("psi6").str() == "psi6");
    CHECK(parse_state_id("psi17").str() == "psi17");
    CHECK(parse_state_id("ghz:5").str() == "ghz:5");
    CHECK(parse_state_id("w:3").str() == "w:3");
    CHECK(parse_state_id("zero:2x3x3").str() == "zero:2x3x3");
    CHECK_THROWS_AS(parse_state_id("psi5"), StateIdError);
    CHECK_THROWS_AS(parse_state_id("psi18"), StateIdError);
    CHECK_THROWS_AS(parse_state_id("ghz:1"), StateIdError);
    CHECK_THROWS_AS(parse_state_id("w:"), StateIdError);
    CHECK_THROWS_AS(parse_state_id("zero:2x"), StateIdError);
    CHECK_THROWS_AS(parse_state_id("zero:1x2"), StateIdError);
    CHECK_THROWS_AS(parse_state_id("bell"), StateIdError);
}

TEST_CASE("ginibre sampling is deterministic per seed") {
    Mat a = random_ginibre(4, 1234);
    Mat b = random_ginibre(4, 1234);
    Mat c = random_ginibre(4, 1235);
    CHECK((a - b).norm() == 0.0);
    CHECK((a - c).norm() > 0.0);
    CHECK_THROWS_AS(random_ginibre(0, 1), ShapeError);
}

TEST_CASE("ginibre entries have zero mean within 5 sigma") {
    const int samples = 10000, d = 3;
    cxd sum = 0.0;
    for (int s = 0; s < samples; ++s) sum += random_ginibre(d, mix_seed(77, s)).sum();
    const double n = samples * d * d;
    // each entry: Re,Im ~ N(0, 1/2); the mean has std 1/sqrt(2n)
    const double sigma = 1.0 / std::sqrt(2.0 * n);
    CHECK(std::abs(sum.real() / n) < 5 * sigma);
    CHECK(std::abs(sum.imag() / n) < 5 * sigma);
}

TEST_CASE("sampled ginibre matrices are invertible") {
    for (int s = 0; s < 200; ++s) {
        Mat m = random_ginibre(3, mix_seed(31, s));
        Eigen::JacobiSVD<Mat> svd(m);
        CHECK(svd.singularValues().minCoeff() > 0.0);
    }
}

TEST_CASE("random product states are normalized rank-1 products") {
    PureState qubit = random_product_state({2}, 5);
    CHECK(std::abs(qubit.norm() - 1.0) < 1e-12);

    for (int s = 0; s < 50; ++s) {
        PureState xi = random_product_state({2, 3, 3}, mix_seed(15, s));
        CHECK(std::abs(xi.norm() - 1.0) < 1e-12);
        for (int p = 0; p < 3; ++p) {
            Eigen::JacobiSVD<Mat> svd(matricize(xi, p));
            CHECK(svd.singularValues()[1] < 1e-12);  // Schmidt rank 1
        }
    }
}

TEST_CASE("separable overlap with GHZ3 never exceeds 1/2") {
    PureState g3 = representative(StateId::ghz(3));
    double worst = 0.0;
    for (int s = 0; s < 100000; ++s) {
        PureState xi = random_product_state({2, 2, 2}, mix_seed(901, s));
        worst = std::max(worst, std::norm(g3.amps.dot(xi.amps)));
    }
    CHECK(worst <= 0.5 + 1e-12);
    CHECK(worst > 0.4);  // the bound is approached
}

TEST_CASE("random unitaries are unitary") {
    Gaussian g(8);
    for (int s = 0; s < 20; ++s) {
        Mat u = random_unitary(3, g);
        CHECK((u.adjoint() * u - Mat::Identity(3, 3)).norm() < 1e-12);
    }
}
