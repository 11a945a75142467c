#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slocc/witness.hpp"

using namespace slocc;

namespace {

PureState rep(const char* text) { return representative(parse_state_id(text)); }

OptimizerConfig quick_cfg(int restarts = 24, std::uint64_t seed = 1) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.maxSweeps = 4000;
    cfg.seed = seed;
    return cfg;
}

LocalOperatorTuple random_tuple(const std::vector<int>& dims, Gaussian& g) {
    std::vector<Mat> ops;
    for (int d : dims) ops.push_back(random_ginibre(d, g));
    return LocalOperatorTuple(ops);
}

PureState bell() {
    Vec amps = Vec::Zero(4);
    amps[0] = amps[3] = 1.0 / std::numbers::sqrt2;
    return PureState({2, 2}, amps, true);
}

} // namespace

TEST_CASE("witness spectrum: rank-1 deflation of the identity") {
    SloccWitness w = build_witness(0.75, rep("ghz:3"), StateId::w(3));
    CHECK_FALSE(w.trivial);
    EigResult eig = hermitian_eig(w.matrix);
    CHECK(eig.values[0] == doctest::Approx(-0.25).epsilon(1e-12));
    for (int k = 1; k < 8; ++k) CHECK(eig.values[k] == doctest::Approx(0.75).epsilon(1e-12));

    SloccWitness w4 = build_witness(0.5, rep("ghz:4"), StateId::w(4));
    CHECK(hermitian_eig(w4.matrix).values[0] == doctest::Approx(-0.5).epsilon(1e-12));

    CHECK(build_witness(1.0, rep("ghz:3"), StateId::w(3)).trivial);
}

TEST_CASE("build_witness rejects unnormalized projector states") {
    PureState s = rep("ghz:3");
    PureState bad(s.dims, 2.0 * s.amps, false);
    CHECK_THROWS_AS(build_witness(0.5, bad, StateId::w(3)), ValidationError);
}

TEST_CASE("embedding dimensions and conjugation") {
    SloccWitness w = build_witness(0.75, rep("psi6"), StateId::psi(7));
    EmbeddedWitness e = embed(w, rep("psi7"));
    CHECK(e.groupedDims == std::vector<int>{4, 9, 9});
    CHECK(e.matrix.dim == 324);
    // real psi: the conjugate equals the state itself
    CHECK((e.psiConj.amps - rep("psi7").amps).norm() == 0.0);
    CHECK_THROWS_AS(embed(w, rep("ghz:3")), ShapeError);
}

TEST_CASE("expectation examples") {
    const int d = 6;
    DensityMatrix mixed(HermitianOperator(Mat::Identity(d, d) / d), {2, 3});
    CHECK(expectation(mixed, HermitianOperator(Mat::Identity(d, d))) ==
          doctest::Approx(1.0).epsilon(1e-13));

    SloccWitness w = build_witness(0.75, rep("ghz:3"), StateId::w(3));
    CHECK(expectation(rep("ghz:3"), w.matrix) == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(expectation(rep("w:3"), w.matrix) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("theorem-1 bridge: trivial case") {
    PureState g3 = rep("ghz:3");
    SloccWitness w = build_witness(1.0, g3, StateId::ghz(3));
    BridgePair pair = theorem1_bridge(w, g3, LocalOperatorTuple::identity(g3.dims));
    CHECK(std::abs(pair.lhs) < 1e-12);
    CHECK(std::abs(pair.rhs) < 1e-12);
}

TEST_CASE("theorem-1 bridge: random and rank-deficient tuples agree") {
    PureState psi = rep("ghz:3");
    PureState phi = rep("w:3");
    SloccWitness w = build_witness(0.6, phi, StateId::ghz(3));
    for (int trial = 0; trial < 400; ++trial) {
        Gaussian g(mix_seed(2024, trial));
        LocalOperatorTuple t = random_tuple(psi.dims, g);
        if (trial % 4 == 1) t.ops[trial % 3].col(0).setZero();       // singular member
        if (trial % 4 == 2) {
            Mat& m = t.ops[(trial + 1) % 3];                          // rank-1 member
            m = m.col(0) * m.row(1);
        }
        BridgePair pair = theorem1_bridge(w, psi, t);
        const double scale = std::max(1.0, std::abs(pair.lhs));
        CHECK(std::abs(pair.lhs - pair.rhs) < 1e-10 * scale);
    }
}

TEST_CASE("theorem-1 forward direction, sampled product states") {
    // a valid witness is nonnegative on every vectorized-tuple product state
    SloccWitness w = build_witness(0.75, rep("ghz:3"), StateId::w(3));
    EmbeddedWitness e = embed(w, rep("w:3"));
    double worst = 1.0;
    for (int trial = 0; trial < 3000; ++trial) {
        Gaussian g(mix_seed(555, trial));
        Vec xi = vectorize(random_ginibre(2, g));
        xi = kron(xi, vectorize(random_ginibre(2, g)));
        xi = kron(xi, vectorize(random_ginibre(2, g)));
        xi /= xi.norm();
        const double val = (xi.dot(e.matrix.entries * xi)).real();
        worst = std::min(worst, val);
        CHECK(val >= -1e-8);
    }
    CHECK(worst < 0.1);  // the bound is actually probed
}

TEST_CASE("theorem-1 converse: negative embedded expectation maps to an orbit violation") {
    SloccWitness w = build_witness(0.6, rep("ghz:3"), StateId::w(3));  // below critical 3/4
    OptimizerConfig cfg = quick_cfg();
    WitnessVerdict verdict = verify_slocc_witness(w, cfg);
    REQUIRE(verdict.kind == WitnessVerdict::Kind::Violated);
    REQUIRE(verdict.certificate.has_value());
    // embedded side sees the violation through the bridge identity
    BridgePair pair = theorem1_bridge(w, rep("w:3"), *verdict.certificate);
    CHECK(pair.rhs < 0);
    CHECK(pair.lhs < 0);
}

TEST_CASE("witness verdicts around the GHZ/W critical point") {
    OptimizerConfig cfg = quick_cfg(32);
    CHECK(verify_slocc_witness(build_witness(0.75, rep("ghz:3"), StateId::w(3)), cfg).kind ==
          WitnessVerdict::Kind::Witness);
    WitnessVerdict bad = verify_slocc_witness(build_witness(0.7, rep("ghz:3"), StateId::w(3)), cfg);
    CHECK(bad.kind == WitnessVerdict::Kind::Violated);
    REQUIRE(bad.certificate.has_value());
    CHECK(overlap_objective(rep("ghz:3"), rep("w:3"), *bad.certificate) > 0.7);

    CHECK(verify_slocc_witness(build_witness(0.75, rep("psi6"), StateId::psi(7)), cfg).kind ==
          WitnessVerdict::Kind::Witness);
    CHECK(verify_slocc_witness(build_witness(1.0, rep("psi6"), StateId::psi(7)), cfg).kind ==
          WitnessVerdict::Kind::Trivial);
    const std::string json =
        witness_to_json(build_witness(0.75, rep("psi6"), StateId::psi(7)),
                        verify_slocc_witness(build_witness(0.75, rep("psi6"), StateId::psi(7)), cfg));
    CHECK(json.find("\"verdict\": \"witness\"") != std::string::npos);
}

TEST_CASE("sigma family: trace, detection identity, PPT window") {
    PureState phi = bell();
    PureState psi = bell();
    CHECK_THROWS_AS(bestate_sigma(phi, psi, -0.1), ValidationError);
    CHECK_THROWS_AS(bestate_sigma(phi, psi, 1.1), ValidationError);

    for (double p : {0.0, 0.01, 0.05, 0.3}) {
        DensityMatrix sigma = bestate_sigma(phi, psi, p);
        CHECK(std::abs(sigma.base.entries.trace().real() - 1.0) < 1e-12);
        CHECK(sigma.partyDims == std::vector<int>{4, 4});
    }

    // random bipartite states keep trace one
    for (int trial = 0; trial < 20; ++trial) {
        Gaussian g(mix_seed(8, trial));
        Vec a(4), b(9);
        for (int i = 0; i < 4; ++i) a[i] = g.complex_standard_normal();
        for (int i = 0; i < 9; ++i) b[i] = g.complex_standard_normal();
        PureState pa({2, 2}, a / a.norm(), true);
        PureState pb({3, 3}, b / b.norm(), true);
        DensityMatrix sigma = bestate_sigma(pa, pb, 0.1);
        CHECK(std::abs(sigma.base.entries.trace().real() - 1.0) < 1e-12);
        CHECK(sigma.partyDims == std::vector<int>{6, 6});
    }

    // detection identity tr(W~ sigma) = p (lambda - 1), exact orthogonality
    for (double lambda : {0.5, 0.9, 0.99}) {
        SloccWitness w = build_witness(lambda, phi, StateId::custom_state(psi));
        EmbeddedWitness e = embed(w, psi);
        for (double p : {0.01, 0.05}) {
            DensityMatrix sigma = bestate_sigma(phi, psi, p);
            CHECK(std::abs(expectation(sigma, e.matrix) - p * (lambda - 1.0)) < 1e-12);
        }
    }

    // PPT across the (1|2) grouping for small p
    for (double p : {0.01, 0.05}) {
        DensityMatrix sigma = bestate_sigma(phi, psi, p);
        for (int party = 0; party < 2; ++party) {
            EigResult eig = hermitian_eig(partial_transpose(sigma, party));
            CHECK(eig.values[0] >= -1e-10);
        }
    }
}
