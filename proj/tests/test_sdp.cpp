#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slocc/sdp.hpp"

using namespace slocc;

namespace {

PureState bell() {
    Vec amps = Vec::Zero(4);
    amps[0] = amps[3] = 1.0 / std::numbers::sqrt2;
    return PureState({2, 2}, amps, true);
}

PureState rep(const char* text) { return representative(parse_state_id(text)); }

} // namespace

TEST_CASE("relaxation bookkeeping for the standard groupings") {
    {
        SloccWitness w = build_witness(0.9, rep("ghz:3"), StateId::w(3));
        SdpProblem p = build_ppt_relaxation(embed(w, rep("w:3")));
        CHECK(p.partyDims == std::vector<int>{4, 4, 4});
        CHECK(p.objective.dim == 64);
    }
    {
        SloccWitness w = build_witness(0.9, bell(), StateId::zero({2, 2}));
        SdpProblem p = build_ppt_relaxation(embed(w, bell()));
        CHECK(p.partyDims == std::vector<int>{4, 4});
        CHECK(p.objective.dim == 16);
    }
    {
        SloccWitness w = build_witness(0.9, rep("psi6"), StateId::psi(7));
        SdpProblem p = build_ppt_relaxation(embed(w, rep("psi7")));
        CHECK(p.objective.dim == 324);
    }
}

TEST_CASE("budget policy") {
    SloccWitness w = build_witness(0.9, rep("psi6"), StateId::psi(7));
    SdpProblem p = build_ppt_relaxation(embed(w, rep("psi7")));  // dim 324
    SolveOptions opts;
    opts.dimBudget = 128;
    CHECK_THROWS_AS(solve(p, opts), BudgetError);  // above the configured budget

    SdpProblem big;
    big.objective = HermitianOperator(Mat::Identity(400, 400));
    big.partyDims = {20, 20};
    SolveOptions loose;
    loose.dimBudget = 1000;
    CHECK_THROWS_AS(solve(big, loose), BudgetError);  // above the 324 hard cap
}

TEST_CASE("PSD objective solves to a nonnegative value") {
    SloccWitness w = build_witness(1.0, bell(), StateId::zero({2, 2}));
    SdpProblem p = build_ppt_relaxation(embed(w, bell()));
    SdpSolution s = solve(p, 1e-7);
    CHECK(s.status == SdpStatus::Optimal);
    CHECK(s.value >= -1e-7);
    REQUIRE(s.dualCertificate.has_value());
    CHECK(s.gap < 1e-6);
}

TEST_CASE("PPT bound on the singlet fraction is exactly 1/2") {
    // minimize tr(rho * (-|Phi+><Phi+|)) over two-qubit PPT states = -1/2
    SdpProblem p;
    p.objective = HermitianOperator(-outer(bell().amps));
    p.partyDims = {2, 2};
    SdpSolution s = solve(p, 1e-8);
    CHECK(s.status == SdpStatus::Optimal);
    CHECK(s.value == doctest::Approx(-0.5).epsilon(1e-6));
    REQUIRE(s.dualCertificate.has_value());
    CHECK(s.dualCertificate->value >= -0.5 - 1e-6);

    // independent oracle: the Werner family q P + (1-q)/4 * 1 is PT-feasible
    // up to q = 1/3 and achieves the value -1/2 there
    const Mat proj = outer(bell().amps);
    double bestFeasible = 0.0;
    for (double q = 0.0; q <= 1.0; q += 1e-3) {
        Mat rho = q * proj + (1 - q) * Mat::Identity(4, 4) / 4.0;
        Mat pt = partial_transpose(rho, {2, 2}, 0);
        Eigen::SelfAdjointEigenSolver<Mat> es(pt, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-12) break;
        bestFeasible = -(rho * proj).trace().real();
    }
    CHECK(bestFeasible == doctest::Approx(-0.5).epsilon(1e-3));
    CHECK(s.value <= bestFeasible + 1e-6);

    // returned iterate is feasible
    CHECK(std::abs(s.rho.base.entries.trace().real() - 1.0) < 1e-8);
    for (int party = 0; party < 2; ++party) {
        EigResult eig = hermitian_eig(partial_transpose(s.rho, party));
        CHECK(eig.values[0] >= -1e-7);
    }
}

TEST_CASE("early negative exit certifies a violation quickly") {
    SloccWitness w = build_witness(0.99, rep("ghz:3"), StateId::w(3));
    SdpProblem p = build_ppt_relaxation(embed(w, rep("w:3")));
    SolveOptions opts;
    opts.dimBudget = 128;
    opts.stopBelowObjective = -1e-5;
    SdpSolution s = solve(p, opts);
    CHECK(s.value < 0.0);  // the trivial-bound phenomenon: every lambda < 1 is violated
    // the early exit still hands back a feasible iterate
    EigResult eig = hermitian_eig(s.rho.base);
    CHECK(eig.values[0] >= -1e-9);
}

TEST_CASE("bipartite Schmidt-rank witness: the bound drops below 1") {
    // phi maximally entangled (rank 2), psi a product state (rank 1)
    PureState phi = bell();
    PureState psi = rep("zero:2x2");
    PptBoundOptions opts;
    opts.bisectTol = 1e-3;
    const double bound = ppt_bound_lambda(phi, psi, 1e-3, opts);
    CHECK(bound < 1.0 - 1e-3);
    CHECK(bound >= 0.5 - 1e-6);  // sandwich: optimizer lower bound is 1/2
}

TEST_CASE("product target against the product orbit: bound collapses to the overlap") {
    PureState z = rep("zero:2x2");
    const double bound = ppt_bound_lambda(z, z, 1e-3);
    CHECK(bound == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("solution export carries the schema header") {
    SdpProblem p;
    p.objective = HermitianOperator(-outer(bell().amps));
    p.partyDims = {2, 2};
    SdpSolution s = solve(p, 1e-7);
    const std::string json = sdp_solution_to_json(p, s);
    CHECK(json.find("\"schemaVersion\"") != std::string::npos);
    CHECK(json.find("\"status\"") != std::string::npos);
}
