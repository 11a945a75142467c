#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "slocc/tensor.hpp"

namespace slocc {

/// Parameters of a W-class state in the diagonal/triangular gauge. Vectors
/// run over the index set I0 = {1,...,N-2, N} in that order; the phase
/// parameters gamma are gauge and not stored. beta_N is pinned to 0 by the
/// symmetry reduction. x0 and xN1 fill the triangular block of party N-1
/// when a full state is materialized.
struct WClassParams {
    int n = 3;
    std::vector<double> xTilde;  // > 0, size n-1
    std::vector<double> alpha;   // size n-1
    std::vector<double> beta;    // size n-1, last entry 0
    cxd x0 = 0.0;
    cxd xN1 = 1.0;

    void validate() const;
};

/// mu^2 and nu^2 of the two-copy reduction, evaluated verbatim.
std::pair<double, double> mu_nu_squared(const WClassParams& params);

/// N (mu^2 / sum x~^2 + nu^2): the quantity whose supremum is the critical
/// lambda.
double ghzw_objective(const WClassParams& params);

/// 2x2 block controlling positivity of the reduced two-copy operator.
struct LambdaBlock {
    double lambdaN = 0.0;
    double muSq = 0.0;
    double nuSq = 0.0;
    double sumX = 0.0;  // sum over I0 of x~_i^2 (x~_N normalized to 1)
    Eigen::Matrix2d matrix;

    /// Positivity via the trace/determinant test for 2x2 matrices.
    bool psd(double tol = 1e-12) const;
};

LambdaBlock lambda_block(const WClassParams& params, double lambdaN);

/// 3/4 for N = 3, 1/2 for N >= 4.
double lambda_critical(int n);

/// Multi-start numerical supremum of ghzw_objective. betaFree lifts the
/// beta = 0 reduction as a robustness check.
double numeric_sup_check(int n, int trials, std::uint64_t seed, bool betaFree = false);

/// Proof-scaffolding forms used only by property tests.
double v_projection_sq(const WClassParams& params);     // (v0.v1)^2 + (v0.v2)^2, beta = 0
double v_norm_bound(const WClassParams& params);        // N (|v1|^2 + |v2|^2 + nu^2)
double chain_reduced_bound(double a1, double a2, double a3);  // identically 1/2

/// Materialize the state described by the parameters (unnormalized); the
/// party N-1 factor is the triangular block with x0, xN1.
PureState w_class_state(const WClassParams& params);

} // namespace slocc
