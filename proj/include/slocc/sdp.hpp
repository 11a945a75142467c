#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "slocc/tensor.hpp"
#include "slocc/witness.hpp"

namespace slocc {

/// minimize tr(rho * objective) over density matrices that stay PSD under
/// the partial transpose of every party in the grouping.
struct SdpProblem {
    HermitianOperator objective;
    std::vector<int> partyDims;
};

SdpProblem build_ppt_relaxation(const EmbeddedWitness& w);

enum class SdpStatus { Optimal, MaxIter, InfeasibleNumerics };

struct SdpDualCertificate {
    double value = 0.0;            // certified lower bound on the optimum
    double traceMultiplier = 0.0;  // y in  C - y*1 - sum_i PT_i(S_i) >= 0
    std::vector<Mat> multipliers;  // PSD S_i, one per party constraint
};

struct SdpSolution {
    double value = 0.0;
    DensityMatrix rho;
    std::optional<SdpDualCertificate> dualCertificate;
    SdpStatus status = SdpStatus::InfeasibleNumerics;
    double gap = std::numeric_limits<double>::infinity();
    int newtonSteps = 0;
    bool stoppedBelowObjective = false;  // early exit taken (bisection use)
    double finalT = 0.0;                 // barrier parameter reached (warm-start hint)
};

struct SolveOptions {
    double solverTol = 1e-7;  // feasibility/KKT residual target
    double gapTol = 5e-7;     // duality gap target for the certificate
    int dimBudget = 128;      // hard cap 324 with a warning past the budget
    int maxNewton = 800;
    double tInit = 1.0;
    double tGrowth = 8.0;
    double stopBelowObjective = -std::numeric_limits<double>::infinity();
    std::optional<Mat> warmStart;  // strictly feasible iterate to resume from
    bool verbose = false;
};

/// Log-barrier path-following solve. The returned rho is strictly feasible;
/// the dual certificate, when present, bounds the optimum from below with
/// gap below gapTol.
SdpSolution solve(const SdpProblem& p, const SolveOptions& opts = {});
SdpSolution solve(const SdpProblem& p, double solverTol);

struct PptBoundOptions {
    double bisectTol = 1e-3;
    SolveOptions solver;
    std::uint64_t seed = 0;
    int optimizerRestarts = 48;
    bool verbose = false;
};

/// Minimal lambda (to bisectTol) for which the PPT relaxation of the
/// embedded projector witness has nonnegative optimum; a certified upper
/// bound on the SLOCC overlap of phi with the orbit of psi.
double ppt_bound_lambda(const PureState& phi, const PureState& psi, double bisectTol,
                        PptBoundOptions opts = {});

std::string sdp_solution_to_json(const SdpProblem& p, const SdpSolution& s);

} // namespace slocc
