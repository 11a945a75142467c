#include "slocc/sdp.hpp"

#include <omp.h>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <numbers>

#ifdef SLOCC_HAVE_LAPACKE
#include <lapacke.h>
#endif

#include "slocc/overlap.hpp"

namespace slocc {

SdpProblem build_ppt_relaxation(const EmbeddedWitness& w) {
    SdpProblem p;
    p.objective = w.matrix;
    p.partyDims = w.groupedDims;
    if (product_dim(p.partyDims) != p.objective.dim)
        throw ShapeError("grouping does not match the embedded operator dimension");
    return p;
}

namespace {

// Real coordinates for hermitian matrices: n diagonal entries followed by
// (sqrt2*Re, sqrt2*Im) pairs for i<j; orthonormal under <A,B> = Re tr(A^dag B).
struct HermBasis {
    int n = 0;
    int nr = 0;
    std::vector<int> type, rowI, colJ;  // type 0 = diag, 1 = real, 2 = imag

    explicit HermBasis(int n_) : n(n_), nr(n_ * n_) {
        type.resize(nr);
        rowI.resize(nr);
        colJ.resize(nr);
        for (int i = 0; i < n; ++i) {
            type[i] = 0;
            rowI[i] = colJ[i] = i;
        }
        int a = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                type[a] = 1;
                rowI[a] = i;
                colJ[a] = j;
                ++a;
                type[a] = 2;
                rowI[a] = i;
                colJ[a] = j;
                ++a;
            }
    }

    template <typename Real>
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> to_matrix(
        const Eigen::Matrix<Real, Eigen::Dynamic, 1>& x) const {
        Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
        const Real invRoot2 = Real(1) / std::sqrt(Real(2));
        int a = n;
        for (int i = 0; i < n; ++i) m(i, i) = x[i];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const std::complex<Real> v(x[a] * invRoot2, x[a + 1] * invRoot2);
                m(i, j) = v;
                m(j, i) = std::conj(v);
                a += 2;
            }
        return m;
    }

    template <typename Real>
    Eigen::Matrix<Real, Eigen::Dynamic, 1> from_matrix(
        const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>& m) const {
        Eigen::Matrix<Real, Eigen::Dynamic, 1> x(nr);
        const Real root2 = std::sqrt(Real(2));
        int a = n;
        for (int i = 0; i < n; ++i) x[i] = m(i, i).real();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                x[a] = root2 * m(i, j).real();
                x[a + 1] = root2 * m(i, j).imag();
                a += 2;
            }
        return x;
    }
};

// Signed coordinate permutation induced by one partial transpose:
// PT(E_a) = sign[a] * E_{perm[a]}; an involution.
struct PtPermutation {
    std::vector<int> perm;
    std::vector<double> sign;
};

PtPermutation identity_permutation(const HermBasis& basis) {
    PtPermutation p;
    p.perm.resize(basis.nr);
    p.sign.assign(basis.nr, 1.0);
    for (int a = 0; a < basis.nr; ++a) p.perm[a] = a;
    return p;
}

PtPermutation build_pt_permutation(const HermBasis& basis, const std::vector<int>& dims,
                                   int party) {
    const int n = basis.n;
    int left = 1;
    for (int q = 0; q < party; ++q) left *= dims[q];
    const int d = dims[party];
    const int right = n / (left * d);
    auto swapped = [&](int a, int b) {
        const int bComp = (b / right) % d;  // party component of b
        const int aL = a / (d * right), aR = a % right;
        return (aL * d + bComp) * right + aR;
    };
    std::vector<std::vector<int>> pairIndex(n, std::vector<int>(n, -1));
    for (int a = n; a < basis.nr; a += 2) pairIndex[basis.rowI[a]][basis.colJ[a]] = a;

    PtPermutation out;
    out.perm.resize(basis.nr);
    out.sign.assign(basis.nr, 1.0);
    for (int a = 0; a < basis.nr; ++a) {
        const int i = basis.rowI[a], j = basis.colJ[a];
        if (basis.type[a] == 0) {
            out.perm[a] = a;
            continue;
        }
        const int u = swapped(i, j), v = swapped(j, i);
        const int base = pairIndex[std::min(u, v)][std::max(u, v)];
        if (basis.type[a] == 1) {
            out.perm[a] = base;
        } else {
            out.perm[a] = base + 1;
            if (u > v) out.sign[a] = -1.0;
        }
    }
    return out;
}

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> apply_perm(const PtPermutation& p,
                                                  const Eigen::Matrix<Real, Eigen::Dynamic, 1>& x) {
    Eigen::Matrix<Real, Eigen::Dynamic, 1> out(x.size());
    for (int a = 0; a < x.size(); ++a) out[a] = Real(p.sign[a]) * x[p.perm[a]];
    return out;
}

// partial transpose for any complex scalar
template <typename CMat>
CMat pt_generic(const CMat& m, const std::vector<int>& dims, int party) {
    const int n = static_cast<int>(m.rows());
    int left = 1;
    for (int q = 0; q < party; ++q) left *= dims[q];
    const int d = dims[party];
    const int right = n / (left * d);
    CMat out(n, n);
    for (int la = 0; la < left; ++la)
        for (int ia = 0; ia < d; ++ia)
            for (int ra = 0; ra < right; ++ra) {
                const int row = (la * d + ia) * right + ra;
                for (int lb = 0; lb < left; ++lb)
                    for (int ib = 0; ib < d; ++ib)
                        for (int rb = 0; rb < right; ++rb) {
                            const int col = (lb * d + ib) * right + rb;
                            out(row, col) = m((la * d + ib) * right + ra,
                                              (lb * d + ia) * right + rb);
                        }
            }
    return out;
}

// Entry <E_a, A E_b A> of the hessian block for A = M^-1 (hermitian); every
// case is a product of two entries of A.
template <typename Real>
Real kentry(const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>& a, int ta,
            int i, int j, int tb, int k, int l) {
    const Real root2 = std::sqrt(Real(2));
    if (ta > tb) return kentry(a, tb, k, l, ta, i, j);
    switch (ta * 3 + tb) {
        case 0: return std::norm(a(i, k));
        case 1: return root2 * (a(i, k) * a(l, i)).real();
        case 2: return -root2 * (a(i, k) * a(l, i)).imag();
        case 4: return (a(j, k) * a(l, i)).real() + (a(j, l) * a(k, i)).real();
        case 5: return (a(j, l) * a(k, i)).imag() - (a(j, k) * a(l, i)).imag();
        case 8: return (a(j, l) * a(k, i)).real() - (a(j, k) * a(l, i)).real();
    }
    return Real(0);
}

template <typename Real>
struct BarrierTypes {
    using CMat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
    using RMat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    using RVec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
};

// PSD blocks at the current iterate: X itself and each partial transpose.
template <typename Real>
struct BlockState {
    std::vector<typename BarrierTypes<Real>::CMat> blocks;
    std::vector<typename BarrierTypes<Real>::CMat> inverses;
    Real logdetSum = 0;
    bool ok = false;
};

template <typename Real>
BlockState<Real> refresh(const typename BarrierTypes<Real>::CMat& x,
                         const std::vector<int>& dims, bool needInverses) {
    using CMat = typename BarrierTypes<Real>::CMat;
    BlockState<Real> st;
    const int parties = static_cast<int>(dims.size());
    const int n = static_cast<int>(x.rows());
    st.blocks.resize(parties + 1);
    if (needInverses) st.inverses.resize(parties + 1);
    st.logdetSum = 0;
    for (int b = 0; b <= parties; ++b) {
        st.blocks[b] = (b == 0) ? x : pt_generic<CMat>(x, dims, b - 1);
        Eigen::LLT<CMat> llt(st.blocks[b]);
        if (llt.info() != Eigen::Success) return st;  // ok stays false
        const auto& lmat = llt.matrixLLT();
        for (int i = 0; i < n; ++i) st.logdetSum += Real(2) * std::log(lmat(i, i).real());
        if (needInverses) {
            CMat inv = llt.solve(CMat::Identity(n, n));
            st.inverses[b] = Real(0.5) * (inv + inv.adjoint());
        }
    }
    st.ok = true;
    return st;
}

template <typename Real>
void assemble_hessian(const HermBasis& basis, const std::vector<PtPermutation>& perms,
                      const BlockState<Real>& st, typename BarrierTypes<Real>::RMat& h,
                      bool parallel) {
    const int nr = basis.nr;
    const int blocks = static_cast<int>(st.inverses.size());
    h.resize(nr, nr);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int c = 0; c < nr; ++c) {
        for (int d = c; d < nr; ++d) h(c, d) = 0;
        for (int b = 0; b < blocks; ++b) {
            const auto& a = st.inverses[b];
            const PtPermutation& p = perms[b];
            const int pc = p.perm[c];
            const Real sc = Real(p.sign[c]);
            const int tc = basis.type[pc], ic = basis.rowI[pc], jc = basis.colJ[pc];
            for (int d = c; d < nr; ++d) {
                const int pd = p.perm[d];
                h(c, d) += sc * Real(p.sign[d]) *
                           kentry<Real>(a, tc, ic, jc, basis.type[pd], basis.rowI[pd],
                                        basis.colJ[pd]);
            }
        }
    }
    for (int c = 0; c < nr; ++c)
        for (int d = c + 1; d < nr; ++d) h(d, c) = h(c, d);
}

#ifdef SLOCC_HAVE_LAPACKE
// large doubles go through LAPACK with one pass of iterative refinement
bool solve_newton_lapack(const Eigen::MatrixXd& h, Eigen::VectorXd& g, Eigen::VectorXd& e) {
    const int nr = static_cast<int>(h.rows());
    Eigen::MatrixXd rhs(nr, 2);
    rhs.col(0) = g;
    rhs.col(1) = e;
    Eigen::MatrixXd factor = h;
    if (LAPACKE_dpotrf(LAPACK_COL_MAJOR, 'L', nr, factor.data(), nr) != 0) {
        factor = h;
        factor.diagonal().array() += 1e-12 * h.diagonal().maxCoeff();
        if (LAPACKE_dpotrf(LAPACK_COL_MAJOR, 'L', nr, factor.data(), nr) != 0) return false;
    }
    Eigen::MatrixXd sol = rhs;
    if (LAPACKE_dpotrs(LAPACK_COL_MAJOR, 'L', nr, 2, factor.data(), nr, sol.data(), nr) != 0)
        return false;
    Eigen::MatrixXd resid = rhs - h * sol;
    if (LAPACKE_dpotrs(LAPACK_COL_MAJOR, 'L', nr, 2, factor.data(), nr, resid.data(), nr) != 0)
        return false;
    sol += resid;
    g = sol.col(0);
    e = sol.col(1);
    return true;
}
#endif

template <typename Real>
bool solve_newton_generic(const typename BarrierTypes<Real>::RMat& h,
                          typename BarrierTypes<Real>::RVec& g,
                          typename BarrierTypes<Real>::RVec& e) {
    using RMat = typename BarrierTypes<Real>::RMat;
    Eigen::LLT<RMat> llt(h);
    if (llt.info() != Eigen::Success) {
        RMat ridged = h;
        ridged.diagonal().array() += Real(1e-14) * h.diagonal().maxCoeff();
        llt.compute(ridged);
        if (llt.info() != Eigen::Success) return false;
    }
    const auto g0 = g, e0 = e;
    g = llt.solve(g0);
    e = llt.solve(e0);
    g += llt.solve(typename BarrierTypes<Real>::RVec(g0 - h * g));
    e += llt.solve(typename BarrierTypes<Real>::RVec(e0 - h * e));
    return true;
}

// Barrier path-following over the intersection of the PSD cones; Real is
// long double for small systems (where certificate-grade duals need the
// extra digits) and double for the big ones.
template <typename Real>
SdpSolution solve_impl(const SdpProblem& p, const SolveOptions& opts) {
    using CMat = typename BarrierTypes<Real>::CMat;
    using RMat = typename BarrierTypes<Real>::RMat;
    using RVec = typename BarrierTypes<Real>::RVec;

    const int n = p.objective.dim;
    const HermBasis basis(n);
    std::vector<PtPermutation> perms;
    perms.reserve(p.partyDims.size() + 1);
    perms.push_back(identity_permutation(basis));
    for (size_t q = 0; q < p.partyDims.size(); ++q)
        perms.push_back(build_pt_permutation(basis, p.partyDims, static_cast<int>(q)));

    const int parties = static_cast<int>(p.partyDims.size());
    const Real nuBar = Real(parties + 1) * n;
    const CMat cmat = p.objective.entries.cast<std::complex<Real>>();
    const RVec cvec = basis.from_matrix<Real>(cmat);
    const RVec evec = basis.from_matrix<Real>(CMat::Identity(n, n));

    CMat x = CMat::Identity(n, n) / Real(n);
    if (opts.warmStart) {
        CMat w = opts.warmStart->cast<std::complex<Real>>();
        w = Real(0.5) * (w + w.adjoint());
        w /= w.trace().real();
        w = Real(0.95) * w + Real(0.05) * CMat::Identity(n, n) / Real(n);
        if (refresh<Real>(w, p.partyDims, false).ok) x = w;
    }

    SdpSolution sol;
    auto objective_at = [&](const CMat& m) {
        return static_cast<double>((m * cmat).trace().real());
    };

    BlockState<Real> st = refresh<Real>(x, p.partyDims, true);
    if (!st.ok) {
        sol.status = SdpStatus::InfeasibleNumerics;
        return sol;
    }

    // the dual pair S_b = M_b^{-1}/t with the largest feasible trace
    // multiplier y = lambda_min(C - sum_b PT_b(S_b)) is exactly feasible at
    // any interior point, so y always bounds the optimum from below
    double bestDual = -std::numeric_limits<double>::infinity();
    std::vector<Mat> bestMults;
    auto harvest_dual = [&](const BlockState<Real>& state, Real t) {
        CMat s0 = cmat;
        std::vector<Mat> mults(parties);
        for (int b = 1; b <= parties; ++b) {
            CMat sb = state.inverses[b] / t;
            s0 -= pt_generic<CMat>(sb, p.partyDims, b - 1);
            mults[b - 1] = sb.template cast<cxd>();
        }
        s0 = Real(0.5) * (s0 + s0.adjoint());
        Eigen::SelfAdjointEigenSolver<CMat> es(s0, Eigen::EigenvaluesOnly);
        const double y = static_cast<double>(es.eigenvalues().minCoeff());
        if (opts.verbose) std::fprintf(stderr, "[dual] t=%.3Le y=%.12f\n", (long double)t, y);
        if (y > bestDual) {
            bestDual = y;
            bestMults = std::move(mults);
        }
    };

    RMat hess;
    Real t = Real(opts.tInit);
    const bool parallelAsm = n >= 24;
    bool stop = false;

    while (!stop) {
        int polishSteps = 0;
        for (int inner = 0; inner < 60; ++inner) {
            if (sol.newtonSteps >= opts.maxNewton) {
                stop = true;
                break;
            }
            RVec grad = t * cvec;
            for (int b = 0; b <= parties; ++b)
                grad -= apply_perm<Real>(perms[b], basis.from_matrix<Real>(st.inverses[b]));
            assemble_hessian<Real>(basis, perms, st, hess, parallelAsm);
            RVec u = grad, w = evec;
            bool solved = false;
#ifdef SLOCC_HAVE_LAPACKE
            if constexpr (std::is_same_v<Real, double>) {
                solved = solve_newton_lapack(hess, u, w);
            } else {
                solved = solve_newton_generic<Real>(hess, u, w);
            }
#else
            solved = solve_newton_generic<Real>(hess, u, w);
#endif
            if (!solved) {
                sol.status = SdpStatus::InfeasibleNumerics;
                return sol;
            }
            const Real nu = -u.dot(evec) / w.dot(evec);
            const RVec step = -(u + nu * w);
            const Real decrement2 = -step.dot(grad + nu * evec);
            ++sol.newtonSteps;

            const CMat dir = basis.to_matrix<Real>(step);
            // A tiny or negative measurement means the decrement is below its
            // own noise floor. The H-metric no longer sees the residual, but
            // the dual harvest pays it in absolute terms, so take a couple of
            // blind full Newton polish steps before closing the round.
            if (decrement2 < Real(1e-12)) {
                if (polishSteps >= 2) break;
                ++polishSteps;
                CMat cand = x + dir;
                BlockState<Real> probe = refresh<Real>(cand, p.partyDims, true);
                if (!probe.ok) break;
                x = std::move(cand);
                st = std::move(probe);
                continue;
            }

            double alpha = 1.0;
            bool moved = false;
            if (decrement2 > 0 && decrement2 <= Real(0.05)) {
                // quadratic-convergence region: the full Newton step stays
                // feasible and needs no merit-function test (which would
                // drown in t*obj cancellation noise at large t)
                CMat cand = x + dir;
                if (refresh<Real>(cand, p.partyDims, false).ok) {
                    x = std::move(cand);
                    moved = true;
                }
            }
            if (!moved) {
                const Real f0 = t * Real(objective_at(x)) - st.logdetSum;
                for (int ls = 0; ls < 40; ++ls) {
                    CMat cand = x + Real(alpha) * dir;
                    BlockState<Real> probe = refresh<Real>(cand, p.partyDims, false);
                    if (probe.ok) {
                        const Real f1 = t * Real(objective_at(cand)) - probe.logdetSum;
                        if (f1 < f0) {
                            x = std::move(cand);
                            moved = true;
                            break;
                        }
                    }
                    alpha *= 0.5;
                    if (alpha < 1e-8) break;
                }
            }
            if (moved) st = refresh<Real>(x, p.partyDims, true);
            const double obj = objective_at(x);
            if (opts.verbose)
                std::fprintf(stderr, "[sdp] t=%.3Le step=%d obj=%+.12e dec2=%.3Le alpha=%.3f\n",
                             static_cast<long double>(t), sol.newtonSteps, obj,
                             static_cast<long double>(decrement2), alpha);
            if (obj < opts.stopBelowObjective) {
                sol.stoppedBelowObjective = true;
                stop = true;
                break;
            }
            if (!moved) break;
        }
        if (!sol.stoppedBelowObjective) harvest_dual(st, t);
        if (stop) break;
        if (nuBar / t <= Real(opts.gapTol)) break;
        t = std::min(t * Real(opts.tGrowth), Real(1.01) * nuBar / Real(opts.gapTol));
    }

    sol.value = objective_at(x);
    CMat xh = Real(0.5) * (x + x.adjoint());
    xh /= xh.trace().real();
    sol.rho = DensityMatrix(HermitianOperator(xh.template cast<cxd>()), p.partyDims);
    sol.finalT = static_cast<double>(t);

    if (bestDual > -std::numeric_limits<double>::infinity()) {
        sol.gap = sol.value - bestDual;
        if (sol.gap < 1e-6) {  // certificate contract: gap below 1e-6
            SdpDualCertificate cert;
            cert.value = bestDual;
            cert.traceMultiplier = bestDual;
            cert.multipliers = std::move(bestMults);
            sol.dualCertificate = std::move(cert);
        }
    }

    if (!sol.stoppedBelowObjective && sol.dualCertificate && sol.newtonSteps < opts.maxNewton) {
        sol.status = SdpStatus::Optimal;
    } else {
        sol.status = SdpStatus::MaxIter;
    }
    return sol;
}

} // namespace

SdpSolution solve(const SdpProblem& p, double solverTol) {
    SolveOptions opts;
    opts.solverTol = solverTol;
    return solve(p, opts);
}

SdpSolution solve(const SdpProblem& p, const SolveOptions& opts) {
    const int n = p.objective.dim;
    if (product_dim(p.partyDims) != n)
        throw ShapeError("party dimensions do not match the objective");
    if (n > 324) throw BudgetError("dimension exceeds the 324 hard cap of the reference solver");
    if (n > opts.dimBudget)
        throw BudgetError("dimension " + std::to_string(n) + " exceeds the configured budget " +
                          std::to_string(opts.dimBudget));
    if (n > 128)
        std::cerr << "[sdp] warning: dimension " << n
                  << " is past the comfortable range of the reference solver\n";
    if (n <= 32) return solve_impl<long double>(p, opts);
    return solve_impl<double>(p, opts);
}

double ppt_bound_lambda(const PureState& phi, const PureState& psi, double bisectTol,
                        PptBoundOptions opts) {
    if (phi.dims != psi.dims) throw ShapeError("phi and psi dimensions differ");
    if (bisectTol <= 0) throw ValidationError("bisectTol must be positive");

    const PureState phiN = phi.normalized_copy();
    const PureState psiN = psi.normalized_copy();

    OptimizerConfig cfg;
    cfg.restarts = opts.optimizerRestarts;
    cfg.seed = opts.seed;
    const OverlapResult lower = maximize_slocc_overlap(phiN, psiN, cfg);

    auto problem_at = [&](double lambda) {
        SloccWitness w = build_witness(lambda, phiN, StateId::custom_state(psiN));
        return build_ppt_relaxation(embed(w, psiN));
    };

    // Classify the SDP optimum at lambda against the -1e-7 rule. "Negative"
    // needs only a strictly feasible point below the rule; "nonnegative"
    // needs the dual bound. Unresolved solves count as negative, which can
    // only push the returned bound up, never below a sound value.
    const double rule = -1e-7;
    std::optional<Mat> warm;
    double warmT = 0.0;
    auto classify = [&](double lambda) {
        SdpProblem prob = problem_at(lambda);
        {
            // a PSD-to-tolerance objective bounds the optimum without a solve
            Eigen::SelfAdjointEigenSolver<Mat> es(prob.objective.entries,
                                                  Eigen::EigenvaluesOnly);
            if (es.eigenvalues().minCoeff() >= rule) return true;
        }
        SolveOptions so = opts.solver;
        so.stopBelowObjective = -1e-6;
        so.warmStart = warm;
        if (warmT > 0) so.tInit = std::max(1.0, warmT / 64.0);
        SdpSolution s = solve(prob, so);
        warm = s.rho.base.entries;
        warmT = s.finalT;
        if (opts.verbose)
            std::fprintf(stderr, "[ppt-bound] lambda=%.6f value=%+.3e gap=%.3e steps=%d\n", lambda,
                         s.value, s.gap, s.newtonSteps);
        if (s.value < rule) return false;
        if (s.dualCertificate && s.dualCertificate->value >= rule) return true;
        return false;
    };

    double lo = std::max(lower.lambda, 0.0);
    double hi = 1.0;
    if (classify(lo)) return lo;
    while (hi - lo > bisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (classify(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::string sdp_solution_to_json(const SdpProblem& p, const SdpSolution& s) {
    nlohmann::json j;
    j["schemaVersion"] = 1;
    j["kind"] = "sdp-solution";
    j["dim"] = p.objective.dim;
    j["partyDims"] = p.partyDims;
    j["value"] = s.value;
    j["gap"] = s.gap;
    j["newtonSteps"] = s.newtonSteps;
    switch (s.status) {
        case SdpStatus::Optimal: j["status"] = "optimal"; break;
        case SdpStatus::MaxIter: j["status"] = "maxIter"; break;
        case SdpStatus::InfeasibleNumerics: j["status"] = "infeasibleNumerics"; break;
    }
    if (s.dualCertificate) j["dualBound"] = s.dualCertificate->value;
    auto dump_matrix = [](const Mat& m) {
        auto rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
            auto row = nlohmann::json::array();
            for (int k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
            rows.push_back(std::move(row));
        }
        return rows;
    };
    if (s.rho.base.dim > 0 && s.rho.base.dim <= 64) j["rho"] = dump_matrix(s.rho.base.entries);
    return j.dump(2);
}

} // namespace slocc
