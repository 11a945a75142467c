// Compares the OpenMP kernels against the serial reference paths:
// multi-start overlap restarts, theorem-1 bridge sampling, and one SDP
// centering step (hessian assembly dominates there).

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>

#include "slocc/overlap.hpp"
#include "slocc/sdp.hpp"
#include "slocc/witness.hpp"

using namespace slocc;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

double bench_overlap(int jobs, double* lambdaOut) {
    OptimizerConfig cfg;
    cfg.restarts = 48;
    cfg.maxSweeps = 4000;
    cfg.seed = 17;
    PureState phi = representative(StateId::psi(17));
    PureState psi = representative(StateId::psi(13));
    const double t0 = now();
    OverlapResult res = maximize_slocc_overlap(phi, psi, cfg, jobs);
    const double dt = now() - t0;
    *lambdaOut = res.lambda;
    return dt;
}

double bench_bridge(int jobs, double* checksum) {
    PureState psi = representative(StateId::w(3));
    SloccWitness w = build_witness(0.6, representative(StateId::ghz(3)), StateId::w(3));
    EmbeddedWitness e = embed(w, psi);
    const int trials = 4000;
    double acc = 0.0;
    const double t0 = now();
#pragma omp parallel for reduction(+ : acc) num_threads(jobs) schedule(static)
    for (int trial = 0; trial < trials; ++trial) {
        Gaussian g(mix_seed(900, trial));
        Vec xi = vectorize(random_ginibre(2, g));
        xi = kron(xi, vectorize(random_ginibre(2, g)));
        xi = kron(xi, vectorize(random_ginibre(2, g)));
        acc += (xi.dot(e.matrix.entries * xi)).real();
    }
    *checksum = acc;
    return now() - t0;
}

double bench_sdp_step(int threads) {
    omp_set_num_threads(threads);
    SloccWitness w = build_witness(0.9, representative(StateId::ghz(3)), StateId::w(3));
    SdpProblem p = build_ppt_relaxation(embed(w, representative(StateId::w(3))));
    SolveOptions opts;
    opts.maxNewton = 3;  // a few assembled-and-factorized Newton systems
    const double t0 = now();
    solve(p, opts);
    return now() - t0;
}

} // namespace

int main() {
    const int cores = omp_get_max_threads();
    std::printf("cores available: %d\n\n", cores);

    double lamS = 0, lamP = 0;
    const double tS = bench_overlap(1, &lamS);
    const double tP = bench_overlap(cores, &lamP);
    std::printf("overlap restarts (psi17/psi13, 48 restarts)\n");
    std::printf("  serial   %.3fs   lambda=%.12f\n", tS, lamS);
    std::printf("  omp(%d)   %.3fs   lambda=%.12f   speedup %.2fx\n", cores, tP, lamP, tS / tP);
    std::printf("  bit-identical merge: %s\n\n",
                std::memcmp(&lamS, &lamP, sizeof(double)) == 0 ? "yes" : "NO");

    double c1 = 0, c2 = 0;
    const double bS = bench_bridge(1, &c1);
    const double bP = bench_bridge(cores, &c2);
    std::printf("two-copy quadratic forms (4000 tuples, dim 64)\n");
    std::printf("  serial   %.3fs\n", bS);
    std::printf("  omp(%d)   %.3fs   speedup %.2fx\n\n", cores, bP, bS / bP);

    const double sS = bench_sdp_step(1);
    const double sP = bench_sdp_step(cores);
    std::printf("sdp centering steps (dim 64, 3 Newton systems)\n");
    std::printf("  serial   %.3fs\n", sS);
    std::printf("  omp(%d)   %.3fs   speedup %.2fx\n", cores, sP, sS / sP);
    return 0;
}
