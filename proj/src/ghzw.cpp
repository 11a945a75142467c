#include "slocc/ghzw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "slocc/states.hpp"

namespace slocc {

void WClassParams::validate() const {
    if (n < 3) throw ValidationError("W-class parametrization needs n >= 3");
    const size_t m = static_cast<size_t>(n - 1);
    if (xTilde.size() != m || alpha.size() != m || beta.size() != m)
        throw ValidationError("parameter vectors must have length n-1 (index set I0)");
    for (double x : xTilde)
        if (!(x > 0)) throw ValidationError("xTilde entries must be positive");
    if (beta.back() != 0.0) throw ValidationError("beta_N is pinned to 0 by the phase reduction");
}

std::pair<double, double> mu_nu_squared(const WClassParams& params) {
    params.validate();
    const int m = params.n - 1;
    cxd sum1 = 0.0, sum2 = 0.0;
    double prodCos2 = 1.0, prodSin2 = 1.0;
    for (int j = 0; j < m; ++j) {
        const double sj = std::sin(params.alpha[j]);
        const double cj = std::cos(params.alpha[j]);
        prodCos2 *= cj * cj;
        prodSin2 *= sj * sj;
        double prodCosOther = 1.0, prodSinOther = 1.0;
        for (int k = 0; k < m; ++k) {
            if (k == j) continue;
            prodCosOther *= std::cos(params.alpha[k]);
            prodSinOther *= std::sin(params.alpha[k]);
        }
        const cxd phase = std::exp(cxd(0.0, -params.beta[j]));
        sum1 += sj * params.xTilde[j] * phase * prodCosOther;
        sum2 += cj * params.xTilde[j] * phase * prodSinOther;
    }
    const double invTwoN = 1.0 / (2.0 * params.n);
    const double muSq = invTwoN * (std::norm(sum1) + std::norm(sum2));
    const double nuSq = invTwoN * (prodCos2 + prodSin2);
    return {muSq, nuSq};
}

double ghzw_objective(const WClassParams& params) {
    auto [muSq, nuSq] = mu_nu_squared(params);
    double sumX = 0.0;
    for (double x : params.xTilde) sumX += x * x;
    return params.n * (muSq / sumX + nuSq);
}

bool LambdaBlock::psd(double tol) const {
    return matrix.trace() >= -tol &&
           matrix(0, 0) * matrix(1, 1) - matrix(0, 1) * matrix(1, 0) >= -tol;
}

LambdaBlock lambda_block(const WClassParams& params, double lambdaN) {
    if (!(lambdaN > 0)) throw ValidationError("lambda_N must be positive");
    params.validate();
    // gauge: scale xTilde so xTilde_N = 1, as in the derivation; the
    // objective is homogeneous so nothing observable changes.
    WClassParams q = params;
    const double xn = q.xTilde.back();
    for (double& x : q.xTilde) x /= xn;
    auto [muSq, nuSq] = mu_nu_squared(q);
    double s1 = 0.0;  // sum over parties 1..N-2 only
    for (size_t k = 0; k + 1 < q.xTilde.size(); ++k) s1 += q.xTilde[k] * q.xTilde[k];
    const double t = lambdaN / q.n;
    const double total = muSq + nuSq;
    LambdaBlock block;
    block.lambdaN = lambdaN;
    block.muSq = muSq;
    block.nuSq = nuSq;
    block.sumX = s1 + 1.0;
    block.matrix(0, 0) = t * (1.0 + s1 * muSq / total) - total;
    block.matrix(0, 1) = s1 * lambdaN * std::sqrt(muSq * nuSq) / (q.n * total);
    block.matrix(1, 0) = block.matrix(0, 1);
    block.matrix(1, 1) = t * (1.0 + s1 * nuSq / total);
    return block;
}

double lambda_critical(int n) {
    if (n < 3) throw ValidationError("lambda_critical needs n >= 3");
    return n == 3 ? 0.75 : 0.5;
}

namespace {

// Minimal Nelder-Mead for the smooth low-dimensional supremum searches.
double nelder_mead(std::function<double(const std::vector<double>&)> f,
                   std::vector<double> x0, double scale, int maxIter) {
    const int m = static_cast<int>(x0.size());
    std::vector<std::vector<double>> pts(m + 1, x0);
    std::vector<double> vals(m + 1);
    for (int k = 1; k <= m; ++k) pts[k][k - 1] += scale;
    for (int k = 0; k <= m; ++k) vals[k] = f(pts[k]);
    for (int it = 0; it < maxIter; ++it) {
        // order ascending: vals[idx[0]] worst ... we minimize -objective; use
        // plain sort by value (minimization of f)
        std::vector<int> idx(m + 1);
        for (int k = 0; k <= m; ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        const int best = idx[0], worst = idx[m], second = idx[m - 1];
        if (vals[worst] - vals[best] < 1e-14) break;
        std::vector<double> centroid(m, 0.0);
        for (int k = 0; k <= m; ++k)
            if (k != worst)
                for (int d = 0; d < m; ++d) centroid[d] += pts[k][d] / m;
        auto blend = [&](double t) {
            std::vector<double> p(m);
            for (int d = 0; d < m; ++d) p[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
            return p;
        };
        std::vector<double> refl = blend(-1.0);
        double fr = f(refl);
        if (fr < vals[best]) {
            std::vector<double> exp2 = blend(-2.0);
            double fe = f(exp2);
            if (fe < fr) {
                pts[worst] = exp2;
                vals[worst] = fe;
            } else {
                pts[worst] = refl;
                vals[worst] = fr;
            }
        } else if (fr < vals[second]) {
            pts[worst] = refl;
            vals[worst] = fr;
        } else {
            std::vector<double> con = blend(0.5);
            double fc = f(con);
            if (fc < vals[worst]) {
                pts[worst] = con;
                vals[worst] = fc;
            } else {
                for (int k = 0; k <= m; ++k) {
                    if (k == best) continue;
                    for (int d = 0; d < m; ++d)
                        pts[k][d] = pts[best][d] + 0.5 * (pts[k][d] - pts[best][d]);
                    vals[k] = f(pts[k]);
                }
            }
        }
    }
    return *std::min_element(vals.begin(), vals.end());
}

} // namespace

double numeric_sup_check(int n, int trials, std::uint64_t seed, bool betaFree) {
    if (n < 3) throw ValidationError("numeric_sup_check needs n >= 3");
    if (trials < 1) throw ValidationError("trials must be positive");
    const int m = n - 1;
    const int nBeta = betaFree ? (m - 1) : 0;  // beta_N stays 0 either way
    const int dim = m + m + nBeta;             // log xTilde, alpha, beta

    auto unpack = [&](const std::vector<double>& v) {
        WClassParams p;
        p.n = n;
        p.xTilde.resize(m);
        p.alpha.resize(m);
        p.beta.assign(m, 0.0);
        for (int k = 0; k < m; ++k) p.xTilde[k] = std::exp(std::clamp(v[k], -20.0, 20.0));
        for (int k = 0; k < m; ++k) p.alpha[k] = v[m + k];
        for (int k = 0; k < nBeta; ++k) p.beta[k] = v[2 * m + k];
        return p;
    };
    auto negObjective = [&](const std::vector<double>& v) { return -ghzw_objective(unpack(v)); };

    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        Gaussian g(mix_seed(seed, t));
        std::vector<double> x0(dim);
        for (int k = 0; k < m; ++k) x0[k] = 0.7 * g();
        for (int k = 0; k < m; ++k) x0[m + k] = 0.5 * std::numbers::pi * std::abs(g());
        for (int k = 0; k < nBeta; ++k) x0[2 * m + k] = g();
        const double val = -nelder_mead(negObjective, std::move(x0), 0.35, 600 * dim);
        best = std::max(best, val);
    }
    return best;
}

double v_projection_sq(const WClassParams& params) {
    params.validate();
    const int m = params.n - 1;
    double sumX = 0.0;
    for (double x : params.xTilde) sumX += x * x;
    const double norm = std::sqrt(sumX);
    const double pref = 1.0 / std::sqrt(2.0 * params.n);
    double dot1 = 0.0, dot2 = 0.0;
    for (int j = 0; j < m; ++j) {
        double prodCosOther = 1.0, prodSinOther = 1.0;
        for (int k = 0; k < m; ++k) {
            if (k == j) continue;
            prodCosOther *= std::cos(params.alpha[k]);
            prodSinOther *= std::sin(params.alpha[k]);
        }
        const double y = pref * std::sin(params.alpha[j]) * prodCosOther;
        const double z = pref * std::cos(params.alpha[j]) * prodSinOther;
        dot1 += params.xTilde[j] / norm * y;
        dot2 += params.xTilde[j] / norm * z;
    }
    return dot1 * dot1 + dot2 * dot2;
}

double v_norm_bound(const WClassParams& params) {
    params.validate();
    const int m = params.n - 1;
    const double pref2 = 1.0 / (2.0 * params.n);
    double v1 = 0.0, v2 = 0.0, prodCos2 = 1.0, prodSin2 = 1.0;
    for (int j = 0; j < m; ++j) {
        const double c = std::cos(params.alpha[j]), s = std::sin(params.alpha[j]);
        prodCos2 *= c * c;
        prodSin2 *= s * s;
        double prodCosOther = 1.0, prodSinOther = 1.0;
        for (int k = 0; k < m; ++k) {
            if (k == j) continue;
            prodCosOther *= std::cos(params.alpha[k]);
            prodSinOther *= std::sin(params.alpha[k]);
        }
        v1 += pref2 * s * s * prodCosOther * prodCosOther;
        v2 += pref2 * c * c * prodSinOther * prodSinOther;
    }
    const double nuSq = pref2 * (prodCos2 + prodSin2);
    return params.n * (v1 + v2 + nuSq);
}

double chain_reduced_bound(double a1, double a2, double a3) {
    const double c[3] = {std::cos(a1), std::cos(a2), std::cos(a3)};
    const double s[3] = {std::sin(a1), std::sin(a2), std::sin(a3)};
    double acc = 0.0;
    for (int j = 0; j < 3; ++j) {
        double pc = 1.0, ps = 1.0;
        for (int k = 0; k < 3; ++k) {
            if (k == j) continue;
            pc *= c[k] * c[k];
            ps *= s[k] * s[k];
        }
        acc += c[j] * c[j] * ps + s[j] * s[j] * pc;
    }
    acc += c[0] * c[0] * c[1] * c[1] * c[2] * c[2] + s[0] * s[0] * s[1] * s[1] * s[2] * s[2];
    return 0.5 * acc;
}

PureState w_class_state(const WClassParams& params) {
    params.validate();
    auto xGate = [](double delta) {
        Mat u(2, 2);
        u << std::cos(delta), cxd(0, 1) * std::sin(delta),
             cxd(0, 1) * std::sin(delta), std::cos(delta);
        return u;
    };
    auto phaseGate = [](double delta) {
        Mat u = Mat::Identity(2, 2);
        u(1, 1) = std::exp(cxd(0, delta));
        return u;
    };
    std::vector<Mat> ops(params.n);
    int slot = 0;
    for (int party = 0; party < params.n; ++party) {
        if (party == params.n - 2) {  // party N-1: triangular block
            Mat gblk(2, 2);
            gblk << 1.0, params.x0, 0.0, params.xN1;
            ops[party] = gblk;
            continue;
        }
        Mat d = Mat::Identity(2, 2);
        d(1, 1) = params.xTilde[slot];
        ops[party] = xGate(params.alpha[slot]) * phaseGate(params.beta[slot]) * d;
        ++slot;
    }
    PureState w = representative(StateId::w(params.n));
    return apply_local(LocalOperatorTuple(std::move(ops)), w);
}

} // namespace slocc
