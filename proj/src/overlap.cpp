#include "slocc/overlap.hpp"

#include <omp.h>

#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace slocc {

void OptimizerConfig::validate() const {
    if (restarts < 1) throw ValidationError("restarts must be positive");
    if (maxSweeps < 1) throw ValidationError("maxSweeps must be positive");
    if (convergenceTol <= 0) throw ValidationError("convergenceTol must be positive");
    if (regularization <= 0) throw ValidationError("regularization must be positive");
    if (saturationThreshold <= 0 || saturationThreshold >= 1)
        throw ValidationError("saturationThreshold must lie in (0,1)");
}

double overlap_objective(const PureState& phi, const PureState& psi,
                         const LocalOperatorTuple& ops) {
    if (phi.dims != psi.dims) throw ShapeError("phi and psi dimensions differ");
    PureState eta = apply_local(ops, psi);
    const double n2 = eta.amps.squaredNorm();
    if (n2 == 0.0 || !std::isfinite(n2))
        throw DegenerateOperatorError("operator tuple annihilates psi");
    return std::norm(phi.amps.dot(eta.amps)) / n2;
}

namespace {

// In-place Hermitian-positive-definite solve helpers for the tiny per-party
// systems. A = conj(N) * inv(G + eps*I); G is d x d HPD after regularization.
void solve_update(const Mat& n, const Mat& g, double eps, Mat& a) {
    const int d = static_cast<int>(g.rows());
    if (d == 2) {
        const cxd g00 = g(0, 0) + eps, g11 = g(1, 1) + eps, g01 = g(0, 1);
        const cxd det = g00 * g11 - g01 * std::conj(g01);
        a.resize(2, 2);
        for (int i = 0; i < 2; ++i) {
            const cxd n0 = std::conj(n(i, 0)), n1 = std::conj(n(i, 1));
            a(i, 0) = (n0 * g11 - n1 * std::conj(g01)) / det;
            a(i, 1) = (n1 * g00 - n0 * g01) / det;
        }
        return;
    }
    if (d == 3) {
        Eigen::Matrix3cd gg;
        gg = g;
        gg(0, 0) += eps;
        gg(1, 1) += eps;
        gg(2, 2) += eps;
        Eigen::Matrix3cd inv = gg.inverse();
        a.resize(3, 3);
        a.noalias() = n.conjugate() * inv;
        return;
    }
    Mat gg = g + eps * Mat::Identity(d, d);
    a = n.conjugate() * gg.llt().solve(Mat::Identity(d, d));
}

// Per-restart scratch space: everything sized once so sweeps stay
// allocation-free.
struct Workspace {
    std::vector<int> dims;
    int total = 0;
    std::vector<Mat> phiMats;  // matricizations of the target
    std::vector<Mat> ops;
    Vec bufA, bufB;
    std::vector<Mat> xMat, nMat, gMat, aMat;

    Workspace(const PureState& phi) : dims(phi.dims), total(phi.total_dim()) {
        const int parties = static_cast<int>(dims.size());
        phiMats.reserve(parties);
        for (int p = 0; p < parties; ++p) phiMats.push_back(matricize(phi, p));
        ops.resize(parties);
        bufA.resize(total);
        bufB.resize(total);
        xMat.resize(parties);
        nMat.resize(parties);
        gMat.resize(parties);
        aMat.resize(parties);
        for (int p = 0; p < parties; ++p) {
            const int d = dims[p];
            const int rest = total / d;
            xMat[p].resize(d, rest);
            nMat[p].resize(d, d);
            gMat[p].resize(d, d);
            aMat[p].resize(d, d);
        }
    }
};

// chi = (ops, identity at skip) |psi>, matricized at party skip into ws.xMat.
// Returns the squared norm of chi.
double build_environment(Workspace& ws, const Vec& psi, int skip) {
    const int parties = static_cast<int>(ws.dims.size());
    const Vec* cur = &psi;
    Vec* next = &ws.bufA;
    Vec* other = &ws.bufB;
    int left = 1;
    for (int p = 0; p < parties; ++p) {
        const int d = ws.dims[p];
        const int right = ws.total / (left * d);
        if (p != skip) {
            const Mat& m = ws.ops[p];
            next->setZero();
            for (int l = 0; l < left; ++l)
                for (int i = 0; i < d; ++i) {
                    const int out = (l * d + i) * right;
                    for (int j = 0; j < d; ++j) {
                        const cxd w = m(i, j);
                        const int in = (l * d + j) * right;
                        for (int r = 0; r < right; ++r)
                            (*next)[out + r] += w * (*cur)[in + r];
                    }
                }
            cur = next;
            std::swap(next, other);
        }
        left *= d;
    }
    // matricize at the skipped party
    Mat& x = ws.xMat[skip];
    int lp = 1;
    for (int q = 0; q < skip; ++q) lp *= ws.dims[q];
    const int d = ws.dims[skip];
    const int right = ws.total / (lp * d);
    double s2 = 0.0;
    for (int l = 0; l < lp; ++l)
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < right; ++r) {
                const cxd v = (*cur)[(l * d + i) * right + r];
                x(i, l * right + r) = v;
                s2 += std::norm(v);
            }
    return s2;
}

struct RestartOutcome {
    double value = 0.0;
    int sweeps = 0;
    std::vector<Mat> ops;
};

RestartOutcome run_restart(Workspace& ws, const PureState& phi, const PureState& psi,
                           const OptimizerConfig& cfg, std::uint64_t restartSeed) {
    const int parties = static_cast<int>(ws.dims.size());
    Gaussian g(restartSeed);
    for (int p = 0; p < parties; ++p) {
        Mat m = random_ginibre(ws.dims[p], g);
        ws.ops[p] = m / m.norm();
    }
    double prev = -1.0;
    int sweeps = 0;
    for (int sweep = 0; sweep < cfg.maxSweeps; ++sweep) {
        sweeps = sweep + 1;
        double obj = 0.0;
        bool dead = false;
        for (int p = 0; p < parties; ++p) {
            const double s2 = build_environment(ws, psi.amps, p);
            if (s2 == 0.0) {
                dead = true;
                break;
            }
            const double s = std::sqrt(s2);
            Mat& x = ws.xMat[p];
            Mat& n = ws.nMat[p];
            Mat& gm = ws.gMat[p];
            n.noalias() = ws.phiMats[p].conjugate() * x.transpose();
            n /= s;
            gm.noalias() = x * x.adjoint();
            gm /= s2;
            solve_update(n, gm, cfg.regularization, ws.aMat[p]);
            const double na = ws.aMat[p].norm();
            if (na == 0.0) {
                dead = true;
                break;
            }
            ws.aMat[p] /= na;
            ws.ops[p] = ws.aMat[p];
            if (p == parties - 1) {
                // objective from the update byproducts (exact at current ops)
                const cxd num = (ws.ops[p].array() * n.array()).sum();
                const double den =
                    (ws.ops[p] * gm * ws.ops[p].adjoint()).trace().real();
                obj = den > 0 ? std::norm(num) / den : 0.0;
            }
        }
        if (dead) break;
        if (obj >= cfg.saturationThreshold) break;
        if (prev >= 0.0 && std::abs(obj - prev) <= cfg.convergenceTol * std::max(1.0, obj)) break;
        prev = obj;
    }
    RestartOutcome out;
    out.sweeps = sweeps;
    out.ops = ws.ops;
    try {
        out.value = overlap_objective(phi, psi, LocalOperatorTuple(ws.ops));
    } catch (const DegenerateOperatorError&) {
        out.value = 0.0;
    }
    return out;
}

OverlapResult merge_outcomes(std::vector<RestartOutcome>& outcomes, const OptimizerConfig& cfg) {
    OverlapResult res;
    res.perRestartValues.reserve(outcomes.size());
    res.sweepsUsed.reserve(outcomes.size());
    int best = 0;
    for (size_t r = 0; r < outcomes.size(); ++r) {
        res.perRestartValues.push_back(outcomes[r].value);
        res.sweepsUsed.push_back(outcomes[r].sweeps);
        if (outcomes[r].value > outcomes[best].value) best = static_cast<int>(r);
    }
    res.lambda = outcomes[best].value;
    res.argmax = LocalOperatorTuple(std::move(outcomes[best].ops));
    res.saturated = res.lambda >= cfg.saturationThreshold;
    return res;
}

} // namespace

Mat per_party_update(const PureState& phi, const PureState& psi, const LocalOperatorTuple& ops,
                     int party, double eps) {
    if (phi.dims != psi.dims) throw ShapeError("phi and psi dimensions differ");
    ops.check_compatible(psi.dims);
    if (party < 0 || party >= phi.party_count()) throw ShapeError("invalid party index");
    if (eps <= 0) throw ValidationError("regularization must be positive");
    Workspace ws(phi);
    ws.ops = ops.ops;
    const double s2 = build_environment(ws, psi.amps, party);
    if (s2 == 0.0) throw DegenerateOperatorError("fixed parties annihilate psi");
    const double s = std::sqrt(s2);
    Mat n = ws.phiMats[party].conjugate() * ws.xMat[party].transpose() / s;
    Mat g = ws.xMat[party] * ws.xMat[party].adjoint() / s2;
    Mat a;
    solve_update(n, g, eps, a);
    const double na = a.norm();
    return na > 0 ? Mat(a / na) : a;
}

OverlapResult maximize_slocc_overlap(const PureState& phi, const PureState& psi,
                                     const OptimizerConfig& cfg, int jobs) {
    cfg.validate();
    if (phi.dims != psi.dims) throw ShapeError("phi and psi dimensions differ");
    const int n = cfg.restarts;
    std::vector<RestartOutcome> outcomes(n);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    if (threads == 1) {
        Workspace ws(phi);
        for (int r = 0; r < n; ++r) outcomes[r] = run_restart(ws, phi, psi, cfg, mix_seed(cfg.seed, r));
    } else {
#pragma omp parallel num_threads(threads)
        {
            Workspace ws(phi);
#pragma omp for schedule(dynamic)
            for (int r = 0; r < n; ++r)
                outcomes[r] = run_restart(ws, phi, psi, cfg, mix_seed(cfg.seed, r));
        }
    }
    return merge_outcomes(outcomes, cfg);
}

OverlapResult maximize_slocc_overlap_serial(const PureState& phi, const PureState& psi,
                                            const OptimizerConfig& cfg) {
    return maximize_slocc_overlap(phi, psi, cfg, 1);
}

OverlapTable overlap_table(const std::vector<StateId>& ids, const OptimizerConfig& cfg, int jobs) {
    cfg.validate();
    if (ids.empty()) throw ShapeError("table needs at least one id");
    std::vector<PureState> states;
    states.reserve(ids.size());
    for (const StateId& id : ids) states.push_back(representative(id));
    for (const PureState& s : states)
        if (s.dims != states.front().dims) throw ShapeError("table ids have mixed dimensions");

    OverlapTable table;
    table.ids = ids;
    table.cfg = cfg;
    const int n = static_cast<int>(ids.size());
    table.cells.resize(n * n);
    for (int j = 0; j < n; ++j)         // orbit (row)
        for (int i = 0; i < n; ++i) {   // target (column)
            if (i == j) {
                OverlapResult self;
                self.lambda = 1.0;
                self.saturated = true;
                self.argmax = LocalOperatorTuple::identity(states[i].dims);
                table.cells[j * n + i] = std::move(self);
                continue;
            }
            table.cells[j * n + i] = maximize_slocc_overlap(states[i], states[j], cfg, jobs);
        }
    return table;
}

std::string table_to_csv(const OverlapTable& table) {
    const int n = static_cast<int>(table.ids.size());
    std::ostringstream os;
    os << "orbit\\target";
    for (int i = 0; i < n; ++i) os << ',' << table.ids[i].str();
    os << '\n';
    for (int j = 0; j < n; ++j) {
        os << table.ids[j].str();
        for (int i = 0; i < n; ++i) {
            os << ',';
            if (i == j) {
                os << "self";
            } else if (table.at(j, i).saturated) {
                os << "1*";
            } else {
                os << std::fixed << std::setprecision(6) << table.at(j, i).lambda;
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string table_to_json(const OverlapTable& table, bool diagnostics) {
    nlohmann::json j;
    j["schemaVersion"] = 1;
    j["kind"] = "overlap-table";
    j["restarts"] = table.cfg.restarts;
    j["maxSweeps"] = table.cfg.maxSweeps;
    j["seed"] = table.cfg.seed;
    j["saturationThreshold"] = table.cfg.saturationThreshold;
    j["ids"] = nlohmann::json::array();
    for (const StateId& id : table.ids) j["ids"].push_back(id.str());
    const int n = static_cast<int>(table.ids.size());
    auto rows = nlohmann::json::array();
    for (int row = 0; row < n; ++row) {
        auto cols = nlohmann::json::array();
        for (int col = 0; col < n; ++col) {
            const OverlapResult& c = table.at(row, col);
            nlohmann::json cell;
            cell["lambda"] = c.lambda;
            cell["saturated"] = c.saturated;
            cell["self"] = (row == col);
            if (diagnostics && row != col) {
                cell["perRestartValues"] = c.perRestartValues;
                cell["sweepsUsed"] = c.sweepsUsed;
            }
            cols.push_back(std::move(cell));
        }
        rows.push_back(std::move(cols));
    }
    j["cells"] = std::move(rows);
    return j.dump(2);
}

} // namespace slocc
