#include "slocc/witness.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

namespace slocc {

namespace {

void require_normalized(const PureState& s, const char* who) {
    if (std::abs(s.norm() - 1.0) >= kNormTol)
        throw ValidationError(std::string(who) + " must be normalized");
}

} // namespace

SloccWitness build_witness(double lambda, const PureState& phi, const StateId& orbitRep) {
    require_normalized(phi, "witness projector state");
    SloccWitness w;
    w.lambdaParam = lambda;
    w.phi = phi;
    w.orbitRep = orbitRep;
    w.trivial = lambda >= 1.0;
    const int n = phi.total_dim();
    w.matrix = HermitianOperator(lambda * Mat::Identity(n, n) - outer(phi.amps));
    return w;
}

EmbeddedWitness embed(const SloccWitness& w, const PureState& psi) {
    require_normalized(psi, "embedded state");
    if (psi.dims != w.phi.dims) throw ShapeError("psi dimensions differ from the witness");
    EmbeddedWitness e;
    e.base = w;
    e.psiConj = conjugate_state(psi);
    Mat copyMajor = kron(w.matrix.entries, outer(e.psiConj.amps));
    e.matrix = HermitianOperator(
        regroup_copy_major_to_party_major(copyMajor, psi.dims, psi.dims));
    e.groupedDims.reserve(psi.dims.size());
    for (int d : psi.dims) e.groupedDims.push_back(d * d);
    return e;
}

double expectation(const DensityMatrix& rho, const HermitianOperator& h) {
    if (rho.base.dim != h.dim) throw ShapeError("dimension mismatch in expectation");
    const cxd tr = (rho.base.entries * h.entries).trace();
    const double scale = std::max(1.0, rho.base.entries.norm() * h.entries.norm());
    if (std::abs(tr.imag()) >= 1e-12 * scale)
        throw ValidationError("expectation has a non-real residue");
    return tr.real();
}

double expectation(const PureState& state, const HermitianOperator& h) {
    if (state.total_dim() != h.dim) throw ShapeError("dimension mismatch in expectation");
    const cxd val = state.amps.dot(h.entries * state.amps);
    const double scale = std::max(1.0, state.amps.squaredNorm() * h.entries.norm());
    if (std::abs(val.imag()) >= 1e-12 * scale)
        throw ValidationError("expectation has a non-real residue");
    return val.real();
}

BridgePair theorem1_bridge(const SloccWitness& w, const PureState& psi,
                           const LocalOperatorTuple& ops) {
    ops.check_compatible(psi.dims);
    BridgePair out;
    // small-space side: apply the tuple, quadratic form with the witness
    PureState eta = apply_local(ops, psi);
    out.lhs = expectation(eta, w.matrix);
    // doubled-space side: vectorized tuple against the embedded witness
    EmbeddedWitness e = embed(w, psi);
    Vec xi = vectorize(ops.ops[0]);
    for (size_t p = 1; p < ops.ops.size(); ++p) xi = kron(xi, vectorize(ops.ops[p]));
    const cxd val = xi.dot(e.matrix.entries * xi);
    out.rhs = val.real();
    return out;
}

WitnessVerdict verify_slocc_witness(const SloccWitness& w, const OptimizerConfig& cfg) {
    WitnessVerdict v;
    if (w.trivial) {
        v.kind = WitnessVerdict::Kind::Trivial;
        v.label = "trivial (lambda >= 1, operator is PSD)";
        return v;
    }
    PureState rep = representative(w.orbitRep);
    v.diagnostics = maximize_slocc_overlap(w.phi, rep, cfg);
    if (v.diagnostics.lambda > w.lambdaParam + 1e-8) {
        v.kind = WitnessVerdict::Kind::Violated;
        v.certificate = v.diagnostics.argmax;
        std::ostringstream os;
        os << "violated: orbit state with squared overlap " << v.diagnostics.lambda;
        v.label = os.str();
    } else {
        v.kind = WitnessVerdict::Kind::Witness;
        std::ostringstream os;
        os << "no violation found (restarts=" << cfg.restarts << ")";
        v.label = os.str();
    }
    return v;
}

DensityMatrix bestate_sigma(const PureState& phiB, const PureState& psiB, double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("p outside [0,1]");
    if (phiB.party_count() != 2 || phiB.dims[0] != phiB.dims[1])
        throw ShapeError("phi must live on a d1 x d1 bipartite system");
    if (psiB.party_count() != 2 || psiB.dims[0] != psiB.dims[1])
        throw ShapeError("psi must live on a d2 x d2 bipartite system");
    require_normalized(phiB, "phi");
    require_normalized(psiB, "psi");
    const int n1 = phiB.total_dim();
    const int n2 = psiB.total_dim();
    Mat p1 = outer(phiB.amps);
    Mat p2 = outer(Vec(psiB.amps.conjugate()));
    const double z = static_cast<double>((n1 - 1)) * static_cast<double>((n2 - 1));
    Mat copyMajor = ((1.0 - p) / z) * kron(Mat(Mat::Identity(n1, n1) - p1),
                                           Mat(Mat::Identity(n2, n2) - p2)) +
                    p * kron(p1, p2);
    Mat grouped = regroup_copy_major_to_party_major(copyMajor, phiB.dims, psiB.dims);
    const int d1 = phiB.dims[0], d2 = psiB.dims[0];
    return DensityMatrix(HermitianOperator(grouped), {d1 * d2, d1 * d2});
}

std::string witness_to_json(const SloccWitness& w, const WitnessVerdict& verdict) {
    nlohmann::json j;
    j["schemaVersion"] = 1;
    j["kind"] = "witness-check";
    j["lambda"] = w.lambdaParam;
    j["orbit"] = w.orbitRep.str();
    auto amps = nlohmann::json::array();
    for (int k = 0; k < w.phi.total_dim(); ++k)
        amps.push_back({w.phi.amps[k].real(), w.phi.amps[k].imag()});
    j["phi"] = {{"dims", w.phi.dims}, {"amps", amps}};
    switch (verdict.kind) {
        case WitnessVerdict::Kind::Witness: j["verdict"] = "witness"; break;
        case WitnessVerdict::Kind::Violated: j["verdict"] = "violated"; break;
        case WitnessVerdict::Kind::Trivial: j["verdict"] = "trivial"; break;
    }
    j["label"] = verdict.label;
    if (verdict.kind != WitnessVerdict::Kind::Trivial) {
        j["diagnostics"] = {{"bestLambda", verdict.diagnostics.lambda},
                            {"saturated", verdict.diagnostics.saturated},
                            {"restarts", verdict.diagnostics.perRestartValues.size()}};
    }
    if (verdict.certificate) {
        auto tuples = nlohmann::json::array();
        for (const Mat& m : verdict.certificate->ops) {
            auto rows = nlohmann::json::array();
            for (int i = 0; i < m.rows(); ++i) {
                auto row = nlohmann::json::array();
                for (int jj = 0; jj < m.cols(); ++jj)
                    row.push_back({m(i, jj).real(), m(i, jj).imag()});
                rows.push_back(std::move(row));
            }
            tuples.push_back(std::move(rows));
        }
        j["certificate"] = std::move(tuples);
    }
    return j.dump(2);
}

} // namespace slocc
