#pragma once

#include <optional>
#include <string>

#include "slocc/overlap.hpp"
#include "slocc/states.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

/// Projector witness lambda*1 - |phi><phi| claimed to be nonnegative on the
/// orbit of some representative.
struct SloccWitness {
    double lambdaParam = 0.0;
    PureState phi;
    HermitianOperator matrix;
    StateId orbitRep;
    bool trivial = false;  // lambda >= 1 makes the operator PSD
};

/// Two-copy embedding of a witness: matrix acts on the party-major doubled
/// space with party p grouped as (p1 p2), dimension dims[p]^2.
struct EmbeddedWitness {
    SloccWitness base;
    PureState psiConj;
    HermitianOperator matrix;
    std::vector<int> groupedDims;
};

SloccWitness build_witness(double lambda, const PureState& phi, const StateId& orbitRep);

EmbeddedWitness embed(const SloccWitness& w, const PureState& psi);

/// tr(rho H); the imaginary residue must stay below 1e-12.
double expectation(const DensityMatrix& rho, const HermitianOperator& h);
double expectation(const PureState& state, const HermitianOperator& h);

/// Both sides of the two-copy identity <eta|W|eta> ==
/// <<A,B,...| W x |psi*><psi*| |A,B,...>>, computed through independent code
/// paths (local contraction vs vectorization on the doubled space).
struct BridgePair {
    double lhs = 0.0;
    double rhs = 0.0;
};

BridgePair theorem1_bridge(const SloccWitness& w, const PureState& psi,
                           const LocalOperatorTuple& ops);

struct WitnessVerdict {
    enum class Kind { Witness, Violated, Trivial };
    Kind kind = Kind::Witness;
    std::optional<LocalOperatorTuple> certificate;  // violating tuple
    OverlapResult diagnostics;
    std::string label;  // "no violation found (restarts=R)" wording for Witness
};

/// Optimizer-backed verdict: violated when the best overlap found exceeds
/// lambda + 1e-8. A "witness" verdict is a no-violation-found statement, not
/// a certificate.
WitnessVerdict verify_slocc_witness(const SloccWitness& w, const OptimizerConfig& cfg);

/// PPT-entangled family: (1-p)/Z (1-P_phi) x (1-P_psi*) + p P_phi x P_psi*
/// regrouped to the (d1 d2, d1 d2) party-major split, trace one.
DensityMatrix bestate_sigma(const PureState& phiB, const PureState& psiB, double p);

std::string witness_to_json(const SloccWitness& w, const WitnessVerdict& verdict);

} // namespace slocc
