#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slocc/states.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

struct OptimizerConfig {
    int restarts = 200;
    int maxSweeps = 2000;
    double convergenceTol = 1e-13;     // relative objective change per sweep
    double regularization = 1e-12;     // epsilon added to the per-party Gram
    double saturationThreshold = 1.0 - 1e-9;
    std::uint64_t seed = 0;

    void validate() const;
};

struct OverlapResult {
    double lambda = 0.0;               // best squared overlap found
    LocalOperatorTuple argmax;
    bool saturated = false;
    std::vector<double> perRestartValues;
    std::vector<int> sweepsUsed;
};

/// |<phi|(ops x)|psi>|^2 / ||(ops x)|psi>||^2. Invariant under per-party
/// rescaling of the tuple.
double overlap_objective(const PureState& phi, const PureState& psi,
                         const LocalOperatorTuple& ops);

/// Closed-form block-coordinate step: with all other parties fixed the
/// objective is a rank-1 quadratic over a PSD quadratic in the party matrix,
/// maximized by a regularized solve. Returns the updated matrix.
Mat per_party_update(const PureState& phi, const PureState& psi, const LocalOperatorTuple& ops,
                     int party, double eps);

/// Multi-start alternating maximization of the SLOCC overlap. Restarts are
/// independent; with jobs != 1 they run under OpenMP and the merge is a
/// deterministic first-found-max over restart indices, so parallel and serial
/// runs agree bit for bit. jobs <= 0 uses all cores.
OverlapResult maximize_slocc_overlap(const PureState& phi, const PureState& psi,
                                     const OptimizerConfig& cfg, int jobs = 0);

/// Serial reference driver, kept for testing against the parallel path.
OverlapResult maximize_slocc_overlap_serial(const PureState& phi, const PureState& psi,
                                            const OptimizerConfig& cfg);

struct OverlapTable {
    std::vector<StateId> ids;
    std::vector<OverlapResult> cells;  // row-major, entry (row j = orbit, col i = target)
    OptimizerConfig cfg;

    const OverlapResult& at(int orbitRow, int targetCol) const {
        return cells[orbitRow * ids.size() + targetCol];
    }
};

OverlapTable overlap_table(const std::vector<StateId>& ids, const OptimizerConfig& cfg,
                           int jobs = 0);

/// CSV: header row/column of state ids, cells to 6 decimals, saturated cells
/// as "1*", diagonal as "self".
std::string table_to_csv(const OverlapTable& table);

/// JSON with full diagnostics (raw decimals always retained).
std::string table_to_json(const OverlapTable& table, bool diagnostics = true);

} // namespace slocc
