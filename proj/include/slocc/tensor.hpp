#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "slocc/errors.hpp"

namespace slocc {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

constexpr double kHermTol = 1e-12;   // entrywise hermiticity tolerance
constexpr double kPsdTol = 1e-10;    // minimum-eigenvalue slack for density matrices
constexpr double kTraceTol = 1e-10;  // trace-one tolerance
constexpr double kNormTol = 1e-12;   // state normalization tolerance

inline int product_dim(const std::vector<int>& dims) {
    int d = 1;
    for (int x : dims) d *= x;
    return d;
}

/// Multipartite pure state. Amplitudes are stored in the row-major product
/// basis |l l' l'' ...>, party 1 slowest.
struct PureState {
    std::vector<int> dims;
    Vec amps;
    bool normalized = false;

    PureState() = default;
    PureState(std::vector<int> dims_, Vec amps_, bool normalized_);

    int total_dim() const { return static_cast<int>(amps.size()); }
    int party_count() const { return static_cast<int>(dims.size()); }
    double norm() const { return amps.norm(); }

    /// Returns a normalized copy; throws DegenerateOperatorError on zero norm.
    PureState normalized_copy() const;
};

/// One square matrix per party. Members may be singular: the orbit closure is
/// reached through non-invertible tuples.
struct LocalOperatorTuple {
    std::vector<Mat> ops;

    LocalOperatorTuple() = default;
    explicit LocalOperatorTuple(std::vector<Mat> ops_);

    static LocalOperatorTuple identity(const std::vector<int>& dims);
    void check_compatible(const std::vector<int>& dims) const;
};

/// Hermitian operator with construction-time validation (entrywise 1e-12).
struct HermitianOperator {
    int dim = 0;
    Mat entries;

    HermitianOperator() = default;
    explicit HermitianOperator(Mat entries_);
};

/// Trace-one PSD operator together with the party dimensions used for
/// partial-transpose bookkeeping.
struct DensityMatrix {
    HermitianOperator base;
    std::vector<int> partyDims;

    DensityMatrix() = default;
    DensityMatrix(HermitianOperator base_, std::vector<int> partyDims_);
};

/// (tensor_i ops[i]) |state>, unnormalized on output.
PureState apply_local(const LocalOperatorTuple& ops, const PureState& state);

/// |Y>> = sum_ij Y_ij |ij>, row-major component (i,j) = Y_ij.
Vec vectorize(const Mat& op);

/// Transposition of one subsystem in the product basis.
HermitianOperator partial_transpose(const DensityMatrix& rho, int party);
Mat partial_transpose(const Mat& m, const std::vector<int>& dims, int party);

struct EigResult {
    Eigen::VectorXd values;  // ascending
    Mat vectors;             // columns are orthonormal eigenvectors
};

EigResult hermitian_eig(const HermitianOperator& h);

/// Entrywise complex conjugation in the product basis.
PureState conjugate_state(const PureState& state);

// -- dense helpers used across modules --

Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

/// |state><state| as a plain matrix.
Mat outer(const Vec& v);

/// d_p x (D/d_p) matricization: row = party-p index, column = remaining
/// indices flattened with the original ordering.
Mat matricize(const PureState& state, int party);

/// Two-copy regrouping. Input acts on copy 1 (dims1) tensor copy 2 (dims2)
/// in copy-major order; output is the same operator in party-major order,
/// party p grouped as (p1 p2) with dimension dims1[p]*dims2[p].
Mat regroup_copy_major_to_party_major(const Mat& m, const std::vector<int>& dims1,
                                      const std::vector<int>& dims2);

} // namespace slocc
