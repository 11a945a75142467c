#include "slocc/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace slocc {

namespace {

void check_dims(const std::vector<int>& dims) {
    if (dims.empty()) throw ShapeError("state needs at least one party");
    for (int d : dims)
        if (d < 2) throw ShapeError("party dimensions must be >= 2");
}

} // namespace

PureState::PureState(std::vector<int> dims_, Vec amps_, bool normalized_)
    : dims(std::move(dims_)), amps(std::move(amps_)), normalized(normalized_) {
    check_dims(dims);
    if (amps.size() != product_dim(dims)) {
        std::ostringstream os;
        os << "amplitude length " << amps.size() << " != product of dims " << product_dim(dims);
        throw ShapeError(os.str());
    }
    if (normalized && std::abs(norm() - 1.0) >= kNormTol)
        throw ValidationError("state flagged normalized but |<s|s>-1| >= 1e-12");
}

PureState PureState::normalized_copy() const {
    double n = norm();
    if (n == 0.0) throw DegenerateOperatorError("cannot normalize the zero vector");
    return PureState(dims, amps / n, true);
}

LocalOperatorTuple::LocalOperatorTuple(std::vector<Mat> ops_) : ops(std::move(ops_)) {
    for (const Mat& m : ops)
        if (m.rows() != m.cols()) throw ShapeError("local operators must be square");
}

LocalOperatorTuple LocalOperatorTuple::identity(const std::vector<int>& dims) {
    std::vector<Mat> ops;
    ops.reserve(dims.size());
    for (int d : dims) ops.push_back(Mat::Identity(d, d));
    return LocalOperatorTuple(std::move(ops));
}

void LocalOperatorTuple::check_compatible(const std::vector<int>& dims) const {
    if (ops.size() != dims.size())
        throw ShapeError("operator count does not match party count");
    for (size_t p = 0; p < ops.size(); ++p)
        if (ops[p].rows() != dims[p])
            throw ShapeError("operator shape does not match party dimension");
}

HermitianOperator::HermitianOperator(Mat entries_) : entries(std::move(entries_)) {
    if (entries.rows() != entries.cols()) throw ShapeError("hermitian operator must be square");
    dim = static_cast<int>(entries.rows());
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            if (std::abs(entries(i, j) - std::conj(entries(j, i))) >= kHermTol)
                throw ValidationError("operator is not hermitian to 1e-12");
}

DensityMatrix::DensityMatrix(HermitianOperator base_, std::vector<int> partyDims_)
    : base(std::move(base_)), partyDims(std::move(partyDims_)) {
    check_dims(partyDims);
    if (product_dim(partyDims) != base.dim)
        throw ShapeError("party dimensions do not multiply to the operator dimension");
    double tr = base.entries.trace().real();
    if (std::abs(tr - 1.0) >= kTraceTol)
        throw ValidationError("density matrix trace differs from 1 by >= 1e-10");
    Eigen::SelfAdjointEigenSolver<Mat> es(base.entries, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw ValidationError("density matrix has an eigenvalue below -1e-10");
}

PureState apply_local(const LocalOperatorTuple& ops, const PureState& state) {
    ops.check_compatible(state.dims);
    const int total = state.total_dim();
    Vec cur = state.amps;
    Vec next(total);
    int left = 1;
    for (size_t p = 0; p < ops.ops.size(); ++p) {
        const int d = state.dims[p];
        const int right = total / (left * d);
        const Mat& a = ops.ops[p];
        next.setZero();
        for (int l = 0; l < left; ++l)
            for (int i = 0; i < d; ++i) {
                const int out = (l * d + i) * right;
                for (int j = 0; j < d; ++j) {
                    const cxd w = a(i, j);
                    if (w == cxd(0, 0)) continue;
                    const int in = (l * d + j) * right;
                    for (int r = 0; r < right; ++r) next[out + r] += w * cur[in + r];
                }
            }
        cur.swap(next);
        left *= d;
    }
    return PureState(state.dims, std::move(cur), false);
}

Vec vectorize(const Mat& op) {
    if (op.rows() != op.cols()) throw ShapeError("vectorize expects a square matrix");
    const int d = static_cast<int>(op.rows());
    Vec v(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) v[i * d + j] = op(i, j);
    return v;
}

Mat partial_transpose(const Mat& m, const std::vector<int>& dims, int party) {
    const int n = product_dim(dims);
    if (m.rows() != n || m.cols() != n)
        throw ShapeError("matrix dimension does not match party dimensions");
    if (party < 0 || party >= static_cast<int>(dims.size()))
        throw ShapeError("invalid party index");
    int left = 1;
    for (int q = 0; q < party; ++q) left *= dims[q];
    const int d = dims[party];
    const int right = n / (left * d);
    Mat out(n, n);
    for (int la = 0; la < left; ++la)
        for (int ia = 0; ia < d; ++ia)
            for (int ra = 0; ra < right; ++ra) {
                const int rowbase = (la * d + ia) * right + ra;
                for (int lb = 0; lb < left; ++lb)
                    for (int ib = 0; ib < d; ++ib)
                        for (int rb = 0; rb < right; ++rb) {
                            const int col = (lb * d + ib) * right + rb;
                            const int rowsrc = (la * d + ib) * right + ra;
                            const int colsrc = (lb * d + ia) * right + rb;
                            out(rowbase, col) = m(rowsrc, colsrc);
                        }
            }
    return out;
}

HermitianOperator partial_transpose(const DensityMatrix& rho, int party) {
    return HermitianOperator(partial_transpose(rho.base.entries, rho.partyDims, party));
}

EigResult hermitian_eig(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h.entries);
    if (es.info() != Eigen::Success)
        throw ValidationError("eigendecomposition failed to converge");
    return EigResult{es.eigenvalues(), es.eigenvectors()};
}

PureState conjugate_state(const PureState& state) {
    return PureState(state.dims, state.amps.conjugate(), state.normalized);
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (int i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

Mat outer(const Vec& v) { return v * v.adjoint(); }

Mat matricize(const PureState& state, int party) {
    if (party < 0 || party >= state.party_count()) throw ShapeError("invalid party index");
    const int total = state.total_dim();
    int left = 1;
    for (int q = 0; q < party; ++q) left *= state.dims[q];
    const int d = state.dims[party];
    const int right = total / (left * d);
    Mat m(d, left * right);
    for (int l = 0; l < left; ++l)
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < right; ++r) m(i, l * right + r) = state.amps[(l * d + i) * right + r];
    return m;
}

namespace {

// out[k] = multi-index digits of k, slowest first
void decode(int k, const std::vector<int>& dims, std::vector<int>& digits) {
    for (int p = static_cast<int>(dims.size()) - 1; p >= 0; --p) {
        digits[p] = k % dims[p];
        k /= dims[p];
    }
}

} // namespace

Mat regroup_copy_major_to_party_major(const Mat& m, const std::vector<int>& dims1,
                                      const std::vector<int>& dims2) {
    if (dims1.size() != dims2.size())
        throw ShapeError("copy regrouping needs equal party counts");
    const int n1 = product_dim(dims1);
    const int n2 = product_dim(dims2);
    const int n = n1 * n2;
    if (m.rows() != n || m.cols() != n) throw ShapeError("operator dimension mismatch in regrouping");
    const int parties = static_cast<int>(dims1.size());

    // permutation: party-major index -> copy-major index
    std::vector<int> perm(n);
    std::vector<int> grouped(parties);
    for (int p = 0; p < parties; ++p) grouped[p] = dims1[p] * dims2[p];
    std::vector<int> g(parties), a(parties), b(parties);
    for (int k = 0; k < n; ++k) {
        decode(k, grouped, g);
        for (int p = 0; p < parties; ++p) {
            a[p] = g[p] / dims2[p];
            b[p] = g[p] % dims2[p];
        }
        int idx1 = 0, idx2 = 0;
        for (int p = 0; p < parties; ++p) idx1 = idx1 * dims1[p] + a[p];
        for (int p = 0; p < parties; ++p) idx2 = idx2 * dims2[p] + b[p];
        perm[k] = idx1 * n2 + idx2;
    }

    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
    return out;
}

} // namespace slocc
