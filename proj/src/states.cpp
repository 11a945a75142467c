#include "slocc/states.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace slocc {

namespace {

// Unnormalized integer amplitude patterns of the fully entangled 2x3x3
// classes, kept verbatim so tests can diff against the catalog kets.
const std::vector<std::vector<std::array<int, 3>>>& psi233_terms() {
    static const std::vector<std::vector<std::array<int, 3>>> terms = {
        /* psi6  */ {{0, 0, 0}, {1, 1, 1}},
        /* psi7  */ {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}},
        /* psi8  */ {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}},
        /* psi9  */ {{0, 0, 0}, {0, 1, 1}, {1, 2, 0}},
        /* psi10 */ {{0, 0, 0}, {0, 1, 1}, {1, 2, 2}},
        /* psi11 */ {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 2}},
        /* psi12 */ {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}},
        /* psi13 */ {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 2, 0}},
        /* psi14 */ {{0, 0, 0}, {0, 1, 1}, {1, 1, 2}, {1, 2, 0}},
        /* psi15 */ {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 2, 2}},
        /* psi16 */ {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}},
        /* psi17 */ {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 2}},
    };
    return terms;
}

} // namespace

StateId StateId::psi(int index) {
    if (index < 6 || index > 17) throw StateIdError("psi index must be 6..17");
    StateId id;
    id.kind = Kind::Psi233;
    id.index = index;
    id.dims = {2, 3, 3};
    return id;
}

StateId StateId::ghz(int n) {
    if (n < 2) throw StateIdError("ghz needs at least 2 qubits");
    StateId id;
    id.kind = Kind::Ghz;
    id.index = n;
    id.dims.assign(n, 2);
    return id;
}

StateId StateId::w(int n) {
    if (n < 2) throw StateIdError("w needs at least 2 qubits");
    StateId id;
    id.kind = Kind::W;
    id.index = n;
    id.dims.assign(n, 2);
    return id;
}

StateId StateId::zero(std::vector<int> dims) {
    if (dims.empty()) throw StateIdError("zero:... needs at least one dimension");
    for (int d : dims)
        if (d < 2) throw StateIdError("zero:... dimensions must be >= 2");
    StateId id;
    id.kind = Kind::ProductZero;
    id.dims = std::move(dims);
    return id;
}

StateId StateId::custom_state(PureState s) {
    StateId id;
    id.kind = Kind::Custom;
    id.dims = s.dims;
    id.custom = std::move(s);
    return id;
}

std::string StateId::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Psi233: os << "psi" << index; break;
        case Kind::Ghz: os << "ghz:" << index; break;
        case Kind::W: os << "w:" << index; break;
        case Kind::ProductZero:
            os << "zero:";
            for (size_t p = 0; p < dims.size(); ++p) os << (p ? "x" : "") << dims[p];
            break;
        case Kind::Custom: os << "custom"; break;
    }
    return os.str();
}

StateId parse_state_id(const std::string& text) {
    auto bad = [&](const char* why) {
        return StateIdError("bad state id '" + text + "': " + why);
    };
    if (text.rfind("psi", 0) == 0) {
        int idx = 0;
        try {
            size_t used = 0;
            idx = std::stoi(text.substr(3), &used);
            if (used != text.size() - 3) throw bad("trailing characters");
        } catch (const StateIdError&) {
            throw;
        } catch (...) {
            throw bad("expected psi<6..17>");
        }
        if (idx < 6 || idx > 17) throw bad("psi index must be 6..17");
        return StateId::psi(idx);
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) throw bad("expected psiK, ghz:N, w:N or zero:d1xd2x...");
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    if (head == "ghz" || head == "w") {
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(tail, &used);
            if (used != tail.size()) throw bad("trailing characters");
        } catch (const StateIdError&) {
            throw;
        } catch (...) {
            throw bad("party count must be an integer");
        }
        if (n < 2) throw bad("party count must be >= 2");
        return head == "ghz" ? StateId::ghz(n) : StateId::w(n);
    }
    if (head == "zero") {
        if (tail.empty() || tail.front() == 'x' || tail.back() == 'x' ||
            tail.find("xx") != std::string::npos)
            throw bad("malformed dimension list");
        std::vector<int> dims;
        std::istringstream is(tail);
        std::string piece;
        while (std::getline(is, piece, 'x')) {
            try {
                size_t used = 0;
                int d = std::stoi(piece, &used);
                if (used != piece.size()) throw bad("malformed dimension list");
                dims.push_back(d);
            } catch (const StateIdError&) {
                throw;
            } catch (...) {
                throw bad("malformed dimension list");
            }
        }
        if (dims.empty()) throw bad("empty dimension list");
        for (int d : dims)
            if (d < 2) throw bad("dimensions must be >= 2");
        return StateId::zero(std::move(dims));
    }
    throw bad("unknown state family");
}

PureState representative(const StateId& id) {
    switch (id.kind) {
        case StateId::Kind::Psi233: {
            const auto& terms = psi233_terms()[id.index - 6];
            std::vector<int> dims = {2, 3, 3};
            Vec amps = Vec::Zero(18);
            for (const auto& t : terms) amps[(t[0] * 3 + t[1]) * 3 + t[2]] = 1.0;
            amps /= amps.norm();
            return PureState(dims, std::move(amps), true);
        }
        case StateId::Kind::Ghz: {
            const int n = id.index;
            Vec amps = Vec::Zero(1 << n);
            amps[0] = amps[(1 << n) - 1] = 1.0 / std::numbers::sqrt2;
            return PureState(std::vector<int>(n, 2), std::move(amps), true);
        }
        case StateId::Kind::W: {
            const int n = id.index;
            Vec amps = Vec::Zero(1 << n);
            const double a = 1.0 / std::sqrt(static_cast<double>(n));
            for (int q = 0; q < n; ++q) amps[1 << q] = a;
            return PureState(std::vector<int>(n, 2), std::move(amps), true);
        }
        case StateId::Kind::ProductZero: {
            Vec amps = Vec::Zero(product_dim(id.dims));
            amps[0] = 1.0;
            return PureState(id.dims, std::move(amps), true);
        }
        case StateId::Kind::Custom:
            if (!id.custom) throw StateIdError("custom id carries no state");
            return id.custom->normalized_copy();
    }
    throw StateIdError("unknown state id");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step on seed + stream*golden
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Gaussian::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller keeps the stream identical across standard libraries.
    const double kTwoPi = 2.0 * std::numbers::pi;
    double u1 = 0.0;
    do {
        u1 = (engine_() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    const double u2 = (engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

cxd Gaussian::complex_standard_normal() {
    const double re = (*this)();
    const double im = (*this)();
    return cxd(re, im) / std::numbers::sqrt2;
}

Mat random_ginibre(int d, std::uint64_t seed) {
    if (d < 1) throw ShapeError("ginibre dimension must be >= 1");
    Gaussian g(seed);
    return random_ginibre(d, g);
}

Mat random_ginibre(int d, Gaussian& g) {
    if (d < 1) throw ShapeError("ginibre dimension must be >= 1");
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = g.complex_standard_normal();
    return m;
}

PureState random_product_state(const std::vector<int>& dims, std::uint64_t seed) {
    Gaussian g(seed);
    return random_product_state(dims, g);
}

PureState random_product_state(const std::vector<int>& dims, Gaussian& g) {
    Vec acc = Vec::Ones(1);
    for (int d : dims) {
        Vec local(d);
        for (int i = 0; i < d; ++i) local[i] = g.complex_standard_normal();
        local /= local.norm();
        acc = kron(acc, local);
    }
    return PureState(dims, std::move(acc), true);
}

Mat random_unitary(int d, Gaussian& g) {
    Mat m = random_ginibre(d, g);
    Eigen::HouseholderQR<Mat> qr(m);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        cxd rkk = r(k, k);
        q.col(k) *= (rkk == cxd(0, 0)) ? cxd(1, 0) : rkk / std::abs(rkk);
    }
    return q;
}

} // namespace slocc
