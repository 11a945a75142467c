#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slocc/tensor.hpp"

namespace slocc {

/// Named state in the catalog. Grammar: "psi6".."psi17", "ghz:N", "w:N",
/// "zero:d1xd2x...".
struct StateId {
    enum class Kind { Psi233, Ghz, W, ProductZero, Custom };

    Kind kind = Kind::Psi233;
    int index = 0;                 // 6..17 for Psi233, qubit count for Ghz/W
    std::vector<int> dims;         // ProductZero / Custom
    std::optional<PureState> custom;

    static StateId psi(int index);
    static StateId ghz(int n);
    static StateId w(int n);
    static StateId zero(std::vector<int> dims);
    static StateId custom_state(PureState s);

    std::string str() const;
};

StateId parse_state_id(const std::string& text);

/// Normalized canonical state for the id. The 2x3x3 representatives keep the
/// integer amplitude patterns of the catalog with the normalization constant
/// inserted.
PureState representative(const StateId& id);

/// PRNG plumbing: a splitmix64 hash for deriving independent substreams, and
/// a platform-stable standard normal (Box-Muller over mt19937_64).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Gaussian {
public:
    explicit Gaussian(std::uint64_t seed) : engine_(seed) {}
    double operator()();
    cxd complex_standard_normal();  // E|z|^2 = 1

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// d x d matrix with i.i.d. complex standard normal entries.
Mat random_ginibre(int d, std::uint64_t seed);
Mat random_ginibre(int d, Gaussian& g);

/// Tensor product of independent Haar-random local kets.
PureState random_product_state(const std::vector<int>& dims, std::uint64_t seed);
PureState random_product_state(const std::vector<int>& dims, Gaussian& g);

/// Haar-random unitary (QR of a Ginibre matrix with phase fixing).
Mat random_unitary(int d, Gaussian& g);

} // namespace slocc
