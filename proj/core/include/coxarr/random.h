#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "coxarr/numeric.h"

namespace coxarr {

/// Seedable generator with platform-independent output. Distributions are
/// derived from raw mt19937_64 words here rather than through <random>
/// distribution objects, whose sequences differ between standard libraries.
class Rng {
public:
    static constexpr std::string_view kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Seed for an independent sub-stream, e.g. one hunt trial.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    std::size_t index(std::size_t n);       // [0, n)
    double gaussian();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Uniformly distributed point on the unit sphere S^{dim-1}.
VecD random_unit_vector(std::size_t dim, Rng& rng);

/// Haar-random orthogonal matrix (Gram-Schmidt of a Gaussian matrix).
Matrix random_orthogonal(std::size_t dim, Rng& rng);

}  // namespace coxarr
