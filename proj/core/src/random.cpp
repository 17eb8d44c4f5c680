#include "coxarr/random.h"

#include <cmath>

namespace coxarr {

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined key.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::index(std::size_t n) {
    if (n == 0) throw PreconditionError("Rng::index on empty range");
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method.
    double u, v, s;
    do {
        u = uniform(-1.0, 1.0);
        v = uniform(-1.0, 1.0);
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

VecD random_unit_vector(std::size_t dim, Rng& rng) {
    for (;;) {
        VecD v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = rng.gaussian();
        const double n = v.norm();
        if (n > 1e-6) return v * (1.0 / n);
    }
}

Matrix random_orthogonal(std::size_t dim, Rng& rng) {
    const Tolerance tol;
    for (;;) {
        std::vector<VecD> cols;
        for (std::size_t i = 0; i < dim; ++i) {
            VecD v(dim);
            for (std::size_t j = 0; j < dim; ++j) v[j] = rng.gaussian();
            cols.push_back(v);
        }
        auto basis = orthonormal_span(cols, tol);
        if (basis.size() == dim) return Matrix::from_rows(basis);
    }
}

}  // namespace coxarr
