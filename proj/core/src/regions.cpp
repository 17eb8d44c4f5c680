#include "coxarr/regions.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace coxarr {

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::size_t RegionEnumeration::find(const SignVector& s) const {
    auto it = std::lower_bound(regions.begin(), regions.end(), s);
    if (it == regions.end() || *it != s) return npos;
    return static_cast<std::size_t>(it - regions.begin());
}

std::optional<SignVector> sign_vector_of(const Arrangement& a, const VecD& p) {
    SignVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = dot(a[i].normal(), p);
        if (a.tol().near_zero(x)) return std::nullopt;
        s[i] = x > 0.0 ? 1 : -1;
    }
    return s;
}

RegionEnumeration enumerate_regions(const Arrangement& a) {
    const std::size_t d = a.dim();
    if (d < 2) throw PreconditionError("enumerate_regions needs dimension >= 2");
    if (!is_essential(a)) throw PreconditionError("enumerate_regions needs an essential arrangement");
    const Tolerance& tol = a.tol();
    const auto normals = a.normals();
    const std::size_t n = normals.size();

    std::set<SignVector> found;
    for_each_subset(n, d - 1, [&](const std::vector<std::size_t>& subset) {
        std::vector<VecD> rows;
        for (std::size_t i : subset) rows.push_back(normals[i]);
        if (rank(rows, tol) != d - 1) return;
        const VecD ray = orthogonal_complement(rows, d, tol).front();
        const auto basis = orthonormal_span(rows, tol);

        // Coefficients of the defining normals in the basis of their span.
        Matrix g(d - 1, d - 1);
        for (std::size_t r = 0; r < d - 1; ++r)
            for (std::size_t k = 0; k < d - 1; ++k) g(r, k) = dot(rows[r], basis[k]);

        for (double side : {1.0, -1.0}) {
            const VecD r = side * ray;
            for (std::size_t mask = 0; mask < (std::size_t{1} << (d - 1)); ++mask) {
                VecD rhs(d - 1);
                for (std::size_t k = 0; k < d - 1; ++k) rhs[k] = (mask >> k) & 1U ? 1.0 : -1.0;
                const auto coeff = solve_linear(g, rhs, tol);
                if (!coeff) continue;
                VecD w(d);
                for (std::size_t k = 0; k < d - 1; ++k) w += (*coeff)[k] * basis[k];
                // Signs of r + t*w for infinitesimal t > 0: hyperplanes off the
                // ray keep the ray's side, those through it take w's side.
                SignVector s(n);
                bool clean = true;
                for (std::size_t i = 0; i < n && clean; ++i) {
                    const double on_ray = dot(normals[i], r);
                    const double off = dot(normals[i], w);
                    if (std::abs(on_ray) > tol.abs_eps()) {
                        s[i] = on_ray > 0.0 ? 1 : -1;
                    } else if (std::abs(off) > tol.abs_eps() * w.norm()) {
                        s[i] = off > 0.0 ? 1 : -1;
                    } else {
                        clean = false;
                    }
                }
                if (clean) found.insert(std::move(s));
            }
        }
    });

    RegionEnumeration out;
    out.regions.assign(found.begin(), found.end());
    out.facet_counts.resize(out.regions.size(), 0);
    for (std::size_t r = 0; r < out.regions.size(); ++r) {
        SignVector flipped = out.regions[r];
        for (std::size_t i = 0; i < n; ++i) {
            flipped[i] = static_cast<signed char>(-flipped[i]);
            if (out.find(flipped) != RegionEnumeration::npos) ++out.facet_counts[r];
            flipped[i] = static_cast<signed char>(-flipped[i]);
        }
    }
    return out;
}

}  // namespace coxarr
