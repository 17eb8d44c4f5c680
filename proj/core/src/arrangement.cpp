#include "coxarr/arrangement.h"

#include <algorithm>
#include <cmath>

namespace coxarr {

namespace {

VecD canonical_sign(VecD v, const Tolerance& tol) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v[i]) > tol.abs_eps()) {
            if (v[i] < 0.0) v *= -1.0;
            break;
        }
    }
    return v;
}

double wrap_pi(double t) {
    t = std::fmod(t, kPi);
    if (t < 0.0) t += kPi;
    return t;
}

}  // namespace

Hyperplane::Hyperplane(const VecD& normal, const Tolerance& tol)
    : normal_(canonical_sign(normal.normalized(tol), tol)) {}

Hyperplane Hyperplane::reflected_across(const Hyperplane& mirror, const Tolerance& tol) const {
    const VecD& m = mirror.normal();
    return Hyperplane(normal_ - 2.0 * dot(normal_, m) * m, tol);
}

bool Hyperplane::same_as(const Hyperplane& other, const Tolerance& tol) const {
    return dim() == other.dim() && line_angle(normal_, other.normal_, tol) <= tol.angle_eps();
}

bool Hyperplane::contains(const VecD& v, const Tolerance& tol) const {
    return tol.near_zero(dot(normal_, v));
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, const Tolerance& tol)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), tol_(tol) {
    if (dim_ < 1) throw PreconditionError("arrangement dimension must be at least 1");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        if (hyperplanes_[i].dim() != dim_) {
            throw DimensionMismatch("hyperplane " + std::to_string(i) + " has dimension " +
                                    std::to_string(hyperplanes_[i].dim()) + ", expected " +
                                    std::to_string(dim_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (hyperplanes_[i].same_as(hyperplanes_[j], tol_)) {
                throw PreconditionError("arrangement contains duplicate hyperplanes");
            }
        }
    }
}

std::vector<VecD> Arrangement::normals() const {
    std::vector<VecD> out;
    out.reserve(hyperplanes_.size());
    for (const auto& h : hyperplanes_) out.push_back(h.normal());
    return out;
}

std::size_t Arrangement::find(const Hyperplane& h) const {
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
        if (hyperplanes_[i].same_as(h, tol_)) return i;
    return npos;
}

Arrangement Arrangement::transformed(const Matrix& orthogonal) const {
    std::vector<VecD> raw;
    raw.reserve(size());
    for (const auto& h : hyperplanes_) raw.push_back(orthogonal.apply(h.normal()));
    return make_arrangement(dim_, raw, tol_);
}

Arrangement make_arrangement(std::size_t dim, std::span<const VecD> raw_normals, const Tolerance& tol) {
    require_same_dim(raw_normals, dim, "make_arrangement");
    std::vector<Hyperplane> hs;
    hs.reserve(raw_normals.size());
    for (const auto& v : raw_normals) {
        Hyperplane h(v, tol);
        const bool dup = std::any_of(hs.begin(), hs.end(),
                                     [&](const Hyperplane& g) { return g.same_as(h, tol); });
        if (!dup) hs.push_back(std::move(h));
    }
    return Arrangement(dim, std::move(hs), tol);
}

bool is_essential(const Arrangement& a) {
    const auto ns = a.normals();
    return rank(ns, a.tol()) == a.dim();
}

Arrangement pencil_quotient(const Arrangement& a) {
    if (a.empty()) throw PreconditionError("pencil_quotient of an empty arrangement");
    if (is_essential(a)) throw PreconditionError("pencil_quotient of an essential arrangement");

    const auto ns = a.normals();
    const auto basis = orthonormal_span(ns, a.tol());
    std::vector<VecD> projected;
    projected.reserve(ns.size());
    for (const auto& n : ns) {
        VecD p(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) p[k] = dot(n, basis[k]);
        projected.push_back(p);
    }
    return make_arrangement(basis.size(), projected, a.tol());
}

std::vector<RankTwoSubarrangement> rank_two_subarrangements(const Arrangement& a) {
    if (a.dim() < 2) throw PreconditionError("rank-two subarrangements need dimension >= 2");
    const Tolerance& tol = a.tol();
    const std::size_t n = a.size();
    std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
    std::vector<RankTwoSubarrangement> out;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (covered[i][j]) continue;
            const VecD& ni = a[i].normal();
            const VecD p1 = ni;
            const VecD p2 = (a[j].normal() - dot(a[j].normal(), p1) * p1).normalized(tol);
            const VecD plane[2] = {p1, p2};

            RankTwoSubarrangement s;
            s.basis = orthogonal_complement(plane, a.dim(), tol);
            for (std::size_t k = 0; k < n; ++k) {
                const VecD& nk = a[k].normal();
                const double c1 = dot(nk, p1);
                const double c2 = dot(nk, p2);
                const VecD residual = nk - c1 * p1 - c2 * p2;
                if (residual.norm() > tol.abs_eps()) continue;
                s.members.push_back(k);
                s.pencil_angles.push_back(wrap_pi(std::atan2(c2, c1)));
            }
            for (std::size_t x : s.members)
                for (std::size_t y : s.members) covered[x][y] = true;
            std::sort(s.pencil_angles.begin(), s.pencil_angles.end());
            out.push_back(std::move(s));
        }
    }
    return out;
}

bool is_dihedral(std::span<const double> pencil_angles, const Tolerance& tol) {
    const std::size_t k = pencil_angles.size();
    if (k < 2) return true;
    std::vector<double> t(pencil_angles.begin(), pencil_angles.end());
    std::sort(t.begin(), t.end());
    const double target = kPi / static_cast<double>(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double gap = (i + 1 < k) ? t[i + 1] - t[i] : kPi - t[k - 1] + t[0];
        if (!tol.angle_near(gap, target)) return false;
    }
    return true;
}

bool is_dihedral(const RankTwoSubarrangement& s, const Tolerance& tol) {
    return is_dihedral(s.pencil_angles, tol);
}

bool is_coxeter_mirror_closure(const Arrangement& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            if (a.find(a[j].reflected_across(a[i], a.tol())) == Arrangement::npos) return false;
        }
    }
    return true;
}

bool is_coxeter_rank_two(const Arrangement& a) {
    if (a.size() < 2) return true;
    for (const auto& s : rank_two_subarrangements(a))
        if (!is_dihedral(s, a.tol())) return false;
    return true;
}

}  // namespace coxarr
