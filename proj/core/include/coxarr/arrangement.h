#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coxarr/numeric.h"

namespace coxarr {

/// A linear hyperplane through the origin, stored by its unit normal. The
/// normal's sign is canonical: the first coordinate with magnitude above
/// abs_eps is positive, so Hyperplane(v) and Hyperplane(-v) are identical.
class Hyperplane {
public:
    Hyperplane(const VecD& normal, const Tolerance& tol);

    const VecD& normal() const { return normal_; }
    std::size_t dim() const { return normal_.dim(); }

    /// Image under the orthogonal reflection fixing `mirror`.
    Hyperplane reflected_across(const Hyperplane& mirror, const Tolerance& tol) const;

    bool same_as(const Hyperplane& other, const Tolerance& tol) const;
    bool contains(const VecD& v, const Tolerance& tol) const;

private:
    VecD normal_;
};

/// Deduplicated finite set of hyperplanes in R^dim.
class Arrangement {
public:
    Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, const Tolerance& tol);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return hyperplanes_.size(); }
    bool empty() const { return hyperplanes_.empty(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
    const Tolerance& tol() const { return tol_; }

    std::vector<VecD> normals() const;

    /// Index of a member equal to h within tolerance, or npos.
    std::size_t find(const Hyperplane& h) const;

    /// Same hyperplanes with every normal mapped through an orthogonal matrix.
    Arrangement transformed(const Matrix& orthogonal) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t dim_;
    std::vector<Hyperplane> hyperplanes_;
    Tolerance tol_;
};

/// Normalizes, sign-canonicalizes and deduplicates raw normals, keeping the
/// first occurrence of each hyperplane in input order.
Arrangement make_arrangement(std::size_t dim, std::span<const VecD> raw_normals,
                             const Tolerance& tol = {});

bool is_essential(const Arrangement& a);

/// Quotient of a non-essential arrangement by the common intersection of its
/// hyperplanes. Normals are re-expressed in an orthonormal basis of their span
/// (Gram-Schmidt in hyperplane order), so the result is essential in
/// dimension rank(normals).
Arrangement pencil_quotient(const Arrangement& a);

/// All hyperplanes containing one codimension-2 subspace U.
struct RankTwoSubarrangement {
    std::vector<VecD> basis;             // orthonormal basis of U (dim - 2 vectors)
    std::vector<std::size_t> members;    // indices into the parent arrangement, ascending
    std::vector<double> pencil_angles;   // sorted, in [0, pi)

    std::size_t size() const { return members.size(); }
};

/// One entry per distinct codimension-2 intersection H_i ∩ H_j. Pencil angles
/// are the angles of the member traces in the 2-plane orthogonal to U,
/// measured from the trace of the lowest-indexed member, so they start at 0.
std::vector<RankTwoSubarrangement> rank_two_subarrangements(const Arrangement& a);

/// A pencil of k lines is a dihedral mirror system iff the cyclic gaps
/// between consecutive trace angles all equal pi/k.
bool is_dihedral(const RankTwoSubarrangement& s, const Tolerance& tol);
bool is_dihedral(std::span<const double> pencil_angles, const Tolerance& tol);

/// Closed-system-of-mirrors test: the reflection across any member maps
/// every member to a member.
bool is_coxeter_mirror_closure(const Arrangement& a);

/// Every rank-two subarrangement is dihedral.
bool is_coxeter_rank_two(const Arrangement& a);

}  // namespace coxarr
