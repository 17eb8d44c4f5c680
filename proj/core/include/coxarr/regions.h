#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "coxarr/arrangement.h"

namespace coxarr {

/// Side of each hyperplane (+1 / -1) for the points of one region.
using SignVector = std::vector<signed char>;

/// Regions of an essential arrangement in any dimension, discovered through
/// their extreme rays: for every ray cut out by dim - 1 hyperplanes, one point
/// is placed just off the ray in each local orthant and its sign vector is
/// recorded. Every pointed cone has an extreme ray, so every region is seen.
struct RegionEnumeration {
    std::vector<SignVector> regions;       // sorted
    std::vector<std::size_t> facet_counts; // per region

    std::size_t size() const { return regions.size(); }
    /// Index of the region with this sign vector, or npos.
    std::size_t find(const SignVector& s) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

RegionEnumeration enumerate_regions(const Arrangement& a);

/// Sign vector of a point; nullopt if it lies within abs_eps of a hyperplane.
std::optional<SignVector> sign_vector_of(const Arrangement& a, const VecD& p);

}  // namespace coxarr
