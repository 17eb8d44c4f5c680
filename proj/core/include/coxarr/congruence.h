#pragma once

#include <span>
#include <string>
#include <vector>

#include "coxarr/numeric.h"

namespace coxarr {

/// One step of a polygon boundary walk: the interior angle at a vertex and
/// the length of the edge leaving it in walk direction.
struct CornerStep {
    double angle = 0.0;
    double length = 0.0;
};

/// Tolerances for comparing corner steps: angles always in radians, lengths
/// in radians on the sphere and in plane units for planar polygons.
struct StepTolerance {
    double angle_eps;
    double length_eps;

    static StepTolerance spherical(const Tolerance& t) { return {t.angle_eps(), t.angle_eps()}; }
    static StepTolerance planar(const Tolerance& t) { return {t.angle_eps(), t.abs_eps()}; }
};

/// Canonical form of a polygon boundary under rotation of the starting
/// vertex and reversal of the walk. Two polygons related by an isometry
/// (including reflections) have equivalent signatures.
class CongruenceSignature {
public:
    CongruenceSignature() = default;
    CongruenceSignature(std::span<const CornerStep> walk, StepTolerance tol);

    const std::vector<CornerStep>& canonical() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }

    /// Sorted interior angles.
    std::vector<double> angles() const;

    /// Smallest max-norm distance between this boundary and any rotation or
    /// reversal of `other`; +infinity when the vertex counts differ.
    double distance(const CongruenceSignature& other) const;

    bool equivalent(const CongruenceSignature& other, StepTolerance tol) const;

    std::string to_string() const;

private:
    std::vector<CornerStep> canonical_;
};

/// All 2k rotations and reversals of a boundary walk. Reversal keeps each
/// angle at its vertex and pairs it with the edge that preceded it.
std::vector<std::vector<CornerStep>> boundary_variants(std::span<const CornerStep> walk);

}  // namespace coxarr
