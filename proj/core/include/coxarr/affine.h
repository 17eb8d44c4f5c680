#pragma once

#include <string_view>
#include <vector>

#include "coxarr/congruence.h"
#include "coxarr/numeric.h"

namespace coxarr {

/// The three infinite line families with congruent regions that are linear
/// images of affine reflection arrangements:
///   ShearedA2t  - the equilateral triangle tiling (three line directions);
///   ShearedB2t  - x = k, y = k, x +- y = 2k;
///   ShearedGrid - x = k, y = k.
enum class AffineFamily { ShearedA2t, ShearedB2t, ShearedGrid };

AffineFamily parse_affine_family(std::string_view name);  // throws UnknownName
std::string_view family_name(AffineFamily f);

/// q = M p with M = [[a, b], [c, d]].
struct LinearMap2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static LinearMap2 identity() { return {}; }
    static LinearMap2 scale_x(double s) { return {s, 0.0, 0.0, 1.0}; }
    static LinearMap2 shear_x(double s) { return {1.0, s, 0.0, 1.0}; }  // x -> x + s y

    double det() const { return a * d - b * c; }
    VecD apply(const VecD& p) const { return {a * p[0] + b * p[1], c * p[0] + d * p[1]}; }
    VecD apply_transpose(const VecD& p) const { return {a * p[0] + c * p[1], b * p[0] + d * p[1]}; }
    VecD apply_inverse_transpose(const VecD& p) const;
};

struct Window {
    double xmin = -4.0, xmax = 4.0, ymin = -4.0, ymax = 4.0;

    static Window square(double half) { return {-half, half, -half, half}; }
};

/// The line {q : normal . q = offset}, normal unit with canonical sign
/// (offset flipped along with it).
class AffineLine {
public:
    AffineLine(const VecD& normal, double offset, const Tolerance& tol);

    const VecD& normal() const { return normal_; }
    double offset() const { return offset_; }
    double side(const VecD& q) const { return dot(normal_, q) - offset_; }

    /// Image under the reflection fixing `mirror`.
    AffineLine reflected_across(const AffineLine& mirror, const Tolerance& tol) const;
    bool same_as(const AffineLine& other, const Tolerance& tol) const;

private:
    VecD normal_;
    double offset_;
};

struct PlanarPolygon {
    std::vector<VecD> vertices;  // counter-clockwise
    std::vector<CornerStep> walk;  // angle at vertex i, length of edge i -> i+1

    std::size_t size() const { return vertices.size(); }
    double area() const;
};

struct PlanarCorner {
    std::size_t region;  // index into regions, or npos when the corner is not an interior region
    double angle;
};

struct PlanarVertex {
    VecD point;
    std::vector<PlanarCorner> corners;  // counter-clockwise
    bool interior = false;              // every corner is an interior region
};

/// The lines of one family that meet a window, together with the regions of
/// the infinite arrangement lying strictly inside it. The family itself is
/// kept intensionally (base line classes plus the linear map) so membership
/// questions are answered for the infinite arrangement.
class WindowedArrangement {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    AffineFamily family() const { return family_; }
    const LinearMap2& map() const { return map_; }
    const Window& window() const { return window_; }
    const std::vector<AffineLine>& lines() const { return lines_; }
    const std::vector<AffineLine>& extra_lines() const { return extra_; }
    const std::vector<PlanarPolygon>& regions() const { return regions_; }
    const std::vector<PlanarVertex>& vertices() const { return vertices_; }
    const Tolerance& tol() const { return tol_; }

    /// Membership in the infinite family (or among the extra lines).
    bool contains_line(const AffineLine& l) const;

private:
    friend WindowedArrangement build_windowed(AffineFamily, const LinearMap2&, const Window&,
                                              std::vector<AffineLine>, const Tolerance&);

    AffineFamily family_ = AffineFamily::ShearedGrid;
    LinearMap2 map_;
    Window window_;
    std::vector<AffineLine> lines_;
    std::vector<AffineLine> extra_;
    std::vector<PlanarPolygon> regions_;
    std::vector<PlanarVertex> vertices_;
    Tolerance tol_;
};

/// Image of a base family under `map`, restricted to `window`. Throws
/// DegenerateInput for a singular map and PreconditionError when fewer than
/// ten regions fit inside the window.
WindowedArrangement affine_family(AffineFamily family, const LinearMap2& map, const Window& window,
                                  const Tolerance& tol = {});

/// The same family with additional lines, regions recomputed.
WindowedArrangement with_extra_lines(const WindowedArrangement& w, std::vector<AffineLine> extra);

CongruenceSignature planar_signature(const PlanarPolygon& p, const Tolerance& tol);

/// All interior regions share one congruence signature.
bool windowed_regions_isometric(const WindowedArrangement& w, const Tolerance& tol);

/// Reflecting any window line across any other window line lands on a line
/// of the infinite family.
bool is_locally_reflection_closed(const WindowedArrangement& w, const Tolerance& tol);

/// Distinct angles of the first region, ascending.
std::vector<double> region_angle_labels(const WindowedArrangement& w, const Tolerance& tol);

/// Label cycles around every interior vertex; throws LabelingError if a
/// corner angle matches no label.
std::vector<std::vector<int>> interior_vertex_angle_cycles(const WindowedArrangement& w,
                                                           const Tolerance& tol);

}  // namespace coxarr
