#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coxarr/arrangement.h"
#include "coxarr/congruence.h"
#include "coxarr/numeric.h"

namespace coxarr {

// Thresholds for the metric invariants of a built complex.
inline constexpr double kAreaSumTolerance = 1e-7;
inline constexpr double kExcessTolerance = 1e-9;
inline constexpr double kLawOfSinesTolerance = 1e-7;

/// A great-circle arc between two consecutive vertices of one circle,
/// oriented counter-clockwise about the circle's normal.
struct Arc {
    std::size_t circle = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    double length = 0.0;
};

struct BoundaryStep {
    std::size_t vertex = 0;
    double angle = 0.0;        // interior angle at `vertex`
    double edge_length = 0.0;  // edge from `vertex` to the next boundary vertex
};

/// A face of the complex. The boundary runs counter-clockwise as seen from
/// outside the sphere.
struct SphericalPolygon {
    std::vector<BoundaryStep> boundary;
    double area = 0.0;  // fan decomposition over vertex positions

    std::size_t size() const { return boundary.size(); }
    bool is_triangle() const { return boundary.size() == 3; }
    /// Sum of interior angles minus (k - 2) pi.
    double angular_excess() const;
    std::vector<CornerStep> walk() const;
};

/// One corner around a vertex: the arc leaving the vertex and the face that
/// lies counter-clockwise of it.
struct VertexIncidence {
    std::size_t arc = 0;
    std::size_t face = 0;
    double angle = 0.0;
};

struct SphericalComplex {
    std::vector<VecD> circles;                          // unit normals, one per hyperplane
    std::vector<VecD> vertices;
    std::vector<std::vector<std::size_t>> vertex_circles;
    std::vector<Arc> arcs;
    std::vector<SphericalPolygon> faces;
    std::vector<std::vector<VertexIncidence>> incidence;  // counter-clockwise per vertex
    Tolerance tol;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_arcs() const { return arcs.size(); }
    std::size_t num_faces() const { return faces.size(); }

    /// Number of arcs with an endpoint at v.
    std::size_t degree(std::size_t v) const;
    /// Number of face corners at v.
    std::size_t angle_count(std::size_t v) const { return incidence[v].size(); }
};

/// Decomposition of the unit sphere by the great circles of an essential
/// arrangement in R^3 with at least three hyperplanes.
SphericalComplex build_complex(const Arrangement& a);

CongruenceSignature face_signature(const SphericalPolygon& f, const Tolerance& tol);

/// True iff every pair of faces has equivalent congruence signatures.
bool all_regions_isometric(const SphericalComplex& c, const Tolerance& tol);

bool is_simplicial(const SphericalComplex& c);

std::size_t count_simplicial_regions(const SphericalComplex& c);

struct VertexDegree {
    std::size_t vertex = 0;
    std::size_t degree = 0;
};
/// Lowest-indexed vertex of minimal degree.
VertexDegree min_degree_vertex(const SphericalComplex& c);

/// Distinct angle values of the first face, ascending. Label i in an angle
/// cycle refers to element i of this list.
std::vector<double> angle_labels(const SphericalComplex& c, const Tolerance& tol);

/// Labels of the face corners around v in counter-clockwise order. Requires
/// a triangulation; throws LabelingError if a corner angle matches no label.
std::vector<int> vertex_angle_cycle(const SphericalComplex& c, std::size_t v, const Tolerance& tol);

/// Labels at positions i and i + len/2 agree for every i.
bool opposite_labels_match(std::span<const int> cycle);

/// Run-parity rule around a vertex of a triangulation by congruent triangles
/// with three distinct angles: a maximal run of one label of even length is
/// bordered by equal labels, a run of odd length by different labels.
bool check_parity_lemma(std::span<const int> cycle, int distinct_angles);

/// True iff at every vertex all incident face angles agree within angle_eps.
bool check_all_vertices_uniform(const SphericalComplex& c, const Tolerance& tol);

/// sin(opposite side) / sin(angle) for the three corners of a triangle.
std::array<double, 3> law_of_sines_ratios(const SphericalPolygon& triangle);

/// Every structural and metric invariant of the complex that fails, as
/// human-readable messages. Empty when the complex is consistent.
std::vector<std::string> complex_invariant_failures(const SphericalComplex& c);

}  // namespace coxarr
