#include "coxarr/sphere.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace coxarr {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap_two_pi(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

// Area of the spherical triangle abc (unit vectors), Van Oosterom-Strackee.
double triangle_area(const VecD& a, const VecD& b, const VecD& c) {
    const double triple = std::abs(dot(a, cross(b, c)));
    const double denom = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    return 2.0 * std::atan2(triple, denom);
}

struct HalfEdge {
    std::size_t origin;
    std::size_t arc;
    VecD tangent;
};

}  // namespace

double SphericalPolygon::angular_excess() const {
    double s = 0.0;
    for (const auto& b : boundary) s += b.angle;
    return s - static_cast<double>(boundary.size() - 2) * kPi;
}

std::vector<CornerStep> SphericalPolygon::walk() const {
    std::vector<CornerStep> w;
    w.reserve(boundary.size());
    for (const auto& b : boundary) w.push_back({b.angle, b.edge_length});
    return w;
}

std::size_t SphericalComplex::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(
        arcs.begin(), arcs.end(), [v](const Arc& a) { return a.from == v || a.to == v; }));
}

SphericalComplex build_complex(const Arrangement& a) {
    if (a.dim() != 3) throw PreconditionError("build_complex requires a 3-dimensional arrangement");
    if (a.size() < 3) throw PreconditionError("build_complex requires at least three hyperplanes");
    if (!is_essential(a)) throw PreconditionError("build_complex requires an essential arrangement");

    const Tolerance& tol = a.tol();
    SphericalComplex c;
    c.tol = tol;
    c.circles = a.normals();
    const std::size_t n = c.circles.size();

    // Vertices: +-(n_i x n_j), merged by angular distance. The generating
    // pairs decide which circles pass through a merged vertex.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const VecD v = cross(c.circles[i], c.circles[j]).normalized(tol);
            for (const VecD& p : {v, -v}) {
                std::size_t found = c.vertices.size();
                for (std::size_t k = 0; k < c.vertices.size(); ++k) {
                    if (angle_between(c.vertices[k], p, tol) <= tol.angle_eps()) {
                        found = k;
                        break;
                    }
                }
                if (found == c.vertices.size()) {
                    c.vertices.push_back(p);
                    c.vertex_circles.emplace_back();
                }
                auto& vc = c.vertex_circles[found];
                for (std::size_t ci : {i, j})
                    if (std::find(vc.begin(), vc.end(), ci) == vc.end()) vc.push_back(ci);
            }
        }
    }
    for (auto& vc : c.vertex_circles) std::sort(vc.begin(), vc.end());

    // Arcs and half-edges. Half-edge 2a runs from -> to along arc a, 2a + 1 back.
    std::vector<HalfEdge> half;
    for (std::size_t ci = 0; ci < n; ++ci) {
        const VecD& normal = c.circles[ci];
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < c.vertices.size(); ++v) {
            const auto& vc = c.vertex_circles[v];
            if (std::binary_search(vc.begin(), vc.end(), ci)) on.push_back(v);
        }
        const VecD u = c.vertices[on.front()];
        const VecD w = cross(normal, u);
        std::vector<std::pair<double, std::size_t>> param;
        for (std::size_t v : on) {
            const VecD& p = c.vertices[v];
            param.emplace_back(wrap_two_pi(std::atan2(dot(p, w), dot(p, u))), v);
        }
        std::sort(param.begin(), param.end());
        for (std::size_t k = 0; k < param.size(); ++k) {
            const std::size_t from = param[k].second;
            const std::size_t to = param[(k + 1) % param.size()].second;
            const std::size_t arc = c.arcs.size();
            c.arcs.push_back({ci, from, to, angle_between(c.vertices[from], c.vertices[to], tol)});
            const VecD t_from = cross(normal, c.vertices[from]).normalized(tol);
            const VecD t_to = cross(normal, c.vertices[to]).normalized(tol);
            half.push_back({from, arc, t_from});
            half.push_back({to, arc, -t_to});
        }
    }

    // Counter-clockwise order of outgoing half-edges around each vertex.
    const std::size_t nv = c.vertices.size();
    std::vector<std::vector<std::size_t>> around(nv);
    for (std::size_t h = 0; h < half.size(); ++h) around[half[h].origin].push_back(h);
    std::vector<std::size_t> position(half.size());
    std::vector<double> gap_after(half.size());  // corner angle ccw of each half-edge
    for (std::size_t v = 0; v < nv; ++v) {
        auto& out = around[v];
        const VecD e1 = half[out.front()].tangent;
        const VecD e2 = cross(c.vertices[v], e1);
        std::vector<std::pair<double, std::size_t>> by_angle;
        for (std::size_t h : out) {
            const VecD& t = half[h].tangent;
            by_angle.emplace_back(wrap_two_pi(std::atan2(dot(t, e2), dot(t, e1))), h);
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (std::size_t k = 0; k < by_angle.size(); ++k) {
            out[k] = by_angle[k].second;
            position[out[k]] = k;
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
            const double next = by_angle[(k + 1) % out.size()].first;
            gap_after[out[k]] = wrap_two_pi(next - by_angle[k].first);
            if (out.size() == 1) gap_after[out[k]] = kTwoPi;
        }
    }

    // Faces lie to the left of their half-edges. After arriving at a vertex,
    // continue along the outgoing half-edge immediately clockwise of the
    // reverse of the one just traversed.
    auto next_of = [&](std::size_t h) {
        const std::size_t twin = h ^ 1U;
        const auto& out = around[half[twin].origin];
        const std::size_t p = position[twin];
        return out[(p + out.size() - 1) % out.size()];
    };
    std::vector<std::size_t> face_of(half.size(), static_cast<std::size_t>(-1));
    for (std::size_t start = 0; start < half.size(); ++start) {
        if (face_of[start] != static_cast<std::size_t>(-1)) continue;
        const std::size_t fi = c.faces.size();
        SphericalPolygon poly;
        std::size_t h = start;
        do {
            face_of[h] = fi;
            poly.boundary.push_back({half[h].origin, gap_after[h], c.arcs[half[h].arc].length});
            h = next_of(h);
        } while (h != start && poly.boundary.size() <= half.size());
        const VecD& p0 = c.vertices[poly.boundary[0].vertex];
        for (std::size_t k = 1; k + 1 < poly.size(); ++k)
            poly.area += triangle_area(p0, c.vertices[poly.boundary[k].vertex],
                                       c.vertices[poly.boundary[k + 1].vertex]);
        c.faces.push_back(std::move(poly));
    }

    c.incidence.resize(nv);
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t h : around[v])
            c.incidence[v].push_back({half[h].arc, face_of[h], gap_after[h]});
    return c;
}

CongruenceSignature face_signature(const SphericalPolygon& f, const Tolerance& tol) {
    const auto w = f.walk();
    return CongruenceSignature(w, StepTolerance::spherical(tol));
}

bool all_regions_isometric(const SphericalComplex& c, const Tolerance& tol) {
    std::vector<CongruenceSignature> sigs;
    sigs.reserve(c.faces.size());
    for (const auto& f : c.faces) sigs.push_back(face_signature(f, tol));
    const auto st = StepTolerance::spherical(tol);
    for (std::size_t i = 0; i < sigs.size(); ++i)
        for (std::size_t j = i + 1; j < sigs.size(); ++j)
            if (!sigs[i].equivalent(sigs[j], st)) return false;
    return true;
}

bool is_simplicial(const SphericalComplex& c) {
    return std::all_of(c.faces.begin(), c.faces.end(),
                       [](const SphericalPolygon& f) { return f.is_triangle(); });
}

std::size_t count_simplicial_regions(const SphericalComplex& c) {
    return static_cast<std::size_t>(std::count_if(
        c.faces.begin(), c.faces.end(), [](const SphericalPolygon& f) { return f.is_triangle(); }));
}

VertexDegree min_degree_vertex(const SphericalComplex& c) {
    if (c.vertices.empty()) throw PreconditionError("complex has no vertices");
    VertexDegree best{0, c.incidence[0].size()};
    for (std::size_t v = 1; v < c.num_vertices(); ++v)
        if (c.incidence[v].size() < best.degree) best = {v, c.incidence[v].size()};
    return best;
}

std::vector<double> angle_labels(const SphericalComplex& c, const Tolerance& tol) {
    if (c.faces.empty()) return {};
    std::vector<double> angles;
    for (const auto& b : c.faces.front().boundary) angles.push_back(b.angle);
    std::sort(angles.begin(), angles.end());
    std::vector<double> distinct;
    for (double a : angles)
        if (distinct.empty() || !tol.angle_near(a, distinct.back())) distinct.push_back(a);
    return distinct;
}

std::vector<int> vertex_angle_cycle(const SphericalComplex& c, std::size_t v, const Tolerance& tol) {
    if (!is_simplicial(c)) throw PreconditionError("vertex_angle_cycle requires a triangulation");
    if (v >= c.num_vertices()) throw PreconditionError("vertex index out of range");
    const auto labels = angle_labels(c, tol);
    std::vector<int> cycle;
    for (const auto& inc : c.incidence[v]) {
        int label = -1;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (tol.angle_near(inc.angle, labels[k])) {
                label = static_cast<int>(k);
                break;
            }
        }
        if (label < 0) {
            std::ostringstream os;
            os << "angle " << inc.angle << " at vertex " << v << " matches no face angle label";
            throw LabelingError(os.str());
        }
        cycle.push_back(label);
    }
    return cycle;
}

bool opposite_labels_match(std::span<const int> cycle) {
    const std::size_t m = cycle.size();
    if (m % 2 != 0) return false;
    for (std::size_t i = 0; i < m / 2; ++i)
        if (cycle[i] != cycle[i + m / 2]) return false;
    return true;
}

bool check_parity_lemma(std::span<const int> cycle, int distinct_angles) {
    if (distinct_angles != 3)
        throw PreconditionError("parity rule applies to triangles with three distinct angles");
    const std::size_t m = cycle.size();
    if (m % 2 != 0) throw PreconditionError("angle cycle length must be even");
    if (m == 0) return true;

    // Start at the beginning of a maximal run.
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (cycle[i] != cycle[(i + m - 1) % m]) {
            start = i;
            break;
        }
    }
    if (start == m) return true;  // a single run, nothing borders it

    std::size_t i = 0;
    while (i < m) {
        const std::size_t run_begin = (start + i) % m;
        std::size_t len = 1;
        while (i + len < m && cycle[(start + i + len) % m] == cycle[run_begin]) ++len;
        const int before = cycle[(run_begin + m - 1) % m];
        const int after = cycle[(run_begin + len) % m];
        const bool even = len % 2 == 0;
        if (even != (before == after)) return false;
        i += len;
    }
    return true;
}

bool check_all_vertices_uniform(const SphericalComplex& c, const Tolerance& tol) {
    for (const auto& inc : c.incidence) {
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (!tol.angle_near(inc[i].angle, inc[j].angle)) return false;
    }
    return true;
}

std::array<double, 3> law_of_sines_ratios(const SphericalPolygon& t) {
    if (!t.is_triangle()) throw PreconditionError("law of sines needs a triangle");
    std::array<double, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) {
        // The side opposite corner i joins the other two corners.
        const double opposite = t.boundary[(i + 1) % 3].edge_length;
        r[i] = std::sin(opposite) / std::sin(t.boundary[i].angle);
    }
    return r;
}

std::vector<std::string> complex_invariant_failures(const SphericalComplex& c) {
    std::vector<std::string> fail;
    const Tolerance& tol = c.tol;
    auto report = [&](auto&&... parts) {
        std::ostringstream os;
        os.precision(12);
        (os << ... << parts);
        fail.push_back(os.str());
    };

    const long euler = static_cast<long>(c.num_vertices()) - static_cast<long>(c.num_arcs()) +
                       static_cast<long>(c.num_faces());
    if (euler != 2) report("euler characteristic V - E + F = ", euler, ", expected 2");

    std::vector<std::size_t> arc_degree(c.num_vertices(), 0);
    for (const auto& a : c.arcs) {
        ++arc_degree[a.from];
        ++arc_degree[a.to];
        if (!(a.length > 0.0 && a.length < kPi)) report("arc length ", a.length, " outside (0, pi)");
    }
    for (std::size_t v = 0; v < c.num_vertices(); ++v) {
        const auto& vc = c.vertex_circles[v];
        if (vc.size() < 2) report("vertex ", v, " lies on fewer than two circles");
        for (std::size_t ci : vc)
            if (!tol.near_zero(dot(c.vertices[v], c.circles[ci])))
                report("vertex ", v, " is off circle ", ci);
        if (arc_degree[v] % 2 != 0) report("vertex ", v, " has odd degree ", arc_degree[v]);
        if (arc_degree[v] != c.angle_count(v))
            report("vertex ", v, " degree ", arc_degree[v], " differs from angle count ", c.angle_count(v));
        double sum = 0.0;
        for (const auto& inc : c.incidence[v]) sum += inc.angle;
        if (std::abs(sum - 2.0 * kPi) > tol.angle_eps() * static_cast<double>(c.angle_count(v)))
            report("angles around vertex ", v, " sum to ", sum);
    }

    double total_area = 0.0;
    bool triangulation = true;
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
        const auto& face = c.faces[f];
        total_area += face.area;
        for (const auto& b : face.boundary) {
            if (!(b.angle > 0.0 && b.angle < kPi)) report("face ", f, " angle ", b.angle, " outside (0, pi)");
            if (!(b.edge_length > 0.0 && b.edge_length < kPi))
                report("face ", f, " edge ", b.edge_length, " outside (0, pi)");
        }
        if (!face.is_triangle()) {
            triangulation = false;
            if (std::abs(face.area - face.angular_excess()) > kExcessTolerance * face.size())
                report("face ", f, " area ", face.area, " differs from excess ", face.angular_excess());
            continue;
        }
        const double excess = face.angular_excess();
        if (!(excess > 0.0)) report("face ", f, " angle sum does not exceed pi");
        if (std::abs(face.area - excess) > kExcessTolerance)
            report("face ", f, " area ", face.area, " differs from excess ", excess);
        const auto r = law_of_sines_ratios(face);
        const double spread = *std::max_element(r.begin(), r.end()) - *std::min_element(r.begin(), r.end());
        if (spread > kLawOfSinesTolerance) report("face ", f, " law-of-sines ratios spread ", spread);
    }
    if (std::abs(total_area - 4.0 * kPi) > kAreaSumTolerance) report("face areas sum to ", total_area, ", expected 4pi");

    if (c.num_vertices() > 0) {
        const auto md = min_degree_vertex(c);
        if (md.degree > 5) report("minimum vertex degree ", md.degree, " exceeds 5");
        if (triangulation && md.degree != 4) report("triangulation has minimum vertex degree ", md.degree);
    }

    // Antipodal symmetry.
    std::vector<std::size_t> anti(c.num_vertices(), static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < c.num_vertices(); ++v)
        for (std::size_t w = 0; w < c.num_vertices(); ++w)
            if (angle_between(c.vertices[v], -c.vertices[w], tol) <= tol.angle_eps()) anti[v] = w;
    if (std::find(anti.begin(), anti.end(), static_cast<std::size_t>(-1)) != anti.end()) {
        report("antipodal map is not defined on every vertex");
        return fail;
    }
    for (const auto& a : c.arcs) {
        const bool ok = std::any_of(c.arcs.begin(), c.arcs.end(), [&](const Arc& b) {
            return b.circle == a.circle && ((b.from == anti[a.from] && b.to == anti[a.to]) ||
                                            (b.from == anti[a.to] && b.to == anti[a.from]));
        });
        if (!ok) report("arc on circle ", a.circle, " has no antipodal image");
    }
    auto vertex_set = [](const SphericalPolygon& f, const std::vector<std::size_t>* map) {
        std::vector<std::size_t> s;
        for (const auto& b : f.boundary) s.push_back(map ? (*map)[b.vertex] : b.vertex);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<std::size_t>> face_sets;
    for (const auto& f : c.faces) face_sets.push_back(vertex_set(f, nullptr));
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
        const auto image = vertex_set(c.faces[f], &anti);
        if (std::find(face_sets.begin(), face_sets.end(), image) == face_sets.end())
            report("face ", f, " has no antipodal image");
    }
    return fail;
}

}  // namespace coxarr
