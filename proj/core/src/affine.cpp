#include "coxarr/affine.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace coxarr {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

// Lines u . p = k * spacing, k in Z, in the coordinates before the map.
struct LineClass {
    VecD normal;
    double spacing;
};

std::vector<LineClass> base_classes(AffineFamily f) {
    switch (f) {
        case AffineFamily::ShearedA2t: {
            std::vector<LineClass> out;
            for (int j = 0; j < 3; ++j) {
                const double t = kPi / 2.0 + kTwoPi * j / 3.0;
                out.push_back({{std::cos(t), std::sin(t)}, std::sqrt(3.0) / 2.0});
            }
            return out;
        }
        case AffineFamily::ShearedB2t:
            return {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 2.0}, {{1, -1}, 2.0}};
        case AffineFamily::ShearedGrid:
            return {{{1, 0}, 1.0}, {{0, 1}, 1.0}};
    }
    return {};
}

double wrap_two_pi(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

std::vector<VecD> window_corners(const Window& w) {
    return {{w.xmin, w.ymin}, {w.xmax, w.ymin}, {w.xmax, w.ymax}, {w.xmin, w.ymax}};
}

bool inside(const Window& w, const VecD& p, double margin) {
    return p[0] >= w.xmin + margin && p[0] <= w.xmax - margin && p[1] >= w.ymin + margin &&
           p[1] <= w.ymax - margin;
}

struct HalfEdge {
    std::size_t origin;
    std::size_t target;
    VecD direction;
    double length;
};

std::vector<double> distinct_angles(const std::vector<CornerStep>& walk, const Tolerance& tol) {
    std::vector<double> a;
    for (const auto& s : walk) a.push_back(s.angle);
    std::sort(a.begin(), a.end());
    std::vector<double> out;
    for (double x : a)
        if (out.empty() || !tol.angle_near(x, out.back())) out.push_back(x);
    return out;
}

}  // namespace

AffineFamily parse_affine_family(std::string_view name) {
    if (name == "shearedA2t") return AffineFamily::ShearedA2t;
    if (name == "shearedB2t") return AffineFamily::ShearedB2t;
    if (name == "shearedGrid") return AffineFamily::ShearedGrid;
    throw UnknownName("unknown affine family '" + std::string(name) +
                      "' (expected shearedA2t, shearedB2t or shearedGrid)");
}

std::string_view family_name(AffineFamily f) {
    switch (f) {
        case AffineFamily::ShearedA2t: return "shearedA2t";
        case AffineFamily::ShearedB2t: return "shearedB2t";
        case AffineFamily::ShearedGrid: return "shearedGrid";
    }
    return "?";
}

VecD LinearMap2::apply_inverse_transpose(const VecD& p) const {
    const double k = 1.0 / det();
    return {k * (d * p[0] - c * p[1]), k * (-b * p[0] + a * p[1])};
}

AffineLine::AffineLine(const VecD& normal, double offset, const Tolerance& tol) {
    if (normal.dim() != 2) throw DimensionMismatch("affine lines live in the plane");
    const double len = normal.norm();
    if (len <= tol.abs_eps()) throw DegenerateInput("affine line with zero normal");
    normal_ = normal * (1.0 / len);
    offset_ = offset / len;
    const std::size_t lead = std::abs(normal_[0]) > tol.abs_eps() ? 0 : 1;
    if (normal_[lead] < 0.0) {
        normal_ *= -1.0;
        offset_ = -offset_;
    }
}

AffineLine AffineLine::reflected_across(const AffineLine& mirror, const Tolerance& tol) const {
    const VecD& m = mirror.normal();
    const double k = dot(normal_, m);
    return AffineLine(normal_ - 2.0 * k * m, offset_ - 2.0 * mirror.offset() * k, tol);
}

bool AffineLine::same_as(const AffineLine& other, const Tolerance& tol) const {
    if (line_angle(normal_, other.normal_, tol) > tol.angle_eps()) return false;
    const double other_offset = dot(normal_, other.normal_) < 0.0 ? -other.offset_ : other.offset_;
    return tol.near(offset_, other_offset);
}

double PlanarPolygon::area() const {
    double s = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const VecD& p = vertices[i];
        const VecD& q = vertices[(i + 1) % vertices.size()];
        s += p[0] * q[1] - p[1] * q[0];
    }
    return 0.5 * s;
}

bool WindowedArrangement::contains_line(const AffineLine& l) const {
    for (const auto& e : extra_)
        if (e.same_as(l, tol_)) return true;
    // Pull the line back through the map: n . (M p) = c  <=>  (M^T n) . p = c.
    const VecD m = map_.apply_transpose(l.normal());
    for (const auto& cls : base_classes(family_)) {
        const VecD& u = cls.normal;
        const double crs = m[0] * u[1] - m[1] * u[0];
        if (std::abs(crs) > tol_.angle_eps() * m.norm() * u.norm()) continue;
        const double lambda = dot(m, u) / dot(u, u);
        const double pre_offset = l.offset() / lambda;
        const double k = std::round(pre_offset / cls.spacing);
        if (std::abs(pre_offset - k * cls.spacing) <= tol_.abs_eps() * (1.0 + std::abs(pre_offset)))
            return true;
    }
    return false;
}

WindowedArrangement build_windowed(AffineFamily family, const LinearMap2& map, const Window& window,
                                   std::vector<AffineLine> extra, const Tolerance& tol) {
    if (std::abs(map.det()) <= tol.abs_eps()) throw DegenerateInput("affine family map is singular");
    if (!(window.xmax > window.xmin && window.ymax > window.ymin))
        throw PreconditionError("window must have positive extent");

    WindowedArrangement w;
    w.family_ = family;
    w.map_ = map;
    w.window_ = window;
    w.extra_ = std::move(extra);
    w.tol_ = tol;

    const auto corners = window_corners(window);
    for (const auto& cls : base_classes(family)) {
        const VecD m = map.apply_inverse_transpose(cls.normal);
        double lo = dot(m, corners[0]), hi = lo;
        for (const auto& q : corners) {
            lo = std::min(lo, dot(m, q));
            hi = std::max(hi, dot(m, q));
        }
        const long kmin = static_cast<long>(std::ceil(lo / cls.spacing - tol.abs_eps()));
        const long kmax = static_cast<long>(std::floor(hi / cls.spacing + tol.abs_eps()));
        for (long k = kmin; k <= kmax; ++k)
            w.lines_.emplace_back(m, static_cast<double>(k) * cls.spacing, tol);
    }
    for (const auto& e : w.extra_) w.lines_.push_back(e);
    const auto& lines = w.lines_;

    // Vertices: pairwise intersections inside the closed window, merged by
    // distance; the generating pairs record which lines pass through each.
    std::vector<VecD> points;
    std::vector<std::vector<std::size_t>> through;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const VecD& a = lines[i].normal();
            const VecD& b = lines[j].normal();
            const double det = a[0] * b[1] - a[1] * b[0];
            if (std::abs(det) <= tol.abs_eps()) continue;
            const VecD p{(lines[i].offset() * b[1] - lines[j].offset() * a[1]) / det,
                         (a[0] * lines[j].offset() - b[0] * lines[i].offset()) / det};
            if (!inside(window, p, -tol.abs_eps())) continue;
            std::size_t found = points.size();
            for (std::size_t k = 0; k < points.size(); ++k) {
                if ((points[k] - p).norm() <= tol.abs_eps()) {
                    found = k;
                    break;
                }
            }
            if (found == points.size()) {
                points.push_back(p);
                through.emplace_back();
            }
            for (std::size_t li : {i, j})
                if (std::find(through[found].begin(), through[found].end(), li) == through[found].end())
                    through[found].push_back(li);
        }
    }

    // Segments between consecutive vertices of each line.
    std::vector<HalfEdge> half;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const VecD dir{-lines[li].normal()[1], lines[li].normal()[0]};
        std::vector<std::pair<double, std::size_t>> on;
        for (std::size_t v = 0; v < points.size(); ++v)
            if (std::find(through[v].begin(), through[v].end(), li) != through[v].end())
                on.emplace_back(dot(points[v], dir), v);
        std::sort(on.begin(), on.end());
        for (std::size_t k = 0; k + 1 < on.size(); ++k) {
            const std::size_t p = on[k].second, q = on[k + 1].second;
            const double len = (points[q] - points[p]).norm();
            half.push_back({p, q, dir, len});
            half.push_back({q, p, -dir, len});
        }
    }

    std::vector<std::vector<std::size_t>> around(points.size());
    for (std::size_t h = 0; h < half.size(); ++h) around[half[h].origin].push_back(h);
    std::vector<std::size_t> position(half.size());
    std::vector<double> gap_after(half.size());
    for (auto& out : around) {
        if (out.empty()) continue;
        std::vector<std::pair<double, std::size_t>> by_angle;
        for (std::size_t h : out)
            by_angle.emplace_back(wrap_two_pi(std::atan2(half[h].direction[1], half[h].direction[0])), h);
        std::sort(by_angle.begin(), by_angle.end());
        for (std::size_t k = 0; k < by_angle.size(); ++k) {
            out[k] = by_angle[k].second;
            position[out[k]] = k;
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
            const double gap = by_angle[(k + 1) % out.size()].first - by_angle[k].first;
            gap_after[out[k]] = out.size() == 1 ? kTwoPi : wrap_two_pi(gap);
        }
    }
    auto next_of = [&](std::size_t h) {
        const std::size_t twin = h ^ 1U;
        const auto& out = around[half[twin].origin];
        return out[(position[twin] + out.size() - 1) % out.size()];
    };

    // Walk faces; keep those that are genuine regions of the infinite
    // arrangement lying strictly inside the window.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> face_of(half.size(), unset);
    std::vector<std::size_t> region_of_face;
    std::size_t faces = 0;
    for (std::size_t start = 0; start < half.size(); ++start) {
        if (face_of[start] != unset) continue;
        PlanarPolygon poly;
        bool ok = true;
        std::size_t h = start;
        do {
            face_of[h] = faces;
            poly.vertices.push_back(points[half[h].origin]);
            poly.walk.push_back({gap_after[h], half[h].length});
            if (!(gap_after[h] < kPi - tol.angle_eps())) ok = false;
            if (!inside(window, points[half[h].origin], tol.abs_eps())) ok = false;
            h = next_of(h);
        } while (h != start && poly.vertices.size() <= half.size());
        ok = ok && poly.size() >= 3 && poly.area() > 0.0;
        for (std::size_t li = 0; ok && li < lines.size(); ++li) {
            double lo = 0.0, hi = 0.0;
            for (const auto& p : poly.vertices) {
                lo = std::min(lo, lines[li].side(p));
                hi = std::max(hi, lines[li].side(p));
            }
            if (lo < -tol.abs_eps() && hi > tol.abs_eps()) ok = false;
        }
        region_of_face.push_back(ok ? w.regions_.size() : WindowedArrangement::npos);
        if (ok) w.regions_.push_back(std::move(poly));
        ++faces;
    }

    for (std::size_t v = 0; v < points.size(); ++v) {
        PlanarVertex pv{points[v], {}, !around[v].empty()};
        for (std::size_t h : around[v]) {
            const std::size_t r = region_of_face[face_of[h]];
            pv.corners.push_back({r, gap_after[h]});
            if (r == WindowedArrangement::npos) pv.interior = false;
        }
        w.vertices_.push_back(std::move(pv));
    }
    return w;
}

WindowedArrangement affine_family(AffineFamily family, const LinearMap2& map, const Window& window,
                                  const Tolerance& tol) {
    auto w = build_windowed(family, map, window, {}, tol);
    if (w.regions().size() < 10) {
        throw PreconditionError("window holds only " + std::to_string(w.regions().size()) +
                                " interior regions; at least 10 are required");
    }
    return w;
}

WindowedArrangement with_extra_lines(const WindowedArrangement& w, std::vector<AffineLine> extra) {
    auto all = w.extra_lines();
    all.insert(all.end(), extra.begin(), extra.end());
    return build_windowed(w.family(), w.map(), w.window(), std::move(all), w.tol());
}

CongruenceSignature planar_signature(const PlanarPolygon& p, const Tolerance& tol) {
    return CongruenceSignature(p.walk, StepTolerance::planar(tol));
}

bool windowed_regions_isometric(const WindowedArrangement& w, const Tolerance& tol) {
    const auto& regions = w.regions();
    if (regions.size() < 2) throw PreconditionError("need at least two interior regions");
    std::vector<CongruenceSignature> sigs;
    for (const auto& r : regions) sigs.push_back(planar_signature(r, tol));
    const auto st = StepTolerance::planar(tol);
    for (std::size_t i = 0; i < sigs.size(); ++i)
        for (std::size_t j = i + 1; j < sigs.size(); ++j)
            if (!sigs[i].equivalent(sigs[j], st)) return false;
    return true;
}

bool is_locally_reflection_closed(const WindowedArrangement& w, const Tolerance& tol) {
    const auto& lines = w.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (i == j) continue;
            if (!w.contains_line(lines[j].reflected_across(lines[i], tol))) return false;
        }
    }
    return true;
}

std::vector<double> region_angle_labels(const WindowedArrangement& w, const Tolerance& tol) {
    if (w.regions().empty()) return {};
    return distinct_angles(w.regions().front().walk, tol);
}

std::vector<std::vector<int>> interior_vertex_angle_cycles(const WindowedArrangement& w,
                                                           const Tolerance& tol) {
    const auto labels = region_angle_labels(w, tol);
    std::vector<std::vector<int>> out;
    for (const auto& v : w.vertices()) {
        if (!v.interior) continue;
        std::vector<int> cycle;
        for (const auto& c : v.corners) {
            auto it = std::find_if(labels.begin(), labels.end(),
                                   [&](double l) { return tol.angle_near(l, c.angle); });
            if (it == labels.end()) {
                std::ostringstream os;
                os << "corner angle " << c.angle << " at " << to_string(v.point) << " matches no region angle";
                throw LabelingError(os.str());
            }
            cycle.push_back(static_cast<int>(it - labels.begin()));
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace coxarr
