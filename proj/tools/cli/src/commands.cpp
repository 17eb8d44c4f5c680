#include "coxarr/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coxarr/catalog.h"
#include "coxarr/cli/arrangement_file.h"
#include "coxarr/regions.h"
#include "coxarr/sphere.h"

namespace coxarr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    os.precision(12);
    (os << ... << parts);
    return os.str();
}

struct Geometry {
    std::optional<bool> simplicial;
    std::optional<std::size_t> regions;
    std::optional<bool> isometric;
    std::vector<std::string> failures;
};

// Sectors of an essential line arrangement through the origin of R^2.
Geometry planar_pencil(const Arrangement& a) {
    Geometry g;
    const auto pencils = rank_two_subarrangements(a);
    if (pencils.size() != 1 || pencils.front().size() != a.size()) {
        g.failures.push_back("lines of a planar arrangement do not form one pencil");
        return g;
    }
    const auto& t = pencils.front().pencil_angles;
    const std::size_t k = t.size();
    bool equal_gaps = true;
    const double first_gap = k > 1 ? t[1] - t[0] : kPi;
    for (std::size_t i = 0; i < k; ++i) {
        const double gap = (i + 1 < k ? t[i + 1] : t[0] + kPi) - t[i];
        if (!a.tol().angle_near(gap, first_gap)) equal_gaps = false;
    }
    g.simplicial = true;
    g.regions = 2 * k;
    g.isometric = equal_gaps;
    const auto en = enumerate_regions(a);
    if (en.size() != 2 * k)
        g.failures.push_back(cat("sign-vector enumeration found ", en.size(), " regions, expected ", 2 * k));
    return g;
}

Geometry spherical(const Arrangement& a) {
    Geometry g;
    const SphericalComplex c = build_complex(a);
    const Tolerance& tol = a.tol();
    g.failures = complex_invariant_failures(c);
    g.regions = c.num_faces();
    g.simplicial = is_simplicial(c);
    g.isometric = all_regions_isometric(c, tol);

    const auto en = enumerate_regions(a);
    if (en.size() != c.num_faces())
        g.failures.push_back(
            cat("sign-vector enumeration found ", en.size(), " regions, complex has ", c.num_faces()));

    const std::size_t triangles = count_simplicial_regions(c);
    if (triangles < 2 * a.size())
        g.failures.push_back(cat("only ", triangles, " triangular regions, at least ", 2 * a.size(), " expected"));

    if (*g.isometric) {
        if (!*g.simplicial) g.failures.push_back("isometric regions but not simplicial");
        if (!check_all_vertices_uniform(c, tol))
            g.failures.push_back("isometric regions but some vertex has unequal angles");
    }
    if (*g.isometric && *g.simplicial) {
        const auto labels = angle_labels(c, tol);
        for (std::size_t v = 0; v < c.num_vertices(); ++v) {
            try {
                const auto cycle = vertex_angle_cycle(c, v, tol);
                if (!opposite_labels_match(cycle)) g.failures.push_back(cat("opposite angles differ at vertex ", v));
                if (labels.size() == 3 && !check_parity_lemma(cycle, 3))
                    g.failures.push_back(cat("parity rule fails at vertex ", v));
            } catch (const LabelingError& e) {
                g.failures.push_back(e.what());
            }
        }
    }
    return g;
}

Geometry high_dimensional(const Arrangement& a) {
    Geometry g;
    const auto en = enumerate_regions(a);
    g.regions = en.size();
    g.simplicial = std::all_of(en.facet_counts.begin(), en.facet_counts.end(),
                               [&](std::size_t f) { return f == a.dim(); });
    return g;
}

Geometry essential_geometry(const Arrangement& a) {
    switch (a.dim()) {
        case 1: return {true, 2, true, {}};
        case 2: return planar_pencil(a);
        case 3: return spherical(a);
        default: return high_dimensional(a);
    }
}

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
    if (!v) return "n/a";
    if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
    else return std::to_string(*v);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string angle_list(const std::vector<double>& angles) {
    std::string s = "{";
    for (std::size_t i = 0; i < angles.size(); ++i) s += (i ? ", " : "") + format_angle(angles[i]);
    return s + "}";
}

Tolerance apply_flags(const ArrangementFile& f, const CommonFlags& flags) {
    const Tolerance base = f.tolerance();
    return Tolerance(flags.eps.value_or(base.abs_eps()), flags.angle_eps.value_or(base.angle_eps()));
}

Arrangement load(const std::string& path, const CommonFlags& flags) {
    const ArrangementFile f = read_arrangement_file(path);
    return make_arrangement(f.dim, f.normals, apply_flags(f, flags));
}

}  // namespace

bool CheckReport::violates_theorem() const { return isometric.value_or(false) && !coxeter_mirror; }

CheckReport check_arrangement(const Arrangement& a) {
    CheckReport r;
    r.dim = a.dim();
    r.hyperplanes = a.size();
    r.essential = is_essential(a);
    r.coxeter_mirror = is_coxeter_mirror_closure(a);
    r.coxeter_rank_two = is_coxeter_rank_two(a);
    if (r.coxeter_mirror != r.coxeter_rank_two) {
        r.invariant_failures.push_back(cat("Coxeter tests disagree: mirror closure ", yes_no(r.coxeter_mirror),
                                           ", rank-two ", yes_no(r.coxeter_rank_two)));
    }

    Geometry g;
    if (a.empty()) {
        g = {false, 1, true, {}};
    } else if (r.essential) {
        g = essential_geometry(a);
    } else {
        // Regions are products of the quotient's regions with the common
        // intersection, so they are never pointed cones.
        const Arrangement q = pencil_quotient(a);
        g = essential_geometry(q);
        g.simplicial = false;
        if (is_coxeter_mirror_closure(q) != r.coxeter_mirror)
            g.failures.push_back("pencil quotient changes the Coxeter verdict");
    }
    r.simplicial = g.simplicial;
    r.regions = g.regions;
    r.isometric = g.isometric;
    r.invariant_failures.insert(r.invariant_failures.end(), g.failures.begin(), g.failures.end());
    return r;
}

void print_check_text(std::ostream& out, const CheckReport& r) {
    out << "dim: " << r.dim << '\n'
        << "hyperplanes: " << r.hyperplanes << '\n'
        << "essential: " << yes_no(r.essential) << '\n'
        << "simplicial: " << opt_text(r.simplicial) << '\n'
        << "regions: " << opt_text(r.regions) << '\n'
        << "isometric: " << opt_text(r.isometric) << '\n'
        << "coxeter_mirror: " << yes_no(r.coxeter_mirror) << '\n'
        << "coxeter_rank_two: " << yes_no(r.coxeter_rank_two) << '\n';
    if (r.invariant_failures.empty()) {
        out << "invariant_failures: none\n";
    } else {
        out << "invariant_failures: " << r.invariant_failures.size() << '\n';
        for (const auto& f : r.invariant_failures) out << "  - " << f << '\n';
    }
    if (r.violates_theorem())
        out << "THEOREM VIOLATION: isometric regions but not a Coxeter arrangement\n";
}

void print_check_json(std::ostream& out, const CheckReport& r) {
    ordered_json j;
    j["essential"] = r.essential;
    j["simplicial"] = opt_json(r.simplicial);
    j["regions"] = opt_json(r.regions);
    j["isometric"] = opt_json(r.isometric);
    j["coxeter_mirror"] = r.coxeter_mirror;
    j["coxeter_rank_two"] = r.coxeter_rank_two;
    j["invariant_failures"] = r.invariant_failures;
    out << j.dump(2) << '\n';
}

SphereReport sphere_report(const Arrangement& a) {
    if (a.dim() != 3) throw PreconditionError("sphere report needs an arrangement in R^3");
    if (!is_essential(a)) throw PreconditionError("sphere report needs an essential arrangement");
    const SphericalComplex c = build_complex(a);
    const Tolerance& tol = a.tol();
    const auto st = StepTolerance::spherical(tol);

    SphereReport r;
    r.vertices = c.num_vertices();
    r.arcs = c.num_arcs();
    r.faces = c.num_faces();
    const auto md = min_degree_vertex(c);
    r.min_degree_vertex = md.vertex;
    r.min_degree = md.degree;

    std::vector<CongruenceSignature> reps;
    for (const auto& f : c.faces) {
        r.area_sum += f.area;
        const auto sig = face_signature(f, tol);
        std::size_t k = 0;
        while (k < reps.size() && !reps[k].equivalent(sig, st)) ++k;
        if (k == reps.size()) {
            reps.push_back(sig);
            FaceType t;
            t.angles = sig.angles();
            for (const auto& s : sig.canonical()) t.edges.push_back(s.length);
            t.area = f.area;
            r.face_types.push_back(std::move(t));
        }
        ++r.face_types[k].count;
    }

    r.uniform_vertices = check_all_vertices_uniform(c, tol);
    r.parity = "n/a";
    if (r.face_types.size() == 1 && is_simplicial(c) && angle_labels(c, tol).size() == 3) {
        bool holds = true;
        try {
            for (std::size_t v = 0; v < c.num_vertices() && holds; ++v)
                holds = check_parity_lemma(vertex_angle_cycle(c, v, tol), 3);
        } catch (const LabelingError&) {
            holds = false;
        }
        r.parity = holds ? "holds" : "violated";
    }
    r.invariant_failures = complex_invariant_failures(c);
    return r;
}

void print_sphere_text(std::ostream& out, const SphereReport& r) {
    out << "V: " << r.vertices << '\n'
        << "E: " << r.arcs << '\n'
        << "F: " << r.faces << '\n'
        << "min_degree: " << r.min_degree << " (vertex " << r.min_degree_vertex << ")\n"
        << "face_types: " << r.face_types.size() << '\n';
    for (const auto& t : r.face_types) {
        out << "  - count " << t.count << ", angles " << angle_list(t.angles) << ", area "
            << format_real(t.area) << '\n';
    }
    out << "area_sum: " << format_real(r.area_sum) << " (4pi = " << format_real(4.0 * kPi) << ")\n"
        << "parity: " << r.parity << '\n'
        << "uniform_vertices: " << yes_no(r.uniform_vertices) << '\n';
    if (r.invariant_failures.empty()) {
        out << "invariant_failures: none\n";
    } else {
        out << "invariant_failures: " << r.invariant_failures.size() << '\n';
        for (const auto& f : r.invariant_failures) out << "  - " << f << '\n';
    }
}

void print_sphere_json(std::ostream& out, const SphereReport& r) {
    ordered_json j;
    j["vertices"] = r.vertices;
    j["arcs"] = r.arcs;
    j["faces"] = r.faces;
    j["min_degree"] = r.min_degree;
    j["min_degree_vertex"] = r.min_degree_vertex;
    j["face_types"] = ordered_json::array();
    for (const auto& t : r.face_types) {
        ordered_json ft;
        ft["count"] = t.count;
        ft["angles"] = t.angles;
        ft["edges"] = t.edges;
        ft["area"] = t.area;
        j["face_types"].push_back(std::move(ft));
    }
    j["area_sum"] = r.area_sum;
    j["parity"] = r.parity;
    j["uniform_vertices"] = r.uniform_vertices;
    j["invariant_failures"] = r.invariant_failures;
    out << j.dump(2) << '\n';
}

std::string format_angle(double x) {
    for (int q = 1; q <= 12; ++q) {
        const double p = std::round(x * q / kPi);
        if (p < 1.0 || std::abs(x - p * kPi / q) > 1e-9) continue;
        const long pi = static_cast<long>(p);
        std::string s = pi == 1 ? "pi" : std::to_string(pi) + "pi";
        return q == 1 ? s : s + "/" + std::to_string(q);
    }
    return format_real(x);
}

int cmd_check(const std::string& path, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    CheckReport r;
    try {
        r = check_arrangement(load(path, flags));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    if (flags.json) print_check_json(out, r);
    else print_check_text(out, r);
    if (r.violates_theorem())
        err << "error: theorem-violating candidate: isometric regions without a closed mirror system\n";
    return r.exit_code();
}

int cmd_sphere(const std::string& path, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    SphereReport r;
    try {
        r = sphere_report(load(path, flags));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    if (flags.json) print_sphere_json(out, r);
    else print_sphere_text(out, r);
    return kExitOk;
}

int cmd_catalog(const std::string& name, const std::optional<std::string>& output, std::ostream& out,
                std::ostream& err) {
    std::optional<CatalogEntry> entry;
    try {
        entry = catalog_entry(name);
    } catch (const UnknownName&) {
        err << "error: unknown catalog name '" << name << "'\nvalid names:";
        for (const auto& n : coxeter_names()) {
            if (n.rfind("I2(", 0) == 0) continue;
            err << ' ' << n;
        }
        err << " I2(m)xA1 (m >= 2)";
        for (const auto& n : non_example_names()) err << ' ' << n;
        err << '\n';
        return kExitInputError;
    }
    const std::string text = format_arrangement_file(to_file(entry->arrangement));
    if (!output) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(*output, std::ios::binary);
    if (!(f << text)) {
        err << "error: cannot write '" << *output << "'\n";
        return kExitInputError;
    }
    return kExitOk;
}

int cmd_affine(const AffineOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const AffineFamily family = parse_affine_family(opts.family);
        if (!(opts.half_width > 0.0)) throw PreconditionError("half-width must be positive");
        const Tolerance tol;
        const auto w = affine_family(family, opts.map, Window::square(opts.half_width), tol);
        const bool isometric = windowed_regions_isometric(w, tol);
        const bool closed = is_locally_reflection_closed(w, tol);
        const auto labels = region_angle_labels(w, tol);
        // Corner labels only make sense when every region has the same angles.
        const auto cycles = isometric ? interior_vertex_angle_cycles(w, tol) : std::vector<std::vector<int>>{};
        std::string parity = "n/a";
        if (isometric && labels.size() == 3) {
            const bool holds = std::all_of(cycles.begin(), cycles.end(),
                                           [](const std::vector<int>& c) { return check_parity_lemma(c, 3); });
            parity = holds ? "holds" : "violated";
        }
        const auto& m = opts.map;
        if (opts.json) {
            ordered_json j;
            j["family"] = std::string(family_name(family));
            j["map"] = {m.a, m.b, m.c, m.d};
            j["lines"] = w.lines().size();
            j["regions"] = w.regions().size();
            j["interior_vertices"] = std::count_if(w.vertices().begin(), w.vertices().end(),
                                                   [](const PlanarVertex& v) { return v.interior; });
            j["isometric"] = isometric;
            j["reflection_closed"] = closed;
            j["angles"] = labels;
            j["parity"] = parity;
            out << j.dump(2) << '\n';
        } else {
            out << "family: " << family_name(family) << '\n'
                << "map: [[" << format_real(m.a) << ", " << format_real(m.b) << "], [" << format_real(m.c)
                << ", " << format_real(m.d) << "]]\n"
                << "lines: " << w.lines().size() << '\n'
                << "regions: " << w.regions().size() << '\n'
                << "interior_vertices: "
                << std::count_if(w.vertices().begin(), w.vertices().end(),
                                 [](const PlanarVertex& v) { return v.interior; })
                << '\n'
                << "isometric: " << yes_no(isometric) << '\n'
                << "reflection_closed: " << yes_no(closed) << '\n'
                << "angles: " << angle_list(labels) << '\n'
                << "parity: " << parity << '\n';
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace coxarr::cli
