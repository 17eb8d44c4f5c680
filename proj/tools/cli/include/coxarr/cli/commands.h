#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coxarr/affine.h"
#include "coxarr/arrangement.h"

namespace coxarr::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitTheoremViolation = 2,
};

struct CheckReport {
    std::size_t dim = 0;
    std::size_t hyperplanes = 0;
    bool essential = false;
    std::optional<bool> simplicial;
    std::optional<std::size_t> regions;
    std::optional<bool> isometric;
    bool coxeter_mirror = false;
    bool coxeter_rank_two = false;
    std::vector<std::string> invariant_failures;

    /// Isometric regions without a closed mirror system in dimension 3.
    bool violates_theorem() const;
    int exit_code() const { return violates_theorem() ? kExitTheoremViolation : kExitOk; }
};

/// Full pipeline: essentiality, pencil quotient when not essential, the
/// sphere complex in dimension 3, both Coxeter tests and the invariant
/// suite. Fields that need the sphere are n/a outside dimension 3 unless
/// they follow from a lower-dimensional quotient.
CheckReport check_arrangement(const Arrangement& a);

void print_check_text(std::ostream& out, const CheckReport& r);
void print_check_json(std::ostream& out, const CheckReport& r);

struct FaceType {
    std::vector<double> angles;  // ascending
    std::vector<double> edges;   // canonical walk order
    double area = 0.0;
    std::size_t count = 0;
};

struct SphereReport {
    std::size_t vertices = 0;
    std::size_t arcs = 0;
    std::size_t faces = 0;
    std::size_t min_degree_vertex = 0;
    std::size_t min_degree = 0;
    std::vector<FaceType> face_types;  // first-seen order
    double area_sum = 0.0;
    std::string parity;                // "holds", "violated" or "n/a"
    bool uniform_vertices = false;
    std::vector<std::string> invariant_failures;
};

/// Requires dim 3 and an essential arrangement (PreconditionError otherwise).
SphereReport sphere_report(const Arrangement& a);

void print_sphere_text(std::ostream& out, const SphereReport& r);
void print_sphere_json(std::ostream& out, const SphereReport& r);

/// Angle as a small rational multiple of pi ("pi/3", "2pi/5") when it is one
/// within 1e-9, otherwise a plain decimal.
std::string format_angle(double radians);

struct CommonFlags {
    std::optional<double> eps;
    std::optional<double> angle_eps;
    bool json = false;
};

// Subcommand drivers: write the report to `out`, diagnostics to `err`, and
// return the process exit code.
int cmd_check(const std::string& path, const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_sphere(const std::string& path, const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_catalog(const std::string& name, const std::optional<std::string>& output, std::ostream& out,
                std::ostream& err);

struct AffineOptions {
    std::string family;
    LinearMap2 map;
    double half_width = 4.0;
    bool json = false;
};

int cmd_affine(const AffineOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace coxarr::cli
