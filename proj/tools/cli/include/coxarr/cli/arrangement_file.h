#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coxarr/arrangement.h"

namespace coxarr::cli {

struct ParseError : Error {
    using Error::Error;
};

/// Line-oriented arrangement file:
///
///     # comment
///     dim 3
///     eps 1e-9          (optional)
///     angle_eps 1e-9    (optional)
///     1 0 0
///     0 1 0
///
/// The first non-comment line declares the dimension; every other line is a
/// tolerance override or one normal vector of exactly `dim` decimals.
struct ArrangementFile {
    std::size_t dim = 0;
    std::vector<VecD> normals;
    std::optional<double> abs_eps;
    std::optional<double> angle_eps;

    /// Default tolerance with this file's overrides applied.
    Tolerance tolerance() const;
};

ArrangementFile parse_arrangement_file(std::istream& in);
ArrangementFile read_arrangement_file(const std::string& path);

/// Canonical form: no comments, overrides first, shortest round-trip decimals.
void write_arrangement_file(std::ostream& out, const ArrangementFile& f);
std::string format_arrangement_file(const ArrangementFile& f);

ArrangementFile to_file(const Arrangement& a);

}  // namespace coxarr::cli
