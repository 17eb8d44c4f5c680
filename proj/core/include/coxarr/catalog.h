#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxarr/arrangement.h"

namespace coxarr {

/// Ground truth recorded with a catalog entry. Tests re-derive all of it from
/// the arrangement; nothing here is trusted without a check.
struct ExpectedRecord {
    bool is_coxeter = false;
    std::optional<std::size_t> region_count;
    std::optional<std::vector<double>> angle_multiset;  // per face, ascending
    std::optional<double> face_area;                    // common face area
};

struct CatalogEntry {
    std::string name;
    Arrangement arrangement;
    ExpectedRecord expected;
};

/// Irreducible and reducible reflection arrangements of R^3: "A1xA1xA1",
/// "I2(m)xA1" for m >= 2, "A3", "B3", "H3".
CatalogEntry coxeter_3d(std::string_view name);

/// Negative controls: "skew_pencil", "stretched_B3", "quad_faces".
CatalogEntry non_examples(std::string_view name);

/// coxeter_3d or non_examples, whichever knows the name.
CatalogEntry catalog_entry(std::string_view name);

/// Every name accepted by coxeter_3d (with I2(m)xA1 for m = 2..6) followed by
/// every non-example.
std::vector<std::string> catalog_names();
std::vector<std::string> coxeter_names();
std::vector<std::string> non_example_names();

}  // namespace coxarr
