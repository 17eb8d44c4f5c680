#include "coxarr/catalog.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace coxarr {

namespace {

constexpr double kPhi = std::numbers::phi;

std::vector<double> sorted3(double a, double b, double c) {
    std::vector<double> v{a, b, c};
    std::sort(v.begin(), v.end());
    return v;
}

CatalogEntry reflection_entry(std::string name, std::vector<VecD> normals, std::size_t regions,
                              std::vector<double> angles) {
    const double area = 4.0 * kPi / static_cast<double>(regions);
    return {std::move(name), make_arrangement(3, normals),
            ExpectedRecord{true, regions, std::move(angles), area}};
}

// "I2(m)xA1" -> m, or nullopt if the name has another shape.
std::optional<long> parse_dihedral_product(std::string_view name) {
    constexpr std::string_view prefix = "I2(";
    constexpr std::string_view suffix = ")xA1";
    if (name.size() <= prefix.size() + suffix.size() || !name.starts_with(prefix) || !name.ends_with(suffix))
        return std::nullopt;
    const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    long m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return m;
}

std::vector<VecD> b3_normals() {
    const double r = 1.0 / std::sqrt(2.0);
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {r, r, 0}, {r, -r, 0},
            {r, 0, r}, {r, 0, -r}, {0, r, r}, {0, r, -r}};
}

std::vector<VecD> h3_normals() {
    // Coordinate axes plus the even permutations of (phi, 1, 1/phi)/2 with
    // all sign patterns, one representative per +- pair.
    std::vector<VecD> out{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const double base[3] = {kPhi / 2.0, 0.5, 1.0 / (2.0 * kPhi)};
    for (int shift = 0; shift < 3; ++shift) {
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                VecD v(3);
                const double signs[3] = {1.0, double(s1), double(s2)};
                for (int k = 0; k < 3; ++k) v[(k + shift) % 3] = signs[k] * base[k];
                out.push_back(v);
            }
        }
    }
    return out;
}

}  // namespace

CatalogEntry coxeter_3d(std::string_view name) {
    if (name == "A1xA1xA1") {
        return reflection_entry("A1xA1xA1", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 8,
                                sorted3(kPi / 2, kPi / 2, kPi / 2));
    }
    if (name == "A3") {
        const double r = 1.0 / std::sqrt(2.0);
        return reflection_entry("A3", {{r, r, 0}, {r, -r, 0}, {r, 0, r}, {r, 0, -r}, {0, r, r}, {0, r, -r}},
                                24, sorted3(kPi / 2, kPi / 3, kPi / 3));
    }
    if (name == "B3") return reflection_entry("B3", b3_normals(), 48, sorted3(kPi / 2, kPi / 3, kPi / 4));
    if (name == "H3") return reflection_entry("H3", h3_normals(), 120, sorted3(kPi / 2, kPi / 3, kPi / 5));
    if (auto m = parse_dihedral_product(name)) {
        if (*m < 2) throw UnknownName("I2(m)xA1 needs m >= 2, got " + std::to_string(*m));
        std::vector<VecD> normals;
        for (long j = 0; j < *m; ++j) {
            const double t = kPi * static_cast<double>(j) / static_cast<double>(*m);
            normals.push_back({std::cos(t), std::sin(t), 0.0});
        }
        normals.push_back({0, 0, 1});
        const double md = static_cast<double>(*m);
        return reflection_entry(std::string(name), std::move(normals), static_cast<std::size_t>(4 * *m),
                                sorted3(kPi / md, kPi / 2, kPi / 2));
    }
    throw UnknownName("unknown Coxeter arrangement '" + std::string(name) + "'");
}

CatalogEntry non_examples(std::string_view name) {
    ExpectedRecord neg{false, std::nullopt, std::nullopt, std::nullopt};
    if (name == "skew_pencil") {
        const double r = 1.0 / std::sqrt(2.0);
        return {"skew_pencil", make_arrangement(3, std::vector<VecD>{{1, 0, 0}, {0, 1, 0}, {r, r, 0}, {0, 0, 1}}),
                neg};
    }
    if (name == "stretched_B3") {
        std::vector<VecD> normals = b3_normals();
        for (auto& v : normals) v[0] *= 1.1;
        return {"stretched_B3", make_arrangement(3, normals), neg};
    }
    if (name == "quad_faces") {
        // Coordinate planes plus the plane orthogonal to (1,1,1): four planes
        // in general position, so some of the 14 faces are quadrilaterals.
        const double r = 1.0 / std::sqrt(3.0);
        return {"quad_faces", make_arrangement(3, std::vector<VecD>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {r, r, r}}),
                neg};
    }
    throw UnknownName("unknown non-example '" + std::string(name) + "'");
}

CatalogEntry catalog_entry(std::string_view name) {
    for (const auto& n : non_example_names())
        if (n == name) return non_examples(name);
    return coxeter_3d(name);
}

std::vector<std::string> coxeter_names() {
    std::vector<std::string> out{"A1xA1xA1"};
    for (int m = 2; m <= 6; ++m) out.push_back("I2(" + std::to_string(m) + ")xA1");
    out.insert(out.end(), {"A3", "B3", "H3"});
    return out;
}

std::vector<std::string> non_example_names() { return {"skew_pencil", "stretched_B3", "quad_faces"}; }

std::vector<std::string> catalog_names() {
    auto out = coxeter_names();
    auto neg = non_example_names();
    out.insert(out.end(), neg.begin(), neg.end());
    return out;
}

}  // namespace coxarr
