#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "corpus.h"
#include "coxarr/catalog.h"
#include "coxarr/sphere.h"
#include "oracles.h"

namespace coxarr {
namespace {

const Tolerance kTol;

Arrangement arr(std::vector<VecD> normals) { return make_arrangement(3, normals); }

Arrangement coordinate_planes() { return arr({unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}); }

TEST(BuildComplex, Octahedron) {
    const auto c = build_complex(coordinate_planes());
    EXPECT_EQ(c.num_vertices(), 6u);
    EXPECT_EQ(c.num_arcs(), 12u);
    EXPECT_EQ(c.num_faces(), 8u);
    for (const auto& f : c.faces) {
        ASSERT_TRUE(f.is_triangle());
        for (const auto& b : f.boundary) {
            EXPECT_NEAR(b.angle, kPi / 2, 1e-12);
            EXPECT_NEAR(b.edge_length, kPi / 2, 1e-12);
        }
        EXPECT_NEAR(f.area, kPi / 2, 1e-12);
    }
    EXPECT_TRUE(complex_invariant_failures(c).empty());
}

TEST(BuildComplex, ThreeGenericCircles) {
    const auto c = build_complex(arr({{1.0, 0.2, 0.1}, {0.3, 1.0, -0.4}, {0.2, 0.5, 1.0}}));
    EXPECT_EQ(c.num_vertices(), 6u);
    EXPECT_EQ(c.num_arcs(), 12u);
    EXPECT_EQ(c.num_faces(), 8u);
}

TEST(BuildComplex, B3HasFortyEightFaces) {
    const auto a = coxeter_3d("B3").arrangement;
    const auto c = build_complex(a);
    EXPECT_EQ(c.num_faces(), 48u);
    EXPECT_EQ(c.num_faces(), oracle::regions_3d(a.normals()));
}

TEST(BuildComplex, Preconditions) {
    EXPECT_THROW(build_complex(arr({unit_vector(3, 0), unit_vector(3, 1)})), PreconditionError);
    EXPECT_THROW(build_complex(make_arrangement(2, std::vector<VecD>{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}})),
                 PreconditionError);
    EXPECT_THROW(build_complex(arr({unit_vector(3, 0), unit_vector(3, 1), {1.0, 1.0, 0.0}})), PreconditionError);
}

TEST(BuildComplex, InvariantsHoldOnCorpusProperty) {
    auto check = [](const std::string& name, const Arrangement& a) {
        const auto c = build_complex(a);
        const auto failures = complex_invariant_failures(c);
        EXPECT_TRUE(failures.empty()) << name << ": " << (failures.empty() ? "" : failures.front());
        EXPECT_EQ(c.num_faces(), oracle::regions_3d(a.normals())) << name;
        EXPECT_EQ(static_cast<long>(c.num_vertices()) - static_cast<long>(c.num_arcs()) +
                      static_cast<long>(c.num_faces()),
                  2)
            << name;
        double total = 0.0;
        for (const auto& f : c.faces) {
            total += f.area;
            if (f.is_triangle()) {
                EXPECT_NEAR(f.area, f.angular_excess(), kExcessTolerance) << name;
                EXPECT_GT(f.angular_excess(), 0.0) << name;
                const auto r = law_of_sines_ratios(f);
                EXPECT_NEAR(r[0], r[1], kLawOfSinesTolerance) << name;
                EXPECT_NEAR(r[1], r[2], kLawOfSinesTolerance) << name;
            }
        }
        EXPECT_NEAR(total, 4 * kPi, kAreaSumTolerance) << name;
        for (std::size_t v = 0; v < c.num_vertices(); ++v) {
            EXPECT_EQ(c.degree(v) % 2, 0u) << name;
            EXPECT_EQ(c.degree(v), c.angle_count(v)) << name;
        }
        const auto md = min_degree_vertex(c);
        EXPECT_LE(md.degree, 5u) << name;
        if (is_simplicial(c)) EXPECT_EQ(md.degree, 4u) << name;
        EXPECT_GE(count_simplicial_regions(c), 2 * a.size()) << name;
    };
    for (const auto& [name, a] : testing::catalog_corpus()) check(name, a);
    for (const auto& [name, a] : testing::random_corpus(3, 300, 4242)) check(name, a);
}

TEST(FaceSignature, B3FaceAngles) {
    const auto c = build_complex(coxeter_3d("B3").arrangement);
    const auto angles = face_signature(c.faces[0], kTol).angles();
    ASSERT_EQ(angles.size(), 3u);
    EXPECT_NEAR(angles[0], kPi / 4, 1e-9);
    EXPECT_NEAR(angles[1], kPi / 3, 1e-9);
    EXPECT_NEAR(angles[2], kPi / 2, 1e-9);
}

TEST(FaceSignature, A3FacesAllEqual) {
    const auto c = build_complex(coxeter_3d("A3").arrangement);
    ASSERT_EQ(c.num_faces(), 24u);
    const auto s0 = face_signature(c.faces[0], kTol);
    for (const auto& f : c.faces) EXPECT_TRUE(s0.equivalent(face_signature(f, kTol), StepTolerance::spherical(kTol)));
}

TEST(AllRegionsIsometric, Examples) {
    EXPECT_TRUE(all_regions_isometric(build_complex(coxeter_3d("H3").arrangement), kTol));
    EXPECT_FALSE(all_regions_isometric(build_complex(non_examples("skew_pencil").arrangement), kTol));
    EXPECT_TRUE(all_regions_isometric(build_complex(coordinate_planes()), kTol));
}

TEST(IsSimplicial, Examples) {
    EXPECT_TRUE(is_simplicial(build_complex(coxeter_3d("A3").arrangement)));
    EXPECT_TRUE(is_simplicial(build_complex(coordinate_planes())));
    EXPECT_TRUE(is_simplicial(build_complex(non_examples("skew_pencil").arrangement)));
    const auto quad = build_complex(non_examples("quad_faces").arrangement);
    EXPECT_FALSE(is_simplicial(quad));
    EXPECT_LT(count_simplicial_regions(quad), quad.num_faces());
}

TEST(IsSimplicial, OriginalQuadCandidateIsActuallySimplicial) {
    // {e1, e2, (1,1,1), (1,-1,1)}: every face is a triangle, which is why the
    // quad_faces control uses a different arrangement.
    const auto c = build_complex(arr({unit_vector(3, 0), unit_vector(3, 1), {1.0, 1.0, 1.0}, {1.0, -1.0, 1.0}}));
    EXPECT_TRUE(is_simplicial(c));
    EXPECT_EQ(c.num_faces(), 12u);
}

TEST(VertexAngleCycle, Examples) {
    const auto oct = build_complex(coordinate_planes());
    for (std::size_t v = 0; v < oct.num_vertices(); ++v)
        EXPECT_EQ(vertex_angle_cycle(oct, v, kTol), (std::vector<int>{0, 0, 0, 0}));

    const auto b3 = build_complex(coxeter_3d("B3").arrangement);
    const auto labels = angle_labels(b3, kTol);
    ASSERT_EQ(labels.size(), 3u);
    std::size_t degree_eight = 0;
    for (std::size_t v = 0; v < b3.num_vertices(); ++v) {
        const auto cycle = vertex_angle_cycle(b3, v, kTol);
        EXPECT_TRUE(opposite_labels_match(cycle));
        if (cycle.size() == 8) {
            ++degree_eight;
            for (int l : cycle) EXPECT_NEAR(labels[static_cast<std::size_t>(l)], kPi / 4, 1e-9);
        }
    }
    EXPECT_EQ(degree_eight, 6u);

    EXPECT_THROW(vertex_angle_cycle(build_complex(non_examples("quad_faces").arrangement), 0, kTol),
                 PreconditionError);
    EXPECT_THROW(vertex_angle_cycle(build_complex(non_examples("stretched_B3").arrangement), 0, kTol),
                 LabelingError);
}

TEST(ParityLemma, Examples) {
    // alpha = 0, beta = 1, gamma = 2
    EXPECT_TRUE(check_parity_lemma(std::vector<int>{0, 1, 1, 0, 2, 2}, 3));
    EXPECT_FALSE(check_parity_lemma(std::vector<int>{0, 1, 1, 2}, 3));
    EXPECT_TRUE(check_parity_lemma(std::vector<int>{0, 1, 2, 0, 1, 2}, 3));
    EXPECT_THROW(check_parity_lemma(std::vector<int>{0, 1, 2}, 3), PreconditionError);
    EXPECT_THROW(check_parity_lemma(std::vector<int>{0, 1}, 2), PreconditionError);
}

// Every cyclic labelling that is a legal run structure, checked against a
// direct restatement of the rule on all rotations.
TEST(ParityLemma, MatchesRestatementOnAllShortCyclesProperty) {
    for (std::size_t m = 2; m <= 8; m += 2) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < m; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<int> c(m);
            std::size_t x = code;
            for (std::size_t i = 0; i < m; ++i, x /= 3) c[i] = static_cast<int>(x % 3);
            bool expected = true;
            for (std::size_t i = 0; i < m; ++i) {
                if (c[i] == c[(i + m - 1) % m]) continue;  // not a run start
                std::size_t len = 1;
                while (len < m && c[(i + len) % m] == c[i]) ++len;
                if (len == m) break;
                const bool same = c[(i + m - 1) % m] == c[(i + len) % m];
                if ((len % 2 == 0) != same) expected = false;
            }
            EXPECT_EQ(check_parity_lemma(c, 3), expected);
        }
    }
}

TEST(ParityLemma, HoldsOnScaleneCatalogComplexes) {
    for (const char* name : {"B3", "H3"}) {
        const auto c = build_complex(coxeter_3d(name).arrangement);
        ASSERT_EQ(angle_labels(c, kTol).size(), 3u) << name;
        for (std::size_t v = 0; v < c.num_vertices(); ++v)
            EXPECT_TRUE(check_parity_lemma(vertex_angle_cycle(c, v, kTol), 3)) << name << " vertex " << v;
    }
}

TEST(UniformVertices, Examples) {
    EXPECT_TRUE(check_all_vertices_uniform(build_complex(coxeter_3d("A3").arrangement), kTol));
    EXPECT_TRUE(check_all_vertices_uniform(build_complex(coxeter_3d("H3").arrangement), kTol));
    EXPECT_FALSE(check_all_vertices_uniform(build_complex(non_examples("skew_pencil").arrangement), kTol));
}

TEST(ShannonBound, Examples) {
    EXPECT_EQ(count_simplicial_regions(build_complex(coordinate_planes())), 8u);
    EXPECT_EQ(count_simplicial_regions(build_complex(coxeter_3d("B3").arrangement)), 48u);
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto a = testing::random_generic(3, 5, rng);
        EXPECT_GE(count_simplicial_regions(build_complex(a)), 10u);
    }
}

TEST(MinDegree, Examples) {
    EXPECT_EQ(min_degree_vertex(build_complex(coordinate_planes())).degree, 4u);
    EXPECT_EQ(min_degree_vertex(build_complex(coxeter_3d("A3").arrangement)).degree, 4u);
    EXPECT_EQ(min_degree_vertex(build_complex(coxeter_3d("H3").arrangement)).degree, 4u);
}

TEST(Complex, AntipodalVertices) {
    const auto c = build_complex(coxeter_3d("H3").arrangement);
    EXPECT_EQ(c.num_vertices(), 62u);
    for (const auto& v : c.vertices) {
        const bool found = std::any_of(c.vertices.begin(), c.vertices.end(),
                                       [&](const VecD& w) { return (v + w).norm() < 1e-9; });
        EXPECT_TRUE(found);
    }
}

TEST(Complex, RotationInvariantCountsProperty) {
    Rng rng(808);
    for (const auto& [name, a] : testing::catalog_corpus()) {
        const auto c0 = build_complex(a);
        const auto c1 = build_complex(a.transformed(random_orthogonal(3, rng)));
        EXPECT_EQ(c0.num_vertices(), c1.num_vertices()) << name;
        EXPECT_EQ(c0.num_faces(), c1.num_faces()) << name;
        EXPECT_EQ(all_regions_isometric(c0, kTol), all_regions_isometric(c1, kTol)) << name;
        EXPECT_EQ(is_simplicial(c0), is_simplicial(c1)) << name;
    }
}

}  // namespace
}  // namespace coxarr
