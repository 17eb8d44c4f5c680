#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "corpus.h"
#include "coxarr/arrangement.h"
#include "coxarr/catalog.h"
#include "coxarr/random.h"
#include "oracles.h"

namespace coxarr {
namespace {

const double kR = 1.0 / std::sqrt(2.0);

Arrangement arr(std::size_t dim, std::vector<VecD> normals) { return make_arrangement(dim, normals); }

Arrangement coordinate_planes() { return arr(3, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}); }

Arrangement skew_pencil() { return arr(3, {unit_vector(3, 0), unit_vector(3, 1), {kR, kR, 0.0}, unit_vector(3, 2)}); }

TEST(Hyperplane, CanonicalSign) {
    const Tolerance tol;
    const Hyperplane a(VecD{-2.0, 1.0, 0.0}, tol);
    const Hyperplane b(VecD{2.0, -1.0, 0.0}, tol);
    EXPECT_EQ(a.normal(), b.normal());
    EXPECT_GT(a.normal()[0], 0.0);
    EXPECT_NEAR(a.normal().norm(), 1.0, 1e-15);
    // Leading coordinate below abs_eps does not decide the sign.
    const Hyperplane c(VecD{1e-12, -1.0, 0.0}, tol);
    EXPECT_GT(c.normal()[1], 0.0);
    EXPECT_THROW(Hyperplane(VecD(3, 0.0), tol), DegenerateInput);
}

TEST(Hyperplane, ReflectionAndContainment) {
    const Tolerance tol;
    const Hyperplane m(VecD{1.0, 0.0, 0.0}, tol);
    const Hyperplane h(VecD{kR, kR, 0.0}, tol);
    const Hyperplane r = h.reflected_across(m, tol);
    EXPECT_TRUE(r.same_as(Hyperplane(VecD{-kR, kR, 0.0}, tol), tol));
    EXPECT_TRUE(m.contains(unit_vector(3, 1), tol));
    EXPECT_FALSE(m.contains(unit_vector(3, 0), tol));
}

TEST(MakeArrangement, Examples) {
    const auto a = arr(3, {{2.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].normal(), unit_vector(3, 0));
    EXPECT_EQ(a[1].normal(), unit_vector(3, 1));
    EXPECT_TRUE(arr(3, {}).empty());

    auto scaled = coxeter_3d("B3").arrangement.normals();
    for (auto& v : scaled) v *= 3.0;
    const auto b3 = arr(3, scaled);
    EXPECT_EQ(b3.size(), 9u);
    const auto reference = coxeter_3d("B3").arrangement;
    for (const auto& h : reference.hyperplanes()) EXPECT_NE(b3.find(h), Arrangement::npos);

    EXPECT_THROW(arr(3, {{1.0, 0.0}}), DimensionMismatch);
    EXPECT_THROW(arr(3, {{0.0, 0.0, 0.0}}), DegenerateInput);
    EXPECT_THROW(Arrangement(0, {}, Tolerance{}), PreconditionError);
}

TEST(IsEssential, Examples) {
    EXPECT_TRUE(is_essential(coordinate_planes()));
    EXPECT_FALSE(is_essential(arr(3, {unit_vector(3, 0), unit_vector(3, 1)})));
    const auto h3 = coxeter_3d("H3").arrangement;
    EXPECT_TRUE(is_essential(h3));
    EXPECT_EQ(oracle::rank(h3.normals()), 3u);
}

// Angles of the lines themselves (perpendicular to the normals), in [0, pi).
std::vector<double> line_directions(const Arrangement& q) {
    std::vector<double> out;
    for (const auto& h : q.hyperplanes()) {
        double t = std::atan2(h.normal()[1], h.normal()[0]) + kPi / 2;
        t = std::fmod(t + 2 * kPi, kPi);
        if (kPi - t < 1e-12) t = 0.0;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(PencilQuotient, Examples) {
    const auto q = pencil_quotient(arr(3, {unit_vector(3, 0), unit_vector(3, 1), {1.0, 1.0, 0.0}}));
    EXPECT_EQ(q.dim(), 2u);
    EXPECT_TRUE(is_essential(q));
    const auto dirs = line_directions(q);
    ASSERT_EQ(dirs.size(), 3u);
    EXPECT_NEAR(dirs[0], 0.0, 1e-12);
    EXPECT_NEAR(dirs[1], kPi / 2, 1e-12);
    EXPECT_NEAR(dirs[2], 3 * kPi / 4, 1e-12);

    const auto one = pencil_quotient(arr(3, {unit_vector(3, 2)}));
    EXPECT_EQ(one.dim(), 1u);
    EXPECT_EQ(one.size(), 1u);
    EXPECT_TRUE(is_essential(one));

    const auto two = pencil_quotient(arr(3, {unit_vector(3, 0), unit_vector(3, 1)}));
    EXPECT_EQ(two.dim(), 2u);
    EXPECT_NEAR(dot(two[0].normal(), two[1].normal()), 0.0, 1e-15);

    EXPECT_THROW(pencil_quotient(coordinate_planes()), PreconditionError);
    EXPECT_THROW(pencil_quotient(arr(3, {})), PreconditionError);
}

TEST(PencilQuotient, PreservesCoxeterVerdictsProperty) {
    Rng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        // k planes through a common random line in R^3 or a random plane in R^4.
        const std::size_t d = 3 + rng.index(2);
        const std::size_t k = 2 + rng.index(4);
        const bool regular = rng.uniform() < 0.5;
        const Matrix q = random_orthogonal(d, rng);
        std::vector<VecD> raw;
        const double offset = rng.uniform(0.0, kPi);
        for (std::size_t i = 0; i < k; ++i) {
            const double t = regular ? offset + kPi * i / k : rng.uniform(0.0, kPi);
            VecD v(d);
            v[0] = std::cos(t);
            v[1] = std::sin(t);
            raw.push_back(q.apply(v));
        }
        const auto a = make_arrangement(d, raw);
        if (a.size() < 2) continue;
        ASSERT_FALSE(is_essential(a));
        const auto p = pencil_quotient(a);
        EXPECT_EQ(p.dim(), 2u);
        EXPECT_EQ(is_coxeter_mirror_closure(p), is_coxeter_mirror_closure(a));
        EXPECT_EQ(is_coxeter_rank_two(p), is_coxeter_rank_two(a));
        if (regular) EXPECT_TRUE(is_coxeter_mirror_closure(a));
    }
}

TEST(RankTwo, CoordinatePlanes) {
    const auto subs = rank_two_subarrangements(coordinate_planes());
    ASSERT_EQ(subs.size(), 3u);
    for (const auto& s : subs) {
        EXPECT_EQ(s.size(), 2u);
        EXPECT_EQ(s.basis.size(), 1u);
    }
}

TEST(RankTwo, SkewPencil) {
    const auto a = skew_pencil();
    const auto subs = rank_two_subarrangements(a);
    std::size_t big = 0, small = 0;
    for (const auto& s : subs) {
        if (s.size() == 3) {
            ++big;
            EXPECT_EQ(s.members, (std::vector<std::size_t>{0, 1, 2}));
            ASSERT_EQ(s.pencil_angles.size(), 3u);
            EXPECT_NEAR(s.pencil_angles[0], 0.0, 1e-12);
            EXPECT_NEAR(s.pencil_angles[1], kPi / 4, 1e-12);
            EXPECT_NEAR(s.pencil_angles[2], kPi / 2, 1e-12);
            // The shared line is the z-axis.
            EXPECT_NEAR(std::abs(s.basis[0][2]), 1.0, 1e-12);
        } else {
            EXPECT_EQ(s.size(), 2u);
            ++small;
        }
    }
    EXPECT_EQ(big, 1u);
    EXPECT_EQ(small, 3u);
}

TEST(RankTwo, A3PencilsHaveSizeTwoOrThree) {
    for (const auto& s : rank_two_subarrangements(coxeter_3d("A3").arrangement))
        EXPECT_TRUE(s.size() == 2 || s.size() == 3) << s.size();
}

TEST(RankTwo, PartitionsPairsProperty) {
    for (std::size_t d = 3; d <= 5; ++d) {
        for (const auto& [name, a] : testing::random_corpus(d, 150, 77 + d)) {
            const auto subs = rank_two_subarrangements(a);
            std::size_t pairs = 0;
            for (const auto& s : subs) {
                pairs += s.size() * (s.size() - 1) / 2;
                EXPECT_GE(s.size(), 2u);
                EXPECT_EQ(s.basis.size(), d - 2);
                for (std::size_t m : s.members)
                    for (const auto& u : s.basis) EXPECT_LE(std::abs(dot(a[m].normal(), u)), 1e-9) << name;
                for (std::size_t k = 1; k < s.pencil_angles.size(); ++k)
                    EXPECT_GT(s.pencil_angles[k] - s.pencil_angles[k - 1], 1e-9) << name;
            }
            EXPECT_EQ(pairs, a.size() * (a.size() - 1) / 2) << name;
        }
    }
}

TEST(IsDihedral, Examples) {
    const Tolerance tol;
    const double right[] = {0.0, kPi / 2};
    const double skew[] = {0.0, kPi / 4, kPi / 2};
    const double hex[] = {0.0, kPi / 3, 2 * kPi / 3};
    const double single[] = {0.3};
    EXPECT_TRUE(is_dihedral(right, tol));
    EXPECT_FALSE(is_dihedral(skew, tol));
    EXPECT_TRUE(is_dihedral(hex, tol));
    EXPECT_TRUE(is_dihedral(single, tol));
}

TEST(IsDihedral, TwoLinesNeedARightAngle) {
    // Two mirrors at angle pi/5 generate three more; the pair alone is not a
    // closed mirror system, so the gap rule pi/k applies at k = 2 as well.
    const Tolerance tol;
    const double fifth[] = {0.0, kPi / 5};
    EXPECT_FALSE(is_dihedral(fifth, tol));
    const auto a = arr(2, {{1.0, 0.0}, {std::cos(kPi / 5), std::sin(kPi / 5)}});
    EXPECT_FALSE(is_coxeter_mirror_closure(a));
    EXPECT_FALSE(is_coxeter_rank_two(a));
}

TEST(Coxeter, Examples) {
    EXPECT_TRUE(is_coxeter_mirror_closure(coordinate_planes()));
    EXPECT_FALSE(is_coxeter_mirror_closure(skew_pencil()));
    EXPECT_TRUE(is_coxeter_mirror_closure(coxeter_3d("H3").arrangement));
    EXPECT_TRUE(is_coxeter_rank_two(coxeter_3d("A3").arrangement));
    EXPECT_FALSE(is_coxeter_rank_two(skew_pencil()));
    EXPECT_TRUE(is_coxeter_mirror_closure(arr(3, {})));
    EXPECT_TRUE(is_coxeter_rank_two(arr(3, {unit_vector(3, 1)})));
    EXPECT_TRUE(is_coxeter_mirror_closure(arr(1, {{1.0}})));
}

TEST(Coxeter, AgreesWithOraclesOnCorpusProperty) {
    auto check = [](const std::string& name, const Arrangement& a) {
        const bool mirror = is_coxeter_mirror_closure(a);
        EXPECT_EQ(mirror, is_coxeter_rank_two(a)) << name;
        EXPECT_EQ(mirror, oracle::mirror_closed(a.normals())) << name;
        if (a.dim() == 3) EXPECT_EQ(mirror, oracle::pencils_equally_spaced(a.normals())) << name;
    };
    for (const auto& [name, a] : testing::catalog_corpus()) check(name, a);
    std::size_t coxeter = 0;
    for (std::size_t d = 3; d <= 5; ++d) {
        for (const auto& [name, a] : testing::random_corpus(d, 400, 2024 + d)) {
            check(name, a);
            coxeter += is_coxeter_mirror_closure(a);
        }
    }
    // Root subsets must exercise the true branch too.
    EXPECT_GT(coxeter, 20u);
}

TEST(Coxeter, InvariantUnderOrthogonalChangeProperty) {
    Rng rng(31337);
    for (const auto& [name, a] : testing::catalog_corpus()) {
        const auto b = a.transformed(random_orthogonal(3, rng));
        EXPECT_EQ(is_coxeter_mirror_closure(a), is_coxeter_mirror_closure(b)) << name;
        EXPECT_EQ(is_coxeter_rank_two(a), is_coxeter_rank_two(b)) << name;
    }
    for (const auto& [name, a] : testing::random_corpus(4, 100, 8)) {
        const auto b = a.transformed(random_orthogonal(4, rng));
        EXPECT_EQ(is_coxeter_mirror_closure(a), is_coxeter_mirror_closure(b)) << name;
        EXPECT_EQ(is_coxeter_rank_two(a), is_coxeter_rank_two(b)) << name;
    }
}

}  // namespace
}  // namespace coxarr
