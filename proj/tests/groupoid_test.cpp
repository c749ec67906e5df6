#include <gtest/gtest.h>

#include <random>

#include "hallforge/fincat/objects.hpp"
#include "hallforge/groupoid/corr_cube.hpp"
#include "set_cubes.hpp"

using namespace hallforge;

namespace {

// one object with automorphism group `aut`
GroupoidPtr one_object(GroupPtr aut, const std::string& label = "c") {
    return std::make_shared<SkeletalGroupoid>(std::vector<Component>{{label, std::move(aut), 0, "", 0, 0}});
}

// functor from a one-object groupoid given by a homomorphism
GroupoidFunctor hom_functor(GroupoidPtr a, GroupoidPtr b, std::function<Matrix(const Matrix&)> h) {
    return GroupoidFunctor(a, b, {0}, [h](std::size_t, const Matrix& m) { return h(m); });
}

}  // namespace

TEST(Groupoid, CardinalityOfDiscreteAndActionGroupoids) {
    EXPECT_EQ(discrete_groupoid(3)->cardinality(), Rational(3));
    const auto* f2 = &field_of_order(2);
    auto vect = vect_category(*f2);
    auto s1 = FlagSpace::up_to(vect, 1, 2);
    // 1 + 1/1 + 1/6
    EXPECT_EQ(s1.groupoid()->cardinality(), Rational(BigInt(13), BigInt(6)));
}

TEST(Groupoid, FiberProductAlongIdentityIsTheSource) {
    const auto* f2 = &field_of_order(2);
    auto s1 = FlagSpace::up_to(vect_category(*f2), 1, 3);
    auto s2 = FlagSpace::up_to(vect_category(*f2), 2, 2);
    // the mid-type functor S_2 -> S_1 by restriction to {0,2}
    StrictFunctor mid{[&](std::size_t p, std::size_t x) {
                          const auto& src = s2.shape(p);
                          Grade g = restrict_grade(src.grade(), {0, 2});
                          std::size_t q = s1.piece_or_throw(g);
                          return std::make_pair(q, s1.shape(q).encode(restrict_data(src, s1.shape(q), src.decode(x), {0, 2})));
                      },
                      [&](std::size_t p, const Matrix& m) { return restrict_group(s2.shape(p), m, {0, 2}); }};
    auto F = skeletal_functor(s2.skeleton(), s1.skeleton(), mid);
    auto id = identity_functor(s1.groupoid());
    FiberProduct p(F, id);
    EXPECT_EQ(p.groupoid()->size(), s2.groupoid()->size());
    EXPECT_EQ(p.groupoid()->cardinality(), s2.groupoid()->cardinality());
    // the canonical map is an equivalence
    GroupoidSquare sq{identity_functor(s2.groupoid()), F, F, id, identity_cell(F)};
    EXPECT_TRUE(is_pullback_square(sq));
}

TEST(Groupoid, PointTimesPointOverUnits) {
    const auto* f3 = &field_of_order(3);
    auto c = one_object(general_linear_group(*f3, 1));
    auto pt_a = one_object(trivial_group(f3, 1), "a");
    auto pt_b = one_object(trivial_group(f3, 1), "b");
    auto f = hom_functor(pt_a, c, [](const Matrix& m) { return m; });
    auto g = hom_functor(pt_b, c, [](const Matrix& m) { return m; });
    FiberProduct p(f, g);
    ASSERT_EQ(p.groupoid()->size(), 2u);
    for (const auto& comp : p.groupoid()->components()) EXPECT_EQ(comp.aut->order(), 1);
    EXPECT_EQ((*p.groupoid())[0].label, "(a,b)#0");
}

TEST(Groupoid, DoubleCosetCardinalityIdentity) {
    // Sum over double cosets of 1/|Stab| = |Aut c| / (|Aut a| |Aut b|), also for
    // non-injective homomorphisms.
    const auto* f2 = &field_of_order(2);
    const auto* f3 = &field_of_order(3);
    auto gl2 = general_linear_group(*f2, 2);
    auto borel = parabolic_group(*f2, {1, 1});
    auto a = one_object(borel, "B");
    auto b = one_object(borel, "B'");
    auto c = one_object(gl2);
    auto inc = [](const Matrix& m) { return m; };
    FiberProduct p(hom_functor(a, c, inc), hom_functor(b, c, inc));
    EXPECT_EQ(p.groupoid()->size(), 2u);  // Bruhat cells
    EXPECT_EQ(p.groupoid()->cardinality(), Rational(BigInt(6), BigInt(4)));

    // GL_1(F_3) -> GL_1(F_3) trivial hom on one side
    auto u = general_linear_group(*f3, 1);
    auto x = one_object(u, "x");
    auto y = one_object(u, "y");
    auto z = one_object(u, "z");
    auto id1 = Matrix::identity(f3, 1);
    FiberProduct q(hom_functor(x, z, [id1](const Matrix&) { return id1; }), hom_functor(y, z, inc));
    EXPECT_EQ(q.groupoid()->cardinality(), Rational(BigInt(2), BigInt(4)));
}

TEST(Groupoid, EquivalenceDetection) {
    auto g = discrete_groupoid(3);
    EXPECT_TRUE(is_equivalence(identity_functor(g)));
    auto h = discrete_groupoid(2);
    auto collapse = discrete_functor(g, h, {0, 0, 1});
    auto r = equivalence_report(collapse);
    EXPECT_FALSE(r.pi0_bijective);
    EXPECT_FALSE(r.equivalence());

    // trivial group -> GL_1(F_3) is bijective on classes but not on automorphisms
    const auto* f3 = &field_of_order(3);
    auto pt = one_object(trivial_group(f3, 1));
    auto c = one_object(general_linear_group(*f3, 1));
    auto r2 = equivalence_report(hom_functor(pt, c, [](const Matrix& m) { return m; }));
    EXPECT_TRUE(r2.pi0_bijective);
    EXPECT_FALSE(r2.aut_match);
}

TEST(Groupoid, EquivalencesAreStableUnderComposition) {
    auto g = discrete_groupoid(3);
    auto h = discrete_groupoid(3, "y");
    auto e = discrete_functor(g, h, {2, 0, 1});
    auto c = discrete_functor(h, discrete_groupoid(2), {0, 1, 1});
    EXPECT_TRUE(is_equivalence(compose(e, identity_functor(g))));
    EXPECT_EQ(is_equivalence(compose(c, e)), is_equivalence(c));
}

TEST(Groupoid, NonCommutingSquareIsRejected) {
    const auto* f3 = &field_of_order(3);
    auto u = general_linear_group(*f3, 1);
    auto c = one_object(u);
    auto d = one_object(u, "d");
    auto id = [](const Matrix& m) { return m; };
    auto inv = [](const Matrix& m) { return m.inverse_or_throw(); };
    // GL_1(F_3) is abelian of order 2, so use the trivial map against the identity
    auto one = Matrix::identity(f3, 1);
    GroupoidSquare s{hom_functor(d, c, id), hom_functor(d, c, [one](const Matrix&) { return one; }),
                     hom_functor(c, c, id), hom_functor(c, c, inv), TwoCell{one}};
    EXPECT_THROW(check_square(s), diagram_error);
}

TEST(Groupoid, PastingPullbackSquares) {
    // finite sets: two pullback squares sharing an edge paste to a pullback
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        // C -> E <- D, B = C x_E D; F -> C, A = F x_C B
        std::size_t ne = 2, nc = 3, nd = 3, nf = 3;
        std::vector<std::size_t> ce(nc), de(nd), fc(nf);
        for (auto& x : ce) x = rng() % ne;
        for (auto& x : de) x = rng() % ne;
        for (auto& x : fc) x = rng() % nc;
        std::vector<std::pair<std::size_t, std::size_t>> B;
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t d = 0; d < nd; ++d)
                if (ce[c] == de[d]) B.emplace_back(c, d);
        std::vector<std::pair<std::size_t, std::size_t>> A;
        for (std::size_t f = 0; f < nf; ++f)
            for (std::size_t b = 0; b < B.size(); ++b)
                if (fc[f] == B[b].first) A.emplace_back(f, b);
        auto gA = discrete_groupoid(A.size()), gB = discrete_groupoid(B.size()), gC = discrete_groupoid(nc),
             gD = discrete_groupoid(nd), gE = discrete_groupoid(ne), gF = discrete_groupoid(nf);
        std::vector<std::size_t> af, ab, bc, bd;
        for (auto [f, b] : A) {
            af.push_back(f);
            ab.push_back(b);
        }
        for (auto [c, d] : B) {
            bc.push_back(c);
            bd.push_back(d);
        }
        auto AF = discrete_functor(gA, gF, af), AB = discrete_functor(gA, gB, ab), BC = discrete_functor(gB, gC, bc),
             BD = discrete_functor(gB, gD, bd), FC = discrete_functor(gF, gC, fc), CE = discrete_functor(gC, gE, ce),
             DE = discrete_functor(gD, gE, de);
        GroupoidSquare left{AF, AB, FC, BC, identity_cell(compose(FC, AF))};
        GroupoidSquare right{BC, BD, CE, DE, identity_cell(compose(CE, BC))};
        auto FE = compose(CE, FC);
        auto AD = compose(BD, AB);
        GroupoidSquare outer{AF, AD, FE, DE, identity_cell(compose(FE, AF))};
        ASSERT_TRUE(is_pullback_square(left));
        ASSERT_TRUE(is_pullback_square(right));
        EXPECT_TRUE(is_pullback_square(outer));
    }
}

TEST(GroupoidCube, CubeOfIdentitiesIsPullback) {
    set_cubes::SetCube c;
    c.dim = 3;
    c.size.assign(8, 2);
    c.map.assign(8, std::vector<std::vector<std::size_t>>(3, std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(is_pullback_cube(set_cubes::to_groupoids(c)));
}

TEST(GroupoidCube, LemmaOnRandomFiniteSetCubes) {
    std::mt19937 rng(12345);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<char> exact(8, 0);
        exact[1] = 1;  // the face away from the initial vertex is a pullback
        exact[0] = rng() % 2;
        auto c = set_cubes::random_cube(3, rng, exact);
        auto g = set_cubes::to_groupoids(c);
        bool cube = is_pullback_cube(g);
        bool bottom = is_pullback_cube(g.face({0, -1, -1}));
        ASSERT_TRUE(is_pullback_cube(g.face({1, -1, -1})));
        EXPECT_EQ(cube, bottom);
        EXPECT_EQ(cube, set_cubes::is_pullback(c));
        ++checked;
    }
    EXPECT_EQ(checked, 60);
}

TEST(GroupoidCube, LimitIndependentOfAxisOrder) {
    std::mt19937 rng(99);
    std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<char> exact(8, 0);
        exact[0] = rng() % 2;
        auto c = set_cubes::random_cube(3, rng, exact);
        auto g = set_cubes::to_groupoids(c);
        const bool ref = set_cubes::is_pullback(c);
        for (const auto& p : perms) EXPECT_EQ(is_pullback_cube(g.permuted(p)), ref);
    }
}

TEST(GroupoidCube, CorollaryReductionInDimensionFour) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<char> exact(16, 0);
        std::size_t axis = rng() % 4;
        exact[std::size_t{1} << axis] = 1;
        exact[0] = rng() % 2;
        auto c = set_cubes::random_cube(4, rng, exact);
        auto r = reduce_via_corollary(set_cubes::to_groupoids(c), axis);
        ASSERT_TRUE(r.applicable());
        EXPECT_EQ(r.result(), set_cubes::is_pullback(c));
    }
}

TEST(GroupoidCube, PrecomposedInitialVertex) {
    set_cubes::SetCube c;
    c.dim = 2;
    c.size = {2, 2, 2, 2};
    c.map.assign(4, std::vector<std::vector<std::size_t>>(2, std::vector<std::size_t>{0, 1}));
    auto g = set_cubes::to_groupoids(c);
    EXPECT_TRUE(is_pullback_cube(g));
    auto smaller = discrete_groupoid(1);
    auto k = discrete_functor(smaller, g.vertex(0), {1});
    EXPECT_FALSE(is_pullback_cube(g.precomposed(k)));
}

TEST(CorrCube, GridIndexing) {
    EXPECT_EQ(grid_index({grid_mid, grid_zero}), 1u);
    EXPECT_EQ(grid_coords(grid_index({grid_one, grid_mid, grid_zero}), 3), (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(grid_label({grid_one, grid_mid}), "(1,M)");
    auto d = designated_corners(3);
    EXPECT_EQ(d[0], (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(d[1], (std::vector<int>{0, 1, 0}));
    CorrespondenceCube bare(1);
    EXPECT_TRUE(is_commutative_corr_cube(bare));
}
