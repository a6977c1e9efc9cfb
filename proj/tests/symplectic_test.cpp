#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/symplectic.hpp"

using namespace qphase4;

namespace {

const Gf4 o = Gf4::zero(), l = Gf4::one(), w = Gf4::omega(), wb = Gf4::omega_bar();

SympMat G() { return SympMat::from_matrix({wb, o, o, w}); }

}  // namespace

TEST(Symplectic, RejectsNonUnitDeterminant) {
    EXPECT_THROW(SympMat::from_matrix({l, l, l, l}), DomainError);
    EXPECT_THROW(SympMat::from_matrix({w, o, o, w}), DomainError);
    EXPECT_NO_THROW(SympMat::from_matrix({w, o, o, wb}));
}

TEST(Symplectic, Shears) {
    EXPECT_EQ(shear(o), SympMat());
    EXPECT_EQ(shear(l).matrix(), (Gf4Mat2{l, o, l, l}));
    EXPECT_EQ(shear(w) * shear(wb), shear(l));
    for (Gf4 x : kGf4Elements)
        for (Gf4 y : kGf4Elements) EXPECT_EQ(shear(x) * shear(y), shear(x + y));
}

TEST(Symplectic, Rotation) {
    EXPECT_EQ(rotation().matrix(), (Gf4Mat2{wb, l, l, o}));
    EXPECT_EQ(power(rotation(), 5), SympMat());
    for (int k = 1; k < 5; ++k) EXPECT_NE(power(rotation(), k), SympMat());
    EXPECT_EQ(rotation() * shear(wb) * rotation(), shear(wb));
    EXPECT_EQ((rotation() * Gf4Vec2{l, o}), (Gf4Vec2{wb, l}));
    EXPECT_EQ(rotation_power(-1) * rotation(), SympMat());
}

TEST(Symplectic, GroupEnumerationMatchesBruteForce) {
    const auto group = enumerate_group();
    ASSERT_EQ(group.size(), 60u);
    std::set<SympMat> distinct(group.begin(), group.end());
    EXPECT_EQ(distinct.size(), 60u);
    EXPECT_TRUE(distinct.count(SympMat()));
    int brute = 0;
    for (int code = 0; code < 256; ++code) {
        const oracle::M2 m{code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3};
        if (oracle::det(m) != 1) continue;
        ++brute;
        const SympMat s = SympMat::from_matrix(
            {oracle::to_gf4(m.a), oracle::to_gf4(m.b), oracle::to_gf4(m.c), oracle::to_gf4(m.d)});
        EXPECT_TRUE(distinct.count(s));
    }
    EXPECT_EQ(brute, 60);
}

TEST(Symplectic, EnumerationOrderFollowsTheFamilies) {
    const auto group = enumerate_group();
    for (int s = 0; s < 5; ++s) {
        EXPECT_EQ(group[s], rotation_power(s));
        EXPECT_EQ(group[5 + s], shear(wb) * rotation_power(s));
    }
    EXPECT_EQ(group[10], shear(l));
    EXPECT_EQ(group[11], rotation() * shear(l));
    EXPECT_EQ(group[15], shear(l) * rotation());
    EXPECT_EQ(group[35], shear(w));
}

TEST(Symplectic, ClosedUnderProductsAndInverses) {
    const auto group = enumerate_group();
    std::set<SympMat> distinct(group.begin(), group.end());
    for (const SympMat& a : group) {
        EXPECT_EQ(inverse(a) * a, SympMat());
        EXPECT_TRUE(distinct.count(inverse(a)));
        for (const SympMat& b : group) EXPECT_TRUE(distinct.count(a * b));
    }
    EXPECT_EQ(rotation() * inverse(rotation()), SympMat());
    EXPECT_EQ(shear(l) * shear(l), SympMat());
    EXPECT_EQ(inverse(G()).matrix(), (Gf4Mat2{w, o, o, wb}));
}

TEST(Symplectic, DecomposeWorkedExample) {
    const Decomposition d = decompose(G());
    EXPECT_EQ(d.r, 2);
    EXPECT_EQ(d.x, l);
    EXPECT_EQ(d.s, 1);
    EXPECT_EQ(to_string(d), "R^2 H_1 R^1");
    EXPECT_EQ(to_string(decompose(SympMat())), "R^0 H_0 R^0");
}

TEST(Symplectic, DecomposeRoundTripsAndIsCanonical) {
    std::set<Decomposition> seen;
    for (const SympMat& m : enumerate_group()) {
        const Decomposition d = decompose(m);
        EXPECT_EQ(reconstruct(d), m);
        const oracle::M2 om = oracle::from(m);
        EXPECT_EQ(oracle::mul(oracle::pow(oracle::rot(), d.r),
                              oracle::mul(oracle::shear(d.x.code()), oracle::pow(oracle::rot(), d.s))),
                  om);
        if (d.x == o || d.x == wb) {
            EXPECT_EQ(d.r, 0);
        }
        EXPECT_GE(d.r, 0);
        EXPECT_LT(d.r, 5);
        EXPECT_GE(d.s, 0);
        EXPECT_LT(d.s, 5);
        seen.insert(d);
    }
    EXPECT_EQ(seen.size(), 60u);
}

TEST(Symplectic, DecompositionListMatchesGroupOrder) {
    const auto decs = group_decompositions();
    const auto group = enumerate_group();
    ASSERT_EQ(decs.size(), group.size());
    for (std::size_t j = 0; j < decs.size(); ++j) EXPECT_EQ(reconstruct(decs[j]), group[j]);
}

TEST(Symplectic, TextForm) { EXPECT_EQ(to_string(G()), "[[W,0],[0,w]]"); }
