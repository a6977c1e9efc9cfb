#include <gtest/gtest.h>

#include "qphase4/single_qubit.hpp"

namespace q = qphase4;
namespace sq = qphase4::single_qubit;

TEST(SingleQubit, GeneratorsAreUnitary) {
    EXPECT_TRUE(sq::rotation_unitary().is_unitary());
    EXPECT_TRUE(sq::swap_unitary().is_unitary());
}

TEST(SingleQubit, PhasePointOperatorsFormABasis) {
    for (int sign : {1, -1}) {
        q::Matrix<2> sum;
        for (sq::BitPoint a : sq::kPoints) {
            sum = sum + sq::phase_point(a, sign);
            EXPECT_EQ(sq::phase_point(a, sign).trace(), q::ExactScalar(1));
            for (sq::BitPoint b : sq::kPoints) {
                EXPECT_EQ(q::trace_of_product(sq::phase_point(a, sign), sq::phase_point(b, sign)),
                          q::ExactScalar(a == b ? 2 : 0));
            }
        }
        EXPECT_EQ(sum, q::ExactScalar(2) * q::Matrix<2>::identity());
    }
}

TEST(SingleQubit, RotationPermutesPointsAndSwapNeedsTildeFrame) {
    const sq::Report r = sq::single_qubit_demo();
    EXPECT_TRUE(r.xyz_cycle);
    EXPECT_EQ(r.rotation_points, 4);
    EXPECT_EQ(r.reinterpret_checks, 16);
    EXPECT_EQ(r.rotation_bloch_det, q::Rational(1));
    EXPECT_EQ(r.swap_bloch_det, q::Rational(1));
    EXPECT_EQ(r.required_bloch_det, q::Rational(-1));
}

TEST(SingleQubit, SwapDoesNotPermuteStandardPoints) {
    const sq::ScaledUnitary uf = sq::swap_unitary();
    bool all_permuted = true;
    for (sq::BitPoint a : sq::kPoints) {
        const q::Matrix<2> moved = uf.conjugate(sq::phase_point(a, 1));
        bool found = false;
        for (sq::BitPoint b : sq::kPoints) found = found || moved == sq::phase_point(b, 1);
        all_permuted = all_permuted && found;
    }
    EXPECT_FALSE(all_permuted);
}

TEST(SingleQubit, PointMaps) {
    EXPECT_EQ((sq::kRotation * sq::BitPoint{1, 0}), (sq::BitPoint{1, 1}));
    EXPECT_EQ((sq::kSwap * sq::BitPoint{1, 0}), (sq::BitPoint{0, 1}));
    for (sq::BitPoint a : sq::kPoints) EXPECT_EQ(sq::kSwap * sq::preimage(sq::kSwap, a), a);
}
