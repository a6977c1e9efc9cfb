#include <gtest/gtest.h>

#include <random>

#include "qphase4/exact.hpp"

namespace q = qphase4;

namespace {

q::ExactScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 8);
    return {q::Rational(num(rng), den(rng)), q::Rational(num(rng), den(rng))};
}

q::ExactOperator random_operator(std::mt19937& rng) {
    q::ExactOperator a;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) a(r, c) = random_scalar(rng);
    return a;
}

}  // namespace

TEST(ExactScalar, RingAxiomsOnRandomSamples) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_scalar(rng);
        const auto b = random_scalar(rng);
        const auto c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, q::ExactScalar());
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ(a * a.conj(), q::ExactScalar(a.norm2()));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(ExactScalar, DivisionByZeroIsDomainError) {
    EXPECT_THROW(q::ExactScalar(1) / q::ExactScalar(), q::DomainError);
}

TEST(ExactScalar, TextForm) {
    EXPECT_EQ(q::to_string(q::ExactScalar()), "0");
    EXPECT_EQ(q::to_string(q::ExactScalar(q::Rational(-1, 2))), "-1/2");
    EXPECT_EQ(q::to_string(q::ExactScalar::i()), "i");
    EXPECT_EQ(q::to_string(-q::ExactScalar::i()), "-i");
    EXPECT_EQ(q::to_string(q::ExactScalar(q::Rational(1, 2), q::Rational(-1, 2))), "1/2-1/2i");
    EXPECT_EQ(q::to_string(q::ExactScalar(0, q::Rational(3, 4))), "3/4i");
}

TEST(Phase, PowersOfI) {
    for (int k = -8; k <= 8; ++k) {
        q::ExactScalar expect = 1;
        for (int j = 0; j < ((k % 4) + 4) % 4; ++j) expect *= q::ExactScalar::i();
        EXPECT_EQ(q::Phase::from_power(k).value(), expect) << k;
        EXPECT_EQ((q::Phase::from_power(k) * q::Phase::from_power(1)).value(), expect * q::ExactScalar::i());
    }
}

TEST(ExactMatrix, AlgebraOnRandomSamples) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_operator(rng);
        const auto b = random_operator(rng);
        const auto c = random_operator(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
        EXPECT_EQ(q::trace_of_product(a, b), (a * b).trace());
        EXPECT_EQ(q::trace_of_product(a, b), q::trace_of_product(b, a));
        EXPECT_EQ(q::determinant(a * b), q::determinant(a) * q::determinant(b));
        EXPECT_EQ(a * q::ExactOperator::identity(), a);
    }
}

TEST(ExactMatrix, KronAndProportional) {
    const q::Matrix<2> x{{0, 1}, {1, 0}};
    const q::Matrix<2> z{{1, 0}, {0, -1}};
    const q::ExactOperator xz = q::kron(x, z);
    EXPECT_EQ(xz(0, 2), q::ExactScalar(1));
    EXPECT_EQ(xz(1, 3), q::ExactScalar(-1));
    EXPECT_EQ(xz * xz, q::ExactOperator::identity());

    const auto p = q::proportional(q::ExactScalar::i() * xz, xz);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->k, 1);
    EXPECT_FALSE(q::proportional(q::ExactScalar(2) * xz, xz).has_value());
    EXPECT_FALSE(q::proportional(q::ExactOperator(), xz).has_value());
    EXPECT_THROW(q::proportional(q::ExactOperator(), q::ExactOperator()), q::DomainError);
}

TEST(ExactMatrix, PowerAndConjugate) {
    const q::Matrix<2> x{{0, 1}, {1, 0}};
    EXPECT_EQ(q::power(x, 0), (q::Matrix<2>::identity()));
    EXPECT_EQ(q::power(x, 3), x);
    const q::Matrix<2> s{{1, 0}, {0, q::ExactScalar::i()}};
    const q::Matrix<2> y{{0, -q::ExactScalar::i()}, {q::ExactScalar::i(), 0}};
    EXPECT_EQ(q::conjugate(s, x), y);
}

TEST(ExactVector, InnerAndNorm) {
    const q::ExactVector v({1, q::ExactScalar::i(), 0, -1});
    EXPECT_EQ(v.norm2(), q::Rational(3));
    EXPECT_EQ(q::inner(v, v), q::ExactScalar(3));
    EXPECT_EQ(q::inner(q::ExactVector::basis(1), v), q::ExactScalar::i());
    EXPECT_EQ(q::inner(v, q::ExactVector::basis(1)), -q::ExactScalar::i());
    EXPECT_TRUE(q::ExactVector().is_zero());
}
