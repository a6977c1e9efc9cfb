#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "qphase4/io.hpp"
#include "qphase4/render.hpp"

namespace q = qphase4;

namespace {

const q::Gf4 k0 = q::Gf4::zero();
const q::Gf4 k1 = q::Gf4::one();
const q::Gf4 kw = q::Gf4::omega();
const q::Gf4 kW = q::Gf4::omega_bar();

template <typename T>
T round_trip(const T& value) {
    return q::json::parse(q::json(value).dump()).get<T>();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Json, RoundTripsFieldAndGroupTypes) {
    for (q::Gf4 x : q::kGf4Elements) EXPECT_EQ(round_trip(x), x);
    for (q::Gf4Vec2 a : q::kAllPoints) EXPECT_EQ(round_trip(a), a);
    for (const q::SympMat& l : q::enumerate_group()) {
        EXPECT_EQ(round_trip(l), l);
        EXPECT_EQ(round_trip(q::index_operator(l)), q::index_operator(l));
        EXPECT_EQ(round_trip(q::shift_vector(l)), q::shift_vector(l));
        EXPECT_EQ(round_trip(q::unitary_for(l)), q::unitary_for(l));
    }
    EXPECT_EQ(round_trip(q::Line{3, kw}), (q::Line{3, kw}));
}

TEST(Json, RoundTripsTablesAndScalars) {
    const q::DensityState rho = q::DensityState::from_vector(q::ExactVector({1, q::ExactScalar::i(), 0, 1}));
    for (const q::Index& f : {q::Index{}, q::Index{{k0, kw, k1, k0, k1}}}) {
        const q::WignerTable t = q::wigner_table(rho, f);
        EXPECT_EQ(round_trip(t), t);
    }
    const q::ExactScalar z(q::Rational(-3, 8), q::Rational(5, 2));
    EXPECT_EQ(round_trip(z), z);
    EXPECT_EQ(q::json::parse("\"1/2-i\"").get<q::ExactScalar>(), q::ExactScalar(q::Rational(1, 2), -1));
    EXPECT_EQ(q::json::parse("3").get<q::ExactScalar>(), q::ExactScalar(3));
}

TEST(Json, TableLayoutIsTopRowFirst) {
    const q::WignerTable t = q::wigner_table(q::DensityState::product(q::Arrow::kUp, q::Arrow::kRight), q::Index{});
    const q::json j = t;
    EXPECT_EQ(j.at("values").size(), 4u);
    EXPECT_EQ(q::detail::rational_from_json(j["values"][0][0]), t.at({k0, kW}));
    EXPECT_EQ(q::detail::rational_from_json(j["values"][3][2]), t.at({kw, k0}));
}

TEST(Parse, Scalars) {
    EXPECT_EQ(q::parse_scalar("3"), q::ExactScalar(3));
    EXPECT_EQ(q::parse_scalar("-1/2"), q::ExactScalar(q::Rational(-1, 2)));
    EXPECT_EQ(q::parse_scalar("i"), q::ExactScalar::i());
    EXPECT_EQ(q::parse_scalar("-i/2"), q::ExactScalar(0, q::Rational(-1, 2)));
    EXPECT_EQ(q::parse_scalar("1/2+1/2i"), q::ExactScalar(q::Rational(1, 2), q::Rational(1, 2)));
    EXPECT_EQ(q::parse_scalar("1-i"), q::ExactScalar(1, -1));
    for (const char* bad : {"", "x", "1/0", "1//2", "2i3"}) EXPECT_THROW(q::parse_scalar(bad), q::ParseError) << bad;
}

TEST(Parse, MatricesAndOperations) {
    EXPECT_EQ(q::parse_matrix("[[W,0],[0,w]]"), (q::Gf4Mat2{kW, k0, k0, kw}));
    EXPECT_EQ(q::parse_matrix("[[ 1 , 0 ] , [ 1 , 1 ]]"), (q::Gf4Mat2{k1, k0, k1, k1}));
    EXPECT_THROW(q::parse_matrix("[[1,0],[1]]"), q::ParseError);
    EXPECT_THROW(q::parse_matrix("1,0,0,1"), q::ParseError);

    EXPECT_EQ(std::get<q::SympMat>(q::parse_operation("R")), q::rotation());
    EXPECT_EQ(std::get<q::SympMat>(q::parse_operation("H1")), q::shear(k1));
    EXPECT_EQ(std::get<q::SympMat>(q::parse_operation("I")), q::SympMat());
    EXPECT_EQ(std::get<q::Gf4Vec2>(q::parse_operation("D(1,w)")), (q::Gf4Vec2{k1, kw}));
    EXPECT_THROW(q::parse_operation("Q"), q::ParseError);
    EXPECT_THROW(q::parse_symplectic("D(1,w)"), q::ParseError);
    EXPECT_THROW(q::parse_symplectic("[[1,1],[1,1]]"), q::DomainError);
}

TEST(Parse, States) {
    const q::DensityState ur = q::DensityState::product(q::Arrow::kUp, q::Arrow::kRight);
    EXPECT_EQ(q::parse_state("up,right"), ur);
    EXPECT_EQ(q::parse_state("up*right"), ur);
    EXPECT_EQ(q::parse_state("mixed"), q::DensityState::maximally_mixed());
    EXPECT_EQ(q::parse_state("vec:-1,0,0,1"), q::DensityState::from_vector(q::ExactVector({-1, 0, 0, 1})));
    EXPECT_THROW(q::parse_state(""), q::ParseError);
    EXPECT_THROW(q::parse_state("sideways,up"), q::ParseError);
    EXPECT_THROW(q::parse_state("vec:1,0,0"), q::ParseError);
    EXPECT_THROW(q::parse_state("vec:0,0,0,0"), q::InvalidState);
}

TEST(Parse, StateFiles) {
    const q::DensityState ur = q::DensityState::product(q::Arrow::kUp, q::Arrow::kRight);
    EXPECT_EQ(q::parse_state("@" + write_temp("p.json", R"({"product":["up","right"]})")), ur);
    EXPECT_EQ(q::parse_state("@" + write_temp("v.json", R"({"vector":["1","0","0","i"]})")),
              q::DensityState::from_vector(q::ExactVector({1, 0, 0, q::ExactScalar::i()})));
    EXPECT_EQ(q::parse_state("@" + write_temp("d.json",
                                              R"({"density":[["1/2",0,0,0],[0,0,0,0],[0,0,"1/2",0],[0,0,0,0]]})")),
              q::DensityState::from_matrix(q::ExactOperator{
                  {q::Rational(1, 2), 0, 0, 0}, {0, 0, 0, 0}, {0, 0, q::Rational(1, 2), 0}, {0, 0, 0, 0}}));
    EXPECT_THROW(q::parse_state("@" + write_temp("bad.json", "{not json")), q::ParseError);
    EXPECT_THROW(q::parse_state("@" + write_temp("empty.json", "{}")), q::ParseError);
    EXPECT_THROW(q::parse_state("@/nonexistent/state.json"), q::ParseError);
}

TEST(DensityState, RejectsInvalidMatrices) {
    const q::Rational h(1, 2);
    EXPECT_THROW(q::DensityState::from_matrix(q::ExactOperator::identity()), q::InvalidState);
    EXPECT_THROW(q::DensityState::from_matrix(q::ExactOperator{{h, 1, 0, 0}, {0, h, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                 q::InvalidState);
    EXPECT_THROW(q::DensityState::from_matrix(q::ExactOperator{{h, 1, 0, 0}, {1, h, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                 q::InvalidState);
    EXPECT_THROW(q::DensityState::from_matrix(
                     q::ExactOperator{{q::Rational(3, 2), 0, 0, 0}, {0, q::Rational(-1, 2), 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                 q::InvalidState);
    EXPECT_NO_THROW(q::DensityState::from_matrix(q::ExactOperator{{h, h, 0, 0}, {h, h, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST(Render, DisplayWidthIgnoresCombiningMarks) {
    EXPECT_EQ(q::detail::display_width("w~"), 2u);
    EXPECT_EQ(q::detail::display_width("\xcf\x89\xcc\x84"), 1u);
    EXPECT_EQ(q::detail::display_width("\xe2\x86\x91\xe2\x86\x92"), 2u);
}

TEST(Render, StandardTableLabels) {
    const q::WignerFrame& fr = q::frame(q::Index{});
    const char* rows[] = {">>", "<<", "><", "<>"};
    const char* cols[] = {"^^", "vv", "^v", "v^"};
    for (int j = 0; j < 4; ++j) {
        EXPECT_EQ(q::row_label(fr, q::kGf4Elements[j], q::TextStyle::kAscii), rows[j]);
        EXPECT_EQ(q::column_label(fr, q::kGf4Elements[j], q::TextStyle::kAscii), cols[j]);
    }
}
