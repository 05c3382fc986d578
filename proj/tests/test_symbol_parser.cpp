#include <gtest/gtest.h>

#include <numbers>

#include "bdbar/domains.hpp"
#include "bdbar/symbol_parser.hpp"

using namespace bdbar;

namespace {

const DomainSpec kDisc{DomainKind::Disc};
const DomainSpec kBall{DomainKind::Ball2};
const DomainSpec kPolydisc{DomainKind::Polydisc2};

MixedPoly mono(std::vector<unsigned> a, std::vector<unsigned> b, GaussianRational c = GaussianRational(1)) {
  return MixedPoly::monomial(MixedKey{MultiIndex(std::move(a)), MultiIndex(std::move(b))}, std::move(c));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(SymbolParser, Arithmetic) {
  EXPECT_EQ(parse_mixed(kDisc, "conj(z)*z^2 - 2/3*z"), mono({2}, {1}) - mono({1}, {0}, GaussianRational(make_rational(2, 3))));
  EXPECT_EQ(parse_mixed(kDisc, "(z + 1)^2"), mono({2}, {0}) + mono({1}, {0}, GaussianRational(2)) + mono({0}, {0}));
  EXPECT_EQ(parse_mixed(kDisc, "-z/4"), mono({1}, {0}, GaussianRational(make_rational(-1, 4))));
  EXPECT_EQ(parse_mixed(kBall, "z1*conj(z2) + 2i*z2"),
            mono({1, 0}, {0, 1}) + mono({0, 1}, {0, 0}, GaussianRational(Rational(0), Rational(2))));
}

TEST(SymbolParser, DecimalsAreExact) {
  EXPECT_EQ(parse_mixed(kDisc, "0.25*z"), mono({1}, {0}, GaussianRational(make_rational(1, 4))));
  EXPECT_EQ(parse_mixed(kDisc, "1e-2"), mono({0}, {0}, GaussianRational(make_rational(1, 100))));
  EXPECT_EQ(parse_mixed(kDisc, "1.5e1*i"), mono({0}, {0}, GaussianRational(Rational(0), Rational(15))));
}

TEST(SymbolParser, ConjugationOfExpressions) {
  EXPECT_EQ(parse_mixed(kDisc, "conj(i*z^2)"), mono({0}, {2}, GaussianRational(Rational(0), Rational(-1))));
}

TEST(SymbolParser, BasisElements) {
  EXPECT_EQ(parse_holo(kDisc, "u(3)"), orthonormal_basis_element(kDisc, MultiIndex{3}));
  EXPECT_EQ(parse_holo(kPolydisc, "u(1,2)"), orthonormal_basis_element(kPolydisc, MultiIndex{1, 2}));
  EXPECT_EQ(parse_holo(kBall, "U(2,0)"), orthonormal_basis_element(kBall, MultiIndex{2, 0}));
  EXPECT_EQ(parse_holo(kBall, "e(2,0)"), orthonormal_basis_element(kBall, MultiIndex{2, 0}));
  EXPECT_EQ(parse_holo(kDisc, "2*u(1)"), orthonormal_basis_element(kDisc, MultiIndex{1}) * GaussianRational(2));
  EXPECT_THROW(parse_holo(kBall, "u(1,1)"), Error);
  EXPECT_THROW(parse_holo(kDisc, "U(1)"), Error);
}

TEST(SymbolParser, Errors) {
  EXPECT_EQ(code_of([] { parse_holo(kDisc, "conj(z)"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_mixed(kDisc, "z1"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_mixed(kBall, "z"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_mixed(kDisc, "z +"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_mixed(kDisc, "(z"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_mixed(kDisc, "1/z"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_mixed(kDisc, "z/0"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_mixed(kDisc, "z^1000"); }), ErrorCode::Parse);
}

TEST(SymbolParser, FormsAndMaps) {
  const Form01 g = parse_form(kBall, "z1; z1*z2");
  ASSERT_EQ(g.dim(), 2u);
  EXPECT_EQ(g[1], HoloPoly::monomial(MultiIndex{1, 1}));
  EXPECT_THROW(parse_form(kBall, "z1"), Error);
  EXPECT_THROW(parse_form(kBall, "conj(z1); 0"), Error);
  const auto map = parse_map(kPolydisc, "z2; z1^2");
  ASSERT_EQ(map.size(), 2u);
  EXPECT_EQ(map[1], HoloPoly::monomial(MultiIndex{2, 0}));
}

TEST(SymbolParser, ComplexNumbers) {
  EXPECT_EQ(parse_complex("0.3"), Complex(0.3, 0.0));
  EXPECT_EQ(parse_complex("0.3+0i"), Complex(0.3, 0.0));
  EXPECT_EQ(parse_complex("0.5i"), Complex(0.0, 0.5));
  EXPECT_EQ(parse_complex("-0.2-0.3i"), Complex(-0.2, -0.3));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_THROW(parse_complex("0.3+"), Error);
  EXPECT_THROW(parse_complex("abc"), Error);
}

TEST(SymbolParser, PointsAndLists) {
  const auto p = parse_point(kBall, "0.3, 0.1-0.2i");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1], Complex(0.1, -0.2));
  EXPECT_EQ(code_of([] { parse_point(kBall, "0.3"); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(parse_real_list("0.9,0.99, 0.999"), (std::vector<double>{0.9, 0.99, 0.999}));
  EXPECT_THROW(parse_real_list("0.9,,1"), Error);
}
