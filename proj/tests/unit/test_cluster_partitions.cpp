#include <doctest.h>

#include "vconf/cluster_partitions.hpp"
#include "vconf/error.hpp"

using namespace vconf;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

std::vector<std::string> names(const std::vector<IrreduciblePartition>& parts) {
  std::vector<std::string> out;
  for (const auto& e : parts) out.push_back(e.to_string());
  return out;
}

using Xi = std::vector<std::vector<Rational>>;

RationalPoint y2(Rational x, Rational t) { return make_point({x, t}); }

}  // namespace

TEST_CASE("irreducible partitions") {
  CHECK(enumerate_irreducible(1, 1).size() == 1);
  for (int w = 2; w <= 6; ++w) CHECK(enumerate_irreducible(1, w).empty());
  CHECK(names(enumerate_irreducible(2, 2)) == std::vector<std::string>{"13|24", "14|23"});
  CHECK(enumerate_irreducible(2, 3).size() == 10);
  CHECK(enumerate_irreducible(3, 2).size() == 9);

  CHECK(code_of([] { IrreduciblePartition::make(2, {{1, 2}, {3, 4}}); }) == ErrorCode::NotAnIrreduciblePartition);
  CHECK(code_of([] { IrreduciblePartition::make(2, {{1, 2}, {3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { IrreduciblePartition::make(2, {{1, 5}, {2, 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { enumerate_irreducible(3, 5); }) == ErrorCode::SizeGuard);
  CHECK_NOTHROW(enumerate_irreducible(1, 15, IrreducibleLimits{15}));

  const auto e = IrreduciblePartition::make(2, {{4, 2}, {3, 1}});
  CHECK(e.blocks() == BlockList{{1, 3}, {2, 4}});
  CHECK(e.weight() == 2);
  CHECK(IrreduciblePartition::base(3).is_base());
  CHECK(IrreduciblePartition::base(3).to_string() == "123");
  CHECK(enumerate_irreducible(2, 5)[0].to_string() == "1,3|2,5|4,7|6,9|8,10");
}

TEST_CASE("reducibility test") {
  CHECK(is_reducible(2, {{1, 2}, {3, 4}}));
  CHECK_FALSE(is_reducible(2, {{1, 3}, {2, 4}}));
  CHECK(is_reducible(2, {{1, 3}, {2, 4}, {5, 6}}));
  CHECK_FALSE(is_reducible(1, {{1}}));
}

TEST_CASE("standard groups") {
  const auto base = standard_group(IrreduciblePartition::base(2), {}, 1);
  REQUIRE(base.clusters().size() == 1);
  CHECK(base.point({1, 1}) == y2(0, Rational(-1, 3)));
  CHECK(base.point({1, 2}) == y2(0, Rational(1, 3)));

  const auto e = IrreduciblePartition::make(2, {{1, 3}, {2, 4}});
  const auto zero = standard_group(e, Xi{{0}}, 1);
  CHECK(zero.point({1, 1}).t() == Rational(-3, 5));
  CHECK(zero.point({1, 2}).t() == Rational(1, 5));
  CHECK(zero.point({2, 1}).t() == Rational(-1, 5));
  CHECK(zero.point({2, 2}).t() == Rational(3, 5));
  CHECK(dexterity(zero).dexterity == 1);

  const auto moved = standard_group(e, Xi{{Rational(1, 2)}}, 1);
  CHECK(moved.point({2, 1}).coords[0] == Rational(1, 2));
  CHECK(dexterity(moved).dexterity == 2);

  CHECK(code_of([&] { standard_group(e, Xi{}, 1); }) == ErrorCode::WrongParameterCount);
  CHECK(code_of([&] { standard_group(e, Xi{{Rational(3, 2)}}, 1); }) == ErrorCode::DiscViolation);
  CHECK(code_of([&] { standard_group(e, Xi{{Rational(3, 5), Rational(4, 5)}}, 1); }) == ErrorCode::DimensionMismatch);
  CHECK_NOTHROW(standard_group(e, Xi{{Rational(3, 5), Rational(4, 5)}}, 2));
  CHECK(code_of([&] { standard_group(e, Xi{{Rational(3, 5), Rational(5, 6)}}, 2); }) == ErrorCode::DiscViolation);
}

TEST_CASE("insertion map") {
  const auto e0 = IrreduciblePartition::base(2);
  const auto single = LabeledConfiguration::make(1, 2, {LabeledPoint{y2(0, 0), e0, {}}});
  CHECK(insertion_radius(single) == 1);
  const auto img = insertion_map(single);
  CHECK(img.point({1, 1}) == y2(0, Rational(-1, 3)));
  CHECK(img.point({1, 2}) == y2(0, Rational(1, 3)));

  const auto two = LabeledConfiguration::make(1, 2, {LabeledPoint{y2(0, 0), e0, {}}, LabeledPoint{y2(10, 0), e0, {}}});
  CHECK(insertion_radius(two) == 2);
  const auto img2 = insertion_map(two);
  CHECK(img2.point({1, 1}) == y2(0, Rational(-2, 3)));
  CHECK(img2.point({2, 2}) == y2(10, Rational(2, 3)));
  CHECK(dexterity(img2).dexterity == 2);

  const auto e = IrreduciblePartition::make(2, {{1, 3}, {2, 4}});
  const auto tangled = LabeledConfiguration::make(1, 2, {LabeledPoint{y2(0, 0), e, Xi{{0}}}});
  CHECK(tangled.r() == 2);
  CHECK(tangled.s() == 1);
  CHECK(dexterity(insertion_map(tangled)).dexterity == 1);

  // Product distance takes the larger of the two parts.
  const auto mixed = LabeledConfiguration::make(1, 2, {LabeledPoint{y2(0, 0), e0, {}}, LabeledPoint{y2(1, 3), e0, {}}});
  CHECK(insertion_radius(mixed) == Rational(3, 5));

  // Irrational distance: a rational lower bound within 2^-40.
  const auto diag = LabeledConfiguration::make(2, 1,
                                               {LabeledPoint{make_point({0, 0, 0}), IrreduciblePartition::base(1), {}},
                                                LabeledPoint{make_point({1, 1, 0}), IrreduciblePartition::base(1), {}}});
  const Rational rho = insertion_radius(diag);
  CHECK(25 * rho * rho <= 2);
  const Rational above = rho + Rational(1, BigInt(1) << 39);
  CHECK(25 * above * above > 2);

  CHECK(code_of([&] {
          LabeledConfiguration::make(1, 2, {LabeledPoint{y2(0, 0), e0, {}}, LabeledPoint{y2(0, 0), e0, {}}});
        }) == ErrorCode::CollisionError);
  CHECK(code_of([&] { LabeledConfiguration::make(1, 3, {LabeledPoint{y2(0, 0), e0, {}}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { LabeledConfiguration::make(1, 2, {LabeledPoint{make_point({0}), e0, {}}}); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { LabeledConfiguration::make(1, 2, {LabeledPoint{y2(0, 0), e, Xi{{2}}}}); }) ==
        ErrorCode::DiscViolation);
}

TEST_CASE("labelled stabilisation") {
  const auto e = IrreduciblePartition::make(2, {{1, 4}, {2, 3}});
  const auto theta = LabeledConfiguration::make(1, 2, {LabeledPoint{y2(3, 1), e, Xi{{0}}}});
  const auto stab = stabilise_labeled(theta);
  CHECK(stab.points().size() == 2);
  CHECK(stab.points()[1].y == y2(5, 0));
  CHECK(stab.points()[1].label.is_base());
  CHECK(stab.r() == theta.r() + 1);
  CHECK(stab.s() == theta.s());
  CHECK(dexterity(insertion_map(stab)).dexterity == dexterity(insertion_map(theta)).dexterity + 1);
}

TEST_CASE("distributions") {
  const auto trivial = enumerate_distributions(2, 2, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].to_string() == "2x12");
  CHECK(enumerate_distributions(3, 2, 0)[0].multiplicity(IrreduciblePartition::base(3)) == 2);

  const auto d21 = enumerate_distributions(2, 2, 1);
  REQUIRE(d21.size() == 2);
  CHECK(d21[0].to_string() == "1x13|24");
  CHECK(d21[1].to_string() == "1x14|23");

  const auto d31 = enumerate_distributions(2, 3, 1);
  REQUIRE(d31.size() == 2);
  for (const auto& alpha : d31) {
    CHECK(alpha.multiplicity(IrreduciblePartition::base(2)) == 1);
    CHECK(alpha.r() == 3);
    CHECK(alpha.s() == 1);
  }
  CHECK(enumerate_distributions(1, 3, 1).empty());
  CHECK(code_of([] { enumerate_distributions(2, 1, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { enumerate_distributions(5, 6, 2); }) == ErrorCode::SizeGuard);

  for (const auto& alpha : enumerate_distributions(2, 4, 2)) {
    const auto bigger = alpha.plus_base(2);
    CHECK(bigger.r() == alpha.r() + 1);
    CHECK(bigger.s() == alpha.s());
  }
  const auto all = enumerate_distributions(2, 5, 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(code_of([] { Distribution({{IrreduciblePartition::base(1), -1}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("orientation character") {
  const auto e = IrreduciblePartition::make(2, {{1, 3}, {2, 4}});
  const Distribution two_e({{e, 2}});
  CHECK(orientation_character(two_e, 1, {{1, 2}}) == 1);
  CHECK(orientation_character(two_e, 1, {{2, 1}}) == -1);
  CHECK(orientation_character(two_e, 3, {{2, 1}}) == -1);
  CHECK(orientation_character(two_e, 2, {{2, 1}}) == 1);
  const Distribution with_base({{e, 2}, {IrreduciblePartition::base(2), 2}});
  // Terms are ordered by weight, so the base partition comes first; its
  // exponent is zero.
  REQUIRE(with_base.terms()[0].first.is_base());
  CHECK(orientation_character(with_base, 1, {{2, 1}, {1, 2}}) == 1);
  CHECK(orientation_character(with_base, 1, {{2, 1}, {2, 1}}) == -1);
  CHECK(code_of([&] { orientation_character(two_e, 1, {}); }) == ErrorCode::SupportMismatch);
  CHECK(code_of([&] { orientation_character(two_e, 1, {{1, 1}}); }) == ErrorCode::SupportMismatch);
  CHECK(permutation_sign({3, 1, 2}) == 1);
  CHECK(permutation_sign({1, 3, 2}) == -1);
}

TEST_CASE("stability range") {
  CHECK(stability_range(7) == 3);
  CHECK(stability_range(0) == 0);
  for (int m = 0; m < 10; ++m) CHECK(stability_range(2 * m) == m);
  CHECK(code_of([] { stability_range(-1); }) == ErrorCode::InvalidArgument);
}
