#include <doctest.h>

#include <random>

#include "vconf/enumeration.hpp"
#include "vconf/error.hpp"
#include "vconf/numeric.hpp"
#include "vconf/ray_partition.hpp"
#include "vconf/shape.hpp"
#include "vconf/space_profile.hpp"

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

Block blk(std::initializer_list<std::pair<int, int>> ids) {
  Block b;
  for (auto [i, j] : ids) b.push_back(TableIndex{i, j});
  return b;
}

}  // namespace

TEST_CASE("exact integers and rationals") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(8) == 40320);
  CHECK(factorial(21) > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);

  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-2.50") == Rational(-5, 2));
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::ParseError);

  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");

  CHECK(isqrt(BigInt(24)) == 4);
  CHECK(isqrt(BigInt(25)) == 5);
  Rational root;
  CHECK(exact_rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(exact_rational_sqrt(Rational(2), root));
}

TEST_CASE("cluster shapes") {
  const auto shape = ClusterShape::parse("3,4,2,2");
  CHECK(shape.clusters() == 4);
  CHECK(shape.total() == 11);
  CHECK(shape.multiplicity(2) == 2);
  CHECK(shape.multiplicity(5) == 0);
  int weighted = 0;
  for (auto [k, count] : shape.multiplicities()) weighted += k * count;
  CHECK(weighted == shape.total());
  CHECK(shape.to_string() == "3,4,2,2");

  CHECK(shape.ordinal({1, 1}) == 0);
  CHECK(shape.ordinal({2, 1}) == 3);
  CHECK(shape.at(3) == TableIndex{2, 1});
  CHECK_FALSE(shape.contains({1, 4}));
  CHECK(code_of([&] { shape.ordinal({5, 1}); }) == ErrorCode::IndexOutOfShape);

  CHECK(code_of([] { ClusterShape({2, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ClusterShape::parse("2,x"); }) == ErrorCode::ParseError);
  CHECK(ClusterShape::parse("").total() == 0);

  CHECK(TableIndex{1, 2} < TableIndex{2, 1});
  CHECK(TableIndex{2, 1} < TableIndex{2, 2});
  CHECK(to_string(TableIndex{3, 4}) == "3.4");
}

TEST_CASE("ray partition validation") {
  const ClusterShape s21({2, 1});
  const ClusterShape s2({2});

  const auto q = RayPartition::validate(s21, {blk({{1, 1}, {2, 1}}), blk({{1, 2}})});
  CHECK(q.length() == 2);
  CHECK(q.to_string() == "1.1 2.1 | 1.2");
  CHECK(RayPartition::parse(s21, "1.1 2.1 | 1.2") == q);

  CHECK(code_of([&] { RayPartition::validate(s2, {blk({{1, 2}, {1, 1}})}); }) == ErrorCode::R2Violation);
  CHECK(code_of([&] { RayPartition::validate(s2, {blk({{1, 2}}), blk({{1, 1}})}); }) == ErrorCode::R1Violation);
  CHECK(code_of([&] { RayPartition::validate(s2, {blk({{1, 1}})}); }) == ErrorCode::NotAPartition);
  CHECK(code_of([&] { RayPartition::validate(s2, {blk({{1, 1}, {1, 1}, {1, 2}})}); }) == ErrorCode::NotAPartition);
  CHECK(code_of([&] { RayPartition::validate(s2, {blk({{1, 1}, {1, 2}, {1, 3}})}); }) == ErrorCode::IndexOutOfShape);
  CHECK(code_of([&] { RayPartition::validate(s2, {blk({{1, 1}, {1, 2}}), Block{}}); }) == ErrorCode::NotAPartition);
  CHECK(code_of([&] { RayPartition::parse(s2, "1.1 |"); }) == ErrorCode::ParseError);
}

TEST_CASE("ray partition stats") {
  const ClusterShape s21({2, 1});
  const auto q = RayPartition::parse(s21, "1.1 2.1 | 1.2");
  const auto st = ray_partition_stats(q, 1, 2);
  CHECK(st.length == 2);
  CHECK(st.agility == 1);
  CHECK(st.weight == WeightVector({2, 1}));
  CHECK(st.degree == 2);
  CHECK(st.stratum_dim == 6);
  CHECK(st.degree + st.stratum_dim == 1 * 2 + 2 * 3);

  const ClusterShape s2({2});
  const auto one_block = ray_partition_stats(RayPartition::parse(s2, "1.1 1.2"), 3, 1);
  CHECK(one_block.sigma.is_identity());
  CHECK(one_block.degree == 0);

  const auto split = ray_partition_stats(RayPartition::parse(s2, "1.1 | 1.2"), 3, 1);
  CHECK(split.sigma == ComponentLabel({{2, 1}}));
  CHECK(split.agility == 1);
  CHECK(split.degree == 0);
}

TEST_CASE("ray partition invariants over small shapes") {
  for (const auto& sizes : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 2, 1}, {1, 1, 1, 1}}) {
    const ClusterShape shape(sizes);
    const int r = shape.clusters();
    for_each_ray_partition(shape, [&](const RayPartition& q) {
      for (int p = 0; p <= 2; ++p)
        for (int qq = 1; qq <= 3; ++qq) {
          const auto st = ray_partition_stats(q, p, qq);
          CHECK(st.degree + st.stratum_dim == p * r + qq * shape.total());
          if (qq == 1 && p > 0) CHECK(st.degree % p == 0);
        }
      const int a = agility(q);
      CHECK(a >= 1);
      CHECK(a <= std::min(q.length(), r));
      if (a == r)
        for (const auto& b : q.blocks())
          for (const auto& idx : b) CHECK(idx.cluster == b.front().cluster);
      CHECK_NOTHROW(RayPartition::validate(shape, q.blocks()));
    });
    Block all;
    for (int o = 0; o < shape.total(); ++o) all.push_back(shape.at(o));
    CHECK(component_label(RayPartition::validate(shape, {all})).is_identity());
  }
}

TEST_CASE("weight comparison") {
  CHECK(compare_weights(WeightVector({3}), WeightVector({2, 1})) == std::strong_ordering::greater);
  CHECK(compare_weights(WeightVector({1, 2}), WeightVector({1, 1, 1})) == std::strong_ordering::greater);
  CHECK(compare_weights(WeightVector({2, 1}), WeightVector({2, 1})) == std::strong_ordering::equal);
  CHECK(code_of([] { compare_weights(WeightVector({2}), WeightVector({1, 2})); }) == ErrorCode::TotalMismatch);
  CHECK(WeightVector({1, 2}).to_string() == "(1,2)");

  // Total order on random compositions of 6.
  std::mt19937_64 rng(7);
  auto random_weight = [&] {
    std::vector<int> parts;
    int left = 6;
    while (left > 0) {
      const int part = std::uniform_int_distribution<int>(1, left)(rng);
      parts.push_back(part);
      left -= part;
    }
    return WeightVector(parts);
  };
  for (int i = 0; i < 300; ++i) {
    const auto a = random_weight(), b = random_weight(), c = random_weight();
    const auto ab = compare_weights(a, b);
    CHECK(compare_weights(b, a) == (ab == std::strong_ordering::less      ? std::strong_ordering::greater
                                    : ab == std::strong_ordering::greater ? std::strong_ordering::less
                                                                          : std::strong_ordering::equal));
    if (ab == std::strong_ordering::equal) CHECK(a == b);
    if (ab != std::strong_ordering::greater && compare_weights(b, c) != std::strong_ordering::greater)
      CHECK(compare_weights(a, c) != std::strong_ordering::greater);
  }
}

TEST_CASE("component labels") {
  const ClusterShape shape({3, 2});
  CHECK(ComponentLabel::parse(shape, "id") == ComponentLabel::identity(shape));
  const auto label = ComponentLabel::parse(shape, "2,3,1;1,2");
  CHECK(label.to_string() == "(2,3,1) (1,2)");
  CHECK(label.fits(shape));
  CHECK_FALSE(label.is_identity());
  CHECK(code_of([&] { ComponentLabel::parse(shape, "1,1,2;1,2"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { ComponentLabel::parse(shape, "1,2"); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("space profile") {
  const auto big = space_profile(ClusterShape({3, 4, 2, 2}), 1, 1);
  CHECK(big.dimension == 15);
  CHECK_FALSE(big.unordered_orientable);

  CHECK(space_profile(ClusterShape({2, 1}), 1, 1).ordered_components == 2);
  CHECK(space_profile(ClusterShape({2, 1}), 0, 1).unordered_components == 3);
  CHECK(space_profile(ClusterShape({2, 1}), 0, 1).ordered_components == 6);
  CHECK(space_profile(ClusterShape({2, 1}), 1, 2).ordered_components == 1);
  CHECK(space_profile(ClusterShape({2, 1}), 1, 2).unordered_components == 1);
  CHECK(space_profile(ClusterShape({2}), 0, 3).unordered_orientable == false);
  CHECK(space_profile(ClusterShape({1, 1}), 0, 2).unordered_orientable == true);
}
