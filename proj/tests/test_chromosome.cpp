#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "firesched/chromosome.hpp"

using namespace firesched;

namespace {

TwoPartChromosome fifteen_fire_chromosome() {
  return {{10, 3, 9, 8, 2, 15, 4, 6, 1, 12, 13, 14, 7, 11, 5}, {3, 2, 4, 3, 3}};
}

}  // namespace

TEST_CASE("decode splits the permutation by route lengths") {
  const RoutePlan plan = decode(fifteen_fire_chromosome());
  REQUIRE(plan.routes.size() == 5);
  CHECK(plan.routes[0] == std::vector<int>{10, 3, 9});
  CHECK(plan.routes[1] == std::vector<int>{8, 2});
  CHECK(plan.routes[2] == std::vector<int>{15, 4, 6, 1});
  CHECK(plan.routes[3] == std::vector<int>{12, 13, 14});
  CHECK(plan.routes[4] == std::vector<int>{7, 11, 5});
}

TEST_CASE("decode edge shapes") {
  const RoutePlan single = decode({{2, 1, 3}, {3}});
  REQUIRE(single.routes.size() == 1);
  CHECK(single.routes[0] == std::vector<int>{2, 1, 3});

  const RoutePlan singletons = decode({{3, 1, 2}, {1, 1, 1}});
  REQUIRE(singletons.routes.size() == 3);
  CHECK(singletons.routes[0] == std::vector<int>{3});
  CHECK(singletons.routes[1] == std::vector<int>{1});
  CHECK(singletons.routes[2] == std::vector<int>{2});
}

TEST_CASE("decode rejects invalid chromosomes") {
  CHECK_THROWS_AS(decode({{1, 1, 2}, {2, 1}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(decode({{1, 2, 4}, {2, 1}}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(decode({{1, 2, 3}, {2, 2}}), std::invalid_argument);  // bad sum
  CHECK_THROWS_AS(decode({{1, 2, 3}, {0, 3}}), std::invalid_argument);  // zero length
  CHECK_THROWS_AS(decode({{1, 2, 3}, {}}), std::invalid_argument);      // no routes
}

TEST_CASE("encode inverts decode") {
  const TwoPartChromosome c = fifteen_fire_chromosome();
  CHECK(encode(decode(c)) == c);

  RoutePlan plan;
  plan.routes = {{2, 5}, {1}, {4, 3}};
  CHECK(decode(encode(plan)) == plan);
}

TEST_CASE("encode rejects broken plans") {
  RoutePlan empty_route;
  empty_route.routes = {{1, 2}, {}};
  CHECK_THROWS_AS(encode(empty_route), std::invalid_argument);

  RoutePlan missing_fire;
  missing_fire.routes = {{1, 2}, {4}};  // ids must be 1..3
  CHECK_THROWS_AS(encode(missing_fire), std::invalid_argument);

  RoutePlan duplicated;
  duplicated.routes = {{1, 2}, {2, 3}};
  CHECK_THROWS_AS(encode(duplicated), std::invalid_argument);
}

TEST_CASE("random chromosomes are valid and reproducible") {
  Rng rng_a(42), rng_b(42);
  for (int i = 0; i < 100; ++i) {
    const TwoPartChromosome a = random_chromosome(15, 5, rng_a);
    const TwoPartChromosome b = random_chromosome(15, 5, rng_b);
    CHECK(a == b);
    CHECK(is_valid(a));
  }

  Rng rng(1);
  const TwoPartChromosome forced = random_chromosome(5, 5, rng);
  CHECK(forced.route_lengths == std::vector<int>{1, 1, 1, 1, 1});

  CHECK_THROWS_AS(random_chromosome(2, 3, rng), std::invalid_argument);
}

TEST_CASE("route-length compositions are uniform") {
  // Compositions of 6 into 2 positive parts: (1,5)..(5,1), five in total.
  constexpr int kSamples = 10000;
  Rng rng(2024);
  std::map<std::vector<int>, int> counts;
  for (int i = 0; i < kSamples; ++i)
    ++counts[random_chromosome(6, 2, rng).route_lengths];
  REQUIRE(counts.size() == 5);
  // Binomial(10^4, 1/5): sigma = sqrt(n*p*(1-p)) = 40; accept within 3 sigma.
  for (const auto& [lengths, count] : counts) {
    CHECK(count > kSamples / 5 - 120);
    CHECK(count < kSamples / 5 + 120);
  }
}

TEST_CASE("repair keeps first occurrences and fills missing ids") {
  const TwoPartChromosome fixed = repair({2, 2, 3}, {2, 1});
  CHECK(fixed.task_order == std::vector<int>{2, 3, 1});
  CHECK(is_valid(fixed));
}

TEST_CASE("repair rebalances route lengths") {
  const TwoPartChromosome fixed = repair({1, 2, 3}, {0, 5});
  CHECK(fixed.route_lengths == std::vector<int>{1, 2});
  CHECK(is_valid(fixed));

  const TwoPartChromosome grown = repair({3, 1, 2, 4}, {1, 1});
  CHECK(grown.route_lengths == std::vector<int>{2, 2});
}

TEST_CASE("repair leaves valid input unchanged and is idempotent") {
  const TwoPartChromosome c = fifteen_fire_chromosome();
  CHECK(repair(c.task_order, c.route_lengths) == c);

  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> raw_order(12), raw_lengths(4);
    for (int& id : raw_order) id = 1 + static_cast<int>(rng.uniform_int(12));
    for (int& len : raw_lengths) len = static_cast<int>(rng.uniform_int(9)) - 2;
    const TwoPartChromosome once = repair(raw_order, raw_lengths);
    CHECK(is_valid(once));
    CHECK(repair(once.task_order, once.route_lengths) == once);
  }
}
