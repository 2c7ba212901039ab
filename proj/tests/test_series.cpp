#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qtile/series.hpp"
#include "qtile/series_io.hpp"

using namespace qtile;

namespace {

Series poly(std::size_t qmax, std::vector<Term> terms) { return Series::from_terms(qmax, std::move(terms)); }

Series random_series(std::mt19937& rng, std::size_t qmax) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::size_t> count(0, 10);
  std::uniform_int_distribution<std::size_t> qdeg(0, qmax);
  std::vector<Term> terms;
  for (std::size_t n = count(rng); n > 0; --n) {
    const std::size_t q = qdeg(rng);
    terms.push_back(Term{q, std::uniform_int_distribution<std::size_t>(0, q)(rng), coeff(rng)});
  }
  return poly(qmax, std::move(terms));
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(Series::one(3) == poly(3, {{0, 0, 1}}));
  CHECK(Series::zero(3).is_zero());

  const Series big = Series::from_monomial({12, 127, 1}, 200);
  REQUIRE(big.size() == 1);
  CHECK(big.terms()[0] == Term{127, 12, 1});

  CHECK(Series::from_monomial({2, 5, 1}, 3).is_zero());
}

TEST_CASE("canonical form drops zeros and merges duplicates") {
  const Series s = poly(5, {{2, 1, 3}, {2, 1, -3}, {1, 0, 2}, {1, 0, 1}, {7, 0, 1}});
  REQUIRE(s.size() == 1);
  CHECK(s.terms()[0] == Term{1, 0, 3});
}

TEST_CASE("two-factor product") {
  const Series a = poly(3, {{0, 0, 1}, {1, 1, 1}});
  const Series b = poly(3, {{0, 0, 1}, {2, 1, 1}});
  CHECK(mul(a, b) == poly(3, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 2, 1}}));
}

TEST_CASE("additive inverse") {
  const Series a = poly(6, {{0, 0, 4}, {3, 2, -7}, {5, 1, 1}});
  CHECK(add(a, negate(a)).is_zero());
  CHECK((a - a).is_zero());
}

TEST_CASE("four distinct factors against subset enumeration") {
  Series product = Series::one(4);
  for (std::size_t i = 1; i <= 4; ++i) product = product * poly(4, {{0, 0, 1}, {i, 1, 1}});
  const Series expected = poly(4, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {3, 2, 1}, {4, 1, 1}, {4, 2, 1}});
  CHECK(oracle::distinct_parts_by_subsets(4) == oracle::from_series(expected));
  CHECK(product == expected);
  CHECK(pochhammer_neg_zq(4, 4) == expected);
}

TEST_CASE("truncation mismatch is an error") {
  CHECK_THROWS_AS(Series::one(3) + Series::one(4), SeriesError);
  CHECK_THROWS_WITH_AS(Series::one(3) * Series::one(4), doctest::Contains("truncation mismatch"), SeriesError);
}

TEST_CASE("coefficients are exact beyond 64 bits") {
  const Integer huge = parse_integer("123456789012345678901234567890");
  const Series s = Series::from_monomial({0, 0, huge}, 2);
  const Series sq = s * s;
  CHECK(sq.coefficient(0, 0) == huge * huge);
  CHECK(to_decimal(sq.coefficient(0, 0)) == "15241578753238836750495351562536198787501905199875019052100");
}

TEST_CASE("substitute_z") {
  const Series s = poly(3, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {3, 2, 1}});
  CHECK(s.substitute_z(-1) == poly(3, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}}));
  CHECK(s.substitute_z(1) == poly(3, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 2}}));
  CHECK(Series::zero(3).substitute_z(-1).is_zero());
  CHECK_THROWS_AS(s.substitute_z(2), SeriesError);
}

TEST_CASE("pochhammer_neg_zq") {
  CHECK(pochhammer_neg_zq(0, 5) == Series::one(5));
  // (q;q)_7 mod q^8 by naive expansion.
  const auto expected = oracle::q_pochhammer(7, 7);
  CHECK(expected == oracle::univariate({{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}}));
  CHECK(oracle::from_series(pochhammer_neg_zq(7, 7).substitute_z(-1)) == expected);
  CHECK(oracle::from_series(pochhammer_neg_zq(14, 14)) == oracle::distinct_parts_by_subsets(14));
}

TEST_CASE("q_pochhammer") {
  CHECK(q_pochhammer(2, 3) == poly(3, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}, {3, 0, 1}}));
  CHECK(q_pochhammer(0, 10) == Series::one(10));
  CHECK(oracle::from_series(q_pochhammer(3, 6)) == oracle::q_pochhammer(3, 6));
  CHECK(q_pochhammer(3, 6) ==
        poly(6, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}, {4, 0, 1}, {5, 0, 1}, {6, 0, -1}}));
}

TEST_CASE("inv_q_pochhammer") {
  CHECK(inv_q_pochhammer(1, 3) == poly(3, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}}));
  CHECK(mul(q_pochhammer(3, 8), inv_q_pochhammer(3, 8)) == Series::one(8));
  const Series two = inv_q_pochhammer(2, 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(two.coefficient(n, 0) == oracle::restricted_partitions(n, 2));
  }
  CHECK(two == poly(4, {{0, 0, 1}, {1, 0, 1}, {2, 0, 2}, {3, 0, 2}, {4, 0, 3}}));
}

TEST_CASE("shifted Pochhammer pair") {
  // (q^3;q)_2 = (1 - q^3)(1 - q^4)
  CHECK(q_shifted_pochhammer(3, 2, 10) == poly(10, {{0, 0, 1}, {3, 0, -1}, {4, 0, -1}, {7, 0, 1}}));
  CHECK(q_shifted_pochhammer(3, 2, 10) * inv_q_shifted_pochhammer(3, 2, 10) == Series::one(10));
  CHECK_THROWS_AS(q_shifted_pochhammer(0, 1, 4), SeriesError);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t qmax = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    const Series a = random_series(rng, qmax), b = random_series(rng, qmax), c = random_series(rng, qmax);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(oracle::from_series(a * b) == oracle::mul(oracle::from_series(a), oracle::from_series(b), qmax));
  }
}

TEST_CASE("truncation coherence") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t qmax = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const std::size_t lower = std::uniform_int_distribution<std::size_t>(0, qmax - 1)(rng);
    std::vector<Series> factors;
    for (int i = 0; i < 3; ++i) factors.push_back(random_series(rng, qmax));
    Series high = Series::one(qmax), low = Series::one(lower);
    for (const auto& f : factors) {
      high = high * f;
      low = low * f.truncated(lower);
    }
    CHECK(high.truncated(lower) == low);
  }
  CHECK(pochhammer_neg_zq(30, 30).truncated(12) == pochhammer_neg_zq(30, 12));
}

TEST_CASE("inverse property for all 0 <= n <= N <= 40") {
  for (std::size_t N = 0; N <= 40; ++N) {
    for (std::size_t n = 0; n <= N; ++n) {
      REQUIRE(mul(q_pochhammer(n, N), inv_q_pochhammer(n, N)) == Series::one(N));
    }
  }
}

TEST_CASE("stability in n and triangularity") {
  for (std::size_t qmax : {0u, 1u, 5u, 17u, 30u}) {
    const Series base = pochhammer_neg_zq(qmax, qmax);
    CHECK(pochhammer_neg_zq(qmax + 1, qmax) == base);
    CHECK(pochhammer_neg_zq(2 * qmax + 7, qmax) == base);
    for (std::size_t n = 0; n <= qmax; ++n) CHECK(pochhammer_neg_zq(n, qmax).is_triangular());
  }
}

TEST_CASE("JSON and CSV serialization") {
  const Series s = poly(4, {{0, 0, 1}, {3, 1, -2}, {3, 2, 5}, {4, 1, 1}});
  const auto j = series_to_json(s);
  CHECK(j.dump() ==
        R"({"qmax":4,"terms":[{"c":"1","q":0,"z":0},{"c":"-2","q":3,"z":1},{"c":"5","q":3,"z":2},{"c":"1","q":4,"z":1}]})");
  CHECK(series_to_csv(s) == "q_deg,z_deg,coeff\n0,0,1\n3,1,-2\n3,2,5\n4,1,1\n");

  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t qmax = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    const Series r = random_series(rng, qmax) * random_series(rng, qmax);
    CHECK(series_from_json(nlohmann::json::parse(series_to_json(r).dump())) == r);
    CHECK(series_from_csv(series_to_csv(r), qmax) == r);
  }
  CHECK_THROWS_AS(series_from_csv("q,z,c\n", 3), SeriesError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"qmax", 2}}), SeriesError);
  CHECK_THROWS_AS(parse_integer("12a"), SeriesError);
}

TEST_CASE("human format") {
  CHECK(series_to_human(pochhammer_neg_zq(4, 4)) == "1 + z q + z q^2 + (z + z^2) q^3 + (z + z^2) q^4");
  CHECK(series_to_human(q_pochhammer(3, 6)) == "1 - q - q^2 + q^4 + q^5 - q^6");
  CHECK(series_to_human(poly(3, {{3, 0, 2}, {3, 1, -3}})) == "(2 - 3 z) q^3");
  CHECK(series_to_human(Series::zero(2)) == "0");
}
