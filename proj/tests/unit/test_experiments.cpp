#include <algorithm>
#include <random>

#include "doctest.h"
#include "editdiam/classify.hpp"
#include "editdiam/distance.hpp"
#include "editdiam/error.hpp"
#include "editdiam/experiments.hpp"
#include "editdiam/language.hpp"
#include "editdiam/perron.hpp"
#include "oracles.hpp"
#include "verify/fixtures.hpp"

using namespace editdiam;

namespace {

RkEstimate fixture_r2() {
  const auto rows = verify::read_fixture_rows(std::filesystem::path(EDITDIAM_TEST_DATA_DIR) / "fixtures" / verify::kMuR2Fixture);
  return rk_assemble(2, 2.0, verify::parse_r2_rows(rows));
}

}  // namespace

TEST_CASE("integer ranges for base 2") {
  CHECK(rk_range(2, 2.0) == std::pair<std::uint64_t, std::uint64_t>{16, 512});
  CHECK(rk_range(3, 2.0) == std::pair<std::uint64_t, std::uint64_t>{512, 65536});
  CHECK_THROWS_AS(rk_range(1, 2.0), InputError);
  CHECK_THROWS_AS(rk_range(2, 1.5), InputError);
}

TEST_CASE("Fibonacci ranges are Lucas numbers") {
  // lambda = phi^2 and lambda^m = L_{2m} - lambda^{-m}, so ceil(lambda^m) = L_{2m}.
  const double lambda = perron(oracle::load("fibonacci.sub")).lambda;
  for (unsigned k = 2; k <= 3; ++k) {
    const auto [lo, hi] = rk_range(k, lambda);
    CHECK(lo == oracle::lucas(2 * k * k));
    CHECK(hi == oracle::lucas(2 * (k + 1) * (k + 1)));
  }
  CHECK(rk_range(2, lambda).first == 47);
  CHECK(rk_range(2, lambda).second == 5778);
}

TEST_CASE("geometric n values") {
  const auto ns = geometric_n_values(512, 65536, 8);
  CHECK(ns.size() == 8);
  CHECK(ns.front() == 512);
  CHECK(std::is_sorted(ns.begin(), ns.end()));
  CHECK(std::adjacent_find(ns.begin(), ns.end()) == ns.end());
  CHECK(ns.back() < 65536);
  CHECK(geometric_n_values(10, 12, 8) == std::vector<std::size_t>{10, 11});
}

TEST_CASE("estimates only grow as points are added") {
  std::mt19937_64 rng(77);
  std::vector<RkPoint> pts;
  Rational prev(0);
  for (std::size_t n = 16; n < 64; ++n) {
    pts.push_back({n, HalfDistance(rng() % (2 * n + 1)), true});
    const RkEstimate e = rk_assemble(2, 2.0, pts);
    CHECK(e.value >= prev);
    prev = e.value;
    CHECK_FALSE(e.exact);
  }
  CHECK_THROWS_AS(rk_assemble(2, 2.0, {{8, HalfDistance(2), true}}), InputError);
  CHECK_THROWS_AS(rk_assemble(2, 2.0, {{20, HalfDistance(2), true}, {20, HalfDistance(4), true}}), InputError);
}

TEST_CASE("ties go to the smaller n") {
  const RkEstimate e = rk_assemble(2, 2.0, {{40, HalfDistance(20), true}, {20, HalfDistance(10), true}});
  CHECK(e.argmax_n == 20);
  CHECK(e.value == Rational(1, 4));
}

TEST_CASE("FULL substitutions have ratio one") {
  SamplingSpec spec;
  spec.allow_sampling = false;
  const RkEstimate e = rk_estimate(oracle::load("constant.sub"), 2, 2.0, spec);
  CHECK(e.exact);
  CHECK(e.value == Rational(1));
  CHECK(e.evaluated.size() == 512 - 16);
  for (const auto& p : e.evaluated) CHECK(p.diam.doubled() == 2 * p.n);
}

TEST_CASE("sampling needs permission") {
  SamplingSpec spec;
  spec.allow_sampling = false;
  CHECK_THROWS_AS(rk_estimate(oracle::load("tm.sub"), 3, 2.0, spec), InputError);
}

TEST_CASE("sampled estimates are deterministic across thread counts") {
  SamplingSpec spec;
  spec.force_sample = true;
  spec.n_count = 3;
  spec.pairs_per_n = 20;
  spec.seed = 99;
  ParallelOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const Substitution tm = oracle::load("tm.sub");
  const RkEstimate a = rk_estimate(tm, 3, 2.0, spec, one);
  const RkEstimate b = rk_estimate(tm, 3, 2.0, spec, four);
  const RkEstimate c = rk_estimate(tm, 3, 2.0, spec, one);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.argmax_n == b.argmax_n);
  CHECK_FALSE(a.exact);
  for (std::size_t i = 0; i < a.evaluated.size(); ++i) {
    CHECK(a.evaluated[i].diam == b.evaluated[i].diam);
    CHECK(a.evaluated[i].diam.doubled() <= 2 * a.evaluated[i].n);
  }
}

TEST_CASE("the r_2 fixture") {
  const RkEstimate r2 = fixture_r2();
  CHECK(r2.exact);
  CHECK(r2.evaluated.size() == 496);
  CHECK(r2.value < Rational(1));
  // Spot rows against the naive diameter oracle.
  const auto rules = oracle::rules_of(oracle::load("tm.sub"));
  for (std::size_t i : {0, 1, 2, 10}) {
    const auto& p = r2.evaluated[i];
    CHECK(p.diam.doubled() == oracle::doubled_diameter(oracle::factors(rules, p.n, 12)));
  }
}

TEST_CASE("sampled distances beyond the range stay under r_2") {
  const RkEstimate r2 = fixture_r2();
  const Substitution tm = oracle::load("tm.sub");
  std::mt19937_64 rng(13);
  for (std::size_t n : {512, 700, 1500}) {
    const FactorSampler sampler(tm, n);
    for (int t = 0; t < 40; ++t) {
      const Word a = sampler.draw(rng), b = sampler.draw(rng);
      CHECK(Rational(std::int64_t(indel_distance(a, b).doubled()), 2 * std::int64_t(n)) <= r2.value);
    }
  }
}

TEST_CASE("recursion arithmetic") {
  const Substitution tm = oracle::load("tm.sub");
  const RkEstimate r2 = fixture_r2();
  const RkEstimate r3 = rk_assemble(3, 2.0, {{1000, HalfDistance(300), false}});
  const RecursionReport rep = rk_recursion_check(tm, r2, r3);
  CHECK(rep.ell == 2);
  CHECK(rep.rhs == Rational(1, 4) + Rational(7, 8) * r2.value);
  CHECK(rep.lhs == Rational(3, 20));
  CHECK(rep.status == RecursionStatus::consistent);
  REQUIRE(rep.decay_bound);
  CHECK(*rep.decay_bound == doctest::Approx(3 * 0.875 * 0.875 * 0.875));

  const RkEstimate big = rk_assemble(3, 2.0, {{1000, HalfDistance(2000), false}});
  CHECK(rk_recursion_check(tm, r2, big).status == RecursionStatus::violation_candidate);
  CHECK(to_string(RecursionStatus::inconclusive) == "INCONCLUSIVE");
  CHECK_THROWS_AS(rk_recursion_check(oracle::load("fibonacci.sub"), r2, r3), DomainError);
  CHECK_THROWS_AS(rk_recursion_check(tm, r2, r2), InputError);
}

TEST_CASE("words of sigma and sigma^p") {
  CHECK(words_power_equality(oracle::load("fibonacci.sub"), 10));
  CHECK(words_power_equality(oracle::load("tribonacci.sub"), 8));
  CHECK_THROWS_AS(words_power_equality(oracle::load("swap.sub"), 4), DomainError);
}

TEST_CASE("diameter curve") {
  const std::vector<std::size_t> ns{8, 16, 32, 64};
  const DiamCurve curve = diam_curve(oracle::load("tm.sub"), ns, CurveMode{});
  REQUIRE(curve.rows.size() == 4);
  CHECK(curve.rows[0].envelope == doctest::Approx(curve.rows[0].diam.value()));
  for (const auto& r : curve.rows) {
    CHECK(r.exact);
    CHECK(r.ratio <= 1.0);
  }
  CHECK(curve.alpha.has_value());
  CHECK_THROWS_AS(diam_curve(oracle::load("constant.sub"), ns, CurveMode{}), DomainError);
  CHECK_NOTHROW(diam_curve(oracle::load("ab.sub"), ns, CurveMode{}));
}
