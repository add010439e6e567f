#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "editdiam/distance.hpp"
#include "editdiam/error.hpp"
#include "editdiam/thue_morse.hpp"
#include "oracles.hpp"

using namespace editdiam;

TEST_CASE("prefix bits are binary digit-sum parities") {
  const Word x = tm_prefix(1000000);
  REQUIRE(x.size() == 1000000);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != Letter(oracle::tm_bit(i))) ++bad;
  CHECK(bad == 0);
  CHECK_THROWS_AS(tm_prefix(0), InputError);
  CHECK_THROWS_AS(tm_prefix(100, 50), ResourceError);
}

TEST_CASE("complement symmetry") {
  const Word x = tm_prefix(300);
  const Word xb = complement(x);
  for (std::size_t n : {1, 7, 64, 100, 255, 300}) {
    const WordView a = WordView(x).first(n), b = WordView(xb).first(n);
    const HalfDistance d = indel_distance(a, b);
    CHECK(d == indel_distance(b, a));
    CHECK(d == indel_distance(complement(a), complement(b)));
  }
}

TEST_CASE("growth records") {
  std::vector<std::size_t> ns;
  for (std::size_t n = 1; n <= 600; ++n) ns.push_back(n);
  const auto recs = tm_growth(ns);
  const Word x = tm_prefix(600);
  const Word xb = complement(x);
  for (const auto& r : recs) {
    CHECK(prop_c_holds(r.n, r.dE));
    CHECK(r.bb <= r.n);
    CHECK(r.bb + r.dE.doubled() / 2 == r.n);
    CHECK(r.dE.integral());
    if (r.n % 37 == 0) {
      std::string a, b;
      for (std::size_t i = 0; i < r.n; ++i) {
        a += char('0' + x[i]);
        b += char('0' + xb[i]);
      }
      CHECK(r.dE.doubled() == oracle::doubled_distance(a, b));
    }
  }
  CHECK(recs[0].dE.doubled() == 2);
}

TEST_CASE("the lower bound check is exact") {
  // 6 (2d + 2)^2 >= 4n at the boundary: d = 0 allows n <= 6.
  CHECK(prop_c_holds(6, HalfDistance(0)));
  CHECK_FALSE(prop_c_holds(7, HalfDistance(0)));
  CHECK(prop_c_holds(24, HalfDistance(2)));
  CHECK_FALSE(prop_c_holds(25, HalfDistance(2)));
}

TEST_CASE("envelope values") {
  CHECK(blikstad_envelope(256, 1.0) == doctest::Approx(22.072654665003167).epsilon(1e-12));
  CHECK(blikstad_envelope(4096, 2.0) == doctest::Approx(2 * 197.38884246675198).epsilon(1e-12));
  CHECK(blikstad_envelope(1000000, 1.0) == doctest::Approx(18070.84352161243).epsilon(1e-12));
  CHECK(blikstad_envelope(1, 1.0) == 0.0);

  std::vector<std::size_t> ns{2, 16, 256, 1024};
  auto recs = tm_growth(ns);
  const double c = fit_envelope_constant(recs);
  rescale_envelope(recs, c);
  for (const auto& r : recs) CHECK(r.dE.value() <= r.upper * (1 + 1e-12));
  CHECK(std::any_of(recs.begin(), recs.end(), [](const GrowthRecord& r) { return r.dE.value() >= r.upper * (1 - 1e-12); }));
}

TEST_CASE("b-file lines") {
  const std::vector<std::size_t> ns{1, 2, 3};
  std::ostringstream out;
  write_bfile(out, tm_growth(ns));
  CHECK(out.str() == "1 0\n2 1\n3 1\n");
}

TEST_CASE("growth exponent estimate") {
  std::vector<std::size_t> ns;
  for (unsigned e = 2; e <= 12; ++e) {
    ns.push_back(std::size_t{1} << e);
    ns.push_back(std::size_t{3} << e);
  }
  const GrowthSlopes s = growth_exponent_estimate(tm_growth(ns));
  CHECK(s.upper > 0.5);
  CHECK(s.upper < 1.0);
  CHECK(s.lower > 0.5);
  CHECK(s.lower < 1.0);

  const std::vector<std::size_t> few{4, 8, 16};
  CHECK_THROWS_AS(growth_exponent_estimate(tm_growth(few)), InputError);
  std::vector<std::size_t> narrow{8, 9, 10, 11, 12, 13, 14, 15, 16};
  CHECK_THROWS_AS(growth_exponent_estimate(tm_growth(narrow)), InputError);
}

TEST_CASE("the word is overlap-free") {
  const auto patterns = overlap_patterns(4);
  CHECK(std::find(patterns.begin(), patterns.end(), Word{0, 1, 0, 1, 0}) != patterns.end());
  CHECK(std::find(patterns.begin(), patterns.end(), Word{1, 1, 1}) != patterns.end());
  for (const auto& h : forbidden_pattern_scan(100000, patterns)) CHECK(h.positions.empty());
}

TEST_CASE("pattern scan finds every occurrence") {
  const Word x = tm_prefix(5000);
  std::vector<Word> pats{{0, 0}, {1, 0, 1, 1}, {0, 1, 1, 0, 1, 0, 0, 1}};
  const auto hits = forbidden_pattern_scan(5000, pats);
  for (std::size_t p = 0; p < pats.size(); ++p) {
    std::vector<std::size_t> expect;
    for (std::size_t i = 0; i + pats[p].size() <= x.size(); ++i)
      if (std::equal(pats[p].begin(), pats[p].end(), x.begin() + i)) expect.push_back(i);
    CHECK(hits[p].positions == expect);
  }
}

TEST_CASE("complement never matches a nearby shift") {
  CHECK(shift_property_check(256, 32).empty());
  const auto unit = unit_shift_matches(256, 4);
  CHECK(unit.size() == 5);
  CHECK(unit[4].empty());
  // Short factors do match their complement under a unit shift, e.g. 01 vs 10.
  CHECK_FALSE(unit[2].empty());
  for (const Word& w : unit[2]) CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
}
