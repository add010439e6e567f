#include <random>

#include "doctest.h"
#include "editdiam/diameter.hpp"
#include "editdiam/distance.hpp"
#include "editdiam/language.hpp"
#include "editdiam/lcs.hpp"
#include "editdiam/parallel.hpp"
#include "oracles.hpp"

using namespace editdiam;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t sigma) {
  Word w(len);
  for (auto& c : w) c = static_cast<Letter>(uniform_below(rng, sigma));
  return w;
}

std::string text(const Word& w) {
  std::string s;
  for (auto c : w) s += char('a' + c);
  return s;
}

}  // namespace

TEST_CASE("worked examples") {
  const Alphabet digits({"0", "1", "2", "3", "4"});
  CHECK(indel_distance(digits.parse_word("10002"), digits.parse_word("03004")).doubled() == 4);
  CHECK(indel_distance(digits.parse_word("000"), digits.parse_word("111")).doubled() == 6);
  CHECK(HalfDistance(3).to_string() == "3/2");
  CHECK(HalfDistance(4).to_string() == "2");
}

TEST_CASE("engines agree with a textbook LCS table") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t sigma = 2 + uniform_below(rng, 4);
    const Word x = random_word(rng, uniform_below(rng, 200), sigma);
    const Word y = random_word(rng, uniform_below(rng, 200), sigma);
    const std::size_t expect = oracle::lcs(text(x), text(y));
    CHECK(lcs_length(x, y, LcsEngine::dp) == expect);
    CHECK(lcs_length(x, y, LcsEngine::bitparallel) == expect);
    CHECK(lcs_length(x, y, LcsEngine::band) == expect);
    CHECK(BitParallelLcs(x).lcs(y) == expect);
  }
}

TEST_CASE("edge lengths") {
  const Word empty, a{0}, aa{0, 0}, ab{0, 1};
  CHECK(indel_distance(empty, empty).doubled() == 0);
  CHECK(indel_distance(empty, aa).doubled() == 2);
  CHECK(indel_distance(a, ab).doubled() == 1);
  Word long_x(130, 0), long_y(130, 0);
  long_y[64] = 1;
  CHECK(lcs_length(long_x, long_y, LcsEngine::bitparallel) == 129);
}

TEST_CASE("BFS oracle on short pairs") {
  std::mt19937_64 rng(303);
  for (int t = 0; t < 500; ++t) {
    const std::size_t total = uniform_below(rng, 17);
    const std::size_t lx = uniform_below(rng, total + 1);
    const Word x = random_word(rng, lx, 2 + uniform_below(rng, 2));
    const Word y = random_word(rng, total - lx, 2 + uniform_below(rng, 2));
    CHECK(indel_distance_oracle(x, y) == indel_distance(x, y));
  }
}

TEST_CASE("band engine honours max_ops") {
  const Word x{0, 0, 0, 0}, y{1, 1, 1, 1};
  CHECK(indel_ops_band(x, y) == 8);
  CHECK_FALSE(indel_ops_band(x, y, 7).has_value());
  CHECK(indel_ops_band(x, x, 0) == 0);
}

TEST_CASE("metric axioms and parity") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t sigma = 2 + uniform_below(rng, 3);
    const Word x = random_word(rng, uniform_below(rng, 40), sigma);
    const Word y = random_word(rng, uniform_below(rng, 40), sigma);
    const Word z = random_word(rng, uniform_below(rng, 40), sigma);
    const HalfDistance dxy = indel_distance(x, y);
    CHECK(dxy == indel_distance(y, x));
    CHECK((dxy.doubled() == 0) == (x == y));
    CHECK(indel_distance(x, z) <= dxy + indel_distance(y, z));
    CHECK(dxy.doubled() % 2 == (x.size() + y.size()) % 2);
    if (x.size() == y.size()) CHECK(dxy.integral());
  }
}

TEST_CASE("concatenation is subadditive") {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 300; ++t) {
    const Word x = random_word(rng, uniform_below(rng, 20), 2), y = random_word(rng, uniform_below(rng, 20), 2);
    const Word xt = random_word(rng, uniform_below(rng, 20), 2), yt = random_word(rng, uniform_below(rng, 20), 2);
    CHECK(subadditivity_check(x, y, xt, yt));
  }
}

TEST_CASE("pruned and unpruned diameters agree") {
  const Substitution tm = oracle::load("tm.sub");
  for (std::size_t n = 1; n <= 32; ++n) {
    CAPTURE(n);
    const LanguageSet set = language(tm, n);
    const DiameterReport pruned = diameter(set, DiameterMode::exhaustive(true));
    const DiameterReport full = diameter(set, DiameterMode::exhaustive(false));
    CHECK(pruned.value == full.value);
    CHECK(pruned.witness_first == full.witness_first);
    CHECK(pruned.witness_second == full.witness_second);
    CHECK(full.pairs_pruned == 0);
    CHECK(pruned.pairs_evaluated + pruned.pairs_pruned == set.size() * (set.size() - 1) / 2);
    CHECK(indel_distance(pruned.witness_first, pruned.witness_second) == pruned.value);
  }
}

TEST_CASE("diameter against the naive oracle") {
  for (const auto& name : {"tm.sub", "fibonacci.sub", "tribonacci.sub"}) {
    const Substitution sub = oracle::load(name);
    const auto rules = oracle::rules_of(sub);
    for (std::size_t n : {3, 9, 17}) {
      CHECK(diameter(language(sub, n), DiameterMode::exhaustive()).value.doubled() ==
            oracle::doubled_diameter(oracle::factors(rules, n, 16)));
    }
  }
}

TEST_CASE("sampled diameter is a lower bound and schedule independent") {
  const Substitution tm = oracle::load("tm.sub");
  for (std::size_t n : {16, 48}) {
    const LanguageSet set = language(tm, n);
    const DiameterReport exact = diameter(set, DiameterMode::exhaustive());
    ParallelOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const DiameterReport s1 = diameter(set, DiameterMode::sample(200, 17), one);
    const DiameterReport s4 = diameter(set, DiameterMode::sample(200, 17), four);
    CHECK_FALSE(s1.exact);
    CHECK(s1.value <= exact.value);
    CHECK(s1.value == s4.value);
    CHECK(s1.witness_first == s4.witness_first);

    const FactorSampler sampler(tm, n);
    const DiameterReport f1 = sampled_diameter(sampler, 200, 3, one);
    const DiameterReport f4 = sampled_diameter(sampler, 200, 3, four);
    CHECK(f1.value <= exact.value);
    CHECK(f1.value == f4.value);
    CHECK(f1.witness_second == f4.witness_second);
  }
}

TEST_CASE("exact diameter is schedule independent") {
  const LanguageSet set = language(oracle::load("tm.sub"), 40);
  ParallelOptions one, three;
  one.threads = 1;
  three.threads = 3;
  const DiameterReport a = diameter(set, DiameterMode::exhaustive(), one);
  const DiameterReport b = diameter(set, DiameterMode::exhaustive(), three);
  CHECK(a.value == b.value);
  CHECK(a.witness_first == b.witness_first);
  CHECK(a.witness_second == b.witness_second);
  CHECK(a.pairs_pruned == b.pairs_pruned);
}

TEST_CASE("degenerate word sets") {
  const std::vector<Word> one{{0, 1}};
  const DiameterReport r = diameter(one, DiameterMode::exhaustive());
  CHECK(r.value.doubled() == 0);
  CHECK(r.witness_first == one[0]);
}
