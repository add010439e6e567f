#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "editdiam/error.hpp"
#include "editdiam/language.hpp"
#include "editdiam/substitution.hpp"
#include "oracles.hpp"

using namespace editdiam;

namespace {

const std::vector<std::string> kPrimitive = {"tm.sub", "fibonacci.sub", "period_doubling.sub", "tribonacci.sub"};

std::set<std::string> as_text(const Substitution& sub, const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const Word& w : words) out.insert(oracle::word_text(sub, w));
  return out;
}

}  // namespace

TEST_CASE("language matches an independent orbit scan") {
  for (const auto& name : kPrimitive) {
    CAPTURE(name);
    const Substitution sub = oracle::load(name);
    const auto rules = oracle::rules_of(sub);
    for (std::size_t n = 1; n <= 12; ++n) {
      CAPTURE(n);
      const LanguageSet set = language(sub, n);
      CHECK(std::is_sorted(set.words.begin(), set.words.end()));
      CHECK(as_text(sub, set.words) == oracle::factors(rules, n, 16));
      CHECK(set.words == language_oracle_scan(sub, n, 16).words);
    }
  }
}

TEST_CASE("non-primitive languages") {
  const Substitution c = oracle::load("constant.sub");
  CHECK(as_text(c, language(c, 5).words) == std::set<std::string>{"00000", "11111"});
  const Substitution ab = oracle::load("ab.sub");
  for (std::size_t n = 1; n <= 10; ++n) CHECK(as_text(ab, language(ab, n).words) == oracle::factors(oracle::rules_of(ab), n, 12));
}

TEST_CASE("closure is a fixpoint") {
  for (const auto& name : {"tm.sub", "fibonacci.sub", "ab.sub"}) {
    const Substitution sub = oracle::load(name);
    const std::size_t n = 6;
    const auto closure = factor_closure(sub, n);
    const std::set<Word> members(closure.begin(), closure.end());
    for (const Word& u : closure) {
      const Word z = substitute(sub, u);
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t len = 1; len <= n && i + len <= z.size(); ++len)
          CHECK(members.count(Word(z.begin() + i, z.begin() + i + len)) == 1);
    }
  }
}

TEST_CASE("languages are factor-closed") {
  for (const auto& name : kPrimitive) {
    const Substitution sub = oracle::load(name);
    for (std::size_t n = 2; n <= 24; ++n) {
      const LanguageSet big = language(sub, n), small = language(sub, n - 1);
      for (const Word& w : big.words) {
        CHECK(small.contains(Word(w.begin(), w.end() - 1)));
        CHECK(small.contains(Word(w.begin() + 1, w.end())));
      }
    }
  }
}

TEST_CASE("Fibonacci and its square share W_n") {
  const Substitution fib = oracle::load("fibonacci.sub");
  const Substitution fib2 = power(fib, 2);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(language(fib, n).words == language(fib2, n).words);
}

TEST_CASE("complexity is at most linear") {
  // Sturmian: p(n) = n + 1.
  const auto fib = complexity_profile(oracle::load("fibonacci.sub"), 64);
  for (std::size_t n = 1; n <= 64; ++n) CHECK(fib[n - 1] == n + 1);

  for (const auto& name : {"fibonacci.sub", "period_doubling.sub", "tribonacci.sub"}) {
    CAPTURE(name);
    const auto p = complexity_profile(oracle::load(name), 64);
    double c = 0;
    for (std::size_t n = 1; n <= 16; ++n) c = std::max(c, double(p[n - 1]) / double(n));
    for (std::size_t n = 17; n <= 64; ++n) CHECK(double(p[n - 1]) <= c * double(n));
  }
}

TEST_CASE("Thue-Morse complexity oscillates below 10n/3") {
  // p(n)/n for mu is not monotone in its running maximum: the constant fitted
  // on n <= 16 is 40/13 and p(22) = 68 already exceeds it. The sharp linear
  // bound is 3 p(n) <= 10 n.
  const auto p = complexity_profile(oracle::load("tm.sub"), 64);
  for (std::size_t n = 1; n <= 64; ++n) CHECK(3 * p[n - 1] <= 10 * n);
  CHECK(p[12] == 40);
  CHECK(p[21] == 68);
}

TEST_CASE("Thue-Morse complexity") {
  // p(n) for n = 1..16, from the orbit oracle at a depth far beyond n.
  const auto p = complexity_profile(oracle::load("tm.sub"), 16);
  const auto rules = oracle::rules_of(oracle::load("tm.sub"));
  for (std::size_t n = 1; n <= 16; ++n) CHECK(p[n - 1] == oracle::factors(rules, n, 14).size());
  CHECK(p[3] == 10);
}

TEST_CASE("closure_size and iteration count are reported") {
  const LanguageSet set = language(oracle::load("tm.sub"), 4);
  CHECK(set.size() == 10);
  CHECK(set.closure_size == factor_closure(oracle::load("tm.sub"), 4).size());
  CHECK(set.iterations >= 1);
  CHECK_THROWS_AS(language(oracle::load("tm.sub"), 0), InputError);
}

TEST_CASE("sampler draws members of W_n") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"tm.sub", "fibonacci.sub", "tribonacci.sub"}) {
    const Substitution sub = oracle::load(name);
    for (std::size_t n : {7, 40}) {
      const LanguageSet set = language(sub, n);
      for (std::size_t budget : {std::size_t{1} << 24, std::size_t{64}}) {
        const FactorSampler sampler(sub, n, budget);
        if (budget > 64) CHECK(sampler.uniform());
        for (int t = 0; t < 200; ++t) CHECK(set.contains(sampler.draw(rng)));
      }
    }
  }
}

TEST_CASE("fallback sampler reaches every word") {
  std::mt19937_64 rng(9);
  const Substitution tm = oracle::load("tm.sub");
  const LanguageSet set = language(tm, 12);
  const FactorSampler sampler(tm, 12, 16);
  std::set<Word> seen;
  for (int t = 0; t < 20000; ++t) seen.insert(sampler.draw(rng));
  CHECK(seen.size() == set.size());
}
