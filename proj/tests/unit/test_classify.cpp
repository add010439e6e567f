#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "doctest.h"
#include "editdiam/classify.hpp"
#include "editdiam/diameter.hpp"
#include "editdiam/error.hpp"
#include "editdiam/io.hpp"
#include "editdiam/language.hpp"
#include "oracles.hpp"

using namespace editdiam;

namespace {

const std::vector<std::string> kCatalogue = {"tm.sub",   "fibonacci.sub",       "constant.sub",  "swap.sub",
                                             "ab.sub",   "period_doubling.sub", "tribonacci.sub"};

// Same rules listed in reverse, so letter ids come out permuted.
Substitution relabeled(const Substitution& sub) {
  std::istringstream in(serialize(sub));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  std::reverse(lines.begin(), lines.end());
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  return parse_substitution(text);
}

using Shape = std::set<std::tuple<std::set<std::string>, bool, unsigned>>;

Shape shape(const Substitution& sub, const SccAnalysis& a) {
  Shape s;
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    std::set<std::string> letters;
    for (Letter x : a.components[c]) letters.insert(sub.alphabet().symbol(x));
    s.insert({letters, bool(a.essential[c]), a.period[c]});
  }
  return s;
}

}  // namespace

TEST_CASE("catalogue verdicts") {
  CHECK(analyze(oracle::load("tm.sub")).verdict == Verdict::sublinear);
  CHECK(analyze(oracle::load("period_doubling.sub")).verdict == Verdict::sublinear);
  CHECK(analyze(oracle::load("ab.sub")).verdict == Verdict::sublinear);
  CHECK(analyze(oracle::load("constant.sub")).verdict == Verdict::full);
  CHECK(analyze(oracle::load("swap.sub")).verdict == Verdict::full);
  CHECK(analyze(oracle::load("fibonacci.sub")).verdict == Verdict::not_applicable);
  CHECK(to_string(Verdict::full) == "FULL");
}

TEST_CASE("witnesses") {
  const Substitution c = oracle::load("constant.sub");
  const SccAnalysis ac = analyze(c);
  REQUIRE(ac.witness);
  CHECK(ac.witness->a == 0);
  CHECK(ac.witness->b == 1);
  CHECK(ac.witness->p0 == 1);

  const Substitution s = oracle::load("swap.sub");
  const SccAnalysis as = analyze(s);
  REQUIRE(as.witness);
  CHECK(as.witness->p0 == 2);
  const WitnessCheck w = verify_full_witness(s, as, 6);
  CHECK(w.holds);
  CHECK(w.largest_verified_k == 6);
  CHECK_THROWS_AS(verify_full_witness(oracle::load("tm.sub"), analyze(oracle::load("tm.sub")), 3), DomainError);
}

TEST_CASE("components match reachability") {
  for (const auto& name : kCatalogue) {
    CAPTURE(name);
    const Substitution sub = oracle::load(name);
    const auto R = oracle::reach(oracle::rules_of(sub));
    const SccAnalysis a = analyze(sub);
    // The oracle indexes letters in symbol order; map through the alphabet.
    std::vector<char> sorted;
    for (const auto& sym : sub.alphabet().symbols()) sorted.push_back(sym[0]);
    std::sort(sorted.begin(), sorted.end());
    auto oi = [&](Letter x) {
      return std::size_t(std::find(sorted.begin(), sorted.end(), sub.alphabet().symbol(x)[0]) - sorted.begin());
    };
    for (Letter x = 0; x < sub.alphabet_size(); ++x)
      for (Letter y = 0; y < sub.alphabet_size(); ++y) {
        const bool same = x == y || (R[oi(x)][oi(y)] && R[oi(y)][oi(x)]);
        CHECK((a.component_of[x] == a.component_of[y]) == same);
      }
  }
}

TEST_CASE("periods match return times") {
  for (const auto& name : kCatalogue) {
    CAPTURE(name);
    const Substitution sub = oracle::load(name);
    const auto rules = oracle::rules_of(sub);
    const SccAnalysis a = analyze(sub);
    for (Letter x = 0; x < sub.alphabet_size(); ++x)
      CHECK(a.period[a.component_of[x]] == oracle::return_gcd(rules, sub.alphabet().symbol(x)[0], 12));
  }
}

TEST_CASE("analysis is invariant under relabeling") {
  for (const auto& name : kCatalogue) {
    CAPTURE(name);
    const Substitution sub = oracle::load(name);
    const Substitution perm = relabeled(sub);
    const SccAnalysis a = analyze(sub), b = analyze(perm);
    CHECK(a.verdict == b.verdict);
    CHECK(shape(sub, a) == shape(perm, b));
  }
}

TEST_CASE("adding an outgoing edge clears essentiality") {
  // 0 <-> 1 and 2 alone: both components essential.
  SubstitutionGraph g;
  g.successors = {{1}, {0}, {2}};
  SccAnalysis a = analyze(g);
  CHECK(a.essential_components().size() == 2);
  g.successors[1].push_back(2);
  a = analyze(g);
  CHECK(a.essential_components().size() == 1);
  CHECK_FALSE(a.essential[a.component_of[0]]);
  CHECK(a.essential[a.component_of[2]]);
}

TEST_CASE("acyclic singleton has period zero") {
  SubstitutionGraph g;
  g.successors = {{1}, {1}};
  const SccAnalysis a = analyze(g);
  CHECK(a.period[a.component_of[0]] == 0);
  CHECK_FALSE(a.essential[a.component_of[0]]);
  CHECK(a.period[a.component_of[1]] == 1);
}

TEST_CASE("FULL verdicts give diam = n") {
  for (const auto& name : {"constant.sub", "swap.sub"}) {
    const Substitution sub = oracle::load(name);
    for (std::size_t n = 1; n <= 32; ++n)
      CHECK(diameter(language(sub, n), DiameterMode::exhaustive()).value.doubled() == 2 * n);
  }
}

TEST_CASE("density outside the essential letters decays as 2^-n") {
  const Substitution ab = oracle::load("ab.sub");
  const Letter b[] = {1};
  for (unsigned n = 0; n <= 12; ++n) CHECK(rho(iterate(ab, 0, n), b) == Rational(1, std::int64_t{1} << n));
  CHECK_THROWS_AS(rho(Word{}, b), InputError);

  const std::size_t ns[] = {4, 8};
  const auto profile = rho_decay_profile(ab, ns);
  // The word a b^{n-1} is the worst case.
  CHECK(profile[0] == Rational(1, 4));
  CHECK(profile[1] == Rational(1, 8));
  CHECK_THROWS_AS(rho_decay_profile(oracle::load("constant.sub"), ns), DomainError);
}
