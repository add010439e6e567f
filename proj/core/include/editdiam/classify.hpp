#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "editdiam/alphabet.hpp"
#include "editdiam/rational.hpp"
#include "editdiam/substitution.hpp"

namespace editdiam {

/// G_sigma: edge a -> b iff b occurs in sigma(a). Successor lists are sorted.
struct SubstitutionGraph {
  std::vector<std::vector<Letter>> successors;

  std::size_t size() const noexcept { return successors.size(); }
  bool has_edge(Letter a, Letter b) const;
  std::vector<std::pair<Letter, Letter>> edges() const;
};

SubstitutionGraph build_graph(const Substitution& sub);

enum class Verdict { sublinear, full, not_applicable };
std::string_view to_string(Verdict v) noexcept;

/// Letters whose iterates stay on disjoint letter sets: sigma^(k p0)(a) and
/// sigma^(k p0)(b) share no letter for every k.
struct FullWitness {
  Letter a = 0;
  Letter b = 0;
  unsigned p0 = 1;
};

struct SccAnalysis {
  /// Each component sorted; components ordered by their smallest letter.
  std::vector<std::vector<Letter>> components;
  std::vector<std::size_t> component_of;
  std::vector<bool> essential;
  /// gcd of cycle lengths through the component; 0 for an acyclic singleton.
  std::vector<unsigned> period;
  Verdict verdict = Verdict::not_applicable;
  std::optional<FullWitness> witness;

  std::vector<std::size_t> essential_components() const;
};

/// Components, essential flags and periods of a bare graph; verdict stays
/// not_applicable.
SccAnalysis analyze(const SubstitutionGraph& graph);

/// Full analysis with the dichotomy verdict. The verdict is not_applicable
/// unless sub is l-uniform with l > 1.
SccAnalysis analyze(const Substitution& sub);

struct WitnessCheck {
  bool holds = true;
  /// Largest k for which d_E(sigma^(k p0)(a), sigma^(k p0)(b)) = l^(k p0)
  /// was checked; smaller than k_max when the letter cap stopped the run.
  unsigned largest_verified_k = 0;
};

/// DomainError unless analysis.verdict is full.
WitnessCheck verify_full_witness(const Substitution& sub, const SccAnalysis& analysis, unsigned k_max,
                                 std::size_t letter_cap = std::size_t{1} << 24);

/// Fraction of letters of w outside a0. InputError on an empty word.
Rational rho(WordView w, std::span<const Letter> a0);

/// max over W_n of rho(w, A0) per n, with A0 the unique essential component.
std::vector<Rational> rho_decay_profile(const Substitution& sub, std::span<const std::size_t> n_list);

}  // namespace editdiam
