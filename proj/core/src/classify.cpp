#include "editdiam/classify.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "editdiam/distance.hpp"
#include "editdiam/error.hpp"
#include "editdiam/language.hpp"

namespace editdiam {
namespace {

// Tarjan's algorithm, iterative so deep chains cannot overflow the stack.
std::vector<std::size_t> tarjan(const SubstitutionGraph& g, std::size_t& count) {
  const std::size_t n = g.size();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> index(n, kNone), low(n, 0), comp(n, kNone), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t next = 0;
  count = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succ = g.successors[f.v];
      if (f.edge < succ.size()) {
        const std::size_t w = succ[f.edge++];
        if (index[w] == kNone) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
    }
  }
  return comp;
}

// gcd of level(u) + 1 - level(v) over edges inside the component, with BFS
// levels taken from its smallest letter.
unsigned component_period(const SubstitutionGraph& g, const std::vector<Letter>& members,
                          const std::vector<std::size_t>& comp_of) {
  const std::size_t c = comp_of[members.front()];
  std::vector<long> level(g.size(), -1);
  std::queue<Letter> q;
  level[members.front()] = 0;
  q.push(members.front());
  long period = 0;
  while (!q.empty()) {
    const Letter u = q.front();
    q.pop();
    for (Letter v : g.successors[u]) {
      if (comp_of[v] != c) continue;
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
      } else {
        period = std::gcd(period, std::labs(level[u] + 1 - level[v]));
      }
    }
  }
  return static_cast<unsigned>(period);
}

// Two letters of the component lying in distinct strongly connected
// components of G_{sigma^p}; smallest ids first.
std::optional<FullWitness> split_witness(const Substitution& sub, const std::vector<Letter>& members, unsigned p) {
  const IncidenceMatrix mp = incidence(sub).pattern().pow(p);
  SubstitutionGraph gp;
  gp.successors.resize(mp.dim());
  for (std::size_t a = 0; a < mp.dim(); ++a)
    for (std::size_t b = 0; b < mp.dim(); ++b)
      if (mp(a, b) != 0) gp.successors[a].push_back(static_cast<Letter>(b));
  std::size_t count = 0;
  const auto comp = tarjan(gp, count);
  const Letter a = members.front();
  for (Letter b : members)
    if (comp[b] != comp[a]) return FullWitness{a, b, p};
  return std::nullopt;
}

}  // namespace

bool SubstitutionGraph::has_edge(Letter a, Letter b) const {
  const auto& s = successors.at(a);
  return std::binary_search(s.begin(), s.end(), b);
}

std::vector<std::pair<Letter, Letter>> SubstitutionGraph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t a = 0; a < successors.size(); ++a)
    for (Letter b : successors[a]) out.emplace_back(static_cast<Letter>(a), b);
  return out;
}

SubstitutionGraph build_graph(const Substitution& sub) {
  SubstitutionGraph g;
  g.successors.resize(sub.alphabet_size());
  for (std::size_t a = 0; a < sub.alphabet_size(); ++a) {
    auto& s = g.successors[a];
    s = sub.image(static_cast<Letter>(a));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return g;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::sublinear:
      return "SUBLINEAR";
    case Verdict::full:
      return "FULL";
    case Verdict::not_applicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

std::vector<std::size_t> SccAnalysis::essential_components() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < components.size(); ++c)
    if (essential[c]) out.push_back(c);
  return out;
}

SccAnalysis analyze(const SubstitutionGraph& graph) {
  std::size_t count = 0;
  const auto raw = tarjan(graph, count);

  // Renumber components by smallest letter so the output is canonical.
  std::vector<std::size_t> order(count, ~std::size_t{0});
  SccAnalysis r;
  r.component_of.resize(graph.size());
  for (std::size_t a = 0; a < graph.size(); ++a) {
    if (order[raw[a]] == ~std::size_t{0}) {
      order[raw[a]] = r.components.size();
      r.components.emplace_back();
    }
    r.component_of[a] = order[raw[a]];
    r.components[r.component_of[a]].push_back(static_cast<Letter>(a));
  }
  r.essential.assign(count, true);
  for (std::size_t a = 0; a < graph.size(); ++a)
    for (Letter b : graph.successors[a])
      if (r.component_of[a] != r.component_of[b]) r.essential[r.component_of[a]] = false;
  for (const auto& members : r.components) r.period.push_back(component_period(graph, members, r.component_of));
  return r;
}

SccAnalysis analyze(const Substitution& sub) {
  SccAnalysis r = analyze(build_graph(sub));
  const auto ell = sub.uniform_length();
  if (!ell || *ell <= 1) return r;

  const auto essential = r.essential_components();
  if (essential.size() >= 2) {
    r.verdict = Verdict::full;
    r.witness = FullWitness{r.components[essential[0]].front(), r.components[essential[1]].front(), 1};
    return r;
  }
  // A nonempty finite graph always has an essential component.
  const std::size_t c0 = essential.front();
  if (r.period[c0] == 1) {
    r.verdict = Verdict::sublinear;
    return r;
  }
  r.verdict = Verdict::full;
  r.witness = split_witness(sub, r.components[c0], r.period[c0]);
  if (!r.witness) throw Error("periodic essential component did not split under sigma^p0");
  return r;
}

WitnessCheck verify_full_witness(const Substitution& sub, const SccAnalysis& analysis, unsigned k_max,
                                 std::size_t letter_cap) {
  if (analysis.verdict != Verdict::full || !analysis.witness)
    throw DomainError("verify_full_witness: verdict is " + std::string(to_string(analysis.verdict)));
  const FullWitness& w = *analysis.witness;
  const std::uint64_t ell = *sub.uniform_length();
  WitnessCheck check;
  for (unsigned k = 1; k <= k_max; ++k) {
    const unsigned e = k * w.p0;
    const auto lens = iterate_lengths(sub, e);
    if (lens[w.a] > letter_cap || lens[w.b] > letter_cap) break;
    const Word x = iterate(sub, w.a, e, letter_cap);
    const Word y = iterate(sub, w.b, e, letter_cap);
    std::uint64_t target = 1;
    for (unsigned i = 0; i < e; ++i) target *= ell;
    if (indel_distance(x, y).doubled() != 2 * target) {
      check.holds = false;
      return check;
    }
    check.largest_verified_k = k;
  }
  return check;
}

Rational rho(WordView w, std::span<const Letter> a0) {
  if (w.empty()) throw InputError("rho of an empty word");
  std::int64_t outside = 0;
  for (Letter c : w)
    if (std::find(a0.begin(), a0.end(), c) == a0.end()) ++outside;
  return Rational(outside, static_cast<std::int64_t>(w.size()));
}

std::vector<Rational> rho_decay_profile(const Substitution& sub, std::span<const std::size_t> n_list) {
  const SccAnalysis a = analyze(build_graph(sub));
  const auto essential = a.essential_components();
  if (essential.size() != 1) throw DomainError("rho target set needs a unique essential component");
  const auto& a0 = a.components[essential.front()];
  std::vector<Rational> out;
  LanguageOptions opts;
  opts.count_closure = false;
  for (std::size_t n : n_list) {
    Rational best(0);
    for (const Word& w : language(sub, n, opts).words) best = std::max(best, rho(w, a0));
    out.push_back(best);
  }
  return out;
}

}  // namespace editdiam
