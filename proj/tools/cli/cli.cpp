#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cli/nlist.hpp"
#include "editdiam/classify.hpp"
#include "editdiam/diameter.hpp"
#include "editdiam/distance.hpp"
#include "editdiam/error.hpp"
#include "editdiam/experiments.hpp"
#include "editdiam/io.hpp"
#include "editdiam/language.hpp"
#include "editdiam/perron.hpp"
#include "editdiam/thue_morse.hpp"
#include "verify/acceptance.hpp"

namespace editdiam::cli {
namespace {

struct Global {
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::uint64_t mem_cap = 0;
  std::string output;
  std::string format;

  ParallelOptions par() const { return ParallelOptions{threads}; }
  std::size_t letter_cap() const {
    return mem_cap == 0 ? kDefaultLetterCap : static_cast<std::size_t>(std::max<std::uint64_t>(1, mem_cap / sizeof(Letter)));
  }
  std::uint64_t require_seed(std::string_view what) const {
    if (!seed) throw InputError(std::string(what) + " is sampled and needs --seed");
    return *seed;
  }
  std::string format_or(std::string_view fallback) const { return format.empty() ? std::string(fallback) : format; }
};

std::string bool_field(bool b) { return b ? "1" : "0"; }

// Words given without a substitution: whitespace-separated tokens if either
// word contains whitespace, otherwise one letter per character. Letter ids
// follow sorted symbol order so they do not depend on argument order.
std::pair<Word, Word> free_words(const std::string& xs, const std::string& ys) {
  const bool tokens = std::any_of(xs.begin(), xs.end(), ::isspace) || std::any_of(ys.begin(), ys.end(), ::isspace);
  auto split = [tokens](const std::string& s) {
    if (tokens) return split_tokens(s);
    std::vector<std::string> out;
    for (char c : s) out.emplace_back(1, c);
    return out;
  };
  const auto xt = split(xs), yt = split(ys);
  std::vector<std::string> symbols(xt);
  symbols.insert(symbols.end(), yt.begin(), yt.end());
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) return {};
  const Alphabet alpha(symbols);
  std::pair<Word, Word> out;
  for (const auto& t : xt) out.first.push_back(alpha.at(t));
  for (const auto& t : yt) out.second.push_back(alpha.at(t));
  return out;
}

std::string trim_newline(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

struct DistArgs {
  std::string x, y, x_file, y_file, sub, engine = "auto";
};

void cmd_dist(const Global& g, const DistArgs& a, std::ostream& out) {
  std::string xs = a.x_file.empty() ? a.x : trim_newline(read_text_file(a.x_file));
  std::string ys = a.y_file.empty() ? a.y : trim_newline(read_text_file(a.y_file));
  Word x, y;
  if (!a.sub.empty()) {
    const Substitution sub = read_substitution_file(a.sub);
    x = sub.alphabet().parse_word(xs);
    y = sub.alphabet().parse_word(ys);
  } else {
    std::tie(x, y) = free_words(xs, ys);
  }
  HalfDistance d;
  if (a.engine == "auto") {
    d = indel_distance(x, y);
  } else if (a.engine == "oracle") {
    d = indel_distance_oracle(x, y);
  } else {
    const auto e = parse_engine(a.engine);
    if (!e) throw InputError("unknown engine '" + a.engine + "'");
    d = indel_distance(x, y, *e);
  }
  if (g.format_or("text") == "csv") {
    out << "doubled,d_E\n" << d.doubled() << ',' << d.to_string() << '\n';
  } else {
    out << "d_E = " << d.to_string() << '\n' << "doubled = " << d.doubled() << '\n';
  }
}

struct WordsArgs {
  std::string sub;
  std::size_t n = 0;
  std::size_t profile = 0;
  unsigned oracle = 0;
};

void cmd_words(const Global& g, const WordsArgs& a, std::ostream& out) {
  const Substitution sub = read_substitution_file(a.sub);
  if (a.profile > 0) {
    out << "n,count\n";
    LanguageOptions opts;
    opts.letter_cap = g.letter_cap();
    opts.count_closure = false;
    for (std::size_t n = 1; n <= a.profile; ++n) out << n << ',' << language(sub, n, opts).size() << '\n';
    return;
  }
  if (a.n == 0) throw InputError("words needs --n or --profile");
  LanguageSet set;
  if (a.oracle > 0) {
    set = language_oracle_scan(sub, a.n, a.oracle, g.letter_cap());
  } else {
    LanguageOptions opts;
    opts.letter_cap = g.letter_cap();
    set = language(sub, a.n, opts);
  }
  if (g.format_or("text") == "csv") {
    out << "word\n";
    for (const Word& w : set.words) out << sub.alphabet().format(w) << '\n';
  } else {
    for (const Word& w : set.words) out << sub.alphabet().format(w) << '\n';
  }
  out << "# size=" << set.size() << " iterations=" << set.iterations;
  if (a.oracle == 0) out << " closure=" << set.closure_size;
  out << '\n';
}

struct DiamArgs {
  std::string sub;
  std::string n_list;
  std::uint64_t sample = 0;
  bool no_prune = false;
  bool header = false;
};

void cmd_diam(const Global& g, const DiamArgs& a, std::ostream& out) {
  const Substitution sub = read_substitution_file(a.sub);
  const auto ns = parse_n_list(a.n_list);
  const std::uint64_t seed = a.sample > 0 ? g.require_seed("diam --sample") : 0;
  if (a.header) out << "n,doubled,exact,witness1,witness2,pairs,pruned\n";
  LanguageOptions opts;
  opts.letter_cap = g.letter_cap();
  opts.count_closure = false;
  for (std::size_t n : ns) {
    if (n == 0) throw InputError("diam: n must be >= 1");
    DiameterReport r;
    if (a.sample > 0) {
      const FactorSampler sampler(sub, n, std::min(g.letter_cap(), std::size_t{1} << 24));
      r = sampled_diameter(sampler, a.sample, mix_seed(seed ^ n), g.par());
    } else {
      r = diameter(language(sub, n, opts), DiameterMode::exhaustive(!a.no_prune), g.par());
    }
    out << r.n << ',' << r.value.doubled() << ',' << bool_field(r.exact) << ','
        << sub.alphabet().format(r.witness_first) << ',' << sub.alphabet().format(r.witness_second) << ','
        << r.pairs_evaluated << ',' << r.pairs_pruned << '\n';
  }
}

struct ClassifyArgs {
  std::string sub;
  unsigned verify_k = 6;
  std::string rho;
};

std::string letters_of(const Substitution& sub, const std::vector<Letter>& ls) {
  std::string s;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ' ';
    s += sub.alphabet().symbol(ls[i]);
  }
  return s;
}

void cmd_classify(const Global& g, const ClassifyArgs& a, std::ostream& out) {
  const Substitution sub = read_substitution_file(a.sub);
  if (!a.rho.empty()) {
    const auto ns = parse_n_list(a.rho);
    const auto vals = rho_decay_profile(sub, ns);
    out << "n,max_rho,max_rho_decimal\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
      out << ns[i] << ',' << vals[i].to_string() << ',' << format_double(vals[i].to_double()) << '\n';
    return;
  }
  const SccAnalysis r = analyze(sub);
  std::optional<WitnessCheck> check;
  if (r.verdict == Verdict::full && a.verify_k > 0)
    check = verify_full_witness(sub, r, a.verify_k, std::min(g.letter_cap(), std::size_t{1} << 24));

  if (g.format_or("text") == "csv") {
    out << "component,letters,essential,period\n";
    for (std::size_t c = 0; c < r.components.size(); ++c)
      out << c << ',' << letters_of(sub, r.components[c]) << ',' << bool_field(r.essential[c]) << ',' << r.period[c]
          << '\n';
    out << "# verdict=" << to_string(r.verdict) << '\n';
    if (r.witness)
      out << "# witness=" << sub.alphabet().symbol(r.witness->a) << ',' << sub.alphabet().symbol(r.witness->b) << ','
          << r.witness->p0 << '\n';
    if (check) out << "# verified=" << bool_field(check->holds) << " k=" << check->largest_verified_k << '\n';
    return;
  }
  out << "letters: " << letters_of(sub, [&] {
    std::vector<Letter> all(sub.alphabet_size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Letter>(i);
    return all;
  }()) << '\n';
  out << "uniform: " << (sub.uniform_length() ? std::to_string(*sub.uniform_length()) : std::string("no")) << '\n';
  for (std::size_t c = 0; c < r.components.size(); ++c)
    out << "component " << c << ": {" << letters_of(sub, r.components[c]) << "} "
        << (r.essential[c] ? "essential" : "transient") << " period=" << r.period[c] << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.witness)
    out << "witness: a=" << sub.alphabet().symbol(r.witness->a) << " b=" << sub.alphabet().symbol(r.witness->b)
        << " p0=" << r.witness->p0 << '\n';
  if (check)
    out << "verified: " << (check->holds ? "holds" : "FAILS") << " for k <= " << check->largest_verified_k << '\n';
}

struct TmArgs {
  std::string n_list;
  double envelope_c = 1.0;
  bool fit = false;
  std::string bfile;
  bool slopes = false;
};

void cmd_tm(const Global& g, const TmArgs& a, std::ostream& out) {
  const auto ns = parse_n_list(a.n_list);
  auto records = tm_growth(ns, a.envelope_c, g.par());
  double c = a.envelope_c;
  if (a.fit) {
    c = fit_envelope_constant(records);
    rescale_envelope(records, c);
  }
  if (!a.bfile.empty()) {
    std::ofstream bf(a.bfile);
    if (!bf) throw InputError("cannot write " + a.bfile);
    write_bfile(bf, records);
  }
  if (g.format_or("csv") == "svg") {
    SvgSeries de{"d_E", {}}, lo{"sqrt(n/6)-1", {}}, up{"envelope", {}};
    for (const auto& r : records) {
      de.points.emplace_back(static_cast<double>(r.n), r.dE.value());
      lo.points.emplace_back(static_cast<double>(r.n), r.lower);
      up.points.emplace_back(static_cast<double>(r.n), r.upper);
    }
    out << svg_line_chart("Thue-Morse prefix vs complement", "n", "d_E", {de, lo, up});
    return;
  }
  out << "n,doubled_dE,bb,lower,upper\n";
  for (const auto& r : records)
    out << r.n << ',' << r.dE.doubled() << ',' << r.bb << ',' << format_double(r.lower) << ','
        << format_double(r.upper) << '\n';
  if (a.fit) out << "# envelope_c=" << format_double(c) << '\n';
  if (a.slopes) {
    const auto s = growth_exponent_estimate(records);
    out << "# slope_upper=" << format_double(s.upper) << " slope_lower=" << format_double(s.lower) << '\n';
  }
}

struct RkArgs {
  std::string sub;
  unsigned k = 2;
  std::string base = "uniform";
  std::uint64_t budget = 1000;
  std::size_t n_count = 8;
  std::size_t exact_max_range = 1024;
  std::size_t exact_max_words = 4096;
  bool force_sample = false;
  bool recursion = false;
};

double resolve_base(const Substitution& sub, const std::string& base) {
  if (base == "uniform") {
    if (!sub.uniform_length()) throw DomainError("--base uniform needs a uniform substitution");
    return static_cast<double>(*sub.uniform_length());
  }
  if (base == "perron") return perron(sub).lambda;
  try {
    std::size_t used = 0;
    const double v = std::stod(base, &used);
    if (used != base.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("--base must be uniform, perron or a number, got '" + base + "'");
  }
}

void print_rk(const RkEstimate& e, std::ostream& out) {
  for (const auto& p : e.evaluated) out << e.k << ',' << p.n << ',' << p.diam.doubled() << ',' << bool_field(p.exact) << '\n';
  out << "# k=" << e.k << " base=" << format_double(e.base) << " range=[" << e.n_lo << ',' << e.n_hi
      << ") value=" << e.value.to_string() << " argmax_n=" << e.argmax_n << " exact=" << bool_field(e.exact) << '\n';
}

void cmd_rk(const Global& g, const RkArgs& a, std::ostream& out) {
  const Substitution sub = read_substitution_file(a.sub);
  const double base = resolve_base(sub, a.base);
  SamplingSpec spec;
  spec.n_count = a.n_count;
  spec.pairs_per_n = a.budget;
  spec.exact_max_range = a.exact_max_range;
  spec.exact_max_words = a.exact_max_words;
  spec.force_sample = a.force_sample;
  spec.letter_cap = g.letter_cap();
  spec.allow_sampling = g.seed.has_value();
  spec.seed = g.seed.value_or(0);
  if (a.force_sample) g.require_seed("rk --force-sample");

  out << "k,n,doubled_diam,exact\n";
  const RkEstimate e = rk_estimate(sub, a.k, base, spec, g.par());
  print_rk(e, out);
  if (a.recursion) {
    const RkEstimate next = rk_estimate(sub, a.k + 1, base, spec, g.par());
    print_rk(next, out);
    const RecursionReport rep = rk_recursion_check(sub, e, next);
    out << "# recursion lhs=" << rep.lhs.to_string() << " rhs=" << rep.rhs.to_string()
        << " status=" << to_string(rep.status);
    if (rep.decay_bound)
      out << " decay_bound=" << format_double(*rep.decay_bound) << " decay_holds=" << bool_field(rep.decay_holds);
    out << '\n';
  }
}

struct CurveArgs {
  std::string sub;
  std::string n_list;
  std::uint64_t sample = 0;
};

void cmd_curve(const Global& g, const CurveArgs& a, std::ostream& out) {
  const Substitution sub = read_substitution_file(a.sub);
  const auto ns = parse_n_list(a.n_list);
  CurveMode mode;
  mode.letter_cap = g.letter_cap();
  if (a.sample > 0) {
    mode.exact = false;
    mode.budget = a.sample;
    mode.seed = g.require_seed("curve --sample");
  }
  const DiamCurve c = diam_curve(sub, ns, mode, g.par());
  if (g.format_or("csv") == "svg") {
    SvgSeries d{"diam_E", {}}, e{"n/sqrt(ln n), scaled", {}};
    for (const auto& r : c.rows) {
      d.points.emplace_back(static_cast<double>(r.n), r.diam.value());
      e.points.emplace_back(static_cast<double>(r.n), r.envelope);
    }
    out << svg_line_chart("Diameter of W_n", "n", "diam_E", {d, e});
    return;
  }
  out << "n,doubled_diam,ratio,envelope\n";
  for (const auto& r : c.rows)
    out << r.n << ',' << r.diam.doubled() << ',' << format_double(r.ratio) << ',' << format_double(r.envelope) << '\n';
  if (c.alpha) out << "# alpha=" << format_double(*c.alpha) << '\n';
}

struct VerifyArgs {
  std::string data_dir;
  bool full = false;
  std::string only;
  std::string write_fixtures;
};

int cmd_verify(const Global& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  verify::Options opts;
  opts.data_dir = a.data_dir.empty() ? verify::default_data_dir() : std::filesystem::path(a.data_dir);
  opts.full = a.full;
  opts.par = g.par();
  if (!a.write_fixtures.empty()) {
    verify::write_fixtures(a.write_fixtures, g.par(), err);
    return kOk;
  }
  if (!a.only.empty())
    for (std::size_t id : parse_n_list(a.only)) opts.only.push_back(static_cast<int>(id));
  const auto results = verify::run_acceptance(opts, &err);
  bool ok = true;
  for (const auto& r : results) {
    out << verify::format_line(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edit distance diameters of substitution factor languages"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand name.
  app.fallthrough();
  app.set_version_flag("--version", std::string(EDITDIAM_VERSION));
  Global g;
  app.add_option("--seed", g.seed, "Seed for every sampled mode");
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_option("--mem-cap", g.mem_cap, "Largest single word, in bytes");
  app.add_option("-o,--output", g.output, "Write results here instead of stdout");
  app.add_option("--format", g.format, "csv, text or svg")->check(CLI::IsMember({"csv", "text", "svg"}));

  DistArgs da;
  auto* dist = app.add_subcommand("dist", "Indel edit distance of two words");
  dist->add_option("--x", da.x, "First word");
  dist->add_option("--y", da.y, "Second word");
  dist->add_option("--x-file", da.x_file);
  dist->add_option("--y-file", da.y_file);
  dist->add_option("--sub", da.sub, "Substitution file whose alphabet parses the words");
  dist->add_option("--engine", da.engine, "auto, dp, bitparallel, band or oracle");

  WordsArgs wa;
  auto* words = app.add_subcommand("words", "Enumerate W_n");
  words->add_option("--sub", wa.sub)->required();
  words->add_option("--n", wa.n);
  words->add_option("--profile", wa.profile, "Print |W_n| for n = 1..N as CSV");
  words->add_option("--oracle", wa.oracle, "Use the prefix-scan oracle up to this iterate");

  DiamArgs dmA;
  auto* diam = app.add_subcommand("diam", "Diameter of W_n");
  diam->add_option("--sub", dmA.sub)->required();
  diam->add_option("--n,--n-list", dmA.n_list)->required();
  diam->add_option("--sample", dmA.sample, "Evaluate this many seeded random pairs");
  diam->add_flag("--no-prune", dmA.no_prune);
  diam->add_flag("--header", dmA.header);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Graph components and the uniform dichotomy");
  classify->add_option("--sub", ca.sub)->required();
  classify->add_option("--verify", ca.verify_k, "Check the FULL witness up to this k (0: skip)");
  classify->add_option("--rho", ca.rho, "n-list for the max-rho decay profile");

  TmArgs ta;
  auto* tm = app.add_subcommand("tm", "Thue-Morse prefix against its complement");
  tm->add_option("--n-list", ta.n_list)->required();
  tm->add_option("--envelope-c", ta.envelope_c);
  tm->add_flag("--fit-envelope", ta.fit);
  tm->add_option("--bfile", ta.bfile, "Write n bb(n) pairs to this file");
  tm->add_flag("--slopes", ta.slopes, "Append log-log slopes over n = 2^k and n = 3 2^k");

  RkArgs ra;
  auto* rk = app.add_subcommand("rk", "Estimate r_k");
  rk->add_option("--sub", ra.sub)->required();
  rk->add_option("--k", ra.k);
  rk->add_option("--base", ra.base, "uniform, perron or a number");
  rk->add_option("--budget", ra.budget, "Pairs per sampled n");
  rk->add_option("--n-count", ra.n_count, "Sampled n values");
  rk->add_option("--exact-max-range", ra.exact_max_range);
  rk->add_option("--exact-max-words", ra.exact_max_words);
  rk->add_flag("--force-sample", ra.force_sample);
  rk->add_flag("--recursion", ra.recursion, "Also estimate r_{k+1} and check the recursion");

  CurveArgs cu;
  auto* curve = app.add_subcommand("curve", "Diameter curve against n / sqrt(log n)");
  curve->add_option("--sub", cu.sub)->required();
  curve->add_option("--n-list", cu.n_list)->required();
  curve->add_option("--sample", cu.sample, "Pairs per n; exact when absent");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--data", va.data_dir, "Directory with catalogue/ and fixtures/");
  ver->add_flag("--full", va.full, "Recompute fixture-backed criteria");
  ver->add_option("--only", va.only, "Criterion ids, e.g. 1,4:6");
  ver->add_option("--write-fixtures", va.write_fixtures, "Regenerate golden fixtures into DIR");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << EDITDIAM_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (*dist) cmd_dist(g, da, buf);
    if (*words) cmd_words(g, wa, buf);
    if (*diam) cmd_diam(g, dmA, buf);
    if (*classify) cmd_classify(g, ca, buf);
    if (*tm) cmd_tm(g, ta, buf);
    if (*rk) cmd_rk(g, ra, buf);
    if (*curve) cmd_curve(g, cu, buf);
    if (*ver) code = cmd_verify(g, va, buf, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (g.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << g.output << '\n';
      return kUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace editdiam::cli
