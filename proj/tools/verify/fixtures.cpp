#include "verify/fixtures.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "editdiam/diameter.hpp"
#include "editdiam/error.hpp"
#include "editdiam/io.hpp"
#include "editdiam/language.hpp"
#include "verify/acceptance.hpp"

namespace editdiam::verify {

Substitution load_catalogue(const std::filesystem::path& data_dir, const std::string& name) {
  return read_substitution_file(data_dir / "catalogue" / name);
}

std::vector<std::size_t> mu_diam_ns() { return {8, 16, 32, 64, 128, 256}; }

std::string mu_diam_row(const Substitution& mu, std::size_t n, bool prune, const ParallelOptions& par) {
  LanguageOptions opts;
  opts.count_closure = false;
  const DiameterReport r = diameter(language(mu, n, opts), DiameterMode::exhaustive(prune), par);
  std::ostringstream row;
  row << n << ',' << r.value.doubled() << ',' << mu.alphabet().format(r.witness_first) << ','
      << mu.alphabet().format(r.witness_second);
  return row.str();
}

std::vector<std::string> read_fixture_rows(const std::filesystem::path& file) {
  const std::string text = read_text_file(file);
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::vector<RkPoint> parse_r2_rows(const std::vector<std::string>& rows) {
  std::vector<RkPoint> out;
  for (const std::string& row : rows) {
    const auto comma = row.find(',');
    if (comma == std::string::npos) throw InputError("bad r2 fixture row '" + row + "'");
    RkPoint p;
    p.n = std::stoull(row.substr(0, comma));
    p.diam = HalfDistance(std::stoull(row.substr(comma + 1)));
    p.exact = true;
    out.push_back(p);
  }
  return out;
}

void write_fixtures(const std::filesystem::path& dir, const ParallelOptions& par, std::ostream& log) {
  std::filesystem::create_directories(dir);
  const Substitution mu = load_catalogue(default_data_dir(), "tm.sub");
  {
    std::ofstream f(dir / kMuDiamFixture);
    f << "# exact diam_E(W_n(mu)), all pairs evaluated without pruning\n";
    f << "n,doubled,witness1,witness2\n";
    for (std::size_t n : mu_diam_ns()) {
      f << mu_diam_row(mu, n, false, par) << '\n';
      log << "mu_diam n=" << n << '\n';
    }
  }
  {
    std::ofstream f(dir / kMuR2Fixture);
    f << "# exact diam_E(W_n(mu)) for every n in [16, 512)\n";
    f << "n,doubled\n";
    LanguageOptions opts;
    opts.count_closure = false;
    for (std::size_t n = 16; n < 512; ++n) {
      const DiameterReport r = diameter(language(mu, n, opts), DiameterMode::exhaustive(), par);
      f << n << ',' << r.value.doubled() << '\n' << std::flush;
      log << "mu_r2 n=" << n << " doubled=" << r.value.doubled() << " pairs=" << r.pairs_evaluated
          << " pruned=" << r.pairs_pruned << '\n';
    }
  }
}

}  // namespace editdiam::verify
