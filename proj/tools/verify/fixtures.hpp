#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "editdiam/experiments.hpp"
#include "editdiam/parallel.hpp"
#include "editdiam/substitution.hpp"

namespace editdiam::verify {

inline constexpr const char* kMuDiamFixture = "mu_diam.csv";
inline constexpr const char* kMuR2Fixture = "mu_r2.csv";

Substitution load_catalogue(const std::filesystem::path& data_dir, const std::string& name);

/// n values of the diameter-trend fixture: 8, 16, ..., 256.
std::vector<std::size_t> mu_diam_ns();

/// "n,doubled,witness1,witness2" for exact diam_E(W_n(mu)).
std::string mu_diam_row(const Substitution& mu, std::size_t n, bool prune, const ParallelOptions& par);

/// Data rows of a fixture file; lines starting with '#' and the header are
/// skipped. InputError when the file is missing.
std::vector<std::string> read_fixture_rows(const std::filesystem::path& file);

/// "n,doubled" rows of the exact r_2 fixture, parsed.
std::vector<RkPoint> parse_r2_rows(const std::vector<std::string>& rows);

}  // namespace editdiam::verify
