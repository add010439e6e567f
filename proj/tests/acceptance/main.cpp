// Prints one line per acceptance criterion; exit status 1 if any is red.
#include <iostream>
#include <string>

#include "verify/acceptance.hpp"

int main(int argc, char** argv) {
  editdiam::verify::Options opts;
  opts.data_dir = editdiam::verify::default_data_dir();
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--full")
      opts.full = true;
    else if (a == "--data" && i + 1 < argc)
      opts.data_dir = argv[++i];
    else if (a == "--only" && i + 1 < argc)
      opts.only.push_back(std::stoi(argv[++i]));
    else {
      std::cerr << "usage: acceptance [--full] [--data DIR] [--only ID]...\n";
      return 2;
    }
  }
  const auto results = editdiam::verify::run_acceptance(opts, &std::cerr);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << editdiam::verify::format_line(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << '/' << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
