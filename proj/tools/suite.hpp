// The acceptance battery: criteria 1-11 as deterministic functions of a
// seed.  Criterion 12 (byte-identical CLI output) lives in the acceptance
// test, which needs the executable.

#ifndef PSG_SUITE_HPP_
#define PSG_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "psg/word.hpp"

namespace psg::suite {

  struct CriterionResult {
    int         id = 0;
    std::string name;
    bool        passed = false;
    std::string detail;
    double      seconds = 0;
  };

  std::vector<int> const& criterion_ids();

  // Runs the listed criteria in order, sharing intermediate results
  // (criterion 5 reuses criterion 1's tables).
  std::vector<CriterionResult> run(std::uint64_t seed,
                                   std::vector<int> const& ids);

  // "PASS 1 safin: ..." with no timing, so output is reproducible.
  std::string format_line(CriterionResult const& r);

  // Corpora, exposed for tests.
  std::vector<WordSet> safin_corpus(std::uint64_t seed, std::size_t count);
  std::vector<WordSet> projection_corpus(std::uint64_t seed, std::size_t count);
  std::vector<WordSet> partition_corpus(std::uint64_t seed, std::size_t count);
  std::vector<WordSet> short_lox_corpus();

}  // namespace psg::suite

#endif  // PSG_SUITE_HPP_
