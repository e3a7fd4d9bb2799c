#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rankone/perturb.hpp"

namespace rankone {

/// Outcome of comparing decide against the brute-force oracle on a grid.
struct AgreementReport {
  FieldSpec field = FieldSpec::prime(2);
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t pairs = 0;
  std::uint64_t agreements = 0;
  std::uint64_t positives = 0;           // pairs the oracle answered affirmatively
  std::map<std::string, std::uint64_t> routes;  // affirmative routes taken by decide
  std::vector<std::string> mismatches;   // first few disagreeing pairs
  double seconds = 0;

  [[nodiscard]] bool ok() const { return agreements == pairs; }
};

/// Every ordered pair of pencils of the shape. Throws ShapeTooLarge when the
/// shape has more than 4096 pencils, plus the oracle limit errors.
[[nodiscard]] AgreementReport exhaustive_agreement(const FieldSpec& field, std::size_t rows, std::size_t cols);

/// `trials` seeded pairs cycling through three kinds: A and B uniform;
/// B = Q (A + P) R for a random rank-one P and invertible Q, R; A and B sparse.
[[nodiscard]] AgreementReport sampled_agreement(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                                std::uint64_t trials, std::uint64_t seed);

}  // namespace rankone
