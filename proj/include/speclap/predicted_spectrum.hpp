#pragma once

#include <vector>

#include "speclap/linalg.hpp"

namespace speclap {

/// Closed-form spectrum: exact-form values evaluated at full precision.
/// Equal values are merged on insertion, so pairs are distinct and sorted
/// descending.
class PredictedSpectrum {
 public:
  PredictedSpectrum() = default;

  /// Adds `multiplicity` copies of `value`; zero multiplicity is a no-op.
  PredictedSpectrum& add(double value, int multiplicity);

  const std::vector<SpectrumPair>& pairs() const { return pairs_; }
  int total_multiplicity() const;
  std::vector<double> expanded() const;

  /// Largest |predicted - computed| over the expanded, sorted multisets;
  /// +inf when the sizes differ.
  double max_deviation(std::span<const double> computed) const;

  /// Same distinct count and multiplicities, values within `tol`.
  bool matches(const Spectrum& s, double tol) const;

 private:
  std::vector<SpectrumPair> pairs_;
};

}  // namespace speclap
