#include "speclap/predicted_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace speclap {

namespace {
constexpr double kMergeTol = 1e-12;
}

PredictedSpectrum& PredictedSpectrum::add(double value, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("PredictedSpectrum: negative multiplicity");
  if (multiplicity == 0) return *this;
  for (auto& p : pairs_) {
    if (std::abs(p.value - value) <= kMergeTol) {
      p.multiplicity += multiplicity;
      return *this;
    }
  }
  pairs_.push_back({value, multiplicity});
  std::sort(pairs_.begin(), pairs_.end(), [](const SpectrumPair& a, const SpectrumPair& b) { return a.value > b.value; });
  return *this;
}

int PredictedSpectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& p : pairs_) t += p.multiplicity;
  return t;
}

std::vector<double> PredictedSpectrum::expanded() const {
  std::vector<double> out;
  for (const auto& p : pairs_) out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), p.value);
  return out;
}

double PredictedSpectrum::max_deviation(std::span<const double> computed) const {
  std::vector<double> a = expanded();
  std::vector<double> b(computed.begin(), computed.end());
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool PredictedSpectrum::matches(const Spectrum& s, double tol) const {
  if (s.distinct_count() != pairs_.size()) return false;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& got = s.pairs()[i];
    if (got.multiplicity != pairs_[i].multiplicity) return false;
    if (std::abs(got.value - pairs_[i].value) > tol) return false;
  }
  return true;
}

}  // namespace speclap
