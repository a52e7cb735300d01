#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "growca/automaton.hpp"
#include "growca/compressor.hpp"

namespace growca {

// Verdict thresholds used by full_report().
inline constexpr double kMinEntropy = 0.995;
inline constexpr double kMinCompressionRatio = 0.99;
inline constexpr double kMinPValue = 0.001;

inline constexpr std::size_t kPhaseBins = 64;

struct ByteHistogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  double frequency(std::uint8_t symbol) const {
    return static_cast<double>(counts[symbol]) / static_cast<double>(total);
  }
};

/// Half-spectrum of the mean-removed sequence: coefficients 0 .. floor(L/2)-1.
/// Index 0 is kept here but ignored by the goodness-of-fit tests.
struct SpectrumAnalysis {
  std::vector<double> amplitudes;
  std::vector<double> phases;  // principal values in (-pi, pi]
  double sigma_hat = 0.0;

  std::size_t half_length() const noexcept { return amplitudes.size(); }
};

struct TestResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

struct RandomnessReport {
  double entropy = 0.0;
  double compression_ratio = 0.0;
  std::string compressor_id;
  double histogram_chi2 = 0.0;
  double histogram_p = 0.0;
  double rayleigh_ks = 0.0;
  double rayleigh_p = 0.0;
  double phase_chi2 = 0.0;
  double phase_p = 0.0;
  bool passed = false;
};

/// Base-256 Shannon entropy of the byte frequencies, in [0, 1].
/// Throws Error{EmptyData}.
double entropy(ByteView data);

/// Throws Error{EmptyData}.
ByteHistogram byte_histogram(ByteView data);

/// Pearson chi-square of the histogram against the uniform distribution over
/// all 256 symbols (255 degrees of freedom).
TestResult test_histogram_uniform(const ByteHistogram& histogram);

/// Requires data.size() >= 16, else Error{DataTooShort}.
SpectrumAnalysis half_spectrum(ByteView data);

/// Maximum-likelihood Rayleigh scale: sqrt(sum(a^2) / (2 n)).
double rayleigh_sigma_mle(std::span<const double> amplitudes);

/// One-sample Kolmogorov-Smirnov test of amplitudes[1..] against
/// Rayleigh(sigma_hat). The p-value uses the asymptotic Kolmogorov
/// distribution and is approximate for small samples.
/// Requires half_length() >= 16.
TestResult test_rayleigh(const SpectrumAnalysis& spectrum);

/// Chi-square of phases[1..] over kPhaseBins equal bins on (-pi, pi].
/// Requires half_length() >= 64.
TestResult test_phase_uniform(const SpectrumAnalysis& spectrum);

/// compressed size / original size. Requires data.size() >= 1024.
double compression_ratio(ByteView data, const Compressor& compressor);

/// Runs every test above. Requires data.size() >= 4096.
RandomnessReport full_report(ByteView data, const Compressor& compressor);

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_survival(double statistic, double dof);

}  // namespace growca
