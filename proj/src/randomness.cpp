#include "growca/randomness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "growca/error.hpp"
#include "growca/fft.hpp"

namespace growca {
namespace {

void require_length(std::size_t have, std::size_t need, const char* what) {
  if (have < need) {
    throw Error(Errc::DataTooShort, std::string(what) + " needs at least " +
                                        std::to_string(need) + ", got " +
                                        std::to_string(have));
  }
}

void require_nonempty(ByteView data) {
  if (data.empty()) throw Error(Errc::EmptyData, "input data is empty");
}

}  // namespace

double entropy(ByteView data) {
  const ByteHistogram h = byte_histogram(data);
  const double total = static_cast<double>(h.total);
  double sum = 0.0;
  for (std::uint64_t count : h.counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / total;
    sum -= p * std::log(p);
  }
  return std::clamp(sum / std::log(256.0), 0.0, 1.0);
}

ByteHistogram byte_histogram(ByteView data) {
  require_nonempty(data);
  ByteHistogram h;
  for (std::uint8_t b : data) ++h.counts[b];
  h.total = data.size();
  return h;
}

TestResult test_histogram_uniform(const ByteHistogram& histogram) {
  const double expected = static_cast<double>(histogram.total) / 256.0;
  double chi2 = 0.0;
  for (std::uint64_t count : histogram.counts) {
    const double d = static_cast<double>(count) - expected;
    chi2 += d * d / expected;
  }
  return {chi2, chi_square_survival(chi2, 255.0)};
}

SpectrumAnalysis half_spectrum(ByteView data) {
  require_length(data.size(), 16, "spectral analysis input length");

  const double mean =
      std::accumulate(data.begin(), data.end(), 0.0) / static_cast<double>(data.size());
  std::vector<double> centered(data.size());
  std::transform(data.begin(), data.end(), centered.begin(),
                 [mean](std::uint8_t b) { return static_cast<double>(b) - mean; });

  const std::vector<Complex> coeffs = dft(centered);
  const std::size_t half = data.size() / 2;

  SpectrumAnalysis s;
  s.amplitudes.resize(half);
  s.phases.resize(half);
  for (std::size_t k = 0; k < half; ++k) {
    s.amplitudes[k] = std::abs(coeffs[k]);
    s.phases[k] = std::arg(coeffs[k]);
    // std::arg yields [-pi, pi]; fold the closed end onto (-pi, pi]
    if (s.phases[k] <= -std::numbers::pi) s.phases[k] = std::numbers::pi;
  }
  s.sigma_hat = rayleigh_sigma_mle(s.amplitudes);
  return s;
}

double rayleigh_sigma_mle(std::span<const double> amplitudes) {
  if (amplitudes.empty()) return 0.0;
  double energy = 0.0;
  for (double a : amplitudes) energy += a * a;
  return std::sqrt(energy / (2.0 * static_cast<double>(amplitudes.size())));
}

TestResult test_rayleigh(const SpectrumAnalysis& spectrum) {
  require_length(spectrum.half_length(), 16, "Rayleigh test half-spectrum length");

  std::vector<double> sample(spectrum.amplitudes.begin() + 1, spectrum.amplitudes.end());
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  const double sigma = spectrum.sigma_hat;

  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double x = sample[i];
    const double cdf = sigma > 0.0 ? -std::expm1(-x * x / (2.0 * sigma * sigma)) : 1.0;
    const double upper = static_cast<double>(i + 1) / n - cdf;
    const double lower = cdf - static_cast<double>(i) / n;
    d = std::max({d, upper, lower});
  }
  return {d, kolmogorov_survival(std::sqrt(n) * d)};
}

TestResult test_phase_uniform(const SpectrumAnalysis& spectrum) {
  require_length(spectrum.half_length(), 64, "phase test half-spectrum length");

  std::array<std::uint64_t, kPhaseBins> counts{};
  const double width = 2.0 * std::numbers::pi / static_cast<double>(kPhaseBins);
  for (std::size_t k = 1; k < spectrum.phases.size(); ++k) {
    // bins are (lo, hi], so the upper edge +pi lands in the last bin
    const double pos = std::ceil((spectrum.phases[k] + std::numbers::pi) / width) - 1.0;
    const auto bin = static_cast<std::size_t>(
        std::clamp(pos, 0.0, static_cast<double>(kPhaseBins - 1)));
    ++counts[bin];
  }

  const double expected =
      static_cast<double>(spectrum.phases.size() - 1) / static_cast<double>(kPhaseBins);
  double chi2 = 0.0;
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    chi2 += diff * diff / expected;
  }
  return {chi2, chi_square_survival(chi2, static_cast<double>(kPhaseBins - 1))};
}

double compression_ratio(ByteView data, const Compressor& compressor) {
  require_length(data.size(), 1024, "compression ratio input length");
  const Bytes packed = compressor.compress(data);
  return static_cast<double>(packed.size()) / static_cast<double>(data.size());
}

RandomnessReport full_report(ByteView data, const Compressor& compressor) {
  require_length(data.size(), 4096, "randomness report input length");

  RandomnessReport r;
  r.entropy = entropy(data);
  r.compression_ratio = compression_ratio(data, compressor);
  r.compressor_id = compressor.id();

  const TestResult hist = test_histogram_uniform(byte_histogram(data));
  r.histogram_chi2 = hist.statistic;
  r.histogram_p = hist.p_value;

  const SpectrumAnalysis spectrum = half_spectrum(data);
  const TestResult rayleigh = test_rayleigh(spectrum);
  r.rayleigh_ks = rayleigh.statistic;
  r.rayleigh_p = rayleigh.p_value;
  const TestResult phase = test_phase_uniform(spectrum);
  r.phase_chi2 = phase.statistic;
  r.phase_p = phase.p_value;

  r.passed = r.entropy >= kMinEntropy && r.compression_ratio >= kMinCompressionRatio &&
             r.histogram_p > kMinPValue && r.rayleigh_p > kMinPValue &&
             r.phase_p > kMinPValue;
  return r;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi-theta form of the CDF converges fast for small lambda.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double cdf = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(-odd * odd * pi2 / (8.0 * lambda * lambda));
      cdf += term;
      if (term < 1e-17 * cdf) break;
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double chi_square_survival(double statistic, double dof) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

}  // namespace growca
