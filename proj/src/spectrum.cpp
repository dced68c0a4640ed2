#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "diskpoisson/analysis.hpp"

namespace diskpoisson {

CoefficientSpectrum harmonic_coefficients(const BoundaryData& boundary, std::size_t n_max) {
  const std::size_t n = boundary.size();
  if (n_max >= n / 2) throw std::invalid_argument("harmonic_coefficients: n_max must be below N/2");

  const auto& samples = boundary.samples();
  std::vector<Complex> in(samples.data(), samples.data() + samples.size());
  std::vector<Complex> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  for (auto& c : out) c /= static_cast<double>(n);

  CoefficientSpectrum spectrum;
  spectrum.samples = n;
  spectrum.a = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n_max + 1));
  spectrum.b = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n_max + 1));
  for (std::size_t k = 0; k <= n_max; ++k) {
    spectrum.a(static_cast<Eigen::Index>(k)) = out[k];
    if (k > 0) spectrum.b(static_cast<Eigen::Index>(k)) = std::conj(out[n - k]);
  }

  double total = 0.0, tail = 0.0;
  const std::size_t cutoff = 3 * n / 8;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t frequency = k <= n / 2 ? k : n - k;
    const double energy = std::norm(out[k]);
    total += energy;
    if (frequency >= cutoff) tail += energy;
  }
  spectrum.tail_energy_fraction = total > 0.0 ? tail / total : 0.0;
  spectrum.aliasing = spectrum.tail_energy_fraction > 1e-8;
  return spectrum;
}

BoundaryData reconstruct(const CoefficientSpectrum& spectrum, std::size_t n) {
  const std::size_t n_max = spectrum.n_max();
  if (n < 16 || n_max >= n / 2) throw std::invalid_argument("reconstruct: need n >= 16 and n_max < n/2");
  std::vector<Complex> coefficients(n, Complex{});
  for (std::size_t k = 0; k <= n_max; ++k) {
    coefficients[k] += spectrum.a(static_cast<Eigen::Index>(k));
    if (k > 0) coefficients[n - k] += std::conj(spectrum.b(static_cast<Eigen::Index>(k)));
  }
  std::vector<Complex> values;
  Eigen::FFT<double> fft;
  fft.inv(values, coefficients);
  Eigen::VectorXcd samples(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) samples(static_cast<Eigen::Index>(k)) = values[k] * static_cast<double>(n);
  return BoundaryData(std::move(samples));
}

HarmonicSeries::HarmonicSeries(const CoefficientSpectrum& spectrum, double trim) {
  const double largest = std::max(spectrum.a.cwiseAbs().maxCoeff(), spectrum.b.cwiseAbs().maxCoeff());
  const double threshold = trim * largest;
  std::size_t last = 0;
  for (std::size_t k = 0; k <= spectrum.n_max(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    if (std::abs(spectrum.a(i)) > threshold || std::abs(spectrum.b(i)) > threshold) last = k;
  }
  a_.assign(last + 1, Complex{});
  b_.assign(last + 1, Complex{});
  for (std::size_t k = 0; k <= last; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    if (std::abs(spectrum.a(i)) > threshold) a_[k] = spectrum.a(i);
    if (std::abs(spectrum.b(i)) > threshold) b_[k] = spectrum.b(i);
  }
}

WirtingerJet HarmonicSeries::jet(Complex z) const {
  if (std::abs(z) > 1.0 + 1e-12) throw std::invalid_argument("HarmonicSeries::jet: point outside the closed disk");
  // Horner's scheme for h = sum a_n z^n and k = sum conj(b_n) conj(z)^n.
  const Complex zbar = std::conj(z);
  Complex h{}, dh{}, k{}, dk{};
  for (std::size_t n = a_.size(); n-- > 0;) {
    dh = dh * z + h;
    h = h * z + a_[n];
    dk = dk * zbar + k;
    k = k * zbar + std::conj(b_[n]);
  }
  return {h + k, dh, dk};
}

}  // namespace diskpoisson
