#include "cartan/circle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace cartan {

namespace {

bool power_of_two(int k) { return k > 0 && (k & (k - 1)) == 0; }

void require_sample_count(int k) {
  if (!power_of_two(k) || k < 8)
    throw std::invalid_argument("sample count must be a power of two >= 8");
}

}  // namespace

FourierSeries::FourierSeries(int sample_count, Eigen::VectorXcd bins)
    : sample_count_(sample_count), bins_(std::move(bins)) {
  if (bins_.size() != sample_count_)
    throw std::invalid_argument("FourierSeries: bin count mismatch");
}

Complex FourierSeries::coefficient(int k) const {
  if (k < window_min() || k >= window_max())
    throw std::out_of_range("FourierSeries: index outside the window");
  return bins_((k % sample_count_ + sample_count_) % sample_count_);
}

double FourierSeries::energy() const { return bins_.squaredNorm(); }

CircleSample sample_m(int sample_count) {
  require_sample_count(sample_count);
  CircleSample s{sample_count, Eigen::VectorXcd(sample_count)};
  for (int j = 0; j < sample_count; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / sample_count);
    const Complex w = z - 2.0 * z * z;
    s.values(j) = w / std::abs(w);
  }
  return s;
}

FourierSeries dft(const CircleSample& sample) {
  require_sample_count(sample.sample_count);
  Eigen::FFT<double> fft;
  Eigen::VectorXcd bins(sample.sample_count);
  Eigen::VectorXcd in = sample.values;
  fft.fwd(bins, in);
  bins /= static_cast<double>(sample.sample_count);
  return FourierSeries(sample.sample_count, std::move(bins));
}

bool is_unimodular(const CircleSample& sample, double tol) {
  return (sample.values.cwiseAbs().array() - 1.0).abs().maxCoeff() < tol;
}

bool cstar_lbh_violation(const FourierSeries& series, double tol) {
  int large = 0;
  for (int k = series.window_min(); k < series.window_max(); ++k)
    if (std::abs(series.coefficient(k)) > tol && ++large >= 2) return true;
  return false;
}

Complex LaurentElement::at(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Complex(0.0, 0.0) : it->second;
}

LaurentElement laurent_convolve(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [j, aj] : a.coeffs)
    for (const auto& [l, bl] : b.coeffs) out.coeffs[j + l] += aj * bl;
  return out;
}

LaurentElement laurent_star(const LaurentElement& a) {
  LaurentElement out;
  for (const auto& [j, aj] : a.coeffs) out.coeffs[-j] = std::conj(aj);
  return out;
}

LaurentVerdict laurent_normaliser_check(const LaurentElement& f, double tol) {
  const LaurentElement product = laurent_convolve(f, laurent_star(f));
  bool normaliser = true;
  for (const auto& [k, v] : product.coeffs)
    if (k != 0 && std::abs(v) >= tol) {
      normaliser = false;
      break;
    }
  int support = 0;
  for (const auto& [k, v] : f.coeffs)
    if (std::abs(v) >= tol) ++support;
  return {normaliser, support == 1};
}

bool laurent_bounded_sweep(int max_index, int max_coeff, double tol) {
  const int positions = 2 * max_index + 1;
  const int choices = 2 * max_coeff + 1;
  std::vector<int> digits(static_cast<size_t>(positions), 0);
  while (true) {
    LaurentElement f;
    int support = 0;
    for (int i = 0; i < positions; ++i) {
      const int c = digits[static_cast<size_t>(i)] - max_coeff;
      if (c != 0) {
        f.coeffs[i - max_index] = static_cast<double>(c);
        ++support;
      }
    }
    const LaurentVerdict verdict = laurent_normaliser_check(f, tol);
    const bool monomial_or_zero = support <= 1;
    if (verdict.is_normaliser != monomial_or_zero) return false;
    if (verdict.is_monomial != (support == 1)) return false;

    int pos = 0;
    while (pos < positions && ++digits[static_cast<size_t>(pos)] == choices)
      digits[static_cast<size_t>(pos++)] = 0;
    if (pos == positions) break;
  }
  return true;
}

}  // namespace cartan
