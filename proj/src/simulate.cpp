#include "lowsnr/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "lowsnr/channel.hpp"

namespace lowsnr {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

OutputSampler::OutputSampler(const SimConfig& cfg) : cfg_(cfg) {
  if (cfg.n_samples < 1000)
    throw std::domain_error("SimConfig: n_samples must be at least 10^3");
  if (cfg.params) {
    sigma_h_ = std::sqrt(cfg.params->sigma_h_sq);
    sigma_w_ = std::sqrt(cfg.params->sigma_w_sq);
  } else {
    sigma_h_ = sigma_w_ = 1.0;
  }
  std::uint64_t sm = cfg.seed;
  for (auto& s : state_) s = splitmix64(sm);
}

double OutputSampler::uniform() {
  // xoshiro256++
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return static_cast<double>(result >> 11) * 0x1.0p-53;
}

Sample OutputSampler::next() {
  const double u_onoff = uniform();
  const double x = (u_onoff < cfg_.input.p1) ? cfg_.input.x1 : 0.0;

  if (cfg_.path == SimConfig::SamplePath::DirectExponential) {
    const double u = uniform();
    const double mean = 1.0 + x * x;
    return {x, -mean * std::log1p(-u)};
  }

  // physical path: r = h*s + w with h, w circular complex Gaussian, then
  // y = |r|^2/sigma_w^2; the input amplitude satisfies x = |s| sigma_h/sigma_w
  const double s_amp = x * sigma_w_ / sigma_h_;
  const double u1 = uniform(), u2 = uniform(), u3 = uniform(), u4 = uniform();
  const double rh = std::sqrt(-std::log1p(-u1)) * sigma_h_;  // |.|^2 ~ Exp(sigma_h^2)
  const double rw = std::sqrt(-std::log1p(-u3)) * sigma_w_;
  const double h_re = rh * std::cos(kTwoPi * u2);
  const double h_im = rh * std::sin(kTwoPi * u2);
  const double w_re = rw * std::cos(kTwoPi * u4);
  const double w_im = rw * std::sin(kTwoPi * u4);
  const double r_re = h_re * s_amp + w_re;
  const double r_im = h_im * s_amp + w_im;
  return {x, (r_re * r_re + r_im * r_im) / (sigma_w_ * sigma_w_)};
}

std::vector<Sample> sample_outputs(const SimConfig& cfg, std::size_t count) {
  OutputSampler sampler(cfg);
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

MiEstimate estimate_mi(const SimConfig& cfg) {
  if (!(cfg.input.p1 > 0.0 && cfg.input.p1 < 1.0))
    throw std::domain_error("estimate_mi: needs 0 < p1 < 1");

  OutputSampler sampler(cfg);
  // Welford mean/variance; sequential so the reduction is reproducible
  double mean = 0.0, m2 = 0.0;
  const std::size_t n = cfg.n_samples;
  for (std::size_t i = 0; i < n; ++i) {
    const Sample s = sampler.next();
    const double v = (s.x > 0.0) ? log_ratio_on(s.y, cfg.input)
                                 : log_ratio_off(s.y, cfg.input);
    const double d = v - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (v - mean);
  }
  const double variance = m2 / static_cast<double>(n - 1);
  return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

}  // namespace lowsnr
