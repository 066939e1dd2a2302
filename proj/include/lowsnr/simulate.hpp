#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lowsnr/types.hpp"

namespace lowsnr {

/// One channel use: transmitted amplitude and normalized output energy.
struct Sample {
  double x;
  double y;
};

/// Monte Carlo configuration.  Identical (seed, config) yields a bit-identical
/// sample stream and estimate.  Leaving `params` empty selects normalized
/// units (unit fading and noise variance).
struct SimConfig {
  enum class SamplePath { DirectExponential, ComplexGaussian };

  std::uint64_t seed = 0;
  std::size_t n_samples = 1000;
  OnOffInput input{1.0, 0.5};
  std::optional<ChannelParams> params;
  SamplePath path = SamplePath::DirectExponential;
};

/// Deterministic generator with a documented stream: one uniform for the
/// Bernoulli input, then either one uniform (direct exponential) or four
/// (complex-Gaussian fading and noise, Box-Muller) per sample, drawn from
/// xoshiro256++ seeded via splitmix64.
class OutputSampler {
 public:
  explicit OutputSampler(const SimConfig& cfg);
  Sample next();

 private:
  double uniform();

  SimConfig cfg_;
  double sigma_h_;
  double sigma_w_;
  std::uint64_t state_[4];
};

/// Materialize `count` samples from the stream.
std::vector<Sample> sample_outputs(const SimConfig& cfg, std::size_t count);

struct MiEstimate {
  double estimate;
  double std_error;
  std::size_t n;
};

/// Plug-in mutual-information estimate: the sample mean of ln(f(y|x)/f(y))
/// using the known densities, so the Monte Carlo checks the model algebra
/// rather than estimating densities.  std_error = sample sd / sqrt(n).
MiEstimate estimate_mi(const SimConfig& cfg);

}  // namespace lowsnr
