#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace metatune {

// Deterministic random stream. Every stream in a run is derived from the
// single top-level seed plus a path of integer ids (stage, episode, trial,
// purpose, ...), so serial and parallel execution consume identical streams.
//
// Variates are generated from raw mt19937_64 output with fixed arithmetic
// (53-bit uniforms, Box-Muller normals) rather than std::*_distribution,
// whose algorithms are implementation-defined. Identical seeds therefore
// produce identical sequences on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // Child stream at `path` under `root_seed`. Ids are mixed with splitmix64
  // so that nearby paths land on unrelated engine states.
  static RngStream derive(std::uint64_t root_seed,
                          std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform();
  // Uniform in [lo, hi); returns lo exactly when lo == hi.
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi] inclusive (unbiased via rejection).
  int uniform_int(int lo, int hi);
  // Gaussian via Box-Muller; consumes exactly two uniforms per call.
  double normal(double mean, double stddev);

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[uniform_int(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Purpose tags for derived streams. Values are part of the reproducibility
// contract: changing them changes every downstream sequence.
namespace stream {
inline constexpr std::uint64_t kScene = 1;
inline constexpr std::uint64_t kProposals = 2;
inline constexpr std::uint64_t kProxySplit = 3;
inline constexpr std::uint64_t kPretrain = 4;
inline constexpr std::uint64_t kEpisode = 5;
inline constexpr std::uint64_t kEvalSplit = 6;
inline constexpr std::uint64_t kEvalFinetune = 7;
// Per-trial sub-purposes under kEpisode.
inline constexpr std::uint64_t kTrialRho = 0;
inline constexpr std::uint64_t kTrialSupport = 1;
inline constexpr std::uint64_t kTrialTrain = 2;
}  // namespace stream

}  // namespace metatune
