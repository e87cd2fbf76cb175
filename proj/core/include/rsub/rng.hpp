#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rsub {

// Deterministic random stream. Engine output is fully specified by the
// standard, and the conversions below avoid the implementation-defined
// std distributions, so results are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  // Independent stream keyed by (seed, index), e.g. one per trial or retry.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  double uniform();                       // [0, 1)
  bool bernoulli(double p);               // p >= 1 always true, p <= 0 never
  std::uint64_t below(std::uint64_t n);   // uniform in [0, n), n > 0

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace rsub
