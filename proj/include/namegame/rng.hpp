#pragma once

#include <cstdint>
#include <utility>

#include "namegame/errors.hpp"

namespace namegame {

// Counter-based pseudo-random stream (splitmix64 core).  Every stream is
// identified by a key; derive(id) produces a decorrelated child stream whose
// identity depends only on the parent key and the id, never on how far the
// parent has advanced.  That makes seeding layouts reproducible: the harness
// re-creates any stream from (master seed, path of ids) alone.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  // Child stream keyed by (this stream's key, id).  Const: does not advance.
  RngStream derive(std::uint64_t id) const;

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer in [0, n).  n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

  // Standard normal via the Marsaglia polar method (second deviate cached).
  double normal();

  // Fisher-Yates shuffle.
  template <class RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      const std::uint64_t j = uniform_index(i);
      using std::swap;
      swap(first[i - 1], first[j]);
    }
  }

 private:
  struct RawKey {};
  RngStream(RawKey, std::uint64_t key);

  std::uint64_t key_;
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace namegame
