#include "namegame/rng.hpp"

#include <cmath>

namespace namegame {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : RngStream(RawKey{}, mix64(mix64(seed + kGolden) ^ (stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL))) {}

RngStream::RngStream(RawKey, std::uint64_t key) : key_(key), state_(key) {}

RngStream RngStream::derive(std::uint64_t id) const {
  return RngStream(RawKey{}, mix64(key_ + kGolden * (id + 1)));
}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  if (!(lo < hi)) throw ContractError("uniform: empty interval");
  return lo + (hi - lo) * uniform();
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw ContractError("uniform_index: n must be positive");
  // Lemire's multiply-shift with rejection of the biased region.
  std::uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    const std::uint64_t threshold = -n % n;
    while (lo < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

}  // namespace namegame
