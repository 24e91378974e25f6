#ifndef AMPC_RNG_HPP_
#define AMPC_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <string_view>

namespace ampc {

// Splittable deterministic RNG. All randomness in the library flows from a
// single 64-bit seed; independent streams are derived by absorbing salt
// words (client id, round, purpose tag) through a splitmix64 chain, and the
// resulting key seeds a xoshiro256++ state. A stream must be owned by a
// single thread.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) { init(seed); }

  RngStream(std::uint64_t seed, std::uint64_t salt) {
    init(mix(seed, salt));
  }
  RngStream(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b) {
    init(mix(mix(seed, salt_a), salt_b));
  }
  RngStream(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b,
            std::uint64_t salt_c) {
    init(mix(mix(mix(seed, salt_a), salt_b), salt_c));
  }

  // Derive a child stream without disturbing this stream's sequence.
  RngStream split(std::uint64_t salt) const {
    RngStream child(0);
    child.init(mix(mix(s_[0] ^ s_[3], s_[1]), salt));
    return child;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection to avoid modulo bias; negligible retry probability for the
    // small n used here.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via polar Box-Muller. No state beyond the cached spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix(std::uint64_t key, std::uint64_t salt) {
    std::uint64_t state = key ^ (0xa0761d6478bd642full + salt);
    std::uint64_t a = splitmix64(state);
    std::uint64_t b = splitmix64(state);
    return a ^ rotl(b, 29);
  }

  void init(std::uint64_t key) {
    std::uint64_t state = key;
    for (int i = 0; i < 4; ++i) s_[i] = splitmix64(state);
    have_spare_ = false;
  }

  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable salts for deriving per-purpose streams from (seed, client, round).
namespace rng_purpose {
constexpr std::uint64_t kShareNoise = 0x51;
constexpr std::uint64_t kTripleDealer = 0x52;
constexpr std::uint64_t kBatch = 0x53;
constexpr std::uint64_t kWeightInit = 0x54;
constexpr std::uint64_t kAudit = 0x55;
constexpr std::uint64_t kSplit = 0x56;
constexpr std::uint64_t kSynthData = 0x57;
}  // namespace rng_purpose

}  // namespace ampc

#endif  // AMPC_RNG_HPP_
