#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace byol {

// splitmix64; also the mixer used to derive subsystem seeds from the root seed.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Seed derivation: root seed + label (+ indices) -> independent stream seed.
// Documented so runs are reproducible from the single config seed.
inline uint64_t derive_seed(uint64_t root, std::string_view label) {
  uint64_t s = root ^ fnv1a64(label);
  return splitmix64(s);
}
inline uint64_t derive_seed(uint64_t root, std::string_view label, uint64_t a) {
  uint64_t s = root ^ fnv1a64(label);
  s = splitmix64(s) ^ (a * 0x9e3779b97f4a7c15ull);
  return splitmix64(s);
}
inline uint64_t derive_seed(uint64_t root, std::string_view label, uint64_t a, uint64_t b) {
  uint64_t s = derive_seed(root, label, a) ^ (b * 0xd1b54a32d192ed03ull);
  return splitmix64(s);
}

// Deterministic generator independent of the standard library's
// distribution internals. xoshiro-free: splitmix stream is enough here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  int64_t uniform_int(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  double normal(double mean = 0.0, double stddev = 1.0) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + stddev * spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return mean + stddev * r * std::cos(theta);
  }

  // Fisher-Yates; deterministic for a given seed.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace byol
