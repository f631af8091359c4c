#pragma once

#include <cstdint>
#include <random>

namespace kuhn {

// splitmix64 finalizer, used to derive well-separated seeds for sub-streams.
inline constexpr std::uint64_t split_mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return split_mix(base ^ split_mix(salt));
}

template <typename... Salts>
inline constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt,
                                           std::uint64_t next, Salts... rest) {
  return derive_seed(derive_seed(base, salt), next, rest...);
}

// Seeded generator with explicit uniform extraction so that every stream is
// reproducible bit-for-bit across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on the open interval (0, 1).
  double next_double() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t x = gen_();
    std::uint64_t r = x % n;
    while (x - r > 0 - n) {
      x = gen_();
      r = x % n;
    }
    return r;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kuhn
