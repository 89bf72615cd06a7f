#pragma once

#include <cstdint>

namespace gravicat {

/// splitmix64 mixing step; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// xoshiro256++ uniform stream. Self-contained so that results are
/// bit-identical across platforms and standard-library versions.
/// An override slot lets callers stratify the first variate of a sample.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) {
      sm += 0x9e3779b97f4a7c15ULL;
      word = mix64(sm);
    }
    override_armed_ = false;
    override_ = 0.0;
  }

  /// Next U[0,1) variate (or the pending override, once).
  double next() {
    if (override_armed_) {
      override_armed_ = false;
      return override_;
    }
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Arranges for the next call to next() to return u.
  void push_override(double u) {
    override_ = u;
    override_armed_ = true;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
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

  std::uint64_t s_[4];
  double override_;
  bool override_armed_;
};

}  // namespace gravicat
