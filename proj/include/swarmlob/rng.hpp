#pragma once

// Deterministic random number generation. Engines and the bounded-integer
// mapping are implemented here (rather than via std::uniform_int_distribution)
// so that a given (algorithm, seed) pair produces the same stream on every
// platform and standard library.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace swarmlob {

// splitmix64 (Steele, Lea, Flood 2014). Used for seeding the main engine and
// for deriving replication substreams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Substream seed for replication r. The base seed is advanced once through
// splitmix64, the replication index is added, and the sum is mixed again, so
// consecutive replication indices land far apart in seed space.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t replication) {
  SplitMix64 base(seed);
  SplitMix64 stream(base.next() + replication);
  return stream.next();
}

// xoshiro256** 1.0 (Blackman, Vigna). State seeded via splitmix64 as the
// authors recommend.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

enum class RngAlgorithm { Xoshiro256StarStar, Mt19937_64 };

inline std::string to_string(RngAlgorithm alg) {
  return alg == RngAlgorithm::Xoshiro256StarStar ? "xoshiro256ss" : "mt19937_64";
}

inline RngAlgorithm parse_rng_algorithm(const std::string& name) {
  if (name == "xoshiro256ss") return RngAlgorithm::Xoshiro256StarStar;
  if (name == "mt19937_64") return RngAlgorithm::Mt19937_64;
  throw std::invalid_argument("unknown rng algorithm: " + name);
}

// Seedable generator with portable uniform sampling. uniform_below uses
// Lemire's multiply-reject method, so the stream of variates is a pure
// function of (algorithm, seed).
class Rng {
 public:
  Rng(RngAlgorithm alg, std::uint64_t seed) : alg_(alg), xoshiro_(seed), mt_(seed) {}

  std::uint64_t next_u64() {
    return alg_ == RngAlgorithm::Xoshiro256StarStar ? xoshiro_.next() : mt_();
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_double() < p; }

  // Uniform on {0, ..., n-1}; n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform on the inclusive integer range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(uniform_below(span));
  }

 private:
  RngAlgorithm alg_;
  Xoshiro256StarStar xoshiro_;
  std::mt19937_64 mt_;
};

}  // namespace swarmlob
