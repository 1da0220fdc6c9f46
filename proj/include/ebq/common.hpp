#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ebq {

/// Error type for all contract violations and failed verifications.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond)
    throw Error(msg);
}

/// Deterministic 64-bit generator (splitmix64). Used wherever a seeded
/// random draw is allowed; never touches global state, identical output
/// on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

} // namespace ebq
