#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ctxcorrect {

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using RowX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matf = MatX<float>;
using Matd = MatX<double>;

/// Base error for anything raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration or bad input data (maps to CLI exit code 2 when
/// detected before work starts).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// I/O failure (missing file, unwritable path, corrupt format).
class IoError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic RNG.
//
// std::mt19937 distributions are implementation-defined, so everything that
// must be byte-reproducible draws through this splitmix64-based generator.
// ---------------------------------------------------------------------------
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
  uint64_t below(uint64_t n) {
    if (n == 0) throw Error("Rng::below called with n == 0");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 bits of entropy.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cached spare for determinism).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Derive an independent stream, e.g. one per corpus sentence.
  Rng fork(uint64_t stream) const {
    Rng child(state_ ^ (0x94d049bb133111ebull * (stream + 1)));
    child.next_u64();
    return child;
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// ---------------------------------------------------------------------------
// Small string helpers shared across modules.
// ---------------------------------------------------------------------------
std::string to_lower_ascii(std::string s);
std::vector<std::string> split_whitespace(const std::string& text);
std::string join_words(const std::vector<std::string>& words);

// ---------------------------------------------------------------------------
// File helpers. All writers go through atomic_write: write to a temp file in
// the same directory, then rename over the destination.
// ---------------------------------------------------------------------------
void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must be
/// written to independent slots; the function itself imposes no ordering.
void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn);

}  // namespace ctxcorrect
