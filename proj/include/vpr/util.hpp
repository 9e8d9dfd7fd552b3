#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vpr {

/// Deterministic 64-bit PRNG (splitmix64). Used everywhere a seeded random
/// choice is needed so results do not depend on the platform's std::random
/// distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return static_cast<std::size_t>(x % n);
    }

    /// Uniform double in [0, 1).
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform_range(double lo, double hi) {
        return lo + (hi - lo) * uniform_double();
    }

private:
    std::uint64_t state_;
};

/// FNV-1a running hash; used for content fingerprints.
class Fingerprint {
public:
    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            hash_ ^= p[i];
            hash_ *= 0x100000001b3ULL;
        }
    }

    void update_u64(std::uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        update(b, 8);
    }

    void update_string(const std::string& s) {
        update_u64(s.size());
        update(s.data(), s.size());
    }

    std::uint64_t value() const { return hash_; }
    std::string hex() const;

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string hash_file(const std::string& path);

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Tasks must be
/// independent; output determinism is the caller's responsibility (write
/// results by index). threads <= 1 runs inline.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

unsigned default_thread_count();

/// Monotonic wall-clock stopwatch for the timing study.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace vpr
