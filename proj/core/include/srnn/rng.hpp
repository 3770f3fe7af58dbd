#pragma once

#include <cstdint>

namespace srnn {

// Counter-based deterministic PRNG (splitmix64). The whole stream is a pure
// function of the 64-bit state, so saving and restoring `state()` resumes the
// stream exactly. One instance per owner; never shared between threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double next_double();

    // Uniform integer in [0, n), n > 0.
    std::uint64_t next_below(std::uint64_t n);

    // Standard normal via Box-Muller; consumes exactly two uniforms per draw
    // so the stream position stays a simple counter.
    double next_gaussian();

    std::uint64_t state() const { return state_; }
    void set_state(std::uint64_t s) { state_ = s; }

    // Derives an independently seeded stream, e.g. for validation data.
    Rng fork(std::uint64_t salt) const;

private:
    std::uint64_t state_;
};

}  // namespace srnn
