#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordwalk {

// Malformed ordinal notation, bad file contents, unusable CLI input.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A precondition of an operation does not hold (caller error).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured enumeration/recursion/search budget was exhausted. Diagnostic:
// on the built-in families this indicates inputs far beyond desk scale, on
// user-supplied families it usually means the family is broken.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A family query could not be answered (incomplete or inconsistent family data).
struct family_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic, platform-independent PRNG helpers. std::uniform_int_distribution
// is implementation-defined, so seeded reports would not be reproducible across
// standard libraries; modulo reduction is fine at the sample sizes used here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

} // namespace ordwalk
