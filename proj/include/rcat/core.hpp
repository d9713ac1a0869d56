#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcat {

// Raised when input data is malformed (bad indices, inconsistent shapes),
// as opposed to a well-formed object failing an axiom check.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration or construction exceeds a configured cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationIssue {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// splitmix64; fully specified, so reports are reproducible across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    int below(int n) {
        if (n <= 0) throw StructuralError("Rng::below: n must be positive");
        return static_cast<int>(next() % static_cast<std::uint64_t>(n));
    }

    bool coin() { return (next() & 1) != 0; }
};

// Per-case seed derived from the master seed, so parallel or reordered
// execution cannot change results.
inline std::uint64_t case_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
    r.next();
    return r.next();
}

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rcat
