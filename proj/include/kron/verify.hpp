#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kron {

struct VerifyCheck {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string actual;
    double seconds = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool pass = false;  // true iff every check passes
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    unsigned long long budget_lattice = 1'000'000;
    unsigned long long budget_end = 1ull << 20;
    int workers = 0;  // 0 = KRON_WORKERS env var, else hardware concurrency
};

/// Suites: figures, grid, coxeter, fib, oracle-small, oracle-sampling,
/// successor, order, partition, all.  Throws PreconditionError on an unknown
/// name.  Reports are deterministic for fixed seed, independent of worker
/// count.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();

std::string report_to_json(const VerifyReport& r);

}  // namespace kron
