#include "kron/fib3.hpp"

namespace kron {
namespace fib3 {

Int FibCache::fib(long k) {
    if (k < -1) throw PreconditionError("fibonacci: k >= -1 required");
    std::lock_guard<std::mutex> lock(mu_);
    if (table_.empty()) {
        table_.push_back(1);  // F_{-1}
        table_.push_back(0);  // F_0
        table_.push_back(1);  // F_1
    }
    while (static_cast<long>(table_.size()) <= k + 1)
        table_.push_back(table_[table_.size() - 1] + table_[table_.size() - 2]);
    return table_[static_cast<std::size_t>(k + 1)];
}

Int fibonacci(long k) {
    static FibCache cache;
    return cache.fib(k);
}

DimVec tau_power_closed_form(const DimVec& v, long k) {
    if (k == 0) return v;
    const Int &a = v.a, &b = v.b;
    DimVec w;
    if (k > 0) {
        long i = k;
        w = DimVec{fibonacci(4 * i + 2) * a - fibonacci(4 * i) * b,
                   fibonacci(4 * i) * a - fibonacci(4 * i - 2) * b};
    } else {
        long i = -k;
        w = DimVec{fibonacci(4 * i) * b - fibonacci(4 * i - 2) * a,
                   fibonacci(4 * i + 2) * b - fibonacci(4 * i) * a};
    }
    if (w.a < 0 || w.b < 0 || w.is_zero())
        throw NegativeEntry("tau_power_closed_form: tau^" + std::to_string(k) +
                            " of " + v.to_string() + " leaves the positive cone");
    return w;
}

DimVec quasi_length_dim(int m) {
    if (m < 1) throw PreconditionError("quasi_length_dim: m >= 1 required");
    const Int f = fibonacci(2L * m);
    return (m % 2 == 1) ? DimVec{f, f} : DimVec{2 * f, f};
}

ComponentGrid::ComponentGrid(const DimVec& anchor, int tau_radius, int ql_max)
    : anchor_(anchor), radius_(tau_radius), ql_max_(ql_max) {
    if (tau_radius < 0 || ql_max < 1)
        throw PreconditionError("ComponentGrid: radius >= 0 and ql_max >= 1 required");
    // tau^{-s}(anchor) for s in [-radius, radius + ql_max - 1].
    std::vector<DimVec> orbit;
    for (int s = -radius_; s <= radius_ + ql_max_ - 1; ++s)
        orbit.push_back(tau_power_closed_form(anchor_, -s));
    rows_.resize(static_cast<std::size_t>(ql_max_));
    for (int j = 1; j <= ql_max_; ++j) {
        auto& row = rows_[static_cast<std::size_t>(j - 1)];
        for (int t = -radius_; t <= radius_; ++t) {
            DimVec sum{0, 0};
            for (int s = t; s <= t + j - 1; ++s)
                sum = sum + orbit[static_cast<std::size_t>(s + radius_)];
            row.push_back(sum);
        }
    }
}

const DimVec& ComponentGrid::at(int j, int t) const {
    if (j < 1 || j > ql_max_ || t < -radius_ || t > radius_)
        throw PreconditionError("ComponentGrid::at out of window");
    return rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t + radius_)];
}

bool ComponentGrid::contains_value(const DimVec& v) const {
    for (const auto& row : rows_)
        for (const auto& d : row)
            if (d == v) return true;
    return false;
}

bool same_length_mirror(const DimVec& anchor, const DimVec& M, const DimVec& N,
                        int tau_radius, int ql_max) {
    if (length(M) != length(N)) return false;
    ComponentGrid grid(anchor, tau_radius, ql_max);
    auto locate = [&](const DimVec& v) -> std::pair<int, int> {
        for (int j = 1; j <= ql_max; ++j)
            for (int t = -tau_radius; t <= tau_radius; ++t)
                if (grid.at(j, t) == v) return {j, t};
        throw PreconditionError("same_length_mirror: " + v.to_string() +
                                " not found in the component window");
    };
    auto [jm, tm] = locate(M);
    auto [jn, tn] = locate(N);
    // The mirror of tau^{-t}X[j] swaps the two ends of the orbit window
    // [t, t+j-1], i.e. t <-> -(j-1) - t.
    return jm == jn && tn == -(jm - 1) - tm;
}

bool fib_identity_check(long r, long s) {
    if (r < 1 || s < 1) throw PreconditionError("fib_identity_check: r, s >= 1 required");
    return fibonacci(r) * fibonacci(s) + fibonacci(r - 1) * fibonacci(s - 1) ==
           fibonacci(r + s - 1);
}

}  // namespace fib3
}  // namespace kron
