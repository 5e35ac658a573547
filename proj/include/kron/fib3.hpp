#pragma once

#include <mutex>
#include <vector>

#include "kron/dimvec.hpp"
#include "kron/errors.hpp"
#include "kron/numeric.hpp"

namespace kron {
namespace fib3 {

/// Demand-grown table of Fibonacci numbers.  F_{-1} = 1 is admitted so the
/// tau closed forms can be written uniformly; the closed-form lemmas
/// themselves are only invoked with i >= 1.
///
/// Growth is serialized; lookups of already-computed entries take no lock in
/// effect (the table only ever appends), so results are independent of
/// scheduling.
class FibCache {
  public:
    /// F_k for k >= -1.
    Int fib(long k);

  private:
    std::mutex mu_;
    std::vector<Int> table_;  // table_[i] = F_{i-1}
};

/// F_k via a shared process-wide cache.
Int fibonacci(long k);

/// Exact dimension vector of tau^k applied to v for n = 3, via the Fibonacci
/// closed form: tau^i gives (F_{4i+2}a - F_{4i}b, F_{4i}a - F_{4i-2}b) and
/// tau^{-i} gives (F_{4i}b - F_{4i-2}a, F_{4i+2}b - F_{4i}a).  Throws
/// NegativeEntry when the result leaves the positive cone (the module does
/// not exist that far in the orbit).  k = 0 returns v.
DimVec tau_power_closed_form(const DimVec& v, long k);

/// X_m: the alternating quasi-length sequence anchored at X_1 = (1,1);
/// F_{2m}(1,1) for odd m, F_{2m}(2,1) for even m.
DimVec quasi_length_dim(int m);

/// Window of a regular component of the 3-Kronecker quiver.
///
/// Chart convention (the figure in the literature carries no coordinates):
/// entry (j, t) with quasi-length j >= 1 and orbit offset t (t = 0 at the
/// anchor) is tau^{-t}(anchor[j]) = sum_{s=t}^{t+j-1} tau^{-s}(anchor).
class ComponentGrid {
  public:
    /// Builds entries for 1 <= j <= ql_max and |t| <= tau_radius.
    /// NegativeEntry propagates if the anchor's orbit leaves the cone.
    ComponentGrid(const DimVec& anchor, int tau_radius, int ql_max);

    const DimVec& at(int j, int t) const;
    int radius() const { return radius_; }
    int ql_max() const { return ql_max_; }
    const DimVec& anchor() const { return anchor_; }

    bool contains_value(const DimVec& v) const;

  private:
    DimVec anchor_;
    int radius_;
    int ql_max_;
    std::vector<std::vector<DimVec>> rows_;  // rows_[j-1][t + radius_]
};

/// True iff M and N lie at the same quasi-length in the anchor's component
/// with mirror-image orbit positions (the configuration forced by equal
/// lengths).  Positions are located by exhaustive search over a coordinate
/// window; returns false on a length mismatch; throws PreconditionError if a
/// vector is not found in the window.
bool same_length_mirror(const DimVec& anchor, const DimVec& M, const DimVec& N,
                        int tau_radius = 16, int ql_max = 12);

/// F_r F_s + F_{r-1} F_{s-1} = F_{r+s-1}, evaluated exactly.  r, s >= 1.
bool fib_identity_check(long r, long s);

}  // namespace fib3
}  // namespace kron
