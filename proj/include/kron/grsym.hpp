#pragma once

#include <map>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "kron/dimvec.hpp"
#include "kron/measure.hpp"

namespace kron {

/// Symbolic coordinate (c, i, j) for tau^{-i}X[j] where X is any
/// indecomposable with dim X = (1,c), 1 <= c <= n-1.
struct RegularCoord {
    int c;
    int i;  // tau^{-i}, i >= 0
    int j;  // quasi-length, j >= 1

    bool operator==(const RegularCoord& o) const {
        return c == o.c && i == o.i && j == o.j;
    }
    std::string to_string() const;
};

/// The GR submodule of a family member: either a preprojective P_r or the
/// previous member of the same family.
using GrSubmoduleRef = std::variant<PositionClass, RegularCoord>;

struct GrDescriptor {
    RegularCoord coord;
    GrSubmoduleRef gr_submodule;
    GrMeasure measure;
    DimVec dim;
};

struct UniverseBounds {
    int r_max = 0;   // preprojective measures P_1..P_{r_max}; 0 = none
    int c_lo = 1;    // family c range; c_lo > c_hi = no families
    int c_hi = 0;
    int i_max = 0;
    int j_max = 1;
};

struct UniverseEntry {
    GrMeasure measure;
    std::vector<std::string> labels;  // sources, e.g. "P(3)", "X(c=1,i=0,j=2)"
};

/// Closed-form GR measures for the n-Kronecker quiver: the take-off chain
/// mu(P_r) and the families mu(tau^{-i}X[j]) for dim X = (1,c).
///
/// family_measure results are memoized per (c,i,j); the table is guarded by a
/// mutex (single writer per key, shared reads), so results are identical
/// regardless of scheduling.
class GrSymbolic {
  public:
    explicit GrSymbolic(KroneckerContext ctx) : ctx_(std::move(ctx)) {}

    const KroneckerContext& ctx() const { return ctx_; }

    /// {|P_1|, ..., |P_r|}: the take-off measure chain.
    GrMeasure preprojective_measure(int r) const;

    /// dim tau^{-i}X[j] = sum_{t=i}^{i+j-1} tau^{-t}(1,c).
    DimVec family_dim(const RegularCoord& coord) const;

    /// The GR submodule: (c,i,j-1) for j >= 2; for j = 1 a preprojective
    /// P_1 (i = 0), P_{2i} (c = 1, i >= 1) or P_{2i+1} (c >= 2).
    GrSubmoduleRef family_gr_submodule(const RegularCoord& coord) const;

    /// mu(tau^{-i}X[j]): the GR submodule's measure extended by the member's
    /// length.  First entry is always 1.
    GrMeasure family_measure(const RegularCoord& coord) const;

    GrDescriptor descriptor(const RegularCoord& coord) const;

    /// mu(tau^{-i}X[j+1]), the direct successor of mu(tau^{-i}X[j]).
    GrMeasure direct_successor(const RegularCoord& coord) const;

    /// [mu(c,i,1), ..., mu(c,i,j_max)]: an initial piece of a GR segment.
    std::vector<GrMeasure> segment(int c, int i, int j_max) const;

    /// True iff mu(tau^{-i'}X) < mu(tau^{-i}X) for i < i'.
    bool monotone_in_i(int c, int i, int i_prime) const;

    /// Ordering of the landing measures mu(Q_r), mu(Q_s) for r, s >= 1, by
    /// index only: mu(Q_{r+1}) < mu(Q_r).  No closed form for the values is
    /// known; explicit small cases are delegated to the oracle.
    Ordering landing_measure_compare(int r, int s) const;

    /// All measures produced by preprojective_measure and family_measure
    /// within the bounds, deduplicated, labels merged, sorted ascending.
    std::vector<UniverseEntry> measure_universe(const UniverseBounds& bounds) const;

  private:
    void check_coord(const RegularCoord& coord) const;

    KroneckerContext ctx_;
    mutable std::mutex memo_mu_;
    mutable std::map<std::tuple<int, int, int>, GrMeasure> memo_;
};

}  // namespace kron
