#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kron/measure.hpp"
#include "kron/repkit.hpp"

namespace kron {

/// Verified witness for a GR measure: a strictly increasing chain of
/// indecomposable subrepresentations whose length set equals the measure.
struct GrCertificate {
    std::vector<SubRep> chain;  // innermost first, last element is R itself
    std::vector<Int> lengths;
    GrMeasure measure;
    /// Classification of the GR submodule's dimension vector, when the
    /// position is recognizable; empty = Unknown.
    std::optional<PositionClass> gr_submodule_class;
};

std::string certificate_to_json(const GrCertificate& cert);

/// GR measure from first principles, by dynamic programming over the full
/// subrepresentation poset of an explicit representation.
///
/// For every subrepresentation W define g(W) = max { mu(V) : V <= W
/// indecomposable }.  The recursion walks the maximal (codimension-one)
/// subrepresentations of W: source hyperplanes keep closure automatically,
/// sink hyperplanes must contain the image of the source subspace.  When W
/// itself is indecomposable, mu(W) = extend(g over maximal subreps, |W|) and
/// g(W) = mu(W); otherwise g(W) is inherited.  Memoization is on the
/// canonical RREF bases, so every subrepresentation is visited once.
///
/// Budgets are first-class: exceeding the node budget or the endomorphism
/// enumeration budget raises BudgetExceeded, never a silent wrong answer.
class GrOracle {
  public:
    explicit GrOracle(Rep R, unsigned long long budget_lattice = 1'000'000,
                      unsigned long long budget_end = 1ull << 20);

    const Rep& rep() const { return rep_; }

    /// mu(R); throws NotIndecomposable if R is decomposable.
    const GrMeasure& measure();

    /// Witness chain for measure(), innermost submodule first.
    GrCertificate certificate();

    /// All proper indecomposable U with extend(mu(U), |R|) = mu(R).
    std::vector<SubRep> gr_submodules();

    /// mu of an indecomposable subrepresentation (throws NotIndecomposable
    /// otherwise).
    const GrMeasure& measure_of(const SubRep& U);

    /// mu(R) starts with mu(U).
    bool is_piling(const SubRep& U);

    /// R regular with every GR submodule preprojective (no proper regular
    /// submodule).  Requires dim R to classify as Regular.
    bool in_B();

    /// Subrepresentations visited (= lattice size once measure() has run).
    std::size_t node_count() const { return nodes_.size(); }

    /// mu(U) <= mu(R) for every indecomposable U in the lattice, with
    /// equality only for U = R.
    bool check_submodule_monotonicity();

    /// quotient(R, U) is indecomposable for every GR submodule U.
    bool check_gr_factor_indecomposability();

  private:
    struct Node {
        SubRep sub;
        int g = -1;       // interned index of g(W); -1 for the zero subrep
        int mu = -1;      // interned mu(W) if W is indecomposable, else -1
        int attain = -1;  // node achieving g(W)
        int prev = -1;    // for indecomposable W: predecessor in the mu-chain
    };

    int solve(const SubRep& W);
    int root();
    int intern(const GrMeasure& m);
    std::string key_of(const SubRep& W) const;

    Rep rep_;
    unsigned long long budget_lattice_;
    unsigned long long budget_end_;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<GrMeasure> measures_;
    std::unordered_map<std::string, int> measure_index_;
    int root_ = -1;
};

/// One-shot conveniences over GrOracle.
std::pair<GrMeasure, GrCertificate> gr_measure_oracle(
    const Rep& R, unsigned long long budget_lattice = 1'000'000,
    unsigned long long budget_end = 1ull << 20);

std::vector<SubRep> gr_submodules(const Rep& R,
                                  unsigned long long budget_lattice = 1'000'000,
                                  unsigned long long budget_end = 1ull << 20);

bool is_piling(const Rep& R, const SubRep& U,
               unsigned long long budget_lattice = 1'000'000,
               unsigned long long budget_end = 1ull << 20);

bool in_B(const Rep& R, unsigned long long budget_lattice = 1'000'000,
          unsigned long long budget_end = 1ull << 20);

}  // namespace kron
