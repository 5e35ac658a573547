#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kron/dimvec.hpp"
#include "kron/fpmat.hpp"
#include "kron/measure.hpp"

namespace kron {

/// Explicit representation of the n-Kronecker quiver over F_p: n matrices
/// alpha_1..alpha_n, each b rows x a columns (a = source dimension, b = sink
/// dimension), entries in [0,p).
struct Rep {
    int n = 3;
    int p = 2;
    int a = 0;
    int b = 0;
    std::vector<FpMat> mats;

    DimVec dim() const { return DimVec{a, b}; }
    int total() const { return a + b; }
};

/// Subrepresentation in canonical form: RREF bases of the source subspace
/// U2 <= F_p^a and the sink subspace U1 <= F_p^b, with alpha_i(U2) <= U1.
/// Canonical bases make equality a byte comparison.
struct SubRep {
    FpMat U2;  // rows x a
    FpMat U1;  // rows x b

    int total() const { return U2.rows + U1.rows; }
    DimVec dim() const { return DimVec{U2.rows, U1.rows}; }
    bool operator==(const SubRep& o) const { return U2 == o.U2 && U1 == o.U1; }
};

enum class CanonicalKind { P1, P2, Q0, Q1 };

/// The four explicit anchors P_1=(0,1), P_2=(1,n), Q_0=(1,0), Q_1=(n,1).
/// P_2 uses standard basis columns, Q_1 standard basis rows; all four are
/// indecomposable by construction.
Rep build_canonical(const KroneckerContext& ctx, int p, CanonicalKind kind);

/// Dimension (1,c) representation with alpha_i given by the chosen columns
/// (each of height c).  Indecomposability is checked by the caller, not
/// assumed.
Rep build_one_c(const KroneckerContext& ctx, int p, int c,
                const std::vector<std::vector<std::uint8_t>>& columns);

/// Seeded uniform random representation: entries drawn from mt19937_64(seed)
/// as engine() % p, filled arrow by arrow in row-major order.  Identical
/// output across platforms for equal seeds.
Rep random_rep(const KroneckerContext& ctx, int p, const DimVec& dim, std::uint64_t seed);

/// Random search for an indecomposable of the given dimension vector;
/// consecutive seeds starting at `seed`, capped at max_tries.
Rep random_indecomposable(const KroneckerContext& ctx, int p, const DimVec& dim,
                          std::uint64_t seed, int max_tries = 200,
                          unsigned long long budget_end = 1ull << 20);

/// Seeded random extension of `quot` by `sub`: block matrices with `sub` in
/// the top-left corner (a subrepresentation of the result), `quot` in the
/// bottom-right, and a random glue block.  Useful for building modules in a
/// regular component above a prescribed quasi-simple.
Rep stack_extension(const Rep& sub, const Rep& quot, std::uint64_t seed);

/// Basis of End(R): pairs (phi_source a x a, phi_sink b x b) with
/// phi_sink alpha_i = alpha_i phi_source for all i.  Always contains the
/// identity (as a span element).
std::vector<std::pair<FpMat, FpMat>> endomorphisms(const Rep& R);

/// Exact indecomposability via Fitting's lemma: R is indecomposable iff
/// every endomorphism is nilpotent or invertible.  Simple direct summands
/// (a sink line outside the image span, a source vector killed by every
/// arrow) are split off first; the remaining endomorphism algebra is
/// enumerated exhaustively.  Throws BudgetExceeded when p^dim(End) exceeds
/// budget_end, reporting dim(End); never silently assumes indecomposability.
bool is_indecomposable(const Rep& R, unsigned long long budget_end = 1ull << 20);

/// The representation induced on (U2, U1) in the coordinates of the RREF
/// bases.
Rep restrict_rep(const Rep& R, const SubRep& U);

/// Quotient representation on F^a/U2, F^b/U1 with the induced maps.
Rep quotient(const Rep& R, const SubRep& U);

/// Closure check: alpha_i(U2) <= U1 for all i.
bool is_subrep(const Rep& R, const SubRep& U);

/// The full subrepresentation lattice.
struct SubLattice {
    std::vector<SubRep> items;  // deduplicated canonical forms
    int p = 2;

    /// items[i] <= items[j] as subrepresentations.
    bool includes(std::size_t i, std::size_t j) const;
};

/// All subrepresentations, sink-side-first: U1 ascending by dimension, then
/// U2 over subspaces of the preimage intersection W(U1).  Throws
/// BudgetExceeded (with the Gaussian-coefficient estimate) when the sink
/// subspace count alone exceeds the budget, or when the node count does.
SubLattice enumerate_submodules(const Rep& R, unsigned long long budget = 1'000'000);

// --- JSON I/O -------------------------------------------------------------

/// Schema: {"n":int,"p":int,"dim":[a,b],"mats":[[row-major ints]]}.
std::string rep_to_json(const Rep& R);

/// Throws SchemaError on malformed input, non-prime p, or out-of-range
/// entries.
Rep rep_from_json(const std::string& text);

bool is_prime(int p);

}  // namespace kron
