#pragma once

#include <cstdint>
#include <vector>

#include "kron/errors.hpp"
#include "kron/numeric.hpp"

namespace kron {

/// Dense matrix over F_p, entries reduced to [0,p).  p is passed to the
/// operations; matrices themselves are field-agnostic byte arrays.
struct FpMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> e;  // row-major

    FpMat() = default;
    FpMat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const FpMat& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }

    static FpMat identity(int n) {
        FpMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

namespace fp {

int inverse_mod(int x, int p);

FpMat mul(const FpMat& A, const FpMat& B, int p);

/// A * v for a column vector v of size A.cols.
std::vector<std::uint8_t> mul_vec(const FpMat& A, const std::vector<std::uint8_t>& v, int p);

/// In-place reduced row echelon form; returns the rank.  Rows beyond the
/// rank are zeroed.
int rref_in_place(FpMat& m, int p);

/// Canonical basis of the row space: RREF with zero rows dropped.
FpMat row_basis(const FpMat& m, int p);

int rank(const FpMat& m, int p);

/// Canonical basis (RREF rows) of {v : M v = 0}.
FpMat nullspace(const FpMat& m, int p);

/// Pivot columns of an RREF basis.
std::vector<int> pivot_cols(const FpMat& rref_basis);

/// Reduce v against an RREF basis in place; afterwards v has zeros in all
/// pivot columns.  Returns the coefficients used (coordinates of the removed
/// part in the basis).
std::vector<std::uint8_t> reduce_by_basis(const FpMat& rref_basis,
                                          std::vector<std::uint8_t>& v, int p);

bool span_contains(const FpMat& rref_basis, const std::vector<std::uint8_t>& v, int p);

/// Subspace containment: every row of `a` lies in the span of `b`.
bool subspace_leq(const FpMat& a, const FpMat& b, int p);

/// All hyperplanes (codimension-1 subspaces) of the space spanned by an RREF
/// basis, each returned as a canonical RREF basis in ambient coordinates.
std::vector<FpMat> hyperplanes(const FpMat& rref_basis, int p);

/// Total number of subspaces of F_p^m (sum of Gaussian binomials).
Int subspace_count(int m, int p);

/// All subspaces of F_p^m as canonical RREF bases, ascending by dimension.
/// Throws BudgetExceeded if subspace_count(m,p) > budget.
std::vector<FpMat> all_subspaces(int m, int p, unsigned long long budget);

}  // namespace fp
}  // namespace kron
