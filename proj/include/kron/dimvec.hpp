#pragma once

#include <array>
#include <string>
#include <vector>

#include "kron/errors.hpp"
#include "kron/numeric.hpp"

namespace kron {

/// Dimension vector of an n-Kronecker representation.
///
/// Convention (fixed by P_1=(0,1), P_2=(1,n) and never spelled out in most
/// sources): `a` is the dimension at the source vertex 2, `b` the dimension
/// at the sink vertex 1.  Vectors transform as row vectors with the Coxeter
/// matrix acting on the right.
struct DimVec {
    Int a;  // source vertex 2
    Int b;  // sink vertex 1

    DimVec() : a(0), b(0) {}
    DimVec(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const DimVec& o) const { return a == o.a && b == o.b; }
    bool operator!=(const DimVec& o) const { return !(*this == o); }

    DimVec operator+(const DimVec& o) const { return {a + o.a, b + o.b}; }
    DimVec operator-(const DimVec& o) const { return {a - o.a, b - o.b}; }

    /// Componentwise strict comparison (the paper's (a,b) < (c,d)).
    bool strictly_below(const DimVec& o) const { return a < o.a && b < o.b; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool nonnegative() const { return a >= 0 && b >= 0; }

    std::string to_string() const;
};

/// |M| = a + b, the length of a representation with this dimension vector.
Int length(const DimVec& v);

enum class RootClass { RealRoot, ImaginaryRoot, NotRoot };

struct PositionClass {
    enum Tag { Preprojective, Preinjective, Regular } tag;
    // Index into the P_r (r >= 1) or Q_r (r >= 0) sequence; unused for
    // Regular.
    int index = 0;

    bool operator==(const PositionClass& o) const {
        return tag == o.tag && (tag == Regular || index == o.index);
    }
    std::string to_string() const;
};

/// The n-Kronecker quiver, n >= 3 (the wild case), with its Coxeter data.
class KroneckerContext {
  public:
    explicit KroneckerContext(int n);

    int n() const { return n_; }

    /// v Phi^k (k may be negative), checking that every intermediate vector
    /// stays componentwise >= 0 with positive total; throws OrbitEscape
    /// otherwise.  Phi = [[n^2-1, n], [-n, -1]] acts on row vectors from the
    /// right, matching dim(tau M) = dim(M) Phi.
    DimVec coxeter_apply(const DimVec& v, long k) const;

    /// q((x1,x2)) = x1^2 + x2^2 - n x1 x2.
    Int quadratic_form(const DimVec& v) const;

    /// <x,y> = x1 y1 + x2 y2 - n x1 y2 = dim Hom(X,Y) - dim Ext^1(X,Y).
    Int euler_form(const DimVec& x, const DimVec& y) const;

    /// RealRoot iff q = 1, ImaginaryRoot iff q < 0, otherwise NotRoot.
    /// For n >= 3 there is no isotropic class: the eigenray slopes
    /// (n +- sqrt(n^2-4))/2 are irrational, so no nonzero integer vector has
    /// q = 0.  Throws PreconditionError on the zero vector or negative
    /// entries.
    RootClass classify_root(const DimVec& v) const;

    /// P_1=(0,1), P_2=(1,n), P_{r+2} = P_r Phi^{-1}.
    DimVec preprojective_dim(int r) const;

    /// Q_0=(1,0), Q_1=(n,1), Q_{r+2} = Q_r Phi.
    DimVec preinjective_dim(int r) const;

    /// Matches a positive root against the P_r / Q_r sequences (their lengths
    /// strictly increase, so the search is bounded by |v|); imaginary roots
    /// are Regular.  Throws PreconditionError for non-roots and
    /// InternalContradiction if a real root matches neither sequence.
    PositionClass classify_position(const DimVec& v) const;

    /// True iff sum_{i=0}^{r} tau^{-i} x0 < tau^{-(r+1)} x0 componentwise.
    /// Requires x0.a <= x0.b.
    bool orbit_sum_check(const DimVec& x0, int r) const;

    /// b + q((a,b)) / ((n+1)a - b), exact.  Lower bound for the sink
    /// dimension of any equal-length regular Y with Hom(X,Y) = 0.
    /// Requires (n+1)a > b.
    Rat hom_bound_second_coord(const DimVec& x) const;

    /// True iff no vector (a-t, b+t), 1 <= t <= a-1, is an imaginary root.
    bool root_window_check(const DimVec& v) const;

  private:
    int n_;
};

}  // namespace kron
