#include "kron/dimvec.hpp"

#include <sstream>

namespace kron {

std::string DimVec::to_string() const {
    std::ostringstream os;
    os << '(' << a << ',' << b << ')';
    return os.str();
}

Int length(const DimVec& v) { return v.a + v.b; }

std::string PositionClass::to_string() const {
    switch (tag) {
        case Preprojective: return "Preprojective(" + std::to_string(index) + ")";
        case Preinjective: return "Preinjective(" + std::to_string(index) + ")";
        case Regular: return "Regular";
    }
    return "?";
}

KroneckerContext::KroneckerContext(int n) : n_(n) {
    if (n < 3)
        throw PreconditionError("KroneckerContext requires n >= 3 (wild case)");
}

DimVec KroneckerContext::coxeter_apply(const DimVec& v, long k) const {
    const Int n = n_;
    DimVec w = v;
    auto step_forward = [&](const DimVec& u) {  // u Phi
        return DimVec{(n * n - 1) * u.a - n * u.b, n * u.a - u.b};
    };
    auto step_back = [&](const DimVec& u) {  // u Phi^{-1}
        return DimVec{-u.a + n * u.b, -n * u.a + (n * n - 1) * u.b};
    };
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        w = k > 0 ? step_forward(w) : step_back(w);
        if (!w.nonnegative() || w.is_zero())
            throw OrbitEscape("coxeter_apply: orbit escaped at step " + std::to_string(i + 1) +
                              " of " + std::to_string(k) + " from " + v.to_string());
    }
    return w;
}

Int KroneckerContext::quadratic_form(const DimVec& v) const {
    return v.a * v.a + v.b * v.b - n_ * v.a * v.b;
}

Int KroneckerContext::euler_form(const DimVec& x, const DimVec& y) const {
    return x.a * y.a + x.b * y.b - n_ * x.a * y.b;
}

RootClass KroneckerContext::classify_root(const DimVec& v) const {
    if (v.is_zero()) throw PreconditionError("classify_root: zero vector");
    if (!v.nonnegative()) throw PreconditionError("classify_root: negative entry");
    Int q = quadratic_form(v);
    if (q == 1) return RootClass::RealRoot;
    if (q < 0) return RootClass::ImaginaryRoot;
    return RootClass::NotRoot;
}

DimVec KroneckerContext::preprojective_dim(int r) const {
    if (r < 1) throw PreconditionError("preprojective_dim: r >= 1 required");
    DimVec v = (r % 2 == 1) ? DimVec{0, 1} : DimVec{1, n_};
    // P_{r+2} = P_r Phi^{-1}; lengths strictly increase, no escape possible.
    return coxeter_apply(v, -((r - 1) / 2));
}

DimVec KroneckerContext::preinjective_dim(int r) const {
    if (r < 0) throw PreconditionError("preinjective_dim: r >= 0 required");
    DimVec v = (r % 2 == 0) ? DimVec{1, 0} : DimVec{Int(n_), 1};
    return coxeter_apply(v, r / 2);
}

PositionClass KroneckerContext::classify_position(const DimVec& v) const {
    RootClass rc = classify_root(v);
    if (rc == RootClass::NotRoot)
        throw PreconditionError("classify_position: not a root: " + v.to_string());
    if (rc == RootClass::ImaginaryRoot) return {PositionClass::Regular, 0};
    Int len = length(v);
    for (int r = 1; ; ++r) {
        DimVec p = preprojective_dim(r);
        if (length(p) > len) break;
        if (p == v) return {PositionClass::Preprojective, r};
    }
    for (int r = 0; ; ++r) {
        DimVec q = preinjective_dim(r);
        if (length(q) > len) break;
        if (q == v) return {PositionClass::Preinjective, r};
    }
    // For rank-2 wild quivers the positive real roots are exactly the
    // preprojective and preinjective vectors.
    throw InternalContradiction("real root outside both sequences: " + v.to_string());
}

bool KroneckerContext::orbit_sum_check(const DimVec& x0, int r) const {
    if (x0.a > x0.b)
        throw PreconditionError("orbit_sum_check requires a <= b");
    if (r < 0) throw PreconditionError("orbit_sum_check: r >= 0 required");
    DimVec sum{0, 0};
    DimVec cur = x0;
    for (int i = 0; i <= r; ++i) {
        sum = sum + cur;
        cur = coxeter_apply(cur, -1);
    }
    return sum.strictly_below(cur);
}

Rat KroneckerContext::hom_bound_second_coord(const DimVec& x) const {
    Int denom = (n_ + 1) * x.a - x.b;
    if (denom <= 0)
        throw PreconditionError("hom_bound_second_coord requires (n+1)a > b");
    return Rat(x.b) + Rat(quadratic_form(x), denom);
}

bool KroneckerContext::root_window_check(const DimVec& v) const {
    for (Int t = 1; t < v.a; ++t) {
        DimVec w{v.a - t, v.b + t};
        if (quadratic_form(w) < 0) return false;
    }
    return true;
}

}  // namespace kron
