#include "kron/repkit.hpp"

#include <random>

#include <json.hpp>

namespace kron {

namespace {

int to_small(const Int& v, const char* what) {
    if (v < 0 || v > 200) throw PreconditionError(std::string(what) + ": dimension out of range [0,200]");
    return v.convert_to<int>();
}

void check_field(int p) {
    if (!is_prime(p) || p > 251) throw PreconditionError("p must be a small prime");
}

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Rep build_canonical(const KroneckerContext& ctx, int p, CanonicalKind kind) {
    check_field(p);
    int n = ctx.n();
    Rep R;
    R.n = n;
    R.p = p;
    switch (kind) {
        case CanonicalKind::P1:
            R.a = 0;
            R.b = 1;
            R.mats.assign(static_cast<std::size_t>(n), FpMat(1, 0));
            break;
        case CanonicalKind::P2:
            R.a = 1;
            R.b = n;
            for (int i = 0; i < n; ++i) {
                FpMat m(n, 1);
                m.at(i, 0) = 1;
                R.mats.push_back(std::move(m));
            }
            break;
        case CanonicalKind::Q0:
            R.a = 1;
            R.b = 0;
            R.mats.assign(static_cast<std::size_t>(n), FpMat(0, 1));
            break;
        case CanonicalKind::Q1:
            R.a = n;
            R.b = 1;
            for (int i = 0; i < n; ++i) {
                FpMat m(1, n);
                m.at(0, i) = 1;
                R.mats.push_back(std::move(m));
            }
            break;
        default:
            throw PreconditionError("build_canonical: invalid kind");
    }
    return R;
}

Rep build_one_c(const KroneckerContext& ctx, int p, int c,
                const std::vector<std::vector<std::uint8_t>>& columns) {
    check_field(p);
    if (c < 1) throw PreconditionError("build_one_c: c >= 1 required");
    if (static_cast<int>(columns.size()) != ctx.n())
        throw PreconditionError("build_one_c: need one column per arrow");
    Rep R;
    R.n = ctx.n();
    R.p = p;
    R.a = 1;
    R.b = c;
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != c)
            throw PreconditionError("build_one_c: column height mismatch");
        FpMat m(c, 1);
        for (int i = 0; i < c; ++i) {
            if (col[static_cast<std::size_t>(i)] >= p)
                throw PreconditionError("build_one_c: entry out of range");
            m.at(i, 0) = col[static_cast<std::size_t>(i)];
        }
        R.mats.push_back(std::move(m));
    }
    return R;
}

Rep random_rep(const KroneckerContext& ctx, int p, const DimVec& dim, std::uint64_t seed) {
    check_field(p);
    Rep R;
    R.n = ctx.n();
    R.p = p;
    R.a = to_small(dim.a, "random_rep");
    R.b = to_small(dim.b, "random_rep");
    std::mt19937_64 gen(seed);
    for (int i = 0; i < R.n; ++i) {
        FpMat m(R.b, R.a);
        for (auto& x : m.e) x = static_cast<std::uint8_t>(gen() % static_cast<std::uint64_t>(p));
        R.mats.push_back(std::move(m));
    }
    return R;
}

Rep random_indecomposable(const KroneckerContext& ctx, int p, const DimVec& dim,
                          std::uint64_t seed, int max_tries, unsigned long long budget_end) {
    for (int t = 0; t < max_tries; ++t) {
        Rep R = random_rep(ctx, p, dim, seed + static_cast<std::uint64_t>(t));
        if (is_indecomposable(R, budget_end)) return R;
    }
    throw PreconditionError("random_indecomposable: no indecomposable found within retry cap");
}

Rep stack_extension(const Rep& sub, const Rep& quot, std::uint64_t seed) {
    if (sub.n != quot.n || sub.p != quot.p)
        throw PreconditionError("stack_extension: incompatible quiver or field");
    Rep R;
    R.n = sub.n;
    R.p = sub.p;
    R.a = sub.a + quot.a;
    R.b = sub.b + quot.b;
    std::mt19937_64 gen(seed);
    for (int i = 0; i < R.n; ++i) {
        const FpMat& S = sub.mats[static_cast<std::size_t>(i)];
        const FpMat& Q = quot.mats[static_cast<std::size_t>(i)];
        FpMat m(R.b, R.a);
        for (int r = 0; r < sub.b; ++r)
            for (int c = 0; c < sub.a; ++c) m.at(r, c) = S.at(r, c);
        for (int r = 0; r < quot.b; ++r)
            for (int c = 0; c < quot.a; ++c) m.at(sub.b + r, sub.a + c) = Q.at(r, c);
        // random glue block: sub-sink rows over quot-source columns
        for (int r = 0; r < sub.b; ++r)
            for (int c = 0; c < quot.a; ++c)
                m.at(r, sub.a + c) =
                    static_cast<std::uint8_t>(gen() % static_cast<std::uint64_t>(R.p));
        R.mats.push_back(std::move(m));
    }
    return R;
}

std::vector<std::pair<FpMat, FpMat>> endomorphisms(const Rep& R) {
    const int a = R.a, b = R.b, p = R.p;
    const int vars = a * a + b * b;  // phi_source entries first, then phi_sink
    FpMat sys(R.n * b * a, vars);
    int row = 0;
    for (int i = 0; i < R.n; ++i) {
        const FpMat& A = R.mats[static_cast<std::size_t>(i)];
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < a; ++c) {
                // (phi_sink A - A phi_source)[r,c] = 0
                for (int k = 0; k < a; ++k)
                    sys.at(row, k * a + c) = static_cast<std::uint8_t>(
                        (sys.at(row, k * a + c) + p - A.at(r, k)) % p);
                for (int k = 0; k < b; ++k)
                    sys.at(row, a * a + r * b + k) = static_cast<std::uint8_t>(
                        (sys.at(row, a * a + r * b + k) + A.at(k, c)) % p);
                ++row;
            }
    }
    FpMat basis = fp::nullspace(sys, p);
    std::vector<std::pair<FpMat, FpMat>> out;
    out.reserve(static_cast<std::size_t>(basis.rows));
    for (int i = 0; i < basis.rows; ++i) {
        FpMat phi2(a, a), phi1(b, b);
        for (int k = 0; k < a * a; ++k) phi2.e[static_cast<std::size_t>(k)] = basis.at(i, k);
        for (int k = 0; k < b * b; ++k)
            phi1.e[static_cast<std::size_t>(k)] = basis.at(i, a * a + k);
        out.emplace_back(std::move(phi2), std::move(phi1));
    }
    return out;
}

namespace {

bool is_nilpotent(const FpMat& m, int p, int N) {
    if (m.rows == 0) return true;
    FpMat x = m;
    for (int pow = 1; pow < N; pow *= 2) x = fp::mul(x, x, p);
    for (auto v : x.e)
        if (v) return false;
    return true;
}

}  // namespace

bool is_indecomposable(const Rep& R, unsigned long long budget_end) {
    const int a = R.a, b = R.b, p = R.p;
    const int N = a + b;
    if (N == 0) throw PreconditionError("is_indecomposable: zero representation");
    if (N == 1) return true;
    // Split off simple summands first; this catches most decomposables
    // without touching the endomorphism algebra.
    if (a > 0) {
        // A source vector killed by every arrow spans a Q_0 summand.
        FpMat stacked(R.n * b, a);
        for (int i = 0; i < R.n; ++i)
            std::copy(R.mats[static_cast<std::size_t>(i)].e.begin(),
                      R.mats[static_cast<std::size_t>(i)].e.end(),
                      stacked.e.begin() + static_cast<std::size_t>(i) * b * a);
        if (fp::rank(stacked, p) < a) return false;
    }
    if (b > 0) {
        // A sink line outside the joint image spans a P_1 summand.
        FpMat wide(b, R.n * a);
        for (int i = 0; i < R.n; ++i)
            for (int r = 0; r < b; ++r)
                for (int c = 0; c < a; ++c)
                    wide.at(r, i * a + c) = R.mats[static_cast<std::size_t>(i)].at(r, c);
        if (fp::rank(wide, p) < b) return false;
    }
    auto basis = endomorphisms(R);
    const int d = static_cast<int>(basis.size());
    if (d == 1) return true;  // End = k, local
    // Fitting's lemma: indecomposable iff every endomorphism is nilpotent or
    // invertible.  Exhaustive over all p^d elements of End.
    {
        long double size = 1;
        for (int i = 0; i < d; ++i) size *= p;
        if (size > static_cast<long double>(budget_end))
            throw BudgetExceeded("is_indecomposable: End dimension " + std::to_string(d) +
                                     " exceeds enumeration budget",
                                 static_cast<unsigned long long>(d));
    }
    std::vector<int> coeff(static_cast<std::size_t>(d), 0);
    while (true) {
        std::size_t i = coeff.size();
        while (i > 0 && coeff[i - 1] == p - 1) coeff[--i] = 0;
        if (i == 0) break;  // wrapped: all combinations done
        ++coeff[i - 1];
        FpMat phi2(a, a), phi1(b, b);
        for (int k = 0; k < d; ++k) {
            int c = coeff[static_cast<std::size_t>(k)];
            if (!c) continue;
            const auto& [b2, b1] = basis[static_cast<std::size_t>(k)];
            for (std::size_t t = 0; t < phi2.e.size(); ++t)
                phi2.e[t] = static_cast<std::uint8_t>((phi2.e[t] + c * b2.e[t]) % p);
            for (std::size_t t = 0; t < phi1.e.size(); ++t)
                phi1.e[t] = static_cast<std::uint8_t>((phi1.e[t] + c * b1.e[t]) % p);
        }
        if (fp::rank(phi2, p) == a && fp::rank(phi1, p) == b) continue;  // invertible
        if (is_nilpotent(phi2, p, N) && is_nilpotent(phi1, p, N)) continue;
        return false;  // proper idempotent lurks in the span of this phi
    }
    return true;
}

bool is_subrep(const Rep& R, const SubRep& U) {
    if (U.U2.cols != R.a || U.U1.cols != R.b) return false;
    for (int i = 0; i < U.U2.rows; ++i) {
        std::vector<std::uint8_t> u(U.U2.e.begin() + static_cast<std::size_t>(i) * R.a,
                                    U.U2.e.begin() + static_cast<std::size_t>(i + 1) * R.a);
        for (const auto& A : R.mats)
            if (!fp::span_contains(U.U1, fp::mul_vec(A, u, R.p), R.p)) return false;
    }
    return true;
}

Rep restrict_rep(const Rep& R, const SubRep& U) {
    if (!is_subrep(R, U)) throw PreconditionError("restrict_rep: not a subrepresentation");
    Rep S;
    S.n = R.n;
    S.p = R.p;
    S.a = U.U2.rows;
    S.b = U.U1.rows;
    for (const auto& A : R.mats) {
        FpMat m(S.b, S.a);
        for (int j = 0; j < S.a; ++j) {
            std::vector<std::uint8_t> u(U.U2.e.begin() + static_cast<std::size_t>(j) * R.a,
                                        U.U2.e.begin() + static_cast<std::size_t>(j + 1) * R.a);
            auto w = fp::mul_vec(A, u, R.p);
            auto coeffs = fp::reduce_by_basis(U.U1, w, R.p);
            for (int r = 0; r < S.b; ++r) m.at(r, j) = coeffs[static_cast<std::size_t>(r)];
        }
        S.mats.push_back(std::move(m));
    }
    return S;
}

Rep quotient(const Rep& R, const SubRep& U) {
    if (!is_subrep(R, U)) throw PreconditionError("quotient: not a subrepresentation");
    // Quotient coordinates: the non-pivot columns of the RREF bases.
    auto complement = [](const FpMat& basis, int ambient) {
        std::vector<bool> is_piv(static_cast<std::size_t>(ambient), false);
        for (int c : fp::pivot_cols(basis)) is_piv[static_cast<std::size_t>(c)] = true;
        std::vector<int> comp;
        for (int c = 0; c < ambient; ++c)
            if (!is_piv[static_cast<std::size_t>(c)]) comp.push_back(c);
        return comp;
    };
    std::vector<int> src = complement(U.U2, R.a);
    std::vector<int> snk = complement(U.U1, R.b);
    Rep Q;
    Q.n = R.n;
    Q.p = R.p;
    Q.a = static_cast<int>(src.size());
    Q.b = static_cast<int>(snk.size());
    for (const auto& A : R.mats) {
        FpMat m(Q.b, Q.a);
        for (int j = 0; j < Q.a; ++j) {
            std::vector<std::uint8_t> e(static_cast<std::size_t>(R.a), 0);
            e[static_cast<std::size_t>(src[static_cast<std::size_t>(j)])] = 1;
            auto w = fp::mul_vec(A, e, R.p);
            fp::reduce_by_basis(U.U1, w, R.p);  // kill the U1 component
            for (int r = 0; r < Q.b; ++r)
                m.at(r, j) = w[static_cast<std::size_t>(snk[static_cast<std::size_t>(r)])];
        }
        Q.mats.push_back(std::move(m));
    }
    return Q;
}

bool SubLattice::includes(std::size_t i, std::size_t j) const {
    return fp::subspace_leq(items[i].U2, items[j].U2, p) &&
           fp::subspace_leq(items[i].U1, items[j].U1, p);
}

SubLattice enumerate_submodules(const Rep& R, unsigned long long budget) {
    SubLattice lat;
    lat.p = R.p;
    Int sink_est = fp::subspace_count(R.b, R.p);
    if (sink_est > budget)
        throw BudgetExceeded("enumerate_submodules: sink-side estimate " + sink_est.str(),
                             sink_est.convert_to<unsigned long long>());
    Int total_est = 0;
    // Sink-side-first: the preimage intersection W(U1) collapses fast, so the
    // inner source-side enumeration stays small.
    for (const FpMat& U1 : fp::all_subspaces(R.b, R.p, budget)) {
        FpMat K = fp::nullspace(U1, R.p);  // functionals vanishing on span(U1)
        FpMat sys(R.n * K.rows, R.a);
        for (int i = 0; i < R.n; ++i) {
            FpMat KA = fp::mul(K, R.mats[static_cast<std::size_t>(i)], R.p);
            std::copy(KA.e.begin(), KA.e.end(),
                      sys.e.begin() + static_cast<std::size_t>(i) * K.rows * R.a);
        }
        FpMat W = fp::nullspace(sys, R.p);  // U2 must lie inside this
        total_est += fp::subspace_count(W.rows, R.p);
        if (total_est > budget)
            throw BudgetExceeded("enumerate_submodules: estimate " + total_est.str(),
                                 total_est.convert_to<unsigned long long>());
        for (const FpMat& S : fp::all_subspaces(W.rows, R.p, budget)) {
            FpMat U2 = fp::row_basis(fp::mul(S, W, R.p), R.p);
            lat.items.push_back(SubRep{std::move(U2), U1});
        }
    }
    return lat;
}

// --- JSON I/O -------------------------------------------------------------

std::string rep_to_json(const Rep& R) {
    nlohmann::json j;
    j["n"] = R.n;
    j["p"] = R.p;
    j["dim"] = {R.a, R.b};
    auto& mats = j["mats"] = nlohmann::json::array();
    for (const auto& m : R.mats) {
        nlohmann::json rows = nlohmann::json::array();
        for (auto v : m.e) rows.push_back(static_cast<int>(v));
        mats.push_back(std::move(rows));
    }
    return j.dump();
}

Rep rep_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("rep_from_json: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("p") || !j.contains("dim") ||
        !j.contains("mats"))
        throw SchemaError("rep_from_json: need keys n, p, dim, mats");
    Rep R;
    try {
        R.n = j.at("n").get<int>();
        R.p = j.at("p").get<int>();
        auto dim = j.at("dim");
        if (!dim.is_array() || dim.size() != 2)
            throw SchemaError("rep_from_json: dim must be [a, b]");
        R.a = dim[0].get<int>();
        R.b = dim[1].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("rep_from_json: ") + e.what());
    }
    if (R.n < 3) throw SchemaError("rep_from_json: n >= 3 required");
    if (!is_prime(R.p)) throw SchemaError("rep_from_json: p must be prime");
    if (R.a < 0 || R.b < 0) throw SchemaError("rep_from_json: negative dimension");
    auto mats = j.at("mats");
    if (!mats.is_array() || static_cast<int>(mats.size()) != R.n)
        throw SchemaError("rep_from_json: need n matrices");
    for (const auto& jm : mats) {
        if (!jm.is_array() || static_cast<int>(jm.size()) != R.a * R.b)
            throw SchemaError("rep_from_json: matrix must have b*a row-major entries");
        FpMat m(R.b, R.a);
        for (std::size_t k = 0; k < jm.size(); ++k) {
            if (!jm[k].is_number_integer())
                throw SchemaError("rep_from_json: matrix entries must be integers");
            int v = jm[k].get<int>();
            if (v < 0 || v >= R.p) throw SchemaError("rep_from_json: entry out of [0,p)");
            m.e[k] = static_cast<std::uint8_t>(v);
        }
        R.mats.push_back(std::move(m));
    }
    return R;
}

}  // namespace kron
