#include "kron/fpmat.hpp"

#include <algorithm>

namespace kron {
namespace fp {

int inverse_mod(int x, int p) {
    x %= p;
    if (x < 0) x += p;
    if (x == 0) throw PreconditionError("inverse of 0 mod p");
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
    }
    return r;
}

FpMat mul(const FpMat& A, const FpMat& B, int p) {
    if (A.cols != B.rows) throw PreconditionError("mul: shape mismatch");
    FpMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int a = A.at(i, k);
            if (!a) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = static_cast<std::uint8_t>((C.at(i, j) + a * B.at(k, j)) % p);
        }
    return C;
}

std::vector<std::uint8_t> mul_vec(const FpMat& A, const std::vector<std::uint8_t>& v, int p) {
    if (static_cast<int>(v.size()) != A.cols) throw PreconditionError("mul_vec: shape mismatch");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(A.rows), 0);
    for (int i = 0; i < A.rows; ++i) {
        int acc = 0;
        for (int j = 0; j < A.cols; ++j) acc += A.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc % p);
    }
    return out;
}

int rref_in_place(FpMat& m, int p) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        int inv = inverse_mod(m.at(r, c), p);
        for (int j = c; j < m.cols; ++j)
            m.at(r, j) = static_cast<std::uint8_t>(m.at(r, j) * inv % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            int f = m.at(i, c);
            if (!f) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = static_cast<std::uint8_t>((m.at(i, j) + (p - f) * m.at(r, j)) % p);
        }
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = 0;
    return r;
}

FpMat row_basis(const FpMat& m, int p) {
    FpMat t = m;
    int r = rref_in_place(t, p);
    FpMat out(r, m.cols);
    std::copy(t.e.begin(), t.e.begin() + static_cast<std::size_t>(r) * m.cols, out.e.begin());
    return out;
}

int rank(const FpMat& m, int p) {
    FpMat t = m;
    return rref_in_place(t, p);
}

FpMat nullspace(const FpMat& m, int p) {
    FpMat t = m;
    int r = rref_in_place(t, p);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols), false);
    std::vector<int> piv;
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < m.cols; ++c)
            if (t.at(i, c)) {
                piv.push_back(c);
                is_piv[static_cast<std::size_t>(c)] = true;
                break;
            }
    FpMat out(m.cols - r, m.cols);
    int k = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[static_cast<std::size_t>(c)]) continue;
        out.at(k, c) = 1;
        for (int i = 0; i < r; ++i)
            out.at(k, piv[static_cast<std::size_t>(i)]) =
                static_cast<std::uint8_t>((p - t.at(i, c)) % p);
        ++k;
    }
    return row_basis(out, p);
}

std::vector<int> pivot_cols(const FpMat& rref_basis) {
    std::vector<int> piv;
    for (int i = 0; i < rref_basis.rows; ++i)
        for (int c = 0; c < rref_basis.cols; ++c)
            if (rref_basis.at(i, c)) { piv.push_back(c); break; }
    return piv;
}

std::vector<std::uint8_t> reduce_by_basis(const FpMat& rref_basis,
                                          std::vector<std::uint8_t>& v, int p) {
    std::vector<std::uint8_t> coeffs(static_cast<std::size_t>(rref_basis.rows), 0);
    std::vector<int> piv = pivot_cols(rref_basis);
    for (int i = 0; i < rref_basis.rows; ++i) {
        int c = v[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] % p;
        if (!c) continue;
        coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c);
        for (int j = 0; j < rref_basis.cols; ++j)
            v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                (v[static_cast<std::size_t>(j)] + (p - c) * rref_basis.at(i, j)) % p);
    }
    return coeffs;
}

bool span_contains(const FpMat& rref_basis, const std::vector<std::uint8_t>& v, int p) {
    std::vector<std::uint8_t> t = v;
    reduce_by_basis(rref_basis, t, p);
    for (auto x : t)
        if (x % p) return false;
    return true;
}

bool subspace_leq(const FpMat& a, const FpMat& b, int p) {
    if (a.rows > b.rows) return false;
    for (int i = 0; i < a.rows; ++i) {
        std::vector<std::uint8_t> row(a.e.begin() + static_cast<std::size_t>(i) * a.cols,
                                      a.e.begin() + static_cast<std::size_t>(i + 1) * a.cols);
        if (!span_contains(b, row, p)) return false;
    }
    return true;
}

std::vector<FpMat> hyperplanes(const FpMat& basis, int p) {
    int d = basis.rows;
    std::vector<FpMat> out;
    if (d == 0) return out;
    // Normalized functionals on the coordinate space of the basis: first
    // nonzero coefficient equal to 1.
    std::vector<std::uint8_t> f(static_cast<std::size_t>(d), 0);
    auto emit = [&]() {
        // Kernel of f in basis coordinates, then back to ambient coordinates.
        FpMat fm(1, d);
        for (int i = 0; i < d; ++i) fm.at(0, i) = f[static_cast<std::size_t>(i)];
        FpMat ker = nullspace(fm, p);  // (d-1) x d
        out.push_back(row_basis(mul(ker, basis, p), p));
    };
    // Enumerate all nonzero f up to scalar.
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(d), 0);
    for (int lead = 0; lead < d; ++lead) {
        std::fill(f.begin(), f.end(), 0);
        f[static_cast<std::size_t>(lead)] = 1;
        int tail = d - lead - 1;
        std::vector<int> t(static_cast<std::size_t>(tail), 0);
        while (true) {
            for (int i = 0; i < tail; ++i)
                f[static_cast<std::size_t>(lead + 1 + i)] =
                    static_cast<std::uint8_t>(t[static_cast<std::size_t>(i)]);
            emit();
            int i = tail - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == p - 1)
                t[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++t[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

Int subspace_count(int m, int p) {
    // Gaussian binomial sum: number of subspaces of F_p^m.
    Int total = 0;
    for (int d = 0; d <= m; ++d) {
        Int num = 1, den = 1;
        for (int i = 0; i < d; ++i) {
            num *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(m - i)) - 1;
            den *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(i + 1)) - 1;
        }
        total += num / den;
    }
    return total;
}

std::vector<FpMat> all_subspaces(int m, int p, unsigned long long budget) {
    Int count = subspace_count(m, p);
    if (count > budget)
        throw BudgetExceeded("all_subspaces: estimate " + count.str() + " exceeds budget",
                             count.convert_to<unsigned long long>());
    std::vector<FpMat> out;
    out.reserve(count.convert_to<std::size_t>());
    // Enumerate RREF matrices directly: pick pivot columns, then fill the
    // free entries (row i, column c) with c > piv[i] and c not a pivot.
    for (int d = 0; d <= m; ++d) {
        std::vector<int> piv(static_cast<std::size_t>(d));
        std::vector<int> comb(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
        bool more = d <= m;
        while (more) {
            std::vector<std::pair<int, int>> free_cells;
            std::vector<bool> is_piv(static_cast<std::size_t>(m), false);
            for (int i = 0; i < d; ++i) is_piv[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])] = true;
            for (int i = 0; i < d; ++i)
                for (int c = comb[static_cast<std::size_t>(i)] + 1; c < m; ++c)
                    if (!is_piv[static_cast<std::size_t>(c)]) free_cells.emplace_back(i, c);
            std::vector<int> fill(free_cells.size(), 0);
            while (true) {
                FpMat sub(d, m);
                for (int i = 0; i < d; ++i) sub.at(i, comb[static_cast<std::size_t>(i)]) = 1;
                for (std::size_t k = 0; k < free_cells.size(); ++k)
                    sub.at(free_cells[k].first, free_cells[k].second) =
                        static_cast<std::uint8_t>(fill[k]);
                out.push_back(std::move(sub));
                std::size_t i = fill.size();
                while (i > 0 && fill[i - 1] == p - 1) fill[--i] = 0;
                if (i == 0) break;
                ++fill[i - 1];
            }
            // next combination
            int i = d - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - d + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            more = true;
        }
    }
    return out;
}

}  // namespace fp
}  // namespace kron
