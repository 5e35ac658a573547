#include "kron/oracle.hpp"

#include <algorithm>

#include <json.hpp>

namespace kron {

GrOracle::GrOracle(Rep R, unsigned long long budget_lattice, unsigned long long budget_end)
    : rep_(std::move(R)), budget_lattice_(budget_lattice), budget_end_(budget_end) {
    if (rep_.a + rep_.b == 0) throw PreconditionError("GrOracle: zero representation");
}

std::string GrOracle::key_of(const SubRep& W) const {
    std::string k;
    k.reserve(2 + W.U2.e.size() + W.U1.e.size());
    k.push_back(static_cast<char>(W.U2.rows));
    k.push_back(static_cast<char>(W.U1.rows));
    k.append(W.U2.e.begin(), W.U2.e.end());
    k.append(W.U1.e.begin(), W.U1.e.end());
    return k;
}

int GrOracle::intern(const GrMeasure& m) {
    std::string k;
    k.reserve(m.size());
    for (const Int& v : m.entries()) k.push_back(static_cast<char>(v.convert_to<int>()));
    auto it = measure_index_.find(k);
    if (it != measure_index_.end()) return it->second;
    int id = static_cast<int>(measures_.size());
    measures_.push_back(m);
    measure_index_.emplace(std::move(k), id);
    return id;
}

int GrOracle::solve(const SubRep& W) {
    std::string key = key_of(W);
    if (auto it = index_.find(key); it != index_.end()) return it->second;

    const int p = rep_.p;
    std::vector<int> kids;
    if (W.U2.rows > 0)
        for (const FpMat& H : fp::hyperplanes(W.U2, p))
            kids.push_back(solve(SubRep{H, W.U1}));
    if (W.U1.rows > 0) {
        // Sink hyperplanes must still absorb the image of the source part.
        FpMat img(rep_.n * W.U2.rows, rep_.b);
        int r = 0;
        for (const auto& A : rep_.mats)
            for (int j = 0; j < W.U2.rows; ++j, ++r) {
                std::vector<std::uint8_t> u(
                    W.U2.e.begin() + static_cast<std::size_t>(j) * rep_.a,
                    W.U2.e.begin() + static_cast<std::size_t>(j + 1) * rep_.a);
                auto w = fp::mul_vec(A, u, p);
                std::copy(w.begin(), w.end(),
                          img.e.begin() + static_cast<std::size_t>(r) * rep_.b);
            }
        FpMat S = fp::row_basis(img, p);
        for (const FpMat& H : fp::hyperplanes(W.U1, p))
            if (fp::subspace_leq(S, H, p)) kids.push_back(solve(SubRep{W.U2, H}));
    }

    int best = -1, attain = -1;
    for (int kid : kids) {
        const Node& nk = nodes_[static_cast<std::size_t>(kid)];
        if (nk.g < 0) continue;
        if (best < 0 || measures_[static_cast<std::size_t>(nk.g)] >
                            measures_[static_cast<std::size_t>(best)]) {
            best = nk.g;
            attain = nk.attain;
        }
    }

    Node node;
    node.sub = W;
    int total = W.total();
    int id = static_cast<int>(nodes_.size());
    if (total > 0 && is_indecomposable(restrict_rep(rep_, W), budget_end_)) {
        GrMeasure mu = best >= 0 ? measures_[static_cast<std::size_t>(best)].extended(total)
                                 : GrMeasure({Int(total)});
        node.mu = intern(mu);
        node.prev = attain;
        node.g = node.mu;  // extending g strictly increases it
        node.attain = id;
    } else {
        node.g = best;
        node.attain = attain;
    }
    nodes_.push_back(std::move(node));
    index_.emplace(std::move(key), id);
    if (nodes_.size() > budget_lattice_)
        throw BudgetExceeded("GrOracle: subrepresentation count exceeds budget",
                             nodes_.size());
    return id;
}

int GrOracle::root() {
    if (root_ < 0)
        root_ = solve(SubRep{FpMat::identity(rep_.a), FpMat::identity(rep_.b)});
    return root_;
}

const GrMeasure& GrOracle::measure() {
    const Node& n = nodes_[static_cast<std::size_t>(root())];
    if (n.mu < 0) throw NotIndecomposable("GrOracle: representation is decomposable");
    return measures_[static_cast<std::size_t>(n.mu)];
}

GrCertificate GrOracle::certificate() {
    measure();
    GrCertificate cert;
    for (int id = root(); id >= 0; id = nodes_[static_cast<std::size_t>(id)].prev)
        cert.chain.push_back(nodes_[static_cast<std::size_t>(id)].sub);
    std::reverse(cert.chain.begin(), cert.chain.end());
    for (const SubRep& s : cert.chain) cert.lengths.push_back(Int(s.total()));
    cert.measure = measure();
    if (cert.chain.size() >= 2) {
        const SubRep& gr = cert.chain[cert.chain.size() - 2];
        try {
            KroneckerContext ctx(rep_.n);
            cert.gr_submodule_class = ctx.classify_position(gr.dim());
        } catch (const Error&) {
            // not a root / unmatched: leave Unknown
        }
    }
    return cert;
}

std::vector<SubRep> GrOracle::gr_submodules() {
    const GrMeasure& mu_R = measure();
    Int total(rep_.a + rep_.b);
    std::vector<SubRep> out;
    for (const Node& n : nodes_) {
        if (n.mu < 0 || n.sub.total() == rep_.a + rep_.b) continue;
        if (measures_[static_cast<std::size_t>(n.mu)].extended(total) == mu_R)
            out.push_back(n.sub);
    }
    return out;
}

const GrMeasure& GrOracle::measure_of(const SubRep& U) {
    if (!is_subrep(rep_, U)) throw PreconditionError("measure_of: not a subrepresentation");
    const Node& n = nodes_[static_cast<std::size_t>(solve(U))];
    if (n.mu < 0) throw NotIndecomposable("measure_of: subrepresentation is decomposable");
    return measures_[static_cast<std::size_t>(n.mu)];
}

bool GrOracle::is_piling(const SubRep& U) {
    const GrMeasure mu_U = measure_of(U);
    return measure().starts_with(mu_U);
}

bool GrOracle::in_B() {
    KroneckerContext ctx(rep_.n);
    DimVec d(rep_.a, rep_.b);
    if (!(ctx.classify_position(d) == PositionClass{PositionClass::Regular, 0}))
        throw PreconditionError("in_B: representation is not regular");
    measure();
    for (const SubRep& U : gr_submodules()) {
        PositionClass pc = ctx.classify_position(U.dim());
        if (pc.tag != PositionClass::Preprojective) return false;
    }
    return true;
}

bool GrOracle::check_submodule_monotonicity() {
    const GrMeasure& mu_R = measure();
    for (const Node& n : nodes_) {
        if (n.mu < 0) continue;
        const GrMeasure& mu_U = measures_[static_cast<std::size_t>(n.mu)];
        if (mu_U > mu_R) return false;
        if (mu_U == mu_R && n.sub.total() != rep_.a + rep_.b) return false;
    }
    return true;
}

bool GrOracle::check_gr_factor_indecomposability() {
    measure();
    for (const SubRep& U : gr_submodules())
        if (!is_indecomposable(quotient(rep_, U), budget_end_)) return false;
    return true;
}

std::pair<GrMeasure, GrCertificate> gr_measure_oracle(const Rep& R,
                                                      unsigned long long budget_lattice,
                                                      unsigned long long budget_end) {
    GrOracle o(R, budget_lattice, budget_end);
    GrMeasure m = o.measure();
    return {std::move(m), o.certificate()};
}

std::vector<SubRep> gr_submodules(const Rep& R, unsigned long long budget_lattice,
                                  unsigned long long budget_end) {
    GrOracle o(R, budget_lattice, budget_end);
    return o.gr_submodules();
}

bool is_piling(const Rep& R, const SubRep& U, unsigned long long budget_lattice,
               unsigned long long budget_end) {
    GrOracle o(R, budget_lattice, budget_end);
    return o.is_piling(U);
}

bool in_B(const Rep& R, unsigned long long budget_lattice, unsigned long long budget_end) {
    GrOracle o(R, budget_lattice, budget_end);
    return o.in_B();
}

std::string certificate_to_json(const GrCertificate& cert) {
    nlohmann::json j;
    auto& measure = j["measure"] = nlohmann::json::array();
    for (const Int& v : cert.measure.entries()) measure.push_back(v.convert_to<long long>());
    auto& lengths = j["lengths"] = nlohmann::json::array();
    for (const Int& v : cert.lengths) lengths.push_back(v.convert_to<long long>());
    auto& chain = j["chain"] = nlohmann::json::array();
    for (const SubRep& s : cert.chain) {
        nlohmann::json step;
        auto dump = [](const FpMat& m) {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < m.rows; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(i, c)));
                rows.push_back(std::move(row));
            }
            return rows;
        };
        step["U2"] = dump(s.U2);
        step["U1"] = dump(s.U1);
        chain.push_back(std::move(step));
    }
    if (cert.gr_submodule_class)
        j["gr_submodule_class"] = cert.gr_submodule_class->to_string();
    else
        j["gr_submodule_class"] = "Unknown";
    return j.dump();
}

}  // namespace kron
