#include "kron/grsym.hpp"

#include <algorithm>
#include <sstream>

namespace kron {

std::string RegularCoord::to_string() const {
    std::ostringstream os;
    os << "X(c=" << c << ",i=" << i << ",j=" << j << ')';
    return os.str();
}

void GrSymbolic::check_coord(const RegularCoord& coord) const {
    if (coord.c < 1 || coord.c > ctx_.n() - 1)
        throw PreconditionError("RegularCoord: 1 <= c <= n-1 required");
    if (coord.i < 0 || coord.j < 1)
        throw PreconditionError("RegularCoord: i >= 0 and j >= 1 required");
}

GrMeasure GrSymbolic::preprojective_measure(int r) const {
    if (r < 1) throw PreconditionError("preprojective_measure: r >= 1 required");
    std::vector<Int> lengths;
    lengths.reserve(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k)
        lengths.push_back(length(ctx_.preprojective_dim(k)));
    return GrMeasure(std::move(lengths));
}

DimVec GrSymbolic::family_dim(const RegularCoord& coord) const {
    check_coord(coord);
    DimVec cur = ctx_.coxeter_apply(DimVec{1, coord.c}, -coord.i);
    DimVec sum{0, 0};
    for (int t = 0; t < coord.j; ++t) {
        sum = sum + cur;
        cur = ctx_.coxeter_apply(cur, -1);
    }
    return sum;
}

GrSubmoduleRef GrSymbolic::family_gr_submodule(const RegularCoord& coord) const {
    check_coord(coord);
    if (coord.j >= 2) return RegularCoord{coord.c, coord.i, coord.j - 1};
    if (coord.i == 0) return PositionClass{PositionClass::Preprojective, 1};
    if (coord.c == 1)  // tau^{-(i-1)}P_2 = P_{2i}
        return PositionClass{PositionClass::Preprojective, 2 * coord.i};
    // tau^{-i}P_1 = P_{2i+1}
    return PositionClass{PositionClass::Preprojective, 2 * coord.i + 1};
}

GrMeasure GrSymbolic::family_measure(const RegularCoord& coord) const {
    check_coord(coord);
    auto key = std::make_tuple(coord.c, coord.i, coord.j);
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    GrSubmoduleRef sub = family_gr_submodule(coord);
    GrMeasure base;
    if (auto* pc = std::get_if<PositionClass>(&sub))
        base = preprojective_measure(pc->index);
    else
        base = family_measure(std::get<RegularCoord>(sub));
    GrMeasure result = base.extended(length(family_dim(coord)));
    std::lock_guard<std::mutex> lock(memo_mu_);
    return memo_.emplace(key, std::move(result)).first->second;
}

GrDescriptor GrSymbolic::descriptor(const RegularCoord& coord) const {
    return GrDescriptor{coord, family_gr_submodule(coord), family_measure(coord),
                        family_dim(coord)};
}

GrMeasure GrSymbolic::direct_successor(const RegularCoord& coord) const {
    return family_measure(RegularCoord{coord.c, coord.i, coord.j + 1});
}

std::vector<GrMeasure> GrSymbolic::segment(int c, int i, int j_max) const {
    if (j_max < 1) throw PreconditionError("segment: j_max >= 1 required");
    std::vector<GrMeasure> out;
    out.reserve(static_cast<std::size_t>(j_max));
    for (int j = 1; j <= j_max; ++j)
        out.push_back(family_measure(RegularCoord{c, i, j}));
    return out;
}

bool GrSymbolic::monotone_in_i(int c, int i, int i_prime) const {
    if (!(0 <= i && i < i_prime))
        throw PreconditionError("monotone_in_i: 0 <= i < i' required");
    return GrMeasure::compare(family_measure(RegularCoord{c, i_prime, 1}),
                              family_measure(RegularCoord{c, i, 1})) == Ordering::Less;
}

Ordering GrSymbolic::landing_measure_compare(int r, int s) const {
    if (r < 1 || s < 1)
        throw PreconditionError("landing_measure_compare: indices >= 1 required "
                                "(Q_0 is a take-off module)");
    if (r == s) return Ordering::Equal;
    return r > s ? Ordering::Less : Ordering::Greater;
}

std::vector<UniverseEntry> GrSymbolic::measure_universe(const UniverseBounds& b) const {
    std::vector<UniverseEntry> out;
    auto add = [&](GrMeasure m, std::string label) {
        for (auto& e : out) {
            if (e.measure == m) {
                e.labels.push_back(std::move(label));
                return;
            }
        }
        out.push_back(UniverseEntry{std::move(m), {std::move(label)}});
    };
    for (int r = 1; r <= b.r_max; ++r)
        add(preprojective_measure(r), "P(" + std::to_string(r) + ")");
    for (int c = b.c_lo; c <= b.c_hi; ++c)
        for (int i = 0; i <= b.i_max; ++i)
            for (int j = 1; j <= b.j_max; ++j) {
                RegularCoord coord{c, i, j};
                add(family_measure(coord), coord.to_string());
            }
    std::sort(out.begin(), out.end(), [](const UniverseEntry& x, const UniverseEntry& y) {
        return x.measure < y.measure;
    });
    return out;
}

}  // namespace kron
