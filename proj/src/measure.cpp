#include "kron/measure.hpp"

#include <algorithm>
#include <sstream>

namespace kron {

GrMeasure::GrMeasure(std::vector<Int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] <= 0)
            throw PreconditionError("GrMeasure entries must be positive");
        if (i > 0 && entries_[i] <= entries_[i - 1])
            throw PreconditionError("GrMeasure entries must be strictly increasing");
    }
}

const Int& GrMeasure::max() const {
    if (entries_.empty()) throw PreconditionError("max() of empty measure");
    return entries_.back();
}

GrMeasure GrMeasure::extended(const Int& m) const {
    if (!entries_.empty() && m <= entries_.back())
        throw PreconditionError("extend: new entry must exceed the current maximum");
    if (m <= 0) throw PreconditionError("extend: entry must be positive");
    GrMeasure out;
    out.entries_ = entries_;
    out.entries_.push_back(m);
    return out;
}

bool GrMeasure::starts_with(const GrMeasure& prefix) const {
    if (prefix.size() > size()) return false;
    return std::equal(prefix.entries_.begin(), prefix.entries_.end(), entries_.begin());
}

Ordering GrMeasure::compare(const GrMeasure& I, const GrMeasure& J) {
    // Entries are sorted, so the smallest element of the symmetric difference
    // sits at the first position where the sequences disagree.
    std::size_t k = 0;
    for (; k < I.size() && k < J.size(); ++k) {
        if (I.entries_[k] == J.entries_[k]) continue;
        // The smaller of the two disagreeing entries is the minimum of the
        // symmetric difference; I < J iff it lies in J.
        return I.entries_[k] < J.entries_[k] ? Ordering::Greater : Ordering::Less;
    }
    if (k < J.size()) return Ordering::Less;    // I is a proper prefix of J
    if (k < I.size()) return Ordering::Greater; // J is a proper prefix of I
    return Ordering::Equal;
}

std::string GrMeasure::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << '}';
    return os.str();
}

GrMeasure GrMeasure::parse(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos || text[a] != '{' || text[b] != '}')
        throw ParseError("measure must be of the form {a,b,c}: " + text);
    std::string body = text.substr(a + 1, b - a - 1);
    std::vector<Int> entries;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t x = tok.find_first_not_of(" \t");
        std::size_t y = tok.find_last_not_of(" \t");
        if (x == std::string::npos) throw ParseError("empty entry in measure: " + text);
        try {
            entries.emplace_back(tok.substr(x, y - x + 1));
        } catch (const std::exception&) {
            throw ParseError("bad integer in measure: " + tok);
        }
    }
    try {
        return GrMeasure(std::move(entries));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid measure: ") + e.what());
    }
}

GrMeasure max_of(const std::vector<GrMeasure>& measures) {
    if (measures.empty()) throw PreconditionError("max_of: empty set of measures");
    const GrMeasure* best = &measures.front();
    for (const auto& m : measures)
        if (GrMeasure::compare(*best, m) == Ordering::Less) best = &m;
    return *best;
}

}  // namespace kron
