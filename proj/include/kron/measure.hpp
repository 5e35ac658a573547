#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kron/errors.hpp"
#include "kron/numeric.hpp"

namespace kron {

enum class Ordering { Less, Equal, Greater };

/// A Gabriel-Roiter measure: a strictly increasing finite sequence of
/// positive integers, totally ordered by Ringel's rule (I < J iff the
/// smallest element of the symmetric difference belongs to J).
///
/// The empty measure is permitted only as the measure of the zero module and
/// sorts below every nonempty measure.
class GrMeasure {
  public:
    GrMeasure() = default;

    /// Throws PreconditionError unless entries are strictly increasing and
    /// positive.
    explicit GrMeasure(std::vector<Int> entries);

    const std::vector<Int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const Int& max() const;

    /// Append m; requires m > max().
    GrMeasure extended(const Int& m) const;

    /// True iff this measure starts with `prefix`, i.e. prefix == *this or
    /// prefix equals this cut at max(prefix).
    bool starts_with(const GrMeasure& prefix) const;

    bool operator==(const GrMeasure& o) const { return entries_ == o.entries_; }
    bool operator!=(const GrMeasure& o) const { return entries_ != o.entries_; }
    bool operator<(const GrMeasure& o) const { return compare(*this, o) == Ordering::Less; }
    bool operator>(const GrMeasure& o) const { return compare(*this, o) == Ordering::Greater; }
    bool operator<=(const GrMeasure& o) const { return !(*this > o); }
    bool operator>=(const GrMeasure& o) const { return !(*this < o); }

    /// Ringel's total order.
    static Ordering compare(const GrMeasure& I, const GrMeasure& J);

    /// "{1,4,7}"; the empty measure prints as "{}".
    std::string to_string() const;

    /// Parses the brace form; rejects non-increasing or non-positive input.
    static GrMeasure parse(const std::string& text);

  private:
    std::vector<Int> entries_;
};

/// Maximum of a nonempty set of measures under Ringel's order.
GrMeasure max_of(const std::vector<GrMeasure>& measures);

}  // namespace kron
