#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/stream.hpp"

namespace schurkit {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Parts are stored 0-based; `part(i)` is lambda_{i+1}.
class Partition {
public:
    using value_type = std::int64_t;

    Partition() = default;

    /// Validating constructor. Trailing zeros are stripped, then the parts
    /// must be positive and weakly decreasing; throws NotAPartition.
    explicit Partition(std::span<const value_type> parts);
    Partition(std::initializer_list<value_type> parts)
        : Partition(std::span<const value_type>(parts.begin(), parts.size())) {}

    const std::vector<value_type>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    value_type part(std::size_t i) const { return parts_.at(i); }
    /// lambda_1, or 0 for the empty partition.
    value_type first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// |lambda|
    value_type size() const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<value_type> parts_;
};

Partition partition_from_parts(std::span<const Partition::value_type> parts);

/// Comma-separated parts, e.g. "3,2,1,1,1"; the empty string is the empty
/// partition.
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

/// Column counts of the Ferrers diagram: result_j = #{i : lambda_i >= j}.
Partition conjugate_oracle(const Partition& p);

/// Every partition of n in decreasing lexicographic order, optionally with
/// all parts <= max_part.
class PartitionStream : public StreamMixin<PartitionStream, Partition> {
public:
    explicit PartitionStream(std::int64_t n, std::optional<std::int64_t> max_part = std::nullopt);

    std::optional<Partition> next();

private:
    std::vector<std::int64_t> cur_;
    std::int64_t n_;
    std::int64_t bound_;
    bool started_ = false;
    bool done_ = false;
};

inline PartitionStream partitions_of(std::int64_t n,
                                     std::optional<std::int64_t> max_part = std::nullopt) {
    return PartitionStream(n, max_part);
}

}  // namespace schurkit
