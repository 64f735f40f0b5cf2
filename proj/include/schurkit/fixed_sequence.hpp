#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

/// The array size SCHUR uses for partitions.
inline constexpr std::int64_t default_max = 100;

/// SCHUR's in-memory partition layout: an integer array of size `max`,
/// used from index 1, terminated by 0. Index 0 exists and always holds 0.
///
/// Cells may hold arbitrary values so that malformed inputs can be fed to
/// the predicates and the instrumented engine; `is_partition_pred` decides
/// whether the layout invariants hold.
class FixedPartitionSequence {
public:
    using value_type = std::int64_t;

    /// All-zero sequence. Throws PredicateDomain if max < 2.
    explicit FixedPartitionSequence(std::int64_t max = default_max);

    std::int64_t max() const noexcept { return static_cast<std::int64_t>(cells_.size()); }

    /// Reads cell i, 0 <= i < max; throws IndexOutOfRange otherwise.
    value_type at(std::int64_t i) const;
    /// Writes cell i, 1 <= i < max; throws IndexOutOfRange otherwise.
    void set(std::int64_t i, value_type v);

    /// Unchecked access for hot loops; caller guarantees 0 <= i < max.
    value_type operator[](std::int64_t i) const noexcept {
        return cells_[static_cast<std::size_t>(i)];
    }

    std::span<const value_type> cells() const noexcept { return cells_; }

    friend bool operator==(const FixedPartitionSequence&, const FixedPartitionSequence&) = default;

private:
    std::vector<value_type> cells_;
};

/// Arguments of the countIfSup predicate: index bound j, threshold k and
/// the claimed count z.
struct CountWitness {
    std::int64_t j = 0;
    std::int64_t k = 0;
    std::int64_t z = 0;
};

/// How countIfSup is read: `exact` requires z to be the true count;
/// `literal` is the original disjunction, which also accepts any
/// 1 <= z <= true count.
enum class CountSemantics { exact, literal };

/// Throws DoesNotFit unless l(p) < max-1 and every part < max-1.
FixedPartitionSequence to_fixed(const Partition& p, std::int64_t max = default_max);

/// Throws NotAPartition unless is_partition_pred(s).
Partition from_fixed(const FixedPartitionSequence& s);

/// 0 <= t[i] < max-1 on [1, max), non-increasing on [1, max), t[max-1] == 0.
bool is_partition_pred(const FixedPartitionSequence& s);

/// #{ i : 1 <= i < j, t[i] >= k }. Requires is_partition_pred(s),
/// 1 <= j <= max and 1 <= k < max; throws PredicateDomain otherwise.
std::int64_t count_if_sup_exact(const FixedPartitionSequence& s, std::int64_t j, std::int64_t k);

/// The original predicate, clause for clause. Never throws.
bool count_if_sup_literal(const FixedPartitionSequence& s, const CountWitness& w);

/// Predicate form of either reading; false (not an exception) outside the
/// domain.
bool count_if_sup_holds(const FixedPartitionSequence& s, const CountWitness& w,
                        CountSemantics semantics);

/// For all 1 <= k < max: count_if_sup_exact(t1, max, k) == t2[k].
/// Throws MaxMismatch when the sizes differ.
bool is_conjugate_pred(const FixedPartitionSequence& t1, const FixedPartitionSequence& t2);

/// is_conjugate with the literal countIfSup.
bool is_conjugate_literal(const FixedPartitionSequence& t1, const FixedPartitionSequence& t2);

}  // namespace schurkit
