#include "schurkit/fixed_sequence.hpp"

#include <string>

#include "schurkit/errors.hpp"

namespace schurkit {

FixedPartitionSequence::FixedPartitionSequence(std::int64_t max) {
    if (max < 2)
        throw PredicateDomain("fixed sequence size must be at least 2, got " + std::to_string(max));
    cells_.assign(static_cast<std::size_t>(max), 0);
}

FixedPartitionSequence::value_type FixedPartitionSequence::at(std::int64_t i) const {
    if (i < 0 || i >= max())
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [0, " +
                              std::to_string(max()) + ")");
    return cells_[static_cast<std::size_t>(i)];
}

void FixedPartitionSequence::set(std::int64_t i, value_type v) {
    if (i < 1 || i >= max())
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [1, " +
                              std::to_string(max()) + ")");
    cells_[static_cast<std::size_t>(i)] = v;
}

FixedPartitionSequence to_fixed(const Partition& p, std::int64_t max) {
    FixedPartitionSequence s(max);
    auto len = static_cast<std::int64_t>(p.length());
    if (len >= max - 1)
        throw DoesNotFit("partition has " + std::to_string(len) + " parts; at most " +
                         std::to_string(max - 2) + " fit when max = " + std::to_string(max));
    if (p.first() >= max - 1)
        throw DoesNotFit("part " + std::to_string(p.first()) + " must be below max-1 = " +
                         std::to_string(max - 1));
    for (std::int64_t i = 0; i < len; ++i)
        s.set(i + 1, p.part(static_cast<std::size_t>(i)));
    return s;
}

Partition from_fixed(const FixedPartitionSequence& s) {
    if (!is_partition_pred(s))
        throw NotAPartition("fixed sequence does not satisfy is_partition");
    std::vector<Partition::value_type> parts;
    for (std::int64_t i = 1; i < s.max() && s[i] != 0; ++i)
        parts.push_back(s[i]);
    return Partition(parts);
}

bool is_partition_pred(const FixedPartitionSequence& s) {
    const std::int64_t max = s.max();
    for (std::int64_t i = 1; i < max; ++i)
        if (s[i] < 0 || s[i] >= max - 1)
            return false;
    // Pairwise non-increase over i <= j reduces to adjacent pairs.
    for (std::int64_t i = 2; i < max; ++i)
        if (s[i] > s[i - 1])
            return false;
    return s[max - 1] == 0;
}

namespace {

bool in_domain(std::int64_t max, std::int64_t j, std::int64_t k) {
    return 1 <= j && j <= max && 1 <= k && k < max;
}

std::int64_t raw_count(const FixedPartitionSequence& s, std::int64_t j, std::int64_t k) {
    std::int64_t count = 0;
    for (std::int64_t i = 1; i < j; ++i)
        if (s[i] >= k)
            ++count;
    return count;
}

}  // namespace

std::int64_t count_if_sup_exact(const FixedPartitionSequence& s, std::int64_t j, std::int64_t k) {
    if (!in_domain(s.max(), j, k))
        throw PredicateDomain("countIfSup needs 1 <= j <= " + std::to_string(s.max()) +
                              " and 1 <= k < " + std::to_string(s.max()) + ", got j=" +
                              std::to_string(j) + " k=" + std::to_string(k));
    if (!is_partition_pred(s))
        throw PredicateDomain("countIfSup is only defined on sequences satisfying is_partition");
    return raw_count(s, j, k);
}

bool count_if_sup_literal(const FixedPartitionSequence& s, const CountWitness& w) {
    if (!is_partition_pred(s) || !in_domain(s.max(), w.j, w.k))
        return false;
    if (1 <= w.z && w.z < w.j) {
        bool all = true;
        for (std::int64_t i = 1; i <= w.z && all; ++i)
            all = s[i] >= w.k;
        if (all)
            return true;
    }
    if (w.z == 0) {
        for (std::int64_t i = 1; i < w.j; ++i)
            if (s[i] >= w.k)
                return false;
        return true;
    }
    return false;
}

bool count_if_sup_holds(const FixedPartitionSequence& s, const CountWitness& w,
                        CountSemantics semantics) {
    if (semantics == CountSemantics::literal)
        return count_if_sup_literal(s, w);
    if (!is_partition_pred(s) || !in_domain(s.max(), w.j, w.k))
        return false;
    return raw_count(s, w.j, w.k) == w.z;
}

namespace {

void require_same_max(const FixedPartitionSequence& t1, const FixedPartitionSequence& t2) {
    if (t1.max() != t2.max())
        throw MaxMismatch("sequence sizes differ: " + std::to_string(t1.max()) + " vs " +
                          std::to_string(t2.max()));
}

}  // namespace

bool is_conjugate_pred(const FixedPartitionSequence& t1, const FixedPartitionSequence& t2) {
    require_same_max(t1, t2);
    if (!is_partition_pred(t1))
        return false;
    const std::int64_t max = t1.max();
    for (std::int64_t k = 1; k < max; ++k)
        if (raw_count(t1, max, k) != t2[k])
            return false;
    return true;
}

bool is_conjugate_literal(const FixedPartitionSequence& t1, const FixedPartitionSequence& t2) {
    require_same_max(t1, t2);
    const std::int64_t max = t1.max();
    for (std::int64_t k = 1; k < max; ++k)
        if (!count_if_sup_literal(t1, {max, k, t2[k]}))
            return false;
    return true;
}

}  // namespace schurkit
