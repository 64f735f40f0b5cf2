#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/partition.hpp"
#include "schurkit/stream.hpp"

namespace schurkit {

/// The Ferrers diagram F^lambda: rows 1..l(lambda) top to bottom, row r
/// holding columns 1..lambda_r.
class FerrersShape {
public:
    explicit FerrersShape(Partition shape);

    const Partition& shape() const noexcept { return shape_; }
    /// (row, column) pairs, 1-based, row-major.
    const std::vector<std::pair<std::int64_t, std::int64_t>>& cells() const noexcept { return cells_; }
    bool contains(std::int64_t row, std::int64_t col) const noexcept;
    /// Number of cells in column c (the c-th part of the conjugate).
    std::int64_t column_length(std::int64_t col) const noexcept;

private:
    Partition shape_;
    Partition columns_;
    std::vector<std::pair<std::int64_t, std::int64_t>> cells_;
};

/// A filling of a Ferrers shape with positive integers. The filling is not
/// required to be semi-standard; see is_ssyt.
class Tableau {
public:
    using Row = std::vector<std::int64_t>;

    Tableau() = default;
    /// Throws NotAPartition if the row lengths do not form a partition.
    explicit Tableau(std::vector<Row> rows);
    /// Entries listed row-major; throws EntryOutOfRange on a size mismatch.
    Tableau(const Partition& shape, std::span<const std::int64_t> row_major);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    /// 1-based access.
    std::int64_t at(std::int64_t row, std::int64_t col) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

private:
    Partition shape_;
    std::vector<Row> rows_;
};

/// Rows weakly increase left to right and columns strictly increase
/// downwards; entries must be positive.
bool is_ssyt(const Tableau& t);

/// Entries are exactly 1..|shape|, each once. Assumes is_ssyt.
bool is_standard(const Tableau& t);

/// e[v-1] = number of cells holding v, for v in 1..max_entry.
/// Throws EntryOutOfRange if an entry exceeds max_entry or is below 1.
std::vector<std::int64_t> content(const Tableau& t, std::int64_t max_entry);

/// One row per line, entries separated by single spaces.
std::string to_string(const Tableau& t);

/// Backtracking enumeration of semi-standard fillings of a shape with
/// entries in 1..max_entry, in lexicographic order of the row-major entry
/// sequence. `current()` exposes the filling without building a Tableau.
class SsytEnumerator {
public:
    SsytEnumerator(Partition shape, std::int64_t max_entry);

    /// Moves to the next filling; false once exhausted. The first call
    /// positions on the first filling.
    bool advance();
    std::span<const std::int64_t> current() const noexcept { return entries_; }
    const Partition& shape() const noexcept { return shape_; }

private:
    std::int64_t lower_bound(std::size_t cell) const;
    void fill_minimal_from(std::size_t cell);

    Partition shape_;
    std::int64_t max_entry_;
    std::vector<std::int64_t> entries_;
    std::vector<std::int64_t> upper_;
    std::vector<std::int64_t> left_;   // index of the cell to the left, or -1
    std::vector<std::int64_t> above_;  // index of the cell above, or -1
    bool started_ = false;
    bool done_ = false;
};

class SsytStream : public StreamMixin<SsytStream, Tableau> {
public:
    SsytStream(Partition shape, std::int64_t max_entry)
        : shape_(shape), inner_(std::move(shape), max_entry) {}

    std::optional<Tableau> next() {
        if (!inner_.advance())
            return std::nullopt;
        return Tableau(shape_, inner_.current());
    }

private:
    Partition shape_;
    SsytEnumerator inner_;
};

inline SsytStream enumerate_ssyt(Partition shape, std::int64_t max_entry) {
    return SsytStream(std::move(shape), max_entry);
}

}  // namespace schurkit
