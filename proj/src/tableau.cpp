#include "schurkit/tableau.hpp"

#include <algorithm>

#include "schurkit/errors.hpp"

namespace schurkit {

FerrersShape::FerrersShape(Partition shape)
    : shape_(std::move(shape)), columns_(conjugate_oracle(shape_)) {
    for (std::size_t r = 0; r < shape_.length(); ++r)
        for (std::int64_t c = 1; c <= shape_.part(r); ++c)
            cells_.emplace_back(static_cast<std::int64_t>(r) + 1, c);
}

bool FerrersShape::contains(std::int64_t row, std::int64_t col) const noexcept {
    return row >= 1 && row <= static_cast<std::int64_t>(shape_.length()) && col >= 1 &&
           col <= shape_.part(static_cast<std::size_t>(row - 1));
}

std::int64_t FerrersShape::column_length(std::int64_t col) const noexcept {
    if (col < 1 || col > static_cast<std::int64_t>(columns_.length()))
        return 0;
    return columns_.part(static_cast<std::size_t>(col - 1));
}

namespace {

std::vector<std::int64_t> row_lengths(const std::vector<Tableau::Row>& rows) {
    std::vector<std::int64_t> out;
    for (const auto& r : rows)
        out.push_back(static_cast<std::int64_t>(r.size()));
    return out;
}

}  // namespace

Tableau::Tableau(std::vector<Row> rows) : shape_(row_lengths(rows)), rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
}

Tableau::Tableau(const Partition& shape, std::span<const std::int64_t> row_major) : shape_(shape) {
    if (static_cast<std::int64_t>(row_major.size()) != shape.size())
        throw EntryOutOfRange("expected " + std::to_string(shape.size()) + " entries, got " +
                              std::to_string(row_major.size()));
    std::size_t pos = 0;
    for (auto len : shape.parts()) {
        rows_.emplace_back(row_major.begin() + static_cast<std::ptrdiff_t>(pos),
                           row_major.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += static_cast<std::size_t>(len);
    }
}

std::int64_t Tableau::at(std::int64_t row, std::int64_t col) const {
    if (row < 1 || row > static_cast<std::int64_t>(rows_.size()) || col < 1 ||
        col > static_cast<std::int64_t>(rows_[static_cast<std::size_t>(row - 1)].size()))
        throw IndexOutOfRange("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                              ") is not in the shape");
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

bool is_ssyt(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1)
                return false;
            if (c > 0 && rows[r][c] < rows[r][c - 1])
                return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c])
                return false;
        }
    }
    return true;
}

bool is_standard(const Tableau& t) {
    const std::int64_t n = t.shape().size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : t.rows())
        for (auto v : row) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
    return true;
}

std::vector<std::int64_t> content(const Tableau& t, std::int64_t max_entry) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(std::max<std::int64_t>(max_entry, 0)), 0);
    for (const auto& row : t.rows())
        for (auto v : row) {
            if (v < 1 || v > max_entry)
                throw EntryOutOfRange("entry " + std::to_string(v) + " outside 1.." +
                                      std::to_string(max_entry));
            ++e[static_cast<std::size_t>(v - 1)];
        }
    return e;
}

std::string to_string(const Tableau& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ' ';
            out += std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

SsytEnumerator::SsytEnumerator(Partition shape, std::int64_t max_entry)
    : shape_(std::move(shape)), max_entry_(max_entry) {
    FerrersShape ferrers(shape_);
    const auto& cells = ferrers.cells();
    const std::size_t n = cells.size();
    entries_.assign(n, 0);
    upper_.resize(n);
    left_.resize(n);
    above_.resize(n);

    std::vector<std::size_t> row_start;
    std::size_t pos = 0;
    for (auto len : shape_.parts()) {
        row_start.push_back(pos);
        pos += static_cast<std::size_t>(len);
    }
    for (std::size_t idx = 0; idx < n; ++idx) {
        auto [r, c] = cells[idx];
        // Cells below in the same column each need a strictly larger entry.
        upper_[idx] = max_entry_ - (ferrers.column_length(c) - r);
        left_[idx] = c > 1 ? static_cast<std::int64_t>(idx) - 1 : -1;
        above_[idx] = r > 1 ? static_cast<std::int64_t>(row_start[static_cast<std::size_t>(r - 2)]) + c - 1
                            : -1;
    }
}

std::int64_t SsytEnumerator::lower_bound(std::size_t cell) const {
    std::int64_t lo = 1;
    if (left_[cell] >= 0)
        lo = std::max(lo, entries_[static_cast<std::size_t>(left_[cell])]);
    if (above_[cell] >= 0)
        lo = std::max(lo, entries_[static_cast<std::size_t>(above_[cell])] + 1);
    return lo;
}

void SsytEnumerator::fill_minimal_from(std::size_t cell) {
    for (std::size_t idx = cell; idx < entries_.size(); ++idx)
        entries_[idx] = lower_bound(idx);
}

bool SsytEnumerator::advance() {
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        fill_minimal_from(0);
        // The minimal filling is feasible iff the first column fits.
        for (std::size_t idx = 0; idx < entries_.size(); ++idx)
            if (entries_[idx] > upper_[idx]) {
                done_ = true;
                return false;
            }
        return true;
    }
    // Odometer step: bump the last cell below its cap, reset the suffix.
    for (std::size_t idx = entries_.size(); idx-- > 0;) {
        if (entries_[idx] < upper_[idx]) {
            ++entries_[idx];
            fill_minimal_from(idx + 1);
            return true;
        }
    }
    done_ = true;
    return false;
}

}  // namespace schurkit
