#include "schurkit/partition.hpp"

#include <charconv>
#include <numeric>

#include "schurkit/errors.hpp"

namespace schurkit {

Partition::Partition(std::span<const value_type> parts) {
    std::size_t len = parts.size();
    while (len > 0 && parts[len - 1] == 0)
        --len;
    parts_.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(len));
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw NotAPartition("part " + std::to_string(i + 1) + " is not positive: " +
                                std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotAPartition("parts are not weakly decreasing at position " +
                                std::to_string(i + 1));
    }
}

Partition::value_type Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), value_type{0});
}

Partition partition_from_parts(std::span<const Partition::value_type> parts) {
    return Partition(parts);
}

std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    std::vector<Partition::value_type> parts;
    if (text.empty())
        return Partition();
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        Partition::value_type v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("malformed partition part '" + std::string(field) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(parts);
}

Partition conjugate_oracle(const Partition& p) {
    std::vector<Partition::value_type> cols;
    cols.reserve(static_cast<std::size_t>(p.first()));
    for (Partition::value_type j = 1; j <= p.first(); ++j) {
        Partition::value_type count = 0;
        for (auto part : p.parts())
            if (part >= j)
                ++count;
        cols.push_back(count);
    }
    return Partition(cols);
}

PartitionStream::PartitionStream(std::int64_t n, std::optional<std::int64_t> max_part)
    : n_(n), bound_(max_part ? *max_part : n) {
    if (n < 0)
        throw PredicateDomain("partitions_of: n must be non-negative");
    if (bound_ < 0)
        bound_ = 0;
}

std::optional<Partition> PartitionStream::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0 && bound_ == 0) {
            done_ = true;
            return std::nullopt;
        }
        std::int64_t rest = n_;
        while (rest > 0) {
            std::int64_t p = std::min(rest, bound_);
            cur_.push_back(p);
            rest -= p;
        }
        return Partition(cur_);
    }
    // Drop trailing ones, decrement the last part above one and refill the
    // freed units greedily with parts no larger than it.
    std::int64_t freed = 0;
    while (!cur_.empty() && cur_.back() == 1) {
        cur_.pop_back();
        ++freed;
    }
    if (cur_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    std::int64_t v = --cur_.back();
    ++freed;
    while (freed > 0) {
        std::int64_t p = std::min(freed, v);
        cur_.push_back(p);
        freed -= p;
    }
    return Partition(cur_);
}

}  // namespace schurkit
