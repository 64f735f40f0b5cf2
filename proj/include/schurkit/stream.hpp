#pragma once

#include <cstddef>
#include <iterator>
#include <optional>

namespace schurkit {

/// Adds single-pass range iteration to a lazy source. `Derived` provides
/// `std::optional<T> next()`; exhausting the optional ends the stream.
template <class Derived, class T>
class StreamMixin {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using difference_type = std::ptrdiff_t;
        using value_type = T;

        iterator() = default;
        explicit iterator(Derived* src) : src_(src) { cur_ = src_->next(); }

        const T& operator*() const { return *cur_; }
        const T* operator->() const { return &*cur_; }
        iterator& operator++() {
            cur_ = src_->next();
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) {
            return !it.cur_.has_value();
        }

    private:
        Derived* src_ = nullptr;
        std::optional<T> cur_;
    };

    iterator begin() { return iterator(static_cast<Derived*>(this)); }
    std::default_sentinel_t end() const noexcept { return {}; }
};

}  // namespace schurkit
