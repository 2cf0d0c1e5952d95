// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cassert>
#include <type_traits>
#include <utility>
#include <variant>

namespace hornet::util {

// Wraps an error value so it can be returned where an Expected is expected.
template <typename E>
struct Unexpected {
    E error;
};

template <typename E>
Unexpected(E) -> Unexpected<E>;

// Minimal stand-in for std::expected (C++23), holding either a value or an error.
template <typename T, typename E>
class [[nodiscard]] Expected {
public:
    using value_type = T;
    using error_type = E;

    Expected() requires std::is_default_constructible_v<T> : state_(std::in_place_index<0>) {}
    Expected(const T& value) : state_(std::in_place_index<0>, value) {}
    Expected(T&& value) : state_(std::in_place_index<0>, std::move(value)) {}
    Expected(const E& error) requires(!std::is_same_v<T, E>)
        : state_(std::in_place_index<1>, error) {}
    template <typename G>
    Expected(Unexpected<G> u) : state_(std::in_place_index<1>, std::move(u.error)) {}

    bool has_value() const { return state_.index() == 0; }
    explicit operator bool() const { return has_value(); }

    const T& value() const& {
        assert(has_value());
        return std::get<0>(state_);
    }
    T& value() & {
        assert(has_value());
        return std::get<0>(state_);
    }
    T&& value() && {
        assert(has_value());
        return std::get<0>(std::move(state_));
    }
    const T& operator*() const& { return value(); }
    T& operator*() & { return value(); }
    const T* operator->() const { return &value(); }
    T* operator->() { return &value(); }

    const E& error() const {
        assert(!has_value());
        return std::get<1>(state_);
    }

    friend bool operator==(const Expected&, const Expected&) = default;

private:
    std::variant<T, E> state_;
};

// Success-or-error result with no success payload.
template <typename E>
class [[nodiscard]] Expected<void, E> {
public:
    using value_type = void;
    using error_type = E;

    Expected() = default;
    Expected(const E& error) : error_(error), failed_(true) {}
    template <typename G>
    Expected(Unexpected<G> u) : error_(std::move(u.error)), failed_(true) {}

    bool has_value() const { return !failed_; }
    explicit operator bool() const { return has_value(); }

    const E& error() const {
        assert(failed_);
        return error_;
    }

    friend bool operator==(const Expected& a, const Expected& b) {
        if (a.failed_ != b.failed_) return false;
        return !a.failed_ || a.error_ == b.error_;
    }

private:
    E error_{};
    bool failed_ = false;
};

}  // namespace hornet::util
