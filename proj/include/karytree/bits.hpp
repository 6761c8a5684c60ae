#pragma once

/**
 * Fixed-width vertex bitsets. The word count is chosen at compile time so the
 * search kernels can keep whole neighbourhoods in registers for small orders;
 * dispatch_words() picks the smallest instantiation that fits a given order.
 */

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>

namespace karytree {

template <unsigned n_words_>
class FixedBits
{
public:
    static constexpr unsigned words = n_words_;
    static constexpr int capacity = 64 * n_words_;

    constexpr FixedBits() = default;

    static auto from_words(std::span<const std::uint64_t> src) -> FixedBits
    {
        FixedBits result;
        for (unsigned i = 0; i < n_words_ && i < src.size(); ++i)
            result._bits[i] = src[i];
        return result;
    }

    /// Bits [0, n) set.
    static auto prefix(int n) -> FixedBits
    {
        FixedBits result;
        for (unsigned i = 0; i < n_words_; ++i) {
            int lo = 64 * static_cast<int>(i);
            if (n >= lo + 64)
                result._bits[i] = ~std::uint64_t{0};
            else if (n > lo)
                result._bits[i] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return result;
    }

    auto set(int v) -> void { _bits[v / 64] |= std::uint64_t{1} << (v % 64); }
    auto reset(int v) -> void { _bits[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    auto test(int v) const -> bool { return (_bits[v / 64] >> (v % 64)) & 1; }

    auto count() const -> int
    {
        int result = 0;
        for (auto w : _bits)
            result += std::popcount(w);
        return result;
    }

    auto empty() const -> bool
    {
        for (auto w : _bits)
            if (w)
                return false;
        return true;
    }

    auto any() const -> bool { return ! empty(); }

    /// Lowest set bit, or -1.
    auto first() const -> int
    {
        for (unsigned i = 0; i < n_words_; ++i)
            if (_bits[i])
                return 64 * static_cast<int>(i) + std::countr_zero(_bits[i]);
        return -1;
    }

    auto intersects(const FixedBits & other) const -> bool
    {
        for (unsigned i = 0; i < n_words_; ++i)
            if (_bits[i] & other._bits[i])
                return true;
        return false;
    }

    auto intersection_count(const FixedBits & other) const -> int
    {
        int result = 0;
        for (unsigned i = 0; i < n_words_; ++i)
            result += std::popcount(_bits[i] & other._bits[i]);
        return result;
    }

    auto is_subset_of(const FixedBits & other) const -> bool
    {
        for (unsigned i = 0; i < n_words_; ++i)
            if (_bits[i] & ~other._bits[i])
                return false;
        return true;
    }

    auto operator&=(const FixedBits & other) -> FixedBits &
    {
        for (unsigned i = 0; i < n_words_; ++i)
            _bits[i] &= other._bits[i];
        return *this;
    }

    auto operator|=(const FixedBits & other) -> FixedBits &
    {
        for (unsigned i = 0; i < n_words_; ++i)
            _bits[i] |= other._bits[i];
        return *this;
    }

    auto subtract(const FixedBits & other) -> FixedBits &
    {
        for (unsigned i = 0; i < n_words_; ++i)
            _bits[i] &= ~other._bits[i];
        return *this;
    }

    friend auto operator&(FixedBits a, const FixedBits & b) -> FixedBits { return a &= b; }
    friend auto operator|(FixedBits a, const FixedBits & b) -> FixedBits { return a |= b; }
    friend auto operator-(FixedBits a, const FixedBits & b) -> FixedBits { return a.subtract(b); }
    friend auto operator==(const FixedBits &, const FixedBits &) -> bool = default;

    /// Calls f(v) for every set bit in increasing order.
    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (unsigned i = 0; i < n_words_; ++i) {
            auto w = _bits[i];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                f(64 * static_cast<int>(i) + b);
            }
        }
    }

private:
    std::array<std::uint64_t, n_words_> _bits{};
};

/// Calls f(std::integral_constant<unsigned, W>{}) for the smallest supported
/// word count W with 64*W >= n. Returns false if n exceeds the largest
/// instantiation (2048 vertices).
template <typename F>
auto dispatch_words(int n, F && f) -> bool
{
    if (n <= 64)
        f(std::integral_constant<unsigned, 1>{});
    else if (n <= 128)
        f(std::integral_constant<unsigned, 2>{});
    else if (n <= 256)
        f(std::integral_constant<unsigned, 4>{});
    else if (n <= 512)
        f(std::integral_constant<unsigned, 8>{});
    else if (n <= 1024)
        f(std::integral_constant<unsigned, 16>{});
    else if (n <= 2048)
        f(std::integral_constant<unsigned, 32>{});
    else
        return false;
    return true;
}

}
