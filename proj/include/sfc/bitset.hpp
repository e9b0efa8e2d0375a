#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sfc {

// Dynamically sized bitset used for adjacency rows and edge subsets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

    void set_all() noexcept
    {
        for (auto &w : words_)
            w = ~std::uint64_t{0};
        trim();
    }
    void clear() noexcept
    {
        for (auto &w : words_)
            w = 0;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    bool intersects(const Bitset &o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    std::size_t intersection_count(const Bitset &o) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    bool is_subset_of(const Bitset &o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    Bitset &operator&=(const Bitset &o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset &operator|=(const Bitset &o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    // set difference
    Bitset &operator-=(const Bitset &o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset &b) { return a -= b; }

    bool operator==(const Bitset &o) const = default;
    auto operator<=>(const Bitset &o) const = default;

    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const noexcept
    {
        if (from >= size_)
            return size_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return size_;
            w = words_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    template <typename Fn>
    void for_each(Fn &&fn) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    const std::vector<std::uint64_t> &words() const noexcept { return words_; }

    std::size_t hash() const noexcept
    {
        std::size_t h = size_;
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept
    {
        if (size_ & 63)
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset &b) const noexcept { return b.hash(); }
};

} // namespace sfc
