#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cubical {

/// Flat dynamic bitset sized once at construction. Word access is public
/// because the median scan and the pair-classification scans run over raw
/// words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    int word_count() const { return static_cast<int>(w_.size()); }
    const std::uint64_t* words() const { return w_.data(); }
    std::uint64_t* words() { return w_.data(); }

    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    /// First set bit at or after `from`; -1 when none.
    int next_set(int from) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(w_.size())) return -1;
            w = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next_set(0); i >= 0; i = next_set(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cubical
