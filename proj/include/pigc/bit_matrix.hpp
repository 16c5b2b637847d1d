#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pigc {

/// Square 0/1 matrix stored as rows of 64-bit words. Used as the dense
/// adjacency behind Graph and as the mutable scratch graph of the oracles.
class BitMatrix {
public:
    using Word = std::uint64_t;

    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool test(std::size_t r, std::size_t c) const noexcept {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] |= Word{1} << (c % 64); }
    void reset(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] &= ~(Word{1} << (c % 64)); }

    void set_sym(std::size_t u, std::size_t v) noexcept { set(u, v); set(v, u); }
    void reset_sym(std::size_t u, std::size_t v) noexcept { reset(u, v); reset(v, u); }

    const Word* row(std::size_t r) const noexcept { return bits_.data() + r * words_; }
    Word* row(std::size_t r) noexcept { return bits_.data() + r * words_; }

    std::size_t row_count(std::size_t r) const noexcept {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(row(r)[w]));
        return c;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// Dynamic bit row used for set algebra on neighbourhoods.
class BitRow {
public:
    using Word = BitMatrix::Word;

    BitRow() = default;
    explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    BitRow(const BitMatrix& m, std::size_t r) : n_(m.size()), w_(m.row(r), m.row(r) + m.words_per_row()) {}

    std::size_t size() const noexcept { return n_; }
    bool test(std::size_t i) const noexcept { return (w_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) noexcept { w_[i / 64] |= Word{1} << (i % 64); }
    void reset(std::size_t i) noexcept { w_[i / 64] &= ~(Word{1} << (i % 64)); }

    BitRow& operator&=(const BitRow& o) noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitRow& and_row(const BitMatrix& m, std::size_t r) noexcept {
        const Word* p = m.row(r);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= p[i];
        return *this;
    }
    BitRow& and_not_row(const BitMatrix& m, std::size_t r) noexcept {
        const Word* p = m.row(r);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~p[i];
        return *this;
    }
    /// Clears every bit at index <= i.
    BitRow& keep_above(std::size_t i) noexcept {
        const std::size_t wi = i / 64;
        for (std::size_t k = 0; k < wi && k < w_.size(); ++k) w_[k] = 0;
        if (wi < w_.size()) {
            const unsigned sh = static_cast<unsigned>(i % 64);
            w_[wi] &= sh == 63 ? Word{0} : ~((Word{2} << sh) - 1);
        }
        return *this;
    }

    bool any() const noexcept {
        for (Word w : w_)
            if (w) return true;
        return false;
    }
    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    /// First set index >= from, or size() if none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= n_) return n_;
        std::size_t wi = from / 64;
        Word cur = w_[wi] & (~Word{0} << (from % 64));
        while (true) {
            if (cur) return wi * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++wi >= w_.size()) return n_;
            cur = w_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = first(); i < n_; i = next(i + 1)) f(i);
    }

private:
    std::size_t n_ = 0;
    std::vector<Word> w_;
};

}  // namespace pigc
