/**
 * Dense bit-packed matrices over Z/2 and their rank.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dhomology/errors.hpp"

namespace dhomology {

/// Half-open index interval [begin, end).
struct IndexRange
{
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool operator==(const IndexRange&) const = default;
};

/// Coordinate list of (row, col) entries; repeated entries add mod 2.
using Triplets = std::vector<std::pair<std::size_t, std::size_t>>;

/**
 * Row-major bit-packed matrix over Z/2. Bits past `cols()` in the last
 * word of each row are always zero.
 */
class GF2Matrix
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    GF2Matrix() = default;

    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0)
    {
    }

    /// Entry (i, j) is one iff (i, j) occurs an odd number of times in `entries`.
    static GF2Matrix assemble(std::size_t rows, std::size_t cols, const Triplets& entries)
    {
        GF2Matrix m(rows, cols);
        for (auto [i, j] : entries)
        {
            if (i >= rows || j >= cols)
                throw DomainError("triplet (" + std::to_string(i) + "," + std::to_string(j)
                                  + ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
            m.flip(i, j);
        }
        return m;
    }

    static GF2Matrix identity(std::size_t n)
    {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.flip(i, i);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t i, std::size_t j) const
    {
        check(i, j);
        return (data_[i * words_ + j / word_bits] >> (j % word_bits)) & 1u;
    }

    void flip(std::size_t i, std::size_t j)
    {
        check(i, j);
        data_[i * words_ + j / word_bits] ^= Word{1} << (j % word_bits);
    }

    std::span<const Word> row(std::size_t i) const
    {
        return {data_.data() + i * words_, words_};
    }

    std::size_t count_ones() const noexcept
    {
        std::size_t total = 0;
        for (Word w : data_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    GF2Matrix transposed() const
    {
        GF2Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
        {
            auto r = row(i);
            for (std::size_t k = 0; k < words_; ++k)
            {
                for (Word w = r[k]; w != 0; w &= w - 1)
                {
                    std::size_t j = k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
                    t.data_[j * t.words_ + i / word_bits] ^= Word{1} << (i % word_bits);
                }
            }
        }
        return t;
    }

    /// Copy of the contiguous submatrix rows × cols.
    GF2Matrix block(IndexRange rows, IndexRange cols) const
    {
        if (rows.begin > rows.end || rows.end > rows_ || cols.begin > cols.end || cols.end > cols_)
            throw DomainError("block [" + std::to_string(rows.begin) + "," + std::to_string(rows.end)
                              + ")x[" + std::to_string(cols.begin) + "," + std::to_string(cols.end)
                              + ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        GF2Matrix out(rows.size(), cols.size());
        const std::size_t shift = cols.begin % word_bits;
        const std::size_t first = cols.begin / word_bits;
        for (std::size_t i = 0; i < out.rows_; ++i)
        {
            const Word* src = data_.data() + (rows.begin + i) * words_;
            Word* dst = out.data_.data() + i * out.words_;
            for (std::size_t k = 0; k < out.words_; ++k)
            {
                const std::size_t s = first + k;
                Word w = src[s] >> shift;
                if (shift != 0 && s + 1 < words_)
                    w |= src[s + 1] << (word_bits - shift);
                dst[k] = w;
            }
            out.clear_tail(i);
        }
        return out;
    }

    bool operator==(const GF2Matrix&) const = default;

    static std::size_t words_for(std::size_t bits) noexcept { return (bits + word_bits - 1) / word_bits; }

private:

    void check(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols_)
            throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside "
                              + std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    void clear_tail(std::size_t i) noexcept
    {
        if (const std::size_t used = cols_ % word_bits; used != 0 && words_ != 0)
            data_[i * words_ + words_ - 1] &= (Word{1} << used) - 1;
    }

    friend std::size_t rank(const GF2Matrix& m);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> data_;
};

inline GF2Matrix column_block(const GF2Matrix& m, IndexRange rows, IndexRange cols)
{
    return m.block(rows, cols);
}

namespace detail {

/**
 * Rank of `count` packed bit vectors of `words` words each, reduced in
 * place. Each vector is reduced against the pivots found so far, where a
 * pivot is keyed by its lowest set bit; since a pivot has no bits below
 * its key, XORs start at the key's word.
 */
inline std::size_t reduce_rank(std::vector<GF2Matrix::Word>& data, std::size_t count, std::size_t words,
                               std::size_t bits)
{
    using Word = GF2Matrix::Word;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of(bits, none);
    const std::size_t limit = std::min(count, bits);
    std::size_t rank = 0;

    for (std::size_t i = 0; i < count && rank < limit; ++i)
    {
        Word* v = data.data() + i * words;
        std::size_t k = 0;
        while (true)
        {
            while (k < words && v[k] == 0)
                ++k;
            if (k == words)
                break;
            const std::size_t low = k * GF2Matrix::word_bits + static_cast<std::size_t>(std::countr_zero(v[k]));
            const std::size_t p = pivot_of[low];
            if (p == none)
            {
                pivot_of[low] = i;
                ++rank;
                break;
            }
            const Word* pv = data.data() + p * words;
            for (std::size_t t = k; t < words; ++t)
                v[t] ^= pv[t];
        }
    }
    return rank;
}

} // namespace detail

/**
 * Rank over Z/2 by Gaussian elimination on a working copy. Tall matrices
 * are transposed first, so at most min(rows, cols) vectors are reduced.
 */
inline std::size_t rank(const GF2Matrix& m)
{
    if (m.rows_ == 0 || m.cols_ == 0)
        return 0;
    if (m.cols_ < m.rows_)
    {
        GF2Matrix t = m.transposed();
        return detail::reduce_rank(t.data_, t.rows_, t.words_, t.cols_);
    }
    std::vector<GF2Matrix::Word> work = m.data_;
    return detail::reduce_rank(work, m.rows_, m.words_, m.cols_);
}

/**
 * Incremental elimination of a stream of bit vectors of fixed length. Only
 * the independent vectors are stored, so memory is bounded by
 * min(count, bits) vectors regardless of how many are inserted.
 */
class GF2Eliminator
{
public:
    using Word = GF2Matrix::Word;

    explicit GF2Eliminator(std::size_t bits)
        : bits_(bits), words_(GF2Matrix::words_for(bits)), pivot_of_(bits, none)
    {
    }

    std::size_t bits() const noexcept { return bits_; }
    std::size_t words() const noexcept { return words_; }
    std::size_t rank() const noexcept { return rank_; }
    bool full() const noexcept { return rank_ == bits_; }

    /// Reduces `v` (modified in place) and keeps it if independent.
    bool insert(std::span<Word> v)
    {
        if (v.size() != words_)
            throw DomainError("GF2Eliminator: vector has " + std::to_string(v.size()) + " words, expected "
                              + std::to_string(words_));
        std::size_t k = 0;
        while (true)
        {
            while (k < words_ && v[k] == 0)
                ++k;
            if (k == words_)
                return false;
            const std::size_t low = k * GF2Matrix::word_bits + static_cast<std::size_t>(std::countr_zero(v[k]));
            const std::size_t p = pivot_of_[low];
            if (p == none)
            {
                pivot_of_[low] = rank_++;
                store_.insert(store_.end(), v.begin(), v.end());
                return true;
            }
            const Word* pv = store_.data() + p * words_;
            for (std::size_t t = k; t < words_; ++t)
                v[t] ^= pv[t];
        }
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::size_t bits_;
    std::size_t words_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> pivot_of_;
    std::vector<Word> store_;
};

} // namespace dhomology
