#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "squiral/errors.hpp"

namespace squiral {

enum class Cell : std::uint8_t { zero = 0, one = 1 };

constexpr Cell complement(Cell c) noexcept {
    return c == Cell::zero ? Cell::one : Cell::zero;
}

// Bit-packed binary matrix. Storage is row-major with every row padded to a
// whole number of 64-bit words, so a window row can be pulled out with two
// word reads and a shift. Addressing is 1-based with row 1 at the top,
// matching the matrix convention used for supertiles.
class BinaryGrid {
public:
    BinaryGrid(long rows, long cols) {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("BinaryGrid: dimensions must be positive");
        }
        rows_ = rows;
        cols_ = cols;
        words_per_row_ = (cols + 63) / 64;
        bits_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
    }

    long rows() const noexcept { return rows_; }
    long cols() const noexcept { return cols_; }
    long words_per_row() const noexcept { return words_per_row_; }

    Cell get(long r, long c) const {
        check_index(r, c);
        return test(r, c) ? Cell::one : Cell::zero;
    }

    void set(long r, long c, Cell v) {
        check_index(r, c);
        const std::size_t word = word_index(r, c);
        const std::uint64_t mask = std::uint64_t{1} << ((c - 1) & 63);
        if (v == Cell::one) {
            bits_[word] |= mask;
        } else {
            bits_[word] &= ~mask;
        }
    }

    // Unchecked fast path for scanning loops.
    bool test(long r, long c) const noexcept {
        assert(r >= 1 && r <= rows_ && c >= 1 && c <= cols_);
        return (bits_[word_index(r, c)] >> ((c - 1) & 63)) & 1u;
    }

    const std::uint64_t* row_words(long r) const noexcept {
        assert(r >= 1 && r <= rows_);
        return bits_.data() + static_cast<std::size_t>(r - 1) * words_per_row_;
    }

    std::uint64_t* row_words(long r) noexcept {
        assert(r >= 1 && r <= rows_);
        return bits_.data() + static_cast<std::size_t>(r - 1) * words_per_row_;
    }

    // Padding bits are kept zero, so word equality is cell equality.
    friend bool operator==(const BinaryGrid& a, const BinaryGrid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

private:
    void check_index(long r, long c) const {
        if (r < 1 || r > rows_ || c < 1 || c > cols_) {
            throw std::out_of_range("BinaryGrid: cell index out of range");
        }
    }

    std::size_t word_index(long r, long c) const noexcept {
        return static_cast<std::size_t>(r - 1) * words_per_row_ +
               static_cast<std::size_t>(c - 1) / 64;
    }

    long rows_ = 0;
    long cols_ = 0;
    long words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline BinaryGrid complement(const BinaryGrid& g) {
    BinaryGrid out(g.rows(), g.cols());
    const unsigned tail = static_cast<unsigned>(g.cols() & 63);
    const std::uint64_t tail_mask = tail ? (std::uint64_t{1} << tail) - 1 : ~std::uint64_t{0};
    for (long r = 1; r <= g.rows(); ++r) {
        const std::uint64_t* src = g.row_words(r);
        std::uint64_t* dst = out.row_words(r);
        for (long w = 0; w < g.words_per_row(); ++w) {
            dst[w] = ~src[w];
        }
        dst[g.words_per_row() - 1] &= tail_mask;
    }
    return out;
}

inline BinaryGrid cellwise_xor(const BinaryGrid& a, const BinaryGrid& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("cellwise_xor: dimension mismatch");
    }
    BinaryGrid out(a.rows(), a.cols());
    for (long r = 1; r <= a.rows(); ++r) {
        const std::uint64_t* pa = a.row_words(r);
        const std::uint64_t* pb = b.row_words(r);
        std::uint64_t* dst = out.row_words(r);
        for (long w = 0; w < a.words_per_row(); ++w) {
            dst[w] = pa[w] ^ pb[w];
        }
    }
    return out;
}

// The block substitution: each symbol maps to a fixed 3x3 image, and the two
// images are cellwise complements of each other.
struct SubstitutionRule {
    BinaryGrid image0;
    BinaryGrid image1;
};

// Image of 0 has ones in the four corners and zeros elsewhere:
//   1 0 1
//   0 0 0
//   1 0 1
inline SubstitutionRule squiral_rule() {
    BinaryGrid img0(3, 3);
    img0.set(1, 1, Cell::one);
    img0.set(1, 3, Cell::one);
    img0.set(3, 1, Cell::one);
    img0.set(3, 3, Cell::one);
    return {img0, complement(img0)};
}

inline constexpr unsigned kDefaultMaxLevel = 9;
inline constexpr long kDefaultMaxSide = 19683; // 3^9

// Replaces every cell of g by the 3x3 image of its value; the image of the
// cell at (r, c) lands with its top-left corner at (3r-2, 3c-2).
inline BinaryGrid inflate(const BinaryGrid& g, const SubstitutionRule& rule,
                          long max_side = kDefaultMaxSide) {
    if (rule.image0.rows() != 3 || rule.image0.cols() != 3 ||
        rule.image1.rows() != 3 || rule.image1.cols() != 3) {
        throw std::invalid_argument("inflate: rule images must be 3x3");
    }
    if (3 * g.rows() > max_side || 3 * g.cols() > max_side) {
        throw resource_limit_error("inflate: result would exceed maximum grid side " +
                                   std::to_string(max_side));
    }

    // 3-bit row slices of the two images, LSB = leftmost column.
    std::uint64_t slice[2][3];
    for (int v = 0; v < 2; ++v) {
        const BinaryGrid& img = v ? rule.image1 : rule.image0;
        for (long ir = 1; ir <= 3; ++ir) {
            std::uint64_t bits = 0;
            for (long ic = 1; ic <= 3; ++ic) {
                if (img.test(ir, ic)) {
                    bits |= std::uint64_t{1} << (ic - 1);
                }
            }
            slice[v][ir - 1] = bits;
        }
    }

    BinaryGrid out(3 * g.rows(), 3 * g.cols());
    for (long r = 1; r <= g.rows(); ++r) {
        const std::uint64_t* src = g.row_words(r);
        for (int dr = 0; dr < 3; ++dr) {
            std::uint64_t* dst = out.row_words(3 * (r - 1) + dr + 1);
            for (long c = 0; c < g.cols(); ++c) {
                const bool v = (src[c / 64] >> (c & 63)) & 1u;
                const std::uint64_t bits = slice[v][dr];
                if (bits == 0) {
                    continue;
                }
                const std::size_t pos = static_cast<std::size_t>(3) * c;
                const unsigned off = pos & 63;
                dst[pos >> 6] |= bits << off;
                if (off > 61) {
                    dst[(pos >> 6) + 1] |= bits >> (64 - off);
                }
            }
        }
    }
    return out;
}

// T_n: the n-fold image of the single cell 0, a 3^n x 3^n grid.
inline BinaryGrid supertile(unsigned n, unsigned max_level = kDefaultMaxLevel) {
    if (n > max_level) {
        throw resource_limit_error("supertile: level " + std::to_string(n) +
                                   " exceeds budget " + std::to_string(max_level));
    }
    long side = 1;
    for (unsigned i = 0; i < n; ++i) {
        side *= 3;
    }
    const SubstitutionRule rule = squiral_rule();
    BinaryGrid t(1, 1);
    for (unsigned i = 0; i < n; ++i) {
        t = inflate(t, rule, side);
    }
    return t;
}

} // namespace squiral
