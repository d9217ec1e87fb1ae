#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "squiral/grid.hpp"

namespace squiral {

namespace detail {

// Read n (1..64) bits starting at bit position pos. Words past the slice end
// are only touched when the slice actually straddles a boundary.
inline std::uint64_t read_bits(const std::uint64_t* src, std::size_t pos, unsigned n) {
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t v = src[w] >> off;
    if (off + n > 64) {
        v |= src[w + 1] << (64 - off);
    }
    return n == 64 ? v : v & ((std::uint64_t{1} << n) - 1);
}

// OR n (1..64) bits into dst at bit position pos; dst must be zeroed and the
// unused high bits of `bits` must be zero.
inline void put_bits(std::uint64_t* dst, std::size_t pos, std::uint64_t bits, unsigned n) {
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    dst[w] |= bits << off;
    if (off + n > 64) {
        dst[w + 1] |= bits >> (64 - off);
    }
}

} // namespace detail

// Canonical, dimension-tagged encoding of one finite pattern. The payload is
// the cell block packed row-major with no per-row padding, so two keys are
// equal exactly when their dimensions and all cells are equal.
class PatternKey {
public:
    PatternKey() = default;

    PatternKey(long rows, long cols) {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("PatternKey: dimensions must be positive");
        }
        rows_ = static_cast<std::uint32_t>(rows);
        cols_ = static_cast<std::uint32_t>(cols);
        words_.assign((static_cast<std::size_t>(rows) * cols + 63) / 64, 0);
    }

    long rows() const noexcept { return rows_; }
    long cols() const noexcept { return cols_; }

    Cell get(long r, long c) const {
        if (r < 1 || r > rows_ || c < 1 || c > cols_) {
            throw std::out_of_range("PatternKey: cell index out of range");
        }
        const std::size_t pos = static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
        return ((words_[pos >> 6] >> (pos & 63)) & 1u) ? Cell::one : Cell::zero;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::size_t payload_bytes() const noexcept { return words_.size() * sizeof(std::uint64_t); }

    // Refill this key (which must already have dimensions h x w) with the
    // window of g at (r, c). Splitting the copy per row keeps it at two word
    // reads plus a shift per 64 cells.
    void assign_window(const BinaryGrid& g, long r, long c) {
        const long h = rows_;
        const long w = cols_;
        if (r < 1 || c < 1 || r + h - 1 > g.rows() || c + w - 1 > g.cols()) {
            throw std::out_of_range("window: out of bounds");
        }
        std::fill(words_.begin(), words_.end(), 0);
        std::size_t out_pos = 0;
        for (long k = 0; k < h; ++k) {
            const std::uint64_t* src = g.row_words(r + k);
            std::size_t src_pos = static_cast<std::size_t>(c - 1);
            long remaining = w;
            while (remaining > 0) {
                const unsigned n = remaining >= 64 ? 64u : static_cast<unsigned>(remaining);
                detail::put_bits(words_.data(), out_pos, detail::read_bits(src, src_pos, n), n);
                out_pos += n;
                src_pos += n;
                remaining -= n;
            }
        }
    }

    friend bool operator==(const PatternKey& a, const PatternKey& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
    }

private:
    std::uint32_t rows_ = 0;
    std::uint32_t cols_ = 0;
    std::vector<std::uint64_t> words_;
};

struct PatternKeyHash {
    std::size_t operator()(const PatternKey& k) const noexcept {
        // splitmix64-style fold; collisions are resolved by full payload
        // comparison in the hash set.
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(k.rows()) << 32 |
                                                   static_cast<std::uint64_t>(k.cols()));
        for (std::uint64_t w : k.words()) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ull;
            h ^= h >> 27;
        }
        return static_cast<std::size_t>(h);
    }
};

inline PatternKey window(const BinaryGrid& g, long r, long c, long h, long w) {
    PatternKey key(h, w);
    key.assign_window(g, r, c);
    return key;
}

inline PatternKey key_of(const BinaryGrid& g) {
    return window(g, 1, 1, g.rows(), g.cols());
}

inline BinaryGrid to_grid(const PatternKey& k) {
    BinaryGrid g(k.rows(), k.cols());
    for (long r = 1; r <= k.rows(); ++r) {
        for (long c = 1; c <= k.cols(); ++c) {
            if (k.get(r, c) == Cell::one) {
                g.set(r, c, Cell::one);
            }
        }
    }
    return g;
}

// Deduplicated collection of patterns of one fixed size.
class PatternSet {
public:
    PatternSet(long rows, long cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("PatternSet: dimensions must be positive");
        }
    }

    long rows() const noexcept { return rows_; }
    long cols() const noexcept { return cols_; }
    std::size_t cardinality() const noexcept { return members_.size(); }
    std::uint64_t payload_bytes() const noexcept { return payload_bytes_; }

    // Returns false (and stays unchanged) when the key is already present.
    bool insert(const PatternKey& k) {
        if (k.rows() != rows_ || k.cols() != cols_) {
            throw std::invalid_argument("PatternSet: key dimensions do not match set");
        }
        auto [it, inserted] = members_.insert(k);
        if (inserted) {
            payload_bytes_ += k.payload_bytes() + kEntryOverhead;
        }
        return inserted;
    }

    bool contains(const PatternKey& k) const { return members_.count(k) != 0; }

    const std::unordered_set<PatternKey, PatternKeyHash>& members() const noexcept {
        return members_;
    }

    void reserve(std::size_t n) { members_.reserve(n); }

    void merge_from(PatternSet&& other) {
        if (other.rows_ != rows_ || other.cols_ != cols_) {
            throw std::invalid_argument("PatternSet: merge dimension mismatch");
        }
        for (auto it = other.members_.begin(); it != other.members_.end();) {
            auto node = other.members_.extract(it++);
            const std::uint64_t bytes = node.value().payload_bytes() + kEntryOverhead;
            if (members_.insert(std::move(node.value())).second) {
                payload_bytes_ += bytes;
            }
        }
        other.payload_bytes_ = 0;
    }

    // Accounted per member on top of the raw payload: hash node, bucket slot
    // and vector header.
    static constexpr std::uint64_t kEntryOverhead = 64;

private:
    long rows_;
    long cols_;
    std::uint64_t payload_bytes_ = 0;
    std::unordered_set<PatternKey, PatternKeyHash> members_;
};

// True member-set identity, not just equal cardinality.
inline bool set_equals(const PatternSet& a, const PatternSet& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    if (a.cardinality() != b.cardinality()) {
        return false;
    }
    for (const PatternKey& k : a.members()) {
        if (!b.contains(k)) {
            return false;
        }
    }
    return true;
}

inline bool sets_disjoint(const PatternSet& a, const PatternSet& b) {
    const PatternSet& small = a.cardinality() <= b.cardinality() ? a : b;
    const PatternSet& large = a.cardinality() <= b.cardinality() ? b : a;
    for (const PatternKey& k : small.members()) {
        if (large.contains(k)) {
            return false;
        }
    }
    return true;
}

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30; // 2 GiB

struct EnumerateOptions {
    std::uint64_t memory_budget = kDefaultMemoryBudget;
    unsigned threads = 1; // 0 = hardware concurrency
};

namespace detail {

struct WindowScan {
    const BinaryGrid* grid;
    long h, w;
    long r0, rstep; // 1-based first row position and stride
    long c0, cstep;
};

// Scan the given slice of row positions into `out`. `used` is shared across
// workers; duplicates seen by different workers may be double-counted there,
// which only makes the budget check conservative.
inline void scan_rows(const WindowScan& s, long idx_begin, long idx_end, PatternSet& out,
                      std::atomic<std::uint64_t>& used, std::uint64_t budget,
                      std::atomic<bool>& overflow) {
    const BinaryGrid& g = *s.grid;
    const long max_c = g.cols() - s.w + 1;
    PatternKey scratch(s.h, s.w);
    const std::uint64_t entry_bytes = scratch.payload_bytes() + PatternSet::kEntryOverhead;
    for (long idx = idx_begin; idx < idx_end; ++idx) {
        if (overflow.load(std::memory_order_relaxed)) {
            return;
        }
        const long r = s.r0 + idx * s.rstep;
        for (long c = s.c0; c <= max_c; c += s.cstep) {
            scratch.assign_window(g, r, c);
            if (out.contains(scratch)) {
                continue;
            }
            if (used.fetch_add(entry_bytes, std::memory_order_relaxed) + entry_bytes > budget) {
                overflow.store(true, std::memory_order_relaxed);
                return;
            }
            out.insert(scratch);
        }
    }
}

inline PatternSet enumerate_windows_stepped(const BinaryGrid& g, long h, long w, long r0,
                                            long rstep, long c0, long cstep,
                                            const EnumerateOptions& opts) {
    if (h < 1 || w < 1) {
        throw std::invalid_argument("enumerate_windows: pattern dimensions must be positive");
    }
    PatternSet out(h, w);
    if (h > g.rows() || w > g.cols()) {
        return out; // a pattern larger than the grid occurs nowhere
    }

    const long max_r = g.rows() - h + 1;
    if (r0 > max_r || c0 > g.cols() - w + 1) {
        return out;
    }
    const long n_rows = (max_r - r0) / rstep + 1;

    const WindowScan scan{&g, h, w, r0, rstep, c0, cstep};
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> overflow{false};

    unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) {
        threads = 1;
    }
    if (static_cast<long>(threads) > n_rows) {
        threads = static_cast<unsigned>(n_rows);
    }

    if (threads <= 1) {
        scan_rows(scan, 0, n_rows, out, used, opts.memory_budget, overflow);
    } else {
        std::vector<PatternSet> locals;
        locals.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            locals.emplace_back(h, w);
        }
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> workers;
        workers.reserve(threads);
        const long chunk = (n_rows + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const long b = t * chunk;
            const long e = std::min<long>(n_rows, b + chunk);
            workers.emplace_back([&, t, b, e] {
                try {
                    scan_rows(scan, b, e, locals[t], used, opts.memory_budget, overflow);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (std::thread& th : workers) {
            th.join();
        }
        for (const std::exception_ptr& ep : errors) {
            if (ep) {
                std::rethrow_exception(ep);
            }
        }
        for (PatternSet& local : locals) {
            out.merge_from(std::move(local));
        }
    }

    if (overflow.load()) {
        throw resource_limit_error("enumerate_windows: pattern set would exceed memory budget of " +
                                   std::to_string(opts.memory_budget) + " bytes");
    }
    return out;
}

} // namespace detail

// All distinct h x w windows of g. Empty set (not an error) when the window
// is larger than the grid.
inline PatternSet enumerate_windows(const BinaryGrid& g, long h, long w,
                                    const EnumerateOptions& opts = {}) {
    return detail::enumerate_windows_stepped(g, h, w, 1, 1, 1, 1, opts);
}

// Windows whose top-left corner (r, c) satisfies r = i and c = j mod 3.
// Meaningful when g is a supertile (or any inflated grid), whose level-1
// block structure is aligned to (1, 1).
inline PatternSet enumerate_phase_windows(const BinaryGrid& g, long h, long w, int i, int j,
                                          const EnumerateOptions& opts = {}) {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::invalid_argument("enumerate_phase_windows: phases must lie in 1..3");
    }
    return detail::enumerate_windows_stepped(g, h, w, i, 3, j, 3, opts);
}

} // namespace squiral
