#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "squiral/int128.hpp"

namespace squiral {

// Exact values (A_n, B_n, C_n) for one index: the counts of distinct n x n,
// n x (n+1) and (n+1) x n patterns.
struct ComplexityTriple {
    std::uint64_t n = 0;
    int128 A = 0;
    int128 B = 0;
    int128 C = 0;

    friend bool operator==(const ComplexityTriple& a, const ComplexityTriple& b) {
        return a.n == b.n && a.A == b.A && a.B == b.B && a.C == b.C;
    }
};

// Initial terms for A, B and C at n = 1..10 (index 0 unused).
inline constexpr std::int64_t kInitialA[11] = {0, 2, 14, 70, 126, 270, 438, 630, 790, 958, 1134};
inline constexpr std::int64_t kInitialB[11] = {0, 4, 36, 96, 192, 348, 528, 708, 872, 1044, 1332};
inline constexpr std::int64_t kInitialC[11] = {0, 4, 36, 96, 192, 348, 528, 708, 872, 1044, 1332};

// Largest index accepted by the exact-integer paths. Keeps every 128-bit
// intermediate (the largest is (12*3^a + 24*3^b)(n-1)) well below overflow.
inline constexpr std::uint64_t kMaxSequenceIndex = 2'000'000'000'000'000'000ull;

// Floor logarithm base 3: the unique k with 3^k <= x < 3^(k+1). Pure integer
// arithmetic; never goes through floating point.
inline unsigned ilog3(std::uint64_t x) {
    if (x == 0) {
        throw std::invalid_argument("ilog3: argument must be positive");
    }
    unsigned k = 0;
    for (std::uint64_t p = 1; p <= x / 3; p *= 3) {
        ++k;
    }
    return k;
}

// The exponent pair of the closed form: alpha with 3^a <= n-2 < 3^(a+1) and
// beta with 2*3^b <= n-2 < 2*3^(b+1). The beta inequality is the exact
// meaning of floor(log3((n-2)/2)) and is evaluated by direct comparison.
struct ClosedFormParams {
    std::uint64_t n = 0;
    unsigned alpha = 0;
    unsigned beta = 0;
};

inline ClosedFormParams closed_form_params(std::uint64_t n) {
    if (n < 4) {
        throw std::domain_error("closed_form_params: defined for n >= 4");
    }
    const std::uint64_t x = n - 2;
    unsigned beta = 0;
    for (std::uint64_t p = 1; p <= x / 6; p *= 3) {
        ++beta;
    }
    return {n, ilog3(x), beta};
}

namespace detail {

inline int128 pow3(unsigned e) {
    int128 p = 1;
    for (unsigned i = 0; i < e; ++i) {
        p *= 3;
    }
    return p;
}

inline void check_index(std::uint64_t n, const char* who) {
    if (n > kMaxSequenceIndex) {
        throw std::overflow_error(std::string(who) + ": index too large for exact evaluation");
    }
}

} // namespace detail

// A_n in closed form:
//   A_n = (4 + 8a - 8b)(n-1)^2 + (12*3^a + 24*3^b)(n-1) - 18*9^a
// for n >= 4, with A_1 = 2, A_2 = 14, A_3 = 70.
inline int128 closed_form_A(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("closed_form_A: n must be >= 1");
    }
    detail::check_index(n, "closed_form_A");
    if (n <= 3) {
        return kInitialA[n];
    }
    const ClosedFormParams p = closed_form_params(n);
    const int128 pa = detail::pow3(p.alpha);
    const int128 pb = detail::pow3(p.beta);
    const int128 m = static_cast<int128>(n) - 1;
    return (4 + 8 * static_cast<int128>(p.alpha) - 8 * static_cast<int128>(p.beta)) * m * m +
           (12 * pa + 24 * pb) * m - 18 * pa * pa;
}

// Full coupled recursion system over the triples, valid for reduced index
// k >= 2 (base cases cover n <= 10):
//   A_{3k-2} = 9A_k                      B_{3k-2} = 6A_k + 3B_k
//   A_{3k-1} = 4A_k + 2B_k + 2C_k + A_{k+1}
//   A_{3k}   = A_k + 2B_k + 2C_k + 4A_{k+1}
//   B_{3k-1} = 2A_k + 4B_k + C_k + 2A_{k+1}
//   B_{3k}   = 3B_k + 6A_{k+1}
//   C_{3k-2} = 6A_k + 3C_k
//   C_{3k-1} = 2A_k + B_k + 4C_k + 2A_{k+1}
//   C_{3k}   = 3C_k + 6A_{k+1}
//
// Instances memoize; one instance is meant for single-threaded use.
class RecursionSystem {
public:
    // memo_cap = 0 means unbounded; when the cap is reached new values are
    // still computed, just not retained.
    explicit RecursionSystem(std::size_t memo_cap = 0) : cap_(memo_cap) {}

    ComplexityTriple triple(std::uint64_t n) {
        if (n == 0) {
            throw std::domain_error("recursion_triple: n must be >= 1");
        }
        detail::check_index(n, "recursion_triple");
        const Entry e = eval(n);
        return {n, e.A, e.B, e.C};
    }

    // Triples for n = 1..max_n, computed ascending without the memo map.
    std::vector<ComplexityTriple> table(std::uint64_t max_n) {
        if (max_n == 0) {
            throw std::domain_error("sequence_table: max_n must be >= 1");
        }
        detail::check_index(max_n, "sequence_table");
        std::vector<ComplexityTriple> out;
        out.reserve(max_n);
        for (std::uint64_t n = 1; n <= max_n && n <= 10; ++n) {
            out.push_back({n, kInitialA[n], kInitialB[n], kInitialC[n]});
        }
        for (std::uint64_t n = 11; n <= max_n; ++n) {
            out.push_back(step(n, out));
        }
        return out;
    }

private:
    struct Entry {
        int128 A, B, C;
    };

    static Entry combine(std::uint64_t n, const Entry& lo, const Entry& hi) {
        switch (n % 3) {
        case 1:
            return {9 * lo.A, 6 * lo.A + 3 * lo.B, 6 * lo.A + 3 * lo.C};
        case 2:
            return {4 * lo.A + 2 * lo.B + 2 * lo.C + hi.A,
                    2 * lo.A + 4 * lo.B + lo.C + 2 * hi.A,
                    2 * lo.A + lo.B + 4 * lo.C + 2 * hi.A};
        default: // 0
            return {lo.A + 2 * lo.B + 2 * lo.C + 4 * hi.A,
                    3 * lo.B + 6 * hi.A,
                    3 * lo.C + 6 * hi.A};
        }
    }

    static std::uint64_t reduced_index(std::uint64_t n) {
        switch (n % 3) {
        case 1: return (n + 2) / 3;
        case 2: return (n + 1) / 3;
        default: return n / 3;
        }
    }

    static ComplexityTriple step(std::uint64_t n, const std::vector<ComplexityTriple>& table) {
        const std::uint64_t k = reduced_index(n);
        const ComplexityTriple& lo = table[k - 1];
        const ComplexityTriple& hi = table[k];
        const Entry e = combine(n, {lo.A, lo.B, lo.C}, {hi.A, hi.B, hi.C});
        return {n, e.A, e.B, e.C};
    }

    Entry eval(std::uint64_t n) {
        if (n <= 10) {
            return {kInitialA[n], kInitialB[n], kInitialC[n]};
        }
        if (const auto it = memo_.find(n); it != memo_.end()) {
            return it->second;
        }
        const std::uint64_t k = reduced_index(n);
        const Entry e = combine(n, eval(k), eval(k + 1));
        if (cap_ == 0 || memo_.size() < cap_) {
            memo_.emplace(n, e);
        }
        return e;
    }

    std::unordered_map<std::uint64_t, Entry> memo_;
    std::size_t cap_;
};

// Decoupled recursion for A alone, dispatching on the index residue:
//   A_{3k-2} = 9A_k
//   A_{9k-7} = 5A_{3k+1} - 16A_{3k} + 20A_{3k-1}
//   A_{9k-4} = -A_{3k+1} + 5A_{3k} + 5A_{3k-1}
//   A_{9k-1} = 2A_{3k+1} + 8A_{3k} - A_{3k-1}
//   A_{3k}   = A_{3k-1} + 3A_{k+1} - 3A_k
// with base values A_1..A_8.
class SimplifiedSystem {
public:
    explicit SimplifiedSystem(std::size_t memo_cap = 0) : cap_(memo_cap) {}

    int128 a(std::uint64_t n) {
        if (n == 0) {
            throw std::domain_error("simplified_recursion_A: n must be >= 1");
        }
        detail::check_index(n, "simplified_recursion_A");
        return eval(n);
    }

private:
    int128 eval(std::uint64_t n) {
        if (n <= 8) {
            return kInitialA[n];
        }
        if (const auto it = memo_.find(n); it != memo_.end()) {
            return it->second;
        }
        int128 v;
        if (n % 3 == 1) {
            v = 9 * eval((n + 2) / 3);
        } else if (n % 3 == 0) {
            const std::uint64_t k = n / 3;
            v = eval(n - 1) + 3 * eval(k + 1) - 3 * eval(k);
        } else {
            // n = 2 mod 3 splits into the three residues mod 9.
            std::uint64_t k;
            switch (n % 9) {
            case 2: // n = 9k-7
                k = (n + 7) / 9;
                v = 5 * eval(3 * k + 1) - 16 * eval(3 * k) + 20 * eval(3 * k - 1);
                break;
            case 5: // n = 9k-4
                k = (n + 4) / 9;
                v = -eval(3 * k + 1) + 5 * eval(3 * k) + 5 * eval(3 * k - 1);
                break;
            default: // n = 9k-1
                k = (n + 1) / 9;
                v = 2 * eval(3 * k + 1) + 8 * eval(3 * k) - eval(3 * k - 1);
                break;
            }
        }
        if (cap_ == 0 || memo_.size() < cap_) {
            memo_.emplace(n, v);
        }
        return v;
    }

    std::unordered_map<std::uint64_t, int128> memo_;
    std::size_t cap_;
};

inline ComplexityTriple recursion_triple(std::uint64_t n) {
    RecursionSystem sys;
    return sys.triple(n);
}

inline int128 simplified_recursion_A(std::uint64_t n) {
    SimplifiedSystem sys;
    return sys.a(n);
}

inline std::vector<ComplexityTriple> sequence_table(std::uint64_t max_n) {
    RecursionSystem sys;
    return sys.table(max_n);
}

} // namespace squiral
