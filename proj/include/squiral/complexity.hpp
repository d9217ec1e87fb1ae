#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "squiral/grid.hpp"
#include "squiral/pattern.hpp"
#include "squiral/sequences.hpp"

namespace squiral {

struct OracleOptions {
    unsigned max_level = 8; // supertile ladder budget (T_8 = 6561 x 6561)
    std::uint64_t memory_budget = kDefaultMemoryBudget;
    unsigned threads = 1; // 0 = hardware concurrency
};

// A pattern set together with its plateau certificate: certified means the
// set was identical on two consecutive supertiles (with the pattern fitting
// inside the smaller one), so it already equals the set of the infinite
// tiling.
struct SaturationResult {
    PatternSet patterns;
    unsigned level = 0;
    bool certified = false;
};

// Brute-force counting oracle. Caches supertiles and certified pattern sets;
// one instance is meant for single-threaded use (its enumeration calls may
// use worker threads internally).
class PatternOracle {
public:
    explicit PatternOracle(OracleOptions opts = {}) : opts_(opts) {}

    const OracleOptions& options() const noexcept { return opts_; }

    EnumerateOptions enum_options() const noexcept {
        return {opts_.memory_budget, opts_.threads};
    }

    const BinaryGrid& tile(unsigned level) {
        if (level > opts_.max_level) {
            throw resource_limit_error("tile: level " + std::to_string(level) +
                                       " exceeds budget " + std::to_string(opts_.max_level));
        }
        if (tiles_.empty()) {
            tiles_.push_back(BinaryGrid(1, 1)); // T_0
        }
        const SubstitutionRule rule = squiral_rule();
        while (tiles_.size() <= level) {
            long side = 3;
            for (std::size_t i = 1; i < tiles_.size(); ++i) {
                side *= 3;
            }
            tiles_.push_back(inflate(tiles_.back(), rule, side));
        }
        return tiles_[level];
    }

    // The set of all h x w patterns of the infinite tiling, found by walking
    // supertile levels until two consecutive ones carry identical sets. The
    // walk starts at the smallest level whose supertile can contain the
    // pattern. When the level budget runs out first, the last set is
    // returned uncertified.
    const SaturationResult& saturated_pattern_set(long h, long w) {
        if (h < 1 || w < 1) {
            throw std::invalid_argument("saturated_pattern_set: dimensions must be positive");
        }
        const auto key = std::make_pair(h, w);
        if (const auto it = saturated_.find(key); it != saturated_.end()) {
            return it->second;
        }

        unsigned level = 0;
        long side = 1;
        const long m = h > w ? h : w;
        while (side < m) {
            side *= 3;
            ++level;
        }
        if (level > opts_.max_level) {
            throw resource_limit_error("saturated_pattern_set: pattern does not fit in any "
                                       "supertile within the level budget");
        }

        const EnumerateOptions eo{opts_.memory_budget, opts_.threads};
        PatternSet cur = enumerate_windows(tile(level), h, w, eo);
        bool certified = false;
        while (level < opts_.max_level) {
            PatternSet next = enumerate_windows(tile(level + 1), h, w, eo);
            if (set_equals(cur, next)) {
                certified = true;
                break;
            }
            cur = std::move(next);
            ++level;
        }
        auto [it, inserted] =
            saturated_.emplace(key, SaturationResult{std::move(cur), level, certified});
        return it->second;
    }

    // A_n, B_n, C_n by exhaustive enumeration, each certified by a plateau.
    ComplexityTriple brute_force_triple(std::uint64_t n) {
        if (n == 0) {
            throw std::domain_error("brute_force_triple: n must be >= 1");
        }
        const long ln = static_cast<long>(n);
        return {n, certified_count(ln, ln), certified_count(ln, ln + 1),
                certified_count(ln + 1, ln)};
    }

    // The literal phase-class construction: inflate every saturated h x w
    // pattern and cut the h x w window with top-left corner (i, j).
    PatternSet phase_class_via_mu(long h, long w, int i, int j) {
        check_phase(i, j);
        const SaturationResult& sat = require_certified(h, w);
        const SubstitutionRule rule = squiral_rule();
        const long side = 3 * (h > w ? h : w);
        PatternSet out(h, w);
        out.reserve(sat.patterns.cardinality());
        for (const PatternKey& k : sat.patterns.members()) {
            const BinaryGrid image = inflate(to_grid(k), rule, side);
            out.insert(window(image, i, j, h, w));
        }
        return out;
    }

    // The same class read off a supertile instead: all h x w windows whose
    // top-left corner is at (i, j) mod 3, one level above the certifying one
    // so that every saturated pattern's image occurs block-aligned.
    PatternSet phase_class_via_windows(long h, long w, int i, int j) {
        check_phase(i, j);
        const SaturationResult& sat = require_certified(h, w);
        const EnumerateOptions eo{opts_.memory_budget, opts_.threads};
        return enumerate_phase_windows(tile(sat.level + 1), h, w, i, j, eo);
    }

    // True when the nine phase classes are non-empty, pairwise disjoint and
    // union to the full saturated set. Guaranteed for h, w >= 4; smaller
    // sizes are answered as observed.
    bool verify_partition(long h, long w) {
        const SaturationResult& sat = require_certified(h, w);
        PatternSet merged(h, w);
        merged.reserve(sat.patterns.cardinality());
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const PatternSet cls = phase_class_via_mu(h, w, i, j);
                if (cls.cardinality() == 0) {
                    return false;
                }
                for (const PatternKey& k : cls.members()) {
                    if (!merged.insert(k)) {
                        return false; // two classes overlap
                    }
                }
            }
        }
        return set_equals(merged, sat.patterns);
    }

    // Cardinality invariance under extension: |P_{3,3}((5+3s) x (5+3t))|
    // equals |P_{i,j}((m+3s) x (n+3t))| for every m in {8-i, 9-i, 10-i} and
    // n in {8-j, 9-j, 10-j}.
    bool verify_extension(long s, long t, int i, int j) {
        check_phase(i, j);
        if (s < 0 || t < 0) {
            throw std::invalid_argument("verify_extension: s and t must be non-negative");
        }
        const std::size_t base = phase_class_via_mu(5 + 3 * s, 5 + 3 * t, 3, 3).cardinality();
        for (long m = 8 - i; m <= 10 - i; ++m) {
            for (long n = 8 - j; n <= 10 - j; ++n) {
                if (phase_class_via_mu(m + 3 * s, n + 3 * t, i, j).cardinality() != base) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    static void check_phase(int i, int j) {
        if (i < 1 || i > 3 || j < 1 || j > 3) {
            throw std::invalid_argument("phase indices must lie in 1..3");
        }
    }

    const SaturationResult& require_certified(long h, long w) {
        const SaturationResult& sat = saturated_pattern_set(h, w);
        if (!sat.certified) {
            throw unverified_error("no saturation plateau for " + std::to_string(h) + "x" +
                                   std::to_string(w) + " patterns within level budget " +
                                   std::to_string(opts_.max_level));
        }
        return sat;
    }

    int128 certified_count(long h, long w) {
        return static_cast<int128>(require_certified(h, w).patterns.cardinality());
    }

    OracleOptions opts_;
    std::vector<BinaryGrid> tiles_;
    std::map<std::pair<long, long>, SaturationResult> saturated_;
};

} // namespace squiral
