// Command-line front end: supertile rendering, pattern counting, lemma
// verification and sequence export.
//
// Exit codes: 0 success, 1 property/equality failure, 2 usage error,
// 3 resource limit (level, size or memory budget).

#include <cstdint>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "squiral/complexity.hpp"
#include "squiral/grid.hpp"
#include "squiral/render.hpp"
#include "squiral/sequences.hpp"
#include "squiral/verify.hpp"

namespace {

constexpr unsigned kHardMaxLevel = 12;

struct RunConfig {
    unsigned max_level = squiral::kDefaultMaxLevel;
    std::uint64_t memory_budget = squiral::kDefaultMemoryBudget;
    unsigned threads = 0; // 0 = auto
    int verbosity = 0;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, unsigned default_max_level) {
    cfg.max_level = default_max_level;
    cmd->add_option("--max-level", cfg.max_level, "Supertile level budget (hard cap 12)")
        ->envname("SQUIRAL_MAX_LEVEL")
        ->check(CLI::Range(0u, kHardMaxLevel))
        ->capture_default_str();
    cmd->add_option("--mem-budget", cfg.memory_budget, "Pattern-set memory budget in bytes")
        ->envname("SQUIRAL_MEM_BUDGET")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "Worker threads for enumeration (0 = auto)")
        ->capture_default_str();
    cmd->add_flag("-v,--verbose", cfg.verbosity, "Print timing details");
}

squiral::OracleOptions oracle_options(const RunConfig& cfg) {
    return {cfg.max_level, cfg.memory_budget, cfg.threads};
}

int run_supertile(unsigned n, const std::string& format, const RunConfig& cfg) {
    const squiral::BinaryGrid t = squiral::supertile(n, cfg.max_level);
    std::string out;
    if (format == "text") {
        out = squiral::to_text(t);
    } else if (format == "pbm") {
        out = squiral::to_pbm_plain(t);
    } else {
        out = squiral::to_pbm_raw(t);
    }
    std::cout.write(out.data(), static_cast<std::streamsize>(out.size()));
    return 0;
}

int run_count(std::uint64_t n, const std::string& method, std::uint64_t brute_max,
              const RunConfig& cfg) {
    using squiral::to_string;
    if (method == "brute") {
        squiral::PatternOracle oracle(oracle_options(cfg));
        const squiral::ComplexityTriple t = oracle.brute_force_triple(n);
        std::cout << "A=" << to_string(t.A) << " B=" << to_string(t.B) << " C=" << to_string(t.C)
                  << "\n";
        return 0;
    }
    if (method == "recursion") {
        const squiral::ComplexityTriple t = squiral::recursion_triple(n);
        std::cout << "A=" << to_string(t.A) << " B=" << to_string(t.B) << " C=" << to_string(t.C)
                  << "\n";
        return 0;
    }
    if (method == "closed") {
        std::cout << "A=" << to_string(squiral::closed_form_A(n)) << "\n";
        return 0;
    }

    // method == "all": every available path, and fail loudly on any
    // disagreement. Brute force joins in while n stays within --brute-max.
    const squiral::int128 a_closed = squiral::closed_form_A(n);
    const squiral::ComplexityTriple rec = squiral::recursion_triple(n);
    const squiral::int128 a_simp = squiral::simplified_recursion_A(n);
    std::cout << "closed     A=" << to_string(a_closed) << "\n";
    std::cout << "recursion  A=" << to_string(rec.A) << " B=" << to_string(rec.B)
              << " C=" << to_string(rec.C) << "\n";
    std::cout << "simplified A=" << to_string(a_simp) << "\n";

    bool agree = a_closed == rec.A && rec.A == a_simp;
    if (n <= brute_max) {
        squiral::PatternOracle oracle(oracle_options(cfg));
        const squiral::ComplexityTriple brute = oracle.brute_force_triple(n);
        std::cout << "brute      A=" << to_string(brute.A) << " B=" << to_string(brute.B)
                  << " C=" << to_string(brute.C) << "\n";
        agree = agree && brute.A == rec.A && brute.B == rec.B && brute.C == rec.C;
    } else {
        std::cout << "brute      skipped (n > " << brute_max << ", raise --brute-max to include)\n";
    }
    std::cout << (agree ? "result: agree" : "result: MISMATCH") << "\n";
    return agree ? 0 : 1;
}

int run_verify(const std::string& suite_name, const squiral::VerifyOptions& vopts,
               const RunConfig& cfg) {
    const auto suite = squiral::parse_suite(suite_name);
    if (!suite) {
        throw CLI::ValidationError("--suite", "unknown suite: " + suite_name);
    }
    squiral::PatternOracle oracle(oracle_options(cfg));
    const std::vector<squiral::CheckResult> results = squiral::run_suite(*suite, oracle, vopts);

    nlohmann::ordered_json summary;
    summary["suite"] = suite_name;
    summary["checks"] = nlohmann::ordered_json::array();
    for (const squiral::CheckResult& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
        if (cfg.verbosity > 0) {
            std::cout << " [" << static_cast<long>(r.elapsed_ms) << " ms]";
        }
        std::cout << "\n";
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["passed"] = r.passed;
        jr["detail"] = r.detail;
        jr["elapsed_ms"] = r.elapsed_ms;
        summary["checks"].push_back(jr);
    }
    const bool ok = squiral::all_passed(results);
    summary["passed"] = ok;
    std::cout << summary.dump() << "\n";
    return ok ? 0 : 1;
}

int run_sequence(std::uint64_t max_n, const std::string& format, const RunConfig& cfg) {
    const std::uint64_t bytes_needed = max_n * sizeof(squiral::ComplexityTriple);
    if (bytes_needed > cfg.memory_budget) {
        throw squiral::resource_limit_error("sequence: table of " + std::to_string(max_n) +
                                            " rows exceeds memory budget");
    }
    const std::vector<squiral::ComplexityTriple> rows = squiral::sequence_table(max_n);
    if (format == "csv") {
        std::cout << squiral::to_csv(rows);
    } else {
        std::cout << squiral::to_json(rows) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pattern-complexity toolkit for the squiral tiling"};
    app.require_subcommand(1);

    int rc = 0;

    // supertile
    auto* sup = app.add_subcommand("supertile", "Render the supertile T_n");
    RunConfig sup_cfg;
    unsigned sup_n = 0;
    std::string sup_format = "text";
    sup->add_option("--n", sup_n, "Supertile level n (T_n is 3^n x 3^n)")->required();
    sup->add_option("--format", sup_format, "Output format")
        ->check(CLI::IsMember({"text", "pbm", "pbm4"}))
        ->capture_default_str();
    add_common_options(sup, sup_cfg, squiral::kDefaultMaxLevel);
    sup->callback([&] { rc = run_supertile(sup_n, sup_format, sup_cfg); });

    // count
    auto* cnt = app.add_subcommand("count", "Compute A_n (and B_n, C_n) by the chosen method");
    RunConfig cnt_cfg;
    std::uint64_t cnt_n = 0;
    std::string cnt_method = "all";
    std::uint64_t cnt_brute_max = 12;
    cnt->add_option("--n", cnt_n, "Pattern size n")->required()->check(CLI::PositiveNumber);
    cnt->add_option("--method", cnt_method, "Computation path")
        ->check(CLI::IsMember({"brute", "recursion", "closed", "all"}))
        ->capture_default_str();
    cnt->add_option("--brute-max", cnt_brute_max,
                    "Largest n for which method=all includes brute force")
        ->capture_default_str();
    add_common_options(cnt, cnt_cfg, 8);
    cnt->callback([&] { rc = run_count(cnt_n, cnt_method, cnt_brute_max, cnt_cfg); });

    // verify
    auto* ver = app.add_subcommand("verify", "Run a property suite; exit 0 iff all checks pass");
    RunConfig ver_cfg;
    std::string ver_suite = "all";
    squiral::VerifyOptions vopts;
    ver->add_option("--suite", ver_suite, "Suite to run")
        ->check(CLI::IsMember({"lemmas", "table1", "crosscheck", "all"}))
        ->capture_default_str();
    ver->add_option("--max-size", vopts.max_size, "Largest square size in the partition sweep")
        ->check(CLI::Range(4l, 40l))
        ->capture_default_str();
    ver->add_option("--brute-max", vopts.brute_max, "Largest n for brute-force crosschecks")
        ->check(CLI::Range(std::uint64_t{11}, std::uint64_t{60}))
        ->capture_default_str();
    ver->add_option("--seq-max", vopts.seq_max, "Largest n for pure-sequence sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common_options(ver, ver_cfg, 8);
    ver->callback([&] { rc = run_verify(ver_suite, vopts, ver_cfg); });

    // sequence
    auto* seq = app.add_subcommand("sequence", "Export the (A_n, B_n, C_n) table");
    RunConfig seq_cfg;
    std::uint64_t seq_max_n = 0;
    std::string seq_format = "csv";
    seq->add_option("--max-n", seq_max_n, "Last n of the table")
        ->required()
        ->check(CLI::PositiveNumber);
    seq->add_option("--format", seq_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_common_options(seq, seq_cfg, 8);
    seq->callback([&] { rc = run_sequence(seq_max_n, seq_format, seq_cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const squiral::resource_limit_error& e) {
        std::cerr << "error (resource limit): " << e.what() << "\n";
        return 3;
    } catch (const squiral::unverified_error& e) {
        std::cerr << "error (resource limit): " << e.what()
                  << "; raise --max-level to certify\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "error (resource limit): out of memory\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "error (resource limit): " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
