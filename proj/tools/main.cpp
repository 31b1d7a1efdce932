// semiprime: counting, constants, and error-table workflows.
//
// Exit codes: 0 success, 2 usage error, 3 resource refusal, 4 verification
// mismatch. Flags can be mirrored through SEMIPRIME_* environment variables
// (SEMIPRIME_PRECISION, SEMIPRIME_DIGITS, SEMIPRIME_THREADS, SEMIPRIME_MEMORY,
// SEMIPRIME_FORMAT, SEMIPRIME_OUT).

#include <sys/resource.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semiprimes/almost_prime.hpp"
#include "semiprimes/asymptotics.hpp"
#include "semiprimes/constants.hpp"
#include "semiprimes/errors.hpp"
#include "semiprimes/table_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct RunConfig {
    int precision = 40;           // working precision, decimal digits
    int digits = 20;              // reported significant digits
    int threads = 1;
    uint64_t memory = 2ull << 30; // sieve memory budget, bytes
    std::string format = "csv";
    std::string out;              // empty = stdout
    bool verify = false;

    semiprimes::SieveConfig sieve() const {
        semiprimes::SieveConfig cfg;
        cfg.memory_budget = memory;
        return cfg;
    }
};

void emit(const RunConfig& rc, const std::string& content) {
    if (rc.out.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        semiprimes::write_atomic(rc.out, content);
    }
}

long peak_rss_kib() {
    struct rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    return ru.ru_maxrss;
}

int cmd_count(const RunConfig& rc, const std::string& kind, unsigned k, uint64_t x) {
    uint64_t value = 0;
    unsigned oracle_k = 0;
    if (kind == "pi") {
        value = semiprimes::prime_pi(x, rc.sieve());
        oracle_k = 1;
    } else if (kind == "pi2") {
        value = semiprimes::semiprime_pi(x, rc.sieve());
        oracle_k = 2;
    } else {
        value = semiprimes::almost_prime_pi(k, x, rc.sieve());
        oracle_k = k;
    }
    if (rc.verify) {
        if (x > semiprimes::kOmegaOracleLimit) {
            throw semiprimes::ResourceError("--verify: x exceeds the oracle limit " +
                                            std::to_string(semiprimes::kOmegaOracleLimit));
        }
        uint64_t expect = semiprimes::omega_count_oracle(oracle_k, x);
        if (expect != value) {
            throw semiprimes::VerifyError("count mismatch: formula " + std::to_string(value) + ", oracle " +
                                          std::to_string(expect));
        }
        std::fprintf(stderr, "verified against Omega oracle\n");
    }
    emit(rc, std::to_string(value) + "\n");
    return 0;
}

int cmd_constants(const RunConfig& rc, int n_max) {
    auto t0 = std::chrono::steady_clock::now();
    semiprimes::ConstantsTable table = semiprimes::build_constants(n_max, rc.precision);
    if (rc.verify) {
        // recompute at 1.5x precision; the reported digits must be unchanged
        semiprimes::ConstantsTable hi = semiprimes::build_constants(n_max, rc.precision + rc.precision / 2);
        for (int n = 0; n <= n_max; ++n) {
            if (semiprimes::format_value(table.B[n], rc.digits) != semiprimes::format_value(hi.B[n], rc.digits) ||
                semiprimes::format_value(table.C[n], rc.digits) != semiprimes::format_value(hi.C[n], rc.digits)) {
                throw semiprimes::VerifyError("constants unstable at n=" + std::to_string(n) +
                                              "; raise --precision");
            }
        }
        std::fprintf(stderr, "verified: digits stable under precision increase\n");
    }
    std::string body = rc.format == "json" ? semiprimes::constants_json(table, rc.digits)
                                           : semiprimes::constants_csv(table, rc.digits);
    emit(rc, body);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "constants n<=%d at %d-digit precision in %.2fs\n", n_max, rc.precision, dt);
    return 0;
}

int cmd_errors(const RunConfig& rc, const std::vector<uint64_t>& xs, int n_max) {
    for (uint64_t x : xs) {
        if (x < 4) throw CLI::ValidationError("--x", "all x must be >= 4");
    }
    semiprimes::ConstantsTable table = semiprimes::build_constants((n_max + 1) / 2, rc.precision);
    auto rows = semiprimes::error_table(xs, n_max, table, rc.sieve(), rc.threads);
    std::string body =
        rc.format == "json" ? semiprimes::error_table_json(rows) : semiprimes::error_table_csv(rows);
    emit(rc, body);
    return 0;
}

int cmd_bench(const RunConfig& rc, uint64_t x) {
    auto t0 = std::chrono::steady_clock::now();
    uint64_t pi = semiprimes::prime_pi(x, rc.sieve());
    double dt_pi = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    t0 = std::chrono::steady_clock::now();
    uint64_t pi2 = semiprimes::semiprime_pi(x, rc.sieve());
    double dt_pi2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string body;
    body += "metric,value\n";
    body += "x," + std::to_string(x) + "\n";
    body += "pi," + std::to_string(pi) + "\n";
    body += "pi_seconds," + std::to_string(dt_pi) + "\n";
    body += "pi_throughput_per_s," + std::to_string(dt_pi > 0 ? static_cast<double>(x) / dt_pi : 0.0) + "\n";
    body += "pi2," + std::to_string(pi2) + "\n";
    body += "pi2_seconds," + std::to_string(dt_pi2) + "\n";
    body += "peak_rss_kib," + std::to_string(peak_rss_kib()) + "\n";
    emit(rc, body);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiprime counting toolkit"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--precision", rc.precision, "working precision, decimal digits (>= 30)")
        ->envname("SEMIPRIME_PRECISION")
        ->check(CLI::Range(30, 60));
    app.add_option("--digits", rc.digits, "reported significant digits")
        ->envname("SEMIPRIME_DIGITS")
        ->check(CLI::Range(1, 60));
    app.add_option("--threads", rc.threads, "worker cap for per-x parallel sweeps")
        ->envname("SEMIPRIME_THREADS")
        ->check(CLI::Range(1, 256));
    app.add_option("--memory", rc.memory, "sieve memory budget, bytes")->envname("SEMIPRIME_MEMORY");
    app.add_option("--format", rc.format, "output format")
        ->envname("SEMIPRIME_FORMAT")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", rc.out, "output path (atomic write); default stdout")->envname("SEMIPRIME_OUT");
    app.add_flag("--verify", rc.verify, "cross-check results against independent oracles");

    auto* count = app.add_subcommand("count", "exact pi / pi_2 / pi_k counts");
    std::string kind;
    unsigned k = 0;
    uint64_t x = 0;
    count->add_option("kind", kind, "pi | pi2 | pik")->required()->check(CLI::IsMember({"pi", "pi2", "pik"}));
    count->add_option("x", x, "count up to x inclusive")->required();
    count->add_option("--k", k, "number of prime factors with multiplicity (pik only)")->check(CLI::Range(1u, 64u));

    auto* constants = app.add_subcommand("constants", "B_n and C_n table");
    int n_max = 10;
    constants->add_option("--n-max", n_max, "largest n")->check(CLI::Range(0, 15));

    auto* errors = app.add_subcommand("errors", "relative-error table over x and n");
    std::vector<uint64_t> xs;
    int err_n_max = 8;
    errors->add_option("--x", xs, "evaluation points (>= 4)")->required();
    errors->add_option("--n-max", err_n_max, "largest approximation order")->check(CLI::Range(1, 30));

    auto* bench = app.add_subcommand("bench", "sieve throughput and peak memory");
    uint64_t bench_x = 100'000'000;
    bench->add_option("x", bench_x, "sieve target");

    // global flags may also follow the subcommand
    for (auto* sub : {count, constants, errors, bench}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            if ((kind == "pik") != (count->count("--k") > 0)) {
                std::fprintf(stderr, "error: --k is required for kind pik and invalid otherwise\n");
                return kExitUsage;
            }
            return cmd_count(rc, kind, k, x);
        }
        if (constants->parsed()) return cmd_constants(rc, n_max);
        if (errors->parsed()) return cmd_errors(rc, xs, err_n_max);
        if (bench->parsed()) return cmd_bench(rc, bench_x);
    } catch (const semiprimes::VerifyError& e) {
        std::fprintf(stderr, "verification mismatch: %s\n", e.what());
        return kExitVerify;
    } catch (const semiprimes::ResourceError& e) {
        std::fprintf(stderr, "resource refusal: %s\n", e.what());
        return kExitResource;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
