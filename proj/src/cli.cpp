#include "primepart/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primepart/checkpoint.hpp"
#include "primepart/exact.hpp"
#include "primepart/format.hpp"
#include "primepart/parallel.hpp"
#include "primepart/primes.hpp"
#include "primepart/riemann.hpp"
#include "primepart/saddle.hpp"
#include "primepart/zfunc.hpp"

namespace primepart {

namespace {

namespace fs = std::filesystem;

struct CliIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliUsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary: LF line ends everywhere
    if (!out) throw CliIoError("cannot open output file: " + path.string());
    return out;
}

void finish_out(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw CliIoError("write failed: " + path.string());
}

ZConstants constants_for(const std::string& f2_mode, std::int64_t f2_kmax) {
    if (f2_mode == "paper") return ZConstants::paper();
    if (f2_kmax > 0) {
        ZConstants c = ZConstants::converged();
        c.f2 = compute_f2(f2_kmax, true);
        c.f2_sum_terms = static_cast<int>(f2_kmax);
        return c;
    }
    return ZConstants::converged();
}

// "lo:hi" or "lo:hi:count"
std::vector<double> parse_range(const std::string& spec, bool log_spaced,
                                std::size_t default_count) {
    std::vector<double> parts;
    std::string token;
    std::istringstream ss(spec);
    while (std::getline(ss, token, ':')) parts.push_back(std::stod(token));
    if (parts.size() < 2 || parts.size() > 3)
        throw CliUsageError("bad range '" + spec + "', expected lo:hi or lo:hi:count");
    const double lo = parts[0], hi = parts[1];
    const auto count = parts.size() == 3 ? static_cast<std::size_t>(parts[2]) : default_count;
    if (!(lo < hi) || count < 2)
        throw CliUsageError("bad range '" + spec + "': need lo < hi and count >= 2");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        grid[i] = log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    return grid;
}

// comma list of values and/or lo:hi:count blocks, deduplicated integers
std::vector<std::uint64_t> parse_n_grid(const std::string& spec) {
    std::set<std::uint64_t> out;
    std::string token;
    std::istringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        if (token.find(':') != std::string::npos) {
            for (double v : parse_range(token, true, 32))
                out.insert(static_cast<std::uint64_t>(std::llround(v)));
        } else {
            out.insert(static_cast<std::uint64_t>(std::stoull(token)));
        }
    }
    if (out.empty()) throw CliUsageError("empty n grid");
    return {out.begin(), out.end()};
}

void write_gnuplot(const fs::path& path, const std::string& body) {
    auto out = open_out(path);
    out << "# gnuplot script, self-contained; run:  gnuplot " << path.filename().string()
        << "\n"
        << "set datafile separator \",\"\n"
        << "set terminal pngcairo size 1000,700\n"
        << "set key left top\n"
        << body;
    finish_out(out, path);
}

// ---------------------------------------------------------------- exact ----

struct ExactOptions {
    std::uint64_t n_max = 0;
    std::string checkpoint_path;
    std::string resume_path;
    std::string export_path;
    bool full_decimal = false;
    std::uint64_t crosscheck_limit = 10000;
    std::uint64_t checkpoint_stride = 10000;
    unsigned threads = 0;
    std::string output_dir = ".";
};

void export_table_csv(const PartitionTable& table, const fs::path& path, bool full_decimal,
                      unsigned threads) {
    std::vector<std::string> ln_col(table.n_max + 1);
    parallel_for(table.n_max + 1, threads, [&](std::size_t n) {
        ln_col[n] = table.counts[n] == 0 ? "nan" : fmt17(log_big(table.counts[n]));
    });
    auto out = open_out(path);
    out << "n,digits,ln_p" << (full_decimal ? ",value" : "") << "\n";
    for (std::uint64_t n = 0; n <= table.n_max; ++n) {
        out << n << ',' << digit_count(table.counts[n]) << ',' << ln_col[n];
        if (full_decimal) out << ',' << table.counts[n].get_str();
        out << '\n';
    }
    finish_out(out, path);
}

int cmd_exact(const ExactOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    const fs::path ckpt = opt.checkpoint_path.empty()
                              ? fs::path(opt.output_dir) / "exact.ckpt"
                              : fs::path(opt.checkpoint_path);
    BuildProgress progress = [&](std::uint64_t n) {
        std::cerr << "exact: n = " << n << "  t = " << fmt17(elapsed()) << " s\n";
        return true;
    };

    PartitionTable table;
    if (!opt.resume_path.empty()) {
        table = checkpoint_load(opt.resume_path);
        std::cerr << "exact: resumed from " << opt.resume_path << " at n_max = " << table.n_max
                  << "\n";
        if (table.n_max < opt.n_max) {
            const auto sieve = build_sieve(std::max<std::uint64_t>(opt.n_max, 2));
            const auto sopf_table = build_sopf_table(sieve);
            // periodic checkpoints during the long extension
            std::uint64_t target = table.n_max;
            while (target < opt.n_max) {
                target = std::min(opt.n_max, target + opt.checkpoint_stride);
                extend_recursion(table, target, sopf_table, progress, opt.checkpoint_stride);
                checkpoint_save(table, ckpt);
                std::cerr << "exact: checkpointed at n_max = " << table.n_max << "  t = "
                          << fmt17(elapsed()) << " s\n";
            }
        }
    } else {
        const auto sieve = build_sieve(std::max<std::uint64_t>(opt.n_max, 2));
        table = build_euler_dp(opt.n_max, sieve);
        if (opt.n_max <= opt.crosscheck_limit) {
            const auto sopf_table = build_sopf_table(sieve);
            const auto reference = build_recursion(opt.n_max, sopf_table, progress,
                                                   opt.checkpoint_stride);
            for (std::uint64_t n = 0; n <= opt.n_max; ++n)
                if (table.counts[n] != reference.counts[n])
                    throw std::logic_error("dual-algorithm mismatch at n = " +
                                           std::to_string(n));
            std::cerr << "exact: dual-algorithm cross-check passed to n = " << opt.n_max
                      << "\n";
        }
        checkpoint_save(table, ckpt);
    }

    const fs::path csv = opt.export_path.empty() ? fs::path(opt.output_dir) / "exact.csv"
                                                 : fs::path(opt.export_path);
    export_table_csv(table, csv, opt.full_decimal, opt.threads);
    std::cerr << "exact: wrote " << csv.string() << " and " << ckpt.string() << " in "
              << fmt17(elapsed()) << " s\n";
    return 0;
}

// -------------------------------------------------------------- zofbeta ----

struct ZofbetaOptions {
    double beta_min = 0.005;
    double beta_max = 0.5;
    std::size_t points = 200;
    std::uint64_t sieve_limit = 10000000;
    std::string f2_mode = "converged";
    std::int64_t f2_kmax = 0;
    unsigned threads = 0;
    std::string output_dir = ".";
};

int cmd_zofbeta(const ZofbetaOptions& opt) {
    if (!(opt.beta_min > 0.0) || !(opt.beta_max < 1.0) || !(opt.beta_min < opt.beta_max))
        throw CliUsageError("zofbeta: need 0 < beta-min < beta-max < 1");
    const auto constants = constants_for(opt.f2_mode, opt.f2_kmax);
    const auto sieve = build_sieve(opt.sieve_limit);
    std::vector<double> grid(opt.points);
    for (std::size_t i = 0; i < opt.points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(opt.points - 1);
        grid[i] = opt.beta_min * std::pow(opt.beta_max / opt.beta_min, t);
    }
    struct Row {
        double exact, avg, as;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::size_t i) {
        const double beta = grid[i];
        rows[i].exact = ln_z_exact(beta, sieve).value;
        rows[i].avg = ln_z_avg(0.0, beta);
        rows[i].as = ln_z_asymptotic(beta, constants);
    });

    const fs::path csv = fs::path(opt.output_dir) / "zofbeta.csv";
    auto out = open_out(csv);
    out << "beta,ln_z_exact,ln_z_avg,ln_z_asymptotic\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << fmt17(grid[i]) << ',' << fmt17(rows[i].exact) << ',' << fmt17(rows[i].avg)
            << ',' << fmt17(rows[i].as) << '\n';
    finish_out(out, csv);

    write_gnuplot(fs::path(opt.output_dir) / "zofbeta.gp",
                  "set xlabel \"beta\"\n"
                  "set ylabel \"ln Z(beta)\"\n"
                  "set logscale x\n"
                  "set output \"zofbeta_full.png\"\n"
                  "plot \"zofbeta.csv\" every ::1 using 1:2 with lines lw 2 title \"exact\", \\\n"
                  "     \"\" every ::1 using 1:3 with lines lw 2 title \"principal value\", \\\n"
                  "     \"\" every ::1 using 1:4 with lines lw 2 title \"asymptotic\"\n"
                  "set output \"zofbeta_small_beta.png\"\n"
                  "set xrange [*:0.02]\n"
                  "replot\n");
    return 0;
}

// ----------------------------------------------------------- asymptotic ----

struct AsymptoticOptions {
    std::string n_grid = "1000:10000000:64";
    std::string f2_mode = "converged";
    std::int64_t f2_kmax = 0;
    unsigned threads = 0;
    std::string output_dir = ".";
};

int cmd_asymptotic(const AsymptoticOptions& opt) {
    const auto constants = constants_for(opt.f2_mode, opt.f2_kmax);
    const auto grid = parse_n_grid(opt.n_grid);
    for (std::uint64_t n : grid)
        if (n < 3) throw CliUsageError("asymptotic: grid entries must be >= 3");
    struct Row {
        double lo, vaughan, main, b_lo, b_nlo, b_num;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::size_t i) {
        const auto n = static_cast<double>(grid[i]);
        rows[i].lo = log_p_formula(n, Variant::lo, constants);
        rows[i].vaughan = log_p_formula(n, Variant::vaughan, constants);
        rows[i].main = log_p_formula(n, Variant::main, constants);
        rows[i].b_lo = beta0_lo(n);
        rows[i].b_nlo = beta0_nlo(n, constants);
        rows[i].b_num = solve_saddle(n, constants).beta0;
    });

    const fs::path csv = fs::path(opt.output_dir) / "asymptotic.csv";
    auto out = open_out(csv);
    out << "n,ln_p_lo,ln_p_vaughan,ln_p_main,beta0_lo,beta0_nlo,beta0_numeric\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << grid[i] << ',' << fmt17(rows[i].lo) << ',' << fmt17(rows[i].vaughan) << ','
            << fmt17(rows[i].main) << ',' << fmt17(rows[i].b_lo) << ','
            << fmt17(rows[i].b_nlo) << ',' << fmt17(rows[i].b_num) << '\n';
    finish_out(out, csv);

    write_gnuplot(fs::path(opt.output_dir) / "asymptotic.gp",
                  "set xlabel \"n\"\n"
                  "set ylabel \"ln P(n)\"\n"
                  "set logscale x\n"
                  "set output \"asymptotic.png\"\n"
                  "plot \"asymptotic.csv\" every ::1 using 1:2 with lines lw 2 title \"LO\", \\\n"
                  "     \"\" every ::1 using 1:3 with lines lw 2 title \"Vaughan\", \\\n"
                  "     \"\" every ::1 using 1:4 with lines lw 2 title \"main\"\n");
    return 0;
}

// -------------------------------------------------------------- compare ----

struct CompareOptions {
    std::string table_path;
    std::string grid = "";  // "lo:hi", defaults to 3:n_max
    std::string f2_mode = "converged";
    std::int64_t f2_kmax = 0;
    unsigned threads = 0;
    std::string output_dir = ".";
};

struct Crossing {
    bool found = false;
    std::uint64_t n = 0;
};

// First sign change located by bisection over table indices; the curves here
// cross once, and the result is verified to flip between n-1 and n.
Crossing find_crossing(const std::vector<double>& rel, std::uint64_t n_lo,
                       std::uint64_t n_hi) {
    auto sgn = [&](std::uint64_t n) { return rel[n] < 0.0 ? -1 : 1; };
    if (sgn(n_lo) == sgn(n_hi)) return {};
    std::uint64_t lo = n_lo, hi = n_hi;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (sgn(mid) == sgn(n_lo))
            lo = mid;
        else
            hi = mid;
    }
    return {sgn(hi) != sgn(hi - 1), hi};
}

int cmd_compare(const CompareOptions& opt) {
    if (opt.table_path.empty()) throw CliUsageError("compare: --table is required");
    const auto constants = constants_for(opt.f2_mode, opt.f2_kmax);
    const PartitionTable table = checkpoint_load(opt.table_path);

    std::uint64_t n_lo = 3, n_hi = table.n_max;
    if (!opt.grid.empty()) {
        const auto r = parse_range(opt.grid + (std::count(opt.grid.begin(), opt.grid.end(),
                                                          ':') == 1
                                                   ? ":2"
                                                   : ""),
                                   false, 2);
        n_lo = static_cast<std::uint64_t>(r.front());
        n_hi = static_cast<std::uint64_t>(r.back());
    }
    if (n_lo < 3) throw CliUsageError("compare: grid must start at n >= 3");
    if (n_hi > table.n_max)
        throw CliUsageError("compare: grid end " + std::to_string(n_hi) +
                            " exceeds table n_max " + std::to_string(table.n_max));

    const std::size_t count = n_hi - n_lo + 1;
    std::vector<double> ln_exact(n_hi + 1), lo_v(n_hi + 1), va_v(n_hi + 1), ma_v(n_hi + 1),
        rel_lo(n_hi + 1), rel_va(n_hi + 1), rel_ma(n_hi + 1);
    parallel_for(count, opt.threads, [&](std::size_t i) {
        const std::uint64_t n = n_lo + i;
        const auto nd = static_cast<double>(n);
        ln_exact[n] = log_count(table, n);
        lo_v[n] = log_p_formula(nd, Variant::lo, constants);
        va_v[n] = log_p_formula(nd, Variant::vaughan, constants);
        ma_v[n] = log_p_formula(nd, Variant::main, constants);
        rel_lo[n] = (lo_v[n] - ln_exact[n]) / lo_v[n];
        rel_va[n] = (va_v[n] - ln_exact[n]) / lo_v[n];
        rel_ma[n] = (ma_v[n] - ln_exact[n]) / lo_v[n];
    });

    const fs::path csv = fs::path(opt.output_dir) / "compare.csv";
    auto out = open_out(csv);
    out << "n,ln_p_exact,ln_p_lo,ln_p_vaughan,ln_p_main,rel_err_lo,rel_err_vaughan,"
           "rel_err_main\n";
    for (std::uint64_t n = n_lo; n <= n_hi; ++n)
        out << n << ',' << fmt17(ln_exact[n]) << ',' << fmt17(lo_v[n]) << ','
            << fmt17(va_v[n]) << ',' << fmt17(ma_v[n]) << ',' << fmt17(rel_lo[n]) << ','
            << fmt17(rel_va[n]) << ',' << fmt17(rel_ma[n]) << '\n';
    finish_out(out, csv);

    const fs::path report = fs::path(opt.output_dir) / "crossings.txt";
    auto rep = open_out(report);
    auto describe = [&](const char* name, const std::vector<double>& rel) {
        const Crossing c = find_crossing(rel, n_lo, n_hi);
        std::ostringstream line;
        if (c.found)
            line << name << ": first sign change of (ln P_" << name
                 << " - ln P)/ln P_lo at n = " << c.n << "  (" << fmt17(rel[c.n - 1]) << " -> "
                 << fmt17(rel[c.n]) << ")";
        else
            line << name << ": no sign change on grid [" << n_lo << ", " << n_hi << "]"
                 << (rel[n_hi] > 0.0 ? " (stays positive)" : " (stays negative)");
        rep << line.str() << '\n';
        std::cout << line.str() << '\n';
    };
    describe("lo", rel_lo);
    describe("vaughan", rel_va);
    describe("main", rel_ma);
    finish_out(rep, report);

    write_gnuplot(fs::path(opt.output_dir) / "compare.gp",
                  "set xlabel \"1/n\"\n"
                  "set ylabel \"(ln P_app - ln P)/ln P_lo\"\n"
                  "set output \"compare_rel.png\"\n"
                  "plot \"compare.csv\" every ::1 using (1.0/$1):6 with lines lw 2 "
                  "title \"LO\", \\\n"
                  "     \"\" every ::1 using (1.0/$1):7 with lines lw 2 title \"Vaughan\", \\\n"
                  "     \"\" every ::1 using (1.0/$1):8 with lines lw 2 title \"main\", \\\n"
                  "     0 with lines lc \"black\" dt 2 notitle\n"
                  "set output \"compare_rel_zoom.png\"\n"
                  "set xrange [*:0.0002]\n"
                  "replot\n");
    return 0;
}

// -------------------------------------------------------- prime-density ----

struct DensityOptions {
    std::string zeros_file;
    double gamma = 0.1;
    int m_max = 14;
    int zeros_used = 3000;
    std::string x_range = "2:50";
    double dx = 0.01;
    unsigned threads = 0;
    std::string output_dir = ".";
};

int cmd_prime_density(const DensityOptions& opt) {
    if (opt.zeros_file.empty()) throw CliUsageError("prime-density: --zeros-file is required");
    if (!(opt.gamma > 0.0)) throw CliUsageError("prime-density: gamma must be positive");
    const ZerosTable zeros = load_zeros(opt.zeros_file);
    SmoothingConfig cfg;
    cfg.gamma = opt.gamma;
    cfg.m_max = opt.m_max;
    cfg.zeros_used = opt.zeros_used;
    if (static_cast<std::size_t>(cfg.zeros_used) > zeros.count())
        throw CliUsageError("prime-density: requested " + std::to_string(cfg.zeros_used) +
                            " zeros but file has " + std::to_string(zeros.count()));

    const auto range = parse_range(opt.x_range + ":2", false, 2);
    const double x_lo = range.front(), x_hi = range.back();
    if (!(x_lo > 1.0)) throw CliUsageError("prime-density: x range must start above 1");
    const auto sieve =
        build_sieve(static_cast<std::uint64_t>(x_hi + 8.0 * opt.gamma) + 2);

    const auto steps = static_cast<std::size_t>(std::floor((x_hi - x_lo) / opt.dx + 0.5)) + 1;
    struct Row {
        double x, gsc, comb;
    };
    std::vector<Row> rows(steps);
    parallel_for(steps, opt.threads, [&](std::size_t i) {
        const double x = x_lo + static_cast<double>(i) * opt.dx;
        rows[i] = {x, g_semiclassical(x, zeros, cfg, true), gaussian_comb(x, sieve, opt.gamma)};
    });

    const fs::path csv = fs::path(opt.output_dir) / "prime_density.csv";
    auto out = open_out(csv);
    out << "x,g_semiclassical_smoothed,gaussian_comb\n";
    for (const auto& r : rows)
        out << fmt17(r.x) << ',' << fmt17(r.gsc) << ',' << fmt17(r.comb) << '\n';
    finish_out(out, csv);

    write_gnuplot(fs::path(opt.output_dir) / "prime_density.gp",
                  "set xlabel \"x\"\n"
                  "set ylabel \"g(x)\"\n"
                  "set output \"prime_density.png\"\n"
                  "plot \"prime_density.csv\" every ::1 using 1:2 with lines lw 2 "
                  "title \"trace formula (smoothed)\", \\\n"
                  "     \"\" every ::1 using 1:3 with lines lw 1 title \"Gaussian comb\"\n");
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"prime-partition asymptotics toolkit"};
    app.require_subcommand(1);
    app.set_config("--config")->description("key=value file mirroring the flags");

    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker threads for grid evaluations");

    ExactOptions ex;
    auto* exact = app.add_subcommand("exact", "build the exact prime-partition table");
    exact->add_option("--n-max", ex.n_max, "table size")->required();
    exact->add_option("--checkpoint", ex.checkpoint_path, "checkpoint file to write");
    exact->add_option("--resume", ex.resume_path, "checkpoint file to resume from");
    exact->add_option("--export", ex.export_path, "CSV export path");
    exact->add_flag("--full-decimal", ex.full_decimal, "include full decimal values");
    exact->add_option("--crosscheck-limit", ex.crosscheck_limit,
                      "verify with the recursion up to this n_max");
    exact->add_option("--checkpoint-stride", ex.checkpoint_stride,
                      "entries between progress checkpoints");
    exact->add_option("--output-dir", ex.output_dir, "directory for default outputs");

    ZofbetaOptions zo;
    auto* zofbeta = app.add_subcommand("zofbeta", "partition-function evaluators over beta");
    zofbeta->add_option("--beta-min", zo.beta_min, "grid start");
    zofbeta->add_option("--beta-max", zo.beta_max, "grid end");
    zofbeta->add_option("--points", zo.points, "log-spaced point count");
    zofbeta->add_option("--sieve-limit", zo.sieve_limit, "prime sieve limit");
    zofbeta->add_option("--f2-mode", zo.f2_mode, "paper|converged")
        ->check(CLI::IsMember({"paper", "converged"}));
    zofbeta->add_option("--f2-kmax", zo.f2_kmax, "override f2 summation cutoff");
    zofbeta->add_option("--output-dir", zo.output_dir, "output directory");

    AsymptoticOptions as;
    auto* asym = app.add_subcommand("asymptotic", "closed-form ln P and saddle solutions");
    asym->add_option("--n-grid", as.n_grid, "comma list and/or lo:hi:count (log spaced)");
    asym->add_option("--f2-mode", as.f2_mode, "paper|converged")
        ->check(CLI::IsMember({"paper", "converged"}));
    asym->add_option("--f2-kmax", as.f2_kmax, "override f2 summation cutoff");
    asym->add_option("--output-dir", as.output_dir, "output directory");

    CompareOptions co;
    auto* compare = app.add_subcommand("compare", "asymptotics against the exact table");
    compare->add_option("--table", co.table_path, "partition-table checkpoint")->required();
    compare->add_option("--grid", co.grid, "n range lo:hi (default 3:n_max)");
    compare->add_option("--f2-mode", co.f2_mode, "paper|converged")
        ->check(CLI::IsMember({"paper", "converged"}));
    compare->add_option("--f2-kmax", co.f2_kmax, "override f2 summation cutoff");
    compare->add_option("--output-dir", co.output_dir, "output directory");

    DensityOptions de;
    auto* density = app.add_subcommand("prime-density", "trace-formula prime density");
    density->add_option("--zeros-file", de.zeros_file, "Riemann zero ordinates, one per line")
        ->required();
    density->add_option("--gamma", de.gamma, "Gaussian width");
    density->add_option("--m-max", de.m_max, "trace-formula m cutoff");
    density->add_option("--zeros-used", de.zeros_used, "zeros to sum");
    density->add_option("--x-range", de.x_range, "x range lo:hi");
    density->add_option("--dx", de.dx, "grid step");
    density->add_option("--output-dir", de.output_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        ex.threads = zo.threads = as.threads = co.threads = de.threads = threads;
        if (exact->parsed()) return cmd_exact(ex);
        if (zofbeta->parsed()) return cmd_zofbeta(zo);
        if (asym->parsed()) return cmd_asymptotic(as);
        if (compare->parsed()) return cmd_compare(co);
        if (density->parsed()) return cmd_prime_density(de);
        return 1;
    } catch (const CliUsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CheckpointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ZerosFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CliIoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace primepart
