#include "voidcrack/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "voidcrack/penny.hpp"
#include "voidcrack/plane.hpp"

namespace voidcrack {

namespace {

int pool_size(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("VOIDCRACK_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(hw)) hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

SweepRow compute_row(Problem problem, const CrackConfig& cfg, const PorousParams& params,
                     int n_or_m, std::vector<std::pair<double, double>>* profile) {
    SweepRow row;
    row.problem = problem == Problem::kPlane ? "plane" : "penny";
    row.c2 = params.c2;
    row.N = params.N;
    row.b = cfg.b;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const KernelContext ctx(params);
        ScfResult scf{};
        if (problem == Problem::kPlane) {
            const int n = n_or_m > 0 ? n_or_m : kDefaultPlaneN;
            const OpeningProfile sol = solve_plane(cfg, ctx, n);
            scf = scf_plane(sol, cfg, ctx);
            if (profile) {
                for (int i = 0; i < sol.mesh.n; ++i) {
                    profile->emplace_back(sol.mesh.x_nodes[i], sol.g[i]);
                }
            }
        } else {
            const int m = n_or_m > 0 ? n_or_m : kDefaultPennyM;
            const GammaProfile sol = solve_penny(cfg, ctx, m);
            scf = scf_penny(sol, cfg, ctx);
            if (profile) {
                for (int j = 0; j < sol.gamma.size(); ++j) {
                    profile->emplace_back(sol.nodes[j], sol.gamma[j]);
                }
            }
        }
        row.k = scf.k;
        row.k0 = scf.k0;
        row.ratio = scf.ratio;
        row.n_used = scf.n_used;
        row.est_error = scf.est_error;
        row.status = (scf.k != 0.0 && scf.est_error > 0.05 * std::abs(scf.k))
                         ? RowStatus::kWarn
                         : RowStatus::kOk;
    } catch (const Error& e) {
        row.status = RowStatus::kError;
        row.error_message = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "problem,c2,N,b,k,k0,ratio,n_used,est_error,status\n";
    for (const auto& r : rows) {
        out << r.problem << ',' << format_number(r.c2) << ',' << format_number(r.N) << ','
            << format_number(r.b) << ',';
        if (r.status == RowStatus::kError) {
            out << ",,,,,error\n";
            continue;
        }
        out << format_number(r.k) << ',' << format_number(r.k0) << ','
            << format_number(r.ratio) << ',' << r.n_used << ',' << format_number(r.est_error)
            << ',' << (r.status == RowStatus::kWarn ? "warn" : "ok") << '\n';
    }
}

void write_json(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << "  {\"problem\":\"" << r.problem << "\",\"c2\":" << format_number(r.c2)
            << ",\"N\":" << format_number(r.N) << ",\"b\":" << format_number(r.b);
        if (r.status == RowStatus::kError) {
            out << ",\"k\":null,\"k0\":null,\"ratio\":null,\"n_used\":null,"
                << "\"est_error\":null,\"status\":\"error\"}";
        } else {
            out << ",\"k\":" << format_number(r.k) << ",\"k0\":" << format_number(r.k0)
                << ",\"ratio\":" << format_number(r.ratio) << ",\"n_used\":" << r.n_used
                << ",\"est_error\":" << format_number(r.est_error) << ",\"status\":\""
                << (r.status == RowStatus::kWarn ? "warn" : "ok") << "\"}";
        }
        out << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

SweepRow run_single(Problem problem, const CrackConfig& cfg, const PorousParams& params,
                    int n_or_m) {
    return compute_row(problem, cfg, params, n_or_m, nullptr);
}

SweepRow run_single_with_profile(Problem problem, const CrackConfig& cfg,
                                 const PorousParams& params, int n_or_m,
                                 std::vector<std::pair<double, double>>* profile) {
    return compute_row(problem, cfg, params, n_or_m, profile);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    if (!(config.n_step > 0.0)) throw UsageError("sweep: N step must be positive");
    if (config.n_start < 0.0 || config.n_stop >= 1.0 || config.n_stop < config.n_start) {
        throw UsageError("sweep: N grid must lie within [0, 1)");
    }

    struct Job {
        double c2, b, N;
    };
    std::vector<Job> jobs;
    const int n_count =
        static_cast<int>(std::floor((config.n_stop - config.n_start) / config.n_step + 1e-9)) + 1;
    for (double c2 : config.c2_list) {
        for (double b : config.b_list) {
            for (int i = 0; i < n_count; ++i) {
                jobs.push_back({c2, b, config.n_start + i * config.n_step});
            }
        }
    }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            SweepRow row;
            try {
                const PorousParams params = PorousParams::from_c2_N(jobs[i].c2, jobs[i].N);
                const CrackConfig cfg{jobs[i].b, config.sigma0, config.mu};
                row = compute_row(config.problem, cfg, params, config.n_or_m, nullptr);
            } catch (const Error& e) {
                row.problem = config.problem == Problem::kPlane ? "plane" : "penny";
                row.c2 = jobs[i].c2;
                row.N = jobs[i].N;
                row.b = jobs[i].b;
                row.status = RowStatus::kError;
                row.error_message = e.what();
            }
            rows[i] = std::move(row);
        }
    };

    const int nthreads = pool_size(jobs.size());
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

void emit(const std::vector<SweepRow>& rows, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::kCsv) {
        write_csv(rows, out);
    } else {
        write_json(rows, out);
    }
}

void emit_to_path(const std::vector<SweepRow>& rows, OutputFormat format,
                  const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output path: " + path);
    emit(rows, format, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace voidcrack
