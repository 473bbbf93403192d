// Benchmark the serial reference kernels against the OpenMP variants and
// confirm the two produce bitwise-identical results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "pdthresh/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<double> random_spd(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> f(static_cast<size_t>(n) * n);
    for (double& v : f) v = dist(rng);
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                s += f[static_cast<size_t>(k) * n + i] * f[static_cast<size_t>(k) * n + j];
            }
            a[static_cast<size_t>(i) * n + j] = s;
            a[static_cast<size_t>(j) * n + i] = s;
        }
    }
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] += n;
    return a;
}

bool bitwise_equal(const std::vector<double>& x, const std::vector<double>& y) {
    return x.size() == y.size() &&
           std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) == 0;
}

struct Stats {
    double serial_ms = 0.0;
    double parallel_ms = 0.0;
    bool match = true;
};

void report(const char* name, const Stats& s) {
    std::printf("%-16s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   bitwise match: %s\n",
                name, s.serial_ms, s.parallel_ms,
                s.parallel_ms > 0.0 ? s.serial_ms / s.parallel_ms : 0.0,
                s.match ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    int n = 384;
    int reps = 3;
    unsigned long long seed = 1;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&](const char* flag) -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", flag);
                std::exit(64);
            }
            return argv[++i];
        };
        if (arg == "--n") {
            n = std::atoi(next("--n"));
        } else if (arg == "--reps") {
            reps = std::atoi(next("--reps"));
        } else if (arg == "--seed") {
            seed = std::strtoull(next("--seed"), nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: bench_kernels [--n N] [--reps R] [--seed S]\n");
            return arg == "--help" || arg == "-h" ? 0 : 64;
        }
    }
    if (n < 8) n = 8;
    if (reps < 1) reps = 1;

    std::printf("n=%d reps=%d seed=%llu openmp_compiled=%s\n", n, reps, seed,
                pdthresh::kernels::openmp_compiled() ? "yes" : "no");

    std::mt19937_64 rng(seed);
    const std::vector<double> base = random_spd(n, rng);

    {
        Stats s;
        std::vector<double> ws, wp;
        for (int r = 0; r < reps; ++r) {
            ws = base;
            auto t0 = Clock::now();
            pdthresh::kernels::ldlt_pivots_serial(ws.data(), n, 0.0);
            s.serial_ms += ms_since(t0);
            wp = base;
            t0 = Clock::now();
            pdthresh::kernels::ldlt_pivots_parallel(wp.data(), n, 0.0);
            s.parallel_ms += ms_since(t0);
            s.match = s.match && bitwise_equal(ws, wp);
        }
        report("ldlt", s);
    }
    {
        Stats s;
        std::vector<double> ws, wp;
        std::vector<int> ps(static_cast<size_t>(n)), pp(static_cast<size_t>(n));
        for (int r = 0; r < reps; ++r) {
            ws = base;
            auto t0 = Clock::now();
            pdthresh::kernels::lu_factor_serial(ws.data(), n, ps.data(), 0.0);
            s.serial_ms += ms_since(t0);
            wp = base;
            t0 = Clock::now();
            pdthresh::kernels::lu_factor_parallel(wp.data(), n, pp.data(), 0.0);
            s.parallel_ms += ms_since(t0);
            s.match = s.match && bitwise_equal(ws, wp) && ps == pp;
        }
        report("lu", s);
    }
    {
        Stats s;
        std::vector<double> lu = base;
        std::vector<int> perm(static_cast<size_t>(n));
        pdthresh::kernels::lu_factor_serial(lu.data(), n, perm.data(), 0.0);
        const int nrhs = 64;
        std::vector<double> rhs(static_cast<size_t>(n) * nrhs);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& v : rhs) v = dist(rng);
        std::vector<double> xs, xp;
        for (int r = 0; r < reps; ++r) {
            xs = rhs;
            auto t0 = Clock::now();
            pdthresh::kernels::lu_solve_serial(lu.data(), perm.data(), n, xs.data(), nrhs);
            s.serial_ms += ms_since(t0);
            xp = rhs;
            t0 = Clock::now();
            pdthresh::kernels::lu_solve_parallel(lu.data(), perm.data(), n, xp.data(), nrhs);
            s.parallel_ms += ms_since(t0);
            s.match = s.match && bitwise_equal(xs, xp);
        }
        report("lu_solve", s);
    }
    {
        Stats s;
        const int r_dim = n, k_dim = n / 2;
        std::vector<double> w(static_cast<size_t>(k_dim) * r_dim), x(static_cast<size_t>(k_dim) * r_dim);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& v : w) v = dist(rng);
        for (double& v : x) v = dist(rng);
        std::vector<double> ss, sp;
        for (int r = 0; r < reps; ++r) {
            ss.assign(static_cast<size_t>(r_dim) * r_dim, 1.0);
            auto t0 = Clock::now();
            pdthresh::kernels::subtract_wtx_serial(w.data(), x.data(), ss.data(), r_dim, k_dim);
            s.serial_ms += ms_since(t0);
            sp.assign(static_cast<size_t>(r_dim) * r_dim, 1.0);
            t0 = Clock::now();
            pdthresh::kernels::subtract_wtx_parallel(w.data(), x.data(), sp.data(), r_dim, k_dim);
            s.parallel_ms += ms_since(t0);
            s.match = s.match && bitwise_equal(ss, sp);
        }
        report("subtract_wtx", s);
    }
    {
        Stats s;
        std::vector<double> ws, wp, ds(static_cast<size_t>(n)), es, dp(static_cast<size_t>(n)), ep;
        es.resize(static_cast<size_t>(n) ? static_cast<size_t>(n) - 1 : 0);
        ep.resize(es.size());
        for (int r = 0; r < reps; ++r) {
            ws = base;
            auto t0 = Clock::now();
            pdthresh::kernels::tridiagonalize_serial(ws.data(), n, ds.data(), es.data());
            s.serial_ms += ms_since(t0);
            wp = base;
            t0 = Clock::now();
            pdthresh::kernels::tridiagonalize_parallel(wp.data(), n, dp.data(), ep.data());
            s.parallel_ms += ms_since(t0);
            s.match = s.match && bitwise_equal(ds, dp) && bitwise_equal(es, ep);
        }
        report("tridiagonalize", s);
    }
    return 0;
}
