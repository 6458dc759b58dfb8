// Times the OpenMP sweep kernels against their serial reference twins and
// checks that both produce identical serialized output. Run with "quick"
// for the small sizes used in CI.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpolya/bounds.hpp"
#include "lpolya/fsequence.hpp"
#include "lpolya/hessian.hpp"
#include "lpolya/jtable.hpp"
#include "lpolya/sigma.hpp"

using namespace lpolya;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct Row {
    std::string name;
    double serial_ms = 0, parallel_ms = 0;
    bool match = false;
};

template <class Fn>
Row compare(const std::string& name, Fn fn) {
    Row row;
    row.name = name;
    auto t0 = std::chrono::steady_clock::now();
    std::string serial = fn(Exec::serial);
    row.serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    std::string parallel = fn(Exec::parallel);
    row.parallel_ms = ms_since(t0);
    row.match = serial == parallel;
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "quick";
    const long fill_n = quick ? 200 : 600;
    const long sweep_n = quick ? 60 : 200;
    const long pn_n = quick ? 30 : 100;
    const long f_p = quick ? 30 : 100;
    const int sigma_dirs = quick ? 4 : 8;
    const double sigma_tol = quick ? 1e-6 : 1e-7;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif

    std::vector<Row> rows;

    rows.push_back(compare("jtable fill n=" + std::to_string(fill_n), [&](Exec e) {
        JTable t;
        t.ensure(static_cast<int>(fill_n), e);
        std::string probe;
        for (long r = 0; r < fill_n; r += fill_n / 7)
            probe += rat_str(t.at(static_cast<int>(fill_n), r)) + ";";
        return probe;
    }));

    rows.push_back(compare("two-step sweep n<=" + std::to_string(sweep_n), [&](Exec e) {
        JTable t;
        return to_csv(two_step_report(verify_two_step(t, sweep_n, e)));
    }));

    rows.push_back(compare("central sweep n<=" + std::to_string(sweep_n), [&](Exec e) {
        JTable t;
        return to_csv(verify_central(t, sweep_n, e));
    }));

    rows.push_back(compare("pn identities n<=" + std::to_string(pn_n),
                           [&](Exec e) { return to_csv(pn_identities(pn_n, e)); }));

    rows.push_back(compare("f-sequence sweeps p<=" + std::to_string(f_p), [&](Exec e) {
        JTable t;
        VerificationReport rep = verify_f_ratios(t, f_p, e);
        rep.merge(verify_f_convexity(t, f_p, e));
        return to_csv(rep);
    }));

    rows.push_back(compare("hessian sweep", [&](Exec e) {
        JTable t;
        return to_csv(verify_hessian(t, e));
    }));

    rows.push_back(compare("sigma quadrature batch", [&](Exec e) {
        // Same directions either way; the parallel path fans out over them.
        std::vector<DirectionF> dirs;
        for (int i = 0; i < sigma_dirs; ++i)
            dirs.push_back({1.0, 0.5 + 0.125 * i, 1.25, 0.75});
        std::vector<double> results(dirs.size(), 0.0);
        if (e == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(dirs.size()); ++i)
                results[static_cast<std::size_t>(i)] =
                    sigma_quadrature(dirs[static_cast<std::size_t>(i)], sigma_tol);
        } else {
            for (std::size_t i = 0; i < dirs.size(); ++i)
                results[i] = sigma_quadrature(dirs[i], sigma_tol);
        }
        std::string out;
        char buf[40];
        for (double v : results) {
            std::snprintf(buf, sizeof(buf), "%.17g;", v);
            out += buf;
        }
        return out;
    }));

    std::printf("%-32s %12s %12s %9s %7s\n", "kernel", "serial ms", "parallel ms",
                "speedup", "match");
    bool all_match = true;
    for (const Row& r : rows) {
        all_match = all_match && r.match;
        std::printf("%-32s %12.1f %12.1f %8.2fx %7s\n", r.name.c_str(), r.serial_ms,
                    r.parallel_ms, r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1),
                    r.match ? "yes" : "NO");
    }
    if (!all_match) {
        std::printf("serial and parallel outputs disagree\n");
        return 1;
    }
    return 0;
}
