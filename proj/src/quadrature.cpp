#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpolya/sigma.hpp"

namespace lpolya {

namespace {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// Gauss 7 / Kronrod 15 on [-1, 1]. Gauss points are the odd-index Kronrod
// nodes plus the center.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
};

template <class F>
PanelResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWeightsK[7];
    double resg = fc * kWeightsG[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kNodes[i];
        const double y = f(c - dx) + f(c + dx);
        resk += y * kWeightsK[i];
        if (i % 2 == 1) resg += y * kWeightsG[i / 2];
    }
    const double diff = std::abs(resk - resg) * h;
    double err = diff;
    if (diff > 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return {resk * h, err};
}

struct Budget {
    long evals = 0;
    double err_acc = 0.0;
};

template <class F>
double integrate_panel(const F& f, double a, double b, double alloc, int depth,
                       Budget& budget) {
    const PanelResult pr = gk15(f, a, b);
    budget.evals += 15;
    if (pr.error <= alloc || pr.error <= 1e-16 * (1.0 + std::abs(pr.value)) ||
        depth <= 0) {
        budget.err_acc += pr.error;
        return pr.value;
    }
    const double mid = 0.5 * (a + b);
    return integrate_panel(f, a, mid, 0.5 * alloc, depth - 1, budget) +
           integrate_panel(f, mid, b, 0.5 * alloc, depth - 1, budget);
}

struct Integrand {
    std::vector<double> scales;           // sinc-factor scales, all nonzero
    std::function<double(double)> extra;  // optional extra factor g(t)
    // |g(t)| <= c0 + c1 t + c2 t^2 for t >= t0; drives the truncation point.
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double t0 = 1.0;
    double prefactor = 1.0;
    double osc_scale = 0.0;  // fastest oscillation in the full integrand
};

// prefactor * (1/pi) * Integral over R of (even integrand) = prefactor *
// (2/pi) * Integral over [0, inf). [0, T] is covered by Kronrod panels cut
// at the zeros of the fastest sinc factor; the tail beyond T is bounded by
// the product bound sinc(st) <= 1/(st).
double integrate_even(const Integrand& in, double tol, const char* what) {
    if (!(tol > 0.0)) throw std::invalid_argument(std::string(what) + ": tol > 0 required");
    const std::size_t p = in.scales.size();
    auto need = [&](double c, std::size_t min_factors) {
        if (c != 0.0 && p < min_factors)
            throw std::invalid_argument(std::string(what) +
                                        ": integrand lacks decay for the tail bound");
    };
    need(in.c0, 2);
    need(in.c1, 3);
    need(in.c2, 4);

    double inv_prod = 1.0;
    double min_scale = std::numeric_limits<double>::infinity();
    for (double s : in.scales) {
        inv_prod /= s;
        min_scale = std::min(min_scale, s);
    }

    const double two_over_pi = 2.0 / std::numbers::pi;
    const double scale_out = std::abs(in.prefactor) * two_over_pi;
    // Raw budget for the [0, inf) integral before the outer factors.
    const double raw_budget = tol / std::max(scale_out, 1e-300);

    const double dp = static_cast<double>(p);
    auto tail_bound = [&](double T) {
        double t = 0.0;
        if (in.c0 != 0.0) t += in.c0 * std::pow(T, 1.0 - dp) / (dp - 1.0);
        if (in.c1 != 0.0) t += in.c1 * std::pow(T, 2.0 - dp) / (dp - 2.0);
        if (in.c2 != 0.0) t += in.c2 * std::pow(T, 3.0 - dp) / (dp - 3.0);
        return inv_prod * t;
    };

    double T = std::max({1.0, in.t0, 1.0 / min_scale});
    int doublings = 0;
    while (tail_bound(T) > 0.5 * raw_budget) {
        T *= 2.0;
        if (++doublings > 400)
            throw QuadratureError(std::string(what) + ": tail bound cannot reach tolerance");
    }

    const double width = std::numbers::pi / in.osc_scale;
    const double panel_count_d = std::ceil(T / width);
    if (panel_count_d > 8e7)
        throw QuadratureError(std::string(what) + ": panel budget exceeded");
    const long panels = static_cast<long>(panel_count_d);
    const double alloc = 0.5 * raw_budget / static_cast<double>(panels);

    auto f = [&](double t) {
        double v = 1.0;
        for (double s : in.scales) v *= sinc(s * t);
        if (in.extra) v *= in.extra(t);
        return v;
    };

    double sum = 0.0;
    Budget budget;
    for (long i = 0; i < panels; ++i) {
        const double a = static_cast<double>(i) * width;
        const double b = std::min(T, static_cast<double>(i + 1) * width);
        sum += integrate_panel(f, a, b, alloc, 26, budget);
        if (budget.evals > 600'000'000L)
            throw QuadratureError(std::string(what) + ": evaluation budget exceeded");
    }
    if (budget.err_acc > raw_budget)
        throw QuadratureError(std::string(what) + ": did not converge to tolerance");
    return in.prefactor * two_over_pi * sum;
}

std::vector<double> nonzero_abs(const DirectionF& v) {
    std::vector<double> scales;
    scales.reserve(v.size());
    for (double x : v)
        if (x != 0.0) scales.push_back(std::abs(x));
    return scales;
}

std::vector<double> nonzero_abs_except(const DirectionF& v, int skip1, int skip2 = -1) {
    std::vector<double> scales;
    scales.reserve(v.size());
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (i != skip1 && i != skip2 && v[static_cast<std::size_t>(i)] != 0.0)
            scales.push_back(std::abs(v[static_cast<std::size_t>(i)]));
    return scales;
}

double max_abs_nonzero(const DirectionF& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double min_abs_nonzero(const DirectionF& v) {
    double m = std::numeric_limits<double>::infinity();
    for (double x : v)
        if (x != 0.0) m = std::min(m, std::abs(x));
    return m;
}

int count_nonzero(const DirectionF& v) {
    int c = 0;
    for (double x : v)
        if (x != 0.0) ++c;
    return c;
}

void check_index(const DirectionF& v, int j, const char* what) {
    if (j < 0 || j >= static_cast<int>(v.size()))
        throw std::invalid_argument(std::string(what) + ": coordinate index out of range");
}

}  // namespace

double sigma_quadrature(const DirectionF& v, double tol) {
    Integrand in;
    in.scales = nonzero_abs(v);
    if (in.scales.size() < 2)
        throw std::invalid_argument("sigma_quadrature: >= 2 nonzero coordinates required");
    in.c0 = 1.0;
    in.osc_scale = max_abs_nonzero(v);
    in.t0 = 1.0 / min_abs_nonzero(v);
    return integrate_even(in, tol, "sigma_quadrature");
}

double grad_sigma_quadrature(const DirectionF& v, int j, double tol) {
    check_index(v, j, "grad_sigma_quadrature");
    const double vj = v[static_cast<std::size_t>(j)];
    if (vj == 0.0)
        throw std::invalid_argument("grad_sigma_quadrature: v[j] != 0 required");
    if (count_nonzero(v) < 3)
        throw std::invalid_argument(
            "grad_sigma_quadrature: >= 3 nonzero coordinates required");
    Integrand in;
    in.scales = nonzero_abs_except(v, j);
    in.extra = [vj](double t) { return (std::cos(vj * t) - sinc(vj * t)) / vj; };
    in.c0 = 2.0 / std::abs(vj);
    in.osc_scale = max_abs_nonzero(v);
    in.t0 = 1.0 / min_abs_nonzero(v);
    return integrate_even(in, tol, "grad_sigma_quadrature");
}

std::vector<double> critical_residual(const DirectionF& u, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("critical_residual: tol > 0 required");
    double norm2 = 0.0;
    for (double x : u) norm2 += x * x;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
        throw std::invalid_argument("critical_residual: |u| = 1 within 1e-12 required");
    if (count_nonzero(u) < 3)
        throw std::invalid_argument("critical_residual: >= 3 nonzero coordinates required");

    const double sigma = sigma_quadrature(u, 0.25 * tol);
    std::vector<double> residuals(u.size(), 0.0);
    for (int j = 0; j < static_cast<int>(u.size()); ++j) {
        const double uj = u[static_cast<std::size_t>(j)];
        Integrand in;
        in.scales = nonzero_abs_except(u, j);
        if (uj != 0.0) in.extra = [uj](double t) { return std::cos(uj * t); };
        in.c0 = 1.0;
        in.prefactor = 1.0 / (1.0 - uj * uj);
        in.osc_scale = max_abs_nonzero(u);
        in.t0 = 1.0 / min_abs_nonzero(u);
        const double rhs = integrate_even(in, 0.25 * tol, "critical_residual");
        residuals[static_cast<std::size_t>(j)] = rhs - sigma;
    }
    return residuals;
}

double hessian_entries_numeric(const DirectionF& v, int j1, int j2, double tol) {
    check_index(v, j1, "hessian_entries_numeric");
    check_index(v, j2, "hessian_entries_numeric");
    if (count_nonzero(v) < 4)
        throw std::invalid_argument(
            "hessian_entries_numeric: >= 4 nonzero coordinates required");

    if (j1 == j2) {
        const double vj = v[static_cast<std::size_t>(j1)];
        Integrand in;
        in.osc_scale = max_abs_nonzero(v);
        in.t0 = 1.0 / min_abs_nonzero(v);
        if (vj != 0.0) {
            in.scales = nonzero_abs_except(v, j1);
            in.extra = [vj](double t) {
                const double s = sinc(vj * t);
                return (2.0 / (vj * vj)) * (s - std::cos(vj * t)) - t * t * s + s;
            };
            in.c0 = 4.0 / (vj * vj) + 1.0;
            in.c1 = 1.0 / std::abs(vj);
        } else {
            // Vanishing-coordinate limit of the diagonal integrand.
            in.scales = nonzero_abs(v);
            in.extra = [](double t) { return 1.0 - t * t / 3.0; };
            in.c0 = 1.0;
            in.c2 = 1.0 / 3.0;
        }
        return integrate_even(in, tol, "hessian_entries_numeric");
    }

    const double v1 = v[static_cast<std::size_t>(j1)];
    const double v2 = v[static_cast<std::size_t>(j2)];
    // The mixed-partial factor vanishes identically with its coordinate.
    if (v1 == 0.0 || v2 == 0.0) return 0.0;
    Integrand in;
    in.scales = nonzero_abs_except(v, j1, j2);
    in.extra = [v1, v2](double t) {
        return (std::cos(v1 * t) - sinc(v1 * t)) / v1 *
               ((std::cos(v2 * t) - sinc(v2 * t)) / v2);
    };
    in.c0 = 4.0 / (std::abs(v1) * std::abs(v2));
    in.osc_scale = max_abs_nonzero(v);
    in.t0 = 1.0 / min_abs_nonzero(v);
    return integrate_even(in, tol, "hessian_entries_numeric");
}

}  // namespace lpolya
