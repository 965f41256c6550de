#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "errors.hpp"
#include "filling.hpp"
#include "packing.hpp"
#include "support.hpp"

namespace dehnfill::selftest {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

// Deterministic rejection sampler for c in the strip with f(c) in [s_lo, s_hi].
std::vector<Complex> sample_strip(int count, double s_lo, double s_hi, std::uint64_t seed) {
    double xs = level_axis_radius_re(std::min(s_hi, 1.0 - 1e-9));
    double ys = level_axis_radius_im(std::min(s_hi, 1.0 - 1e-9));
    Rng rng(seed);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        Complex c{rng.uniform(-xs, xs), rng.uniform(-ys, ys)};
        if (std::fabs(c.imag()) >= kPi) continue;
        double s = level_value(c);
        if (s < s_lo || s > s_hi) continue;
        out.push_back(c);
    }
    return out;
}

double dist_point_segment(double px, double py, double ax, double ay, double bx, double by) {
    double vx = bx - ax, vy = by - ay;
    double wx = px - ax, wy = py - ay;
    double tt = (vx * wx + vy * wy) / (vx * vx + vy * vy);
    tt = std::clamp(tt, 0.0, 1.0);
    return std::hypot(px - (ax + tt * vx), py - (ay + tt * vy));
}

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, const char* name, const std::function<void(CriterionResult&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto start = Clock::now();
    try {
        r.pass = true;
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

void fail(CriterionResult& r, std::string why) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += why;
}

// --- criterion bodies -------------------------------------------------------

CriterionResult c1_eq1_residual() {
    return timed(1, "eq1-residual", [](CriterionResult& r) {
        auto samples = sample_strip(1000, 0.05, 0.95, 0xD15C0001u);
        std::vector<double> worst(samples.size(), 0.0);
        parallel_for(static_cast<int>(samples.size()), [&](int i) {
            ModuliPoint mp = solve_parallelogram(samples[static_cast<std::size_t>(i)]);
            double fc = level_value(mp.c);
            worst[static_cast<std::size_t>(i)] =
                std::max(std::fabs(level_value(mp.c1) - fc), std::fabs(level_value(mp.c2) - fc));
        });
        double max_res = 0.0;
        for (double v : worst) max_res = std::max(max_res, v);
        r.detail = format("max residual %.3g (tol 1e-9) over 1000 samples", max_res);
        if (!(max_res < 1e-9)) fail(r, "residual above 1e-9");
    });
}

CriterionResult c2_hexagonal_limit() {
    return timed(2, "hexagonal-limit", [](CriterionResult& r) {
        const Complex omega0 = std::polar(1.0, kPi / 3.0);
        double worst3 = 0.0, worst4 = 0.0;
        bool shrinks = true;
        for (int k = 0; k < 36; ++k) {
            double phi = 2.0 * kPi * k / 36.0;
            double e3 = std::abs(detail::solve_core(std::polar(1e-3, phi)).omega - omega0);
            double e4 = std::abs(detail::solve_core(std::polar(1e-4, phi)).omega - omega0);
            worst3 = std::max(worst3, e3);
            worst4 = std::max(worst4, e4);
            if (!(e4 < e3)) shrinks = false;
        }
        r.detail = format("max |omega - e^{i pi/3}|: %.3g at |c|=1e-3, %.3g at 1e-4", worst3, worst4);
        if (!(worst3 < 1e-2)) fail(r, "limit error above 1e-2 at |c|=1e-3");
        if (!shrinks) fail(r, "error not strictly smaller at |c|=1e-4 on some ray");
    });
}

CriterionResult c3_fiber_symmetry() {
    return timed(3, "fiber-symmetry", [](CriterionResult& r) {
        auto samples = sample_strip(100, 0.05, 0.95, 0xF1BE0003u);
        std::vector<double> diff(samples.size());
        parallel_for(static_cast<int>(samples.size()), [&](int i) {
            Complex c = samples[static_cast<std::size_t>(i)];
            diff[static_cast<std::size_t>(i)] =
                std::abs(detail::solve_core(fiber_partner(c)).omega - detail::solve_core(c).omega);
        });
        double worst = 0.0;
        for (double v : diff) worst = std::max(worst, v);
        r.detail = format("max |omega(-c) - omega(c)| = %.3g (tol 1e-9) over 100 samples", worst);
        if (!(worst < 1e-9)) fail(r, "fiber symmetry violated");
    });
}

CriterionResult c4_order6() {
    return timed(4, "order6-symmetry", [](CriterionResult& r) {
        auto samples = sample_strip(100, 0.05, 0.95, 0x06D15C04u);
        std::vector<double> half(samples.size()), full(samples.size());
        parallel_for(static_cast<int>(samples.size()), [&](int i) {
            Complex c = samples[static_cast<std::size_t>(i)];
            Complex z = c;
            for (int k = 0; k < 3; ++k) z = rotate6(z);
            half[static_cast<std::size_t>(i)] = std::abs(z + c) / std::abs(c);
            for (int k = 0; k < 3; ++k) z = rotate6(z);
            full[static_cast<std::size_t>(i)] = std::abs(z - c) / std::abs(c);
        });
        double w3 = 0.0, w6 = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            w3 = std::max(w3, half[i]);
            w6 = std::max(w6, full[i]);
        }
        r.detail = format("rel err: rotate6^3 vs -c %.3g, rotate6^6 vs c %.3g (tol 1e-6)", w3, w6);
        if (!(w3 < 1e-6)) fail(r, "rotate6^3 != -c");
        if (!(w6 < 1e-6)) fail(r, "rotate6^6 != c");
    });
}

CriterionResult c5_t_on_loci() {
    return timed(5, "t-on-loci", [](CriterionResult& r) {
        const double expect[5] = {-1.0, 0.0, 0.5, 1.0, 2.0};
        double worst = 0.0;
        for (int si = 1; si <= 9; ++si) {
            double s = 0.1 * si;
            auto pts = special_points(s);
            for (int j = 0; j < 5; ++j) {
                double t = slope_t(pts[static_cast<std::size_t>(j)]);
                worst = std::max(worst, std::fabs(t - expect[j]));
            }
            double t6 = slope_t(pts[5]);
            if (!std::isinf(t6)) fail(r, format("T(p6) finite (%.17g) at s=%.1f", t6, s));
        }
        if (r.detail.empty()) r.detail = format("max |T(p_j) - t_j| = %.3g (tol 1e-8), T(p6) = inf", worst);
        if (!(worst < 1e-8)) fail(r, "finite loci values off");
    });
}

CriterionResult c6_t_monotone() {
    return timed(6, "t-monotone", [](CriterionResult& r) {
        const int n = 720;
        std::vector<double> t(n);
        parallel_for(n, [&](int i) {
            double theta = 2.0 * kPi * (i + 0.5) / n;  // offset keeps samples off the loci
            t[static_cast<std::size_t>(i)] = slope_t(level_point(0.5, theta));
        });
        int descents = 0, inf_count = 0;
        bool strict = true;
        for (int i = 0; i < n; ++i) {
            double a = t[static_cast<std::size_t>(i)];
            double b = t[static_cast<std::size_t>((i + 1) % n)];
            if (std::isinf(a)) { ++inf_count; continue; }
            if (std::isinf(b)) continue;
            if (b <= a) {
                ++descents;
                // a genuine gap crossing jumps from huge positive to huge negative
                if (!(a > 100.0 && b < -100.0)) strict = false;
            }
        }
        int gaps = descents + inf_count;
        r.detail = format("720-point sweep of L_0.5: %d gap crossings, strictly increasing elsewhere: %s",
                          gaps, strict ? "yes" : "no");
        if (gaps != 2) fail(r, format("expected 2 gap crossings, got %d", gaps));
        if (!strict) fail(r, "non-monotone step away from the gap");
    });
}

CriterionResult c7_boundary_limit() {
    return timed(7, "boundary-limit", [](CriterionResult& r) {
        std::vector<double> schedule;
        for (int k = 2; k <= 8; ++k) schedule.push_back(1.0 - std::pow(10.0, -k));
        auto trace = boundary_trace(0.75, schedule);
        bool sum_dec = true, im_dec = true;
        for (std::size_t i = 1; i < trace.size(); ++i) {
            double prev = std::fabs(trace[i - 1].filling.mu + trace[i - 1].filling.lambda - 2.0);
            double cur = std::fabs(trace[i].filling.mu + trace[i].filling.lambda - 2.0);
            if (!(cur < prev)) sum_dec = false;
            double gp = std::fabs(kPi - trace[i - 1].c_omega.imag());
            double gc = std::fabs(kPi - trace[i].c_omega.imag());
            if (!(gc < gp)) im_dec = false;
        }
        const TracePoint& last = trace.back();
        double sum_gap = std::fabs(last.filling.mu + last.filling.lambda - 2.0);
        double target_gap = std::hypot(last.filling.mu - 1.5, last.filling.lambda - 0.5);
        r.detail = format("|mu+lambda-2| = %.3g, |(mu,lambda)-(1.5,0.5)| = %.3g at s=1-1e-8", sum_gap, target_gap);
        if (!sum_dec) fail(r, "|mu+lambda-2| not strictly decreasing");
        if (!(sum_gap < 0.1)) fail(r, "|mu+lambda-2| >= 0.1 at k=8");
        if (!(target_gap < 0.1)) fail(r, "(mu,lambda) not within 0.1 of (1.5,0.5)");
        if (!im_dec) fail(r, "Im(c omega) not monotone toward pi");
    });
}

CriterionResult c8_hexagon_containment() {
    return timed(8, "hexagon-containment", [](CriterionResult& r) {
        const int n = 10000;
        auto samples = sample_strip(n, 1e-12, 0.999, 0x8EC50008u);
        std::vector<char> ok(samples.size(), 0);
        parallel_for(n, [&](int i) {
            FillingData fd = filling_coefficients(samples[static_cast<std::size_t>(i)]);
            const double tol = 2.0 + 1e-9;
            ok[static_cast<std::size_t>(i)] =
                (std::fabs(fd.mu) <= tol && std::fabs(fd.lambda) <= tol &&
                 std::fabs(fd.mu + fd.lambda) <= tol)
                    ? 1
                    : 0;
        });
        int outside = 0;
        for (char v : ok)
            if (!v) ++outside;

        // traced boundary points, pushed around all six sectors by rotate6
        static constexpr double verts[6][2] = {
            {0, 2}, {2, 0}, {2, -2}, {0, -2}, {-2, 0}, {-2, 2}};
        double edge_min[6];
        for (double& v : edge_min) v = std::numeric_limits<double>::infinity();
        Complex c = t_level_point(0.75, 1.0 - 1e-9);
        for (int k = 0; k < 6; ++k) {
            FillingData fd = filling_coefficients(c);
            for (int e = 0; e < 6; ++e) {
                double d = dist_point_segment(fd.mu, fd.lambda, verts[e][0], verts[e][1],
                                              verts[(e + 1) % 6][0], verts[(e + 1) % 6][1]);
                edge_min[e] = std::min(edge_min[e], d);
            }
            if (k < 5) c = rotate6(c);
        }
        double worst_edge = 0.0;
        for (double v : edge_min) worst_edge = std::max(worst_edge, v);

        r.detail = format("%d/%d samples outside the hexagon; max edge-approach distance %.3g (tol 0.05)",
                          outside, n, worst_edge);
        if (outside != 0) fail(r, "a sample escaped the hexagon");
        if (!(worst_edge < 0.05)) fail(r, "an edge is not approached within 0.05");
    });
}

CriterionResult c9_degeneration() {
    return timed(9, "degeneration", [](CriterionResult& r) {
        std::vector<double> angle, length;
        for (int k = 1; k <= 8; ++k) {
            double s = 1.0 - std::pow(10.0, -k);
            Complex c = t_level_point(0.5, s);
            ConeData cd = cone_data(c, 1, 1);
            angle.push_back(cd.angle);
            length.push_back(cd.length);
        }
        bool angle_tail = true, length_tail = true;
        for (std::size_t i = 4; i < angle.size(); ++i) {
            if (!(std::fabs(2.0 * kPi - angle[i]) < std::fabs(2.0 * kPi - angle[i - 1])))
                angle_tail = false;
            if (!(length[i] > length[i - 1])) length_tail = false;
        }
        double final_gap = std::fabs(2.0 * kPi - angle.back());
        r.detail = format("|angle - 2pi| = %.3g at s=1-1e-8 (tol 0.1); length = %.3g (> 10)",
                          final_gap, length.back());
        if (!(final_gap < 0.1)) fail(r, "cone angle not within 0.1 of 2pi");
        if (!angle_tail) fail(r, "cone angle tail not monotone");
        if (!(length.back() > 10.0)) fail(r, "singular locus length <= 10");
        if (!length_tail) fail(r, "singular locus length not increasing");
    });
}

CriterionResult c10_packing(const Options& opts) {
    return timed(10, "packing-validity", [&](CriterionResult& r) {
        auto perturb = [&](PackingSpec& p) {
            if (!opts.inject_kappa_fault) return;
            for (CircleSpec& cs : p.circles) cs.radius *= 1.01;
        };

        PackingSpec aff = build_affine_packing(Complex{0.0, 2.0 * kPi / 3.0}, Window{-2, 2, -2, 2});
        perturb(aff);
        ValidationReport va = validate_packing(aff);

        PackingSpec euc = build_euclidean_packing(Window{-3, 3, -3, 3});
        perturb(euc);
        ValidationReport ve = validate_packing(euc);

        double dual_r = euc.duals.empty() ? 0.0 : euc.duals.front().radius;
        double dual_expect = 1.0 / (2.0 * std::sqrt(3.0));

        r.detail = format("affine residuals %.3g/%.3g, euclidean %.3g/%.3g (tol 1e-9); "
                          "overlaps %d/%d; euclidean dual radius %.12g",
                          va.max_tangency_residual, va.max_orthogonality_residual,
                          ve.max_tangency_residual, ve.max_orthogonality_residual,
                          va.local_overlap_violations, ve.local_overlap_violations, dual_r);
        if (!(va.max_tangency_residual < 1e-9)) fail(r, "affine tangency residual");
        if (!(va.max_orthogonality_residual < 1e-9)) fail(r, "affine orthogonality residual");
        if (!(ve.max_tangency_residual < 1e-9)) fail(r, "euclidean tangency residual");
        if (!(ve.max_orthogonality_residual < 1e-9)) fail(r, "euclidean orthogonality residual");
        if (va.local_overlap_violations != 0 || ve.local_overlap_violations != 0)
            fail(r, "local overlap detected");
        for (const CircleSpec& d : euc.duals)
            if (!(std::fabs(d.radius - dual_expect) < 1e-12))
                fail(r, format("euclidean dual radius %.17g != 1/(2 sqrt 3)", d.radius));
    });
}

}  // namespace

CriterionResult run_packing_criterion(const Options& opts) { return c10_packing(opts); }

std::vector<CriterionResult> run_all(const Options& opts) {
    std::vector<CriterionResult> results;
    results.push_back(c1_eq1_residual());
    {
        CriterionResult& c1 = results.back();
        c1.detail += format("; runtime %.2f s (budget 10 s)", c1.seconds);
        if (c1.seconds >= 10.0) c1.pass = false;
    }
    results.push_back(c2_hexagonal_limit());
    results.push_back(c3_fiber_symmetry());
    results.push_back(c4_order6());
    results.push_back(c5_t_on_loci());
    results.push_back(c6_t_monotone());
    results.push_back(c7_boundary_limit());
    results.push_back(c8_hexagon_containment());
    results.push_back(c9_degeneration());
    results.push_back(c10_packing(opts));

    double total = 0.0;
    bool others = true;
    for (const auto& cr : results) {
        total += cr.seconds;
        others = others && cr.pass;
    }
    CriterionResult budget;
    budget.id = 11;
    budget.name = "runtime-budget";
    budget.seconds = 0.0;
    budget.pass = others && total < 60.0;
    budget.detail = format("criteria 1-10 took %.2f s (budget 60 s), all passing: %s",
                           total, others ? "yes" : "no");
    results.push_back(budget);
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace dehnfill::selftest
