#include "filling.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include "errors.hpp"

namespace dehnfill {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// t = re_c1 / (re_c1 - re_c); the gap mu + lambda = 0 shows up as a vanishing
// denominator and is reported as one (unsigned) infinity. The relative
// threshold keeps points constructed exactly on l_6 / l_12 at t = inf instead
// of a huge rounding-noise float.
double slope_from(double re_c, double re_c1) {
    double den = re_c1 - re_c;
    double scale = std::max({std::fabs(re_c), std::fabs(re_c1), 1.0});
    if (std::fabs(den) <= 1e-11 * scale) return kInf;
    return re_c1 / den;
}

void require_strip(Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw DomainError("parameter must be finite");
    if (std::fabs(c.imag()) >= kPi)
        throw DomainError("parameter outside the strip |Im c| < pi");
}

}  // namespace

namespace detail {

FillingData filling_from(const ModuliPoint& mp) {
    // [Re c, Re c1; Im c, Im c1] (mu, lambda)^T = (0, 2pi)^T.
    // det = cross(c, c1) = |c|^2 Im(omega) > 0, so the solution is unique.
    double det = mp.c.real() * mp.c1.imag() - mp.c.imag() * mp.c1.real();
    FillingData fd;
    fd.mu = -2.0 * kPi * mp.c1.real() / det;
    fd.lambda = 2.0 * kPi * mp.c.real() / det;
    fd.t = slope_from(mp.c.real(), mp.c1.real());
    return fd;
}

std::pair<long long, long long> filling_companion(long long p, long long q) {
    if (q == 0) {
        // p = +-1 by coprimality; (r, s) = (0, p) gives p*s - q*r = p^2 = 1.
        return {0, p};
    }
    // extended euclid on (p, q): x*p + y*q = 1, then s = x, r = -y
    long long old_r = p, r = q;
    long long old_x = 1, x = 0;
    long long old_y = 0, y = 1;
    while (r != 0) {
        long long quot = old_r / r;
        long long tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_x - quot * x; old_x = x; x = tmp;
        tmp = old_y - quot * y; old_y = y; y = tmp;
    }
    if (old_r < 0) { old_x = -old_x; old_y = -old_y; }
    long long s = old_x, rr = -old_y;
    // shift (r + k p, s + k q) to the smallest nonnegative s
    long long qa = std::llabs(q);
    long long s_norm = s % qa;
    if (s_norm < 0) s_norm += qa;
    long long k = (s_norm - s) / q;
    return {rr + k * p, s_norm};
}

}  // namespace detail

FillingData filling_coefficients(Complex c) {
    require_strip(c);
    if (c == Complex{0.0, 0.0}) {
        FillingData fd;
        fd.mu = kInf;
        fd.lambda = kInf;
        fd.t = kInf;
        return fd;
    }
    return detail::filling_from(detail::solve_core(c));
}

double slope_t(Complex c) {
    require_strip(c);
    if (c == Complex{0.0, 0.0})
        throw DomainError("t is undefined at the complete structure c = 0");
    ModuliPoint mp = detail::solve_core(c);
    return slope_from(mp.c.real(), mp.c1.real());
}

ConeData cone_data(Complex c, long long p, long long q) {
    if (c == Complex{0.0, 0.0}) throw DomainError("cone data needs c != 0");
    require_strip(c);
    if (std::gcd(p, q) != 1) throw std::invalid_argument("(p, q) must be coprime");

    ModuliPoint mp = detail::solve_core(c);
    auto [r, s] = detail::filling_companion(p, q);

    ConeData cd;
    cd.p = p;
    cd.q = q;
    double pd = static_cast<double>(p), qd = static_cast<double>(q);
    cd.angle = std::fabs(pd * c.imag() + qd * mp.c1.imag());
    double rd = static_cast<double>(r), sd = static_cast<double>(s);
    cd.length = std::fabs(rd * c.real() + sd * mp.c1.real());
    return cd;
}

Complex t_level_point(double t, double s, double theta_hint) {
    if (std::isnan(t)) throw DomainError("t must not be NaN");

    auto pts = special_points(s);
    // angle of p_j, ascending; p_7's angle is exactly pi
    std::array<double, 7> th;
    for (int j = 0; j < 7; ++j) {
        th[static_cast<std::size_t>(j)] = std::arg(pts[static_cast<std::size_t>(j)]);
        if (th[static_cast<std::size_t>(j)] < 0.0) th[static_cast<std::size_t>(j)] += 2.0 * kPi;
    }
    th[0] = 0.0;
    th[6] = kPi;

    // t on the loci: l_1 -1, l_2 0, l_3 1/2, l_4 1, l_5 2, l_6 inf, l_7 -1
    const double locus_t[6] = {-1.0, 0.0, 0.5, 1.0, 2.0, kInf};
    if (std::isinf(t)) return pts[5];
    for (int j = 0; j < 5; ++j)
        if (t == locus_t[j]) return pts[static_cast<std::size_t>(j)];

    // T increases from -1 at theta_1 to +inf approaching theta_6, then from
    // -inf just past theta_6 back to -1 at theta_7.
    double lo, hi;
    bool below_gap;  // bracket lies in (theta_6, theta_7]: inf readings mean -inf
    if (t < -1.0) {
        lo = th[5];
        hi = th[6];
        below_gap = true;
    } else {
        int j = 0;
        while (j < 4 && t > locus_t[j + 1]) ++j;  // bracket [th_j, th_{j+1}]
        lo = th[static_cast<std::size_t>(j)];
        hi = th[static_cast<std::size_t>(j + 1)];
        below_gap = false;
    }

    auto t_at = [&](double theta) { return slope_t(level_point(s, theta)); };
    auto above = [&](double value) {
        if (std::isinf(value)) return !below_gap;  // +inf above any target, -inf below
        return value > t;
    };

    if (theta_hint >= 0.0) {
        double a = std::max(lo, theta_hint - 0.15);
        double b = std::min(hi, theta_hint + 0.15);
        if (a < b && !above(t_at(a)) && above(t_at(b))) {
            lo = a;
            hi = b;
        }
    }

    const double eps = std::numeric_limits<double>::epsilon();
    while (hi - lo > 8.0 * eps * (1.0 + hi)) {
        double mid = 0.5 * (lo + hi);
        if (above(t_at(mid))) hi = mid; else lo = mid;
    }
    return level_point(s, 0.5 * (lo + hi));
}

std::vector<TracePoint> boundary_trace(double t, std::span<const double> s_list) {
    if (std::isinf(t) || std::isnan(t))
        throw DomainError("boundary trace needs a finite t");
    std::vector<TracePoint> out;
    out.reserve(s_list.size());
    double hint = -1.0;
    for (double s : s_list) {
        TracePoint tp;
        tp.s = s;
        tp.c = t_level_point(t, s, hint);
        hint = std::arg(tp.c);
        if (hint < 0.0) hint += 2.0 * kPi;
        ModuliPoint mp = detail::solve_core(tp.c);
        tp.c_omega = mp.c1;
        tp.filling = detail::filling_from(mp);
        out.push_back(tp);
    }
    return out;
}

bool hexagon_contains(double mu, double lambda) {
    if (!std::isfinite(mu) || !std::isfinite(lambda)) return false;
    return std::fabs(mu) <= 2.0 && std::fabs(lambda) <= 2.0 && std::fabs(mu + lambda) <= 2.0;
}

}  // namespace dehnfill
