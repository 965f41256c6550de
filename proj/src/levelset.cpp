#include "levelset.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace dehnfill {

namespace {

constexpr double kPi = std::numbers::pi;

// sech(x/2) = 2 e^{-|x|/2} / (1 + e^{-|x|}); never overflows, underflows to 0.
double sech_half(double x) {
    double e = std::exp(-0.5 * std::fabs(x));
    return 2.0 * e / (1.0 + e * e);
}

// 1 - sech(x/2) without cancellation: 2 sinh^2(x/4) / cosh(x/2) for moderate
// x, direct subtraction once sech is far below 1.
double one_minus_sech_half(double x) {
    double ax = std::fabs(x);
    if (ax < 300.0) {
        double sh = std::sinh(0.25 * ax);
        return 2.0 * sh * sh / std::cosh(0.5 * ax);
    }
    return 1.0 - sech_half(ax);
}

void require_level(double s) {
    if (!std::isfinite(s) || s < 0.0) throw DomainError("level s must be finite and nonnegative");
    if (s == 0.0) throw DomainError("degenerate level: L_0 is the single point 0");
    if (s >= 1.0 - kLevelMaxGap) throw DomainError("level s too close to 1: real radius unbounded");
}

}  // namespace

double level_value(Complex z) {
    // 1 - cos(y/2) sech(x/2) = 2 sin^2(y/4) + cos(y/2) (1 - sech(x/2));
    // both terms are evaluated without cancellation.
    double q = std::sin(0.25 * z.imag());
    return 2.0 * q * q + std::cos(0.5 * z.imag()) * one_minus_sech_half(z.real());
}

double level_radial_derivative(double r, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    double x = r * ct, y = r * st;
    double sh = sech_half(x);
    double fx = 0.5 * std::cos(0.5 * y) * sh * std::tanh(0.5 * x);
    double fy = 0.5 * std::sin(0.5 * y) * sh;
    return ct * fx + st * fy;
}

double level_axis_radius_re(double s) {
    require_level(s);
    return 2.0 * std::acosh(1.0 / (1.0 - s));
}

double level_axis_radius_im(double s) {
    require_level(s);
    return 2.0 * std::acos(1.0 - s);
}

double level_radius(double s, double theta, double seed_radius) {
    require_level(s);
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");

    const double xs = 2.0 * std::acosh(1.0 / (1.0 - s));
    const double ys = 2.0 * std::acos(1.0 - s);

    // L_s fits in the axis rectangle, so xs + ys over-brackets every radial
    // root; rays leaving the strip are clipped at |Im| = pi where the level
    // value is exactly 1 > s.
    double hi = xs + ys;
    double st = std::fabs(std::sin(theta));
    if (st > 0.0) hi = std::min(hi, kPi / st);
    double lo = 0.0;

    auto g = [&](double r) { return level_value(std::polar(r, theta)) - s; };

    // Ellipse through the two axis points as the starting guess.
    double r = hi * 0.5;
    {
        double ct = std::cos(theta), sn = std::sin(theta);
        double den = std::hypot(ys * ct, xs * sn);
        if (den > 0.0) r = xs * ys / den;
    }
    if (seed_radius > 0.0 && seed_radius < hi) r = seed_radius;
    if (!(r > lo && r < hi)) r = 0.5 * hi;

    // Safeguarded Newton: keep the [lo,hi] bracket, fall back to bisection
    // whenever the Newton step leaves it. Iterate down to relative machine
    // width so callers get full double accuracy in r, not just in the level.
    const double eps = std::numeric_limits<double>::epsilon();
    double gr = g(r);
    for (int it = 0; it < 200; ++it) {
        if (gr == 0.0) break;
        if (gr < 0.0) lo = r; else hi = r;
        if (hi - lo <= 4.0 * eps * hi) break;
        double dg = level_radial_derivative(r, theta);
        double next = (dg > 0.0) ? r - gr / dg : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        r = next;
        gr = g(r);
    }

    double residual = std::fabs(g(r));
    if (!(residual < 1e-12)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "level_radius did not converge: s=%.17g theta=%.17g r=%.17g residual=%.3g",
                      s, theta, r, residual);
        throw NumericError(buf);
    }
    return r;
}

Complex level_point(double s, double theta) {
    return std::polar(level_radius(s, theta), theta);
}

LevelCurve::LevelCurve(double s, int samples) : s_(s) {
    require_level(s);
    if (samples < 8) throw DomainError("LevelCurve needs at least 8 samples");
    radii_.resize(static_cast<std::size_t>(samples));
    double prev = -1.0;
    for (int i = 0; i < samples; ++i) {
        prev = level_radius(s, theta(i), prev);
        radii_[static_cast<std::size_t>(i)] = prev;
    }
}

double LevelCurve::theta(int i) const {
    return 2.0 * kPi * static_cast<double>(i) / static_cast<double>(size());
}

Complex LevelCurve::point(int i) const {
    return std::polar(radius(i), theta(i));
}

}  // namespace dehnfill
