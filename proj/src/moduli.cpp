#include "moduli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace dehnfill {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanSamples = 720;
constexpr double kLocusAngleTol = 1e-9;

double cross(Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

// arg normalized to [0, 2pi)
double angle_of(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * kPi;
    if (a >= 2.0 * kPi) a -= 2.0 * kPi;
    return a;
}

double angle_gap(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 2.0 * kPi - d);
}

void require_strip(Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw DomainError("parameter must be finite");
    if (std::fabs(c.imag()) >= kPi)
        throw DomainError("parameter outside the strip |Im c| < pi");
}

}  // namespace

int RegionId::code() const {
    switch (kind) {
        case Kind::Origin: return 0;
        case Kind::Sector: return index;
        case Kind::Locus: return 12 + index;
    }
    return 0;
}

RegionId RegionId::from_code(int code) {
    if (code == 0) return origin();
    if (code >= 1 && code <= 12) return sector(code);
    if (code >= 13 && code <= 24) return locus(code - 12);
    throw std::invalid_argument("bad region code");
}

std::string RegionId::name() const {
    switch (kind) {
        case Kind::Origin: return "origin";
        case Kind::Sector: return "C" + std::to_string(index);
        case Kind::Locus: return "l" + std::to_string(index);
    }
    return "origin";
}

namespace detail {

ModuliPoint solve_core(Complex c) {
    require_strip(c);
    if (c == Complex{0.0, 0.0})
        throw DomainError("c = 0 is the complete structure; omega is not determined by a parallelogram");

    const double s = level_value(c);
    if (s < 1e-300)
        throw DomainError("c is too close to 0 to carry a level curve in double precision");
    if (s >= 1.0 - kLevelMaxGap)
        throw DomainError("f(c) too close to 1: level curve unbounded in double precision");

    // h(theta) = f(z(theta) - c) - s on L_s. Its zeros are the intersections
    // of L_s with L_s + c; strict convexity gives exactly two. Outside the
    // strip f >= 1 > s, so no spurious roots enter the scan.
    LevelCurve curve(s, kScanSamples);

    std::vector<double> h(kScanSamples);
    for (int i = 0; i < kScanSamples; ++i)
        h[static_cast<std::size_t>(i)] = level_value(curve.point(i) - c) - s;

    std::vector<double> roots;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < kScanSamples; ++i) {
        int j = (i + 1) % kScanSamples;
        double hi_ = h[static_cast<std::size_t>(i)];
        double hj = h[static_cast<std::size_t>(j)];
        if (hi_ == 0.0) {
            roots.push_back(curve.theta(i));
            continue;
        }
        if (hi_ * hj >= 0.0) continue;
        double lo = curve.theta(i);
        double hi = curve.theta(i) + 2.0 * kPi / kScanSamples;
        double rlo = curve.radius(i), rhi = curve.radius(j);
        double hlo = hi_;
        for (int it = 0; it < 120 && hi - lo > 4.0 * eps * (1.0 + hi); ++it) {
            double mid = 0.5 * (lo + hi);
            double rmid = level_radius(s, mid, 0.5 * (rlo + rhi));
            double hm = level_value(std::polar(rmid, mid) - c) - s;
            if (hm == 0.0) { lo = hi = mid; break; }
            if (hm * hlo > 0.0) { lo = mid; rlo = rmid; hlo = hm; }
            else { hi = mid; rhi = rmid; }
        }
        roots.push_back(0.5 * (lo + hi));
    }

    if (roots.size() != 2) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "parallelogram scan found %zu roots (expected 2) at c=%.17g%+.17gi s=%.17g grid=%d",
                      roots.size(), c.real(), c.imag(), s, kScanSamples);
        throw NumericError(buf);
    }

    ModuliPoint mp;
    mp.c = c;
    mp.s = s;
    bool picked = false;
    for (double theta : roots) {
        Complex w = level_point(s, theta);
        Complex w2 = w - c;
        if (cross(w - c, w2 - c) > 0.0) {
            mp.c1 = w;
            mp.c2 = w2;
            picked = true;
            break;
        }
    }
    if (!picked)
        throw NumericError("parallelogram orientation selection failed: no counterclockwise root");
    mp.omega = mp.c1 / mp.c;
    return mp;
}

}  // namespace detail

ModuliPoint solve_parallelogram(Complex c) {
    ModuliPoint mp = detail::solve_core(c);
    mp.region = classify(c);
    return mp;
}

Complex fiber_partner(Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw DomainError("parameter must be finite");
    if (c == Complex{0.0, 0.0}) throw DomainError("c = 0 has no fiber partner");
    return -c;
}

Complex rotate6(Complex c) {
    return detail::solve_core(c).c1;
}

std::array<Complex, 12> special_points(double s) {
    const double x = level_radius(s, 0.0);
    const double y = level_axis_radius_im(s);

    std::array<Complex, 12> p;
    p[0] = Complex{x, 0.0};    // p1
    p[3] = Complex{0.0, y};    // p4
    p[6] = -p[0];              // p7
    p[9] = -p[3];              // p10

    ModuliPoint at_p1 = detail::solve_core(p[0]);
    p[2] = at_p1.c1;           // p3
    p[4] = at_p1.c2;           // p5
    ModuliPoint at_p10 = detail::solve_core(p[9]);
    p[11] = at_p10.c1;         // p12
    p[1] = at_p10.c2;          // p2

    p[8] = -p[2];              // p9
    p[10] = -p[4];             // p11
    p[5] = -p[11];             // p6
    p[7] = -p[1];              // p8
    return p;
}

Complex locus_point(int j, double s) {
    if (j < 1 || j > 12) throw std::invalid_argument("locus index must be in 1..12");
    return special_points(s)[static_cast<std::size_t>(j - 1)];
}

RegionId classify(Complex c) {
    require_strip(c);
    if (c == Complex{0.0, 0.0}) return RegionId::origin();

    const double s = level_value(c);
    const double phi = angle_of(c);

    std::array<double, 12> locus_angle;
    if (s < 1e-250) {
        // Too small for a level curve in doubles; the loci angles have
        // converged to their s -> 0 limits (j-1) * pi/6 far above this scale.
        for (int j = 0; j < 12; ++j) locus_angle[static_cast<std::size_t>(j)] = j * kPi / 6.0;
    } else {
        if (s >= 1.0 - kLevelMaxGap)
            throw DomainError("f(c) too close to 1: level curve unbounded in double precision");
        auto pts = special_points(s);
        for (int j = 0; j < 12; ++j) locus_angle[static_cast<std::size_t>(j)] = angle_of(pts[static_cast<std::size_t>(j)]);
    }

    for (int j = 0; j < 12; ++j)
        if (angle_gap(phi, locus_angle[static_cast<std::size_t>(j)]) < kLocusAngleTol)
            return RegionId::locus(j + 1);

    // locus_angle is ascending with locus_angle[0] = 0; find the containing arc
    for (int k = 0; k < 12; ++k) {
        double a = locus_angle[static_cast<std::size_t>(k)];
        double b = (k == 11) ? 2.0 * kPi : locus_angle[static_cast<std::size_t>(k + 1)];
        if (phi >= a && phi < b) return RegionId::sector(k + 1);
    }
    return RegionId::sector(12);
}

}  // namespace dehnfill
