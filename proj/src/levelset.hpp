#pragma once

#include <complex>
#include <vector>

namespace dehnfill {

using Complex = std::complex<double>;

// Level function on the strip |Im z| < pi:
//
//   level_value(z) = 1 - cos(Im z / 2) / cosh(Re z / 2)
//
// evaluated in a cancellation- and overflow-free form, so it is accurate to a
// few ulps near 0 and finite for |Re z| far beyond 1400. Total on finite
// inputs; the value is in [0,1) exactly when |Im z| < pi and is >= 1 for
// |Im z| in [pi, 2pi), which downstream scans rely on to reject points
// outside the strip.
double level_value(Complex z);

// d/dr of level_value(r * e^{i theta}) at r, theta.
double level_radial_derivative(double r, double theta);

// Largest admissible level: levels s >= 1 - kLevelMax give unbounded real
// radii and are rejected.
inline constexpr double kLevelMaxGap = 1e-12;

// Radii of the level curve L_s on the two symmetry axes (closed forms).
double level_axis_radius_re(double s);  // 2 * acosh(1/(1-s))
double level_axis_radius_im(double s);  // 2 * acos(1-s)

// Unique r > 0 with level_value(r e^{i theta}) = s. Requires 0 < s < 1-1e-12;
// s = 0 is the degenerate single-point level and is rejected. The residual
// |level_value(r e^{i theta}) - s| is below 1e-12 (in practice a few 1e-16).
// seed_radius, when positive, is used as the starting guess.
double level_radius(double s, double theta, double seed_radius = -1.0);

// level_radius(s, theta) * e^{i theta}
Complex level_point(double s, double theta);

// The curve L_s sampled at n equally spaced angles 2*pi*i/n. Radii are found
// by continuation from the previous sample, so construction is cheap.
class LevelCurve {
public:
    LevelCurve(double s, int samples);

    double s() const { return s_; }
    int size() const { return static_cast<int>(radii_.size()); }
    double theta(int i) const;
    double radius(int i) const { return radii_[static_cast<std::size_t>(i)]; }
    Complex point(int i) const;

private:
    double s_;
    std::vector<double> radii_;
};

}  // namespace dehnfill
