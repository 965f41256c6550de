#pragma once

#include <span>
#include <vector>

#include "moduli.hpp"

namespace dehnfill {

// Dehn filling coefficients: the real solution of mu*c + lambda*c*omega =
// +2*pi*i (the + branch is fixed; negating the pair gives the other valid
// solution). At c = 0 both are infinite. t = mu/(mu+lambda) is the slopelike
// number; infinite where mu + lambda = 0.
struct FillingData {
    double mu = 0.0;
    double lambda = 0.0;
    double t = 0.0;
    int sign = +1;  // branch marker: coefficients solve mu*c + lambda*c*omega = +2*pi*i
};

FillingData filling_coefficients(Complex c);

// Re(c*omega) / (Re(c*omega) - Re(c)); +infinity at the gap mu + lambda = 0.
// Domain error at c = 0 (t undefined at the complete structure).
double slope_t(Complex c);

// Cone angle and singular-locus length of the (p,q) filling curve at c:
// angle = |Im(p c + q c omega)|, length = |Re(r c + s c omega)| with
// p s - q r = 1 chosen canonically (smallest nonnegative s when q != 0).
struct ConeData {
    long long p = 0;
    long long q = 0;
    double angle = 0.0;
    double length = 0.0;
};

ConeData cone_data(Complex c, long long p, long long q);

// The point of L_s on the closed upper arc from l_1 to l_7 where the
// slopelike number equals t (t may be infinite: that is l_6). theta_hint, if
// nonnegative, localizes the bisection near a previous solution.
Complex t_level_point(double t, double s, double theta_hint = -1.0);

// Continuation of t_level_point over an increasing level schedule with
// filling data per level, seeded from the previous angle.
struct TracePoint {
    double s = 0.0;
    Complex c;
    Complex c_omega;
    FillingData filling;
};

std::vector<TracePoint> boundary_trace(double t, std::span<const double> s_list);

// The closed hexagonal Dehn filling space {|mu|<=2, |lambda|<=2, |mu+lambda|<=2}.
bool hexagon_contains(double mu, double lambda);

namespace detail {

// Coefficients from an already solved moduli point.
FillingData filling_from(const ModuliPoint& mp);

// Extended-Euclid companion pair (r, s) with p*s - q*r = 1; s is the smallest
// nonnegative representative when q != 0, and (0, p) when q = 0.
std::pair<long long, long long> filling_companion(long long p, long long q);

}  // namespace detail

}  // namespace dehnfill
