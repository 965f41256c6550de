#pragma once

#include <array>
#include <string>

#include "levelset.hpp"

namespace dehnfill {

// Where a parameter c sits relative to the twelve loci l_1..l_12: on a locus,
// in one of the open sectors C_1..C_12 between consecutive loci, or at the
// origin (the complete structure).
struct RegionId {
    enum class Kind { Origin, Sector, Locus };

    Kind kind = Kind::Origin;
    int index = 0;  // 1..12 for Sector/Locus, 0 for Origin

    static RegionId origin() { return {Kind::Origin, 0}; }
    static RegionId sector(int k) { return {Kind::Sector, k}; }
    static RegionId locus(int j) { return {Kind::Locus, j}; }

    // 0 = origin, 1..12 = C_k, 13..24 = l_{code-12}
    int code() const;
    static RegionId from_code(int code);
    std::string name() const;  // "origin", "C1".."C12", "l1".."l12"

    bool operator==(const RegionId&) const = default;
};

// A solved point of the moduli space: c determines the Teichmueller parameter
// omega = c1/c through the parallelogram condition on the level curve
// L_{f(c)}. c1 and c2 lie on the same level curve as c, c1 = c + c2 up to one
// rounding, and (c, c1, c2) are in counterclockwise order.
struct ModuliPoint {
    Complex c;
    Complex omega;
    Complex c1;  // c * omega
    Complex c2;  // c * (omega - 1)
    double s = 0.0;
    RegionId region;
};

// Solve the parallelogram condition for c (nonzero, |Im c| < pi): the two
// intersections of L_s with its translate L_s + c are located by a 720-point
// angular scan plus bisection; the counterclockwise one becomes c1.
// The returned region is filled in via classify().
ModuliPoint solve_parallelogram(Complex c);

// -c; the other affine parameter over the same conformal torus.
Complex fiber_partner(Complex c);

// c * omega(c): the order-6 rotational symmetry of the moduli space.
// Three applications give -c, six give c back.
Complex rotate6(Complex c);

// The twelve special points p_1..p_12 of L_s in counterclockwise order
// starting on the positive real axis. p_1, p_7 sit on the real axis, p_4,
// p_10 on the imaginary axis; the rest come from the parallelograms over p_1
// and p_10, plus central symmetry p_{i+6} = -p_i.
std::array<Complex, 12> special_points(double s);

// p_j on L_s (j in 1..12).
Complex locus_point(int j, double s);

// Locus / sector membership of c. Angular ties within 1e-9 radians count as
// the locus; C_1 is the open arc from p_1 to p_2, counterclockwise.
RegionId classify(Complex c);

namespace detail {

// solve_parallelogram without the classify() call; used on hot paths that do
// not need the region tag.
ModuliPoint solve_core(Complex c);

}  // namespace detail

}  // namespace dehnfill
