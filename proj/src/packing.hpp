#pragma once

#include <array>
#include <utility>
#include <vector>

#include "moduli.hpp"

namespace dehnfill {

enum class CircleKind { Packing, Dual };

struct CircleSpec {
    Complex center;
    double radius = 0.0;
    int m = 0;  // lattice label
    int n = 0;
    CircleKind kind = CircleKind::Packing;
};

// Inclusive lattice index ranges for developed circles.
struct Window {
    int m_min = -2, m_max = 2;
    int n_min = -2, n_max = 2;
};

// A developed one-circle packing. Affine case: circle (m,n) is centered at
// e^{m c + n c omega} with radius kappa * |center|, kappa = sqrt(s(2-s)); the
// holonomy generators act as multiplication by gen_a = e^c, gen_b =
// e^{c omega}. Euclidean case (c = 0): unit lattice m + n e^{i pi/3} of
// radius-1/2 circles, gen_a/gen_b are the two translations.
struct PackingSpec {
    Complex c;
    Complex omega;
    double kappa = 0.0;
    bool euclidean = false;
    Complex gen_a;
    Complex gen_b;
    Window window;
    std::vector<CircleSpec> circles;
    std::vector<std::pair<int, int>> adjacency;        // index pairs into circles
    std::vector<CircleSpec> duals;
    std::vector<std::array<int, 3>> dual_parents;      // circle indices per dual
};

// Developed packing for nonzero c (omega solved internally). Throws a window
// error when |m Re c + n Re(c omega)| exceeds 300 anywhere in the window.
PackingSpec build_affine_packing(Complex c, Window w);

// The hexagonal packing of the plane restricted to the window.
PackingSpec build_euclidean_packing(Window w);

// Circumscribed circles of the interstices: one circle through the three
// pairwise tangency points of each mutually tangent triple (two triangle
// classes per lattice cell). Each is orthogonal to its three parents.
std::vector<CircleSpec> dual_circles(const PackingSpec& p);

struct ValidationReport {
    double max_tangency_residual = 0.0;      // relative: | |dz|/(r_i+r_j) - 1 |
    double max_orthogonality_residual = 0.0; // relative: | (d^2 - r^2 - R^2) / (r^2 + R^2) |
    int local_overlap_violations = 0;        // pairs with |dm|+|dn| <= 2 overlapping
};

ValidationReport validate_packing(const PackingSpec& p);

}  // namespace dehnfill
