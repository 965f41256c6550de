#include "packing.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "errors.hpp"

namespace dehnfill {

namespace {

constexpr double kPi = std::numbers::pi;

void require_window(const Window& w) {
    if (w.m_min > w.m_max || w.n_min > w.n_max)
        throw std::invalid_argument("empty packing window");
    long long cells = (static_cast<long long>(w.m_max) - w.m_min + 1) *
                      (static_cast<long long>(w.n_max) - w.n_min + 1);
    if (cells > 2'000'000) throw std::invalid_argument("packing window too large");
}

int index_of(const Window& w, int m, int n) {
    int cols = w.n_max - w.n_min + 1;
    return (m - w.m_min) * cols + (n - w.n_min);
}

bool in_window(const Window& w, int m, int n) {
    return m >= w.m_min && m <= w.m_max && n >= w.n_min && n <= w.n_max;
}

// Tangency point of two externally tangent circles.
Complex tangency_point(const CircleSpec& a, const CircleSpec& b) {
    return a.center + (b.center - a.center) * (a.radius / (a.radius + b.radius));
}

// Circumcircle through three points, computed in a frame centered at a for
// conditioning at large developed magnitudes.
CircleSpec circumcircle(Complex a, Complex b, Complex c) {
    Complex u = b - a, v = c - a;
    double d = 2.0 * (u.real() * v.imag() - u.imag() * v.real());
    double scale = std::max(std::norm(u), std::norm(v));
    if (!(std::fabs(d) > 1e-14 * scale))
        throw NumericError("collinear tangency points: no circumscribed circle");
    double nu = std::norm(u), nv = std::norm(v);
    Complex rel{(v.imag() * nu - u.imag() * nv) / d,
                (u.real() * nv - v.real() * nu) / d};
    CircleSpec out;
    out.center = a + rel;
    out.radius = std::abs(rel);
    out.kind = CircleKind::Dual;
    return out;
}

// Shared assembly: adjacency edges in the three positive lattice directions.
void build_adjacency(PackingSpec& p) {
    static constexpr int dirs[3][2] = {{1, 0}, {0, 1}, {-1, 1}};
    for (const CircleSpec& cs : p.circles) {
        for (auto [dm, dn] : dirs) {
            int m2 = cs.m + dm, n2 = cs.n + dn;
            if (!in_window(p.window, m2, n2)) continue;
            p.adjacency.emplace_back(index_of(p.window, cs.m, cs.n),
                                     index_of(p.window, m2, n2));
        }
    }
}

}  // namespace

std::vector<CircleSpec> dual_circles(const PackingSpec& p) {
    std::vector<CircleSpec> duals;
    const Window& w = p.window;
    auto circle = [&](int m, int n) -> const CircleSpec& {
        return p.circles[static_cast<std::size_t>(index_of(w, m, n))];
    };
    for (int m = w.m_min; m < w.m_max; ++m) {
        for (int n = w.n_min; n < w.n_max; ++n) {
            // up triangle (m,n), (m+1,n), (m,n+1); down triangle (m+1,n),
            // (m,n+1), (m+1,n+1) — the two interstice classes
            const CircleSpec* tris[2][3] = {
                {&circle(m, n), &circle(m + 1, n), &circle(m, n + 1)},
                {&circle(m + 1, n), &circle(m, n + 1), &circle(m + 1, n + 1)},
            };
            for (const auto& tri : tris) {
                CircleSpec d = circumcircle(tangency_point(*tri[0], *tri[1]),
                                            tangency_point(*tri[1], *tri[2]),
                                            tangency_point(*tri[2], *tri[0]));
                d.m = m;
                d.n = n;
                duals.push_back(d);
            }
        }
    }
    return duals;
}

namespace {

void attach_duals(PackingSpec& p) {
    p.duals = dual_circles(p);
    const Window& w = p.window;
    for (int m = w.m_min; m < w.m_max; ++m) {
        for (int n = w.n_min; n < w.n_max; ++n) {
            p.dual_parents.push_back({index_of(w, m, n), index_of(w, m + 1, n),
                                      index_of(w, m, n + 1)});
            p.dual_parents.push_back({index_of(w, m + 1, n), index_of(w, m, n + 1),
                                      index_of(w, m + 1, n + 1)});
        }
    }
}

}  // namespace

PackingSpec build_affine_packing(Complex c, Window w) {
    require_window(w);

    ModuliPoint mp = detail::solve_core(c);
    PackingSpec p;
    p.c = c;
    p.omega = mp.omega;
    p.kappa = std::sqrt(mp.s * (2.0 - mp.s));
    p.euclidean = false;
    p.gen_a = std::exp(c);
    p.gen_b = std::exp(mp.c1);
    p.window = w;

    // exponent range guard: |Re(m c + n c omega)| is maximized at a corner
    for (int m : {w.m_min, w.m_max}) {
        for (int n : {w.n_min, w.n_max}) {
            double e = m * c.real() + n * mp.c1.real();
            if (std::fabs(e) > 300.0) {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "window exceeds floating range: |%d Re c + %d Re(c omega)| = %.3g > 300",
                              m, n, std::fabs(e));
                throw DomainError(buf);
            }
        }
    }

    for (int m = w.m_min; m <= w.m_max; ++m) {
        for (int n = w.n_min; n <= w.n_max; ++n) {
            Complex e = static_cast<double>(m) * c + static_cast<double>(n) * mp.c1;
            CircleSpec cs;
            cs.center = std::exp(e);
            cs.radius = p.kappa * std::exp(e.real());
            cs.m = m;
            cs.n = n;
            cs.kind = CircleKind::Packing;
            p.circles.push_back(cs);
        }
    }
    build_adjacency(p);
    attach_duals(p);
    return p;
}

PackingSpec build_euclidean_packing(Window w) {
    require_window(w);

    PackingSpec p;
    p.c = Complex{0.0, 0.0};
    p.omega = std::polar(1.0, kPi / 3.0);
    p.kappa = 0.0;
    p.euclidean = true;
    p.gen_a = Complex{1.0, 0.0};  // translations, not multipliers
    p.gen_b = p.omega;
    p.window = w;

    for (int m = w.m_min; m <= w.m_max; ++m) {
        for (int n = w.n_min; n <= w.n_max; ++n) {
            CircleSpec cs;
            cs.center = static_cast<double>(m) + static_cast<double>(n) * p.omega;
            cs.radius = 0.5;
            cs.m = m;
            cs.n = n;
            cs.kind = CircleKind::Packing;
            p.circles.push_back(cs);
        }
    }
    build_adjacency(p);
    attach_duals(p);
    return p;
}

ValidationReport validate_packing(const PackingSpec& p) {
    ValidationReport rep;

    for (auto [i, j] : p.adjacency) {
        const CircleSpec& a = p.circles[static_cast<std::size_t>(i)];
        const CircleSpec& b = p.circles[static_cast<std::size_t>(j)];
        double want = a.radius + b.radius;
        double res = std::fabs(std::abs(a.center - b.center) / want - 1.0);
        rep.max_tangency_residual = std::max(rep.max_tangency_residual, res);
    }

    for (std::size_t k = 0; k < p.duals.size(); ++k) {
        const CircleSpec& d = p.duals[k];
        for (int pi : p.dual_parents[k]) {
            const CircleSpec& a = p.circles[static_cast<std::size_t>(pi)];
            double want = d.radius * d.radius + a.radius * a.radius;
            double res = std::fabs((std::norm(d.center - a.center) - want) / want);
            rep.max_orthogonality_residual = std::max(rep.max_orthogonality_residual, res);
        }
    }

    // local embeddedness: nearby labels must not overlap (distant sheets of
    // the developed cover may legitimately project on top of each other)
    const Window& w = p.window;
    for (const CircleSpec& a : p.circles) {
        for (int dm = -2; dm <= 2; ++dm) {
            for (int dn = -2; dn <= 2; ++dn) {
                if (std::abs(dm) + std::abs(dn) > 2) continue;
                if (dm < 0 || (dm == 0 && dn <= 0)) continue;  // count each pair once
                int m2 = a.m + dm, n2 = a.n + dn;
                if (!in_window(w, m2, n2)) continue;
                const CircleSpec& b = p.circles[static_cast<std::size_t>(index_of(w, m2, n2))];
                double sum = a.radius + b.radius;
                if (std::abs(a.center - b.center) < sum * (1.0 - 1e-9))
                    ++rep.local_overlap_violations;
            }
        }
    }
    return rep;
}

}  // namespace dehnfill
