#include "dehnfill.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "filling.hpp"
#include "moduli.hpp"
#include "packing.hpp"
#include "selftest.hpp"

namespace {

thread_local std::string g_last_error;

dehnfill::Complex from_c(df_complex z) { return {z.re, z.im}; }
df_complex to_c(dehnfill::Complex z) { return {z.real(), z.imag()}; }

// Runs body, translating exceptions into status codes + the thread-local
// message. DF_OK clears the message.
template <typename Fn>
df_status guarded(Fn&& body) {
    try {
        body();
        g_last_error.clear();
        return DF_OK;
    } catch (const dehnfill::DomainError& e) {
        g_last_error = e.what();
        return DF_ERR_DOMAIN;
    } catch (const dehnfill::NumericError& e) {
        g_last_error = e.what();
        return DF_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DF_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DF_ERR_NUMERIC;
    }
}

df_status require(bool ok, const char* what) {
    if (ok) return DF_OK;
    g_last_error = what;
    return DF_ERR_INVALID;
}

df_circle to_c(const dehnfill::CircleSpec& cs) {
    df_circle out;
    out.center = to_c(cs.center);
    out.radius = cs.radius;
    out.m = cs.m;
    out.n = cs.n;
    out.kind = cs.kind == dehnfill::CircleKind::Dual ? 1 : 0;
    return out;
}

}  // namespace

struct df_packing {
    dehnfill::PackingSpec spec;
};

extern "C" {

const char* df_version(void) { return "0.1.0"; }

const char* df_last_error(void) { return g_last_error.c_str(); }

df_status df_level_value(df_complex z, double* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = dehnfill::level_value(from_c(z)); });
}

df_status df_level_radius(double s, double theta, double* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = dehnfill::level_radius(s, theta); });
}

df_status df_level_point(double s, double theta, df_complex* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = to_c(dehnfill::level_point(s, theta)); });
}

df_status df_solve_parallelogram(df_complex c, df_moduli_point* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] {
        dehnfill::ModuliPoint mp = dehnfill::solve_parallelogram(from_c(c));
        out->c = to_c(mp.c);
        out->omega = to_c(mp.omega);
        out->c1 = to_c(mp.c1);
        out->c2 = to_c(mp.c2);
        out->s = mp.s;
        out->region = mp.region.code();
    });
}

df_status df_fiber_partner(df_complex c, df_complex* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = to_c(dehnfill::fiber_partner(from_c(c))); });
}

df_status df_rotate6(df_complex c, df_complex* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = to_c(dehnfill::rotate6(from_c(c))); });
}

df_status df_special_points(double s, df_complex out[12]) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] {
        auto pts = dehnfill::special_points(s);
        for (int j = 0; j < 12; ++j) out[j] = to_c(pts[static_cast<std::size_t>(j)]);
    });
}

df_status df_locus_point(int j, double s, df_complex* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = to_c(dehnfill::locus_point(j, s)); });
}

df_status df_classify(df_complex c, int* region) {
    if (df_status st = require(region != nullptr, "null output pointer")) return st;
    return guarded([&] { *region = dehnfill::classify(from_c(c)).code(); });
}

const char* df_region_name(int region) {
    static thread_local std::string name;
    if (region < 0 || region > 24) return nullptr;
    name = dehnfill::RegionId::from_code(region).name();
    return name.c_str();
}

df_status df_filling_coefficients(df_complex c, df_filling* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] {
        dehnfill::FillingData fd = dehnfill::filling_coefficients(from_c(c));
        out->mu = fd.mu;
        out->lambda = fd.lambda;
        out->t = fd.t;
    });
}

df_status df_slope_t(df_complex c, double* t) {
    if (df_status st = require(t != nullptr, "null output pointer")) return st;
    return guarded([&] { *t = dehnfill::slope_t(from_c(c)); });
}

df_status df_cone_data(df_complex c, long long p, long long q, double* angle, double* length) {
    return guarded([&] {
        dehnfill::ConeData cd = dehnfill::cone_data(from_c(c), p, q);
        if (angle) *angle = cd.angle;
        if (length) *length = cd.length;
    });
}

df_status df_t_level_point(double t, double s, double theta_hint, df_complex* out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    return guarded([&] { *out = to_c(dehnfill::t_level_point(t, s, theta_hint)); });
}

int df_hexagon_contains(double mu, double lambda) {
    return dehnfill::hexagon_contains(mu, lambda) ? 1 : 0;
}

df_status df_packing_build_affine(df_complex c, int m_min, int m_max, int n_min, int n_max,
                                  df_packing** out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    *out = nullptr;
    return guarded([&] {
        auto* p = new df_packing{dehnfill::build_affine_packing(
            from_c(c), dehnfill::Window{m_min, m_max, n_min, n_max})};
        *out = p;
    });
}

df_status df_packing_build_euclidean(int m_min, int m_max, int n_min, int n_max,
                                     df_packing** out) {
    if (df_status st = require(out != nullptr, "null output pointer")) return st;
    *out = nullptr;
    return guarded([&] {
        auto* p = new df_packing{dehnfill::build_euclidean_packing(
            dehnfill::Window{m_min, m_max, n_min, n_max})};
        *out = p;
    });
}

void df_packing_free(df_packing* p) { delete p; }

int df_packing_circle_count(const df_packing* p) {
    return p ? static_cast<int>(p->spec.circles.size()) : 0;
}

int df_packing_dual_count(const df_packing* p) {
    return p ? static_cast<int>(p->spec.duals.size()) : 0;
}

int df_packing_edge_count(const df_packing* p) {
    return p ? static_cast<int>(p->spec.adjacency.size()) : 0;
}

df_status df_packing_circle(const df_packing* p, int i, df_circle* out) {
    if (df_status st = require(p && out, "null pointer")) return st;
    if (df_status st = require(i >= 0 && i < df_packing_circle_count(p), "circle index out of range"))
        return st;
    *out = to_c(p->spec.circles[static_cast<std::size_t>(i)]);
    g_last_error.clear();
    return DF_OK;
}

df_status df_packing_dual(const df_packing* p, int i, df_circle* out) {
    if (df_status st = require(p && out, "null pointer")) return st;
    if (df_status st = require(i >= 0 && i < df_packing_dual_count(p), "dual index out of range"))
        return st;
    *out = to_c(p->spec.duals[static_cast<std::size_t>(i)]);
    g_last_error.clear();
    return DF_OK;
}

df_status df_packing_edge(const df_packing* p, int i, int* a, int* b) {
    if (df_status st = require(p && a && b, "null pointer")) return st;
    if (df_status st = require(i >= 0 && i < df_packing_edge_count(p), "edge index out of range"))
        return st;
    auto [x, y] = p->spec.adjacency[static_cast<std::size_t>(i)];
    *a = x;
    *b = y;
    g_last_error.clear();
    return DF_OK;
}

df_status df_packing_info(const df_packing* p, df_complex* c, df_complex* omega, double* kappa,
                          df_complex* gen_a, df_complex* gen_b, int* euclidean) {
    if (df_status st = require(p != nullptr, "null packing")) return st;
    if (c) *c = to_c(p->spec.c);
    if (omega) *omega = to_c(p->spec.omega);
    if (kappa) *kappa = p->spec.kappa;
    if (gen_a) *gen_a = to_c(p->spec.gen_a);
    if (gen_b) *gen_b = to_c(p->spec.gen_b);
    if (euclidean) *euclidean = p->spec.euclidean ? 1 : 0;
    g_last_error.clear();
    return DF_OK;
}

df_status df_packing_validate(const df_packing* p, df_validation* out) {
    if (df_status st = require(p && out, "null pointer")) return st;
    return guarded([&] {
        dehnfill::ValidationReport rep = dehnfill::validate_packing(p->spec);
        out->max_tangency_residual = rep.max_tangency_residual;
        out->max_orthogonality_residual = rep.max_orthogonality_residual;
        out->local_overlap_violations = rep.local_overlap_violations;
    });
}

int df_selftest_run(int inject_kappa_fault, df_selftest_line_fn cb, void* user) {
    dehnfill::selftest::Options opts;
    opts.inject_kappa_fault = inject_kappa_fault != 0;
    auto results = dehnfill::selftest::run_all(opts);
    if (cb)
        for (const auto& r : results)
            cb(r.id, r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str(), user);
    return dehnfill::selftest::all_passed(results) ? 1 : 0;
}

}  // extern "C"
