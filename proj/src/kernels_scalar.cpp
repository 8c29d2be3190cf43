#include "ellcont/kernels.hpp"

// Reference kernels. The SIMD variants transliterate these expression trees
// lane by lane, so results agree bitwise (see tests/test_kernels.cpp).

namespace ellcont::kernels {
namespace {

void axpy_s(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void axpby_s(double a, const double* x, double b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void xmy_s(const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - y[i];
}

void scal_s(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = a * x[i];
}

void fmadd_s(const double* c, const double* u, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] + c[i] * u[i];
}

double dot_blocked_s(const double* x, const double* y, std::size_t n) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a0 = a0 + x[i] * y[i];
        a1 = a1 + x[i + 1] * y[i + 1];
        a2 = a2 + x[i + 2] * y[i + 2];
        a3 = a3 + x[i + 3] * y[i + 3];
    }
    double s = (a0 + a2) + (a1 + a3);
    for (; i < n; ++i) s = s + x[i] * y[i];
    return s;
}

void cdiff_along_s(const double* u, double* out, std::size_t n, double inv2h) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (u[i + 1] - u[i - 1]) * inv2h;
}

void cdiff_cross_s(const double* up, const double* um, double* out, std::size_t n, double inv2h) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (up[i] - um[i]) * inv2h;
}

void sdiff_along_s(const double* u, double* out, std::size_t n, double invh2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (2.0 * u[i] - u[i - 1] - u[i + 1]) * invh2;
}

void sdiff_cross_s(const double* u0, const double* um, const double* up, double* out, std::size_t n, double invh2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (2.0 * u0[i] - um[i] - up[i]) * invh2;
}

void s2diff_along_s(const double* u, double* out, std::size_t n, double inv4h2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (2.0 * u[i] - u[i - 2] - u[i + 2]) * inv4h2;
}

void s2diff_cross_s(const double* u0, const double* um2, const double* up2, double* out, std::size_t n, double inv4h2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (2.0 * u0[i] - um2[i] - up2[i]) * inv4h2;
}

void lap2d_row_s(const double* u, const double* um, const double* up, double* out, std::size_t n, double invh2) {
    for (std::size_t i = 0; i < n; ++i) {
        double t = 4.0 * u[i] - u[i - 1];
        t = t - u[i + 1];
        t = t - um[i];
        t = t - up[i];
        out[i] = invh2 * t;
    }
}

void lap3d_row_s(const double* u, const double* um1, const double* up1,
                 const double* um2, const double* up2, double* out, std::size_t n, double invh2) {
    for (std::size_t i = 0; i < n; ++i) {
        double t = 6.0 * u[i] - u[i - 1];
        t = t - u[i + 1];
        t = t - um1[i];
        t = t - up1[i];
        t = t - um2[i];
        t = t - up2[i];
        out[i] = invh2 * t;
    }
}

} // namespace

const Table scalar_table = {
    axpy_s,  axpby_s,   xmy_s,         scal_s,         fmadd_s,        dot_blocked_s,
    cdiff_along_s, cdiff_cross_s, sdiff_along_s, sdiff_cross_s, s2diff_along_s, s2diff_cross_s,
    lap2d_row_s, lap3d_row_s,
};

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s = s + x[i] * y[i];
    return s;
}

} // namespace ellcont::kernels
