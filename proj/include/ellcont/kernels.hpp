#pragma once

#include <cstddef>
#include <string_view>

namespace ellcont::kernels {

enum class Backend { scalar, avx2, neon };

// Inner-loop kernels, one table per backend. Elementwise and stencil kernels
// are written so every backend produces identical bit patterns (same
// expression trees, no fused multiply-add). dot_blocked uses a fixed
// 4-accumulator bracketing that is likewise shared by all backends; it differs
// from the canonical sequential dot() only in summation order.
//
// Row pointers passed to the difference kernels point at interior data inside
// a zero-padded buffer (ring width >= 2), so u[-2] .. u[n+1] are always valid.
struct Table {
    // y += a*x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // y = a*x + b*y
    void (*axpby)(double a, const double* x, double b, double* y, std::size_t n);
    // out = x - y
    void (*xmy)(const double* x, const double* y, double* out, std::size_t n);
    // x *= a
    void (*scal)(double a, double* x, std::size_t n);
    // out += c[i]*u[i]
    void (*fmadd)(const double* c, const double* u, double* out, std::size_t n);
    // 4-lane blocked dot product
    double (*dot_blocked)(const double* x, const double* y, std::size_t n);

    // centered first difference along the contiguous axis
    void (*cdiff_along)(const double* u, double* out, std::size_t n, double inv2h);
    // centered first difference across rows: out = (up - um)*inv2h
    void (*cdiff_cross)(const double* up, const double* um, double* out, std::size_t n, double inv2h);
    // 3-point second difference along the row: out = (2u - u[-1] - u[+1])*invh2
    void (*sdiff_along)(const double* u, double* out, std::size_t n, double invh2);
    // 3-point second difference across rows
    void (*sdiff_cross)(const double* u0, const double* um, const double* up, double* out, std::size_t n, double invh2);
    // 5-point (stride 2) second difference along the row, scaled by 1/(4h^2)
    void (*s2diff_along)(const double* u, double* out, std::size_t n, double inv4h2);
    void (*s2diff_cross)(const double* u0, const double* um2, const double* up2, double* out, std::size_t n, double inv4h2);

    // fused constant-coefficient negative Laplacian rows
    void (*lap2d_row)(const double* u, const double* um, const double* up, double* out, std::size_t n, double invh2);
    void (*lap3d_row)(const double* u, const double* um1, const double* up1,
                      const double* um2, const double* up2, double* out, std::size_t n, double invh2);
};

/// Canonical sequential dot product; the reduction order used by all
/// deterministic inner products and norms regardless of backend.
double dot(const double* x, const double* y, std::size_t n);

const Table& active();
Backend active_backend();

/// Select a backend explicitly. Returns false (and leaves the selection
/// unchanged) if the backend is not supported on this host.
bool set_backend(Backend b);
bool backend_available(Backend b);
std::string_view backend_name(Backend b);
const Table& table(Backend b);

/// Opt-in: route inner products through dot_blocked (may differ from the
/// canonical order in the last bits). Off by default.
void set_fast_reductions(bool on);
bool fast_reductions();

/// Dot product honoring the fast-reductions switch.
double reduce_dot(const double* x, const double* y, std::size_t n);

extern const Table scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const Table avx2_table;
#endif
#if defined(__aarch64__)
extern const Table neon_table;
#endif

} // namespace ellcont::kernels
