#include "ellcont/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

// NEON variants, two lanes per op. Same expression trees as the scalar
// reference (mul then add, no fused ops), so results match bitwise.

namespace ellcont::kernels {
namespace {

void axpy_v(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vy = vld1q_f64(y + i);
        vy = vaddq_f64(vy, vmulq_f64(va, vld1q_f64(x + i)));
        vst1q_f64(y + i, vy);
    }
    for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void axpby_v(double a, const double* x, double b, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vaddq_f64(vmulq_f64(va, vld1q_f64(x + i)), vmulq_f64(vb, vld1q_f64(y + i)));
        vst1q_f64(y + i, t);
    }
    for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void xmy_v(const double* x, const double* y, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) out[i] = x[i] - y[i];
}

void scal_v(double a, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] = a * x[i];
}

void fmadd_v(const double* c, const double* u, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vo = vld1q_f64(out + i);
        vo = vaddq_f64(vo, vmulq_f64(vld1q_f64(c + i), vld1q_f64(u + i)));
        vst1q_f64(out + i, vo);
    }
    for (; i < n; ++i) out[i] = out[i] + c[i] * u[i];
}

double dot_blocked_v(const double* x, const double* y, std::size_t n) {
    // lanes [a0,a1] and [a2,a3]; combine as (a0+a2)+(a1+a3)
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
    }
    float64x2_t pair = vaddq_f64(acc01, acc23);
    double s = vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
    for (; i < n; ++i) s = s + x[i] * y[i];
    return s;
}

void cdiff_along_v(const double* u, double* out, std::size_t n, double inv2h) {
    const float64x2_t vs = vdupq_n_f64(inv2h);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(u + i + 1), vld1q_f64(u + i - 1));
        vst1q_f64(out + i, vmulq_f64(d, vs));
    }
    for (; i < n; ++i) out[i] = (u[i + 1] - u[i - 1]) * inv2h;
}

void cdiff_cross_v(const double* up, const double* um, double* out, std::size_t n, double inv2h) {
    const float64x2_t vs = vdupq_n_f64(inv2h);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(up + i), vld1q_f64(um + i));
        vst1q_f64(out + i, vmulq_f64(d, vs));
    }
    for (; i < n; ++i) out[i] = (up[i] - um[i]) * inv2h;
}

void sdiff_along_v(const double* u, double* out, std::size_t n, double invh2) {
    const float64x2_t vs = vdupq_n_f64(invh2);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vmulq_f64(two, vld1q_f64(u + i));
        t = vsubq_f64(t, vld1q_f64(u + i - 1));
        t = vsubq_f64(t, vld1q_f64(u + i + 1));
        vst1q_f64(out + i, vmulq_f64(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u[i] - u[i - 1] - u[i + 1]) * invh2;
}

void sdiff_cross_v(const double* u0, const double* um, const double* up, double* out, std::size_t n, double invh2) {
    const float64x2_t vs = vdupq_n_f64(invh2);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vmulq_f64(two, vld1q_f64(u0 + i));
        t = vsubq_f64(t, vld1q_f64(um + i));
        t = vsubq_f64(t, vld1q_f64(up + i));
        vst1q_f64(out + i, vmulq_f64(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u0[i] - um[i] - up[i]) * invh2;
}

void s2diff_along_v(const double* u, double* out, std::size_t n, double inv4h2) {
    const float64x2_t vs = vdupq_n_f64(inv4h2);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vmulq_f64(two, vld1q_f64(u + i));
        t = vsubq_f64(t, vld1q_f64(u + i - 2));
        t = vsubq_f64(t, vld1q_f64(u + i + 2));
        vst1q_f64(out + i, vmulq_f64(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u[i] - u[i - 2] - u[i + 2]) * inv4h2;
}

void s2diff_cross_v(const double* u0, const double* um2, const double* up2, double* out, std::size_t n, double inv4h2) {
    const float64x2_t vs = vdupq_n_f64(inv4h2);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vmulq_f64(two, vld1q_f64(u0 + i));
        t = vsubq_f64(t, vld1q_f64(um2 + i));
        t = vsubq_f64(t, vld1q_f64(up2 + i));
        vst1q_f64(out + i, vmulq_f64(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u0[i] - um2[i] - up2[i]) * inv4h2;
}

void lap2d_row_v(const double* u, const double* um, const double* up, double* out, std::size_t n, double invh2) {
    const float64x2_t vs = vdupq_n_f64(invh2);
    const float64x2_t four = vdupq_n_f64(4.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vsubq_f64(vmulq_f64(four, vld1q_f64(u + i)), vld1q_f64(u + i - 1));
        t = vsubq_f64(t, vld1q_f64(u + i + 1));
        t = vsubq_f64(t, vld1q_f64(um + i));
        t = vsubq_f64(t, vld1q_f64(up + i));
        vst1q_f64(out + i, vmulq_f64(vs, t));
    }
    for (; i < n; ++i) {
        double t = 4.0 * u[i] - u[i - 1];
        t = t - u[i + 1];
        t = t - um[i];
        t = t - up[i];
        out[i] = invh2 * t;
    }
}

void lap3d_row_v(const double* u, const double* um1, const double* up1,
                 const double* um2, const double* up2, double* out, std::size_t n, double invh2) {
    const float64x2_t vs = vdupq_n_f64(invh2);
    const float64x2_t six = vdupq_n_f64(6.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vsubq_f64(vmulq_f64(six, vld1q_f64(u + i)), vld1q_f64(u + i - 1));
        t = vsubq_f64(t, vld1q_f64(u + i + 1));
        t = vsubq_f64(t, vld1q_f64(um1 + i));
        t = vsubq_f64(t, vld1q_f64(up1 + i));
        t = vsubq_f64(t, vld1q_f64(um2 + i));
        t = vsubq_f64(t, vld1q_f64(up2 + i));
        vst1q_f64(out + i, vmulq_f64(vs, t));
    }
    for (; i < n; ++i) {
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

const Table neon_table = {
    axpy_v,  axpby_v,   xmy_v,         scal_v,         fmadd_v,        dot_blocked_v,
    cdiff_along_v, cdiff_cross_v, sdiff_along_v, sdiff_cross_v, s2diff_along_v, s2diff_cross_v,
    lap2d_row_v, lap3d_row_v,
};

} // namespace ellcont::kernels

#endif // aarch64
