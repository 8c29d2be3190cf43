#include "ellcont/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2 variants. Each lane evaluates exactly the scalar expression tree
// (mul then add, no FMA), so outputs match the scalar kernels bitwise.
// Scalar tails repeat the reference loop bodies verbatim.

namespace ellcont::kernels {
namespace {

void axpy_v(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void axpby_v(double a, const double* x, double b, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                                  _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void xmy_v(const double* x, const double* y, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) out[i] = x[i] - y[i];
}

void scal_v(double a, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] = a * x[i];
}

void fmadd_v(const double* c, const double* u, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vo = _mm256_loadu_pd(out + i);
        vo = _mm256_add_pd(vo, _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(u + i)));
        _mm256_storeu_pd(out + i, vo);
    }
    for (; i < n; ++i) out[i] = out[i] + c[i] * u[i];
}

double dot_blocked_v(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    // (a0+a2) + (a1+a3), same bracketing as the scalar 4-accumulator loop
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d pair = _mm_add_pd(lo, hi);
    double s = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
    for (; i < n; ++i) s = s + x[i] * y[i];
    return s;
}

void cdiff_along_v(const double* u, double* out, std::size_t n, double inv2h) {
    const __m256d vs = _mm256_set1_pd(inv2h);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(u + i + 1), _mm256_loadu_pd(u + i - 1));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
    }
    for (; i < n; ++i) out[i] = (u[i + 1] - u[i - 1]) * inv2h;
}

void cdiff_cross_v(const double* up, const double* um, double* out, std::size_t n, double inv2h) {
    const __m256d vs = _mm256_set1_pd(inv2h);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(up + i), _mm256_loadu_pd(um + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
    }
    for (; i < n; ++i) out[i] = (up[i] - um[i]) * inv2h;
}

void sdiff_along_v(const double* u, double* out, std::size_t n, double invh2) {
    const __m256d vs = _mm256_set1_pd(invh2);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(two, _mm256_loadu_pd(u + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(u + i - 1));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(u + i + 1));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u[i] - u[i - 1] - u[i + 1]) * invh2;
}

void sdiff_cross_v(const double* u0, const double* um, const double* up, double* out, std::size_t n, double invh2) {
    const __m256d vs = _mm256_set1_pd(invh2);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(two, _mm256_loadu_pd(u0 + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(um + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(up + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u0[i] - um[i] - up[i]) * invh2;
}

void s2diff_along_v(const double* u, double* out, std::size_t n, double inv4h2) {
    const __m256d vs = _mm256_set1_pd(inv4h2);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(two, _mm256_loadu_pd(u + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(u + i - 2));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(u + i + 2));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u[i] - u[i - 2] - u[i + 2]) * inv4h2;
}

void s2diff_cross_v(const double* u0, const double* um2, const double* up2, double* out, std::size_t n, double inv4h2) {
    const __m256d vs = _mm256_set1_pd(inv4h2);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(two, _mm256_loadu_pd(u0 + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(um2 + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(up2 + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(t, vs));
    }
    for (; i < n; ++i) out[i] = (2.0 * u0[i] - um2[i] - up2[i]) * inv4h2;
}

void lap2d_row_v(const double* u, const double* um, const double* up, double* out, std::size_t n, double invh2) {
    const __m256d vs = _mm256_set1_pd(invh2);
    const __m256d four = _mm256_set1_pd(4.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_sub_pd(_mm256_mul_pd(four, _mm256_loadu_pd(u + i)), _mm256_loadu_pd(u + i - 1));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(u + i + 1));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(um + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(up + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, t));
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
    const __m256d vs = _mm256_set1_pd(invh2);
    const __m256d six = _mm256_set1_pd(6.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_sub_pd(_mm256_mul_pd(six, _mm256_loadu_pd(u + i)), _mm256_loadu_pd(u + i - 1));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(u + i + 1));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(um1 + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(up1 + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(um2 + i));
        t = _mm256_sub_pd(t, _mm256_loadu_pd(up2 + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, t));
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

const Table avx2_table = {
    axpy_v,  axpby_v,   xmy_v,         scal_v,         fmadd_v,        dot_blocked_v,
    cdiff_along_v, cdiff_cross_v, sdiff_along_v, sdiff_cross_v, s2diff_along_v, s2diff_cross_v,
    lap2d_row_v, lap3d_row_v,
};

} // namespace ellcont::kernels

#endif // x86_64
