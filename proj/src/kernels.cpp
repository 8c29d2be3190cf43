#include "ellcont/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ellcont::kernels {
namespace {

Backend detect_default() {
    if (const char* env = std::getenv("ELLCONT_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::avx2)) return Backend::avx2;
        if (std::strcmp(env, "neon") == 0 && backend_available(Backend::neon)) return Backend::neon;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (backend_available(Backend::avx2)) return Backend::avx2;
#endif
#if defined(__aarch64__)
    return Backend::neon;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect_default()};
    return b;
}

std::atomic<bool> fast_reductions_flag{false};

} // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Table& table(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return avx2_table;
#endif
#if defined(__aarch64__)
        case Backend::neon: return neon_table;
#endif
        default: return scalar_table;
    }
}

const Table& active() { return table(current().load(std::memory_order_relaxed)); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

bool set_backend(Backend b) {
    if (!backend_available(b)) return false;
    current().store(b, std::memory_order_relaxed);
    return true;
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "scalar";
}

void set_fast_reductions(bool on) { fast_reductions_flag.store(on, std::memory_order_relaxed); }
bool fast_reductions() { return fast_reductions_flag.load(std::memory_order_relaxed); }

double reduce_dot(const double* x, const double* y, std::size_t n) {
    if (fast_reductions()) return active().dot_blocked(x, y, n);
    return dot(x, y, n);
}

} // namespace ellcont::kernels
