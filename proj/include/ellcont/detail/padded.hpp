#pragma once

// Zero-padded working buffers for stencil kernels. Interior data is embedded
// in a (n+2*kPad)^dim array whose ring of width kPad stays zero, realizing the
// Dirichlet extension; every difference kernel may then read up to two cells
// past an interior row without branching.

#include <cstddef>
#include <span>
#include <vector>

#include "ellcont/grid.hpp"

namespace ellcont::detail {

inline constexpr int kPad = 2;

struct Padded {
    int dim = 2;
    int n = 0;
    std::ptrdiff_t p = 0;   // padded extent per axis
    std::vector<double> buf;

    explicit Padded(const Grid& g) : dim(g.dim), n(g.n), p(g.n + 2 * kPad) {
        std::size_t total = 1;
        for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(p);
        buf.assign(total, 0.0);
    }

    /// Row count of the interior seen as rows along the last (contiguous) axis.
    std::size_t rows() const {
        std::size_t r = 1;
        for (int a = 0; a + 1 < dim; ++a) r *= static_cast<std::size_t>(n);
        return r;
    }

    /// Offset of interior row r inside the padded buffer.
    std::ptrdiff_t row_base(std::size_t r) const {
        if (dim == 2) {
            return (static_cast<std::ptrdiff_t>(r) + kPad) * p + kPad;
        }
        std::ptrdiff_t i0 = static_cast<std::ptrdiff_t>(r) / n;
        std::ptrdiff_t i1 = static_cast<std::ptrdiff_t>(r) % n;
        return ((i0 + kPad) * p + (i1 + kPad)) * p + kPad;
    }

    /// Padded-space displacement of a per-axis stencil offset.
    std::ptrdiff_t displacement(const std::array<int, 3>& off) const {
        if (dim == 2) return off[0] * p + off[1];
        return (off[0] * p + off[1]) * p + off[2];
    }

    /// Padded-space stride of one step along an axis.
    std::ptrdiff_t stride(int axis) const {
        std::ptrdiff_t s = 1;
        for (int a = dim - 1; a > axis; --a) s *= p;
        return s;
    }

    void load(std::span<const double> interior) {
        const std::size_t nr = rows();
        for (std::size_t r = 0; r < nr; ++r) {
            const double* src = interior.data() + r * static_cast<std::size_t>(n);
            double* dst = buf.data() + row_base(r);
            for (int i = 0; i < n; ++i) dst[i] = src[i];
        }
    }
};

} // namespace ellcont::detail
