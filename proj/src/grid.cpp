#include "ellcont/grid.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "ellcont/detail/padded.hpp"
#include "ellcont/errors.hpp"
#include "ellcont/kernels.hpp"

namespace ellcont {

Grid Grid::make(int dim, int n) {
    if (dim != 2 && dim != 3)
        throw ConfigError("grid: dim must be 2 or 3, got " + std::to_string(dim));
    if (n < 3)
        throw ConfigError("grid: n_per_axis must be >= 3, got " + std::to_string(n));
    Grid g;
    g.dim = dim;
    g.n = n;
    g.h = 1.0 / (n + 1);
    return g;
}

std::size_t Grid::flat(std::array<int, 3> idx) const {
    std::size_t f = 0;
    for (int a = 0; a < dim; ++a) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx[a]);
    return f;
}

double Grid::boundary_distance(std::array<int, 3> idx) const {
    double d = 1.0;
    for (int a = 0; a < dim; ++a) {
        double x = coord(idx[a]);
        d = std::min(d, std::min(x, 1.0 - x));
    }
    return d;
}

std::string Grid::id() const {
    return std::to_string(dim) + "d-n" + std::to_string(n);
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.nodes())
        throw PreconditionError("grid function: value count " + std::to_string(values_.size()) +
                                " does not match grid " + grid_.id());
}

GridFunction GridFunction::zeros(const Grid& g) {
    return GridFunction(g, std::vector<double>(g.nodes(), 0.0));
}

GridFunction GridFunction::sample(const Grid& g, const std::function<double(const std::array<double, 3>&)>& f) {
    std::vector<double> v(g.nodes());
    std::array<int, 3> idx{0, 0, 0};
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (int a = 0; a < g.dim; ++a) x[a] = g.coord(idx[a]);
        v[k] = f(x);
        for (int a = g.dim - 1; a >= 0; --a) {
            if (++idx[a] < g.n) break;
            idx[a] = 0;
        }
    }
    return GridFunction(g, std::move(v));
}

double GridFunction::value_at(std::array<int, 3> idx) const {
    for (int a = 0; a < grid_.dim; ++a)
        if (idx[a] < 0 || idx[a] >= grid_.n) return 0.0;
    return values_[grid_.flat(idx)];
}

void GridFunction::check_finite(const char* context) const {
    for (double v : values_)
        if (!std::isfinite(v))
            throw PreconditionError(std::string(context) + ": grid function contains a non-finite value");
}

double inner(const GridFunction& u, const GridFunction& v) {
    if (u.grid() != v.grid())
        throw PreconditionError("inner: grid mismatch (" + u.grid().id() + " vs " + v.grid().id() + ")");
    double hpow = 1.0;
    for (int a = 0; a < u.grid().dim; ++a) hpow *= u.grid().h;
    return hpow * kernels::reduce_dot(u.values().data(), v.values().data(), u.size());
}

namespace {

double hpow(const Grid& g) {
    double r = 1.0;
    for (int a = 0; a < g.dim; ++a) r *= g.h;
    return r;
}

// Apply the centered first difference along `axis` of padded data into an
// interior-sized array.
void centered_diff(const detail::Padded& pad, int axis, double inv2h, std::vector<double>& out) {
    const auto& K = kernels::active();
    const std::size_t nr = pad.rows();
    const int n = pad.n;
    out.resize(nr * static_cast<std::size_t>(n));
    const std::ptrdiff_t s = pad.stride(axis);
    for (std::size_t r = 0; r < nr; ++r) {
        const double* u = pad.buf.data() + pad.row_base(r);
        double* o = out.data() + r * static_cast<std::size_t>(n);
        if (axis == pad.dim - 1)
            K.cdiff_along(u, o, static_cast<std::size_t>(n), inv2h);
        else
            K.cdiff_cross(u + s, u - s, o, static_cast<std::size_t>(n), inv2h);
    }
}

void second_diff(const detail::Padded& pad, int axis, double invh2, std::vector<double>& out) {
    const auto& K = kernels::active();
    const std::size_t nr = pad.rows();
    const int n = pad.n;
    out.resize(nr * static_cast<std::size_t>(n));
    const std::ptrdiff_t s = pad.stride(axis);
    for (std::size_t r = 0; r < nr; ++r) {
        const double* u = pad.buf.data() + pad.row_base(r);
        double* o = out.data() + r * static_cast<std::size_t>(n);
        if (axis == pad.dim - 1)
            K.sdiff_along(u, o, static_cast<std::size_t>(n), invh2);
        else
            K.sdiff_cross(u, u - s, u + s, o, static_cast<std::size_t>(n), invh2);
    }
}

} // namespace

SobolevParts sobolev_parts(const Grid& g, std::span<const double> u) {
    SobolevParts parts;
    const double w = hpow(g);
    parts.l2 = w * kernels::dot(u.data(), u.data(), u.size());

    detail::Padded pad(g);
    pad.load(u);
    const double inv2h = 1.0 / (2.0 * g.h);
    const double invh2 = 1.0 / (g.h * g.h);

    std::vector<double> tmp, tmp2;
    detail::Padded pad2(g);
    for (int d = 0; d < g.dim; ++d) {
        centered_diff(pad, d, inv2h, tmp);
        parts.first += w * kernels::dot(tmp.data(), tmp.data(), tmp.size());
        second_diff(pad, d, invh2, tmp);
        parts.second_pure += w * kernels::dot(tmp.data(), tmp.data(), tmp.size());
    }
    for (int d = 0; d < g.dim; ++d) {
        for (int e = d + 1; e < g.dim; ++e) {
            centered_diff(pad, e, inv2h, tmp);
            pad2.load(tmp);
            centered_diff(pad2, d, inv2h, tmp2);
            parts.second_mixed += w * kernels::dot(tmp2.data(), tmp2.data(), tmp2.size());
        }
    }
    return parts;
}

double norm_h0(const GridFunction& u) {
    const double w = hpow(u.grid());
    return std::sqrt(w * kernels::dot(u.values().data(), u.values().data(), u.size()));
}

double norm_h1(const GridFunction& u) {
    auto parts = sobolev_parts(u.grid(), u.values());
    return std::sqrt(parts.l2 + parts.first);
}

double norm_h2(const GridFunction& u) {
    auto parts = sobolev_parts(u.grid(), u.values());
    return std::sqrt(parts.l2 + parts.first + parts.second_pure + parts.second_mixed);
}

double gradient_energy(const GridFunction& u) {
    const Grid& g = u.grid();
    const double w = hpow(g) / (g.h * g.h);
    detail::Padded pad(g);
    pad.load(u.values());

    // Sum over directed edges (x-he_d, x); the upper endpoint runs over the
    // interior plus the upper boundary layer, whose values are zero.
    double total = 0.0;
    const std::size_t nr = pad.rows();
    const int n = g.n;
    for (int d = 0; d < g.dim; ++d) {
        const std::ptrdiff_t s = pad.stride(d);
        for (std::size_t r = 0; r < nr; ++r) {
            const double* u0 = pad.buf.data() + pad.row_base(r);
            if (d == g.dim - 1) {
                for (int i = 0; i <= n; ++i) {
                    const double dv = u0[i] - u0[i - 1];
                    total += dv * dv;
                }
            } else {
                const int id = (g.dim == 2) ? static_cast<int>(r)
                                            : (d == 0 ? static_cast<int>(r) / n
                                                      : static_cast<int>(r) % n);
                for (int i = 0; i < n; ++i) {
                    const double dv = u0[i] - u0[i - s];
                    total += dv * dv;
                }
                // edge from the last interior layer up to the boundary
                if (id == n - 1)
                    for (int i = 0; i < n; ++i) total += u0[i] * u0[i];
            }
        }
    }
    return w * total;
}

void write_field(std::ostream& os, const GridFunction& u) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", u.grid().dim, u.grid().n, u.grid().h);
    os << buf;
    for (double v : u.values()) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        os << buf;
    }
}

GridFunction read_field(std::istream& is) {
    int dim = 0, n = 0;
    double h = 0.0;
    if (!(is >> dim >> n >> h)) throw ConfigError("field dump: malformed header");
    Grid g = Grid::make(dim, n);
    std::vector<double> v(g.nodes());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(is >> v[i])) throw ConfigError("field dump: expected " + std::to_string(g.nodes()) + " values");
    GridFunction f(g, std::move(v));
    f.check_finite("field dump");
    return f;
}

} // namespace ellcont
