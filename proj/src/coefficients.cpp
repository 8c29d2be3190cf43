#include "ellcont/coefficients.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ellcont/errors.hpp"

namespace ellcont {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

struct ScalarField::Impl {
    enum class Kind { constant, sine, cosine, affine, sinprod, samples };
    Kind kind = Kind::constant;
    double v0 = 0.0;                    // constant value / amp
    double freq = 1.0;
    double offset = 0.0;
    int axis = 0;
    int dim = 2;
    std::array<double, 3> coeffs{0, 0, 0};
    // samples
    Grid grid;
    std::vector<double> data;
    std::string text = "constant value=0";

    double value(const std::array<double, 3>& x) const {
        switch (kind) {
            case Kind::constant: return v0;
            case Kind::sine: return offset + v0 * std::sin(kTwoPi * freq * x[axis]);
            case Kind::cosine: return offset + v0 * std::cos(kTwoPi * freq * x[axis]);
            case Kind::affine: {
                double r = v0;
                for (int a = 0; a < dim; ++a) r += coeffs[a] * x[a];
                return r;
            }
            case Kind::sinprod: {
                double r = v0;
                for (int a = 0; a < dim; ++a) r *= std::sin(std::numbers::pi * freq * x[a]);
                return r;
            }
            case Kind::samples: return interpolate(x);
        }
        return 0.0;
    }

    double derivative(int d, const std::array<double, 3>& x) const {
        switch (kind) {
            case Kind::constant: return 0.0;
            case Kind::sine: return d == axis ? v0 * kTwoPi * freq * std::cos(kTwoPi * freq * x[axis]) : 0.0;
            case Kind::cosine: return d == axis ? -v0 * kTwoPi * freq * std::sin(kTwoPi * freq * x[axis]) : 0.0;
            case Kind::affine: return d < dim ? coeffs[d] : 0.0;
            case Kind::sinprod: {
                double r = v0;
                for (int a = 0; a < dim; ++a) {
                    const double arg = std::numbers::pi * freq * x[a];
                    r *= (a == d) ? std::numbers::pi * freq * std::cos(arg) : std::sin(arg);
                }
                return r;
            }
            case Kind::samples: break;
        }
        throw PreconditionError("scalar field '" + text + "' has no analytic derivative");
    }

    double interpolate(const std::array<double, 3>& x) const {
        // multilinear over interior samples, clamped at the sampled range
        std::array<int, 3> base{0, 0, 0};
        std::array<double, 3> frac{0, 0, 0};
        for (int a = 0; a < grid.dim; ++a) {
            double t = x[a] / grid.h - 1.0;  // sample index coordinate
            if (t <= 0.0) {
                base[a] = 0;
                frac[a] = 0.0;
            } else if (t >= grid.n - 1) {
                base[a] = grid.n - 1;
                frac[a] = 0.0;
            } else {
                base[a] = static_cast<int>(t);
                frac[a] = t - base[a];
            }
        }
        double r = 0.0;
        const int corners = 1 << grid.dim;
        for (int c = 0; c < corners; ++c) {
            double w = 1.0;
            std::array<int, 3> idx = base;
            for (int a = 0; a < grid.dim; ++a) {
                if (c & (1 << a)) {
                    w *= frac[a];
                    idx[a] = std::min(base[a] + 1, grid.n - 1);
                } else {
                    w *= 1.0 - frac[a];
                }
            }
            if (w != 0.0) r += w * data[grid.flat(idx)];
        }
        return r;
    }
};

ScalarField::ScalarField() : impl_(std::make_shared<Impl>()) {}

ScalarField ScalarField::constant(double v) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::constant;
    impl->v0 = v;
    std::ostringstream os;
    os << "constant value=" << v;
    impl->text = os.str();
    ScalarField f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarField ScalarField::sine(int axis, double freq, double amp, double offset) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::sine;
    impl->axis = axis;
    impl->freq = freq;
    impl->v0 = amp;
    impl->offset = offset;
    std::ostringstream os;
    os << "sine axis=" << axis << " freq=" << freq << " amp=" << amp << " offset=" << offset;
    impl->text = os.str();
    ScalarField f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarField ScalarField::cosine(int axis, double freq, double amp, double offset) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::cosine;
    impl->axis = axis;
    impl->freq = freq;
    impl->v0 = amp;
    impl->offset = offset;
    std::ostringstream os;
    os << "cosine axis=" << axis << " freq=" << freq << " amp=" << amp << " offset=" << offset;
    impl->text = os.str();
    ScalarField f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarField ScalarField::affine(double c0, std::array<double, 3> c, int dim) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::affine;
    impl->v0 = c0;
    impl->coeffs = c;
    impl->dim = dim;
    std::ostringstream os;
    os << "affine c0=" << c0;
    for (int a = 0; a < dim; ++a) os << " c" << (a + 1) << "=" << c[a];
    impl->text = os.str();
    ScalarField f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarField ScalarField::sinprod(double amp, double freq, int dim) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::sinprod;
    impl->v0 = amp;
    impl->freq = freq;
    impl->dim = dim;
    std::ostringstream os;
    os << "sinprod amp=" << amp << " freq=" << freq;
    impl->text = os.str();
    ScalarField f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarField ScalarField::samples(const GridFunction& src) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::samples;
    impl->grid = src.grid();
    impl->data.assign(src.values().begin(), src.values().end());
    impl->text = "samples grid=" + src.grid().id();
    ScalarField f;
    f.impl_ = std::move(impl);
    return f;
}

namespace {

double parse_num(const std::string& token, const std::string& key) {
    try {
        return std::stod(token);
    } catch (const std::exception&) {
        throw ConfigError("scalar field: bad numeric value '" + token + "' for " + key);
    }
}

} // namespace

ScalarField ScalarField::parse(const std::string& spec, int dim) {
    std::istringstream is(spec);
    std::string kind;
    is >> kind;
    if (kind.empty()) throw ConfigError("scalar field: empty spec");

    double axis = 0, freq = 1, amp = 1, offset = 0, value = 0, c0 = 0;
    std::array<double, 3> cs{0, 0, 0};
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ConfigError("scalar field: expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "axis") axis = parse_num(val, key);
        else if (key == "freq") freq = parse_num(val, key);
        else if (key == "amp") amp = parse_num(val, key);
        else if (key == "offset") offset = parse_num(val, key);
        else if (key == "value") value = parse_num(val, key);
        else if (key == "c0") c0 = parse_num(val, key);
        else if (key == "c1") cs[0] = parse_num(val, key);
        else if (key == "c2") cs[1] = parse_num(val, key);
        else if (key == "c3") cs[2] = parse_num(val, key);
        else throw ConfigError("scalar field: unknown key '" + key + "' in '" + spec + "'");
    }

    const int ax = static_cast<int>(axis);
    if (kind == "constant") return constant(value);
    if (kind == "identity") return constant(1.0);
    if (kind == "sine") {
        if (ax < 0 || ax >= dim) throw ConfigError("scalar field: axis out of range in '" + spec + "'");
        return sine(ax, freq, amp, offset);
    }
    if (kind == "cosine") {
        if (ax < 0 || ax >= dim) throw ConfigError("scalar field: axis out of range in '" + spec + "'");
        return cosine(ax, freq, amp, offset);
    }
    if (kind == "affine") return affine(c0, cs, dim);
    if (kind == "sinprod") return sinprod(amp, freq, dim);
    throw ConfigError("scalar field: unknown catalog entry '" + kind + "'");
}

double ScalarField::value(const std::array<double, 3>& x) const { return impl_->value(x); }
double ScalarField::derivative(int axis, const std::array<double, 3>& x) const { return impl_->derivative(axis, x); }
bool ScalarField::has_derivative() const { return impl_->kind != Impl::Kind::samples; }
bool ScalarField::is_constant(double v) const { return impl_->kind == Impl::Kind::constant && impl_->v0 == v; }
const std::string& ScalarField::describe() const { return impl_->text; }

int CoefficientField::slot(int i, int j, int dim) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= dim) throw PreconditionError("coefficient index out of range");
    if (i == j) return i;
    if (i == 0 && j == 1) return 3;
    if (i == 0 && j == 2) return 4;
    return 5;  // (1,2)
}

CoefficientField::CoefficientField(int dim) : dim_(dim) {
    if (dim != 2 && dim != 3) throw ConfigError("coefficients: dim must be 2 or 3");
    for (int d = 0; d < dim; ++d) a_[d] = ScalarField::constant(1.0);
    for (int s = 3; s < 6; ++s) a_[s] = ScalarField::constant(0.0);
    q_ = ScalarField::constant(0.0);
}

void CoefficientField::set_a(int i, int j, ScalarField f) { a_[slot(i, j, dim_)] = std::move(f); }
const ScalarField& CoefficientField::a(int i, int j) const { return a_[slot(i, j, dim_)]; }

namespace {

// eigenvalue range of the symmetric coefficient matrix at one point
void eig_range(const CoefficientField& c, const std::array<double, 3>& x,
               double& lo, double& hi, std::array<double, 3>& lo_dir) {
    const int d = c.dim();
    if (d == 2) {
        const double a = c.a(0, 0).value(x);
        const double b = c.a(0, 1).value(x);
        const double e = c.a(1, 1).value(x);
        const double mean = 0.5 * (a + e);
        const double disc = std::sqrt(0.25 * (a - e) * (a - e) + b * b);
        lo = mean - disc;
        hi = mean + disc;
        // eigenvector for the smaller eigenvalue
        if (b != 0.0) {
            lo_dir = {lo - e, b, 0.0};
        } else {
            lo_dir = (a <= e) ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
        }
    } else {
        Eigen::Matrix3d m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = c.a(std::min(i, j), std::max(i, j)).value(x);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
        lo = es.eigenvalues()(0);
        hi = es.eigenvalues()(2);
        for (int i = 0; i < 3; ++i) lo_dir[i] = es.eigenvectors()(i, 0);
    }
}

} // namespace

EllipticityRange check_ellipticity(const CoefficientField& coeffs, const Grid& g) {
    if (coeffs.dim() != g.dim) throw PreconditionError("ellipticity: coefficient dim does not match grid");

    EllipticityRange range{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    std::array<double, 3> witness_x{0, 0, 0};
    std::array<double, 3> witness_dir{0, 0, 0};

    auto visit = [&](const std::array<double, 3>& x) {
        double lo, hi;
        std::array<double, 3> dir;
        eig_range(coeffs, x, lo, hi, dir);
        if (lo < range.c0) {
            range.c0 = lo;
            witness_x = x;
            witness_dir = dir;
        }
        range.c1 = std::max(range.c1, hi);
    };

    // lattice nodes of the closed box, then midpoints of faces along each axis
    const int m = g.n + 2;  // lattice points per axis, indices -1..n mapped to 0..n+1
    std::array<int, 3> idx{0, 0, 0};
    const std::size_t total = static_cast<std::size_t>(std::pow(m, g.dim));
    for (std::size_t k = 0; k < total; ++k) {
        std::array<double, 3> x{0, 0, 0};
        for (int a = 0; a < g.dim; ++a) x[a] = idx[a] * g.h;
        visit(x);
        for (int a = g.dim - 1; a >= 0; --a) {
            if (++idx[a] < m) break;
            idx[a] = 0;
        }
    }
    for (int d = 0; d < g.dim; ++d) {
        idx = {0, 0, 0};
        std::array<int, 3> extent{m, m, m};
        extent[d] = m - 1;  // midpoints between consecutive lattice planes
        std::size_t cnt = 1;
        for (int a = 0; a < g.dim; ++a) cnt *= static_cast<std::size_t>(extent[a]);
        for (std::size_t k = 0; k < cnt; ++k) {
            std::array<double, 3> x{0, 0, 0};
            for (int a = 0; a < g.dim; ++a) x[a] = idx[a] * g.h;
            x[d] = (idx[d] + 0.5) * g.h;
            visit(x);
            for (int a = g.dim - 1; a >= 0; --a) {
                if (++idx[a] < extent[a]) break;
                idx[a] = 0;
            }
        }
    }

    if (!(range.c0 > 0.0)) {
        std::ostringstream os;
        os << "ellipticity failure: smallest coefficient eigenvalue " << range.c0 << " <= 0 at x=(";
        for (int a = 0; a < g.dim; ++a) os << (a ? "," : "") << witness_x[a];
        os << ") with direction xi=(";
        for (int a = 0; a < g.dim; ++a) os << (a ? "," : "") << witness_dir[a];
        os << ")";
        throw PreconditionError(os.str());
    }
    return range;
}

} // namespace ellcont
