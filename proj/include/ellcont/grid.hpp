#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ellcont {

/// Uniform discretization of the open unit box (0,1)^dim with homogeneous
/// Dirichlet boundary. Only interior nodes carry unknowns; the node at
/// multi-index (i_0,..,i_{dim-1}), 0 <= i_a < n, sits at x_a = (i_a+1)*h with
/// h = 1/(n+1). Canonical (lexicographic) order runs the last axis fastest.
struct Grid {
    int dim = 2;
    int n = 3;     // interior nodes per axis
    double h = 0.25;

    /// Validated construction; rejects dim outside {2,3} and n < 3.
    static Grid make(int dim, int n);

    std::size_t nodes() const {
        std::size_t m = 1;
        for (int a = 0; a < dim; ++a) m *= static_cast<std::size_t>(n);
        return m;
    }

    double coord(int idx) const { return (idx + 1) * h; }

    /// Flat canonical index of an interior multi-index.
    std::size_t flat(std::array<int, 3> idx) const;

    /// Distance from an interior node to the boundary surface.
    double boundary_distance(std::array<int, 3> idx) const;

    std::string id() const;

    bool operator==(const Grid& o) const { return dim == o.dim && n == o.n; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// Real values on the interior nodes of a Grid, with the zero Dirichlet trace
/// implied: evaluation on or beyond the boundary yields exactly 0.
/// Immutable by convention after construction.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<double> values);

    static GridFunction zeros(const Grid& g);

    /// Sample a closed-form function at the interior nodes.
    static GridFunction sample(const Grid& g, const std::function<double(const std::array<double, 3>&)>& f);

    const Grid& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    std::size_t size() const { return values_.size(); }

    /// Value at a multi-index; indices in [-1, n] address the boundary layer,
    /// which evaluates to exactly 0.
    double value_at(std::array<int, 3> idx) const;

    /// Throws if any value is NaN or infinite.
    void check_finite(const char* context) const;

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Discrete L2 inner product h^dim * sum(u_i v_i) in canonical node order.
double inner(const GridFunction& u, const GridFunction& v);

double norm_h0(const GridFunction& u);
/// norm_h0 plus centered first differences (zero extension across the boundary).
double norm_h1(const GridFunction& u);
/// norm_h1 plus pure 3-point second differences and composed-centered mixed
/// differences, one term per unordered axis pair.
double norm_h2(const GridFunction& u);

/// Forward-difference Dirichlet energy h^dim * sum over edges of
/// ((u_right - u_left)/h)^2, boundary values taken as 0. Coincides with the
/// quadratic form of the discrete negative Laplacian; zero only for u = 0.
double gradient_energy(const GridFunction& u);

/// Plain-text field dump: header "dim n h", then one value per line in
/// canonical order with 17 significant digits (bit-exact round-trip).
void write_field(std::ostream& os, const GridFunction& u);
GridFunction read_field(std::istream& is);

/// Norm pieces shared with the H2 quadratic form; each entry is the squared
/// discrete L2 norm of one difference family.
struct SobolevParts {
    double l2 = 0;              // ||u||_0^2
    double first = 0;           // sum_d ||C_d u||_0^2
    double second_pure = 0;     // sum_d ||A_d u||_0^2
    double second_mixed = 0;    // sum_{d<e} ||C_d C_e u||_0^2
};
SobolevParts sobolev_parts(const Grid& g, std::span<const double> u);

} // namespace ellcont
