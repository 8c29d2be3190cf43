#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ellcont/grid.hpp"

namespace ellcont {

/// Closed-form scalar field from a small built-in catalog, or a sampled array.
/// Catalog entries know their analytic axis derivatives; sampled fields do not.
class ScalarField {
public:
    ScalarField();  // constant 0

    static ScalarField constant(double v);
    /// offset + amp*sin(2*pi*freq*x_axis)
    static ScalarField sine(int axis, double freq, double amp, double offset);
    /// offset + amp*cos(2*pi*freq*x_axis)
    static ScalarField cosine(int axis, double freq, double amp, double offset);
    /// c0 + sum_a c[a]*x_a
    static ScalarField affine(double c0, std::array<double, 3> c, int dim);
    /// amp * prod_a sin(pi*freq*x_a) over the first `dim` axes
    static ScalarField sinprod(double amp, double freq, int dim);
    /// interior-node samples; off-node evaluation is multilinear with values
    /// clamped to the nearest interior node outside the sampled range
    static ScalarField samples(const GridFunction& f);

    /// Parse a catalog spec such as "sine axis=0 freq=1 amp=0.5 offset=1".
    static ScalarField parse(const std::string& spec, int dim);

    double value(const std::array<double, 3>& x) const;
    double derivative(int axis, const std::array<double, 3>& x) const;
    bool has_derivative() const;
    bool is_constant(double v) const;
    const std::string& describe() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Symmetric coefficient matrix field a_ij plus scalar q. Symmetry holds by
/// construction: only the upper triangle is stored and a(i,j) aliases a(j,i).
class CoefficientField {
public:
    explicit CoefficientField(int dim);  // identity a, q = 0

    int dim() const { return dim_; }

    void set_a(int i, int j, ScalarField f);
    const ScalarField& a(int i, int j) const;

    void set_q(ScalarField f) { q_ = std::move(f); }
    const ScalarField& q() const { return q_; }

    void set_grad_bound(double b) { grad_bound_ = b; }
    double grad_bound() const { return grad_bound_; }

private:
    int dim_;
    std::array<ScalarField, 6> a_;  // (0,0),(1,1),(2,2),(0,1),(0,2),(1,2)
    ScalarField q_;
    double grad_bound_ = 0.0;

    static int slot(int i, int j, int dim);
};

struct EllipticityRange {
    double c0 = 0.0;  // min over sample points of the smallest eigenvalue of a(x)
    double c1 = 0.0;  // max over sample points of the largest eigenvalue
};

/// Scan a(x) at every lattice node of the closed box and at every face
/// midpoint. Throws (with the witness point and direction) if c0 <= 0.
EllipticityRange check_ellipticity(const CoefficientField& coeffs, const Grid& g);

} // namespace ellcont
