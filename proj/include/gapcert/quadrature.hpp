#pragma once

#include "gapcert/enclosure.hpp"

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace gapcert::selberg {

/// Univariate Taylor model: a polynomial in t = x - x0 with enclosure
/// coefficients plus an interval remainder valid for t in [tlo, thi].
/// Panels are described by exact rational endpoints so polynomial data
/// stays exact wherever the inputs are rational.
struct TaylorModel {
    std::vector<Enclosure> coeff;  // degree = coeff.size() - 1
    Enclosure remainder;
    mpq_class tlo, thi;  // domain of t (0 is the expansion point offset)
    mpfr_prec_t prec = 0;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    /// Interval range of the full model over its domain.
    Enclosure range() const;
    /// Exact-width integral of the model over the panel.
    Enclosure integrate() const;
};

/// Panel description handed to integrand builders.
struct Panel {
    mpq_class a, b;   // x-range
    mpq_class x0;     // expansion point (midpoint, or a for panels at 0)
    int max_degree;
    mpfr_prec_t prec;

    mpq_class radius() const { return b - a > x0 - a ? b - x0 : x0 - a; }
};

TaylorModel tm_constant(const Enclosure& c, const Panel& p);
/// The coordinate x itself (exact).
TaylorModel tm_coordinate(const Panel& p);
/// Exact polynomial sum_k q[k] x^k recentered at the panel point.
TaylorModel tm_polynomial(const std::vector<mpq_class>& q, const Panel& p);
/// sinh(s*x) and cosh(s*x) with rational scale s (Lagrange remainder).
TaylorModel tm_sinh_scaled(const mpq_class& s, const Panel& p);
TaylorModel tm_cosh_scaled(const mpq_class& s, const Panel& p);
/// sinh(s*x)/(s*x), entire even series; requires x0 == 0 panels.
TaylorModel tm_sinhc_scaled(const mpq_class& s, const Panel& p);

TaylorModel tm_add(const TaylorModel& a, const TaylorModel& b);
TaylorModel tm_sub(const TaylorModel& a, const TaylorModel& b);
TaylorModel tm_mul(const TaylorModel& a, const TaylorModel& b);
TaylorModel tm_scale(const TaylorModel& a, const Enclosure& c);
/// Quotient via defect correction: a/b = Q + (a - Q b)/b with the second
/// term absorbed into the remainder; b must be bounded away from zero.
TaylorModel tm_div(const TaylorModel& a, const TaylorModel& b);

struct QuadratureOptions {
    mpfr_prec_t prec = 0;
    int max_degree = 20;
    int max_depth = 24;
    double target_width = 0;  // 0: derived from the precision
};

/// Adaptive rigorous integration of builder-described integrands over
/// [a, b] (rational endpoints).  The builder must return a valid Taylor
/// model of the integrand on any requested panel.  Throws PrecisionFail
/// when the width budget cannot be met at max_depth.
using PanelBuilder = std::function<TaylorModel(const Panel&)>;
Enclosure integrate_adaptive(const PanelBuilder& builder, const mpq_class& a,
                             const mpq_class& b, const QuadratureOptions& opts);

} // namespace gapcert::selberg
