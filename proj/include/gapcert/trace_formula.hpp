#pragma once

#include "gapcert/character.hpp"
#include "gapcert/coset_table.hpp"
#include "gapcert/finite_group.hpp"
#include "gapcert/geodesics.hpp"
#include "gapcert/quadrature.hpp"
#include "gapcert/testfn.hpp"

#include <string>
#include <vector>

namespace gapcert::selberg {

struct PerClassContribution {
    std::string label;
    Enclosure value;
};

struct GeometricSideReport {
    Enclosure identity_term;
    Enclosure elliptic_term;
    Enclosure hyperbolic_term;
    Enclosure total;
    std::vector<PerClassContribution> per_class;
};

/// integral over (0, 4d] of f'_d(x)/sinh(x/2) dx (a negative quantity;
/// the x --> 0 singularity is removable and handled by the sinh(x/2)/x
/// series on the leading panel).
Enclosure identity_integral(const TestFn& tf, const QuadratureOptions& opts);

/// The full identity contribution -(degree/96) * int_R f'/sinh(x/2).
Enclosure identity_term(const TestFn& tf, long degree, const QuadratureOptions& opts);

/// Character-independent elliptic class integral
/// int_0^{4d} cosh(x/2) f_d(x) / (cosh x - 1 + 2 sin^2 theta) dx.
Enclosure elliptic_class_integral(const TestFn& tf, const Enclosure& sin2_theta,
                                  const QuadratureOptions& opts);

/// Sum over elliptic classes of (tr rho~(gamma)/m) times the class integral.
Enclosure elliptic_term(const TestFn& tf, const groupkit::Character& chi,
                        const std::vector<fuchsia::GeodesicClass>& classes,
                        const groupkit::CosetTable& quotient,
                        const groupkit::FiniteGroupData& gdata, const QuadratureOptions& opts,
                        std::vector<PerClassContribution>* audit = nullptr);

/// Finite double sum over primitive hyperbolic classes:
/// l(gamma) sum_n tr rho~(gamma^n) f_d(n l) / (2 sinh(n l / 2)).
/// Non-primitive entries in the input are ignored.
Enclosure hyperbolic_term(const TestFn& tf, const groupkit::Character& chi,
                          const std::vector<fuchsia::GeodesicClass>& classes,
                          const groupkit::CosetTable& quotient,
                          const groupkit::FiniteGroupData& gdata, mpfr_prec_t prec = 0,
                          std::vector<PerClassContribution>* audit = nullptr);

GeometricSideReport geometric_side(const TestFn& tf, const groupkit::Character& chi,
                                   const std::vector<fuchsia::GeodesicClass>& elliptics,
                                   const std::vector<fuchsia::GeodesicClass>& hyperbolics,
                                   const groupkit::CosetTable& quotient,
                                   const groupkit::FiniteGroupData& gdata,
                                   const QuadratureOptions& opts);

} // namespace gapcert::selberg
