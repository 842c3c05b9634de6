#include "gapcert/trace_formula.hpp"

#include "gapcert/errors.hpp"

#include <sstream>

namespace gapcert::selberg {

using fuchsia::ElementKind;
using fuchsia::GeodesicClass;
using groupkit::Character;
using groupkit::CosetTable;
using groupkit::FiniteGroupData;

namespace {

// f_d coefficients on [0, 2d] and [2d, 4d] as exact rationals.
std::vector<mpq_class> f_inner_coeffs(const mpq_class& d) {
    return {mpq_class(1) / (3 * d), 0, mpq_class(-1) / (8 * d * d * d),
            mpq_class(1) / (32 * d * d * d * d)};
}

std::vector<mpq_class> f_outer_coeffs(const mpq_class& d) {
    return {mpq_class(2) / (3 * d), mpq_class(-1) / (2 * d * d),
            mpq_class(1) / (8 * d * d * d), mpq_class(-1) / (96 * d * d * d * d)};
}

// f'_d coefficients: derivative of the above.
std::vector<mpq_class> fprime_inner_coeffs(const mpq_class& d) {
    return {0, mpq_class(-1) / (4 * d * d * d), mpq_class(3) / (32 * d * d * d * d)};
}

std::vector<mpq_class> fprime_outer_coeffs(const mpq_class& d) {
    return {mpq_class(-1) / (2 * d * d), mpq_class(1) / (4 * d * d * d),
            mpq_class(-3) / (96 * d * d * d * d)};
}

} // namespace

Enclosure identity_integral(const TestFn& tf, const QuadratureOptions& opts) {
    const mpq_class d = tf.d;
    // On [0, 2d]: f'(x)/sinh(x/2) = (f'(x)/x) * x/sinh(x/2)
    //           = 2 (f'(x)/x) / sinhc(x/2), regular at 0.
    PanelBuilder inner = [&](const Panel& p) {
        if (p.a == 0) {
            std::vector<mpq_class> q = {mpq_class(-1) / (4 * d * d * d),
                                        mpq_class(3) / (32 * d * d * d * d)};
            TaylorModel num = tm_polynomial(q, p);
            TaylorModel den = tm_sinhc_scaled(mpq_class(1, 2), p);
            return tm_scale(tm_div(num, den), Enclosure(2L, p.prec));
        }
        TaylorModel num = tm_polynomial(fprime_inner_coeffs(d), p);
        TaylorModel den = tm_sinh_scaled(mpq_class(1, 2), p);
        return tm_div(num, den);
    };
    PanelBuilder outer = [&](const Panel& p) {
        TaylorModel num = tm_polynomial(fprime_outer_coeffs(d), p);
        TaylorModel den = tm_sinh_scaled(mpq_class(1, 2), p);
        return tm_div(num, den);
    };
    Enclosure part1 = integrate_adaptive(inner, 0, 2 * d, opts);
    Enclosure part2 = integrate_adaptive(outer, 2 * d, 4 * d, opts);
    return part1 + part2;
}

Enclosure identity_term(const TestFn& tf, long degree, const QuadratureOptions& opts) {
    if (degree < 1) throw OutOfRange("identity term needs degree >= 1");
    const mpfr_prec_t prec = opts.prec > 0 ? opts.prec : Enclosure::default_precision();
    Enclosure integral = identity_integral(tf, opts);
    // full-line integral is twice the half-line one (even integrand)
    return Enclosure(-degree, prec) * Enclosure(mpq_class(1, 48), prec) * integral;
}

Enclosure elliptic_class_integral(const TestFn& tf, const Enclosure& sin2_theta,
                                  const QuadratureOptions& opts) {
    const mpq_class d = tf.d;
    const mpfr_prec_t prec = opts.prec > 0 ? opts.prec : Enclosure::default_precision();
    Enclosure shift = Enclosure(2L, prec) * sin2_theta - Enclosure(1L, prec);
    auto builder_for = [&](const std::vector<mpq_class>& fc) {
        return [fc, shift, prec](const Panel& p) {
            TaylorModel num = tm_mul(tm_cosh_scaled(mpq_class(1, 2), p), tm_polynomial(fc, p));
            TaylorModel den =
                tm_add(tm_cosh_scaled(mpq_class(1), p), tm_constant(shift, p));
            return tm_div(num, den);
        };
    };
    Enclosure part1 = integrate_adaptive(builder_for(f_inner_coeffs(d)), 0, 2 * d, opts);
    Enclosure part2 = integrate_adaptive(builder_for(f_outer_coeffs(d)), 2 * d, 4 * d, opts);
    return part1 + part2;
}

Enclosure elliptic_term(const TestFn& tf, const Character& chi,
                        const std::vector<GeodesicClass>& classes, const CosetTable& quotient,
                        const FiniteGroupData& gdata, const QuadratureOptions& opts,
                        std::vector<PerClassContribution>* audit) {
    const mpfr_prec_t prec = opts.prec > 0 ? opts.prec : Enclosure::default_precision();
    Enclosure total(0L, prec);
    for (const auto& cls : classes) {
        if (cls.kind != ElementKind::Elliptic)
            throw ClassMismatch("elliptic_term received a non-elliptic class");
        int gclass = gdata.class_of_perm(quotient.word_image(cls.word));
        Enclosure trace_val = chi.value(gclass).with_precision(prec);
        Enclosure integral =
            elliptic_class_integral(tf, cls.sin2_theta.to_enclosure(prec), opts);
        Enclosure contribution =
            trace_val / Enclosure(cls.order, prec) * integral;
        total += contribution;
        if (audit) {
            std::ostringstream label;
            label << "elliptic m=" << cls.order << " j=" << cls.rotation_index;
            audit->push_back({label.str(), contribution});
        }
    }
    return total;
}

Enclosure hyperbolic_term(const TestFn& tf, const Character& chi,
                          const std::vector<GeodesicClass>& classes, const CosetTable& quotient,
                          const FiniteGroupData& gdata, mpfr_prec_t prec,
                          std::vector<PerClassContribution>* audit) {
    if (prec == 0) prec = Enclosure::default_precision();
    const Enclosure four_d(mpq_class(4 * tf.d), prec);
    Enclosure total(0L, prec);
    for (const auto& cls : classes) {
        if (cls.kind != ElementKind::Hyperbolic)
            throw ClassMismatch("hyperbolic_term received a non-hyperbolic class");
        if (!cls.primitive) continue;
        Enclosure ell = cls.length.with_precision(prec);
        Perm step = quotient.word_image(cls.word);
        Perm acc = step;
        Enclosure contribution(0L, prec);
        for (long n = 1;; ++n) {
            Enclosure nl = Enclosure(n, prec) * ell;
            if (four_d.definitely_less(nl)) break;  // f_d vanishes beyond the support
            int gclass = gdata.class_of_perm(acc);
            Enclosure trace_val = chi.value(gclass).with_precision(prec);
            Enclosure denom = Enclosure(2L, prec) * (nl / Enclosure(2L, prec)).sinh();
            contribution += trace_val / denom * eval_f(tf, nl);
            acc = perm_compose(acc, step);
        }
        contribution = ell * contribution;
        total += contribution;
        if (audit) {
            std::ostringstream label;
            label << "hyperbolic l=" << cls.length.mid_d();
            audit->push_back({label.str(), contribution});
        }
    }
    return total;
}

GeometricSideReport geometric_side(const TestFn& tf, const Character& chi,
                                   const std::vector<GeodesicClass>& elliptics,
                                   const std::vector<GeodesicClass>& hyperbolics,
                                   const CosetTable& quotient, const FiniteGroupData& gdata,
                                   const QuadratureOptions& opts) {
    GeometricSideReport rep;
    const mpfr_prec_t prec = opts.prec > 0 ? opts.prec : Enclosure::default_precision();
    rep.identity_term = identity_term(tf, chi.degree, opts);
    rep.per_class.push_back({"identity", rep.identity_term});
    rep.elliptic_term =
        elliptic_term(tf, chi, elliptics, quotient, gdata, opts, &rep.per_class);
    rep.hyperbolic_term =
        hyperbolic_term(tf, chi, hyperbolics, quotient, gdata, prec, &rep.per_class);
    rep.total = rep.identity_term + rep.elliptic_term + rep.hyperbolic_term;
    return rep;
}

} // namespace gapcert::selberg
