#pragma once

#include "gapcert/enclosure.hpp"

#include <gmpxx.h>

namespace gapcert::selberg {

/// The four-fold box convolution ((1/2d) chi_[-d,d])^{*4}: an even, C^2,
/// mass-one bump supported exactly on [-4d, 4d], piecewise cubic with
/// rational coefficients.
struct TestFn {
    mpq_class d;

    explicit TestFn(mpq_class d_) : d(std::move(d_)) {
        if (d <= 0) throw std::domain_error("test function parameter d must be positive");
    }
    mpq_class support_radius() const { return 4 * d; }
};

/// Enclosure of f_d over an interval argument.
Enclosure eval_f(const TestFn& tf, const Enclosure& x);

/// sin(u)/u with the removable singularity handled by monotone bounds.
Enclosure sinc(const Enclosure& u);
/// sinh(u)/u, likewise.
Enclosure sinhc(const Enclosure& u);

/// Fourier transform at a real argument: sin(dy)^4 / (dy)^4.
Enclosure eval_f_hat_real(const TestFn& tf, const Enclosure& y);
/// Fourier transform at y = i s (spectral parameter on the imaginary
/// axis): sinh(ds)^4 / (ds)^4.
Enclosure eval_f_hat_imag(const TestFn& tf, const Enclosure& s);

/// Dispatcher for arguments y = re + i*im with exactly one of re, im zero.
Enclosure eval_f_hat(const TestFn& tf, const mpq_class& re, const mpq_class& im,
                     mpfr_prec_t prec = 0);

} // namespace gapcert::selberg
