#include "gapcert/testfn.hpp"

#include "gapcert/errors.hpp"

namespace gapcert::selberg {

namespace {

// inner branch on [0, 2d]: (1/12d)(4 - (3/2d^2) t^2 + (3/8d^3) t^3)
Enclosure inner_branch(const TestFn& tf, const Enclosure& t, mpfr_prec_t prec) {
    const mpq_class d = tf.d;
    Enclosure c0(mpq_class(1) / (3 * d), prec);
    Enclosure c2(mpq_class(-1) / (8 * d * d * d), prec);
    Enclosure c3(mpq_class(1) / (32 * d * d * d * d), prec);
    return c0 + t * t * (c2 + c3 * t);
}

// outer branch on [2d, 4d]: (1/12d)(2 - t/2d)^3
Enclosure outer_branch(const TestFn& tf, const Enclosure& t, mpfr_prec_t prec) {
    Enclosure s = Enclosure(2L, prec) - t * Enclosure(mpq_class(1) / (2 * tf.d), prec);
    return Enclosure(mpq_class(1) / (12 * tf.d), prec) * s.pow_int(3);
}

} // namespace

Enclosure eval_f(const TestFn& tf, const Enclosure& x) {
    const mpfr_prec_t prec = x.precision();
    Enclosure t = x.abs();
    Enclosure two_d(mpq_class(2 * tf.d), prec);
    Enclosure four_d(mpq_class(4 * tf.d), prec);
    bool have = false;
    Enclosure out;
    if (!two_d.definitely_less(t)) {  // meets [0, 2d]
        Enclosure clip = Enclosure::intersect(t, Enclosure::hull(Enclosure(0L, prec), two_d));
        Enclosure v = inner_branch(tf, clip, prec);
        out = have ? Enclosure::hull(out, v) : v;
        have = true;
    }
    if (!t.definitely_less(two_d) && !four_d.definitely_less(t)) {  // meets [2d, 4d]
        Enclosure clip = Enclosure::intersect(t, Enclosure::hull(two_d, four_d));
        Enclosure v = outer_branch(tf, clip, prec);
        out = have ? Enclosure::hull(out, v) : v;
        have = true;
    }
    if (!t.definitely_less(four_d)) {  // meets [4d, inf)
        Enclosure v(0L, prec);
        out = have ? Enclosure::hull(out, v) : v;
        have = true;
    }
    if (!have) throw PrecisionFail("empty case split in eval_f");
    return out;
}

Enclosure sinc(const Enclosure& u) {
    const mpfr_prec_t prec = u.precision();
    Enclosure a = u.abs();
    if (a.definitely_positive()) return u.sin() / u;
    // interval touching 0: sinc is even and decreasing in |u| for |u| <= 1
    Enclosure h = Enclosure::from_endpoints(0, a.upper_d(), prec);
    if (a.upper_d() > 1.0) {
        // coarse fallback, only wide inputs land here
        return Enclosure::from_endpoints(-0.2173, 1.0, prec);
    }
    Enclosure lower = Enclosure(1L, prec) - h * h / Enclosure(6L, prec);
    return Enclosure::hull(lower, Enclosure(1L, prec));
}

Enclosure sinhc(const Enclosure& u) {
    const mpfr_prec_t prec = u.precision();
    Enclosure a = u.abs();
    if (a.definitely_positive()) {
        Enclosure b = u.sinh() / u;
        return b;
    }
    // even, increasing in |u|; range over [0, h] is [1, sinhc(h)]
    double hd = a.upper_d();
    Enclosure h = Enclosure::from_endpoints(0, hd, prec);
    Enclosure h2 = h * h;
    if (hd * hd >= 42.0) throw PrecisionFail("sinhc series used outside its radius");
    Enclosure tail_factor =
        Enclosure(1L, prec) / (Enclosure(1L, prec) - h2 / Enclosure(42L, prec));
    Enclosure upper = Enclosure(1L, prec) + h2 / Enclosure(6L, prec) +
                      h2 * h2 / Enclosure(120L, prec) * tail_factor;
    return Enclosure::hull(Enclosure(1L, prec), upper);
}

Enclosure eval_f_hat_real(const TestFn& tf, const Enclosure& y) {
    Enclosure u = Enclosure(mpq_class(tf.d), y.precision()) * y;
    return sinc(u).pow_int(4);
}

Enclosure eval_f_hat_imag(const TestFn& tf, const Enclosure& s) {
    Enclosure u = Enclosure(mpq_class(tf.d), s.precision()) * s;
    return sinhc(u).pow_int(4);
}

Enclosure eval_f_hat(const TestFn& tf, const mpq_class& re, const mpq_class& im,
                     mpfr_prec_t prec) {
    if (re != 0 && im != 0)
        throw OutOfRange("f_hat argument must be purely real or purely imaginary");
    if (im == 0) return eval_f_hat_real(tf, Enclosure(re, prec));
    return eval_f_hat_imag(tf, Enclosure(im, prec));
}

} // namespace gapcert::selberg
