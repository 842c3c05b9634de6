#include "gapcert/enclosure.hpp"

#include "gapcert/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

namespace gapcert {

namespace {
std::atomic<mpfr_prec_t> g_default_prec{128};
}

mpfr_prec_t Enclosure::default_precision() { return g_default_prec.load(); }
void Enclosure::set_default_precision(mpfr_prec_t bits) { g_default_prec.store(bits); }

void Enclosure::init(mpfr_prec_t prec) {
    prec_ = prec > 0 ? prec : default_precision();
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

Enclosure::Enclosure() {
    init(0);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(long v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(double v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(const mpq_class& q, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& o) {
    init(o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& o) noexcept {
    prec_ = o.prec_;
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // leave the source valid but empty
    mpfr_init2(o.lo_, o.prec_);
    mpfr_init2(o.hi_, o.prec_);
    mpfr_set_zero(o.lo_, 1);
    mpfr_set_zero(o.hi_, 1);
}

Enclosure& Enclosure::operator=(const Enclosure& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Enclosure Enclosure::from_endpoints(double lo, double hi, mpfr_prec_t prec) {
    Enclosure r(0L, prec);
    mpfr_set_d(r.lo_, lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, hi, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::pi(mpfr_prec_t prec) {
    Enclosure r(0L, prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

double Enclosure::lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::mid_d() const { return 0.5 * (lower_d() + upper_d()); }

double Enclosure::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

Enclosure Enclosure::width() const {
    Enclosure r(0L, prec_);
    mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    return r;
}

bool Enclosure::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

bool Enclosure::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enclosure::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Enclosure::definitely_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::definitely_negative() const { return mpfr_sgn(hi_) < 0; }

bool Enclosure::definitely_less(const Enclosure& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Enclosure::overlaps(const Enclosure& o) const {
    return mpfr_cmp(hi_, o.lo_) >= 0 && mpfr_cmp(o.hi_, lo_) >= 0;
}

Enclosure Enclosure::blank(const Enclosure& o) const {
    return Enclosure(0L, std::max(prec_, o.prec_));
}

Enclosure Enclosure::operator-() const {
    Enclosure r(0L, prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator+(const Enclosure& o) const {
    Enclosure r = blank(o);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
    Enclosure r = blank(o);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
    Enclosure r = blank(o);
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_t* as[2] = {&lo_, &hi_};
    const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto a : as) {
        for (auto b : bs) {
            mpfr_mul(t, *a, *b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *a, *b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
    if (o.contains_zero())
        throw PrecisionFail("interval division by an enclosure containing zero");
    Enclosure r = blank(o);
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_t* as[2] = {&lo_, &hi_};
    const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto a : as) {
        for (auto b : bs) {
            mpfr_div(t, *a, *b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, *a, *b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::abs() const {
    Enclosure r(0L, prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw OutOfRange("sqrt of a negative enclosure");
    Enclosure r(0L, prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

// Monotone increasing library functions share one pattern.
#define GAPCERT_MONOTONE_INC(name, fn)                \
    Enclosure Enclosure::name() const {               \
        Enclosure r(0L, prec_);                       \
        fn(r.lo_, lo_, MPFR_RNDD);                    \
        fn(r.hi_, hi_, MPFR_RNDU);                    \
        return r;                                     \
    }

GAPCERT_MONOTONE_INC(exp, mpfr_exp)
GAPCERT_MONOTONE_INC(sinh, mpfr_sinh)
GAPCERT_MONOTONE_INC(arcsinh, mpfr_asinh)
#undef GAPCERT_MONOTONE_INC

Enclosure Enclosure::log() const {
    if (mpfr_sgn(lo_) <= 0) throw OutOfRange("log of a non-positive enclosure");
    Enclosure r(0L, prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::cosh() const {
    Enclosure r(0L, prec_);
    Enclosure a = abs();
    mpfr_cosh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_cosh(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

namespace {

// Integer range [kmin, kmax] such that any solution of x = (off + k) * pi
// with x in [lo, hi] has k in the range.  Conservative by construction.
void pi_multiple_range(const mpfr_t& lo, const mpfr_t& hi, double off, long& kmin,
                       long& kmax, mpfr_prec_t prec) {
    mpfr_t pi_lo, t;
    mpfr_init2(pi_lo, prec);
    mpfr_init2(t, prec);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_div(t, lo, pi_lo, MPFR_RNDD);
    kmin = static_cast<long>(std::floor(mpfr_get_d(t, MPFR_RNDD) - off)) - 1;
    mpfr_div(t, hi, pi_lo, MPFR_RNDU);
    kmax = static_cast<long>(std::ceil(mpfr_get_d(t, MPFR_RNDU) - off)) + 1;
    mpfr_clear(pi_lo);
    mpfr_clear(t);
}

// Does [lo, hi] possibly contain (off + k) * pi for some integer k in range?
bool may_contain_pi_multiple(const mpfr_t& lo, const mpfr_t& hi, double off, long parity_mod,
                             long parity_rem, mpfr_prec_t prec) {
    long kmin, kmax;
    pi_multiple_range(lo, hi, off, kmin, kmax, prec);
    if (kmax - kmin > 16) return true;  // wide interval: give up and widen
    mpfr_t pl, ph, c;
    mpfr_init2(pl, prec);
    mpfr_init2(ph, prec);
    mpfr_init2(c, prec);
    bool hit = false;
    for (long k = kmin; k <= kmax && !hit; ++k) {
        if (parity_mod != 0) {
            long m = ((k % parity_mod) + parity_mod) % parity_mod;
            if (m != parity_rem) continue;
        }
        mpfr_const_pi(pl, MPFR_RNDD);
        mpfr_const_pi(ph, MPFR_RNDU);
        double f = off + static_cast<double>(k);
        mpfr_mul_d(c, f >= 0 ? pl : ph, f, MPFR_RNDD);
        if (mpfr_cmp(c, hi) <= 0) {
            mpfr_mul_d(c, f >= 0 ? ph : pl, f, MPFR_RNDU);
            if (mpfr_cmp(c, lo) >= 0) hit = true;
        }
    }
    mpfr_clear(pl);
    mpfr_clear(ph);
    mpfr_clear(c);
    return hit;
}

} // namespace

Enclosure Enclosure::sin() const {
    Enclosure r(0L, prec_);
    // endpoint values, outward
    mpfr_t v1lo, v1hi, v2lo, v2hi;
    mpfr_init2(v1lo, prec_);
    mpfr_init2(v1hi, prec_);
    mpfr_init2(v2lo, prec_);
    mpfr_init2(v2hi, prec_);
    mpfr_sin(v1lo, lo_, MPFR_RNDD);
    mpfr_sin(v1hi, lo_, MPFR_RNDU);
    mpfr_sin(v2lo, hi_, MPFR_RNDD);
    mpfr_sin(v2hi, hi_, MPFR_RNDU);
    mpfr_min(r.lo_, v1lo, v2lo, MPFR_RNDD);
    mpfr_max(r.hi_, v1hi, v2hi, MPFR_RNDU);
    // interior extrema: sin has max at (2k + 1/2) pi, min at (2k + 3/2) pi
    long kmin, kmax;
    pi_multiple_range(lo_, hi_, 0.5, kmin, kmax, prec_);
    if (kmax - kmin > 16) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else {
        if (may_contain_pi_multiple(lo_, hi_, 0.5, 2, 0, prec_))
            mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        if (may_contain_pi_multiple(lo_, hi_, 0.5, 2, 1, prec_))
            mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    mpfr_clear(v1lo);
    mpfr_clear(v1hi);
    mpfr_clear(v2lo);
    mpfr_clear(v2hi);
    return r;
}

Enclosure Enclosure::cos() const {
    Enclosure r(0L, prec_);
    mpfr_t v1lo, v1hi, v2lo, v2hi;
    mpfr_init2(v1lo, prec_);
    mpfr_init2(v1hi, prec_);
    mpfr_init2(v2lo, prec_);
    mpfr_init2(v2hi, prec_);
    mpfr_cos(v1lo, lo_, MPFR_RNDD);
    mpfr_cos(v1hi, lo_, MPFR_RNDU);
    mpfr_cos(v2lo, hi_, MPFR_RNDD);
    mpfr_cos(v2hi, hi_, MPFR_RNDU);
    mpfr_min(r.lo_, v1lo, v2lo, MPFR_RNDD);
    mpfr_max(r.hi_, v1hi, v2hi, MPFR_RNDU);
    long kmin, kmax;
    pi_multiple_range(lo_, hi_, 0.0, kmin, kmax, prec_);
    if (kmax - kmin > 16) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else {
        // cos max at 2k pi, min at (2k+1) pi
        if (may_contain_pi_multiple(lo_, hi_, 0.0, 2, 0, prec_))
            mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        if (may_contain_pi_multiple(lo_, hi_, 0.0, 2, 1, prec_))
            mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    mpfr_clear(v1lo);
    mpfr_clear(v1hi);
    mpfr_clear(v2lo);
    mpfr_clear(v2hi);
    return r;
}

Enclosure Enclosure::arccos() const {
    // Decreasing on [-1, 1]; clip tiny rounding excursions outside the domain.
    Enclosure r(0L, prec_);
    mpfr_t a;
    mpfr_init2(a, prec_);
    if (mpfr_cmp_si(lo_, -1) < 0 || mpfr_cmp_si(hi_, 1) > 0) {
        // allow only enclosure slack, not genuinely out-of-domain input
        if (mpfr_cmp_si(hi_, -1) < 0 || mpfr_cmp_si(lo_, 1) > 0) {
            mpfr_clear(a);
            throw OutOfRange("arccos argument outside [-1,1]");
        }
    }
    mpfr_set(a, hi_, MPFR_RNDU);
    if (mpfr_cmp_si(a, 1) > 0) mpfr_set_si(a, 1, MPFR_RNDZ);
    mpfr_acos(r.lo_, a, MPFR_RNDD);
    mpfr_set(a, lo_, MPFR_RNDD);
    if (mpfr_cmp_si(a, -1) < 0) mpfr_set_si(a, -1, MPFR_RNDZ);
    mpfr_acos(r.hi_, a, MPFR_RNDU);
    mpfr_clear(a);
    return r;
}

Enclosure Enclosure::arccosh() const {
    if (mpfr_cmp_si(hi_, 1) < 0) throw OutOfRange("arccosh argument below 1");
    Enclosure r(0L, prec_);
    if (mpfr_cmp_si(lo_, 1) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_acosh(r.lo_, lo_, MPFR_RNDD);
    mpfr_acosh(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::pow_int(unsigned k) const {
    Enclosure r(1L, prec_);
    if (k == 0) return r;
    // even powers of straddling intervals must not go negative
    if (k % 2 == 0) {
        Enclosure a = abs();
        Enclosure acc = a;
        for (unsigned i = 1; i < k; ++i) acc = acc * a;
        return acc;
    }
    Enclosure acc = *this;
    for (unsigned i = 1; i < k; ++i) acc = acc * *this;
    return acc;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
    Enclosure r(0L, std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::intersect(const Enclosure& a, const Enclosure& b) {
    Enclosure r(0L, std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(r.lo_, r.hi_) > 0)
        throw OutOfRange("intersection of disjoint enclosures");
    return r;
}

Enclosure Enclosure::with_precision(mpfr_prec_t prec) const {
    Enclosure r(0L, prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

std::string Enclosure::str(size_t digits) const {
    std::ostringstream os;
    char* s1 = nullptr;
    char* s2 = nullptr;
    mpfr_asprintf(&s1, "%.*Rg", static_cast<int>(digits), lo_);
    mpfr_asprintf(&s2, "%.*Rg", static_cast<int>(digits), hi_);
    os << "[" << s1 << ", " << s2 << "]";
    mpfr_free_str(s1);
    mpfr_free_str(s2);
    return os.str();
}

} // namespace gapcert
