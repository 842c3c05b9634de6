#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace gapcert {

/// A rigorous real interval [lower, upper] with outward-rounded endpoints.
///
/// Every operation returns an interval guaranteed to contain the exact
/// result whenever the inputs contain the exact operands.  Endpoints are
/// MPFR numbers; the working precision travels with the value (binary
/// operations use the max of the operand precisions).
class Enclosure {
public:
    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t bits);

    Enclosure();                                   // exact [0, 0]
    explicit Enclosure(long v, mpfr_prec_t prec = 0);
    explicit Enclosure(double v, mpfr_prec_t prec = 0);
    explicit Enclosure(const mpq_class& q, mpfr_prec_t prec = 0);
    Enclosure(const Enclosure& o);
    Enclosure(Enclosure&& o) noexcept;
    Enclosure& operator=(const Enclosure& o);
    Enclosure& operator=(Enclosure&& o) noexcept;
    ~Enclosure();

    static Enclosure from_endpoints(double lo, double hi, mpfr_prec_t prec = 0);
    static Enclosure pi(mpfr_prec_t prec = 0);

    mpfr_prec_t precision() const { return prec_; }

    double lower_d() const;   // rounded down
    double upper_d() const;   // rounded up
    double mid_d() const;
    double width_d() const;   // rounded up
    Enclosure width() const;

    bool is_finite() const;
    bool contains_zero() const;
    bool contains(const mpq_class& q) const;
    bool definitely_positive() const;
    bool definitely_negative() const;
    // Strict interval order: every point of *this < every point of o.
    bool definitely_less(const Enclosure& o) const;
    bool overlaps(const Enclosure& o) const;

    Enclosure operator-() const;
    Enclosure operator+(const Enclosure& o) const;
    Enclosure operator-(const Enclosure& o) const;
    Enclosure operator*(const Enclosure& o) const;
    Enclosure operator/(const Enclosure& o) const;  // throws if o contains 0
    Enclosure& operator+=(const Enclosure& o) { return *this = *this + o; }
    Enclosure& operator-=(const Enclosure& o) { return *this = *this - o; }
    Enclosure& operator*=(const Enclosure& o) { return *this = *this * o; }
    Enclosure& operator/=(const Enclosure& o) { return *this = *this / o; }

    Enclosure abs() const;
    Enclosure sqrt() const;       // domain clipped at 0 if the true value is >= 0
    Enclosure exp() const;
    Enclosure log() const;
    Enclosure sinh() const;
    Enclosure cosh() const;
    Enclosure sin() const;
    Enclosure cos() const;
    Enclosure arccos() const;     // argument clipped to [-1, 1]
    Enclosure arccosh() const;    // argument clipped to [1, inf)
    Enclosure arcsinh() const;
    Enclosure pow_int(unsigned k) const;

    static Enclosure hull(const Enclosure& a, const Enclosure& b);
    /// Intersection; throws if the inputs are disjoint.
    static Enclosure intersect(const Enclosure& a, const Enclosure& b);
    // Widen to a given precision (or shrink: endpoints re-rounded outward).
    Enclosure with_precision(mpfr_prec_t prec) const;

    std::string str(size_t digits = 20) const;

    // Raw endpoint access for modules building on top (read only).
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;

    void init(mpfr_prec_t prec);
    Enclosure blank(const Enclosure& o) const;  // uninitialised result at joint precision
};

inline Enclosure operator+(long a, const Enclosure& b) { return Enclosure(a, b.precision()) + b; }
inline Enclosure operator-(long a, const Enclosure& b) { return Enclosure(a, b.precision()) - b; }
inline Enclosure operator*(long a, const Enclosure& b) { return Enclosure(a, b.precision()) * b; }

} // namespace gapcert
