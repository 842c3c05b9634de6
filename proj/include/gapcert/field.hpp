#pragma once

#include "gapcert/enclosure.hpp"

#include <gmpxx.h>

#include <array>
#include <string>

namespace gapcert::fuchsia {

/// An element of Q(alpha), alpha = 2 cos(pi/8), with minimal polynomial
/// t^4 - 4 t^2 + 2.  Coordinates are exact rationals over the power basis
/// 1, alpha, alpha^2, alpha^3; the real embedding in use is the largest
/// root, alpha = sqrt(2 + sqrt 2) ~ 1.8477590650.
class FieldElem {
public:
    FieldElem() = default;                     // zero
    explicit FieldElem(const mpq_class& rational);
    explicit FieldElem(long n);
    static FieldElem alpha();
    static FieldElem sqrt2();                  // alpha^2 - 2
    static FieldElem from_coords(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3);

    const std::array<mpq_class, 4>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const FieldElem& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // throws on division by zero
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const;

    /// Exact sign under the fixed real embedding (-1, 0, +1).
    int sign() const;
    int cmp(const FieldElem& o) const { return (*this - o).sign(); }
    FieldElem abs() const { return sign() >= 0 ? *this : -*this; }

    /// Lexicographic coordinate comparison (an arbitrary total order used
    /// for canonical forms and map keys, unrelated to the embedding).
    int cmp_lex(const FieldElem& o) const;

    Enclosure to_enclosure(mpfr_prec_t prec = 0) const;
    double to_double() const;
    std::string str() const;  // "c0 + c1*a + c2*a^2 + c3*a^3" with zero terms dropped

private:
    std::array<mpq_class, 4> c_{};
};

} // namespace gapcert::fuchsia
