#include "gapcert/mobius.hpp"

#include "gapcert/errors.hpp"

#include <sstream>

namespace gapcert::fuchsia {

FieldElem Mobius::twist() {
    // (alpha^2 - 3)/4
    return FieldElem::from_coords(mpq_class(-3, 4), 0, mpq_class(1, 4), 0);
}

Mobius Mobius::operator*(const Mobius& o) const {
    const FieldElem d = twist();
    Mobius r;
    r.w = w * o.w - x * o.x + d * (y * o.y + z * o.z);
    r.x = w * o.x + x * o.w - d * (y * o.z - z * o.y);
    r.y = w * o.y + y * o.w - x * o.z + z * o.x;
    r.z = w * o.z + z * o.w + x * o.y - y * o.x;
    return r;
}

FieldElem Mobius::det() const {
    return w * w + x * x - twist() * (y * y + z * z);
}

Mobius Mobius::inverse() const {
    FieldElem n = det();
    if (n.is_zero()) throw OutOfRange("inverse of a singular element");
    Mobius c = conj();
    FieldElem ninv = n.inverse();
    return Mobius(c.w * ninv, c.x * ninv, c.y * ninv, c.z * ninv);
}

FieldElem Mobius::trace() const { return w + w; }

Mobius Mobius::conjugated_by(const Mobius& g) const { return g * *this * g.inverse(); }

bool Mobius::is_identity_projective() const {
    if (!x.is_zero() || !y.is_zero() || !z.is_zero()) return false;
    return (w - FieldElem(1L)).is_zero() || (w + FieldElem(1L)).is_zero();
}

bool Mobius::projectively_equal(const Mobius& o) const {
    auto eq = [](const Mobius& a, const Mobius& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    };
    Mobius neg(-o.w, -o.x, -o.y, -o.z);
    return eq(*this, o) || eq(*this, neg);
}

int Mobius::cmp_lex(const Mobius& o) const {
    int c = w.cmp_lex(o.w);
    if (c) return c;
    c = x.cmp_lex(o.x);
    if (c) return c;
    c = y.cmp_lex(o.y);
    if (c) return c;
    return z.cmp_lex(o.z);
}

bool Mobius::operator==(const Mobius& o) const { return cmp_lex(o) == 0; }

Mobius Mobius::canonical() const {
    Mobius neg(-w, -x, -y, -z);
    return cmp_lex(neg) >= 0 ? *this : neg;
}

FieldElem Mobius::displacement_cosh() const {
    return w * w + x * x + twist() * (y * y + z * z);
}

int Mobius::lower_left_sign() const {
    // sign of u + v*sqrt(delta) with u = -x, v = -z
    const FieldElem u = -x, v = -z;
    int su = u.sign(), sv = v.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: compare u^2 against v^2 * delta
    int c = (u * u - v * v * twist()).sign();
    if (c == 0) return 0;  // cannot happen for group elements (irrational sqrt(delta))
    return c > 0 ? su : sv;
}

std::string Mobius::str() const {
    std::ostringstream os;
    os << "[" << w.str() << "; " << x.str() << "; " << y.str() << "; " << z.str() << "]";
    return os.str();
}

std::tuple<Mobius, Mobius, Mobius> generator_matrices() {
    const mpq_class half(1, 2);
    // x = i
    Mobius X(FieldElem(0L), FieldElem(1L), FieldElem(0L), FieldElem(0L));
    // y = 1/2 - (alpha/2) i + j
    Mobius Y(FieldElem(half), FieldElem::from_coords(0, -half, 0, 0), FieldElem(1L),
             FieldElem(0L));
    // z = (xy)^-1 = alpha/2 - 1/2 i - k
    Mobius Z(FieldElem::from_coords(0, half, 0, 0), FieldElem(mpq_class(-1, 2)), FieldElem(0L),
             FieldElem(-1L));
    return {X, Y, Z};
}

} // namespace gapcert::fuchsia
