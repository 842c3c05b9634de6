#pragma once

#include "gapcert/field.hpp"

#include <string>
#include <tuple>

namespace gapcert::fuchsia {

/// An element of the (2,3,8) triangle group as a unit quaternion over
/// Q(alpha).  The algebra is (-1, delta | Q(alpha)) with delta =
/// (alpha^2 - 3)/4 = (sqrt2 - 1)/4: basis 1, i, j, k, i^2 = -1,
/// j^2 = k^2 = delta, k = ij = -ji.  Under the real splitting
///
///     i -> [[0, 1], [-1, 0]],   j -> [[s, 0], [0, -s]],  s = sqrt(delta),
///
/// the element w + xi + yj + zk acts on the upper half-plane as the
/// determinant-one matrix [[w + ys, x - zs], [-x - zs, w - ys]].  Traces
/// and determinants are exact in Q(alpha); a 2x2 matrix presentation with
/// entries in the trace field itself does not exist for this group, which
/// is why the twisted coordinates are used.
class Mobius {
public:
    FieldElem w, x, y, z;

    Mobius() : w(1L) {}  // identity
    Mobius(FieldElem w_, FieldElem x_, FieldElem y_, FieldElem z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static FieldElem twist();  // delta

    Mobius operator*(const Mobius& o) const;
    Mobius conj() const { return Mobius(w, -x, -y, -z); }
    FieldElem det() const;           // w^2 + x^2 - delta (y^2 + z^2)
    Mobius inverse() const;          // conj / det
    FieldElem trace() const;         // 2w, exact
    Mobius conjugated_by(const Mobius& g) const;  // g * this * g^-1

    bool is_identity_projective() const;
    bool projectively_equal(const Mobius& o) const;

    /// Canonical sign representative: the lexicographically larger of q, -q.
    Mobius canonical() const;
    int cmp_lex(const Mobius& o) const;
    bool operator==(const Mobius& o) const;

    /// cosh of the hyperbolic distance between i and (this)(i); exact.
    /// Equals 1 + 2 delta (y^2 + z^2) for determinant-one elements.
    FieldElem displacement_cosh() const;

    /// Sign of the lower-left matrix entry -x - z*sqrt(delta) under the real
    /// embedding (exact; used for the rotation orientation of elliptics).
    int lower_left_sign() const;

    /// Split-matrix entries as (u, v) pairs meaning u + v*sqrt(delta).
    struct SplitEntry {
        FieldElem u, v;
    };
    SplitEntry entry_a() const { return {w, y}; }
    SplitEntry entry_b() const { return {x, -z}; }
    SplitEntry entry_c() const { return {-x, -z}; }
    SplitEntry entry_d() const { return {w, -y}; }

    std::string str() const;
};

/// Exact generators x, y, z of the (2,3,8) triangle group: rotations of
/// orders 2, 3, 8 with x*y*z = 1 exactly and traces 0, 1, alpha.
std::tuple<Mobius, Mobius, Mobius> generator_matrices();

} // namespace gapcert::fuchsia
