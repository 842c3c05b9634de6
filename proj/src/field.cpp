#include "gapcert/field.hpp"

#include "gapcert/errors.hpp"

#include <mutex>
#include <sstream>

namespace gapcert::fuchsia {

namespace {

// Rational interval arithmetic used only for exact sign determination.
struct QInterval {
    mpq_class lo, hi;
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator*(const QInterval& o) const {
        mpq_class a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        mpq_class mn = std::min(std::min(a, b), std::min(c, d));
        mpq_class mx = std::max(std::max(a, b), std::max(c, d));
        return {mn, mx};
    }
    QInterval scaled(const mpq_class& q) const {
        return q >= 0 ? QInterval{q * lo, q * hi} : QInterval{q * hi, q * lo};
    }
    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
};

mpq_class minpoly_at(const mpq_class& t) {
    mpq_class t2 = t * t;
    return t2 * t2 - 4 * t2 + 2;
}

// A shrinking rational bracket around the largest root of t^4 - 4t^2 + 2.
class AlphaBracket {
public:
    QInterval get(int min_refinements) {
        std::lock_guard<std::mutex> lock(mu_);
        while (refinements_ < min_refinements) {
            mpq_class mid = (lo_ + hi_) / 2;
            if (minpoly_at(mid) < 0)
                lo_ = mid;
            else
                hi_ = mid;
            ++refinements_;
        }
        return {lo_, hi_};
    }

private:
    std::mutex mu_;
    // p(1.8) < 0 < p(1.9) and p is increasing across the largest root
    mpq_class lo_{9, 5};
    mpq_class hi_{19, 10};
    int refinements_ = 0;
};

AlphaBracket& alpha_bracket() {
    static AlphaBracket b;
    return b;
}

} // namespace

FieldElem::FieldElem(const mpq_class& rational) { c_[0] = rational; }
FieldElem::FieldElem(long n) { c_[0] = n; }

FieldElem FieldElem::alpha() {
    FieldElem e;
    e.c_[1] = 1;
    return e;
}

FieldElem FieldElem::sqrt2() {
    FieldElem e;
    e.c_[0] = -2;
    e.c_[2] = 1;
    return e;
}

FieldElem FieldElem::from_coords(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3) {
    FieldElem e;
    e.c_ = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
    return e;
}

bool FieldElem::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool FieldElem::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

FieldElem FieldElem::operator-() const {
    FieldElem e;
    for (int i = 0; i < 4; ++i) e.c_[i] = -c_[i];
    return e;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem e;
    for (int i = 0; i < 4; ++i) e.c_[i] = c_[i] + o.c_[i];
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    FieldElem e;
    for (int i = 0; i < 4; ++i) e.c_[i] = c_[i] - o.c_[i];
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    // convolution followed by reduction with a^4 = 4a^2 - 2,
    // a^5 = 4a^3 - 2a, a^6 = 14a^2 - 8
    std::array<mpq_class, 7> r{};
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    FieldElem e;
    e.c_[0] = r[0] - 2 * r[4] - 8 * r[6];
    e.c_[1] = r[1] - 2 * r[5];
    e.c_[2] = r[2] + 4 * r[4] + 14 * r[6];
    e.c_[3] = r[3] + 4 * r[5];
    return e;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw OutOfRange("inverse of zero field element");
    // columns: this * a^j expressed in the basis; solve M x = (1,0,0,0)
    mpq_class M[4][5];
    FieldElem pow = *this;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) M[i][j] = pow.c_[i];
        pow = pow * alpha();
    }
    for (int i = 0; i < 4; ++i) M[i][4] = (i == 0) ? 1 : 0;
    // Gaussian elimination with exact pivoting
    for (int col = 0; col < 4; ++col) {
        int pr = -1;
        for (int r = col; r < 4; ++r)
            if (M[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == -1) throw OutOfRange("singular multiplication matrix");
        if (pr != col)
            for (int j = 0; j < 5; ++j) std::swap(M[col][j], M[pr][j]);
        mpq_class inv = 1 / M[col][col];
        for (int j = col; j < 5; ++j) M[col][j] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || M[r][col] == 0) continue;
            mpq_class f = M[r][col];
            for (int j = col; j < 5; ++j) M[r][j] -= f * M[col][j];
        }
    }
    FieldElem e;
    for (int i = 0; i < 4; ++i) e.c_[i] = M[i][4];
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

int FieldElem::sign() const {
    if (is_zero()) return 0;
    // Since the minimal polynomial is irreducible, a nonzero element never
    // evaluates to zero at alpha, so interval refinement terminates.
    for (int refinements = 8;; refinements *= 2) {
        QInterval a = alpha_bracket().get(refinements);
        QInterval a2 = a * a;
        QInterval a3 = a2 * a;
        QInterval v{c_[0], c_[0]};
        v = v + a.scaled(c_[1]) + a2.scaled(c_[2]) + a3.scaled(c_[3]);
        if (v.positive()) return 1;
        if (v.negative()) return -1;
        if (refinements > 1 << 16)
            throw PrecisionFail("field element sign did not resolve");
    }
}

int FieldElem::cmp_lex(const FieldElem& o) const {
    for (int i = 0; i < 4; ++i) {
        int c = mpq_cmp(c_[i].get_mpq_t(), o.c_[i].get_mpq_t());
        if (c != 0) return c;
    }
    return 0;
}

Enclosure FieldElem::to_enclosure(mpfr_prec_t prec) const {
    Enclosure two(2L, prec);
    Enclosure a = (two + two.sqrt()).sqrt();
    Enclosure r(c_[0], prec);
    Enclosure p = a;
    for (int i = 1; i < 4; ++i) {
        r += Enclosure(c_[i], prec) * p;
        p = p * a;
    }
    return r;
}

double FieldElem::to_double() const { return to_enclosure(64).mid_d(); }

std::string FieldElem::str() const {
    static const char* names[4] = {"", "a", "a^2", "a^3"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        mpq_class v = first ? c_[i] : mpq_class(::abs(c_[i]));
        if (i == 0)
            os << v;
        else if (v == 1)
            os << names[i];
        else
            os << v << "*" << names[i];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace gapcert::fuchsia
