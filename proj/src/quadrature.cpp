#include "gapcert/quadrature.hpp"

#include "gapcert/errors.hpp"

#include <cmath>

namespace gapcert::selberg {

namespace {

Enclosure q_enc(const mpq_class& q, mpfr_prec_t prec) { return Enclosure(q, prec); }

// Interval of t^k over [tlo, thi], exact rational endpoints.
Enclosure t_power_range(const mpq_class& tlo, const mpq_class& thi, int k, mpfr_prec_t prec) {
    if (k == 0) return Enclosure(1L, prec);
    auto powq = [](mpq_class base, int e) {
        mpq_class r(1);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    mpq_class plo = powq(tlo, k), phi = powq(thi, k);
    mpq_class lo = std::min(plo, phi), hi = std::max(plo, phi);
    if (k % 2 == 0 && tlo < 0 && thi > 0) lo = 0;
    return Enclosure::hull(q_enc(lo, prec), q_enc(hi, prec));
}

mpq_class factorial_q(int k) {
    mpq_class r(1);
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

} // namespace

Enclosure TaylorModel::range() const {
    // Horner over the domain interval
    Enclosure t = Enclosure::hull(q_enc(tlo, prec), q_enc(thi, prec));
    Enclosure acc(0L, prec);
    for (int k = degree(); k >= 0; --k) acc = acc * t + coeff[k];
    return acc + remainder;
}

Enclosure TaylorModel::integrate() const {
    Enclosure acc(0L, prec);
    mpq_class plo = tlo, phi = thi;  // running powers t^{k+1}
    for (int k = 0; k <= degree(); ++k) {
        acc += coeff[k] * q_enc((phi - plo) / (k + 1), prec);
        plo *= tlo;
        phi *= thi;
    }
    acc += remainder * q_enc(thi - tlo, prec);
    return acc;
}

TaylorModel tm_constant(const Enclosure& c, const Panel& p) {
    TaylorModel m;
    m.prec = p.prec;
    m.coeff.assign(1, c.with_precision(p.prec));
    m.remainder = Enclosure(0L, p.prec);
    m.tlo = p.a - p.x0;
    m.thi = p.b - p.x0;
    return m;
}

TaylorModel tm_coordinate(const Panel& p) {
    TaylorModel m = tm_constant(q_enc(p.x0, p.prec), p);
    m.coeff.push_back(Enclosure(1L, p.prec));
    return m;
}

TaylorModel tm_polynomial(const std::vector<mpq_class>& q, const Panel& p) {
    // recenter exactly: sum_k q_k (x0 + t)^k via repeated multiplication
    TaylorModel m = tm_constant(Enclosure(0L, p.prec), p);
    m.coeff.assign(q.size(), Enclosure(0L, p.prec));
    std::vector<mpq_class> shifted(q.size(), 0);
    // binomial shift: coefficients of sum q_k (t + x0)^k
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0) continue;
        // expand (t + x0)^k
        std::vector<mpq_class> binom(k + 1);
        binom[0] = 1;
        for (std::size_t i = 1; i <= k; ++i)
            binom[i] = binom[i - 1] * mpq_class(static_cast<long>(k - i + 1)) /
                       mpq_class(static_cast<long>(i));
        mpq_class x0pow(1);
        for (std::size_t j = 0; j <= k; ++j) {
            // term t^{k-j} * x0^j * C(k, j)
            shifted[k - j] += q[k] * binom[j] * x0pow;
            x0pow *= p.x0;
        }
    }
    for (std::size_t k = 0; k < q.size(); ++k) m.coeff[k] = q_enc(shifted[k], p.prec);
    return m;
}

namespace {

TaylorModel tm_sinh_cosh(const mpq_class& s, const Panel& p, bool want_sinh) {
    TaylorModel m;
    m.prec = p.prec;
    m.tlo = p.a - p.x0;
    m.thi = p.b - p.x0;
    const int N = p.max_degree;
    Enclosure u0 = q_enc(s * p.x0, p.prec);
    Enclosure sh = u0.sinh(), ch = u0.cosh();
    m.coeff.resize(N + 1, Enclosure(0L, p.prec));
    mpq_class spow(1);
    for (int k = 0; k <= N; ++k) {
        const Enclosure& base = (k % 2 == 0) == want_sinh ? sh : ch;
        m.coeff[k] = base * q_enc(spow / factorial_q(k), p.prec);
        spow *= s;
    }
    // Lagrange remainder: |f^(N+1)| <= |s|^{N+1} cosh(s x) on the panel
    mpq_class h = p.radius();
    Enclosure umax = q_enc(abs(s) * (abs(p.x0) + h), p.prec);
    mpq_class hn(1), sn(1);
    for (int i = 0; i <= N; ++i) {
        hn *= h;
        sn *= abs(s);
    }
    Enclosure rbound = umax.cosh() * q_enc(sn * hn / factorial_q(N + 1), p.prec);
    m.remainder = Enclosure::hull(-rbound, rbound);
    return m;
}

} // namespace

TaylorModel tm_sinh_scaled(const mpq_class& s, const Panel& p) {
    return tm_sinh_cosh(s, p, true);
}

TaylorModel tm_cosh_scaled(const mpq_class& s, const Panel& p) {
    return tm_sinh_cosh(s, p, false);
}

TaylorModel tm_sinhc_scaled(const mpq_class& s, const Panel& p) {
    if (p.x0 != 0 || p.a != 0)
        throw PrecisionFail("sinhc model expects a panel starting at 0 with expansion point 0");
    TaylorModel m;
    m.prec = p.prec;
    m.tlo = 0;
    m.thi = p.b;
    const int N = p.max_degree;
    m.coeff.assign(N + 1, Enclosure(0L, p.prec));
    mpq_class s2 = s * s;
    mpq_class s2k(1);
    for (int k = 0; 2 * k <= N; ++k) {
        m.coeff[2 * k] = q_enc(s2k / factorial_q(2 * k + 1), p.prec);
        s2k *= s2;
    }
    // tail bound: next even term times a geometric factor
    int K = N % 2 == 0 ? N + 2 : N + 1;  // first omitted even power
    mpq_class h = p.b;
    mpq_class u2 = s2 * h * h;
    mpq_class term(1);
    for (int i = 0; i < K / 2; ++i) term *= u2;
    term /= factorial_q(K + 1);
    mpq_class ratio_den = mpq_class((K + 2) * (K + 3));
    if (u2 >= ratio_den) throw PrecisionFail("sinhc tail outside its bound radius");
    mpq_class tail = term / (1 - u2 / ratio_den);
    m.remainder = Enclosure::hull(Enclosure(0L, p.prec), q_enc(tail, p.prec));
    return m;
}

namespace {

void align(const TaylorModel& a, const TaylorModel& b) {
    if (a.tlo != b.tlo || a.thi != b.thi)
        throw PrecisionFail("Taylor model domain mismatch");
}

} // namespace

TaylorModel tm_add(const TaylorModel& a, const TaylorModel& b) {
    align(a, b);
    TaylorModel m = a;
    if (b.coeff.size() > m.coeff.size()) m.coeff.resize(b.coeff.size(), Enclosure(0L, m.prec));
    for (std::size_t k = 0; k < b.coeff.size(); ++k) m.coeff[k] += b.coeff[k];
    m.remainder += b.remainder;
    return m;
}

TaylorModel tm_sub(const TaylorModel& a, const TaylorModel& b) {
    return tm_add(a, tm_scale(b, Enclosure(-1L, a.prec)));
}

TaylorModel tm_scale(const TaylorModel& a, const Enclosure& c) {
    TaylorModel m = a;
    for (auto& ck : m.coeff) ck *= c;
    m.remainder *= c;
    return m;
}

TaylorModel tm_mul(const TaylorModel& a, const TaylorModel& b) {
    align(a, b);
    TaylorModel m;
    m.prec = a.prec;
    m.tlo = a.tlo;
    m.thi = a.thi;
    const int N = std::max(a.degree(), b.degree());
    m.coeff.assign(N + 1, Enclosure(0L, m.prec));
    Enclosure spill(0L, m.prec);
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            Enclosure prod = a.coeff[i] * b.coeff[j];
            if (i + j <= N)
                m.coeff[i + j] += prod;
            else
                spill += prod * t_power_range(m.tlo, m.thi, i + j, m.prec);
        }
    }
    // polynomial ranges (without remainders)
    auto poly_range = [&](const TaylorModel& t) {
        Enclosure dom = Enclosure::hull(q_enc(t.tlo, t.prec), q_enc(t.thi, t.prec));
        Enclosure acc(0L, t.prec);
        for (int k = t.degree(); k >= 0; --k) acc = acc * dom + t.coeff[k];
        return acc;
    };
    m.remainder = spill + poly_range(a) * b.remainder + poly_range(b) * a.remainder +
                  a.remainder * b.remainder;
    return m;
}

TaylorModel tm_div(const TaylorModel& a, const TaylorModel& b) {
    align(a, b);
    Enclosure branges = b.range();
    if (branges.contains_zero())
        throw PrecisionFail("Taylor model division by an interval containing zero");
    const int N = std::max(a.degree(), b.degree());
    TaylorModel q;
    q.prec = a.prec;
    q.tlo = a.tlo;
    q.thi = a.thi;
    q.coeff.assign(N + 1, Enclosure(0L, q.prec));
    q.remainder = Enclosure(0L, q.prec);
    if (b.coeff[0].contains_zero())
        throw PrecisionFail("Taylor model division: leading coefficient contains zero");
    auto acoef = [&](int k) {
        return k <= a.degree() ? a.coeff[k] : Enclosure(0L, q.prec);
    };
    auto bcoef = [&](int k) {
        return k <= b.degree() ? b.coeff[k] : Enclosure(0L, q.prec);
    };
    for (int k = 0; k <= N; ++k) {
        Enclosure acc = acoef(k);
        for (int j = 1; j <= k; ++j) acc -= bcoef(j) * q.coeff[k - j];
        q.coeff[k] = acc / b.coeff[0];
    }
    // defect: a/b = q + (a - q b)/b
    TaylorModel qb = tm_mul(q, b);
    TaylorModel err = tm_sub(a, qb);
    q.remainder = err.range() / branges;
    return q;
}

Enclosure integrate_adaptive(const PanelBuilder& builder, const mpq_class& a,
                             const mpq_class& b, const QuadratureOptions& opts) {
    const mpfr_prec_t prec = opts.prec > 0 ? opts.prec : Enclosure::default_precision();
    double target = opts.target_width > 0
                        ? opts.target_width
                        : std::ldexp(1.0, -static_cast<int>(prec) + 40);
    const double total_len = mpq_class(b - a).get_d();
    if (total_len <= 0) return Enclosure(0L, prec);

    Enclosure sum(0L, prec);
    struct Item {
        mpq_class a, b;
        int depth;
    };
    std::vector<Item> stack{{a, b, 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        Panel p;
        p.a = it.a;
        p.b = it.b;
        p.x0 = it.a == 0 ? mpq_class(0) : mpq_class((it.a + it.b) / 2);
        p.max_degree = opts.max_degree;
        p.prec = prec;
        TaylorModel tm = builder(p);
        Enclosure piece = tm.integrate();
        double len = mpq_class(it.b - it.a).get_d();
        double budget = target * len / total_len;
        if (piece.width_d() <= budget || it.depth >= opts.max_depth) {
            if (piece.width_d() > budget)
                throw PrecisionFail("quadrature width budget unattainable at max depth");
            sum += piece;
        } else {
            mpq_class mid = (it.a + it.b) / 2;
            stack.push_back({mid, it.b, it.depth + 1});
            stack.push_back({it.a, mid, it.depth + 1});
        }
    }
    return sum;
}

} // namespace gapcert::selberg
