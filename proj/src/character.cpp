#include "gapcert/character.hpp"

#include "gapcert/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gapcert::groupkit {

namespace {

using u64 = std::uint64_t;

u64 add_m(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_m(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mul_m(u64 a, u64 b, u64 p) { return (a * b) % p; }  // p < 2^31

u64 pow_m(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul_m(r, a, p);
        a = mul_m(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_m(u64 a, u64 p) { return pow_m(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p = 1 (mod e) with p > bound.
u64 find_prime(u64 e, u64 bound, u64 cap) {
    u64 p = (bound / e + 1) * e + 1;
    while (p < cap) {
        if (is_prime(p)) return p;
        p += e;
    }
    throw CharFail("no splitting prime found below cap");
}

// Element of multiplicative order exactly e mod p (requires e | p-1).
u64 primitive_root_of_order(u64 e, u64 p) {
    // factor p-1
    std::vector<u64> primes;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool gen = true;
        for (u64 q : primes)
            if (pow_m(g, (p - 1) / q, p) == 1) {
                gen = false;
                break;
            }
        if (gen) return pow_m(g, (p - 1) / e, p);
    }
    throw CharFail("no generator found mod p");
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, u64 p) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return pivots;
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr == -1) continue;
        std::swap(m[r], m[pr]);
        u64 inv = inv_m(m[r][c], p);
        for (int j = 0; j < cols; ++j) m[r][j] = mul_m(m[r][j], inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            u64 f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = sub_m(m[i][j], mul_m(f, m[r][j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

// Kernel basis of a square matrix (rows) over F_p.
Mat kernel(Mat m, u64 p) {
    const int n = static_cast<int>(m.size());
    std::vector<int> pivots = rref(m, p);
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    Mat ker;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = sub_m(0, m[r][c], p);
        ker.push_back(std::move(v));
    }
    return ker;
}

struct Subspace {
    Mat basis;            // RREF rows, dimension basis.size()
    std::vector<int> pivots;
};

} // namespace

void ComplexCharacter::materialize(const FiniteGroupData& g, mpfr_prec_t prec) {
    const int K = g.num_classes();
    re.assign(K, Enclosure(0L, prec));
    im.assign(K, Enclosure(0L, prec));
    Enclosure two_pi = Enclosure(2L, prec) * Enclosure::pi(prec);
    for (int k = 0; k < K; ++k) {
        long n = g.classes[k].rep_order;
        Enclosure sre(0L, prec), sim(0L, prec);
        for (long l = 0; l < n; ++l) {
            long m = root_mults[k][l];
            if (m == 0) continue;
            Enclosure ang = two_pi * Enclosure(mpq_class(l, n), prec);
            sre += Enclosure(m, prec) * ang.cos();
            sim += Enclosure(m, prec) * ang.sin();
        }
        re[k] = sre;
        im[k] = sim;
    }
}

std::vector<ComplexCharacter> complex_character_table(const FiniteGroupData& g,
                                                      mpfr_prec_t prec) {
    const int K = g.num_classes();
    const long n = g.order;
    const PermGroup& G = *g.group;

    // Class element lists and element inverses.
    std::vector<std::vector<int>> class_elems(K);
    for (int e = 0; e < n; ++e) class_elems[g.class_of_element[e]].push_back(e);

    // Class multiplication coefficients a[i][j][k].
    std::vector<Mat> A(K, Mat(K, Vec(K, 0)));
    for (int k = 0; k < K; ++k) {
        int gk = g.classes[k].rep_element;
        for (int i = 0; i < K; ++i) {
            for (int u : class_elems[i]) {
                int v = G.multiply(G.inverse(u), gk);
                A[i][g.class_of_element[v]][k] += 1;
            }
        }
    }

    const u64 e = static_cast<u64>(g.exponent);
    const u64 bound = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(n))) + 1;
    u64 p = find_prime(e, std::max<u64>(bound, e), 1u << 24);
    for (auto& Ai : A)
        for (auto& row : Ai)
            for (auto& x : row) x %= p;

    // Split the centre of F_p[G] into one-dimensional common eigenspaces.
    std::vector<Subspace> spaces;
    {
        Subspace full;
        full.basis.assign(K, Vec(K, 0));
        for (int i = 0; i < K; ++i) full.basis[i][i] = 1;
        for (int i = 0; i < K; ++i) full.pivots.push_back(i);
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < K; ++i) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const Subspace& s) { return s.basis.size() == 1; });
        if (all_one) break;
        std::vector<Subspace> next;
        for (auto& V : spaces) {
            const int m = static_cast<int>(V.basis.size());
            if (m == 1) {
                next.push_back(std::move(V));
                continue;
            }
            // Restriction of A_i to V in basis coordinates.
            Mat images(m, Vec(K, 0));
            for (int s = 0; s < m; ++s)
                for (int j = 0; j < K; ++j) {
                    u64 acc = 0;
                    for (int k = 0; k < K; ++k)
                        acc = add_m(acc, mul_m(A[i][j][k], V.basis[s][k], p), p);
                    images[s][j] = acc;
                }
            Mat C(m, Vec(m, 0));
            for (int s = 0; s < m; ++s)
                for (int r = 0; r < m; ++r) C[s][r] = images[s][V.pivots[r]];
            // C[s][r]: coefficient of basis r in A_i * basis_s; eigen split on C^T.
            int found = 0;
            for (u64 lam = 0; lam < p && found < m; ++lam) {
                Mat shifted(m, Vec(m, 0));
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s)
                        shifted[r][s] = sub_m(C[s][r], (r == s ? lam : 0), p);
                Mat ker = kernel(shifted, p);
                if (ker.empty()) continue;
                found += static_cast<int>(ker.size());
                Subspace sub;
                for (const auto& coord : ker) {
                    Vec v(K, 0);
                    for (int r = 0; r < m; ++r)
                        for (int k = 0; k < K; ++k)
                            v[k] = add_m(v[k], mul_m(coord[r], V.basis[r][k], p), p);
                    sub.basis.push_back(std::move(v));
                }
                sub.pivots = rref(sub.basis, p);
                next.push_back(std::move(sub));
            }
            if (found != m) throw CharFail("class matrix failed to split over F_p");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != K)
        throw CharFail("wrong number of common eigenspaces");

    // Normalize each eigenvector to a character mod p.
    std::vector<u64> inv_size(K);
    for (int k = 0; k < K; ++k) inv_size[k] = inv_m(g.classes[k].size % p, p);
    const u64 z = primitive_root_of_order(e, p);

    std::vector<ComplexCharacter> table;
    for (const auto& V : spaces) {
        const Vec& v = V.basis[0];
        Vec psi(K);
        for (int k = 0; k < K; ++k) psi[k] = mul_m(v[k] % p, inv_size[k], p);
        u64 s = 0;
        for (int k = 0; k < K; ++k)
            s = add_m(s,
                      mul_m(g.classes[k].size % p, mul_m(psi[k], psi[g.inverse_class[k]], p), p),
                      p);
        if (s == 0) throw CharFail("degenerate norm in character normalization");
        u64 c2 = mul_m(n % p, inv_m(s, p), p);
        // c = sqrt(c2) mod p by scan (p is small).
        u64 c = 0;
        for (u64 r = 1; r < p; ++r)
            if (mul_m(r, r, p) == c2) {
                c = r;
                break;
            }
        if (c == 0) throw CharFail("character norm is not a square mod p");
        u64 d = mul_m(c, psi[0], p);
        if (d > p / 2) {
            d = p - d;
            c = p - c;
        }
        Vec theta(K);
        for (int k = 0; k < K; ++k) theta[k] = mul_m(c, psi[k], p);

        ComplexCharacter chi;
        chi.degree = static_cast<long>(d);
        chi.root_mults.resize(K);
        for (int k = 0; k < K; ++k) {
            const long nk = g.classes[k].rep_order;
            const u64 zk = pow_m(z, e / static_cast<u64>(nk), p);
            const u64 inv_nk = inv_m(static_cast<u64>(nk) % p, p);
            chi.root_mults[k].assign(nk, 0);
            for (long l = 0; l < nk; ++l) {
                u64 acc = 0;
                for (long t = 0; t < nk; ++t) {
                    u64 th = theta[g.power_classes[k][t]];
                    u64 w = pow_m(zk, static_cast<u64>((nk - l) * t % nk), p);
                    acc = add_m(acc, mul_m(th, w, p), p);
                }
                u64 ml = mul_m(acc, inv_nk, p);
                if (ml > static_cast<u64>(chi.degree))
                    throw CharFail("root-of-unity multiplicity out of range");
                chi.root_mults[k][l] = static_cast<long>(ml);
            }
            long total = 0;
            for (long l = 0; l < nk; ++l) total += chi.root_mults[k][l];
            if (total != chi.degree)
                throw CharFail("multiplicities do not sum to the degree");
        }
        // Frobenius-Schur indicator from the squaring map.
        u64 fs = 0;
        for (int k = 0; k < K; ++k)
            fs = add_m(fs, mul_m(g.classes[k].size % p, theta[g.power_map[k]], p), p);
        fs = mul_m(fs, inv_m(n % p, p), p);
        if (fs == 0)
            chi.indicator = 0;
        else if (fs == 1)
            chi.indicator = 1;
        else if (fs == p - 1)
            chi.indicator = -1;
        else
            throw CharFail("Frobenius-Schur indicator not in {-1,0,1}");
        chi.is_trivial = true;
        for (int k = 0; k < K && chi.is_trivial; ++k)
            for (long l = 0; l < g.classes[k].rep_order; ++l)
                if (chi.root_mults[k][l] != (l == 0 ? 1 : 0)) {
                    chi.is_trivial = false;
                    break;
                }
        table.push_back(std::move(chi));
    }

    long degree_sq_sum = 0;
    for (const auto& chi : table) degree_sq_sum += chi.degree * chi.degree;
    if (degree_sq_sum != n) throw CharFail("degree identity sum d_i^2 = |G| failed");

    std::sort(table.begin(), table.end(), [](const ComplexCharacter& a, const ComplexCharacter& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.root_mults < b.root_mults;
    });
    for (auto& chi : table) chi.materialize(g, prec);
    return table;
}

std::vector<Character> character_table(const FiniteGroupData& g, mpfr_prec_t prec) {
    std::vector<ComplexCharacter> cplx = complex_character_table(g, prec);
    const int K = g.num_classes();
    std::vector<Character> real_table;
    std::vector<char> used(cplx.size(), 0);
    for (std::size_t i = 0; i < cplx.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        const ComplexCharacter& chi = cplx[i];
        Character out;
        out.indicator = chi.indicator;
        out.is_trivial = chi.is_trivial;
        if (chi.indicator == 1) {
            out.degree = chi.degree;
            out.values = chi.re;  // imaginary part is identically zero
        } else if (chi.indicator == -1) {
            // quaternionic: real form carries chi + conj(chi) = 2 chi
            out.degree = 2 * chi.degree;
            out.values.reserve(K);
            for (int k = 0; k < K; ++k)
                out.values.push_back(Enclosure(2L, prec) * chi.re[k]);
        } else {
            // complex type: find the conjugate partner via inverse classes
            std::size_t partner = cplx.size();
            for (std::size_t j = i + 1; j < cplx.size(); ++j) {
                if (used[j] || cplx[j].degree != chi.degree) continue;
                bool conj = true;
                for (int k = 0; k < K && conj; ++k)
                    if (cplx[j].root_mults[k] != chi.root_mults[g.inverse_class[k]]) conj = false;
                if (conj) {
                    partner = j;
                    break;
                }
            }
            if (partner == cplx.size())
                throw CharFail("no conjugate partner for an indicator-0 character");
            used[partner] = 1;
            out.degree = 2 * chi.degree;
            out.values.reserve(K);
            for (int k = 0; k < K; ++k)
                out.values.push_back(chi.re[k] + cplx[partner].re[k]);
        }
        real_table.push_back(std::move(out));
    }
    std::sort(real_table.begin(), real_table.end(), [](const Character& a, const Character& b) {
        if (a.is_trivial != b.is_trivial) return a.is_trivial;
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t k = 0; k < a.values.size(); ++k) {
            double am = a.values[k].mid_d(), bm = b.values[k].mid_d();
            if (std::abs(am - bm) > 1e-9) return am < bm;
        }
        return false;
    });
    return real_table;
}

} // namespace gapcert::groupkit
