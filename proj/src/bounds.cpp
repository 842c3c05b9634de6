#include "gapcert/bounds.hpp"

#include "gapcert/covers.hpp"
#include "gapcert/errors.hpp"
#include "gapcert/rng.hpp"

#include <json.hpp>

#include <cmath>

namespace gapcert::bounds {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTol = 1e-6;
} // namespace

double planar_cheeger(double sys) {
    if (!(sys > 0)) throw NonPositive("systole must be positive");
    return 1.0 - 2.0 * kPi / (sys + 2.0 * kPi);
}

double planar_lambda1(double sys) {
    double h = planar_cheeger(sys);
    return 0.25 * h * h;
}

double collar_width(double ell) {
    if (!(ell > 0)) throw NonPositive("geodesic length must be positive");
    return std::asinh(1.0 / std::sinh(ell / 2.0));
}

void ConstantsLedger::validate() const {
    if (!(ell > 4.0 * w)) throw VerificationFailed("ledger: l <= 4w");
    if (!(planar_lambda1(ell) > 0.25 - 0.5 * eta))
        throw VerificationFailed("ledger: tree-cover gap constraint fails");
    double budget = std::min(eps / A, eta / B);
    if (!(ell * std::exp(-ell * std::sqrt(eta)) < budget))
        throw VerificationFailed("ledger: flattening budget constraint fails");
}

std::string ConstantsLedger::to_json() const {
    nlohmann::ordered_json j;
    j["eta"] = eta;
    j["w"] = w;
    j["eps"] = eps;
    j["B"] = B;
    j["A"] = A;
    j["ell"] = ell;
    j["rigorous_constants"] = rigorous_constants;
    if (!rigorous_constants)
        j["note"] = "A, B, eps are user-supplied placeholders, NOT derived bounds";
    return j.dump(2);
}

ConstantsLedger ledger_solve(double eta, double w, double A, double B, double eps) {
    if (!(eta > 0) || !(w > 0) || !(A > 0) || !(B > 0) || !(eps > 0))
        throw NonPositive("ledger inputs must be positive");
    ConstantsLedger lg;
    lg.eta = eta;
    lg.w = w;
    lg.A = A;
    lg.B = B;
    lg.eps = eps;

    // constraint 1: (1/4)(1 - 2pi/(l+2pi))^2 > 1/4 - eta/2, increasing in l
    double l1 = 0;
    if (0.25 - 0.5 * eta > 0) {
        double lo = 0, hi = 1;
        while (!(planar_lambda1(hi) > 0.25 - 0.5 * eta)) hi *= 2;
        while (hi - lo > kTol) {
            double mid = 0.5 * (lo + hi);
            if (planar_lambda1(mid) > 0.25 - 0.5 * eta)
                hi = mid;
            else
                lo = mid;
        }
        l1 = hi;
    }

    const double budget = std::min(eps / A, eta / B);
    auto c2 = [&](double l) { return l * std::exp(-l * std::sqrt(eta)) < budget; };

    double base = std::max(l1, 4.0 * w + kTol);
    if (c2(base)) {
        lg.ell = base;
    } else {
        // l e^{-l sqrt(eta)} decreases beyond its peak at 1/sqrt(eta)
        double lo = std::max(base, 1.0 / std::sqrt(eta));
        double hi = lo + 1;
        while (!c2(hi)) hi *= 2;
        while (hi - lo > kTol) {
            double mid = 0.5 * (lo + hi);
            if (c2(mid))
                hi = mid;
            else
                lo = mid;
        }
        lg.ell = hi;
    }
    lg.validate();
    return lg;
}

double delocalization_bound(double A, double t, double lambda, long orbit_count) {
    if (!(lambda > 0) || !(lambda < 0.25))
        throw OutOfRange("delocalization bound needs lambda in (0, 1/4)");
    if (!(A > 0) || !(t >= 0) || orbit_count < 1)
        throw OutOfRange("invalid delocalization parameters");
    return A * std::exp(-t * std::sqrt(0.25 - lambda)) * static_cast<double>(orbit_count);
}

FlatteningCost flattening_cost(double B, double sup_norm_sq, double ell, long k, double eps) {
    if (B < 0 || sup_norm_sq < 0 || ell < 0 || k < 0 || eps < 0)
        throw OutOfRange("flattening-cost parameters must be nonnegative");
    FlatteningCost fc;
    fc.admissible = sup_norm_sq * ell < eps;  // strict
    fc.rayleigh_increment = B * sup_norm_sq * ell * static_cast<double>(k);
    return fc;
}

double poisson_pmf(double mu, int k) {
    double logp = -mu + k * std::log(mu);
    for (int i = 2; i <= k; ++i) logp -= std::log(static_cast<double>(i));
    return std::exp(logp);
}

CycleStatReport cycle_stats(const groupkit::Word& f2_word, const std::string& word_label,
                            int cycle_length, int degree, long samples,
                            std::uint64_t master_seed) {
    if (cycle_length < 1 || degree < 1 || samples < 1)
        throw OutOfRange("cycle statistics need positive parameters");
    CycleStatReport rep;
    rep.word = word_label;
    rep.cycle_length = cycle_length;
    rep.samples = samples;
    rep.degree = degree;
    rep.master_seed = master_seed;

    std::vector<long> histogram;
    double total = 0;
    for (long s = 0; s < samples; ++s) {
        coverlab::PermRep pr = coverlab::sample_rep(degree, derive_seed(master_seed, s));
        Perm img = coverlab::f2_image(pr, f2_word);
        int count = perm_count_cycles_of_length(img, cycle_length);
        if (count >= static_cast<int>(histogram.size())) histogram.resize(count + 1, 0);
        ++histogram[count];
        total += count;
    }
    rep.mean = total / static_cast<double>(samples);

    const double mu = 1.0 / cycle_length;
    rep.empirical_pmf.resize(histogram.size());
    rep.reference_pmf.resize(histogram.size());
    double tv = 0, ref_mass = 0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        rep.empirical_pmf[k] = static_cast<double>(histogram[k]) / samples;
        rep.reference_pmf[k] = poisson_pmf(mu, static_cast<int>(k));
        ref_mass += rep.reference_pmf[k];
        tv += std::abs(rep.empirical_pmf[k] - rep.reference_pmf[k]);
    }
    tv += 1.0 - ref_mass;  // Poisson tail beyond the observed support
    rep.tv_distance = 0.5 * tv;
    return rep;
}

std::string CycleStatReport::to_json() const {
    nlohmann::ordered_json j;
    j["word"] = word;
    j["cycle_length"] = cycle_length;
    j["samples"] = samples;
    j["degree"] = degree;
    j["master_seed"] = master_seed;
    j["empirical_pmf"] = empirical_pmf;
    j["reference_pmf"] = reference_pmf;
    j["tv_distance"] = tv_distance;
    j["mean"] = mean;
    return j.dump(2);
}

} // namespace gapcert::bounds
