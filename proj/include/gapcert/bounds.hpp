#pragma once

#include "gapcert/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gapcert::bounds {

/// Cheeger lower bound for planar hyperbolic surfaces without cusps:
/// h >= 1 - 2 pi / (sys + 2 pi).
double planar_cheeger(double sys);

/// Cheeger's inequality applied to the planar bound:
/// lambda_1 >= (1/4)(1 - 2 pi / (sys + 2 pi))^2.
double planar_lambda1(double sys);

/// Half-width of the standard collar: arcsinh(1/sinh(l/2)).
double collar_width(double ell);

/// The constants ledger: a length l > 4w making the tree-cover gap bound
/// beat 1/4 - eta/2 while l e^{-l sqrt(eta)} clears the flattening budget.
struct ConstantsLedger {
    double eta = 0, w = 0, eps = 0, B = 0, A = 0, ell = 0;
    bool rigorous_constants = false;  // A, B, eps are user inputs, not derived

    void validate() const;  // both inequalities and l > 4w; throws
    std::string to_json() const;
};

/// Minimal l (tolerance 1e-6) satisfying the ledger constraints, found by
/// monotone bisection per constraint.
ConstantsLedger ledger_solve(double eta, double w, double A, double B, double eps);

/// Sup-norm delocalization value A e^{-t sqrt(1/4 - lambda)} * orbit_count.
double delocalization_bound(double A, double t, double lambda, long orbit_count);

struct FlatteningCost {
    bool admissible = false;     // sup_norm_sq * ell < eps, strict
    double rayleigh_increment = 0;  // B * sup_norm_sq * ell * k
};

FlatteningCost flattening_cost(double B, double sup_norm_sq, double ell, long k, double eps);

double poisson_pmf(double mu, int k);

/// Monte-Carlo cycle statistics of a word map against the Poisson(1/c) law.
struct CycleStatReport {
    std::string word;
    int cycle_length = 1;
    long samples = 0;
    int degree = 0;
    std::uint64_t master_seed = 0;
    std::vector<double> empirical_pmf;  // index = count value
    std::vector<double> reference_pmf;  // Poisson(1/c), same support range
    double tv_distance = 0;
    double mean = 0;

    std::string to_json() const;
};

CycleStatReport cycle_stats(const groupkit::Word& f2_word, const std::string& word_label,
                            int cycle_length, int degree, long samples,
                            std::uint64_t master_seed);

} // namespace gapcert::bounds
