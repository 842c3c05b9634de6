#pragma once

#include "gapcert/trace_formula.hpp"

#include <optional>
#include <string>

namespace gapcert::selberg {

struct ExclusionResult {
    bool excluded = false;
    /// Lower bound of f_hat(sqrt(lambda-1/4)) minus the right-hand side;
    /// positive iff excluded.
    double margin_lower_bound = 0;
};

/// Proposition-style exclusion test: lambda is not in the rho-sector
/// spectrum if f_hat at the spectral parameter strictly exceeds the
/// geometric side (minus f_hat(i/2) in the trivial sector).  Inconclusive
/// is always a valid outcome; lambda <= 0 is never excluded.
ExclusionResult certify_exclusion(const GeometricSideReport& report,
                                  const groupkit::Character& chi, const mpq_class& lambda,
                                  const TestFn& tf, mpfr_prec_t prec = 0);

struct GapCertificate {
    mpq_class d;
    mpq_class lambda_max;
    long group_order = 0;
    struct SectorResult {
        long degree = 0;
        bool is_trivial = false;
        double margin_lower_bound = 0;
        std::string status;  // "excluded" | "inconclusive"
    };
    std::vector<SectorResult> characters;
    int elliptic_count = 0;
    int hyperbolic_count = 0;  // primitive classes used
    int precision_bits = 0;
    bool certified = false;

    std::string to_json() const;
};

struct CertifyOptions {
    mpfr_prec_t base_prec = 128;
    mpfr_prec_t max_prec = 512;
    int word_bound = 60;
    int threads = 0;  // 0: hardware concurrency
    int quad_degree = 20;
};

/// Runs the exclusion criterion for every real irreducible character of
/// the order-768 deck group at lambda = lambda_max (monotonicity covers
/// smaller lambda).  Escalates the working precision on PrecisionFail.
/// Class-list completeness is verified before any arithmetic.
GapCertificate certify_gap(const mpq_class& lambda_max, const mpq_class& d,
                           const CertifyOptions& opts = {});

} // namespace gapcert::selberg
