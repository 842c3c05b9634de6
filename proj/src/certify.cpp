#include "gapcert/certify.hpp"

#include "gapcert/errors.hpp"
#include "gapcert/presentation.hpp"

#include <json.hpp>

#include <future>
#include <thread>

namespace gapcert::selberg {

using fuchsia::GeodesicClass;
using groupkit::Character;
using groupkit::CosetTable;
using groupkit::FiniteGroupData;

namespace {

Enclosure f_hat_at_lambda(const TestFn& tf, const mpq_class& lambda, mpfr_prec_t prec) {
    mpq_class shift = lambda - mpq_class(1, 4);
    if (shift <= 0) {
        // spectral parameter i*s with s = sqrt(1/4 - lambda)
        Enclosure s = Enclosure(mpq_class(-shift), prec).sqrt();
        return eval_f_hat_imag(tf, s);
    }
    Enclosure r = Enclosure(shift, prec).sqrt();
    return eval_f_hat_real(tf, r);
}

} // namespace

ExclusionResult certify_exclusion(const GeometricSideReport& report, const Character& chi,
                                  const mpq_class& lambda, const TestFn& tf, mpfr_prec_t prec) {
    if (prec == 0) prec = Enclosure::default_precision();
    ExclusionResult res;
    if (lambda <= 0) return res;  // 0 is in the spectrum; never excluded
    Enclosure lhs = f_hat_at_lambda(tf, lambda, prec);
    Enclosure rhs = report.total.with_precision(prec);
    if (chi.is_trivial) {
        Enclosure half(mpq_class(1, 2), prec);
        rhs = rhs - eval_f_hat_imag(tf, half);
    }
    Enclosure margin = lhs - rhs;
    res.margin_lower_bound = margin.lower_d();
    // strict comparison of rigorous bounds only
    res.excluded = rhs.definitely_less(lhs);
    return res;
}

std::string GapCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["d"] = d.get_str();
    j["lambda_max"] = lambda_max.get_str();
    j["group_order"] = group_order;
    j["characters"] = nlohmann::ordered_json::array();
    for (const auto& c : characters) {
        nlohmann::ordered_json e;
        e["degree"] = c.degree;
        e["margin_lower_bound"] = c.margin_lower_bound;
        e["status"] = c.status;
        if (c.is_trivial) e["trivial"] = true;
        j["characters"].push_back(e);
    }
    j["classes_used"] = {{"elliptic", elliptic_count}, {"hyperbolic", hyperbolic_count}};
    j["precision_bits"] = precision_bits;
    j["certified"] = certified;
    return j.dump(2);
}

namespace {

struct CertifyData {
    CosetTable quotient;
    FiniteGroupData gdata;
    std::vector<GeodesicClass> elliptics;
    fuchsia::HyperbolicClassList hyperbolics;
};

const CertifyData& shared_data(int word_bound) {
    static CertifyData data = [word_bound] {
        CertifyData d;
        d.quotient = groupkit::coset_enumerate(groupkit::t17_quotient(), {}, 1u << 20);
        d.gdata = groupkit::conjugacy_classes(d.quotient);
        d.elliptics = fuchsia::elliptic_classes();
        d.hyperbolics = fuchsia::hyperbolic_classes_up_to(3.0, word_bound);
        return d;
    }();
    return data;
}

} // namespace

GapCertificate certify_gap(const mpq_class& lambda_max, const mpq_class& d,
                           const CertifyOptions& opts) {
    if (lambda_max <= 0) throw OutOfRange("lambda_max must be positive");
    if (4 * d > mpq_class(7, 2))
        throw OutOfRange("support 4d exceeds the certified class-list range 3.5");
    TestFn tf(d);

    const CertifyData& data = shared_data(opts.word_bound);
    if (!data.hyperbolics.complete)
        throw IncompleteEnumeration("hyperbolic class list lacks a completeness certificate");
    if (mpq_class(data.hyperbolics.length_bound) < 4 * d)
        throw IncompleteEnumeration("hyperbolic class list does not cover the support of f_d");

    GapCertificate cert;
    cert.d = d;
    cert.lambda_max = lambda_max;
    cert.group_order = data.gdata.order;
    cert.elliptic_count = static_cast<int>(data.elliptics.size());
    for (const auto& c : data.hyperbolics.classes)
        if (c.primitive) ++cert.hyperbolic_count;

    for (mpfr_prec_t prec = opts.base_prec;; prec *= 2) {
        bool undecided = false;
        try {
            QuadratureOptions qopts;
            qopts.prec = prec;
            qopts.max_degree = opts.quad_degree;

            std::vector<Character> chars = groupkit::character_table(data.gdata, prec);

            // character-independent pieces
            Enclosure identity_unit = identity_term(tf, 1, qopts);
            int nthreads = opts.threads > 0
                               ? opts.threads
                               : static_cast<int>(std::thread::hardware_concurrency());
            if (nthreads < 1) nthreads = 1;
            std::vector<Enclosure> ell_integrals(data.elliptics.size());
            {
                std::vector<std::future<Enclosure>> futs;
                for (const auto& cls : data.elliptics) {
                    futs.push_back(std::async(
                        static_cast<size_t>(nthreads) > 1 ? std::launch::async
                                                          : std::launch::deferred,
                        [&cls, &tf, &qopts, prec] {
                            return elliptic_class_integral(
                                tf, cls.sin2_theta.to_enclosure(prec), qopts);
                        }));
                }
                for (std::size_t i = 0; i < futs.size(); ++i) ell_integrals[i] = futs[i].get();
            }
            std::vector<int> ell_gclass;
            for (const auto& cls : data.elliptics)
                ell_gclass.push_back(
                    data.gdata.class_of_perm(data.quotient.word_image(cls.word)));

            // hyperbolic coefficient lists: (G-class, weight) pairs per power
            struct HypTermData {
                int gclass;
                Enclosure weight;
            };
            std::vector<HypTermData> hyp_terms;
            const Enclosure four_d(mpq_class(4 * d), prec);
            for (const auto& cls : data.hyperbolics.classes) {
                if (!cls.primitive) continue;
                Enclosure ell = cls.length.with_precision(prec);
                Perm step = data.quotient.word_image(cls.word);
                Perm acc = step;
                for (long n = 1;; ++n) {
                    Enclosure nl = Enclosure(n, prec) * ell;
                    if (four_d.definitely_less(nl)) break;
                    Enclosure denom = Enclosure(2L, prec) * (nl / Enclosure(2L, prec)).sinh();
                    Enclosure weight = ell * eval_f(tf, nl) / denom;
                    hyp_terms.push_back({data.gdata.class_of_perm(acc), weight});
                    acc = perm_compose(acc, step);
                }
            }

            cert.characters.clear();
            cert.certified = true;
            for (const auto& chi : chars) {
                Enclosure total = identity_unit * Enclosure(chi.degree, prec);
                for (std::size_t i = 0; i < data.elliptics.size(); ++i) {
                    Enclosure tr = chi.value(ell_gclass[i]).with_precision(prec);
                    total += tr / Enclosure(data.elliptics[i].order, prec) * ell_integrals[i];
                }
                for (const auto& ht : hyp_terms)
                    total += chi.value(ht.gclass).with_precision(prec) * ht.weight;

                GeometricSideReport rep;
                rep.total = total;
                ExclusionResult ex = certify_exclusion(rep, chi, lambda_max, tf, prec);
                GapCertificate::SectorResult sr;
                sr.degree = chi.degree;
                sr.is_trivial = chi.is_trivial;
                sr.margin_lower_bound = ex.margin_lower_bound;
                sr.status = ex.excluded ? "excluded" : "inconclusive";
                if (!ex.excluded) {
                    cert.certified = false;
                    // if the margin enclosure straddles zero the verdict may
                    // be a precision artefact: escalate
                    Enclosure lhs = f_hat_at_lambda(tf, lambda_max, prec);
                    Enclosure rhs = total;
                    if (chi.is_trivial)
                        rhs = rhs - eval_f_hat_imag(tf, Enclosure(mpq_class(1, 2), prec));
                    if ((lhs - rhs).contains_zero()) undecided = true;
                }
                cert.characters.push_back(std::move(sr));
            }
            cert.precision_bits = static_cast<int>(prec);
        } catch (const PrecisionFail&) {
            undecided = true;
        }
        if (!undecided) break;
        if (prec * 2 > opts.max_prec)
            throw PrecisionFail("certificate undecided at maximum precision");
    }
    return cert;
}

} // namespace gapcert::selberg
