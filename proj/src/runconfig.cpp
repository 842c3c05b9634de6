#include "gapcert/runconfig.hpp"

#include "gapcert/bounds.hpp"
#include "gapcert/certify.hpp"
#include "gapcert/covers.hpp"
#include "gapcert/errors.hpp"
#include "gapcert/geodesics.hpp"
#include "gapcert/rng.hpp"
#include "gapcert/sha256.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace gapcert::cli {

using nlohmann::ordered_json;

std::string RunConfig::to_json() const {
    ordered_json j;
    j["command"] = command;
    j["d"] = d.get_str();
    j["lambda_max"] = lambda_max.get_str();
    j["precision"] = precision;
    j["threads"] = threads;
    j["word_bound"] = word_bound;
    j["seed"] = seed;
    j["n"] = n;
    j["samples"] = samples;
    j["cycle_length"] = cycle_length;
    j["word"] = word;
    j["retries"] = retries;
    j["surface_word_len"] = surface_word_len;
    j["L"] = L;
    j["eta"] = eta;
    j["w"] = w;
    j["A"] = A;
    j["B"] = B;
    j["eps"] = eps;
    j["sys"] = sys;
    j["ell"] = ell;
    j["format"] = format;
    return j.dump();
}

std::string RunConfig::content_hash() const { return sha256_hex(to_json()); }

namespace {

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw InvalidWord("cannot open output file: " + cfg.out);
    f << payload << "\n";
}

std::string wrap_json(const RunConfig& cfg, const ordered_json& result) {
    ordered_json j;
    j["config"] = ordered_json::parse(cfg.to_json());
    j["input_hash"] = cfg.content_hash();
    j["result"] = result;
    return j.dump(2);
}

std::string csv_with_provenance(const RunConfig& cfg, const std::string& csv) {
    std::ostringstream os;
    os << "# config " << cfg.to_json() << "\n# hash " << cfg.content_hash() << "\n" << csv;
    return os.str();
}

} // namespace

int cmd_certify(const RunConfig& cfg) {
    selberg::CertifyOptions opts;
    opts.base_prec = cfg.precision;
    opts.threads = cfg.threads;
    opts.word_bound = cfg.word_bound;
    selberg::GapCertificate cert;
    try {
        cert = selberg::certify_gap(cfg.lambda_max, cfg.d, opts);
    } catch (const PrecisionFail& e) {
        std::cerr << "{\"error\":\"PrecisionFail\",\"what\":\"" << e.what() << "\"}\n";
        return ResourceLimit;
    } catch (const IncompleteEnumeration& e) {
        std::cerr << "{\"error\":\"IncompleteEnumeration\",\"what\":\"" << e.what() << "\"}\n";
        return ResourceLimit;
    }
    emit(cfg, wrap_json(cfg, ordered_json::parse(cert.to_json())));
    return cert.certified ? Success : Inconclusive;
}

int cmd_classes(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    std::string cache_path;
    if (const char* dir = std::getenv("GAPCERT_CACHE_DIR")) {
        std::ostringstream name;
        name << "classes_L" << cfg.L << "_b" << cfg.word_bound << ".csv";
        cache_path = (fs::path(dir) / name.str()).string();
        if (fs::exists(cache_path)) {
            std::ifstream in(cache_path, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            std::string payload = ss.str();
            if (!payload.empty() && payload.back() == '\n') payload.pop_back();
            emit(cfg, payload);
            return Success;
        }
    }
    std::vector<fuchsia::GeodesicClass> all = fuchsia::elliptic_classes(cfg.precision);
    fuchsia::HyperbolicClassList hyp;
    try {
        hyp = fuchsia::hyperbolic_classes_up_to(cfg.L, cfg.word_bound, cfg.precision);
    } catch (const IncompleteEnumeration& e) {
        std::cerr << "{\"error\":\"IncompleteEnumeration\",\"what\":\"" << e.what() << "\"}\n";
        return ResourceLimit;
    }
    for (auto& c : hyp.classes) all.push_back(c);
    std::string csv = csv_with_provenance(
        cfg, fuchsia::classes_to_csv(all, groupkit::triangle_2_3_8().generators));
    if (!cache_path.empty()) {
        std::ofstream f(cache_path, std::ios::binary);
        f << csv << "\n";
    }
    emit(cfg, csv);
    return Success;
}

int cmd_covers(const RunConfig& cfg) {
    coverlab::PermRep rep = coverlab::sample_rep(cfg.n, cfg.seed);
    ordered_json result;
    if (coverlab::rep_transitive(rep)) {
        coverlab::SchreierData sd = coverlab::schreier(rep);
        result = ordered_json::parse(coverlab::rep_to_json(rep, &sd, nullptr));
    } else {
        result = ordered_json::parse(coverlab::rep_to_json(rep, nullptr, nullptr));
    }
    emit(cfg, wrap_json(cfg, result));
    return Success;
}

int cmd_stats(const RunConfig& cfg) {
    groupkit::Word w = groupkit::parse_word(cfg.word, coverlab::f2_names());
    bounds::CycleStatReport rep =
        bounds::cycle_stats(w, cfg.word, cfg.cycle_length, cfg.n, cfg.samples, cfg.seed);
    emit(cfg, wrap_json(cfg, ordered_json::parse(rep.to_json())));
    return Success;
}

int cmd_bounds(const RunConfig& cfg) {
    ordered_json result;
    result["planar_cheeger"] = bounds::planar_cheeger(cfg.sys);
    result["planar_lambda1"] = bounds::planar_lambda1(cfg.sys);
    result["collar_width"] = bounds::collar_width(cfg.ell);
    bounds::ConstantsLedger lg = bounds::ledger_solve(cfg.eta, cfg.w, cfg.A, cfg.B, cfg.eps);
    result["ledger"] = ordered_json::parse(lg.to_json());
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "quantity,value\n";
        csv << "planar_cheeger," << bounds::planar_cheeger(cfg.sys) << "\n";
        csv << "planar_lambda1," << bounds::planar_lambda1(cfg.sys) << "\n";
        csv << "collar_width," << bounds::collar_width(cfg.ell) << "\n";
        csv << "ledger_ell," << lg.ell << "\n";
        emit(cfg, csv_with_provenance(cfg, csv.str()));
        return Success;
    }
    emit(cfg, wrap_json(cfg, result));
    return Success;
}

namespace {

// Short conjugacy-class words of the surface group with translation length
// at most L, as words in a1, b1, a2, b2, with q-images precomputed.
std::vector<coverlab::ScreeningClass> surface_classes_up_to(double L, int max_len,
                                                            const coverlab::HandlebodyMap& h) {
    const std::vector<groupkit::Word> gens = fuchsia::bolza_generators();
    std::vector<fuchsia::Mobius> gen_ms;
    auto [X, Y, Z] = fuchsia::generator_matrices();
    const fuchsia::Mobius tri[3] = {X, Y, Z};
    for (const auto& w : gens) {
        fuchsia::Mobius acc;
        for (int letter : w)
            acc = acc * (letter > 0 ? tri[std::abs(letter) - 1]
                                    : tri[std::abs(letter) - 1].inverse());
        gen_ms.push_back(acc);
    }
    const Enclosure coshL2 = Enclosure(mpq_class(L / 2), 96).cosh();

    std::vector<coverlab::ScreeningClass> classes;
    std::map<std::string, bool> seen;
    struct Node {
        groupkit::Word w;
        fuchsia::Mobius m;
    };
    std::vector<Node> frontier{{groupkit::Word{}, fuchsia::Mobius()}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int letter = -4; letter <= 4; ++letter) {
                if (letter == 0) continue;
                if (!node.w.empty() && node.w.back() == -letter) continue;
                Node child;
                child.w = node.w;
                child.w.push_back(letter);
                int idx = std::abs(letter) - 1;
                child.m = node.m * (letter > 0 ? gen_ms[idx] : gen_ms[idx].inverse());
                // cyclically reduced words only, as class representatives
                if (child.w.front() == -child.w.back()) {
                    next.push_back(child);
                    continue;
                }
                fuchsia::FieldElem w2 = child.m.w * child.m.w;
                if ((w2 - fuchsia::FieldElem(1L)).sign() > 0) {
                    Enclosure absw = child.m.w.to_enclosure(96).abs();
                    if (!coshL2.definitely_less(absw)) {
                        std::string key = child.m.canonical().str();
                        if (!seen.count(key)) {
                            seen[key] = true;
                            coverlab::ScreeningClass sc;
                            sc.surface_word = child.w;
                            sc.q_image = h.apply(child.w);
                            classes.push_back(std::move(sc));
                        }
                    }
                }
                next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    return classes;
}

} // namespace

int cmd_pipeline(const RunConfig& cfg) {
    ordered_json result;

    // 1. sample until transitive
    coverlab::PermRep rep;
    int attempts = 0;
    bool transitive = false;
    for (; attempts < cfg.retries; ++attempts) {
        rep = coverlab::sample_rep(cfg.n, derive_seed(cfg.seed, attempts));
        if (coverlab::rep_transitive(rep)) {
            transitive = true;
            break;
        }
    }
    if (!transitive) {
        std::cerr << "{\"error\":\"NotTransitive\",\"what\":\"no transitive sample in "
                  << cfg.retries << " attempts\"}\n";
        return ResourceLimit;
    }
    result["n"] = rep.n;
    result["attempts"] = attempts + 1;

    // 2. Schreier data
    coverlab::SchreierData sd = coverlab::schreier(rep);
    result["k"] = sd.k;

    // 3. short-geodesic screening against the fixed-point obstruction
    coverlab::HandlebodyMap h = coverlab::HandlebodyMap::standard();
    auto classes = surface_classes_up_to(cfg.L, cfg.surface_word_len, h);
    coverlab::ScreeningReport screening =
        coverlab::screen_short_geodesics(h, rep, classes, cfg.L);
    result["screening"] = {{"L", cfg.L},
                           {"surface_word_len", cfg.surface_word_len},
                           {"classes_checked", classes.size()},
                           {"flagged", screening.flagged}};

    // 4. switch walk from the disconnected cover to the all-ones cover
    coverlab::TwoCoverVector v(sd.k);
    std::vector<int> trajectory{coverlab::hamming(v, coverlab::TwoCoverVector(sd.k))};
    ordered_json walk = ordered_json::array();
    int visited = 1;
    bool connected_start = coverlab::cover_connected(v);
    for (int i = 1; i <= sd.k; ++i) {
        v = coverlab::switch_move(v, i);
        ++visited;
        trajectory.push_back(v.weight());
    }
    result["walk"] = {{"visited", visited},
                      {"hamming_trajectory", trajectory},
                      {"connected_start", connected_start},
                      {"connected_end", coverlab::cover_connected(v)}};
    (void)walk;

    // 5. ledger and per-switch flattening cost
    bounds::ConstantsLedger lg = bounds::ledger_solve(cfg.eta, cfg.w, cfg.A, cfg.B, cfg.eps);
    result["ledger"] = ordered_json::parse(lg.to_json());
    double lambda = 0.25 - cfg.eta;
    double sup_sq = lambda > 0 ? bounds::delocalization_bound(cfg.A, lg.ell, lambda, 1)
                               : cfg.A;
    bounds::FlatteningCost fc = bounds::flattening_cost(cfg.B, sup_sq, lg.ell, 1, lg.eps);
    result["per_switch"] = {{"sup_norm_sq", sup_sq},
                            {"admissible", fc.admissible},
                            {"rayleigh_increment", fc.rayleigh_increment}};
    result["walk_total_increment"] = fc.rayleigh_increment * sd.k;

    emit(cfg, wrap_json(cfg, result));
    return Success;
}

int run_command(const RunConfig& cfg) {
    try {
        if (cfg.command == "certify") return cmd_certify(cfg);
        if (cfg.command == "classes") return cmd_classes(cfg);
        if (cfg.command == "covers") return cmd_covers(cfg);
        if (cfg.command == "stats") return cmd_stats(cfg);
        if (cfg.command == "bounds") return cmd_bounds(cfg);
        if (cfg.command == "pipeline") return cmd_pipeline(cfg);
        std::cerr << "unknown command: " << cfg.command << "\n";
        return InputError;
    } catch (const EnumerationLimit& e) {
        std::cerr << "{\"error\":\"EnumerationLimit\",\"what\":\"" << e.what() << "\"}\n";
        return ResourceLimit;
    } catch (const PrecisionFail& e) {
        std::cerr << "{\"error\":\"PrecisionFail\",\"what\":\"" << e.what() << "\"}\n";
        return ResourceLimit;
    } catch (const InvalidWord& e) {
        std::cerr << "{\"error\":\"InvalidWord\",\"what\":\"" << e.what() << "\"}\n";
        return InputError;
    } catch (const std::domain_error& e) {
        std::cerr << "{\"error\":\"domain\",\"what\":\"" << e.what() << "\"}\n";
        return InputError;
    }
}

} // namespace gapcert::cli
