// hyperweil: admissibility and point-count sieves for Weil polynomials of
// hyperelliptic Jacobians over small finite fields.
//
// Subcommands: classes, classify, enum, census, sieve, report.
// Thread count follows OMP_NUM_THREADS (default: available parallelism).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "hyperweil/admissibility.hpp"
#include "hyperweil/census.hpp"
#include "hyperweil/label.hpp"
#include "hyperweil/sieve.hpp"
#include "hyperweil/weil_enum.hpp"

using namespace hyperweil;
using nlohmann::json;

namespace {

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

json partition_json(const Partition& p) { return json(p.parts); }

json parities_json(const std::vector<uint8_t>& par) {
    json arr = json::array();
    for (uint8_t b : par) arr.push_back(static_cast<int>(b));
    return arr;
}

std::vector<BigInt> parse_coeffs(const std::string& text) {
    std::vector<BigInt> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw CLI::ValidationError("--coeffs", "empty coefficient");
        out.emplace_back(BigInt(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json verdict_json(const WeilPolyCoeffs& w) {
    json j;
    j["label"] = label_encode(w);
    j["g"] = w.g;
    j["q"] = w.q;
    auto verdict = is_admissible(reduce_mod2(w), w.g);
    j["admissible"] = verdict.admissible;
    if (verdict.witness) j["witness_partition"] = partition_json(*verdict.witness);
    SieveVerdict sv = instance_ruled_out(w);
    j["sieve_ruled_out"] = sv.ruled_out;
    if (sv.ruled_out) {
        json traces = json::array();
        for (const auto& f : sv.failures) {
            traces.push_back({{"partition", partition_json(f.partition)},
                              {"n", f.n},
                              {"modulus", f.modulus},
                              {"expected", f.expected},
                              {"actual", f.actual},
                              {"stage", f.parity_stage ? "parity" : "2-adic"}});
        }
        j["failure_trace"] = std::move(traces);
    } else {
        json surv = json::array();
        for (const auto& p : sv.surviving) surv.push_back(partition_json(p));
        j["surviving_partitions"] = std::move(surv);
    }
    return j;
}

int cmd_classes(int g, bool full, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    ClassTable table = admissible_classes(g);
    if (format == "text") {
        for (const auto& row : table.rows) {
            os << "(";
            for (size_t i = 0; i < row.parities.size(); ++i) os << (i ? "," : "") << int(row.parities[i]);
            os << ")  witness " << row.witness.to_string();
            if (full) {
                os << "  partitions:";
                for (const auto& p : row.members) os << " " << p.to_string();
            }
            os << "\n";
        }
        return 0;
    }
    json arr = json::array();
    for (const auto& row : table.rows) {
        json j;
        j["parities"] = parities_json(row.parities);
        j["witness_partition"] = partition_json(row.witness);
        if (full) {
            json all = json::array();
            for (const auto& p : row.members) all.push_back(partition_json(p));
            j["all_partitions"] = std::move(all);
        }
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
    return 0;
}

int cmd_classify(const WeilPolyCoeffs& w, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    json j = verdict_json(w);
    if (format == "text") {
        os << j["label"].get<std::string>() << ": " << (j["admissible"].get<bool>() ? "admissible" : "inadmissible");
        if (j.contains("witness_partition")) os << ", witness " << j["witness_partition"].dump();
        os << ", sieve_ruled_out=" << (j["sieve_ruled_out"].get<bool>() ? "true" : "false") << "\n";
    } else {
        os << j.dump(2) << "\n";
    }
    return j["admissible"].get<bool>() ? 0 : 1;
}

int cmd_enum(int g, int64_t q, bool no_filter, bool count_only, const std::string& format,
             const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    bool filter = !no_filter && honda_tate_exact(q);
    if (count_only) {
        int64_t n = 0;
        enumerate_weil(g, q, [&](const WeilPolyCoeffs& w) {
            if (!filter || honda_tate_filter(w)) ++n;
        });
        os << n << "\n";
        return 0;
    }
    if (format == "jsonl") {
        enumerate_weil(g, q, [&](const WeilPolyCoeffs& w) {
            if (filter && !honda_tate_filter(w)) return;
            os << to_json(w) << "\n";
        });
    } else {
        os << "label\n";
        enumerate_weil(g, q, [&](const WeilPolyCoeffs& w) {
            if (filter && !honda_tate_filter(w)) return;
            os << label_encode(w) << "\n";
        });
    }
    return 0;
}

int cmd_census(int g, int64_t q, int64_t sample, uint64_t seed, bool verify, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    CensusMode mode = sample > 0 ? CensusMode::Sample(sample, seed) : CensusMode::Exhaustive();
    os << "id,f,degree_set,counts,label\n";
    CensusSummary sum = census(g, q, mode, [&](const CensusRecord& rec) {
        os << rec.id << ",";
        for (size_t i = 0; i < rec.f.size(); ++i) os << (i ? " " : "") << rec.f[i];
        os << ",";
        for (size_t i = 0; i < rec.degree_set.parts.size(); ++i) os << (i ? " " : "") << rec.degree_set.parts[i];
        os << ",";
        for (size_t i = 0; i < rec.counts.size(); ++i) os << (i ? " " : "") << rec.counts[i];
        os << "," << rec.label << "\n";
    });
    if (verify) {
        std::cerr << "curves: " << sum.curves << "\n";
        std::cerr << "violations: " << sum.violations << "\n";
        std::cerr << "realized partitions: " << sum.partition_counts.size() << "\n";
        std::cerr << "realized classes: " << sum.class_counts.size()
                  << (sum.all_classes_admissible ? " (all admissible)" : " (INADMISSIBLE CLASS REALIZED)") << "\n";
        for (const auto& note : sum.violation_notes) std::cerr << "  violation: " << note << "\n";
        if (sum.violations != 0) return 1;
    }
    return 0;
}

int cmd_sieve(int g, int M, bool do_cross_validate, const std::string& label,
              const std::string& coeffs, int64_t q_opt, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (do_cross_validate) {
        CrossValidationReport rep = cross_validate(g, M);
        json j;
        j["g"] = rep.g;
        j["M"] = rep.M;
        auto masks_to_json = [&rep](const std::vector<uint32_t>& masks) {
            json arr = json::array();
            for (uint32_t m : masks) arr.push_back(parities_json(parities_from_mask(m, rep.g)));
            return arr;
        };
        j["inadmissible"] = masks_to_json(rep.inadmissible_masks);
        j["sieve_ruled_out"] = masks_to_json(rep.sieve_ruled_out_masks);
        j["symmetric_difference"] = masks_to_json(rep.symmetric_difference);
        j["agree"] = rep.agree;
        os << j.dump(2) << "\n";
        return rep.agree ? 0 : 1;
    }
    WeilPolyCoeffs w = label.empty() ? WeilPolyCoeffs(g, q_opt, parse_coeffs(coeffs)) : label_decode(label);
    std::optional<CheckSet> cs;
    if (M > 0) cs = CheckSet::with_depth(w.g, M);
    SieveVerdict sv = instance_ruled_out(w, cs);
    json j;
    j["label"] = label_encode(w);
    j["ruled_out"] = sv.ruled_out;
    json surv = json::array();
    for (const auto& p : sv.surviving) surv.push_back(partition_json(p));
    j["surviving_partitions"] = std::move(surv);
    json traces = json::array();
    for (const auto& f : sv.failures) {
        traces.push_back({{"partition", partition_json(f.partition)},
                          {"n", f.n},
                          {"modulus", f.modulus},
                          {"expected", f.expected},
                          {"actual", f.actual},
                          {"stage", f.parity_stage ? "parity" : "2-adic"}});
    }
    j["failure_trace"] = std::move(traces);
    os << j.dump(2) << "\n";
    return 0;
}

int cmd_report(int g, int64_t q, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    EnumReport rep = proportion_report(g, q);
    Rational frac(BigInt(rep.inadmissible), BigInt(rep.total));
    Rational limit(BigInt((int64_t(1) << g) - q_distinct(2 * g + 2)), BigInt(1) << g);
    double gap = limit.to_double() - frac.to_double();
    if (format == "json") {
        json j;
        j["g"] = rep.g;
        j["q"] = rep.q;
        j["total"] = rep.total;
        j["inadmissible"] = rep.inadmissible;
        j["percentage"] = frac.to_percent();
        j["limit"] = limit.to_percent();
        j["gap"] = gap;
        j["honda_tate_filtered"] = rep.ht_filtered;
        os << j.dump(2) << "\n";
    } else {
        os << "g=" << rep.g << " q=" << rep.q << (rep.ht_filtered ? "" : " (unfiltered: non-prime q)") << "\n"
           << "isogeny classes: " << rep.total << "\n"
           << "inadmissible:    " << rep.inadmissible << " (" << frac.to_percent() << ")\n"
           << "q->inf limit:    " << limit.to_percent() << " (gap " << gap << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"admissibility and point-count sieves for hyperelliptic Jacobians over finite fields"};
    app.require_subcommand(1);

    // classes
    auto* classes = app.add_subcommand("classes", "admissible mod-2 classes for a genus");
    int cl_g = 3;
    bool cl_full = false;
    std::string cl_format = "json", cl_out;
    classes->add_option("--genus,-g", cl_g, "genus")->required();
    classes->add_flag("--full", cl_full, "include every partition per class");
    classes->add_option("--format", cl_format, "json|text")->check(CLI::IsMember({"json", "text"}));
    classes->add_option("--out,-o", cl_out, "output path (default stdout)");

    // classify
    auto* classify = app.add_subcommand("classify", "admissibility + sieve verdict for one isogeny class");
    std::string cf_label, cf_coeffs, cf_format = "json", cf_out;
    int cf_g = 0;
    int64_t cf_q = 0;
    classify->add_option("label", cf_label, "isogeny class label, e.g. 3.3.a_ab_ac");
    classify->add_option("--g", cf_g, "genus (with --q and --coeffs)");
    classify->add_option("--q", cf_q, "field size");
    classify->add_option("--coeffs", cf_coeffs, "comma-separated a1..ag");
    classify->add_option("--format", cf_format, "json|text")->check(CLI::IsMember({"json", "text"}));
    classify->add_option("--out,-o", cf_out, "output path");

    // enum
    auto* enm = app.add_subcommand("enum", "enumerate Weil polynomials for (g, q)");
    int en_g = 1;
    int64_t en_q = 3;
    bool en_nofilter = false, en_ht = false, en_count = false;
    std::string en_format = "csv", en_out;
    enm->add_option("--genus,-g", en_g, "genus")->required();
    enm->add_option("--q", en_q, "field size")->required();
    enm->add_flag("--honda-tate", en_ht, "apply the Honda-Tate multiplicity filter (default)");
    enm->add_flag("--no-filter", en_nofilter, "skip the Honda-Tate multiplicity filter")->excludes("--honda-tate");
    enm->add_flag("--count-only", en_count, "print the count only");
    enm->add_option("--format", en_format, "csv (labels) | jsonl (coefficient vectors)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    enm->add_option("--out,-o", en_out, "output path");

    // census
    auto* cen = app.add_subcommand("census", "hyperelliptic curve census over F_q");
    int ce_g = 1;
    int64_t ce_q = 3, ce_sample = 0;
    uint64_t ce_seed = 1;
    bool ce_verify = false;
    std::string ce_out;
    cen->add_option("--genus,-g", ce_g, "genus")->required();
    cen->add_option("--q", ce_q, "odd prime power")->required();
    cen->add_option("--sample", ce_sample, "sample this many curves instead of exhausting");
    cen->add_option("--seed", ce_seed, "sampling seed");
    cen->add_flag("--verify", ce_verify, "print the verification summary to stderr");
    cen->add_option("--out,-o", ce_out, "CSV output path");

    // sieve
    auto* sv = app.add_subcommand("sieve", "point-count congruence sieve");
    int sv_g = 3, sv_M = 0;
    bool sv_cross = false;
    std::string sv_label, sv_coeffs, sv_out;
    int64_t sv_q = 0;
    sv->add_option("--genus,-g", sv_g, "genus (class-level mode)");
    sv->add_option("--max-m", sv_M, "2-adic depth M (default ceil(log2(2g+2)))");
    sv->add_flag("--cross-validate", sv_cross, "compare sieve verdicts against admissibility");
    sv->add_option("--label", sv_label, "instance mode: isogeny class label");
    sv->add_option("--q", sv_q, "instance mode: field size (with --coeffs)");
    sv->add_option("--coeffs", sv_coeffs, "instance mode: comma-separated a1..ag");
    sv->add_option("--out,-o", sv_out, "output path");

    // report
    auto* rp = app.add_subcommand("report", "admissibility proportion for (g, q)");
    int rp_g = 3;
    int64_t rp_q = 3;
    std::string rp_format = "text", rp_out;
    rp->add_option("--genus,-g", rp_g, "genus")->required();
    rp->add_option("--q", rp_q, "odd prime power")->required();
    rp->add_option("--format", rp_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    rp->add_option("--out,-o", rp_out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classes->parsed()) return cmd_classes(cl_g, cl_full, cl_format, cl_out);
        if (classify->parsed()) {
            WeilPolyCoeffs w = cf_label.empty() ? WeilPolyCoeffs(cf_g, cf_q, parse_coeffs(cf_coeffs))
                                                : label_decode(cf_label);
            return cmd_classify(w, cf_format, cf_out);
        }
        if (enm->parsed()) return cmd_enum(en_g, en_q, en_nofilter, en_count, en_format, en_out);
        if (cen->parsed()) return cmd_census(ce_g, ce_q, ce_sample, ce_seed, ce_verify, ce_out);
        if (sv->parsed()) return cmd_sieve(sv_g, sv_M, sv_cross, sv_label, sv_coeffs, sv_q, sv_out);
        if (rp->parsed()) return cmd_report(rp_g, rp_q, rp_format, rp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
