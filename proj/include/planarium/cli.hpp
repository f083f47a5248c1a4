#pragma once

// JobSpec dispatch for the command-line front end. A job is fully
// determined by its serialized form; replaying one reproduces the report
// byte for byte apart from the timestamp field, which golden comparisons
// exclude. Scan-style commands stream records so memory stays flat.

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <ctime>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "planarium/curves.hpp"
#include "planarium/do_classify.hpp"
#include "planarium/errors.hpp"
#include "planarium/ffcore.hpp"
#include "planarium/planarity.hpp"
#include "planarium/poly.hpp"
#include "planarium/rdp.hpp"

namespace planarium {

using Json = nlohmann::ordered_json;

enum class ReportFormat { JsonFmt, CsvFmt, TextFmt };

struct JobSpec {
    std::string command;
    std::string field;  // field-spec string, may be empty for arithmetic-only jobs
    std::map<std::string, std::string> parameters;
    ReportFormat format = ReportFormat::JsonFmt;
};

inline ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::JsonFmt;
    if (s == "csv") return ReportFormat::CsvFmt;
    if (s == "text") return ReportFormat::TextFmt;
    fail("BadParameter", "unknown format '" + s + "' (json|csv|text)");
}

namespace detail {

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Params {
public:
    Params(const std::string& command, const std::map<std::string, std::string>& kv)
        : command_(command), kv_(kv) {}

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string str(const std::string& key) const {
        auto it = kv_.find(key);
        if (it == kv_.end())
            fail("ParameterMissing", "command '" + command_ + "' needs --" + key);
        return it->second;
    }

    std::string str_or(const std::string& key, const std::string& dflt) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? dflt : it->second;
    }

    std::int64_t i64(const std::string& key) const {
        try {
            return std::stoll(str(key));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("BadParameter", "--" + key + " must be an integer");
        }
    }

    std::int64_t i64_or(const std::string& key, std::int64_t dflt) const {
        return has(key) ? i64(key) : dflt;
    }

    bool flag(const std::string& key) const {
        auto v = str_or(key, "");
        return v == "1" || v == "true" || v == "yes";
    }

private:
    std::string command_;
    const std::map<std::string, std::string>& kv_;
};

inline std::uint64_t max_q_cap() {
    if (const char* env = std::getenv("PLANARIUM_MAX_Q")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            fail("BadParameter", "PLANARIUM_MAX_Q is not an integer");
        }
    }
    return 1000000;  // design envelope
}

inline FieldCtx field_from(const Params& p) {
    FieldCtx F = FieldCtx::parse_spec(p.str("field"));
    if (F.q() > max_q_cap())
        fail("CeilingExceeded", "field size q=" + std::to_string(F.q()) +
                                    " exceeds the PLANARIUM_MAX_Q cap");
    return F;
}

// Report writer. JSON streams records into a fixed envelope; CSV writes one
// header plus a flattened row per record; text is one line per record.
class Reporter {
public:
    Reporter(std::ostream& out, const JobSpec& spec) : out_(out), fmt_(spec.format) {
        if (fmt_ == ReportFormat::JsonFmt) {
            Json head;
            head["schema"] = "planarium/1";
            head["command"] = spec.command;
            head["parameters"] = Json::object();
            for (const auto& [k, v] : spec.parameters) head["parameters"][k] = v;
            head["timestamp"] = utc_timestamp();
            std::string dumped = head.dump(1);
            dumped.erase(dumped.rfind('\n'));  // re-open the envelope
            out_ << dumped << ",\n \"records\": [";
        }
    }

    void csv_header(const std::vector<std::string>& cols) {
        cols_ = cols;
        if (fmt_ != ReportFormat::CsvFmt) return;
        for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
        out_ << '\n';
    }

    // full: structured record for JSON. flat: same record with any nested
    // values collapsed to strings, used for the CSV row.
    void record(const Json& full, const Json& flat, const std::string& text_line) {
        switch (fmt_) {
            case ReportFormat::JsonFmt:
                out_ << (count_ ? ",\n  " : "\n  ") << full.dump();
                break;
            case ReportFormat::CsvFmt: {
                bool first = true;
                for (const auto& c : cols_) {
                    if (!first) out_ << ',';
                    first = false;
                    if (flat.contains(c)) {
                        const auto& v = flat.at(c);
                        out_ << csv_cell(v.is_string() ? v.get<std::string>() : v.dump());
                    }
                }
                out_ << '\n';
                break;
            }
            case ReportFormat::TextFmt:
                out_ << text_line << '\n';
                break;
        }
        ++count_;
    }

    // RFC-4180 quoting; element coordinates contain commas
    static std::string csv_cell(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        return quoted;
    }

    void record(const Json& j, const std::string& text_line) { record(j, j, text_line); }

    void finish(const Json& summary) {
        if (fmt_ == ReportFormat::JsonFmt) {
            out_ << (count_ ? "\n ]" : "]");
            if (!summary.is_null()) out_ << ",\n \"summary\": " << summary.dump(1);
            out_ << "\n}\n";
        } else if (!summary.is_null() && fmt_ == ReportFormat::TextFmt) {
            for (const auto& [k, v] : summary.items())
                out_ << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
                     << '\n';
        }
        out_.flush();
    }

private:
    std::ostream& out_;
    ReportFormat fmt_;
    std::vector<std::string> cols_;
    std::uint64_t count_ = 0;
};

inline Json witnesses_json(const std::vector<DOWitness>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back({{"exponent", w.exponent}, {"i", w.i}, {"j", w.j}});
    return arr;
}

inline std::string witnesses_compact(const std::vector<DOWitness>& ws, std::int64_t p) {
    std::ostringstream os;
    for (std::size_t t = 0; t < ws.size(); ++t) {
        if (t) os << '|';
        os << ws[t].exponent << '=' << p << '^' << ws[t].i << '+' << p << '^' << ws[t].j;
    }
    return os.str();
}

// ---- command implementations ----------------------------------------------

inline int run_field_info(const Params& par, const JobSpec& spec, std::ostream& out) {
    FieldCtx F = field_from(par);
    Reporter rep(out, spec);
    rep.csv_header({"p", "e", "q", "modulus"});
    Json j;
    j["p"] = F.p();
    j["e"] = F.e();
    j["q"] = F.q();
    j["modulus"] = F.modulus_string();
    std::ostringstream line;
    line << "F_" << F.q() << " = F_" << F.p() << "^" << F.e() << ", modulus "
         << F.modulus_string();
    rep.record(j, line.str());
    rep.finish(nullptr);
    return 0;
}

inline int run_rdp_show(const Params& par, const JobSpec& spec, std::ostream& out) {
    auto p = par.i64("p");
    long k = par.i64("k");
    long m = par.has("family") ? family_kind(par.str("family")[0]) : par.i64("m");
    long d = par.i64_or("d", 1);
    auto route = par.str_or("route", "closed") == "recursive" ? RdpRoute::Recursive
                                                              : RdpRoute::Closed;
    SymbolicRDP s = make_hat(k, m, d, p, route);

    Reporter rep(out, spec);
    rep.csv_header({"i", "coeff", "a_power", "x_exponent"});
    for (const auto& [i, c] : s.terms) {
        Json j;
        j["i"] = i;
        j["coeff"] = c;
        j["a_power"] = k - 2 * i;
        j["x_exponent"] = d * i;
        std::ostringstream line;
        line << c << " * a^" << (k - 2 * i) << " * X^" << (d * i);
        rep.record(j, line.str());
    }
    Json summary;
    summary["name"] = hat_name(s);
    summary["p"] = p;
    summary["k"] = k;
    summary["m"] = m;
    summary["d"] = d;
    summary["route"] = route == RdpRoute::Recursive ? "recursive" : "closed";
    summary["zero_polynomial"] = s.terms.empty();
    if (par.has("field")) {
        FieldCtx F = field_from(par);
        Elem a = par.has("a") ? F.parse_elem(par.str("a")) : F.one();
        summary["a"] = F.format_elem(a);
        summary["instance"] = unipoly_to_string(rdp_instantiate(s, a, F));
    }
    rep.finish(summary);
    return 0;
}

inline int run_do_check(const Params& par, const JobSpec& spec, std::ostream& out) {
    auto p = par.i64("p");
    long k = par.i64("k");
    long m = par.has("family") ? family_kind(par.str("family")[0]) : par.i64("m");
    long d = par.i64("d");
    SymbolicRDP s = make_hat(k, m, d, p);
    DOReport dr = is_do_polynomial(s);
    bool predicted = theorem_predicate(p, k, m, d);

    Reporter rep(out, spec);
    rep.csv_header({"p", "k", "m", "d", "is_do", "predicted", "witnesses"});
    Json j;
    j["p"] = p;
    j["k"] = k;
    j["m"] = m;
    j["d"] = d;
    j["is_do"] = dr.is_do;
    j["zero_polynomial"] = dr.zero_polynomial;
    j["witnesses"] = witnesses_json(dr.witnesses);
    if (dr.failure)
        j["failure"] = {{"exponent", dr.failure->first}, {"coeff", dr.failure->second}};
    j["predicted"] = predicted;

    // exploration only: DO shape of the instance reduced mod X^q - X; this
    // is a statement about the induced function, not the classified polynomial
    if (par.flag("reduced")) {
        FieldCtx F = field_from(par);
        Elem a = par.has("a") ? F.parse_elem(par.str("a")) : F.one();
        UniPoly inst = reduce_qmap(rdp_instantiate(s, a, F));
        j["reduced_do_function_level"] = is_do_shaped(inst);
        j["reduced_instance"] = unipoly_to_string(inst);
    }
    Json flat = j;
    flat["witnesses"] = witnesses_compact(dr.witnesses, p);
    std::ostringstream line;
    line << hat_name(s) << " d=" << d << " p=" << p << ": " << (dr.is_do ? "DO" : "not DO")
         << " (predicted " << (predicted ? "DO" : "not DO") << ")";
    rep.record(j, flat, line.str());
    rep.finish(nullptr);
    return dr.is_do == predicted ? 0 : 1;
}

inline ScanOptions scan_options_from(const Params& par) {
    ScanOptions opt;
    opt.p = par.i64("p");
    opt.k_max = par.i64_or("kmax", 40);
    opt.d_max = par.i64_or("dmax", 28);
    opt.include_p_multiples = par.flag("include-p-multiples");
    opt.k_ceiling = par.i64_or("ceiling", 64);
    opt.threads = static_cast<unsigned>(par.i64_or("threads", 1));
    if (par.has("m")) {
        std::istringstream is(par.str("m"));
        std::string tok;
        while (std::getline(is, tok, ',')) opt.m_set.push_back(std::stol(tok));
    }
    return opt;
}

// classify-scan emits every scanned triple; appendix-verify keeps only the
// DO list and any discrepancies and gates the exit status on the latter.
inline int run_classify_scan(const Params& par, const JobSpec& spec, std::ostream& out,
                             bool verify_only) {
    ScanOptions opt = scan_options_from(par);

    Reporter rep(out, spec);
    rep.csv_header({"p", "k", "m", "d", "is_do", "predicted", "witnesses"});
    auto emit = [&](const ScanRecord& r) {
        if (verify_only && !r.is_do && r.is_do == r.predicted) return;
        Json j;
        j["p"] = opt.p;
        j["k"] = r.k;
        j["m"] = r.m;
        j["d"] = r.d;
        j["is_do"] = r.is_do;
        j["witnesses"] = witnesses_json(r.witnesses);
        j["predicted"] = r.predicted;
        Json flat = j;
        flat["witnesses"] = witnesses_compact(r.witnesses, opt.p);
        std::ostringstream line;
        line << "k=" << r.k << " m=" << r.m << " d=" << r.d << (r.is_do ? " DO" : " not-DO")
             << (r.is_do == r.predicted ? "" : "  ** DISCREPANCY **");
        rep.record(j, flat, line.str());
    };

    ScanResult res = scan_and_verify(opt, emit);
    Json summary;
    summary["p"] = opt.p;
    summary["k_max"] = opt.k_max;
    summary["d_max"] = opt.d_max;
    summary["include_p_multiples"] = opt.include_p_multiples;
    summary["scanned"] = res.scanned;
    summary["matches"] = res.matches;
    summary["do_count"] = res.do_records.size();
    summary["discrepancies"] = res.discrepancies.size();
    rep.finish(summary);
    return res.discrepancies.empty() ? 0 : 1;
}

inline int run_planarity(const Params& par, const JobSpec& spec, std::ostream& out) {
    FieldCtx F = field_from(par);

    std::vector<Elem> as;
    if (par.flag("all-a")) {
        for (std::uint64_t i = 1; i < F.q(); ++i) as.push_back(F.elem_at(i));
    } else if (par.has("a")) {
        as.push_back(F.parse_elem(par.str("a")));
    } else if (par.has("poly")) {
        as.push_back(F.one());  // parameter unused for explicit polynomials
    } else {
        fail("ParameterMissing", "planarity needs --a or --all-a");
    }
    std::string method = par.str_or("method", "auto");
    auto threads = static_cast<unsigned>(par.i64_or("threads", 1));

    Reporter rep(out, spec);
    rep.csv_header(
        {"field", "family", "k", "m", "d", "a", "planar", "method", "image_size", "witness"});
    std::uint64_t planar_count = 0, disagreements = 0;

    // verdicts computed in parallel per parameter, reports emitted in order
    PlanarKernel kernel(F);
    struct Verdict {
        SymbolicRDP s;
        PlanarityReport r;
        std::string used;
        bool agree = true;
    };
    std::vector<Verdict> verdicts(as.size());
    parallel_chunks(as.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            Verdict& v = verdicts[t];
            UniPoly f = [&]() -> UniPoly {
                if (par.has("poly")) return unipoly_from_string(F, par.str("poly"));
                long m = par.has("family") ? family_kind(par.str("family")[0]) : par.i64("m");
                v.s = make_hat(par.i64("k"), m, par.i64_or("d", 1), F.p());
                return rdp_instantiate(v.s, as[t], F);
            }();
            v.used = method;
            if (method == "auto") v.used = is_do_shaped(f) ? "two-to-one" : "delta";
            if (v.used == "two-to-one") {
                v.r = is_planar_do(f);
            } else if (v.used == "linearized") {
                v.r = is_planar_linearized(f);
            } else if (v.used == "both") {
                v.r = is_planar_do(f);
                PlanarityReport rd = kernel.is_planar_delta(f);
                v.agree = rd.planar == v.r.planar;
                if (!v.r.planar) v.r.witness = rd.witness;
            } else {
                v.r = kernel.is_planar_delta(f);
            }
        }
    });

    for (std::size_t t = 0; t < as.size(); ++t) {
        const Elem& a = as[t];
        const SymbolicRDP& s = verdicts[t].s;
        const PlanarityReport& r = verdicts[t].r;
        const std::string& used = verdicts[t].used;
        bool agree = verdicts[t].agree;
        if (!agree) ++disagreements;
        planar_count += r.planar ? 1 : 0;

        Json j;
        j["field"] = F.spec_string();
        j["family"] = par.has("poly")
                          ? std::string("custom")
                          : (s.m <= 4 ? std::string(1, family_letter(s.m)) : std::string("Dkm"));
        j["k"] = s.k;
        j["m"] = s.m;
        j["d"] = s.d;
        j["a"] = F.format_elem(a);
        j["planar"] = r.planar;
        j["method"] = used == "both" ? "two-to-one+delta" : method_name(r.method);
        j["image_size"] = r.image_size;
        Json flat = j;
        if (r.witness) {
            j["witness"] = {{"eps", F.format_elem(r.witness->eps)},
                            {"x1", F.format_elem(r.witness->x1)},
                            {"x2", F.format_elem(r.witness->x2)}};
            flat["witness"] = F.format_elem(r.witness->eps) + "|" +
                              F.format_elem(r.witness->x1) + "|" + F.format_elem(r.witness->x2);
        }
        if (used == "both") j["methods_agree"] = agree;
        if (par.has("poly")) j["poly"] = par.str("poly");
        std::ostringstream line;
        line << "a=" << F.format_elem(a) << ": " << (r.planar ? "planar" : "not planar")
             << " (image " << r.image_size << "/" << (F.q() - 1) / 2 << ")";
        rep.record(j, flat, line.str());
    }
    Json summary;
    summary["field"] = F.spec_string();
    summary["tested"] = as.size();
    summary["planar"] = planar_count;
    if (method == "both") summary["method_disagreements"] = disagreements;
    rep.finish(summary);
    return disagreements == 0 ? 0 : 1;
}

inline int run_curve_count(const Params& par, const JobSpec& spec, std::ostream& out) {
    FieldCtx F = field_from(par);
    constexpr std::uint64_t kSoftCap = 6561;   // beyond this the grid is flagged slow
    constexpr std::uint64_t kHardCap = 59049;  // counting envelope
    if (F.q() > kHardCap)
        fail("CeilingExceeded", "curve counting is capped at q <= 59049");
    if (F.q() > kSoftCap && !par.flag("allow-slow"))
        fail("CeilingExceeded", "q > 6561 needs --allow-slow (O(q^2) grid)");

    Elem a = par.has("a") ? F.parse_elem(par.str("a")) : F.one();
    bool normalize = par.flag("a-one");
    BiPoly C{F, {}};
    std::string label, note;
    if (par.has("preset")) {
        label = par.str("preset");
        C = preset_curve(label, F, a, normalize);
        note = find_preset(label).note;
    } else if (par.has("terms")) {
        label = "custom";
        C = bipoly_from_string(F, par.str("terms"));
    } else {
        fail("ParameterMissing", "curve-count needs --preset or --terms");
    }
    auto threads = static_cast<unsigned>(par.i64_or("threads", 1));
    CurveCountReport r = count_affine_points(C, threads);

    Reporter rep(out, spec);
    rep.csv_header({"field", "curve", "a", "a_normalized", "degree", "total_points",
                    "boundary_points", "weil_bound", "nontrivial_witness"});
    Json j;
    j["field"] = F.spec_string();
    j["curve"] = label;
    j["a"] = F.format_elem(a);
    j["a_normalized"] = normalize;
    j["degree"] = r.degree;
    j["total_points"] = r.total_points;
    j["boundary_points"] = r.boundary_points;
    j["weil_bound"] = r.weil_bound;
    Json flat = j;
    if (r.nontrivial_witness) {
        j["nontrivial_witness"] = {{"u", F.format_elem(r.nontrivial_witness->first)},
                                   {"v", F.format_elem(r.nontrivial_witness->second)}};
        flat["nontrivial_witness"] = F.format_elem(r.nontrivial_witness->first) + "|" +
                                     F.format_elem(r.nontrivial_witness->second);
    }
    if (!note.empty()) j["irreducibility"] = note;
    std::ostringstream line;
    line << label << " over F_" << F.q() << ", a=" << F.format_elem(a) << ": " << r.total_points
         << " points (" << r.boundary_points << " on the axes)";
    rep.record(j, flat, line.str());
    rep.finish(nullptr);
    return 0;
}

inline int run_curve_bound(const Params& par, const JobSpec& spec, std::ostream& out) {
    auto q = par.i64("q");
    long degree = par.i64("degree");
    Reporter rep(out, spec);
    rep.csv_header(
        {"q", "degree", "bound", "exact", "exceeds_zero", "boundary", "exceeds_boundary"});
    Json j;
    j["q"] = q;
    j["degree"] = degree;
    ThresholdReport zero = threshold_degree_check(q, degree, 0);
    j["bound"] = zero.bound;
    j["exact"] = zero.exact;
    j["exceeds_zero"] = zero.exceeds ? Json(*zero.exceeds) : Json("indeterminate");
    std::ostringstream line;
    line << "q=" << q << " d=" << degree << ": bound " << zero.bound;
    if (par.has("boundary")) {
        auto boundary = par.i64("boundary");
        ThresholdReport t = threshold_degree_check(q, degree, boundary);
        j["boundary"] = boundary;
        j["exceeds_boundary"] = t.exceeds ? Json(*t.exceeds) : Json("indeterminate");
        line << (t.exceeds && *t.exceeds ? " > " : " <= ") << boundary;
    }
    rep.record(j, line.str());
    rep.finish(nullptr);
    return 0;
}

}  // namespace detail

// Dispatch a validated JobSpec. Returns the process exit status: 0 clean,
// 1 verification discrepancy (so CI can gate on appendix-verify), and any
// planarium::Error maps to exit 2 in the tool.
inline int run_job(const JobSpec& spec, std::ostream& out) {
    std::map<std::string, std::string> kv = spec.parameters;
    if (!spec.field.empty()) kv["field"] = spec.field;
    JobSpec full = spec;
    full.parameters = kv;
    detail::Params par(spec.command, full.parameters);

    if (spec.command == "field-info") return detail::run_field_info(par, full, out);
    if (spec.command == "rdp-show") return detail::run_rdp_show(par, full, out);
    if (spec.command == "do-check") return detail::run_do_check(par, full, out);
    if (spec.command == "classify-scan") return detail::run_classify_scan(par, full, out, false);
    if (spec.command == "appendix-verify") return detail::run_classify_scan(par, full, out, true);
    if (spec.command == "planarity") return detail::run_planarity(par, full, out);
    if (spec.command == "curve-count") return detail::run_curve_count(par, full, out);
    if (spec.command == "curve-bound") return detail::run_curve_bound(par, full, out);
    fail("UnknownCommand", "unknown command '" + spec.command + "'");
}

}  // namespace planarium
