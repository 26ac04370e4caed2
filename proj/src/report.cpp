#include "oredim/report.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

namespace oredim {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchema = "oredim-report/1";

Json make_header() {
    Json h;
    h["tool"] = "oredim";
    h["version"] = kVersion;
    h["schema"] = kSchema;
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    h["timestamp"] = buf;
    return h;
}

std::string status_word(bool failed) { return failed ? "fail" : "pass"; }

void render_laws(std::ostream& os, const Json& laws) {
    os << "  laws: ring " << laws["ring"]["label"].get<std::string>() << " (|R|="
       << laws["ring"]["size"] << ", char " << laws["ring"]["characteristic"] << ") "
       << (laws["ring"]["laws_ok"].get<bool>() ? "ok" : "VIOLATED") << "; sigma "
       << (laws["sigma"]["automorphism"].get<bool>() ? "automorphism" : "NOT an automorphism")
       << "; delta " << (laws["delta"]["sigma_derivation"].get<bool>() ? "derivation" : "NOT a derivation")
       << (laws["delta"]["locally_nilpotent"].get<bool>() ? ", locally nilpotent" : ", NOT locally nilpotent")
       << " (max n(r) = " << laws["delta"]["max_nilpotency_index"] << ")\n";
    os << "  module: " << laws["module"]["label"].get<std::string>() << " (|M|="
       << laws["module"]["size"] << ") "
       << (laws["module"]["laws_ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
}

void render_compat(std::ostream& os, const Json& compat) {
    os << "  compat: sigma " << (compat["sigma_compatible"].get<bool>() ? "yes" : "no")
       << ", delta " << (compat["delta_compatible"].get<bool>() ? "yes" : "no")
       << ", completely "
       << ((compat["completely_sigma_compatible"].get<bool>() &&
            compat["completely_delta_compatible"].get<bool>())
               ? "yes"
               : "no")
       << "\n";
    for (const char* key : {"sigma_witness", "delta_witness", "completely_sigma_witness",
                            "completely_delta_witness"})
        if (compat.contains(key))
            os << "    witness (" << key << "): "
               << compat[key]["description"].get<std::string>() << " [revalidates: "
               << (compat[key]["revalidates"].get<bool>() ? "yes" : "NO") << "]\n";
    if (compat.contains("propositions_all_hold"))
        os << "    closure propositions: "
           << (compat["propositions_all_hold"].get<bool>() ? "all hold" : "VIOLATED") << "\n";
}

void render_dimensions(std::ostream& os, const Json& dims) {
    const Json& m = dims["module"];
    os << "  dims(M): size " << m["size"] << ", rudim " << m["rudim"] << ", corank "
       << m["corank"] << ", |J(M)| " << m["radical_size"] << ", semisimple "
       << (m["semisimple"].get<bool>() ? "yes" : "no") << ", hollow "
       << (m["hollow"].get<bool>() ? "yes" : "no") << ", uniform "
       << (m["uniform"].get<bool>() ? "yes" : "no") << "\n";
    for (const Json& lv : dims["truncations"]) {
        os << "  dims(M[x^-1]_<=" << lv["depth"] << "): ";
        if (lv.contains("skipped")) {
            os << "skipped (" << lv["skipped"].get<std::string>() << ")\n";
        } else {
            os << "size " << lv["size"] << ", rudim " << lv["rudim"] << ", corank "
               << lv["corank"] << ", |J| " << lv["radical_size"] << ", hollow "
               << (lv["hollow"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
}

void render_checks(std::ostream& os, const Json& checks) {
    for (const Json& run : checks) {
        if (run["check"] == "well-definedness") {
            const Json& res = run["result"];
            os << "  [" << (res.contains("holds") ? (res["holds"].get<bool>() ? "pass" : "FAIL")
                                                  : "skip")
               << "] well-definedness d=" << run["depth"];
            if (res.contains("triples_checked")) os << " (" << res["triples_checked"] << " triples)";
            if (res.contains("skipped")) os << " (" << res["skipped"].get<std::string>() << ")";
            os << "\n";
            continue;
        }
        os << "  [" << run["verdict"].get<std::string>() << "] " << run["check"].get<std::string>()
           << " d=" << run["depth"];
        if (run.contains("note")) os << " -- " << run["note"].get<std::string>();
        os << "\n";
    }
}

std::string render_fixture_body(const Json& body) {
    std::ostringstream os;
    os << "== fixture " << body["fixture"]["name"].get<std::string>() << " ==\n";
    render_laws(os, body["laws"]);
    render_compat(os, body["compat"]);
    const Json& perfect = body["ring_right_perfect"];
    os << "  ring: right perfect " << (perfect["right_perfect"].get<bool>() ? "yes" : "no")
       << " (|J(R)| = " << perfect["radical_size"] << ", J^"
       << perfect["radical_nilpotency"] << " = 0)\n";
    render_dimensions(os, body["dimensions"]);
    render_checks(os, body["checks"]);
    os << "  dimensions stable across depths: "
       << (body["dimensions_stable_across_depths"].get<bool>() ? "yes" : "NO") << "\n";
    if (body.contains("notes"))
        for (const Json& note : body["notes"]) os << "  note: " << note.get<std::string>() << "\n";
    return os.str();
}

}  // namespace

RunReport verify_report(const Fixture& fx, const Caps& caps) {
    RunReport rep;
    HarnessEngine engine(fx, caps);
    Json body;
    body["command"] = "verify";
    body["fixture"] = spec_to_json(fx.spec);
    body["laws"] = engine.law_summary();
    body["compat"] = engine.compat_json();
    bool laws_ok = body["laws"]["ring"]["laws_ok"].get<bool>() &&
                   body["laws"]["sigma"]["automorphism"].get<bool>() &&
                   body["laws"]["delta"]["sigma_derivation"].get<bool>() &&
                   body["laws"]["delta"]["locally_nilpotent"].get<bool>() &&
                   body["laws"]["module"]["laws_ok"].get<bool>();
    body["status"] = status_word(!laws_ok);
    rep.failed = !laws_ok;
    rep.document["header"] = make_header();
    rep.document["body"] = body;
    std::ostringstream os;
    os << "== fixture " << fx.spec.name << " ==\n";
    render_laws(os, body["laws"]);
    render_compat(os, body["compat"]);
    os << "verify: " << body["status"].get<std::string>() << "\n";
    rep.human = os.str();
    return rep;
}

RunReport dim_report(const Fixture& fx, const std::string& kind, const Caps& caps) {
    RunReport rep;
    HarnessEngine engine(fx, caps);
    unsigned value = kind == "rudim" ? engine.base_rudim() : engine.base_corank();
    Json body;
    body["command"] = "dim";
    body["fixture"] = spec_to_json(fx.spec);
    body["kind"] = kind;
    body["value"] = value;
    rep.document["header"] = make_header();
    rep.document["body"] = body;
    rep.human = kind + "(" + fx.module->label() + ") = " + std::to_string(value) + "\n";
    rep.failed = false;
    return rep;
}

RunReport check_report(const Fixture& fx, const std::string& theorem, unsigned depth,
                       const Caps& caps) {
    RunReport rep;
    HarnessEngine engine(fx, caps);
    TheoremRun run = engine.run_check(theorem, depth);
    Json body;
    body["command"] = "check";
    body["fixture"] = spec_to_json(fx.spec);
    Json rj;
    rj["check"] = run.check;
    rj["depth"] = run.depth;
    rj["verdict"] = verdict_name(run.verdict);
    if (!run.note.empty()) rj["note"] = run.note;
    if (!run.details.empty()) rj["details"] = run.details;
    body["run"] = rj;
    body["status"] = status_word(run.verdict == Verdict::Fail);
    rep.failed = run.verdict == Verdict::Fail;
    rep.document["header"] = make_header();
    rep.document["body"] = body;
    std::ostringstream os;
    os << "[" << verdict_name(run.verdict) << "] " << fx.spec.name << " " << run.check
       << " d=" << run.depth;
    if (!run.note.empty()) os << " -- " << run.note;
    os << "\n";
    rep.human = os.str();
    return rep;
}

RunReport suite_report(const std::vector<Fixture>& fixtures, unsigned depth, const Caps& caps) {
    RunReport rep;
    Json body;
    body["command"] = "suite";
    body["depth"] = depth;
    Json entries = Json::array();
    std::ostringstream os;
    bool failed = false;
    for (const Fixture& fx : fixtures) {
        FixtureAnalysis analysis = analyze_fixture(fx, depth, caps);
        failed = failed || analysis.failed;
        entries.push_back(analysis.body);
        os << render_fixture_body(analysis.body);
    }
    body["fixtures"] = entries;
    body["summary"] = Json{{"fixtures", fixtures.size()}, {"status", status_word(failed)}};
    rep.document["header"] = make_header();
    rep.document["body"] = body;
    os << "suite: " << status_word(failed) << " (" << fixtures.size() << " fixtures, depth "
       << depth << ")\n";
    rep.human = os.str();
    rep.failed = failed;
    return rep;
}

std::string report_body_text(const RunReport& report) {
    return report.document["body"].dump(2) + "\n";
}

void write_report(const RunReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to " + path.string());
    out << report.document.dump(2) << "\n";
}

}  // namespace oredim
