#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "oredim/report.hpp"

namespace {

using namespace oredim;

Fixture resolve_fixture(const std::string& arg, unsigned op_depth_floor) {
    std::filesystem::path path(arg);
    if (std::filesystem::exists(path)) return load_fixture(path, op_depth_floor);
    for (const auto& bundled : bundled_corpus())
        if (arg == bundled.name)
            return build_fixture(parse_fixture_json(Json::parse(bundled.json_text)), op_depth_floor);
    throw FixtureError("$", "no such fixture file or bundled fixture '" + arg + "'");
}

std::vector<Fixture> resolve_corpus(const std::string& dir, unsigned op_depth_floor) {
    std::vector<Fixture> fixtures;
    if (dir.empty()) {
        for (const auto& bundled : bundled_corpus())
            fixtures.push_back(
                build_fixture(parse_fixture_json(Json::parse(bundled.json_text)), op_depth_floor));
        return fixtures;
    }
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    // an empty corpus is legal: the suite report is empty and successful
    for (const auto& p : paths) fixtures.push_back(load_fixture(p, op_depth_floor));
    return fixtures;
}

Caps caps_with(std::size_t cap) {
    Caps caps;
    if (cap != 0) {
        caps.lattice_module_cap = cap;
        caps.truncation_cap = cap;
    }
    return caps;
}

int emit(const RunReport& report, const std::string& report_path) {
    std::cout << report.human;
    if (!report_path.empty()) write_report(report, report_path);
    return report.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oredim: exact uniform/couniform dimension checks for truncated "
                 "inverse-polynomial modules over skew Ore extensions R(x;sigma,delta)"};
    app.require_subcommand(1);

    std::string fixture_arg, report_path, corpus_dir, kind = "rudim", theorem;
    unsigned depth = 2;
    std::size_t cap = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--report", report_path, "write the structured JSON report to this path");
        cmd->add_option("--cap", cap, "override the lattice/truncation size caps");
    };

    CLI::App* verify = app.add_subcommand("verify", "run all ring/map/module law checks");
    verify->add_option("fixture", fixture_arg, "fixture file or bundled name")->required();
    add_common(verify);

    CLI::App* dim = app.add_subcommand("dim", "compute a dimension of the base module");
    dim->add_option("--kind", kind, "rudim or corank")
        ->check(CLI::IsMember({"rudim", "corank"}));
    dim->add_option("fixture", fixture_arg, "fixture file or bundled name")->required();
    add_common(dim);

    CLI::App* check = app.add_subcommand("check", "run one truncated lemma/theorem check");
    check->add_option("--theorem", theorem, "which statement to check")
        ->required()
        ->check(CLI::IsMember({"essential", "uniform", "rudim", "small", "hollow", "hollow-simple",
                               "corank"}));
    check->add_option("--depth", depth, "truncation depth d");
    check->add_option("fixture", fixture_arg, "fixture file or bundled name")->required();
    add_common(check);

    CLI::App* suite = app.add_subcommand("suite", "run every applicable check on a corpus");
    suite->add_option("--depth", depth, "maximum truncation depth D");
    suite->add_option("--corpus", corpus_dir, "directory of fixture files (default: bundled)");
    add_common(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Caps caps = caps_with(cap);
        unsigned op_floor = depth + 4;
        if (verify->parsed())
            return emit(verify_report(resolve_fixture(fixture_arg, 8), caps), report_path);
        if (dim->parsed())
            return emit(dim_report(resolve_fixture(fixture_arg, 8), kind, caps), report_path);
        if (check->parsed())
            return emit(check_report(resolve_fixture(fixture_arg, op_floor), theorem, depth, caps),
                        report_path);
        if (suite->parsed())
            return emit(suite_report(resolve_corpus(corpus_dir, op_floor), depth, caps), report_path);
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& w : e.witnesses()) std::cerr << "  witness: " << w << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
