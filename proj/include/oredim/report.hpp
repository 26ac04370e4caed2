#pragma once

#include <filesystem>

#include "oredim/harness.hpp"

namespace oredim {

/// A command outcome: machine document ({header, body}), human text, and the
/// pass/fail status. Re-running the same command on the same fixture yields a
/// byte-identical body; the timestamp lives in a single header field.
struct RunReport {
    Json document;
    std::string human;
    bool failed = false;
};

RunReport verify_report(const Fixture& fx, const Caps& caps);
RunReport dim_report(const Fixture& fx, const std::string& kind, const Caps& caps);
RunReport check_report(const Fixture& fx, const std::string& theorem, unsigned depth,
                       const Caps& caps);
RunReport suite_report(const std::vector<Fixture>& fixtures, unsigned depth, const Caps& caps);

std::string report_body_text(const RunReport& report);
void write_report(const RunReport& report, const std::filesystem::path& path);

}  // namespace oredim
