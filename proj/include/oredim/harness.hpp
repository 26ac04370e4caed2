#pragma once

#include <map>
#include <optional>
#include <string>

#include "oredim/compat.hpp"
#include "oredim/fixture.hpp"

namespace oredim {

struct Caps {
    std::size_t lattice_module_cap = 256;
    std::size_t truncation_cap = 256;
    std::size_t submodule_cap = 8192;
    std::size_t corank_oracle_cap = 16;

    LatticeLimits lattice_limits() const {
        LatticeLimits lim;
        lim.module_cap = lattice_module_cap;
        lim.submodule_cap = submodule_cap;
        lim.corank_oracle_cap = corank_oracle_cap;
        return lim;
    }
};

enum class Verdict { Pass, Fail, Skip };
const char* verdict_name(Verdict v);

/// One theorem-level check on one fixture at one truncation depth. Every
/// verdict is recomputable from the fixture and depth alone; `details` holds
/// the per-submodule outcomes and proof-step audits.
struct TheoremRun {
    std::string fixture;
    std::string check;
    unsigned depth = 0;
    Verdict verdict = Verdict::Skip;
    std::string note;
    Json details = Json::object();
};

/// Per-fixture analysis state: the base-module lattice, compatibility
/// report, truncation levels (built lazily, cap-guarded) and the individual
/// lemma/theorem checks. A check whose hypothesis fails on the fixture is
/// reported as skipped, never as a failure.
class HarnessEngine {
public:
    explicit HarnessEngine(Fixture fx, Caps caps = {});

    const Fixture& fixture() const { return fx_; }
    const Caps& caps() const { return caps_; }
    const SubmoduleLattice& base_lattice() const { return base_lattice_; }
    const CompatReport& compat() const { return compat_; }
    const PerfectReport& ring_perfect() const { return perfect_; }

    TheoremRun check_lemma_essential(unsigned d);
    TheoremRun check_lemma_uniform(unsigned d);
    TheoremRun check_theorem_rudim(unsigned d);
    TheoremRun check_lemma_small(unsigned d);
    TheoremRun check_lemma_hollow_simple(unsigned d);
    TheoremRun check_lemma_hollow(unsigned d);
    TheoremRun check_theorem_corank(unsigned d);
    /// Dispatch by CLI name: essential, uniform, rudim, small, hollow,
    /// hollow-simple, corank.
    TheoremRun run_check(const std::string& name, unsigned d);
    static const std::vector<std::string>& check_names();

    /// Re-runs the ring/map verifications and summarizes the outcome.
    Json law_summary() const;
    Json compat_json();
    /// rudim/corank/radical/semisimple for M and each truncation <= D.
    Json dimension_table(unsigned max_depth);
    /// (p.a).b = p.(a.b) over the generating set {r, x, x^2, r*x}.
    Json well_definedness(unsigned d);
    /// Exponent-placement note for the inverse-monomial product (recorded on
    /// fixtures where the two placements actually differ).
    std::optional<std::string> exponent_placement_note() const;

    unsigned base_rudim();
    unsigned base_corank();
    /// Lattice index of the fixture's designated submodule N, when given.
    /// The per-submodule checks restrict to it; otherwise they sweep the
    /// whole lattice.
    std::optional<std::size_t> designated_submodule();

    struct Level {
        unsigned d = 0;
        std::optional<std::string> skip_reason;
        std::optional<TruncatedInverseModule> trunc;
        std::optional<SubmoduleLattice> a_lattice;
        std::optional<SubmoduleLattice> r_lattice;  // scalar restriction to R
        std::optional<std::string> r_lattice_note;
    };
    const Level& level(unsigned d);

private:
    std::string submodule_desc(const SubmoduleLattice& lat, std::size_t idx,
                               const std::function<std::string(Elem)>& name) const;
    std::optional<std::size_t> induced_index(unsigned d, std::size_t base_idx);
    Json witness_audit(unsigned d, std::size_t n_idx);
    Json section_audit(unsigned d, std::size_t n_idx);
    Json bass_hypotheses(unsigned d);

    Fixture fx_;
    Caps caps_;
    InverseModule inv_;
    SubmoduleLattice base_lattice_;
    CompatReport compat_;
    PerfectReport perfect_;
    std::optional<RudimResult> base_rudim_;
    std::optional<CorankResult> base_corank_;
    std::map<unsigned, Level> levels_;
};

/// Full fixture report body: laws, compat, dimensions, all checks for
/// d = 1..D, well-definedness records and stabilization notes.
struct FixtureAnalysis {
    Json body;
    bool failed = false;
};
FixtureAnalysis analyze_fixture(const Fixture& fx, unsigned max_depth, const Caps& caps);

}  // namespace oredim
