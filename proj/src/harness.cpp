#include "oredim/harness.hpp"

#include <algorithm>
#include <functional>

namespace oredim {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skip: return "skip";
    }
    return "?";
}

HarnessEngine::HarnessEngine(Fixture fx, Caps caps)
    : fx_(std::move(fx)), caps_(caps), inv_(fx_.algebra, fx_.module),
      base_lattice_(SubmoduleLattice::enumerate(carrier_of(*fx_.module), caps.lattice_limits())),
      compat_(compat_report(*fx_.module, fx_.algebra->sigma(), fx_.algebra->delta(), base_lattice_)),
      perfect_(right_perfect_report(fx_.ring, caps.lattice_limits())) {}

const HarnessEngine::Level& HarnessEngine::level(unsigned d) {
    auto it = levels_.find(d);
    if (it != levels_.end()) return it->second;
    Level lv;
    lv.d = d;
    // |M|^{d+1} against the truncation cap
    std::size_t size = 1;
    bool capped = false;
    for (unsigned i = 0; i <= d && !capped; ++i) {
        size *= fx_.module->size();
        if (size > caps_.truncation_cap) capped = true;
    }
    if (capped) {
        lv.skip_reason = "truncation size " + std::to_string(fx_.module->size()) + "^" +
                         std::to_string(d + 1) + " exceeds cap " +
                         std::to_string(caps_.truncation_cap);
    } else {
        lv.trunc = inv_.truncate(d, caps_.truncation_cap);
        lv.a_lattice = SubmoduleLattice::enumerate(a_carrier_of(*lv.trunc), caps_.lattice_limits());
        try {
            lv.r_lattice =
                SubmoduleLattice::enumerate(r_carrier_of(*lv.trunc), caps_.lattice_limits());
        } catch (const std::exception& e) {
            lv.r_lattice_note = std::string("restricted lattice not evaluated: ") + e.what();
        }
    }
    return levels_.emplace(d, std::move(lv)).first->second;
}

std::string HarnessEngine::submodule_desc(const SubmoduleLattice& lat, std::size_t idx,
                                          const std::function<std::string(Elem)>& name) const {
    const Bitset& b = lat.sub(idx);
    std::string out = "#" + std::to_string(idx) + " (|N|=" + std::to_string(b.count()) + ")";
    if (b.count() <= 8) {
        out += " {";
        bool first = true;
        for (Elem e : b.elements()) {
            if (!first) out += ", ";
            out += name(e);
            first = false;
        }
        out += "}";
    }
    return out;
}

std::optional<std::size_t> HarnessEngine::induced_index(unsigned d, std::size_t base_idx) {
    const Level& lv = level(d);
    auto elems = lv.trunc->induced_submodule(base_lattice_.sub(base_idx).elements());
    Bitset bits(lv.trunc->size());
    for (Elem e : elems) bits.set(e);
    return lv.a_lattice->find(bits);
}

std::optional<std::size_t> HarnessEngine::designated_submodule() {
    if (!fx_.submodule) return std::nullopt;
    Bitset bits(fx_.module->size());
    for (Elem e : *fx_.submodule) bits.set(e);
    return base_lattice_.index_of(bits);
}

unsigned HarnessEngine::base_rudim() {
    if (!base_rudim_) base_rudim_ = rudim(base_lattice_);
    return base_rudim_->value;
}

unsigned HarnessEngine::base_corank() {
    if (!base_corank_) base_corank_ = corank(base_lattice_);
    return base_corank_->value;
}

namespace {
TheoremRun make_run(const std::string& fixture, const std::string& check, unsigned d) {
    TheoremRun run;
    run.fixture = fixture;
    run.check = check;
    run.depth = d;
    return run;
}

bool level_skip(const HarnessEngine::Level& lv, TheoremRun& run) {
    if (lv.skip_reason) {
        run.verdict = Verdict::Skip;
        run.note = *lv.skip_reason;
        return true;
    }
    return false;
}
}  // namespace

// ------------------------------------------------------------- essential ---

Json HarnessEngine::witness_audit(unsigned d, std::size_t n_idx) {
    // For every nonzero m(x) of degree k >= 1 with leading coefficient m_k,
    // pick the first r with 0 != m_k r in N and evaluate the candidate
    // witness m(x) * (x^{k-1} sigma(r)). Recorded: does it land in
    // N[x^-1]_{<=d}, and does it equal m_k r x^-1 - m_k delta(r)?
    const Level& lv = level(d);
    const auto& trunc = *lv.trunc;
    const auto& A = *fx_.algebra;
    const auto& M = *fx_.module;
    const Bitset& nset = base_lattice_.sub(n_idx);
    auto induced = trunc.induced_submodule(nset.elements());
    std::vector<bool> in_induced(trunc.size(), false);
    for (Elem e : induced) in_induced[e] = true;

    std::size_t in_count = 0, out_count = 0, undefined_count = 0;
    std::size_t identity_match = 0, identity_mismatch = 0;
    Json first_out = nullptr, first_mismatch = nullptr;

    for (Elem e = 1; e < trunc.size(); ++e) {
        InversePoly p = trunc.decode(e);
        auto k = p.depth();
        Elem mk = p.leading_coeff();
        if (k == 0) {
            ++undefined_count;  // x^{k-1} leaves A when k = 0
            continue;
        }
        std::optional<Elem> pick;
        for (Elem r = 0; r < A.ring().size(); ++r) {
            Elem mr = M.act(mk, r);
            if (mr != M.zero() && nset.test(mr)) {
                pick = r;
                break;
            }
        }
        if (!pick) {
            ++undefined_count;  // N not essential against this leading coefficient
            continue;
        }
        Elem r = *pick;
        SkewPoly witness_arg = A.mul(A.x(static_cast<unsigned>(k - 1)), A.constant(A.sigma()(r)));
        Elem w = trunc.act_poly(e, witness_arg);
        if (in_induced[w]) ++in_count;
        else {
            ++out_count;
            if (first_out.is_null())
                first_out = Json{{"m", inv_.to_string(p)},
                                 {"r", A.ring().element_name(r)},
                                 {"value", inv_.to_string(trunc.decode(w))}};
        }
        // claimed closed form: m_k r x^-1 - m_k delta(r)
        InversePoly claimed = inv_.add(
            inv_.monomial(M.act(mk, r), 1),
            inv_.monomial(M.neg(M.act(mk, A.delta()(r))), 0));
        if (trunc.encode(claimed) == w) ++identity_match;
        else {
            ++identity_mismatch;
            if (first_mismatch.is_null())
                first_mismatch = Json{{"m", inv_.to_string(p)},
                                      {"r", A.ring().element_name(r)},
                                      {"actual", inv_.to_string(trunc.decode(w))},
                                      {"claimed", inv_.to_string(claimed)}};
        }
    }
    Json audit;
    audit["lands_in_induced"] = in_count;
    audit["lands_outside"] = out_count;
    audit["witness_undefined"] = undefined_count;
    audit["closed_form_matches"] = identity_match;
    audit["closed_form_mismatches"] = identity_mismatch;
    if (!first_out.is_null()) audit["first_outside"] = first_out;
    if (!first_mismatch.is_null()) audit["first_closed_form_mismatch"] = first_mismatch;
    return audit;
}

TheoremRun HarnessEngine::check_lemma_essential(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "essential", d);
    if (!compat_.completely_compatible()) {
        run.verdict = Verdict::Skip;
        run.note = "module is not completely (sigma,delta)-compatible";
        return run;
    }
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;
    auto only = designated_submodule();
    if (only && !base_lattice_.is_essential(*only)) {
        run.verdict = Verdict::Skip;
        run.note = "designated submodule is not essential";
        return run;
    }

    auto base_name = [this](Elem e) { return fx_.module->element_name(e); };
    Json cases = Json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < base_lattice_.count(); ++i) {
        if (only && i != *only) continue;
        if (!base_lattice_.is_essential(i)) continue;
        auto idx = induced_index(d, i);
        bool ok = idx && lv.a_lattice->is_essential(*idx);
        all_ok = all_ok && ok;
        Json entry;
        entry["N"] = submodule_desc(base_lattice_, i, base_name);
        entry["induced_essential"] = ok;
        if (d == 1) entry["witness_audit"] = witness_audit(d, i);
        cases.push_back(entry);
    }
    run.details["cases"] = cases;
    run.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    if (!all_ok) run.note = "an essential submodule induced a non-essential truncation";
    return run;
}

// --------------------------------------------------------------- uniform ---

TheoremRun HarnessEngine::check_lemma_uniform(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "uniform", d);
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;
    auto only = designated_submodule();

    auto base_name = [this](Elem e) { return fx_.module->element_name(e); };
    Json cases = Json::array();
    bool all_ok = true;
    std::size_t applicable = 0;
    for (std::size_t i = 0; i < base_lattice_.count(); ++i) {
        if (i == base_lattice_.zero_index()) continue;
        if (only && i != *only) continue;
        Json entry;
        entry["N"] = submodule_desc(base_lattice_, i, base_name);
        if (!base_lattice_.is_uniform_within(i)) {
            entry["skipped"] = "N is not uniform";
            cases.push_back(entry);
            continue;
        }
        ++applicable;
        auto idx = induced_index(d, i);
        bool ok = idx && lv.a_lattice->is_uniform_within(*idx);
        all_ok = all_ok && ok;
        entry["induced_uniform"] = ok;
        cases.push_back(entry);
    }
    run.details["cases"] = cases;
    if (applicable == 0) {
        run.verdict = Verdict::Skip;
        run.note = "no uniform submodules to check";
    } else {
        run.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
        if (!all_ok) run.note = "a uniform submodule induced a non-uniform truncation";
    }
    return run;
}

// ----------------------------------------------------------------- rudim ---

TheoremRun HarnessEngine::check_theorem_rudim(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "rudim", d);
    if (!compat_.completely_compatible()) {
        run.verdict = Verdict::Skip;
        run.note = "module is not completely (sigma,delta)-compatible";
        return run;
    }
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;
    unsigned base = base_rudim();
    unsigned trunc = rudim(*lv.a_lattice).value;
    run.details["rudim_module"] = base;
    run.details["rudim_truncation"] = trunc;
    run.verdict = base == trunc ? Verdict::Pass : Verdict::Fail;
    if (run.verdict == Verdict::Fail)
        run.note = "rudim " + std::to_string(trunc) + " != " + std::to_string(base);
    return run;
}

// ----------------------------------------------------------------- small ---

Json HarnessEngine::bass_hypotheses(unsigned d) {
    const Level& lv = level(d);
    Json j;
    j["module_is_bass"] = is_bass(base_lattice_);
    if (lv.r_lattice) j["truncation_restricted_to_ring_is_bass"] = is_bass(*lv.r_lattice);
    else j["truncation_restricted_to_ring_is_bass"] = *lv.r_lattice_note;
    return j;
}

Json HarnessEngine::section_audit(unsigned d, std::size_t n_idx) {
    // Audit of the section argument for a non-small induced submodule:
    // pick the first proper Q with Q + N[x^-1] = T, the first maximal
    // restricted submodule P containing Q, and the first monomial
    // n x^-k in N[x^-1] \ P; then test <P_k> != M and <P_k> + N = M.
    const Level& lv = level(d);
    const auto& trunc = *lv.trunc;
    Json audit;
    auto induced_elems = trunc.induced_submodule(base_lattice_.sub(n_idx).elements());
    Bitset induced(trunc.size());
    for (Elem e : induced_elems) induced.set(e);
    std::size_t nt = lv.a_lattice->index_of(induced);

    std::optional<std::size_t> q_idx;
    for (std::size_t q = 0; q < lv.a_lattice->count(); ++q) {
        if (q == lv.a_lattice->full_index()) continue;
        if (lv.a_lattice->join(q, nt) == lv.a_lattice->full_index()) {
            q_idx = q;
            break;
        }
    }
    if (!q_idx) {
        audit["note"] = "no complement found (submodule is small)";
        return audit;
    }
    audit["Q"] = "#" + std::to_string(*q_idx);
    if (!lv.r_lattice) {
        audit["note"] = *lv.r_lattice_note;
        return audit;
    }
    const Bitset& qbits = lv.a_lattice->sub(*q_idx);
    std::optional<std::size_t> p_idx;
    for (std::size_t p : lv.r_lattice->maximals())
        if (qbits.is_subset_of(lv.r_lattice->sub(p))) {
            p_idx = p;
            break;
        }
    if (!p_idx) {
        audit["note"] = "no maximal restricted submodule contains Q";
        return audit;
    }
    const Bitset& pbits = lv.r_lattice->sub(*p_idx);
    audit["P"] = "restricted #" + std::to_string(*p_idx);

    std::optional<unsigned> pick_k;
    std::optional<Elem> pick_n;
    for (unsigned k = 0; k <= d && !pick_k; ++k)
        for (Elem n : base_lattice_.sub(n_idx).elements()) {
            std::vector<Elem> c(k + 1, fx_.module->zero());
            c[k] = n;
            Elem mono = trunc.encode(InversePoly(std::move(c), fx_.module->zero()));
            if (!pbits.test(mono)) {
                pick_k = k;
                pick_n = n;
                break;
            }
        }
    if (!pick_k) {
        audit["note"] = "every monomial of N[x^-1] lies in P";
        return audit;
    }
    audit["k"] = *pick_k;
    audit["n"] = fx_.module->element_name(*pick_n);

    auto section = trunc.section_submodule(pbits.as_bools(), *pick_k);
    Bitset section_bits(fx_.module->size());
    for (Elem e : section) section_bits.set(e);
    std::size_t section_idx = base_lattice_.index_of(section_bits);
    bool proper = section_idx != base_lattice_.full_index();
    bool covers = base_lattice_.join(section_idx, n_idx) == base_lattice_.full_index();
    audit["section_is_proper"] = proper;
    audit["section_plus_N_is_M"] = covers;
    return audit;
}

TheoremRun HarnessEngine::check_lemma_small(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "small", d);
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;
    run.details["hypotheses"] = bass_hypotheses(d);

    auto only = designated_submodule();
    auto base_name = [this](Elem e) { return fx_.module->element_name(e); };
    Json cases = Json::array();
    bool all_ok = true;
    bool audited = false;
    for (std::size_t i = 0; i < base_lattice_.count(); ++i) {
        if (only && i != *only) continue;
        bool small_base = base_lattice_.is_small(i);
        auto idx = induced_index(d, i);
        if (!idx) {
            all_ok = false;
            continue;
        }
        bool small_trunc = lv.a_lattice->is_small(*idx);
        bool ok = small_base == small_trunc;
        all_ok = all_ok && ok;
        Json entry;
        entry["N"] = submodule_desc(base_lattice_, i, base_name);
        entry["small_in_module"] = small_base;
        entry["small_in_truncation"] = small_trunc;
        entry["equivalent"] = ok;
        if (!small_trunc && !audited) {
            entry["section_audit"] = section_audit(d, i);
            audited = true;
        }
        cases.push_back(entry);
    }
    run.details["cases"] = cases;
    run.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    if (!all_ok) run.note = "smallness does not transfer for some submodule";
    return run;
}

// ---------------------------------------------------------------- hollow ---

TheoremRun HarnessEngine::check_lemma_hollow_simple(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "hollow-simple", d);
    if (!is_simple(base_lattice_)) {
        run.verdict = Verdict::Skip;
        run.note = "module is not simple";
        return run;
    }
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;

    bool hollow = is_hollow(*lv.a_lattice);
    run.details["truncation_hollow"] = hollow;

    // Induction-step audit: a proper submodule never contains an element of
    // full depth d. Equivalently, anything reaching depth d generates
    // everything.
    bool leading_ok = true;
    for (std::size_t s = 0; s < lv.a_lattice->count() && leading_ok; ++s) {
        if (s == lv.a_lattice->full_index()) continue;
        for (Elem e : lv.a_lattice->sub(s).elements())
            if (lv.trunc->decode(e).depth() == static_cast<std::ptrdiff_t>(d)) {
                leading_ok = false;
                break;
            }
    }
    run.details["proper_submodules_avoid_full_depth"] = leading_ok;
    run.verdict = hollow && leading_ok ? Verdict::Pass : Verdict::Fail;
    if (run.verdict == Verdict::Fail) run.note = "truncation of a simple module is not hollow";
    return run;
}

TheoremRun HarnessEngine::check_lemma_hollow(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "hollow", d);
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;
    run.details["hypotheses"] = bass_hypotheses(d);
    bool base_hollow = is_hollow(base_lattice_);
    bool trunc_hollow = is_hollow(*lv.a_lattice);
    run.details["module_hollow"] = base_hollow;
    run.details["truncation_hollow"] = trunc_hollow;
    run.verdict = base_hollow == trunc_hollow ? Verdict::Pass : Verdict::Fail;
    if (run.verdict == Verdict::Fail) run.note = "hollowness does not transfer";
    return run;
}

// ---------------------------------------------------------------- corank ---

TheoremRun HarnessEngine::check_theorem_corank(unsigned d) {
    TheoremRun run = make_run(fx_.spec.name, "corank", d);
    const Level& lv = level(d);
    if (level_skip(lv, run)) return run;
    run.details["ring_right_perfect"] = perfect_.right_perfect;
    if (!perfect_.right_perfect) {
        run.verdict = Verdict::Skip;
        run.note = "coefficient ring is not right perfect";
        return run;
    }

    unsigned base = base_corank();
    unsigned trunc = corank(*lv.a_lattice).value;
    run.details["corank_module"] = base;
    run.details["corank_truncation"] = trunc;

    // The radical step of the argument: both module and truncation have
    // semisimple quotients by their radicals.
    auto base_rad = radical_index(base_lattice_);
    auto mod_over_rad = quotient_carrier(carrier_of(*fx_.module), base_lattice_.sub(base_rad));
    auto mq_lat = SubmoduleLattice::enumerate(mod_over_rad.carrier(), caps_.lattice_limits());
    bool base_ss = is_semisimple(mq_lat);
    auto t_rad = radical_index(*lv.a_lattice);
    auto t_over_rad = quotient_carrier(a_carrier_of(*lv.trunc), lv.a_lattice->sub(t_rad));
    auto tq_lat = SubmoduleLattice::enumerate(t_over_rad.carrier(), caps_.lattice_limits());
    bool trunc_ss = is_semisimple(tq_lat);
    run.details["module_over_radical_semisimple"] = base_ss;
    run.details["truncation_over_radical_semisimple"] = trunc_ss;

    run.verdict = (base == trunc && base_ss && trunc_ss) ? Verdict::Pass : Verdict::Fail;
    if (base != trunc) run.note = "corank " + std::to_string(trunc) + " != " + std::to_string(base);
    else if (!base_ss || !trunc_ss) run.note = "radical quotient is not semisimple";
    return run;
}

// ------------------------------------------------------------- dispatch ---

const std::vector<std::string>& HarnessEngine::check_names() {
    static const std::vector<std::string> names = {"essential", "uniform", "rudim",  "small",
                                                   "hollow",    "hollow-simple", "corank"};
    return names;
}

TheoremRun HarnessEngine::run_check(const std::string& name, unsigned d) {
    if (name == "essential") return check_lemma_essential(d);
    if (name == "uniform") return check_lemma_uniform(d);
    if (name == "rudim") return check_theorem_rudim(d);
    if (name == "small") return check_lemma_small(d);
    if (name == "hollow") return check_lemma_hollow(d);
    if (name == "hollow-simple") return check_lemma_hollow_simple(d);
    if (name == "corank") return check_theorem_corank(d);
    throw std::invalid_argument("unknown check '" + name + "'");
}

// ------------------------------------------------------------- summaries ---

Json HarnessEngine::law_summary() const {
    Json j;
    const auto& A = *fx_.algebra;
    auto ring_laws = A.ring().verify_laws();
    j["ring"] = Json{{"label", A.ring().label()},
                     {"size", A.ring().size()},
                     {"commutative", A.ring().is_commutative()},
                     {"characteristic", A.ring().characteristic()},
                     {"laws_ok", ring_laws.ok}};
    auto endo = verify_endomorphism(A.ring(), A.sigma());
    j["sigma"] = Json{{"endomorphism", endo.valid()}, {"automorphism", endo.valid_automorphism()}};
    auto der = verify_sigma_derivation(A.ring(), A.sigma(), A.delta());
    auto nil = nilpotency_table(A.ring(), A.delta());
    unsigned max_n = 0;
    for (unsigned n : nil.index) max_n = std::max(max_n, n);
    j["delta"] = Json{{"sigma_derivation", der.valid()},
                      {"locally_nilpotent", nil.locally_nilpotent},
                      {"max_nilpotency_index", max_n}};
    j["sigma_delta_commute"] = A.sigma_delta_commute();
    auto mod_laws = fx_.module->verify_laws();
    j["module"] = Json{{"label", fx_.module->label()},
                       {"size", fx_.module->size()},
                       {"laws_ok", mod_laws.ok}};
    return j;
}

Json HarnessEngine::compat_json() {
    Json j;
    j["sigma_compatible"] = compat_.sigma_compatible;
    j["delta_compatible"] = compat_.delta_compatible;
    j["completely_sigma_compatible"] = compat_.completely_sigma;
    j["completely_delta_compatible"] = compat_.completely_delta;
    auto witness_json = [&](const std::optional<CompatWitness>& w, bool sigma_kind) -> Json {
        if (!w) return nullptr;
        const RingMap& map = sigma_kind ? fx_.algebra->sigma() : fx_.algebra->delta();
        Json wj;
        wj["description"] = w->description;
        wj["revalidates"] = revalidate_witness(*fx_.module, map, sigma_kind, base_lattice_, *w);
        return wj;
    };
    if (compat_.sigma_witness) j["sigma_witness"] = witness_json(compat_.sigma_witness, true);
    if (compat_.delta_witness) j["delta_witness"] = witness_json(compat_.delta_witness, false);
    if (compat_.completely_sigma_witness)
        j["completely_sigma_witness"] = witness_json(compat_.completely_sigma_witness, true);
    if (compat_.completely_delta_witness)
        j["completely_delta_witness"] = witness_json(compat_.completely_delta_witness, false);
    if (compat_.completely_compatible()) {
        auto props = check_compat_propositions(*fx_.module, *fx_.algebra, base_lattice_,
                                               caps_.lattice_limits());
        Json pj = Json::array();
        for (const auto& item : props.items)
            pj.push_back(Json{{"id", item.id}, {"holds", item.holds}, {"statement", item.note}});
        j["propositions"] = pj;
        j["propositions_all_hold"] = props.all_hold();
    }
    return j;
}

Json HarnessEngine::dimension_table(unsigned max_depth) {
    Json j;
    Json base;
    base["size"] = fx_.module->size();
    base["rudim"] = base_rudim();
    base["corank"] = base_corank();
    base["radical_size"] = base_lattice_.sub(radical_index(base_lattice_)).count();
    {
        auto rad = base_lattice_.sub(radical_index(base_lattice_));
        auto q = quotient_carrier(carrier_of(*fx_.module), rad);
        base["semisimple_over_radical"] =
            is_semisimple(SubmoduleLattice::enumerate(q.carrier(), caps_.lattice_limits()));
    }
    base["semisimple"] = is_semisimple(base_lattice_);
    base["hollow"] = is_hollow(base_lattice_);
    base["uniform"] = is_uniform(base_lattice_);
    base["simple"] = is_simple(base_lattice_);
    base["submodules"] = base_lattice_.count();
    j["module"] = base;

    Json levels = Json::array();
    for (unsigned d = 1; d <= max_depth; ++d) {
        const Level& lv = level(d);
        Json lj;
        lj["depth"] = d;
        if (lv.skip_reason) {
            lj["skipped"] = *lv.skip_reason;
        } else {
            lj["size"] = lv.trunc->size();
            lj["submodules"] = lv.a_lattice->count();
            lj["rudim"] = rudim(*lv.a_lattice).value;
            lj["corank"] = corank(*lv.a_lattice).value;
            lj["radical_size"] = lv.a_lattice->sub(radical_index(*lv.a_lattice)).count();
            lj["semisimple"] = is_semisimple(*lv.a_lattice);
            lj["hollow"] = is_hollow(*lv.a_lattice);
            lj["uniform"] = is_uniform(*lv.a_lattice);
        }
        levels.push_back(lj);
    }
    j["truncations"] = levels;
    return j;
}

Json HarnessEngine::well_definedness(unsigned d) {
    Json j;
    const Level& lv = level(d);
    if (lv.skip_reason) {
        j["skipped"] = *lv.skip_reason;
        return j;
    }
    const auto& A = *fx_.algebra;
    const auto& trunc = *lv.trunc;
    std::vector<SkewPoly> gens;
    for (Elem r = 0; r < A.ring().size(); ++r) gens.push_back(A.constant(r));
    gens.push_back(A.x(1));
    gens.push_back(A.x(2));
    for (Elem r = 0; r < A.ring().size(); ++r) gens.push_back(A.monomial(r, 1));

    std::size_t checked = 0;
    bool ok = true;
    Json counterexample = nullptr;
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            SkewPoly ab = A.mul(a, b);
            for (Elem e = 0; e < trunc.size() && ok; ++e) {
                Elem lhs = trunc.act_poly(trunc.act_poly(e, a), b);
                Elem rhs = trunc.act_poly(e, ab);
                ++checked;
                if (lhs != rhs) {
                    ok = false;
                    counterexample = Json{{"p", trunc.element_name(e)},
                                          {"a", A.to_string(a)},
                                          {"b", A.to_string(b)}};
                }
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    j["holds"] = ok;
    j["triples_checked"] = checked;
    if (!counterexample.is_null()) j["counterexample"] = counterexample;
    return j;
}

std::optional<std::string> HarnessEngine::exponent_placement_note() const {
    // Compare (r x^-k)(s x^-k') placed at exponents -(i+k') against the
    // collapsed placement -(k+k'): record the first pair where they differ.
    const auto& A = *fx_.algebra;
    const auto& R = A.ring();
    for (Elem r = 0; r < R.size(); ++r)
        for (Elem s = 0; s < R.size(); ++s) {
            InverseRingPoly ours = A.inv_mul(A.inv_monomial(r, 1), A.inv_monomial(s, 0));
            Elem collapsed_coeff = R.zero();
            for (unsigned i = 0; i <= 1; ++i)
                collapsed_coeff = R.add(collapsed_coeff, R.mul(r, A.f_op(1, i, s)));
            InverseRingPoly collapsed = A.inv_monomial(collapsed_coeff, 1);
            if (!(ours == collapsed)) {
                return "(r x^-1)(s x^-0) with r=" + R.element_name(r) + ", s=" +
                       R.element_name(s) + ": summand placement at -(i+k') gives " +
                       A.to_string(ours) + ", collapsing all summands to -(k+k') would give " +
                       A.to_string(collapsed);
            }
        }
    return std::nullopt;
}

// --------------------------------------------------------------- analyze ---

FixtureAnalysis analyze_fixture(const Fixture& fx, unsigned max_depth, const Caps& caps) {
    FixtureAnalysis out;
    HarnessEngine engine(fx, caps);
    Json& body = out.body;
    body["fixture"] = spec_to_json(fx.spec);
    body["laws"] = engine.law_summary();
    body["compat"] = engine.compat_json();
    body["ring_right_perfect"] =
        Json{{"right_perfect", engine.ring_perfect().right_perfect},
             {"radical_size", engine.ring_perfect().radical_size},
             {"radical_nilpotency", engine.ring_perfect().radical_nilpotency},
             {"quotient_semisimple", engine.ring_perfect().quotient_semisimple}};
    body["dimensions"] = engine.dimension_table(max_depth);

    Json runs = Json::array();
    bool failed = false;
    for (unsigned d = 1; d <= max_depth; ++d) {
        Json wd = engine.well_definedness(d);
        if (wd.contains("holds") && !wd["holds"].get<bool>()) failed = true;
        Json wdj;
        wdj["check"] = "well-definedness";
        wdj["depth"] = d;
        wdj["result"] = wd;
        runs.push_back(wdj);
        for (const auto& name : HarnessEngine::check_names()) {
            TheoremRun run = engine.run_check(name, d);
            Json rj;
            rj["check"] = run.check;
            rj["depth"] = run.depth;
            rj["verdict"] = verdict_name(run.verdict);
            if (!run.note.empty()) rj["note"] = run.note;
            if (!run.details.empty()) rj["details"] = run.details;
            runs.push_back(rj);
            if (run.verdict == Verdict::Fail) failed = true;
        }
    }
    body["checks"] = runs;

    // Stabilization of the truncated dimensions across depths.
    std::vector<unsigned> rudims, coranks;
    for (const auto& lvl : body["dimensions"]["truncations"]) {
        if (lvl.contains("rudim")) rudims.push_back(lvl["rudim"].get<unsigned>());
        if (lvl.contains("corank")) coranks.push_back(lvl["corank"].get<unsigned>());
    }
    bool stable = true;
    for (std::size_t i = 1; i < rudims.size(); ++i) stable = stable && rudims[i] == rudims[0];
    for (std::size_t i = 1; i < coranks.size(); ++i) stable = stable && coranks[i] == coranks[0];
    body["dimensions_stable_across_depths"] = stable;

    Json notes = Json::array();
    if (auto note = engine.exponent_placement_note()) notes.push_back(*note);
    if (!notes.empty()) body["notes"] = notes;

    out.failed = failed;
    return out;
}

}  // namespace oredim
