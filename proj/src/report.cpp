#include "kstab/report.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kstab {

using json = nlohmann::ordered_json;

std::optional<std::string> lookup(const Facts& facts, const std::string& key) {
    for (const auto& [k, v] : facts)
        if (k == key) return v;
    return std::nullopt;
}

std::string tuple_str(const std::vector<Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
    return out + ")";
}

std::string orbit_multiset_str(const std::vector<LineOrbit>& orbits) {
    std::map<std::int64_t, std::int64_t, std::greater<>> counts;
    for (const auto& o : orbits) ++counts[o.multiplicity];
    std::string out = "{";
    bool first = true;
    for (const auto& [mult, count] : counts) {
        out += (first ? "" : ", ") + std::to_string(mult) + ":" + std::to_string(count);
        first = false;
    }
    return out + "}";
}

std::vector<const LineOrbit*> orbits_by_representative(const std::vector<LineOrbit>& orbits) {
    std::vector<const LineOrbit*> out;
    for (const auto& o : orbits) out.push_back(&o);
    std::stable_sort(out.begin(), out.end(), [](const LineOrbit* a, const LineOrbit* b) {
        if (a->representative.d != b->representative.d) return a->representative.d < b->representative.d;
        return a->representative.str() < b->representative.str();
    });
    return out;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// The function that is smallest at the right end of the interval (ties go to
// the smaller constant term, then to the earlier entry).
std::size_t argmin_affine(const std::vector<AffineRational>& fs, const Rational& cmax) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fs.size(); ++i) {
        const auto a = fs[i].evaluate(cmax), b = fs[best].evaluate(cmax);
        if (a < b || (a == b && fs[i].constant < fs[best].constant)) best = i;
    }
    return best;
}

void binding_facts(Facts& facts, const LcReport& lc) {
    const auto& v = lc.verdict;
    facts.emplace_back("lc_region", v.region ? v.region->str() : "empty");
    facts.emplace_back("lc_everywhere", yes_no(v.everywhere));
    facts.emplace_back("binding", v.binding ? lc.constraints[*v.binding].f.str() : "none");
    facts.emplace_back("binding_constraint", v.binding ? lc.constraints[*v.binding].name : "none");
    facts.emplace_back("binding_zero", v.binding_zero ? v.binding_zero->str() : "none");
}

Facts contraction_facts(const ContractionModel& m, const Rational& cmax) {
    Facts f;
    f.emplace_back("type", validate(m));
    const auto orbits = line_orbits(m);
    std::int64_t total = 0;
    for (const auto& o : orbits) total += o.multiplicity;
    f.emplace_back("line_total", std::to_string(total));
    f.emplace_back("orbits", orbit_multiset_str(orbits));

    const auto ordered = orbits_by_representative(orbits);
    std::string mults = "(", reps = "(";
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        mults += (i ? ", " : "") + std::to_string(ordered[i]->multiplicity);
        reps += (i ? ", " : "") + ordered[i]->representative.str();
    }
    f.emplace_back("multiplicities", mults + ")");
    f.emplace_back("representatives", reps + ")");

    const auto A = boundary_log_discrepancies(m, orbits);
    for (std::size_t j = 0; j < A.size(); ++j) f.emplace_back("A(" + m.root_name(j) + ")", A[j].str());
    if (!A.empty()) f.emplace_back("min A", A[argmin_affine(A, cmax)].str());
    const auto threshold = instability_threshold(m, cmax);
    f.emplace_back("threshold", threshold ? threshold->str() : "none");
    f.emplace_back("discrepancies", tuple_str(contraction_discrepancies(m)));
    for (const auto* o : ordered) f.emplace_back("pullback(" + o->representative.str() + ")", tuple_str(o->pullback_coeffs));

    // Only meaningful when every root is an isolated A1.
    const auto gram = gram_matrix(m);
    bool all_a1 = !m.roots.empty();
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j)
            if (i != j && gram[i][j] != 0) all_a1 = false;
    std::string law = "n/a";
    if (all_a1) {
        law = "holds";
        for (const auto& o : orbits) {
            std::int64_t through = 0;
            for (const auto& r : m.roots)
                if (pairing(o.representative, r) > 0) ++through;
            if (o.multiplicity != (std::int64_t{1} << through)) law = "fails";
        }
    }
    f.emplace_back("a1_multiplicity_law", law);
    binding_facts(f, lct_report(m, cmax));
    return f;
}

Facts chain_facts(const BlowupChain& ch, const Rational& cmax) {
    Facts f;
    for (const auto& d : chain_discrepancies(ch)) f.emplace_back("A(" + d.exceptional + ")", d.value.str());
    binding_facts(f, lc_verdict(ch, cmax));
    return f;
}

Facts wps_facts(const WpsPair& pair, const Rational& cmax) {
    Facts f;
    const auto report = wps_beta_report(pair, cmax);
    f.emplace_back("L", report.log_degree.str());
    for (const auto& row : report.rows) {
        const auto& n = row.divisor.name;
        f.emplace_back("A(" + n + ")", row.A.str());
        f.emplace_back("S(" + n + ")", row.S.str());
        f.emplace_back("beta(" + n + ")", row.beta.str());
        f.emplace_back("sign beta(" + n + ")", to_string(row.sign));
    }
    f.emplace_back("verdict", to_string(report.verdict));
    return f;
}

}  // namespace

Facts payload_facts(const Payload& payload, const Rational& cmax) {
    if (const auto* m = std::get_if<ContractionModel>(&payload)) return contraction_facts(*m, cmax);
    if (const auto* ch = std::get_if<BlowupChain>(&payload)) return chain_facts(*ch, cmax);
    return wps_facts(std::get<WpsPair>(payload), cmax);
}

Facts entry_facts(const CatalogEntry& entry) {
    Facts f;
    f.emplace_back("volume_bound", std::to_string(volume_bound_max_order(entry.degree)));
    if (!entry.quartic_tags.empty()) f.emplace_back("git", to_string(quartic_git_class(entry.quartic_tags)));
    if (!entry.octic_roots.empty())
        f.emplace_back("octic", octic_semistable(entry.octic_roots) ? "semistable" : "unstable");
    return f;
}

LcReport lct_report(const Payload& payload, const Rational& cmax) {
    if (const auto* m = std::get_if<ContractionModel>(&payload)) {
        const auto orbits = line_orbits(*m);
        const auto A = boundary_log_discrepancies(*m, orbits);
        std::vector<NamedDiscrepancy> disc;
        for (std::size_t j = 0; j < A.size(); ++j) disc.push_back({m->root_name(j), A[j]});
        std::vector<BoundaryComponent> comps;
        for (const auto* o : orbits_by_representative(orbits))
            comps.push_back({"line " + o->representative.str(), AffineRational(0, o->multiplicity)});
        return lc_verdict(disc, comps, cmax);
    }
    if (const auto* ch = std::get_if<BlowupChain>(&payload)) return lc_verdict(*ch, cmax);
    const auto& pair = std::get<WpsPair>(payload);
    std::vector<BoundaryComponent> comps;
    for (const auto& b : pair.boundary) comps.push_back({b.name, b.coefficient});
    return lc_verdict({}, comps, cmax);
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Conflict: return "conflict";
    }
    return "unknown";
}

namespace {

void check(std::vector<CheckResult>& out, const CatalogEntry& entry, const std::string& variant,
           const Expectation& ex, const Facts& facts, const std::string& error) {
    CheckResult r{entry.id, variant, ex.quantity, ex.expected, "", ex.provenance, CheckStatus::Pass};
    if (!error.empty()) {
        r.actual = "error: " + error;
    } else if (auto v = lookup(facts, ex.quantity)) {
        r.actual = *v;
    } else {
        r.actual = "(not computed)";
    }
    if (ex.provenance == Provenance::PaperConflicted)
        r.status = CheckStatus::Conflict;
    else
        r.status = r.actual == r.expected ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> verify_entry(const CatalogEntry& entry) {
    std::vector<CheckResult> out;
    {
        Facts facts;
        std::string error;
        try {
            facts = entry_facts(entry);
        } catch (const std::exception& e) {
            error = e.what();
        }
        for (const auto& ex : entry.expectations) check(out, entry, "", ex, facts, error);
    }
    for (const auto& v : entry.variants) {
        Facts facts;
        std::string error;
        try {
            facts = payload_facts(v.payload, entry.cmax);
        } catch (const std::exception& e) {
            error = e.what();
        }
        for (const auto& ex : v.expectations) check(out, entry, v.name, ex, facts, error);
    }
    return out;
}

VerifySummary summarize(const std::vector<CheckResult>& results) {
    VerifySummary s;
    for (const auto& r : results) {
        if (r.status == CheckStatus::Pass)
            ++s.passed;
        else if (r.status == CheckStatus::Fail)
            ++s.failed;
        else
            ++s.conflicts;
    }
    return s;
}

std::string verify_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::string current;
    for (const auto& r : results) {
        if (r.entry != current) {
            os << r.entry << "\n";
            current = r.entry;
        }
        const std::string where = r.variant.empty() ? "" : "[" + r.variant + "] ";
        os << "  " << to_string(r.status) << "  " << where << r.quantity << " = " << r.actual;
        if (r.status == CheckStatus::Fail)
            os << "  (expected " << r.expected << ", " << to_string(r.provenance) << ")";
        else if (r.status == CheckStatus::Conflict)
            os << "  (stated " << r.expected << ", " << to_string(r.provenance) << ", informational)";
        else
            os << "  (" << to_string(r.provenance) << ")";
        os << "\n";
    }
    const auto s = summarize(results);
    os << s.passed << " passed, " << s.failed << " failed, " << s.conflicts << " informational\n";
    return os.str();
}

json verify_json(const std::vector<CheckResult>& results) {
    json checks = json::array();
    for (const auto& r : results) {
        json j = json::object();
        j["entry"] = r.entry;
        j["variant"] = r.variant;
        j["quantity"] = r.quantity;
        j["expected"] = r.expected;
        j["actual"] = r.actual;
        j["provenance"] = to_string(r.provenance);
        j["status"] = r.status == CheckStatus::Fail ? "fail" : to_string(r.status);
        checks.push_back(j);
    }
    const auto s = summarize(results);
    json out = json::object();
    out["checks"] = checks;
    out["passed"] = s.passed;
    out["failed"] = s.failed;
    out["informational"] = s.conflicts;
    return out;
}

WallScan scan_walls(std::int64_t degree) {
    WallScan scan;
    scan.degree = degree;
    bool found = false;
    for (const auto& entry : builtin_catalog()) {
        if (entry.degree != degree) continue;
        if (!found) scan.cmax = entry.cmax;
        found = true;
        for (const auto& v : entry.variants) {
            const auto lc = lct_report(v.payload, entry.cmax);
            const auto& verdict = lc.verdict;
            if (verdict.binding && verdict.binding_zero && *verdict.binding_zero < entry.cmax) {
                const auto& c = lc.constraints[*verdict.binding];
                scan.walls.push_back({entry.id, v.name, *verdict.binding_zero, c.name, c.f});
            } else {
                scan.clear.push_back(entry.id + "/" + v.name);
            }
        }
    }
    if (!found) throw Error(ErrorCode::UnknownId, "no catalog entry of degree " + std::to_string(degree));
    return scan;
}

std::string walls_text(const WallScan& scan) {
    std::ostringstream os;
    os << "degree " << scan.degree << ", c in (0, " << scan.cmax.str() << ")\n";
    if (scan.walls.empty()) {
        os << "no wall candidates below " << scan.cmax.str() << "\n";
    } else {
        for (const auto& w : scan.walls)
            os << "wall candidate c = " << w.c.str() << ": " << w.entry << " [" << w.variant << "] " << w.constraint
               << " = " << w.function.str() << "\n";
    }
    for (const auto& c : scan.clear) os << "none below " << scan.cmax.str() << ": " << c << "\n";
    return os.str();
}

json walls_json(const WallScan& scan) {
    json out = json::object();
    out["degree"] = scan.degree;
    out["cmax"] = scan.cmax.str();
    json walls = json::array();
    for (const auto& w : scan.walls) {
        json j = json::object();
        j["entry"] = w.entry;
        j["variant"] = w.variant;
        j["c"] = w.c.str();
        j["constraint"] = w.constraint;
        j["function"] = w.function.str();
        walls.push_back(j);
    }
    out["walls"] = walls;
    out["clear"] = scan.clear;
    return out;
}

}  // namespace kstab
