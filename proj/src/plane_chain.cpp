#include "kstab/plane_chain.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <set>

namespace kstab {

namespace {

[[noreturn]] void malformed(const BlowupChain& chain, const std::string& what) {
    throw Error(ErrorCode::MalformedChain, (chain.name.empty() ? std::string("chain") : chain.name) + ": " + what);
}

AffineRational weighted_order(const std::vector<BoundaryComponent>& components,
                              const std::map<std::string, Rational>& ords) {
    AffineRational sum;
    for (const auto& comp : components) {
        auto it = ords.find(comp.name);
        if (it != ords.end()) sum += comp.coefficient * it->second;
    }
    return sum;
}

}  // namespace

void validate_chain(const BlowupChain& chain) {
    std::set<std::string> names;
    for (const auto& comp : chain.components) {
        if (comp.name.empty()) malformed(chain, "boundary component without a name");
        if (!names.insert(comp.name).second) malformed(chain, "duplicate component \"" + comp.name + "\"");
    }
    auto check_ords = [&](const std::map<std::string, Rational>& ords, const std::string& where) {
        for (const auto& [name, ord] : ords) {
            if (!names.count(name)) malformed(chain, where + " refers to unknown component \"" + name + "\"");
            if (ord.sign() < 0) malformed(chain, where + " has negative order along \"" + name + "\"");
        }
    };
    if (chain.vertex) {
        if (chain.vertex->n < 2) malformed(chain, "vertex order n must be at least 2");
        check_ords(chain.vertex->ords, "vertex");
    }
    for (const auto& curve : chain.resolution) {
        if (curve.base.sign() <= 0) malformed(chain, "resolution curve \"" + curve.name + "\" needs a positive base log discrepancy");
        check_ords(curve.ords, "resolution curve \"" + curve.name + "\"");
    }
    for (std::size_t k = 0; k < chain.centers.size(); ++k) {
        const auto& center = chain.centers[k];
        const auto where = "center " + std::to_string(k + 1);
        if (center.id != static_cast<int>(k + 1))
            malformed(chain, where + " has id " + std::to_string(center.id) + "; ids must be 1, 2, ... in order");
        if (center.on_exceptionals.size() > 2)
            malformed(chain, where + " lies on more than two exceptional curves");
        std::set<int> seen;
        for (int j : center.on_exceptionals) {
            if (j < 1 || j >= center.id) malformed(chain, where + " refers to exceptional " + std::to_string(j) + ", which is not earlier");
            if (!seen.insert(j).second) malformed(chain, where + " lists exceptional " + std::to_string(j) + " twice");
        }
        for (const auto& [name, mult] : center.mults) {
            if (!names.count(name)) malformed(chain, where + " refers to unknown component \"" + name + "\"");
            if (mult < 0) malformed(chain, where + " has negative multiplicity for \"" + name + "\"");
        }
    }
}

std::vector<NamedDiscrepancy> chain_discrepancies(const BlowupChain& chain) {
    validate_chain(chain);
    std::vector<NamedDiscrepancy> out;
    if (chain.vertex)
        out.push_back({"V", AffineRational(Rational(2, chain.vertex->n)) - weighted_order(chain.components, chain.vertex->ords)});
    for (const auto& curve : chain.resolution)
        out.push_back({curve.name, AffineRational(curve.base) - weighted_order(chain.components, curve.ords)});

    const std::size_t offset = out.size();
    for (const auto& center : chain.centers) {
        AffineRational a(2);
        for (const auto& comp : chain.components) {
            auto it = center.mults.find(comp.name);
            if (it != center.mults.end()) a -= comp.coefficient * Rational(it->second);
        }
        for (int j : center.on_exceptionals) a -= AffineRational(1) - out[offset + static_cast<std::size_t>(j - 1)].value;
        out.push_back({center.label(), a});
    }
    return out;
}

LcReport lc_verdict(const std::vector<NamedDiscrepancy>& discrepancies,
                    const std::vector<BoundaryComponent>& components, const Rational& cmax) {
    LcReport report;
    report.cmax = cmax;
    for (const auto& d : discrepancies) report.constraints.push_back({"A(" + d.exceptional + ")", d.value});
    report.discrepancy_count = report.constraints.size();
    for (const auto& comp : components) {
        report.constraints.push_back({"1-coeff(" + comp.name + ")", AffineRational(1) - comp.coefficient});
        report.constraints.push_back({"coeff(" + comp.name + ")", comp.coefficient});
    }
    report.verdict = evaluate_constraints(report.constraints, cmax);
    return report;
}

LcReport lc_verdict(const BlowupChain& chain, const Rational& cmax) {
    return lc_verdict(chain_discrepancies(chain), chain.components, cmax);
}

std::string to_string(GitClass g) {
    switch (g) {
        case GitClass::Stable: return "stable";
        case GitClass::StrictlySemistable: return "strictly-semistable";
        case GitClass::Unstable: return "unstable";
    }
    return "unknown";
}

GitClass quartic_git_class(const std::vector<std::string>& tags) {
    bool semistable_only = false;
    bool unstable = false;
    for (const auto& tag : tags) {
        if (tag == "A1" || tag == "A2") continue;
        if (tag == "tacnode" || tag == "double-conic")
            semistable_only = true;
        else if (tag == "worse")
            unstable = true;
        else
            throw Error(ErrorCode::UnknownTag, "unknown quartic singularity tag \"" + tag + "\"");
    }
    if (unstable) return GitClass::Unstable;
    return semistable_only ? GitClass::StrictlySemistable : GitClass::Stable;
}

bool octic_semistable(const std::vector<std::int64_t>& multiplicities) {
    std::int64_t total = 0;
    for (auto m : multiplicities) {
        if (m < 1) throw Error(ErrorCode::InvalidMultiplicities, "root multiplicities must be positive");
        total += m;
    }
    if (total != 8)
        throw Error(ErrorCode::InvalidMultiplicities, "octic root multiplicities sum to " + std::to_string(total) + ", not 8");
    return *std::max_element(multiplicities.begin(), multiplicities.end()) <= 4;
}

}  // namespace kstab
