#include "kstab/cli.hpp"

#include "kstab/catalog.hpp"
#include "kstab/error.hpp"
#include "kstab/model_io.hpp"
#include "kstab/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>

namespace kstab {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct ResolvedModel {
    std::string name;
    std::string variant;
    Payload payload;
    std::optional<Rational> cmax;
    std::optional<std::int64_t> r;
    std::optional<bool> ksemistable_at_zero;
};

std::optional<fs::path> catalog_dir() {
    const char* dir = std::getenv("KSTAB_CATALOG_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return fs::path(dir);
}

ResolvedModel from_file(const ModelFile& file, const std::string& variant) {
    if (!variant.empty() && variant != file.variant)
        throw Error(ErrorCode::UnknownId, "model file " + file.name + " holds variant \"" + file.variant +
                                              "\", not \"" + variant + "\"");
    ResolvedModel m{file.name, file.variant, file.payload, file.cmax, file.r, file.ksemistable_at_zero};
    if (!m.cmax && m.r) m.cmax = Rational(1, *m.r);
    return m;
}

// A path to a model file, then <KSTAB_CATALOG_DIR>/<id>.json, then the
// built-in catalog.
ResolvedModel resolve_model(const std::string& spec, const std::string& variant) {
    std::error_code ec;
    if (fs::is_regular_file(spec, ec)) return from_file(load_model_file(spec), variant);
    if (auto dir = catalog_dir()) {
        const auto path = *dir / (spec + ".json");
        if (fs::is_regular_file(path, ec)) return from_file(load_model_file(path), variant);
    }
    if (spec.ends_with(".json")) throw Error(ErrorCode::ParseError, spec + ": cannot open file");
    const auto& entry = get(spec);
    const auto& v = entry.variant(variant);
    return {entry.id, v.name, v.payload, entry.cmax, entry.r, entry.ksemistable_at_zero};
}

Rational parse_cmax(const std::string& text) {
    const auto c = Rational::parse(text);
    if (c.sign() <= 0) throw Error(ErrorCode::OutOfRange, "--cmax must be positive, got " + text);
    return c;
}

Rational effective_cmax(const ResolvedModel& m, const std::string& override_text) {
    if (!override_text.empty()) return parse_cmax(override_text);
    if (m.cmax) return *m.cmax;
    throw Error(ErrorCode::OutOfRange, "model " + m.name + " records no cmax or r; pass --cmax p/q");
}

std::string model_label(const ResolvedModel& m) {
    return m.variant.empty() ? m.name : m.name + " [" + m.variant + "]";
}

json header(const std::string& command, const ResolvedModel* m = nullptr) {
    json j = json::object();
    j["schema"] = kSchemaTag;
    j["command"] = command;
    if (m != nullptr) {
        j["model"] = m->name;
        j["variant"] = m->variant;
        j["kind"] = payload_kind(m->payload);
    }
    return j;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string region_str(const std::optional<OpenInterval>& region) { return region ? region->str() : "empty"; }

// ------------------------------------------------------------------ state

struct Options {
    std::string format = "text";
    std::string model;
    std::string variant;
    std::string cmax;
    std::string id;
    std::string cls;
    std::string sextics;
    std::string quartic;
    std::string octic;
    std::int64_t n = 0;
    std::int64_t degree = 0;
    std::int64_t r = 0;
    bool all = false;
    bool do_export = false;
    bool quartic_given = false;
};

class Command {
public:
    Command(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    bool json_output() const { return o_.format == "json"; }

    void emit(const json& j) { out_ << j.dump(2) << "\n"; }

    int list() {
        if (json_output()) {
            json j = header("list");
            json entries = json::array();
            for (const auto& e : builtin_catalog()) {
                json variants = json::array();
                for (const auto& v : e.variants) variants.push_back(v.name);
                entries.push_back(json{{"id", e.id},
                                       {"title", e.title},
                                       {"degree", e.degree},
                                       {"cmax", e.cmax.str()},
                                       {"variants", variants}});
            }
            j["entries"] = entries;
            j["external"] = external_models();
            emit(j);
            return kExitOk;
        }
        for (const auto& e : builtin_catalog()) {
            std::string variants;
            for (const auto& v : e.variants) variants += (variants.empty() ? "" : ", ") + v.name;
            out_ << pad(e.id, 20) << pad("d=" + std::to_string(e.degree), 5) << pad("cmax=" + e.cmax.str(), 11)
                 << e.title << "  {" << variants << "}\n";
        }
        for (const auto& name : external_models()) out_ << pad(name, 20) << "(external model file)\n";
        return kExitOk;
    }

    int show(const std::string& id) {
        const auto& e = get(id);
        if (o_.do_export) {
            out_ << export_model(e, e.variant(o_.variant));
            return kExitOk;
        }
        if (json_output()) {
            json j = header("show");
            j["id"] = e.id;
            j["title"] = e.title;
            j["degree"] = e.degree;
            j["r"] = e.r;
            j["cmax"] = e.cmax.str();
            j["ksemistable_at_zero"] = e.ksemistable_at_zero;
            json lines = json::array();
            for (const auto& lm : e.line_multiplicities)
                lines.push_back(json{{"multiplicity", lm.multiplicity}, {"count", lm.count}});
            j["line_multiplicities"] = lines;
            j["notes"] = e.notes;
            json expectations = json::array();
            auto add = [&](const std::string& variant, const Expectation& ex) {
                expectations.push_back(json{{"variant", variant},
                                            {"quantity", ex.quantity},
                                            {"expected", ex.expected},
                                            {"provenance", to_string(ex.provenance)}});
            };
            for (const auto& ex : e.expectations) add("", ex);
            json variants = json::array();
            for (const auto& v : e.variants) {
                variants.push_back(json{{"name", v.name}, {"label", v.label}, {"kind", payload_kind(v.payload)}});
                for (const auto& ex : v.expectations) add(v.name, ex);
            }
            j["variants"] = variants;
            j["expectations"] = expectations;
            emit(j);
            return kExitOk;
        }
        out_ << e.id << ": " << e.title << "\n";
        out_ << "degree " << e.degree << ", r = " << e.r << ", c in (0, " << e.cmax.str() << ")";
        out_ << (e.ksemistable_at_zero ? ", K-semistable at c = 0\n" : "\n");
        if (!e.line_multiplicities.empty()) {
            out_ << "line multiplicities:";
            for (const auto& lm : e.line_multiplicities) out_ << " " << lm.count << "x" << lm.multiplicity;
            out_ << "\n";
        }
        for (const auto& note : e.notes) out_ << "note: " << note << "\n";
        for (const auto& ex : e.expectations)
            out_ << "  " << pad(ex.quantity, 24) << pad(ex.expected, 24) << to_string(ex.provenance) << "\n";
        for (const auto& v : e.variants) {
            out_ << "variant " << v.name << " (" << payload_kind(v.payload) << "): " << v.label << "\n";
            for (const auto& ex : v.expectations)
                out_ << "  " << pad(ex.quantity, 24) << pad(ex.expected, 24) << to_string(ex.provenance) << "\n";
        }
        return kExitOk;
    }

    int lines() {
        if (o_.n < 1 || o_.n > 8) throw Error(ErrorCode::OutOfRange, "--n must be between 1 and 8");
        const auto n = static_cast<std::size_t>(o_.n);
        const auto ls = enumerate_lines(n);
        const auto roots = enumerate_roots(n);
        if (json_output()) {
            json j = header("lines");
            j["n"] = o_.n;
            j["count"] = ls.size();
            j["root_count"] = roots.size();
            json arr = json::array();
            for (const auto& l : ls) arr.push_back(l.str());
            j["lines"] = arr;
            emit(j);
            return kExitOk;
        }
        out_ << "n = " << n << ": " << ls.size() << " lines, " << roots.size() << " roots\n";
        for (const auto& l : ls) out_ << "  " << l.str() << "\n";
        return kExitOk;
    }

    const ContractionModel& need_contraction(const ResolvedModel& m, const std::string& command) {
        const auto* c = std::get_if<ContractionModel>(&m.payload);
        if (c == nullptr)
            throw Error(ErrorCode::UnknownId, command + " needs a contraction model; " + model_label(m) + " is a " +
                                                  std::string(payload_kind(m.payload)));
        return *c;
    }

    int orbits() {
        const auto m = resolve_model(o_.model, o_.variant);
        const auto& cm = need_contraction(m, "orbits");
        const auto type = validate(cm);
        const auto orbits = line_orbits(cm);
        const auto ordered = orbits_by_representative(orbits);
        std::int64_t total = 0;
        for (const auto& o : orbits) total += o.multiplicity;
        if (json_output()) {
            json j = header("orbits", &m);
            j["type"] = type;
            j["line_total"] = total;
            j["multiset"] = orbit_multiset_str(orbits);
            json roots = json::array();
            for (std::size_t i = 0; i < cm.roots.size(); ++i)
                roots.push_back(json{{"name", cm.root_name(i)}, {"class", cm.roots[i].str()}});
            j["roots"] = roots;
            json arr = json::array();
            for (const auto* o : ordered) {
                json pb = json::array();
                for (const auto& a : o->pullback_coeffs) pb.push_back(a.str());
                arr.push_back(json{{"representative", o->representative.str()},
                                   {"multiplicity", o->multiplicity},
                                   {"pullback", pb}});
            }
            j["orbits"] = arr;
            emit(j);
            return kExitOk;
        }
        out_ << "model: " << model_label(m) << "\n";
        out_ << "type: " << type << "\n";
        out_ << "roots:";
        for (std::size_t i = 0; i < cm.roots.size(); ++i) out_ << " " << cm.root_name(i) << "=" << cm.roots[i].str();
        out_ << "\n";
        out_ << "lines: " << total << " in " << orbits.size() << " orbits " << orbit_multiset_str(orbits) << "\n";
        out_ << "  " << pad("mult", 6) << pad("representative", 28) << "pull-back coefficients\n";
        for (const auto* o : ordered)
            out_ << "  " << pad(std::to_string(o->multiplicity), 6) << pad(o->representative.str(), 28)
                 << tuple_str(o->pullback_coeffs) << "\n";
        return kExitOk;
    }

    int pullback() {
        const auto m = resolve_model(o_.model, o_.variant);
        const auto& cm = need_contraction(m, "pullback");
        const auto cls = parse_class(o_.cls);
        if (cls.rank() != cm.lattice.n())
            throw Error(ErrorCode::DimensionMismatch, "--class has " + std::to_string(cls.rank()) +
                                                          " E-coefficients, the model has n = " +
                                                          std::to_string(cm.lattice.n()));
        bool proper = true;
        for (const auto& r : cm.roots)
            if (pairing(cls, r) < 0) proper = false;
        const auto a = proper ? mumford_pullback(cm, cls) : root_projection(cm, cls);
        std::string expr = cls.str();
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j].is_zero()) continue;
            const auto mag = abs(a[j]);
            expr += (a[j].sign() > 0 ? " + " : " - ") + (mag == Rational(1) ? "" : mag.str() + " ") + cm.root_name(j);
        }
        if (json_output()) {
            json j = header("pullback", &m);
            j["class"] = cls.str();
            j["proper_transform"] = proper;
            json coeffs = json::array();
            for (std::size_t i = 0; i < a.size(); ++i) coeffs.push_back(json{{"root", cm.root_name(i)}, {"coefficient", a[i].str()}});
            j["coefficients"] = coeffs;
            j["pullback"] = expr;
            emit(j);
            return kExitOk;
        }
        out_ << "model: " << model_label(m) << "\n";
        out_ << "class: " << cls.str() << (proper ? " (pairs non-negatively with every root)\n" : " (projection; not a proper transform)\n");
        out_ << "coefficients: " << tuple_str(a) << "\n";
        out_ << "pull-back: " << expr << "\n";
        return kExitOk;
    }

    int lct() {
        const auto m = resolve_model(o_.model, o_.variant);
        const auto cmax = effective_cmax(m, o_.cmax);
        const auto lc = lct_report(m.payload, cmax);
        const auto& v = lc.verdict;
        std::optional<Rational> threshold;
        if (v.binding_zero && *v.binding_zero < cmax) threshold = v.binding_zero;
        if (json_output()) {
            json j = header("lct", &m);
            j["cmax"] = cmax.str();
            json cs = json::array();
            for (const auto& c : lc.constraints) {
                const auto region = nonnegativity_region(c.f, cmax);
                cs.push_back(json{{"name", c.name}, {"function", c.f.str()}, {"region", region ? json(region->str()) : json(nullptr)}});
            }
            j["constraints"] = cs;
            j["region"] = v.region ? json(v.region->str()) : json(nullptr);
            j["everywhere"] = v.everywhere;
            if (v.binding) {
                const auto& b = lc.constraints[*v.binding];
                j["binding"] = json{{"name", b.name}, {"function", b.f.str()}, {"zero", v.binding_zero->str()}};
            } else {
                j["binding"] = nullptr;
            }
            j["threshold"] = threshold ? json(threshold->str()) : json(nullptr);
            emit(j);
            return v.everywhere ? kExitOk : kExitNegative;
        }
        out_ << "model: " << model_label(m) << ", c in (0, " << cmax.str() << ")\n";
        std::size_t width = 12;
        for (const auto& c : lc.constraints) width = std::max(width, c.name.size() + 2);
        for (const auto& c : lc.constraints) {
            // Coefficient lower bounds are noise unless they fail.
            const auto region = nonnegativity_region(c.f, cmax);
            const bool whole = region && region->lo.is_zero() && region->hi == cmax;
            if (c.name.starts_with("coeff(") && whole) continue;
            out_ << "  " << pad(c.name, width) << pad(c.f.str(), 16) << (whole ? "ok" : ">= 0 on " + region_str(region))
                 << "\n";
        }
        if (v.everywhere)
            out_ << "lc on all of (0, " << cmax.str() << ")\n";
        else
            out_ << "lc only on " << region_str(v.region) << "\n";
        if (v.binding) {
            const auto& b = lc.constraints[*v.binding];
            out_ << "binding: " << b.name << " = " << b.f.str() << ", zero at " << v.binding_zero->str() << "\n";
        } else {
            out_ << "binding: none\n";
        }
        out_ << "threshold: " << (threshold ? threshold->str() : "none below " + cmax.str()) << "\n";
        return v.everywhere ? kExitOk : kExitNegative;
    }

    int beta() {
        auto m = resolve_model(o_.model, o_.variant);
        if (!o_.sextics.empty()) {
            if (m.name != "dp1-P129")
                throw Error(ErrorCode::UnknownId, "--sextics applies to dp1-P129 only");
            std::vector<std::int64_t> n;
            std::stringstream ss(o_.sextics);
            std::string part;
            while (std::getline(ss, part, ',')) {
                try {
                    std::size_t used = 0;
                    n.push_back(std::stoll(part, &used));
                    if (used != part.size()) throw std::invalid_argument(part);
                } catch (const std::logic_error&) {
                    throw Error(ErrorCode::ParseError, "--sextics expects four integers n0,n1,n2,n3, got \"" + o_.sextics + "\"");
                }
            }
            if (n.size() != 4) throw Error(ErrorCode::ParseError, "--sextics expects four integers n0,n1,n2,n3");
            m.payload = p129_pair(n[0], n[1], n[2], n[3]);
            std::get<WpsPair>(m.payload).name = m.name;
            m.variant = "sextics " + o_.sextics;
        }
        const auto* pair = std::get_if<WpsPair>(&m.payload);
        if (pair == nullptr)
            throw Error(ErrorCode::UnknownId, "beta needs a wps model; " + model_label(m) + " is a " +
                                                  std::string(payload_kind(m.payload)));
        const auto cmax = effective_cmax(m, o_.cmax);
        const auto report = wps_beta_report(*pair, cmax);
        const int code = report.verdict == BetaVerdict::PolystableCandidate ? kExitOk : kExitNegative;
        if (json_output()) {
            json j = header("beta", &m);
            j["plane"] = pair->plane.str();
            j["cmax"] = cmax.str();
            j["log_degree"] = report.log_degree.str();
            json rows = json::array();
            for (const auto& row : report.rows) {
                rows.push_back(json{{"divisor", row.divisor.name},
                                    {"horizontal", row.divisor.horizontal},
                                    {"A", row.A.str()},
                                    {"S", row.S.str()},
                                    {"beta", row.beta.str()},
                                    {"sign", to_string(row.sign)},
                                    {"positive_region", row.positive_region ? json(row.positive_region->str()) : json(nullptr)}});
            }
            j["rows"] = rows;
            j["verdict"] = to_string(report.verdict);
            j["scope"] = "supplied divisors only";
            emit(j);
            return code;
        }
        out_ << "model: " << model_label(m) << " on " << pair->plane.str() << ", c in (0, " << cmax.str() << ")\n";
        out_ << "L = " << report.log_degree.str() << "\n";
        out_ << "  " << pad("divisor", 10) << pad("A", 14) << pad("S", 16) << pad("beta", 16) << "sign\n";
        for (const auto& row : report.rows)
            out_ << "  " << pad(row.divisor.name + (row.divisor.horizontal ? "*" : ""), 10) << pad(row.A.str(), 14)
                 << pad(row.S.str(), 16) << pad(row.beta.str(), 16) << to_string(row.sign) << "\n";
        out_ << "verdict: " << to_string(report.verdict) << " (supplied divisors only; * = horizontal)\n";
        return code;
    }

    int walls() {
        const auto scan = scan_walls(o_.degree);
        if (json_output()) {
            json j = header("walls");
            j.update(walls_json(scan));
            emit(j);
        } else {
            out_ << walls_text(scan);
        }
        return kExitOk;
    }

    int verify() {
        std::vector<CheckResult> results;
        if (!o_.id.empty()) {
            results = verify_entry(get(o_.id));
        } else {
            for (const auto& e : builtin_catalog()) {
                auto part = verify_entry(e);
                results.insert(results.end(), part.begin(), part.end());
            }
        }
        const auto s = summarize(results);
        if (json_output()) {
            json j = header("verify");
            j.update(verify_json(results));
            emit(j);
        } else {
            out_ << verify_text(results);
        }
        return s.failed == 0 ? kExitOk : kExitNegative;
    }

    int interpolate() {
        const auto m = resolve_model(o_.model, o_.variant);
        if (o_.r < 1) throw Error(ErrorCode::OutOfRange, "--r must be a positive integer");
        if (m.r && *m.r != o_.r)
            throw Error(ErrorCode::OutOfRange, "--r " + std::to_string(o_.r) + " does not match the model's r = " +
                                                   std::to_string(*m.r));
        const Rational cmax(1, o_.r);
        const auto lc = lct_report(m.payload, cmax);
        const bool kss = m.ksemistable_at_zero.value_or(false);
        const bool lc_ok = lc.verdict.everywhere;
        const bool ok = lc_ok && kss;
        std::string conclusion;
        if (ok)
            conclusion = "K-semistable for every c in (0, " + cmax.str() + "), conditional on the interpolation theorem";
        else if (!lc_ok)
            conclusion = "no conclusion: the pair is lc only on " + region_str(lc.verdict.region);
        else
            conclusion = "no conclusion: K-semistability of the surface at c = 0 is not asserted";
        if (json_output()) {
            json j = header("interpolate", &m);
            j["r"] = o_.r;
            j["interval"] = OpenInterval{0, cmax}.str();
            j["lc_region"] = lc.verdict.region ? json(lc.verdict.region->str()) : json(nullptr);
            j["lc_everywhere"] = lc_ok;
            j["ksemistable_at_zero"] = kss;
            j["conclusion"] = conclusion;
            j["conditional"] = ok;
            emit(j);
        } else {
            out_ << "model: " << model_label(m) << ", D ~ -" << o_.r << "K\n";
            out_ << "lc on (0, " << cmax.str() << "): " << (lc_ok ? "yes" : "no, only on " + region_str(lc.verdict.region)) << "\n";
            out_ << "K-semistable at c = 0: " << (kss ? "yes (catalog metadata)" : "not asserted") << "\n";
            out_ << conclusion << "\n";
        }
        return ok ? kExitOk : kExitNegative;
    }

    int git() {
        const bool octic = !o_.octic.empty();
        if (octic == o_.quartic_given) throw Error(ErrorCode::UnknownTag, "pass exactly one of --quartic or --octic");
        std::string verdict;
        bool negative = false;
        json j = header("git");
        if (octic) {
            std::vector<std::int64_t> mults;
            std::stringstream ss(o_.octic);
            std::string part;
            while (std::getline(ss, part, ',')) {
                try {
                    mults.push_back(std::stoll(part));
                } catch (const std::logic_error&) {
                    throw Error(ErrorCode::ParseError, "--octic expects comma-separated integers, got \"" + o_.octic + "\"");
                }
            }
            const bool ss_ok = octic_semistable(mults);
            verdict = ss_ok ? "semistable" : "unstable";
            negative = !ss_ok;
            j["curve"] = "binary octic";
            j["input"] = mults;
        } else {
            std::vector<std::string> tags;
            std::stringstream ss(o_.quartic);
            std::string part;
            while (std::getline(ss, part, ','))
                if (!part.empty()) tags.push_back(part);
            const auto g = quartic_git_class(tags);
            verdict = to_string(g);
            negative = g == GitClass::Unstable;
            j["curve"] = "plane quartic";
            j["input"] = tags;
        }
        if (json_output()) {
            j["verdict"] = verdict;
            emit(j);
        } else {
            out_ << verdict << "\n";
        }
        return negative ? kExitNegative : kExitOk;
    }

private:
    std::vector<std::string> external_models() const {
        std::vector<std::string> names;
        auto dir = catalog_dir();
        std::error_code ec;
        if (!dir || !fs::is_directory(*dir, ec)) return names;
        for (const auto& entry : fs::directory_iterator(*dir, ec))
            if (entry.is_regular_file() && entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
        std::sort(names.begin(), names.end());
        return names;
    }

    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact K-stability computations for del Pezzo pairs with line boundaries", "kstab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* list = app.add_subcommand("list", "List catalog entries");

    auto* show = app.add_subcommand("show", "Show a catalog entry and its expectations");
    std::string show_id;
    show->add_option("id", show_id, "Catalog id")->required();
    show->add_option("--variant", o.variant, "Variant to export");
    show->add_flag("--export", o.do_export, "Print the variant as a model file");

    auto* lines = app.add_subcommand("lines", "Enumerate the lines of the blow-up of P^2 at n points");
    lines->add_option("--n", o.n, "Number of points (1..8)")->required();

    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", o.model, "Catalog id or model file")->required();
        sub->add_option("--variant", o.variant, "Catalog variant");
    };
    auto* orbits = app.add_subcommand("orbits", "Line orbits and multiplicities of a contraction");
    add_model(orbits);
    auto* pullback = app.add_subcommand("pullback", "Mumford pull-back of a class");
    add_model(pullback);
    pullback->add_option("--class", o.cls, "Class as JSON, e.g. {\"H\":1,\"E\":[1,1,0,0,0,0]}")->required();
    auto* lct = app.add_subcommand("lct", "Log discrepancies and the lc interval");
    add_model(lct);
    lct->add_option("--cmax", o.cmax, "Right end of the c-interval (p/q)");
    auto* beta = app.add_subcommand("beta", "A, S and beta for invariant divisors on a weighted plane");
    add_model(beta);
    beta->add_option("--cmax", o.cmax, "Right end of the c-interval (p/q)");
    beta->add_option("--sextics", o.sextics, "n0,n1,n2,n3 for dp1-P129");
    auto* walls = app.add_subcommand("walls", "Candidate walls among catalog entries of one degree");
    walls->add_option("--degree", o.degree, "Degree")->required();
    auto* verify = app.add_subcommand("verify", "Check catalog expectations");
    auto* all_flag = verify->add_flag("--all", o.all, "Every entry (default)");
    verify->add_option("--id", o.id, "One entry")->excludes(all_flag);
    auto* interpolate = app.add_subcommand("interpolate", "K-semistability interval from lc and c = 0 data");
    add_model(interpolate);
    interpolate->add_option("--r", o.r, "D ~ -rK")->required();
    auto* git = app.add_subcommand("git", "GIT class of a plane quartic or binary octic");
    auto* quartic_opt = git->add_option("--quartic", o.quartic, "Comma-separated singularity tags (empty: smooth)");
    git->add_option("--octic", o.octic, "Comma-separated root multiplicities");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "kstab: " << e.what() << "\n";
        return kExitInput;
    }
    o.quartic_given = quartic_opt->count() > 0;

    Command cmd(o, out);
    try {
        if (list->parsed()) return cmd.list();
        if (show->parsed()) return cmd.show(show_id);
        if (lines->parsed()) return cmd.lines();
        if (orbits->parsed()) return cmd.orbits();
        if (pullback->parsed()) return cmd.pullback();
        if (lct->parsed()) return cmd.lct();
        if (beta->parsed()) return cmd.beta();
        if (walls->parsed()) return cmd.walls();
        if (verify->parsed()) return cmd.verify();
        if (interpolate->parsed()) return cmd.interpolate();
        if (git->parsed()) return cmd.git();
    } catch (const std::exception& e) {
        err << "kstab: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace kstab
