#include "kstab/model_io.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace kstab {

using json = nlohmann::ordered_json;

namespace {

// Forward iterator over the text that records how far the parser has read, so
// SAX events can be mapped back to a line.
struct CountingIterator {
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    const char* base = nullptr;
    std::size_t* consumed = nullptr;

    reference operator*() const { return *p; }
    CountingIterator& operator++() {
        ++p;
        *consumed = static_cast<std::size_t>(p - base);
        return *this;
    }
    CountingIterator operator++(int) {
        auto old = *this;
        ++*this;
        return old;
    }
    bool operator==(const CountingIterator& o) const { return p == o.p; }
    bool operator!=(const CountingIterator& o) const { return p != o.p; }
};

std::string escape_token(const std::string& key) {
    std::string out;
    for (char ch : key) {
        if (ch == '~')
            out += "~0";
        else if (ch == '/')
            out += "~1";
        else
            out += ch;
    }
    return out;
}

class LocatingSax : public nlohmann::json_sax<json> {
public:
    LocatingSax(std::string_view text, const std::size_t* consumed, std::string source)
        : text_(text), consumed_(consumed), source_(std::move(source)) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] == '\n') newlines_.push_back(i);
    }

    json root;
    std::map<std::string, std::size_t> lines;

    bool null() override { return add(json(nullptr)); }
    bool boolean(bool v) override { return add(json(v)); }
    bool number_integer(number_integer_t v) override { return add(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return add(json(v)); }
    bool number_float(number_float_t v, const string_t&) override { return add(json(v)); }
    bool string(string_t& v) override { return add(json(v)); }
    bool binary(binary_t&) override { return add(json(nullptr)); }

    bool start_object(std::size_t) override { return open(json::object()); }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override { return open(json::array()); }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }
    bool key(string_t& k) override {
        if (stack_.back().node->contains(k))
            throw Error(ErrorCode::SchemaError, source_ + ":" + std::to_string(current_line()) + ": " +
                                                    stack_.back().pointer + ": duplicate key \"" + k + "\"");
        key_ = k;
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        std::string what = ex.what();
        // Drop the library prefix "[json.exception.parse_error.101] ".
        if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
        throw Error(ErrorCode::ParseError, source_ + ":" + std::to_string(current_line()) + ": " + what);
    }

    std::size_t current_line() const {
        // Last non-blank character the lexer has consumed; numbers read one
        // character ahead, which is at worst the following separator.
        std::size_t k = std::min(*consumed_, text_.size());
        while (k > 0 && std::isspace(static_cast<unsigned char>(text_[k - 1]))) --k;
        const std::size_t at = k == 0 ? 0 : k - 1;
        return static_cast<std::size_t>(std::lower_bound(newlines_.begin(), newlines_.end(), at) - newlines_.begin()) + 1;
    }

private:
    struct Frame {
        json* node;
        std::string pointer;
    };

    json* insert(json value, std::string& pointer) {
        if (stack_.empty()) {
            root = std::move(value);
            pointer = "";
            return &root;
        }
        auto& top = stack_.back();
        if (top.node->is_array()) {
            pointer = top.pointer + "/" + std::to_string(top.node->size());
            top.node->push_back(std::move(value));
            return &top.node->back();
        }
        pointer = top.pointer + "/" + escape_token(key_);
        (*top.node)[key_] = std::move(value);
        return &(*top.node)[key_];
    }

    bool add(json value) {
        std::string pointer;
        insert(std::move(value), pointer);
        lines[pointer] = current_line();
        return true;
    }

    bool open(json value) {
        std::string pointer;
        json* node = insert(std::move(value), pointer);
        lines[pointer] = current_line();
        stack_.push_back({node, pointer});
        return true;
    }

    std::string_view text_;
    const std::size_t* consumed_;
    std::string source_;
    std::vector<std::size_t> newlines_;
    std::vector<Frame> stack_;
    std::string key_;
};

struct Document {
    json root;
    std::map<std::string, std::size_t> lines;
    std::string source;
};

Document parse_document(std::string_view text, std::string_view source) {
    std::size_t consumed = 0;
    LocatingSax sax(text, &consumed, std::string(source));
    CountingIterator first{text.data(), text.data(), &consumed};
    CountingIterator last{text.data() + text.size(), text.data(), &consumed};
    json::sax_parse(first, last, &sax);
    return {std::move(sax.root), std::move(sax.lines), std::string(source)};
}

// Typed access to the parsed document with errors located by JSON pointer.
class Reader {
public:
    explicit Reader(const Document& doc) : doc_(doc) {}

    [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
        std::size_t line = 1;
        // Closest recorded ancestor (a missing key is reported at its object).
        std::string p = pointer;
        while (true) {
            auto it = doc_.lines.find(p);
            if (it != doc_.lines.end()) {
                line = it->second;
                break;
            }
            auto slash = p.rfind('/');
            if (slash == std::string::npos) break;
            p = p.substr(0, slash);
        }
        throw Error(ErrorCode::SchemaError,
                    doc_.source + ":" + std::to_string(line) + ": " + (pointer.empty() ? "/" : pointer) + ": " + what);
    }

    const json& object(const json& v, const std::string& ptr, std::initializer_list<std::string_view> allowed) const {
        if (!v.is_object()) fail(ptr, "expected an object");
        for (const auto& [k, _] : v.items()) {
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                fail(ptr + "/" + escape_token(k), "unknown key \"" + k + "\"");
        }
        return v;
    }

    const json& member(const json& obj, const std::string& ptr, const std::string& key) const {
        if (!obj.contains(key)) fail(ptr, "missing key \"" + key + "\"");
        return obj.at(key);
    }

    std::string string(const json& v, const std::string& ptr) const {
        if (!v.is_string()) fail(ptr, "expected a string");
        auto s = v.get<std::string>();
        if (s.empty()) fail(ptr, "expected a non-empty string");
        return s;
    }

    std::int64_t integer(const json& v, const std::string& ptr) const {
        if (!v.is_number_integer()) fail(ptr, "expected an integer");
        return v.get<std::int64_t>();
    }

    bool boolean(const json& v, const std::string& ptr) const {
        if (!v.is_boolean()) fail(ptr, "expected true or false");
        return v.get<bool>();
    }

    Rational rational(const json& v, const std::string& ptr) const {
        if (!v.is_string()) fail(ptr, "expected a rational string such as \"7/8\"");
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const Error& e) {
            fail(ptr, e.what());
        }
    }

    AffineRational affine(const json& v, const std::string& ptr) const {
        object(v, ptr, {"const", "slope"});
        return {rational(member(v, ptr, "const"), ptr + "/const"), rational(member(v, ptr, "slope"), ptr + "/slope")};
    }

    const json& array(const json& v, const std::string& ptr) const {
        if (!v.is_array()) fail(ptr, "expected an array");
        return v;
    }

    DivisorClass divisor_class(const json& v, const std::string& ptr) const {
        object(v, ptr, {"H", "E"});
        DivisorClass c;
        c.d = integer(member(v, ptr, "H"), ptr + "/H");
        const auto& e = array(member(v, ptr, "E"), ptr + "/E");
        for (std::size_t i = 0; i < e.size(); ++i) c.m.push_back(integer(e[i], ptr + "/E/" + std::to_string(i)));
        return c;
    }

private:
    const Document& doc_;
};

ContractionModel read_contraction(const Reader& rd, const json& root, const std::string& name) {
    const auto n = rd.integer(rd.member(root, "", "n"), "/n");
    if (n < 1 || n > 8) rd.fail("/n", "lattice rank must be in [1, 8]");
    ContractionModel m{PicardLattice(static_cast<std::size_t>(n)), {}, {}, name};
    const auto& roots = rd.array(rd.member(root, "", "roots"), "/roots");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto ptr = "/roots/" + std::to_string(i);
        rd.object(roots[i], ptr, {"name", "class"});
        auto cls = rd.divisor_class(rd.member(roots[i], ptr, "class"), ptr + "/class");
        if (cls.rank() != static_cast<std::size_t>(n))
            rd.fail(ptr + "/class/E", "expected " + std::to_string(n) + " coefficients, got " + std::to_string(cls.rank()));
        m.roots.push_back(cls);
        m.root_names.push_back(roots[i].contains("name") ? rd.string(roots[i]["name"], ptr + "/name") : "");
    }
    return m;
}

std::map<std::string, Rational> read_ords(const Reader& rd, const json& v, const std::string& ptr) {
    if (!v.is_object()) rd.fail(ptr, "expected an object mapping names to rationals");
    std::map<std::string, Rational> out;
    for (const auto& [k, x] : v.items()) out[k] = rd.rational(x, ptr + "/" + escape_token(k));
    return out;
}

BlowupChain read_chain(const Reader& rd, const json& root, const std::string& name) {
    BlowupChain ch;
    ch.name = name;
    const auto& comps = rd.array(rd.member(root, "", "components"), "/components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto ptr = "/components/" + std::to_string(i);
        rd.object(comps[i], ptr, {"name", "coefficient"});
        ch.components.push_back({rd.string(rd.member(comps[i], ptr, "name"), ptr + "/name"),
                                 rd.affine(rd.member(comps[i], ptr, "coefficient"), ptr + "/coefficient")});
    }
    if (root.contains("vertex")) {
        const auto& v = rd.object(root["vertex"], "/vertex", {"n", "ords"});
        VertexStart vs;
        vs.n = rd.integer(rd.member(v, "/vertex", "n"), "/vertex/n");
        if (v.contains("ords")) vs.ords = read_ords(rd, v["ords"], "/vertex/ords");
        ch.vertex = vs;
    }
    if (root.contains("resolution")) {
        const auto& res = rd.array(root["resolution"], "/resolution");
        for (std::size_t i = 0; i < res.size(); ++i) {
            const auto ptr = "/resolution/" + std::to_string(i);
            rd.object(res[i], ptr, {"name", "base", "ords"});
            ResolutionCurve c;
            c.name = rd.string(rd.member(res[i], ptr, "name"), ptr + "/name");
            c.base = rd.rational(rd.member(res[i], ptr, "base"), ptr + "/base");
            if (res[i].contains("ords")) c.ords = read_ords(rd, res[i]["ords"], ptr + "/ords");
            ch.resolution.push_back(c);
        }
    }
    if (root.contains("centers")) {
        const auto& cs = rd.array(root["centers"], "/centers");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const auto ptr = "/centers/" + std::to_string(i);
            rd.object(cs[i], ptr, {"id", "name", "on", "mults"});
            ChainCenter c;
            c.id = static_cast<int>(rd.integer(rd.member(cs[i], ptr, "id"), ptr + "/id"));
            if (cs[i].contains("name")) c.name = rd.string(cs[i]["name"], ptr + "/name");
            if (cs[i].contains("on")) {
                const auto& on = rd.array(cs[i]["on"], ptr + "/on");
                for (std::size_t j = 0; j < on.size(); ++j)
                    c.on_exceptionals.push_back(static_cast<int>(rd.integer(on[j], ptr + "/on/" + std::to_string(j))));
            }
            if (cs[i].contains("mults")) {
                const auto& mults = cs[i]["mults"];
                if (!mults.is_object()) rd.fail(ptr + "/mults", "expected an object mapping names to integers");
                for (const auto& [k, x] : mults.items()) c.mults[k] = rd.integer(x, ptr + "/mults/" + escape_token(k));
            }
            ch.centers.push_back(c);
        }
    }
    // Structural problems are reported against the document too.
    try {
        validate_chain(ch);
    } catch (const Error& e) {
        rd.fail("/centers", e.what());
    }
    return ch;
}

WpsPair read_wps(const Reader& rd, const json& root, const std::string& name) {
    WpsPair pair;
    pair.name = name;
    const auto& w = rd.array(rd.member(root, "", "weights"), "/weights");
    if (w.size() != 3) rd.fail("/weights", "expected three weights");
    for (std::size_t i = 0; i < 3; ++i) {
        pair.plane.weights[i] = rd.integer(w[i], "/weights/" + std::to_string(i));
        if (pair.plane.weights[i] < 1) rd.fail("/weights/" + std::to_string(i), "weights must be positive");
    }
    const auto& b = rd.array(rd.member(root, "", "boundary"), "/boundary");
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto ptr = "/boundary/" + std::to_string(i);
        rd.object(b[i], ptr, {"name", "degree", "coefficient", "ords"});
        WpsBoundaryComponent c;
        c.name = rd.string(rd.member(b[i], ptr, "name"), ptr + "/name");
        c.degree = rd.integer(rd.member(b[i], ptr, "degree"), ptr + "/degree");
        if (c.degree < 1) rd.fail(ptr + "/degree", "degree must be positive");
        c.coefficient = rd.affine(rd.member(b[i], ptr, "coefficient"), ptr + "/coefficient");
        c.ords = read_ords(rd, rd.member(b[i], ptr, "ords"), ptr + "/ords");
        pair.boundary.push_back(c);
    }
    const auto& d = rd.array(rd.member(root, "", "divisors"), "/divisors");
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto ptr = "/divisors/" + std::to_string(i);
        rd.object(d[i], ptr, {"name", "degree", "horizontal"});
        InvariantDivisor div;
        div.name = rd.string(rd.member(d[i], ptr, "name"), ptr + "/name");
        div.degree = rd.integer(rd.member(d[i], ptr, "degree"), ptr + "/degree");
        if (div.degree < 1) rd.fail(ptr + "/degree", "degree must be positive");
        if (d[i].contains("horizontal")) div.horizontal = rd.boolean(d[i]["horizontal"], ptr + "/horizontal");
        pair.divisors.push_back(div);
    }
    return pair;
}

}  // namespace

ModelFile parse_model(std::string_view text, std::string_view source) {
    const auto doc = parse_document(text, source);
    Reader rd(doc);
    const auto& root = doc.root;
    if (!root.is_object()) rd.fail("", "expected an object");
    const auto kind = rd.string(rd.member(root, "", "kind"), "/kind");
    static const std::map<std::string, std::vector<std::string_view>> kKindKeys = {
        {"contraction", {"n", "roots"}},
        {"chain", {"components", "vertex", "resolution", "centers"}},
        {"wps", {"weights", "boundary", "divisors"}},
    };
    auto it = kKindKeys.find(kind);
    if (it == kKindKeys.end()) rd.fail("/kind", "unknown kind \"" + kind + "\" (expected contraction, chain or wps)");
    for (const auto& [k, _] : root.items()) {
        static const std::set<std::string_view> kCommon = {"schema", "kind", "name", "variant", "cmax",
                                                           "degree", "r", "ksemistable_at_zero"};
        if (!kCommon.count(k) && std::find(it->second.begin(), it->second.end(), k) == it->second.end())
            rd.fail("/" + escape_token(k), "unknown key \"" + k + "\" for kind " + kind);
    }
    const auto schema = rd.string(rd.member(root, "", "schema"), "/schema");
    if (schema != kSchemaTag) rd.fail("/schema", "unsupported schema \"" + schema + "\" (expected kstab/1)");

    ModelFile out;
    out.name = rd.string(rd.member(root, "", "name"), "/name");
    if (root.contains("variant")) out.variant = rd.string(root["variant"], "/variant");
    if (root.contains("cmax")) {
        out.cmax = rd.rational(root["cmax"], "/cmax");
        if (out.cmax->sign() <= 0) rd.fail("/cmax", "cmax must be positive");
    }
    if (root.contains("degree")) out.degree = rd.integer(root["degree"], "/degree");
    if (root.contains("r")) {
        out.r = rd.integer(root["r"], "/r");
        if (*out.r < 1) rd.fail("/r", "r must be positive");
    }
    if (root.contains("ksemistable_at_zero")) out.ksemistable_at_zero = rd.boolean(root["ksemistable_at_zero"], "/ksemistable_at_zero");

    if (kind == "contraction")
        out.payload = read_contraction(rd, root, out.name);
    else if (kind == "chain")
        out.payload = read_chain(rd, root, out.name);
    else
        out.payload = read_wps(rd, root, out.name);
    return out;
}

ModelFile load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), path.string());
}

json rational_json(const Rational& r) { return r.str(); }

json affine_json(const AffineRational& f) {
    json j = json::object();
    j["const"] = f.constant.str();
    j["slope"] = f.slope.str();
    return j;
}

json class_json(const DivisorClass& c) {
    json j = json::object();
    j["H"] = c.d;
    j["E"] = c.m;
    return j;
}

namespace {

json ords_json(const std::map<std::string, Rational>& ords) {
    json j = json::object();
    for (const auto& [k, v] : ords) j[k] = v.str();
    return j;
}

}  // namespace

json model_json(const ModelFile& model) {
    json j = json::object();
    j["schema"] = kSchemaTag;
    j["kind"] = payload_kind(model.payload);
    j["name"] = model.name;
    if (!model.variant.empty()) j["variant"] = model.variant;
    if (model.degree) j["degree"] = *model.degree;
    if (model.r) j["r"] = *model.r;
    if (model.cmax) j["cmax"] = model.cmax->str();
    if (model.ksemistable_at_zero) j["ksemistable_at_zero"] = *model.ksemistable_at_zero;

    if (const auto* m = std::get_if<ContractionModel>(&model.payload)) {
        j["n"] = m->lattice.n();
        json roots = json::array();
        for (std::size_t i = 0; i < m->roots.size(); ++i) {
            json r = json::object();
            r["name"] = m->root_name(i);
            r["class"] = class_json(m->roots[i]);
            roots.push_back(r);
        }
        j["roots"] = roots;
    } else if (const auto* ch = std::get_if<BlowupChain>(&model.payload)) {
        json comps = json::array();
        for (const auto& c : ch->components) comps.push_back(json{{"name", c.name}, {"coefficient", affine_json(c.coefficient)}});
        j["components"] = comps;
        if (ch->vertex) j["vertex"] = json{{"n", ch->vertex->n}, {"ords", ords_json(ch->vertex->ords)}};
        if (!ch->resolution.empty()) {
            json res = json::array();
            for (const auto& c : ch->resolution)
                res.push_back(json{{"name", c.name}, {"base", c.base.str()}, {"ords", ords_json(c.ords)}});
            j["resolution"] = res;
        }
        json centers = json::array();
        for (const auto& c : ch->centers) {
            json cj = json::object();
            cj["id"] = c.id;
            if (!c.name.empty()) cj["name"] = c.name;
            cj["on"] = c.on_exceptionals;
            json mults = json::object();
            for (const auto& [k, v] : c.mults) mults[k] = v;
            cj["mults"] = mults;
            centers.push_back(cj);
        }
        j["centers"] = centers;
    } else {
        const auto& pair = std::get<WpsPair>(model.payload);
        j["weights"] = pair.plane.weights;
        json boundary = json::array();
        for (const auto& b : pair.boundary)
            boundary.push_back(json{{"name", b.name},
                                    {"degree", b.degree},
                                    {"coefficient", affine_json(b.coefficient)},
                                    {"ords", ords_json(b.ords)}});
        j["boundary"] = boundary;
        json divisors = json::array();
        for (const auto& d : pair.divisors)
            divisors.push_back(json{{"name", d.name}, {"degree", d.degree}, {"horizontal", d.horizontal}});
        j["divisors"] = divisors;
    }
    return j;
}

ModelFile model_from_entry(const CatalogEntry& entry, const Variant& variant) {
    ModelFile m;
    m.name = entry.id;
    m.variant = variant.name;
    m.payload = variant.payload;
    m.cmax = entry.cmax;
    m.degree = entry.degree;
    m.r = entry.r;
    m.ksemistable_at_zero = entry.ksemistable_at_zero;
    return m;
}

std::string export_model(const CatalogEntry& entry, const Variant& variant) {
    return model_json(model_from_entry(entry, variant)).dump(2) + "\n";
}

DivisorClass parse_class(std::string_view text) {
    const auto doc = parse_document(text, "--class");
    Reader rd(doc);
    return rd.divisor_class(doc.root, "");
}

}  // namespace kstab
