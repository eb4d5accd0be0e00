#include "fixloc/dataset_io.hpp"

#include "fixloc/error.hpp"

#include <fstream>
#include <sstream>

namespace fixloc {

namespace {

Integer read_integer(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        if (auto v = parse_integer(j.get<std::string>()))
            return *v;
    }
    throw SchemaError(where + ": expected an integer");
}

std::size_t read_size(const Json& doc, const char* key) {
    if (!doc.contains(key))
        throw SchemaError(std::string(key) + ": missing");
    Integer v = read_integer(doc.at(key), key);
    if (v < 0 || v > 1'000'000)
        throw SchemaError(std::string(key) + ": out of range");
    return static_cast<std::size_t>(v);
}

IntVector read_vector(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw SchemaError(where + ": expected an array of integers");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(read_integer(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<IntVector> read_vectors(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw SchemaError(where + ": expected an array of integer arrays");
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(read_vector(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw SchemaError(where + "." + key + ": missing");
    return obj.at(key);
}

std::string read_name(const Json& obj, const std::string& where) {
    const Json& n = member(obj, "name", where);
    if (!n.is_string())
        throw SchemaError(where + ".name: expected a string");
    return n.get<std::string>();
}

MultiIndex parse_multi_index(const std::string& key, const std::string& where) {
    MultiIndex out;
    if (key.empty())
        return out;
    std::stringstream ss(key);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        auto v = parse_integer(piece);
        if (!v || *v < 0 || *v > 1'000'000)
            throw SchemaError(where + ": bad multi-index '" + key + "'");
        out.push_back(static_cast<unsigned>(*v));
    }
    return out;
}

std::string multi_index_key(const MultiIndex& n) {
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(n[i]);
    }
    return s;
}

} // namespace

Json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Json vector_to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(integer_to_json(x));
    return a;
}

Json rational_to_json(const Rational& r) { return Json(to_fraction_string(r)); }

Dataset parse_dataset(const Json& doc) {
    if (!doc.is_object())
        throw SchemaError("document: expected a JSON object");
    const Json& kind = member(doc, "kind", "document");
    if (!kind.is_string())
        throw SchemaError("kind: expected a string");
    std::size_t rank = read_size(doc, "rank");
    std::size_t half_dim = read_size(doc, "half_dim");

    if (kind == "points") {
        const Json& pts = member(doc, "points", "document");
        if (!pts.is_array())
            throw SchemaError("points: expected an array");
        std::vector<FixedPoint> points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::string where = "points[" + std::to_string(i) + "]";
            const Json& p = pts[i];
            if (!p.is_object())
                throw SchemaError(where + ": expected an object");
            points.push_back(FixedPoint{read_name(p, where),
                                        read_vector(member(p, "moment", where), where + ".moment"),
                                        read_vectors(member(p, "weights", where), where + ".weights")});
        }
        return FixedPointSet(rank, half_dim, std::move(points));
    }
    if (kind == "components") {
        const Json& cps = member(doc, "components", "document");
        if (!cps.is_array())
            throw SchemaError("components: expected an array");
        std::vector<Component> comps;
        for (std::size_t i = 0; i < cps.size(); ++i) {
            std::string where = "components[" + std::to_string(i) + "]";
            const Json& c = cps[i];
            if (!c.is_object())
                throw SchemaError(where + ": expected an object");
            Component comp{read_name(c, where),
                           read_vector(member(c, "moment", where), where + ".moment"),
                           read_vectors(member(c, "weights", where), where + ".weights"),
                           {}};
            if (c.contains("char_numbers")) {
                const Json& cn = c.at("char_numbers");
                if (!cn.is_object())
                    throw SchemaError(where + ".char_numbers: expected an object");
                for (const auto& [key, value] : cn.items()) {
                    std::string w = where + ".char_numbers[\"" + key + "\"]";
                    if (!value.is_string())
                        throw SchemaError(w + ": expected a \"p/q\" string");
                    auto r = parse_fraction(value.get<std::string>());
                    if (!r)
                        throw SchemaError(w + ": malformed rational '" + value.get<std::string>() + "'");
                    if (!comp.char_numbers.emplace(parse_multi_index(key, w), *r).second)
                        throw SchemaError(w + ": duplicate multi-index");
                }
            }
            comps.push_back(std::move(comp));
        }
        return ComponentSet(rank, half_dim, std::move(comps));
    }
    throw SchemaError("kind: expected \"points\" or \"components\"");
}

Dataset parse_dataset(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("document: ") + e.what());
    }
    return parse_dataset(doc);
}

Json to_json(const FixedPointSet& fps) {
    Json doc;
    doc["kind"] = "points";
    doc["rank"] = fps.rank();
    doc["half_dim"] = fps.half_dim();
    Json pts = Json::array();
    for (const auto& p : fps.points()) {
        Json jp;
        jp["name"] = p.name;
        jp["moment"] = vector_to_json(p.moment);
        Json ws = Json::array();
        for (const auto& w : p.weights)
            ws.push_back(vector_to_json(w));
        jp["weights"] = std::move(ws);
        pts.push_back(std::move(jp));
    }
    doc["points"] = std::move(pts);
    return doc;
}

Json to_json(const ComponentSet& cs) {
    Json doc;
    doc["kind"] = "components";
    doc["rank"] = cs.rank();
    doc["half_dim"] = cs.half_dim();
    Json comps = Json::array();
    for (const auto& c : cs.components()) {
        Json jc;
        jc["name"] = c.name;
        jc["moment"] = vector_to_json(c.moment);
        Json ws = Json::array();
        for (const auto& w : c.weights)
            ws.push_back(vector_to_json(w));
        jc["weights"] = std::move(ws);
        Json cn = Json::object();
        for (const auto& [n, a] : c.char_numbers)
            cn[multi_index_key(n)] = to_fraction_string(a);
        jc["char_numbers"] = std::move(cn);
        comps.push_back(std::move(jc));
    }
    doc["components"] = std::move(comps);
    return doc;
}

Json to_json(const Dataset& d) {
    return std::visit([](const auto& x) { return to_json(x); }, d);
}

namespace {

bool is_flat(const Json& j) {
    if (j.is_array()) {
        for (const auto& e : j)
            if (e.is_structured())
                return false;
        return true;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            if (v.is_structured())
                return false;
        return true;
    }
    return true;
}

bool is_inline(const Json& j) {
    if (is_flat(j))
        return true;
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (!e.is_array() || !is_flat(e))
            return false;
    return true;
}

void write_inline(const Json& j, std::string& out) {
    if (j.is_array()) {
        out += '[';
        bool first = true;
        for (const auto& e : j) {
            if (!first)
                out += ", ";
            first = false;
            write_inline(e, out);
        }
        out += ']';
    } else if (j.is_object()) {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first)
                out += ", ";
            first = false;
            out += Json(k).dump() + ": ";
            write_inline(v, out);
        }
        out += '}';
    } else {
        out += j.dump();
    }
}

void write_pretty(const Json& j, int indent, int depth, std::string& out) {
    if (is_inline(j) || j.empty()) {
        write_inline(j, out);
        return;
    }
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(indent * depth), ' ');
    const bool object = j.is_object();
    out += object ? "{\n" : "[\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
        out += pad;
        if (object)
            out += Json(k).dump() + ": ";
        write_pretty(v, indent, depth + 1, out);
        if (++i < j.size())
            out += ',';
        out += '\n';
    }
    out += close + (object ? "}" : "]");
}

} // namespace

std::string pretty_json(const Json& j, int indent) {
    std::string out;
    write_pretty(j, indent, 0, out);
    return out;
}

std::string serialize(const Dataset& d, int indent) {
    return indent < 0 ? to_json(d).dump() : pretty_json(to_json(d), indent);
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    return parse_dataset(std::string_view(text));
}

} // namespace fixloc
