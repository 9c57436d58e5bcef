#include "chainmod/json_io.hpp"

#include <fstream>
#include <sstream>

namespace chainmod {

using Json = nlohmann::ordered_json;

namespace {

// Byte offset → 1-based line/column.
std::pair<int, int> locate(const std::string& text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("JSON syntax error: ") + e.what(), line,
                         column);
    }
}

[[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, 0, 0);
}

void check_fields(const Json& obj, const std::string& where,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
    if (!obj.is_object()) fail(where + " must be a JSON object");
    for (const auto& field : required)
        if (!obj.contains(field)) fail(where + " is missing \"" + field + "\"");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const auto& field : required) known |= key == field;
        for (const auto& field : optional) known |= key == field;
        if (!known) fail(where + " has unknown field \"" + key + "\"");
    }
}

void check_version(const Json& obj, const std::string& where) {
    const auto& v = obj.at("version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
        fail(where + " version must be " + std::to_string(kSchemaVersion));
}

Rational coordinate_from_json(const Json& value, const std::string& where) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_float())
        fail(where + ": floating-point coordinates are rejected; use \"p/q\"");
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            fail(where + ": " + e.what());
        }
    }
    fail(where + " must be an integer or a \"p/q\" string");
}

Json coordinate_to_json(const Rational& value) {
    if (denominator(value) == 1) {
        const BigInt& num = numerator(value);
        static const BigInt limit = BigInt(1) << 53;
        if (num > -limit && num < limit) return Json(num.convert_to<long long>());
    }
    return Json(rational_to_string(value));
}

Coeff integer_from_json(const Json& value, const std::string& where) {
    if (!value.is_number_integer()) fail(where + " must be an integer");
    return value.get<Coeff>();
}

int cell_index_from_key(const std::string& key, const std::string& where) {
    if (key.empty()) fail(where + " has an empty cell index");
    for (char c : key)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(where + " has non-numeric cell index \"" + key + "\"");
    try {
        return std::stoi(key);
    } catch (const std::exception&) {
        fail(where + " cell index out of range: \"" + key + "\"");
    }
}

IntegerChain chain_from_json(const Json& obj, const ComplexPtr& complex,
                             const std::string& where) {
    check_fields(obj, where, {"degree", "coeffs"});
    Coeff degree = integer_from_json(obj.at("degree"), where + ".degree");
    if (degree != 0 && degree != 1) fail(where + ".degree must be 0 or 1");
    if (!obj.at("coeffs").is_object()) fail(where + ".coeffs must be an object");
    IntegerChain chain(complex, static_cast<int>(degree));
    for (const auto& [key, value] : obj.at("coeffs").items()) {
        int cell = cell_index_from_key(key, where + ".coeffs");
        Coeff theta = integer_from_json(value, where + ".coeffs[" + key + "]");
        if (theta == 0) fail(where + ".coeffs stores a zero coefficient");
        try {
            chain.set(cell, theta);
        } catch (const ParamOutOfRange& e) {
            fail(where + ".coeffs: " + e.what());
        }
    }
    return chain;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

ChainDocument parse_chain_document(const std::string& text) {
    Json doc = parse_text(text);
    check_fields(doc, "document", {"version", "ambient_dim", "vertices", "edges"},
                 {"chains"});
    check_version(doc, "document");

    Coeff ambient = integer_from_json(doc.at("ambient_dim"), "ambient_dim");
    if (ambient < 1) fail("ambient_dim must be positive");

    if (!doc.at("vertices").is_array()) fail("vertices must be an array");
    std::vector<Point> points;
    for (const auto& entry : doc.at("vertices")) {
        if (!entry.is_array()) fail("each vertex must be a coordinate array");
        Point p;
        for (const auto& coord : entry)
            p.push_back(coordinate_from_json(coord, "vertex coordinate"));
        if (static_cast<Coeff>(p.size()) != ambient)
            fail("vertex arity differs from ambient_dim");
        points.push_back(std::move(p));
    }

    if (!doc.at("edges").is_array()) fail("edges must be an array");
    std::vector<std::pair<int, int>> segments;
    for (const auto& entry : doc.at("edges")) {
        if (!entry.is_array() || entry.size() != 2)
            fail("each edge must be a [tail, head] pair");
        Coeff t = integer_from_json(entry[0], "edge tail");
        Coeff h = integer_from_json(entry[1], "edge head");
        segments.emplace_back(static_cast<int>(t), static_cast<int>(h));
    }

    ChainDocument result;
    try {
        result.complex = std::make_shared<const GeometricComplex>(
            static_cast<int>(ambient), std::move(points), std::move(segments));
    } catch (const Error& e) {
        fail(std::string("invalid complex: ") + e.what());
    }

    if (doc.contains("chains")) {
        if (!doc.at("chains").is_object()) fail("chains must be an object");
        for (const auto& [name, value] : doc.at("chains").items())
            result.chains.emplace(
                name, chain_from_json(value, result.complex, "chains." + name));
    }
    return result;
}

ChainDocument load_chain_document(const std::string& path) {
    return parse_chain_document(read_file(path));
}

nlohmann::ordered_json chain_to_json(const IntegerChain& chain) {
    Json obj;
    obj["degree"] = chain.degree();
    Json coeffs = Json::object();
    for (const auto& [cell, theta] : chain.coeffs())
        coeffs[std::to_string(cell)] = theta;
    obj["coeffs"] = std::move(coeffs);
    return obj;
}

std::string serialize_chain_document(const ChainDocument& doc) {
    Json out;
    out["version"] = kSchemaVersion;
    out["ambient_dim"] = doc.complex->ambient_dim();
    Json vertices = Json::array();
    for (const auto& point : doc.complex->vertices()) {
        Json coords = Json::array();
        for (const auto& c : point) coords.push_back(coordinate_to_json(c));
        vertices.push_back(std::move(coords));
    }
    out["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& [t, h] : doc.complex->edges())
        edges.push_back(Json::array({t, h}));
    out["edges"] = std::move(edges);
    if (!doc.chains.empty()) {
        Json chains = Json::object();
        for (const auto& [name, chain] : doc.chains)
            chains[name] = chain_to_json(chain);
        out["chains"] = std::move(chains);
    }
    return out.dump(2) + "\n";
}

GridChain parse_grid_document(const std::string& text) {
    Json doc = parse_text(text);
    check_fields(doc, "grid document", {"version", "dims", "theta"},
                 {"cell_edge"});
    check_version(doc, "grid document");

    GridChain grid;
    if (!doc.at("dims").is_array()) fail("dims must be an array");
    for (const auto& d : doc.at("dims"))
        grid.dims.push_back(static_cast<int>(integer_from_json(d, "dims entry")));
    if (!doc.at("theta").is_array()) fail("theta must be an array");
    for (const auto& v : doc.at("theta"))
        grid.theta.push_back(integer_from_json(v, "theta entry"));
    if (doc.contains("cell_edge"))
        grid.cell_edge = coordinate_from_json(doc.at("cell_edge"), "cell_edge");
    try {
        grid.validate();
    } catch (const Error& e) {
        fail(std::string("invalid grid: ") + e.what());
    }
    return grid;
}

GridChain load_grid_document(const std::string& path) {
    return parse_grid_document(read_file(path));
}

std::string serialize_grid_document(const GridChain& grid) {
    Json out;
    out["version"] = kSchemaVersion;
    out["dims"] = grid.dims;
    out["theta"] = grid.theta;
    out["cell_edge"] = coordinate_to_json(grid.cell_edge);
    return out.dump(2) + "\n";
}

CertificateDocument parse_certificate_document(const std::string& text,
                                               const ComplexPtr& complex) {
    Json doc = parse_text(text);
    check_fields(doc, "certificate", {"version", "kind", "p", "quotient", "trace"});
    check_version(doc, "certificate");
    if (doc.at("kind") != "repair-certificate")
        fail("certificate kind must be \"repair-certificate\"");

    CertificateDocument cert;
    cert.p = integer_from_json(doc.at("p"), "p");
    if (cert.p < 2) fail("certificate p must be ≥ 2");
    cert.quotient = chain_from_json(doc.at("quotient"), complex, "quotient");

    if (!doc.at("trace").is_array()) fail("trace must be an array");
    for (const auto& entry : doc.at("trace")) {
        check_fields(entry, "trace step",
                     {"vertex", "start", "end", "path", "boundary_mass_before",
                      "boundary_mass_after"});
        TraceStep step;
        step.vertex = static_cast<int>(integer_from_json(entry.at("vertex"), "vertex"));
        step.path.start_vertex =
            static_cast<int>(integer_from_json(entry.at("start"), "start"));
        step.path.end_vertex =
            static_cast<int>(integer_from_json(entry.at("end"), "end"));
        if (!entry.at("path").is_array()) fail("path must be an array");
        for (const auto& pair : entry.at("path")) {
            if (!pair.is_array() || pair.size() != 2)
                fail("path steps must be [edge, dir] pairs");
            PathStep ps;
            ps.edge = static_cast<int>(integer_from_json(pair[0], "path edge"));
            ps.dir = static_cast<int>(integer_from_json(pair[1], "path dir"));
            if (ps.dir != 1 && ps.dir != -1) fail("path dir must be ±1");
            step.path.steps.push_back(ps);
        }
        step.boundary_mass_before =
            integer_from_json(entry.at("boundary_mass_before"), "boundary_mass_before");
        step.boundary_mass_after =
            integer_from_json(entry.at("boundary_mass_after"), "boundary_mass_after");
        cert.trace.push_back(std::move(step));
    }
    return cert;
}

CertificateDocument load_certificate_document(const std::string& path,
                                              const ComplexPtr& complex) {
    return parse_certificate_document(read_file(path), complex);
}

std::string serialize_certificate_document(const RepairCertificate& cert,
                                           Coeff p) {
    Json out;
    out["version"] = kSchemaVersion;
    out["kind"] = "repair-certificate";
    out["p"] = p;
    out["quotient"] = chain_to_json(cert.quotient);
    Json trace = Json::array();
    for (const auto& step : cert.trace) {
        Json entry;
        entry["vertex"] = step.vertex;
        entry["start"] = step.path.start_vertex;
        entry["end"] = step.path.end_vertex;
        Json path = Json::array();
        for (const auto& ps : step.path.steps)
            path.push_back(Json::array({ps.edge, ps.dir}));
        entry["path"] = std::move(path);
        entry["boundary_mass_before"] = step.boundary_mass_before;
        entry["boundary_mass_after"] = step.boundary_mass_after;
        trace.push_back(std::move(entry));
    }
    out["trace"] = std::move(trace);
    return out.dump(2) + "\n";
}

const IntegerChain& select_chain(const ChainDocument& doc,
                                 const std::string& name) {
    if (doc.chains.empty()) throw Error("document contains no chains");
    if (name.empty()) {
        if (doc.chains.size() > 1)
            throw Error("document has several chains; pick one with --chain");
        return doc.chains.begin()->second;
    }
    auto it = doc.chains.find(name);
    if (it == doc.chains.end()) throw Error("no chain named \"" + name + "\"");
    return it->second;
}

} // namespace chainmod
