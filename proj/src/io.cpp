#include "discseq/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "discseq/error.hpp"

namespace discseq::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    raise(ErrorCode::SchemaError, path + ": " + what);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) known = true;
        if (!known) schema_fail(path + "." + it.key(), "unexpected field");
    }
}

const json& require_field(const json& obj, const std::string& path, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_fail(path + "." + key, "missing field");
    return *it;
}

double require_double(const json& j, const std::string& path) {
    if (!j.is_number()) schema_fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) schema_fail(path, "expected a finite number");
    return v;
}

double require_positive(const json& j, const std::string& path) {
    const double v = require_double(j, path);
    if (!(v > 0.0)) schema_fail(path, "expected a positive number");
    return v;
}

Complex require_pair(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) schema_fail(path, "expected a [re, im] pair");
    return Complex{require_double(j[0], path + "[0]"), require_double(j[1], path + "[1]")};
}

json pair_json(Complex z) { return json::array({z.real(), z.imag()}); }

json domain_json(const Domain& dom) {
    json d = json::object();
    if (dom.is_unit_disc()) {
        d["kind"] = "disc";
        d["dimension"] = 1;
    } else if (dom.is_right_half_plane()) {
        d["kind"] = "halfplane";
        d["dimension"] = 1;
    } else if (const auto* ball = std::get_if<UnitBallTag>(&dom.variant())) {
        d["kind"] = "ball";
        d["dimension"] = ball->dim;
    } else if (const auto* poly = std::get_if<PolydiscTag>(&dom.variant())) {
        d["kind"] = "polydisc";
        d["dimension"] = poly->dim;
    } else {
        const auto& tag = std::get<TransportedTag>(dom.variant());
        d["kind"] = "transported";
        d["dimension"] = 1;
        d["base"] = tag.base == BaseKind::UnitDisc ? "disc" : "halfplane";
        json m = json::object();
        m["a"] = pair_json(tag.map.a);
        m["b"] = pair_json(tag.map.b);
        m["c"] = pair_json(tag.map.c);
        m["d"] = pair_json(tag.map.d);
        d["map"] = m;
    }
    return d;
}

Domain domain_from_json(const json& d) {
    if (!d.is_object()) schema_fail("domain", "expected an object");
    const json& kind_j = require_field(d, "domain", "kind");
    if (!kind_j.is_string()) schema_fail("domain.kind", "expected a string");
    const std::string kind = kind_j.get<std::string>();

    const auto dimension_of = [&](int lo) {
        const json& dim_j = require_field(d, "domain", "dimension");
        if (!dim_j.is_number_integer()) schema_fail("domain.dimension", "expected an integer");
        const std::int64_t n = dim_j.get<std::int64_t>();
        if (n < lo || n > 1000000) schema_fail("domain.dimension", "out of range");
        return static_cast<int>(n);
    };

    if (kind == "disc" || kind == "halfplane") {
        check_fields(d, "domain", {"kind", "dimension"});
        if (dimension_of(1) != 1) schema_fail("domain.dimension", "must be 1 for this kind");
        return kind == "disc" ? Domain::unit_disc() : Domain::right_half_plane();
    }
    if (kind == "ball" || kind == "polydisc") {
        check_fields(d, "domain", {"kind", "dimension"});
        const int n = dimension_of(1);
        return kind == "ball" ? Domain::unit_ball(n) : Domain::polydisc(n);
    }
    if (kind == "transported") {
        check_fields(d, "domain", {"kind", "dimension", "base", "map"});
        if (dimension_of(1) != 1) schema_fail("domain.dimension", "must be 1 for this kind");
        const json& base_j = require_field(d, "domain", "base");
        if (!base_j.is_string()) schema_fail("domain.base", "expected a string");
        const std::string base = base_j.get<std::string>();
        if (base != "disc" && base != "halfplane") schema_fail("domain.base", "unknown base kind");
        const json& m = require_field(d, "domain", "map");
        if (!m.is_object()) schema_fail("domain.map", "expected an object");
        check_fields(m, "domain.map", {"a", "b", "c", "d"});
        const Complex a = require_pair(require_field(m, "domain.map", "a"), "domain.map.a");
        const Complex b = require_pair(require_field(m, "domain.map", "b"), "domain.map.b");
        const Complex c = require_pair(require_field(m, "domain.map", "c"), "domain.map.c");
        const Complex dd = require_pair(require_field(m, "domain.map", "d"), "domain.map.d");
        try {
            return Domain::transported(base == "disc" ? BaseKind::UnitDisc : BaseKind::RightHalfPlane,
                                       MoebiusMap::make(a, b, c, dd));
        } catch (const Error& e) {
            schema_fail("domain.map", e.what());
        }
    }
    schema_fail("domain.kind", "unknown kind '" + kind + "'");
}

// Membership plus pairwise distinctness (the invariants a sequence file must
// encode). The distinctness key normalizes -0 so it matches coordinate ==.
void validate_points(const Domain& dom, const std::vector<Point>& points) {
    std::unordered_set<std::string> seen;
    seen.reserve(points.size() * 2);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!contains(dom, points[i]))
            raise(ErrorCode::PointOutsideDomain, "point index " + std::to_string(i) + " lies outside the domain");
        std::string key;
        for (const Complex& z : points[i].coords) {
            const double re = z.real() == 0.0 ? 0.0 : z.real();
            const double im = z.imag() == 0.0 ? 0.0 : z.imag();
            key += fmt17(re);
            key += ',';
            key += fmt17(im);
            key += ';';
        }
        if (!seen.insert(key).second)
            raise(ErrorCode::SchemaError, "points: point index " + std::to_string(i) + " duplicates an earlier point");
    }
}

} // namespace

const char* tool_version() { return "discseq 0.1.0"; }

std::string encode_sequence(const PointSequence& seq) {
    validate_points(seq.domain, seq.points);
    if (!seq.meta.delta)
        raise(ErrorCode::SchemaError, "meta.delta: required to serialize a sequence");

    json root = json::object();
    root["format"] = "discseq-sequence";
    root["version"] = 1;
    root["domain"] = domain_json(seq.domain);
    json pts = json::array();
    for (const Point& p : seq.points) {
        json coords = json::array();
        for (const Complex& z : p.coords) coords.push_back(pair_json(z));
        pts.push_back(std::move(coords));
    }
    root["points"] = std::move(pts);
    json meta = json::object();
    meta["method"] = method_name(seq.meta.method);
    if (seq.meta.epsilon) meta["epsilon"] = *seq.meta.epsilon;
    meta["delta"] = *seq.meta.delta;
    meta["tool"] = tool_version();
    root["meta"] = std::move(meta);
    return root.dump(2) + "\n";
}

PointSequence decode_sequence(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::exception& e) {
        schema_fail("(document)", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) schema_fail("(document)", "expected a JSON object");
    check_fields(root, "(document)", {"format", "version", "domain", "points", "meta"});

    const json& format = require_field(root, "(document)", "format");
    if (!format.is_string() || format.get<std::string>() != "discseq-sequence")
        schema_fail("format", "expected \"discseq-sequence\"");
    const json& version = require_field(root, "(document)", "version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != 1)
        schema_fail("version", "unsupported version (expected 1)");

    Domain dom = domain_from_json(require_field(root, "(document)", "domain"));
    const int dim = dom.dimension();

    const json& pts = require_field(root, "(document)", "points");
    if (!pts.is_array()) schema_fail("points", "expected an array");
    std::vector<Point> points;
    points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string path = "points[" + std::to_string(i) + "]";
        const json& pj = pts[i];
        if (!pj.is_array() || pj.size() != static_cast<std::size_t>(dim))
            schema_fail(path, "expected " + std::to_string(dim) + " coordinate pair(s)");
        std::vector<Complex> coords(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k)
            coords[static_cast<std::size_t>(k)] =
                require_pair(pj[static_cast<std::size_t>(k)], path + "[" + std::to_string(k) + "]");
        points.emplace_back(std::move(coords));
    }

    const json& meta_j = require_field(root, "(document)", "meta");
    if (!meta_j.is_object()) schema_fail("meta", "expected an object");
    check_fields(meta_j, "meta", {"method", "epsilon", "delta", "tool"});
    const json& method_j = require_field(meta_j, "meta", "method");
    if (!method_j.is_string()) schema_fail("meta.method", "expected a string");
    SequenceMeta meta;
    try {
        meta.method = method_from_name(method_j.get<std::string>());
    } catch (const Error& e) {
        schema_fail("meta.method", e.what());
    }
    if (const auto it = meta_j.find("epsilon"); it != meta_j.end())
        meta.epsilon = require_positive(*it, "meta.epsilon");
    meta.delta = require_positive(require_field(meta_j, "meta", "delta"), "meta.delta");
    if (const auto it = meta_j.find("tool"); it != meta_j.end() && !it->is_string())
        schema_fail("meta.tool", "expected a string"); // value itself is informational only

    validate_points(dom, points);
    return PointSequence{std::move(dom), std::move(points), meta};
}

std::string emit_report_csv(const SumReport& report) {
    std::string out = "j,boundary_distance,term,partial_sum\n";
    for (std::size_t j = 0; j < report.terms.size(); ++j) {
        const double bd = j < report.boundary_distances.size()
                              ? report.boundary_distances[j]
                              : std::numeric_limits<double>::quiet_NaN();
        out += std::to_string(j);
        out += ',';
        out += fmt17(bd);
        out += ',';
        out += fmt17(report.terms[j]);
        out += ',';
        out += fmt17(report.partial_sums[j]);
        out += '\n';
    }
    out += "# verdict: ";
    out += verdict_name(report.verdict);
    out += " (heuristic)\n";
    out += "# diagnostics: last_increment=" + fmt17(report.diagnostics.last_increment) +
           " increment_ratio=" + fmt17(report.diagnostics.increment_ratio) +
           " linear_fit_slope=" + fmt17(report.diagnostics.linear_fit_slope) + "\n";
    return out;
}

namespace {

double parse_double(const std::string& tok, const std::string& where) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.size() || tok.empty())
        schema_fail(where, "expected a number, got '" + tok + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

SumReport read_report_csv(const std::string& bytes) {
    std::vector<std::string> lines;
    for (std::string& line : split(bytes, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines[0] != "j,boundary_distance,term,partial_sum")
        schema_fail("csv", "missing or malformed header row");

    SumReport rep;
    bool any_boundary = false;
    bool saw_verdict = false, saw_diag = false;
    std::size_t row = 0;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        const std::string where = "csv line " + std::to_string(li + 1);
        if (line.rfind("# verdict: ", 0) == 0) {
            std::string v = line.substr(11);
            const std::string suffix = " (heuristic)";
            if (v.size() >= suffix.size() && v.compare(v.size() - suffix.size(), suffix.size(), suffix) == 0)
                v.resize(v.size() - suffix.size());
            if (v == verdict_name(Verdict::ConvergedNumerically))
                rep.verdict = Verdict::ConvergedNumerically;
            else if (v == verdict_name(Verdict::DivergingLinearly))
                rep.verdict = Verdict::DivergingLinearly;
            else if (v == verdict_name(Verdict::Inconclusive))
                rep.verdict = Verdict::Inconclusive;
            else
                schema_fail(where, "unknown verdict '" + v + "'");
            saw_verdict = true;
            continue;
        }
        if (line.rfind("# diagnostics: ", 0) == 0) {
            for (const std::string& kv : split(line.substr(15), ' ')) {
                if (kv.empty()) continue;
                const std::size_t eq = kv.find('=');
                if (eq == std::string::npos) schema_fail(where, "expected key=value, got '" + kv + "'");
                const std::string key = kv.substr(0, eq);
                const double val = parse_double(kv.substr(eq + 1), where);
                if (key == "last_increment")
                    rep.diagnostics.last_increment = val;
                else if (key == "increment_ratio")
                    rep.diagnostics.increment_ratio = val;
                else if (key == "linear_fit_slope")
                    rep.diagnostics.linear_fit_slope = val;
                else
                    schema_fail(where, "unknown diagnostic '" + key + "'");
            }
            saw_diag = true;
            continue;
        }
        if (!line.empty() && line[0] == '#') schema_fail(where, "unknown comment line");
        if (saw_verdict || saw_diag) schema_fail(where, "data row after footer");

        const std::vector<std::string> cols = split(line, ',');
        if (cols.size() != 4) schema_fail(where, "expected 4 columns");
        const double j = parse_double(cols[0], where);
        if (j != static_cast<double>(row)) schema_fail(where, "index column must count 0,1,2,...");
        const double bd = parse_double(cols[1], where);
        const double term = parse_double(cols[2], where);
        const double partial = parse_double(cols[3], where);
        if (!rep.partial_sums.empty() && partial < rep.partial_sums.back())
            schema_fail(where, "partial_sum column must be nondecreasing");
        if (!std::isnan(bd)) any_boundary = true;
        rep.boundary_distances.push_back(bd);
        rep.terms.push_back(term);
        rep.partial_sums.push_back(partial);
        ++row;
    }
    if (!saw_verdict) schema_fail("csv", "missing '# verdict:' footer");
    if (!saw_diag) schema_fail("csv", "missing '# diagnostics:' footer");
    if (!any_boundary) rep.boundary_distances.clear(); // bare term table
    return rep;
}

std::string encode_partition(const Partition& part) {
    json root = json::object();
    root["format"] = "discseq-partition";
    root["version"] = 1;
    root["delta"] = part.delta;
    json classes = json::array();
    for (const auto& cls : part.classes) {
        json idx = json::array();
        for (std::size_t v : cls) idx.push_back(v);
        classes.push_back(std::move(idx));
    }
    root["classes"] = std::move(classes);
    root["tool"] = tool_version();
    return root.dump(2) + "\n";
}

} // namespace discseq::io
