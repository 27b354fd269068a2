#include "toricq/io.hpp"

#include "toricq/errors.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace toricq::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InvalidInput((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
}

long long as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const char* key) { return path + "/" + key; }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(source + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

Field field_from_string(const std::string& s) {
    if (s == "R" || s == "r" || s == "real") return Field::Real;
    if (s == "C" || s == "c" || s == "complex") return Field::Complex;
    throw InvalidInput("unknown field \"" + s + "\" (expected R or C)");
}

LoadedFan fan_from_json(const Json& j) {
    const long long dim = as_int(member(j, "dim", ""), "/dim");
    if (dim < 1) fail("/dim", "dimension must be >= 1");
    bool rescaled = false;
    std::vector<LatticeVector> rays;
    const auto& jr = as_array(member(j, "rays", ""), "/rays");
    for (std::size_t i = 0; i < jr.size(); ++i) {
        const auto p = at("/rays", i);
        const auto& row = as_array(jr[i], p);
        if (row.size() != static_cast<std::size_t>(dim)) fail(p, "ray length differs from dim");
        LatticeVector v;
        for (std::size_t c = 0; c < row.size(); ++c) v.coords.push_back(as_int(row[c], at(p, c)));
        if (v.is_zero()) fail(p, "zero ray");
        auto prim = primitive_generator(v);
        if (prim != v) rescaled = true;
        rays.push_back(std::move(prim));
    }
    std::vector<Cone> cones;
    const auto& jc = as_array(member(j, "max_cones", ""), "/max_cones");
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const auto p = at("/max_cones", i);
        std::vector<int> gens;
        const auto& row = as_array(jc[i], p);
        for (std::size_t c = 0; c < row.size(); ++c) gens.push_back(static_cast<int>(as_int(row[c], at(p, c))));
        try {
            cones.emplace_back(std::move(gens));
        } catch (const Error& e) {
            fail(p, e.what());
        }
    }
    try {
        return {Fan(static_cast<std::size_t>(dim), std::move(rays), std::move(cones)), rescaled};
    } catch (const Error& e) {
        fail("", e.what());
    }
}

Json fan_to_json(const Fan& fan) {
    Json j;
    j["dim"] = fan.dim();
    j["rays"] = Json::array();
    for (const auto& r : fan.rays()) j["rays"].push_back(r.coords);
    j["max_cones"] = Json::array();
    for (const auto& c : fan.max_cones()) j["max_cones"].push_back(c.generators);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    const long long r = as_int(member(j, "vertices", ""), "/vertices");
    if (r < 0 || r > 63) fail("/vertices", "vertex count must lie in 0..63");
    std::vector<IndexSet> mnf;
    const auto& jm = as_array(member(j, "min_non_faces", ""), "/min_non_faces");
    for (std::size_t i = 0; i < jm.size(); ++i) {
        const auto p = at("/min_non_faces", i);
        IndexSet s;
        const auto& row = as_array(jm[i], p);
        for (std::size_t c = 0; c < row.size(); ++c) {
            const long long v = as_int(row[c], at(p, c));
            if (v < 0 || v >= r) fail(at(p, c), "vertex out of range");
            s.push_back(static_cast<int>(v));
        }
        mnf.push_back(std::move(s));
    }
    try {
        return SimplicialComplex(static_cast<std::size_t>(r), std::move(mnf));
    } catch (const Error& e) {
        fail("/min_non_faces", e.what());
    }
}

Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["vertices"] = k.num_vertices();
    j["min_non_faces"] = k.min_non_faces();
    return j;
}

GaussianRational coefficient_from_json(const Json& j, const std::string& path) {
    if (j.is_object()) {
        Rational re = j.contains("re") ? rational_from_json(j["re"], at(path, "re")) : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j["im"], at(path, "im")) : Rational(0);
        return {re, im};
    }
    return rational_from_json(j, path);
}

Json coefficient_to_json(const GaussianRational& z) {
    if (z.is_real()) return format_rational(z.re());
    return Json{{"re", format_rational(z.re())}, {"im", format_rational(z.im())}};
}

PolySystem system_from_json(const Json& j) {
    PolySystem sys;
    const auto& f = member(j, "field", "");
    if (!f.is_string()) fail("/field", "expected \"R\" or \"C\"");
    try {
        sys.field = field_from_string(f.get<std::string>());
    } catch (const InvalidInput& e) {
        fail("/field", e.what());
    }
    sys.n = static_cast<int>(as_int(member(j, "n", ""), "/n"));
    if (sys.n < 1) fail("/n", "n must be >= 1");
    const auto& jp = as_array(member(j, "polys", ""), "/polys");
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const auto p = at("/polys", i);
        const auto& row = as_array(jp[i], p);
        std::vector<GaussianRational> lower;
        for (std::size_t c = 0; c < row.size(); ++c) {
            auto z = coefficient_from_json(row[c], at(p, c));
            if (sys.field == Field::Real && !z.is_real()) fail(at(p, c), "non-real coefficient in a real system");
            lower.push_back(std::move(z));
        }
        sys.polys.emplace_back(std::move(lower));
    }
    return sys;
}

Json system_to_json(const PolySystem& sys) {
    Json j;
    j["field"] = field_name(sys.field);
    j["n"] = sys.n;
    j["polys"] = Json::array();
    for (const auto& f : sys.polys) {
        Json row = Json::array();
        for (const auto& c : f.lower()) row.push_back(coefficient_to_json(c));
        j["polys"].push_back(std::move(row));
    }
    return j;
}

DivisorSystem divisor_system_from_json(const Json& j) {
    DivisorSystem sys;
    const auto& f = member(j, "field", "");
    if (!f.is_string()) fail("/field", "expected \"R\" or \"C\"");
    try {
        sys.field = field_from_string(f.get<std::string>());
    } catch (const InvalidInput& e) {
        fail("/field", e.what());
    }
    sys.n = static_cast<int>(as_int(member(j, "n", ""), "/n"));
    if (sys.n < 1) fail("/n", "n must be >= 1");
    const auto& jd = as_array(member(j, "divisors", ""), "/divisors");
    for (std::size_t i = 0; i < jd.size(); ++i) {
        const auto p = at("/divisors", i);
        const auto& row = as_array(jd[i], p);
        Divisor xi;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto q = at(p, c);
            auto pt = coefficient_from_json(member(row[c], "pt", q), at(q, "pt"));
            const long long m = as_int(member(row[c], "mult", q), at(q, "mult"));
            if (m < 1) fail(at(q, "mult"), "multiplicity must be >= 1");
            if (xi.count(pt)) fail(q, "repeated point");
            xi[pt] = static_cast<int>(m);
        }
        sys.divisors.push_back(std::move(xi));
    }
    try {
        sys.validate();
    } catch (const InvalidInput& e) {
        fail("/divisors", e.what());
    }
    return sys;
}

Json divisor_system_to_json(const DivisorSystem& sys) {
    Json j;
    j["n"] = sys.n;
    j["field"] = field_name(sys.field);
    j["divisors"] = Json::array();
    for (const auto& xi : sys.divisors) {
        Json row = Json::array();
        for (const auto& [pt, m] : xi)
            row.push_back(Json{{"pt", Json{{"re", format_rational(pt.re())}, {"im", format_rational(pt.im())}}},
                               {"mult", m}});
        j["divisors"].push_back(std::move(row));
    }
    return j;
}

}  // namespace toricq::io
