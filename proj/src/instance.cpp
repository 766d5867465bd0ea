#include "jacring/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jacring/errors.hpp"

namespace jacring {

int Instance::d_total() const {
    int t = 0;
    for (int x : d) t += x;
    return t;
}

int Instance::e_total() const {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

int Instance::d_max() const { return d.empty() ? 0 : *std::max_element(d.begin(), d.end()); }
int Instance::e_max() const { return e.empty() ? 0 : *std::max_element(e.begin(), e.end()); }

int Instance::delta_min() const {
    int m = INT32_MAX;
    for (int x : d) m = std::min(m, x);
    for (int x : e) m = std::min(m, x);
    return m;
}

void Instance::validate() const {
    if (n < 2) throw SchemaError("n must be >= 2", "/n");
    if (r() + s() < 1) throw SchemaError("need r + s >= 1", "/d");
    if (n < r() + 1) throw SchemaError("need n >= r + 1", "/d");
    if (F.size() != d.size()) throw SchemaError("F count does not match d", "/F");
    if (G.size() != e.size()) throw SchemaError("G count does not match e", "/G");
    for (int i = 0; i < r(); ++i) {
        if (d[i] < 1) throw SchemaError("degrees must be >= 1", "/d/" + std::to_string(i));
        if (F[i].deg != d[i] || F[i].nvars != n + 1)
            throw SchemaError("F_" + std::to_string(i + 1) + " degree/variable mismatch",
                              "/F/" + std::to_string(i));
    }
    for (int j = 0; j < s(); ++j) {
        if (e[j] < 1) throw SchemaError("degrees must be >= 1", "/e/" + std::to_string(j));
        if (G[j].deg != e[j] || G[j].nvars != n + 1)
            throw SchemaError("G_" + std::to_string(j + 1) + " degree/variable mismatch",
                              "/G/" + std::to_string(j));
    }
}

namespace {

using nlohmann::json;

json poly_to_json(const HomogPoly& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms) {
        json t = json::array();
        t.push_back(m);
        t.push_back(mpq_class(c).get_str());
        terms.push_back(t);
    }
    return terms;
}

HomogPoly poly_from_json(const json& j, int nvars, int deg, const std::string& ptr) {
    HomogPoly f(nvars, deg);
    if (!j.is_array()) throw SchemaError("polynomial must be an array of terms", ptr);
    for (size_t t = 0; t < j.size(); ++t) {
        const json& term = j[t];
        std::string tptr = ptr + "/" + std::to_string(t);
        if (!term.is_array() || term.size() != 2)
            throw SchemaError("term must be [exponents, coefficient]", tptr);
        Monomial m;
        for (const auto& ex : term[0]) m.push_back(ex.get<int>());
        if ((int)m.size() != nvars || degree(m) != deg)
            throw SchemaError("exponent vector does not match degree", tptr + "/0");
        mpq_class c;
        try {
            c = mpq_class(term[1].get<std::string>());
            c.canonicalize();
        } catch (...) {
            throw SchemaError("bad coefficient string", tptr + "/1");
        }
        f.add_term(m, c);
    }
    return f;
}

json instance_to_json_obj(const Instance& inst) {
    json j;
    j["schema_version"] = 1;
    j["n"] = inst.n;
    j["d"] = inst.d;
    j["e"] = inst.e;
    if (inst.field.is_rational())
        j["field"] = {{"type", "Q"}};
    else
        j["field"] = {{"type", "Fp"}, {"p", inst.field.p}};
    json F = json::array(), G = json::array();
    for (const auto& f : inst.F) F.push_back(poly_to_json(f));
    for (const auto& g : inst.G) G.push_back(poly_to_json(g));
    j["F"] = F;
    j["G"] = G;
    return j;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    return instance_to_json_obj(inst).dump(2);
}

Instance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw SchemaError(std::string("invalid JSON: ") + ex.what(), "");
    }
    Instance inst;
    try {
        inst.n = j.at("n").get<int>();
    } catch (...) {
        throw SchemaError("missing or bad n", "/n");
    }
    if (!j.contains("d") || !j["d"].is_array()) throw SchemaError("missing d", "/d");
    inst.d = j["d"].get<std::vector<int>>();
    if (!j.contains("e") || !j["e"].is_array()) throw SchemaError("missing e", "/e");
    inst.e = j["e"].get<std::vector<int>>();
    if (!j.contains("field") || !j["field"].contains("type"))
        throw SchemaError("missing field", "/field");
    std::string ft = j["field"]["type"].get<std::string>();
    if (ft == "Q") {
        inst.field = FieldSpec::rationals();
    } else if (ft == "Fp") {
        if (!j["field"].contains("p")) throw SchemaError("missing p", "/field/p");
        try {
            inst.field = FieldSpec::prime_field(j["field"]["p"].get<uint64_t>());
        } catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what(), "/field/p");
        }
    } else {
        throw SchemaError("field type must be Q or Fp", "/field/type");
    }
    if (!j.contains("F") || !j["F"].is_array()) throw SchemaError("missing F", "/F");
    if (!j.contains("G") || !j["G"].is_array()) throw SchemaError("missing G", "/G");
    if (j["F"].size() != inst.d.size()) throw SchemaError("F count does not match d", "/F");
    if (j["G"].size() != inst.e.size()) throw SchemaError("G count does not match e", "/G");
    for (size_t i = 0; i < inst.d.size(); ++i)
        inst.F.push_back(
            poly_from_json(j["F"][i], inst.n + 1, inst.d[i], "/F/" + std::to_string(i)));
    for (size_t i = 0; i < inst.e.size(); ++i)
        inst.G.push_back(
            poly_from_json(j["G"][i], inst.n + 1, inst.e[i], "/G/" + std::to_string(i)));
    inst.validate();
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open instance file: " + path, "");
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << instance_to_json(inst) << "\n";
}

std::string instance_digest(const Instance& inst) {
    // canonical form: nlohmann::json objects iterate keys sorted
    std::string canon = instance_to_json_obj(inst).dump();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

Instance random_instance(int n, const std::vector<int>& d, const std::vector<int>& e,
                         const FieldSpec& field, uint64_t seed) {
    Instance inst;
    inst.n = n;
    inst.d = d;
    inst.e = e;
    inst.field = field;
    std::mt19937_64 rng(seed);
    for (int deg : d) inst.F.push_back(random_homog(n, deg, field, rng));
    for (int deg : e) inst.G.push_back(random_homog(n, deg, field, rng));
    inst.validate();
    return inst;
}

}  // namespace jacring
