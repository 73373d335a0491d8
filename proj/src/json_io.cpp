#include "rootchar/json_io.hpp"

namespace rootchar {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InvalidInput("malformed input: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) malformed(std::string("expected an object with \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string("missing \"") + key + "\"");
    return *it;
}

std::size_t dim_field(const Json& j) {
    const Json& d = field(j, "dim");
    if (!d.is_number_integer() || d.get<long long>() < 1) malformed("\"dim\" must be a positive integer");
    return d.get<std::size_t>();
}

std::int64_t int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
        const Rational q = rational_from_json(v);
        if (q.is_integer() && q.numerator().fits_slong_p()) return q.numerator().get_si();
    }
    malformed(std::string("\"") + key + "\" must be an integer");
}

std::map<Vector, std::int64_t> entries_from_json(const Json& j, std::size_t dim) {
    const Json& es = field(j, "entries");
    if (!es.is_array()) malformed("\"entries\" must be an array");
    std::map<Vector, std::int64_t> out;
    for (const auto& e : es) {
        Vector v = vector_from_json(field(e, "v"), dim);
        if (!out.emplace(std::move(v), int_field(e, "m")).second) malformed("duplicate entry");
    }
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json to_json(const std::vector<Vector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Json to_json(const GroupRingElement& x) {
    Json terms = Json::array();
    for (const auto& [v, c] : x.terms()) terms.push_back({{"v", to_json(v)}, {"c", c.get_str()}});
    return {{"dim", x.dim()}, {"terms", terms}};
}

Json to_json(const SupportMap& m) {
    Json es = Json::array();
    for (const auto& [v, k] : m.entries()) es.push_back({{"v", to_json(v)}, {"m", k}});
    return {{"dim", m.dim()}, {"entries", es}};
}

Json to_json(const SignedSupportMap& m) {
    Json es = Json::array();
    for (const auto& [v, k] : m.entries()) es.push_back({{"v", to_json(v)}, {"m", k}});
    return {{"dim", m.dim()}, {"entries", es}};
}

Json to_json(const RootSystem& r) { return {{"dim", r.ambient_dim()}, {"roots", to_json(r.roots())}}; }

Json to_json(const AffineVector& v) { return {{"level", v.level.str()}, {"v", to_json(v.part)}}; }

Json to_json(const std::vector<AffineVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Json to_json(const std::vector<AffineItem>& items) {
    Json a = Json::array();
    for (const auto& it : items) a.push_back({{"v", to_json(it.v)}, {"m", it.mult}});
    return a;
}

Json to_json(const AffineSupportSpec& spec) {
    Json j = {{"dim", spec.dim()}, {"grading", to_json(spec.grading)}, {"cutoff", spec.cutoff.str()}};
    if (const auto* e = std::get_if<ExplicitSupport>(&spec.kind)) {
        j["kind"] = "explicit";
        j["items"] = to_json(e->items);
    } else {
        const auto& g = std::get<GeneratedSupport>(spec.kind);
        j["kind"] = "generated";
        j["roots"] = to_json(g.finite.roots());
        Json ps = Json::array();
        for (const auto& [a, u] : g.period) ps.push_back({{"v", to_json(a)}, {"u", u.str()}});
        j["periods"] = ps;
        j["imaginary_multiplicity"] = g.imaginary_multiplicity ? Json(*g.imaginary_multiplicity) : Json(nullptr);
    }
    return j;
}

Json to_json(const SphereFit& f) { return {{"center", to_json(f.center)}, {"radius_sq", f.radius_sq.str()}}; }

Json to_json(const ParaboloidFit& f) { return {{"c", to_json(f.c)}, {"r", f.r.str()}}; }

Json to_json(const AxiomReport& a) {
    return {{"FR1", a.fr1}, {"FR2", a.fr2}, {"FR3", a.fr3}, {"FR4", a.fr4}, {"FR5", a.fr5},
            {"rank", a.rank}, {"all", a.all()}, {"failures", a.failures}};
}

Json to_json(const AffineAxiomReport& a) {
    return {{"cutoff", a.cutoff.str()}, {"AR1", a.ar1}, {"AR2", a.ar2}, {"AR3", a.ar3}, {"AR4'", a.ar4},
            {"AR5", a.ar5}, {"irreducible", a.irreducible}, {"rank", a.rank}, {"p2_rank", a.p2_rank},
            {"all", a.all()}, {"failures", a.failures}};
}

Json to_json(const FiniteVerdict& v) {
    return {{"on_sphere", v.on_sphere},
            {"fit", v.fit ? to_json(*v.fit) : Json(nullptr)},
            {"lambda", to_json(v.lambda)},
            {"axioms", to_json(v.axioms)},
            {"disjoint", v.disjoint},
            {"multiplicities_ok", v.multiplicities_ok},
            {"recovered", v.recovered ? to_json(*v.recovered) : Json(nullptr)},
            {"type", v.type ? Json(*v.type) : Json(nullptr)},
            {"weyl_vector", v.weyl_vector ? to_json(*v.weyl_vector) : Json(nullptr)},
            {"rank", v.rank},
            {"root_system", v.recovered.has_value()}};
}

Json to_json(const AffineVerdict& v) {
    return {{"cutoff", v.cutoff.str()},
            {"consistent_at_level", v.cutoff.str()},
            {"on_paraboloid", v.on_paraboloid},
            {"fit", v.fit ? to_json(*v.fit) : Json(nullptr)},
            {"lambda", to_json(v.lambda)},
            {"axioms_at_level", to_json(v.axioms)},
            {"disjoint", v.disjoint},
            {"real_multiplicities_ok", v.real_multiplicities_ok},
            {"imaginary_multiplicities_ok", v.imaginary_multiplicities_ok},
            {"multiplicities_ok", v.multiplicities_ok},
            {"irreducible", v.irreducible},
            {"assumption_holds", v.assumption_holds},
            {"root_system", v.root_system},
            {"predicted_imaginary", to_json(v.predicted_imaginary)},
            {"finite_separator", to_json(v.finite_separator)}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (!j.is_string()) malformed("rational must be a string or integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error&) {
        malformed("bad rational \"" + j.get<std::string>() + "\"");
    }
}

Vector vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.empty()) malformed("vector must be a nonempty array");
    if (dim != 0 && j.size() != dim)
        malformed("vector of length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
    Vector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

GroupRingElement group_ring_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    const Json& ts = field(j, "terms");
    if (!ts.is_array()) malformed("\"terms\" must be an array");
    GroupRingElement x(dim);
    for (const auto& t : ts) {
        const Json& c = field(t, "c");
        Integer coeff;
        if (c.is_number_integer()) coeff = static_cast<long>(c.get<std::int64_t>());
        else if (!c.is_string() || coeff.set_str(c.get<std::string>(), 10) != 0) malformed("bad coefficient");
        x.add_term(vector_from_json(field(t, "v"), dim), coeff);
    }
    return x;
}

SupportMap support_map_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    return SupportMap(dim, entries_from_json(j, dim));
}

SignedSupportMap signed_support_map_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    return SignedSupportMap(dim, entries_from_json(j, dim));
}

RootSystem root_system_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    const Json& rs = field(j, "roots");
    if (!rs.is_array() || rs.empty()) malformed("\"roots\" must be a nonempty array");
    std::vector<Vector> roots;
    for (const auto& r : rs) roots.push_back(vector_from_json(r, dim));
    return RootSystem(std::move(roots));
}

AffineVector affine_vector_from_json(const Json& j, std::size_t dim) {
    return AffineVector(rational_from_json(field(j, "level")), vector_from_json(field(j, "v"), dim));
}

AffineSupportSpec affine_spec_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    const Json& kind = field(j, "kind");
    AffineSupportSpec spec;
    spec.grading = affine_vector_from_json(field(j, "grading"), dim);
    spec.cutoff = rational_from_json(field(j, "cutoff"));
    if (kind == "explicit") {
        ExplicitSupport e;
        const Json& items = field(j, "items");
        if (!items.is_array()) malformed("\"items\" must be an array");
        for (const auto& it : items) e.items.push_back({affine_vector_from_json(field(it, "v"), dim), int_field(it, "m")});
        spec.kind = std::move(e);
    } else if (kind == "generated") {
        const Json& rs = field(j, "roots");
        if (!rs.is_array() || rs.empty()) malformed("\"roots\" must be a nonempty array");
        std::vector<Vector> roots;
        for (const auto& r : rs) roots.push_back(vector_from_json(r, dim));
        GeneratedSupport g{RootSystem(std::move(roots)), {}, std::nullopt};
        if (auto it = j.find("periods"); it != j.end()) {
            if (!it->is_array()) malformed("\"periods\" must be an array");
            for (const auto& p : *it) g.period[vector_from_json(field(p, "v"), dim)] = rational_from_json(field(p, "u"));
        }
        if (auto it = j.find("imaginary_multiplicity"); it != j.end() && !it->is_null())
            g.imaginary_multiplicity = int_field(j, "imaginary_multiplicity");
        spec.kind = std::move(g);
    } else {
        malformed("\"kind\" must be \"explicit\" or \"generated\"");
    }
    return spec;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace rootchar
