#include "rootchar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rootchar/catalog.hpp"
#include "rootchar/json_io.hpp"

namespace rootchar {

namespace {

constexpr std::string_view kCatalog = "catalog:";
constexpr std::string_view kCatalogAffine = "catalog-affine:";

struct Config {
    std::string input;
    std::string output;
    std::string mode;
    std::string cutoff;
    std::string name;
    std::size_t weyl_bound = kDefaultWeylBound;
    long kmax = 30;
};

bool has_prefix(const std::string& s, std::string_view p) { return s.compare(0, p.size(), p) == 0; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Rational parse_cutoff(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw InvalidInput("bad --cutoff '" + text + "'");
    }
}

std::string need_input(const Config& c) {
    if (c.input.empty()) throw InvalidInput("--input is required");
    return c.input;
}

// Name for denominator/macdonald: positional, or --input with either prefix.
std::string catalog_name(const Config& c) {
    if (!c.name.empty() && !c.input.empty()) throw InvalidInput("give either a name or --input, not both");
    std::string n = c.name.empty() ? c.input : c.name;
    if (has_prefix(n, kCatalogAffine)) return n.substr(kCatalogAffine.size());
    if (has_prefix(n, kCatalog)) return n.substr(kCatalog.size());
    return n;
}

Json cmd_expand(const Config& c) {
    const std::string in = need_input(c);
    if (has_prefix(in, kCatalog)) return to_json(expand_product(standard_finite(in.substr(kCatalog.size())).positive_support()));
    const Json j = read_json_file(in);
    // Negative multiplicities go through exact division.
    const auto signed_map = signed_support_map_from_json(j);
    const bool any_negative = std::any_of(signed_map.entries().begin(), signed_map.entries().end(),
                                          [](const auto& e) { return e.second < 0; });
    if (any_negative) return to_json(expand_signed(signed_map));
    return to_json(expand_product(support_map_from_json(j)));
}

AffineSupportSpec affine_input(const Config& c) {
    const std::string in = need_input(c);
    if (has_prefix(in, kCatalogAffine)) {
        if (c.cutoff.empty()) throw InvalidInput("--cutoff is required for catalog-affine inputs");
        return untwisted_affine(in.substr(kCatalogAffine.size()), parse_cutoff(c.cutoff));
    }
    if (has_prefix(in, kCatalog)) throw InvalidInput("affine mode needs a catalog-affine: input or a spec file");
    AffineSupportSpec spec = affine_spec_from_json(read_json_file(in));
    if (!c.cutoff.empty()) spec.cutoff = parse_cutoff(c.cutoff);
    return spec;
}

Json cmd_check(const Config& c) {
    const std::string in = need_input(c);
    std::string mode = c.mode;
    if (mode.empty()) mode = has_prefix(in, kCatalogAffine) ? "affine" : "finite";
    if (mode == "affine") {
        Json j = to_json(characterize_affine(affine_input(c)));
        j["mode"] = "affine";
        return j;
    }
    if (mode != "finite") throw InvalidInput("--mode must be finite or affine");
    if (has_prefix(in, kCatalogAffine)) throw InvalidInput("finite mode cannot take a catalog-affine: input");
    const SupportMap m = has_prefix(in, kCatalog) ? standard_finite(in.substr(kCatalog.size())).positive_support()
                                                  : support_map_from_json(read_json_file(in));
    Json j = to_json(characterize_finite(m));
    j["mode"] = "finite";
    return j;
}

Json cmd_denominator(const Config& c) {
    const std::string n = catalog_name(c);
    if (n.empty()) throw InvalidInput("denominator needs a catalog name");
    const auto e = standard_finite(n);
    const auto rhs = denominator_rhs(e.positives, c.weyl_bound);
    const auto lhs = expand_product(e.positive_support());
    return {{"name", e.name},       {"weyl_order", e.weyl_order.get_str()}, {"lhs_terms", lhs.size()},
            {"rhs_terms", rhs.size()}, {"equal", lhs == rhs},                 {"weyl_bound", c.weyl_bound}};
}

Json cmd_macdonald(const Config& c) {
    AffineSupportSpec spec;
    std::string label;
    if (!c.input.empty() && !has_prefix(c.input, kCatalog) && !has_prefix(c.input, kCatalogAffine)) {
        if (!c.name.empty()) throw InvalidInput("give either a name or --input, not both");
        spec = affine_input(c);
        label = c.input;
    } else {
        label = catalog_name(c);
        if (label.empty()) throw InvalidInput("macdonald needs a catalog name");
        if (c.cutoff.empty()) throw InvalidInput("--cutoff is required");
        spec = untwisted_affine(label, parse_cutoff(c.cutoff));
    }
    const auto lhs = affine_lhs(spec);
    const auto rhs = affine_weyl_rhs(spec, c.weyl_bound);
    const Vector n = spec.grading.to_vector();

    std::map<Rational, std::pair<GroupRingElement, GroupRingElement>> by_grade;
    const std::size_t dim = spec.dim() + 1;
    for (const auto& [v, k] : lhs.terms())
        by_grade.try_emplace(inner(v, n), GroupRingElement(dim), GroupRingElement(dim)).first->second.first.add_term(v, k);
    for (const auto& [v, k] : rhs.terms())
        by_grade.try_emplace(inner(v, n), GroupRingElement(dim), GroupRingElement(dim)).first->second.second.add_term(v, k);
    Json per = Json::array();
    for (const auto& [g, sides] : by_grade)
        per.push_back({{"grade", g.str()},
                       {"lhs", sides.first.size()},
                       {"rhs", sides.second.size()},
                       {"equal", sides.first == sides.second}});

    std::vector<AffineVector> lambda;
    for (const auto& v : support(lhs)) lambda.push_back(AffineVector::from_vector(v));
    const auto fit = fit_paraboloid(lambda);
    return {{"name", label},
            {"cutoff", spec.cutoff.str()},
            {"grading", to_json(spec.grading)},
            {"equal_up_to_C", lhs == rhs},
            {"lhs_terms", lhs.size()},
            {"rhs_terms", rhs.size()},
            {"term_count_per_grade", per},
            {"fit", fit ? to_json(*fit) : Json(nullptr)}};
}

Json cmd_classify(const Config& c) {
    const std::string in = need_input(c);
    const RootSystem R = has_prefix(in, kCatalog) ? standard_finite(in.substr(kCatalog.size())).system()
                                                  : root_system_from_json(read_json_file(in));
    const auto rep = check_axioms(R);
    if (!rep.all()) return {{"type", nullptr}, {"axioms", to_json(rep)}};
    const auto ps = positive_roots(R);
    const auto b = base(ps.positives);
    const auto t = identify_type(b);
    Json comps = Json::array();
    for (const auto& k : t.components) comps.push_back(k.name());
    return {{"type", t.name},
            {"components", comps},
            {"rank", R.rank()},
            {"weyl_order", t.weyl_order.get_str()},
            {"base", to_json(b)},
            {"separator", to_json(ps.separator)},
            {"axioms", to_json(rep)}};
}

Json cmd_counterexample(const Config& c) {
    if (c.name == "remark29") {
        if (c.kmax < 1) throw InvalidInput("--kmax must be >= 1");
        const auto a = remark29_exponents(c.kmax);
        const auto o = series_inversion_oracle(c.kmax);
        bool positive = true, bound = true;
        Json as = Json::array(), os = Json::array();
        for (std::size_t k = 0; k < a.size(); ++k) {
            as.push_back(a[k].get_str());
            os.push_back(o[k].get_str());
            positive = positive && a[k] > 0;
            bound = bound && Integer(a[k] * static_cast<unsigned long>(k + 1)) >= 2;  // a_k >= 2/k
        }
        return {{"which", "remark29"}, {"kmax", c.kmax}, {"exponents", as}, {"oracle", os},
                {"agree", a == o},      {"positive", positive}, {"lower_bound_ok", bound}};
    }
    if (c.name == "remark210") {
        const auto ex = remark210_counterexample();
        return {{"which", "remark210"},
                {"m", to_json(ex.m)},
                {"alpha", to_json(ex.alpha)},
                {"beta", to_json(ex.beta)},
                {"expansion", to_json(ex.expansion)},
                {"fit", to_json(ex.fit)},
                {"axioms", to_json(ex.axioms)},
                {"axioms_pass", ex.axioms.all()}};
    }
    throw InvalidInput("unknown counterexample '" + c.name + "' (expected remark29 or remark210)");
}

void emit(const Json& j, const Config& c, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (c.output.empty() || c.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw InvalidInput("cannot write output file '" + c.output + "'");
    f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact root-system and denominator-identity checks", "rootchar"};
    app.require_subcommand(1);
    Config cfg;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "JSON file, catalog:NAME or catalog-affine:NAME");
        sub->add_option("--output", cfg.output, "output file (default stdout)");
    };
    auto* expand = app.add_subcommand("expand", "expand prod (1 - e^s)^m(s)");
    add_io(expand);
    auto* check = app.add_subcommand("check", "sphere / paraboloid characterisation");
    add_io(check);
    check->add_option("--mode", cfg.mode, "finite or affine");
    check->add_option("--cutoff", cfg.cutoff, "grade cutoff C for affine inputs");
    auto* denom = app.add_subcommand("denominator", "Weyl denominator identity for a catalog type");
    add_io(denom);
    denom->add_option("name", cfg.name, "catalog name");
    denom->add_option("--weyl-bound", cfg.weyl_bound, "maximum |W|");
    auto* macd = app.add_subcommand("macdonald", "truncated affine denominator identity");
    add_io(macd);
    macd->add_option("name", cfg.name, "catalog name");
    macd->add_option("--cutoff", cfg.cutoff, "grade cutoff C");
    macd->add_option("--weyl-bound", cfg.weyl_bound, "maximum number of affine Weyl elements");
    auto* classify_cmd = app.add_subcommand("classify", "Dynkin type of a root system");
    add_io(classify_cmd);
    auto* counter = app.add_subcommand("counterexample", "remark29 or remark210");
    counter->add_option("which", cfg.name, "remark29 or remark210")->required();
    counter->add_option("--kmax", cfg.kmax, "number of exponents for remark29");
    counter->add_option("--output", cfg.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Json result;
        if (*expand) result = cmd_expand(cfg);
        else if (*check) result = cmd_check(cfg);
        else if (*denom) result = cmd_denominator(cfg);
        else if (*macd) result = cmd_macdonald(cfg);
        else if (*classify_cmd) result = cmd_classify(cfg);
        else result = cmd_counterexample(cfg);
        emit(result, cfg, out);
        return 0;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rootchar
