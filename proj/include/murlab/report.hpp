#pragma once

#include "murlab/graph_io.hpp"
#include "murlab/mur.hpp"
#include "murlab/replay.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace murlab {

inline constexpr const char* kReportFormat = "murlab-report/1";

/// Everything needed to reproduce or re-check one analysis.
struct Report {
    Graph graph;              // the input graph
    bool complement = false;  // the analysis ran on complement(graph)
    MurResult result;
    SearchOptions options;
    double elapsed_ms = 0.0;

    [[nodiscard]] Graph analyzed() const { return complement ? murlab::complement(graph) : graph; }
};

namespace detail {

using nlohmann::json;

inline json poly_to_json(const UniPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

inline UniPoly poly_from_json(const json& j) {
    std::vector<Rational> cs;
    for (const auto& c : j) cs.push_back(Rational::parse(c.get<std::string>()));
    return UniPoly(std::move(cs));
}

inline json match_to_json(const FamilyMatch& m) {
    return {{"kind", to_string(m.kind)}, {"on_complement", m.on_complement}, {"sizes", m.sizes},
            {"r", m.r},  {"s", m.s},  {"apex", m.apex}, {"degree", m.degree}};
}

inline FamilyMatch match_from_json(const json& j) {
    FamilyMatch m;
    m.kind = family_kind_from_string(j.at("kind").get<std::string>());
    m.on_complement = j.at("on_complement").get<bool>();
    m.sizes = j.at("sizes").get<std::vector<int>>();
    m.r = j.at("r").get<int>();
    m.s = j.at("s").get<int>();
    m.apex = j.at("apex").get<int>();
    m.degree = j.at("degree").get<int>();
    return m;
}

struct CertificateToJson {
    json operator()(const TrivialBound& c) const { return {{"kind", "trivial"}, {"value", c.value}}; }
    json operator()(const PathForestBound& c) const {
        return {{"kind", "path-forest"},         {"paths", c.witness.paths},
                {"isolated", c.witness.isolated}, {"bound", c.witness.bound},
                {"exhaustive", c.witness.exhaustive}, {"nodes", c.witness.nodes},
                {"on_complement", c.on_complement}};
    }
    json operator()(const DiameterBound& c) const {
        return {{"kind", "diameter"}, {"u", c.u}, {"v", c.v}, {"distance", c.distance},
                {"on_complement", c.on_complement}};
    }
    json operator()(const OutsideSmallClasses& c) const {
        return {{"kind", "outside-small-classes"}, {"level", c.level}};
    }
    json operator()(const ComponentBound& c) const {
        return {{"kind", "components"}, {"components", c.components}, {"on_complement", c.on_complement}};
    }
    json operator()(const LaplacianMultiplicity& c) const {
        return {{"kind", "laplacian-multiplicity"}, {"multiplicity", c.multiplicity},
                {"on_complement", c.on_complement}};
    }
    json operator()(const RegularSpectrum& c) const {
        return {{"kind", "regular-spectrum"}, {"multiplicity", c.multiplicity}, {"components", c.components},
                {"degree", c.degree}};
    }
    json operator()(const FamilyFormula& c) const {
        return {{"kind", "family"}, {"family", match_to_json(c.match)}, {"value", c.value}};
    }
    json operator()(const ExplicitParams& c) const {
        return {{"kind", "params"},
                {"point", {{"beta", c.point.beta.str()}, {"gamma", c.point.gamma.str()}, {"delta", c.point.delta.str()}}},
                {"rank", c.rank}};
    }
};

template <class Variant>
Variant certificate_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    auto accept = [&](auto cert) -> Variant {
        if constexpr (std::is_constructible_v<Variant, decltype(cert)>) {
            return Variant{std::move(cert)};
        } else {
            throw std::invalid_argument("certificate kind '" + kind + "' not allowed on this side");
        }
    };
    if (kind == "trivial") return accept(TrivialBound{j.at("value").get<int>()});
    if (kind == "path-forest") {
        PathForestBound c;
        c.witness.paths = j.at("paths").get<std::vector<std::vector<int>>>();
        c.witness.isolated = j.at("isolated").get<std::vector<int>>();
        c.witness.bound = j.at("bound").get<int>();
        c.witness.exhaustive = j.at("exhaustive").get<bool>();
        c.witness.nodes = j.at("nodes").get<std::uint64_t>();
        c.on_complement = j.at("on_complement").get<bool>();
        return accept(c);
    }
    if (kind == "diameter")
        return accept(DiameterBound{j.at("u").get<int>(), j.at("v").get<int>(), j.at("distance").get<int>(),
                                    j.at("on_complement").get<bool>()});
    if (kind == "outside-small-classes") return accept(OutsideSmallClasses{j.at("level").get<int>()});
    if (kind == "components")
        return accept(ComponentBound{j.at("components").get<int>(), j.at("on_complement").get<bool>()});
    if (kind == "laplacian-multiplicity")
        return accept(LaplacianMultiplicity{j.at("multiplicity").get<int>(), j.at("on_complement").get<bool>()});
    if (kind == "regular-spectrum")
        return accept(RegularSpectrum{j.at("multiplicity").get<int>(), j.at("components").get<int>(),
                                      j.at("degree").get<int>()});
    if (kind == "family") return accept(FamilyFormula{match_from_json(j.at("family")), j.at("value").get<int>()});
    if (kind == "params") {
        const auto& p = j.at("point");
        return accept(ExplicitParams{{Rational::parse(p.at("beta").get<std::string>()),
                                      Rational::parse(p.at("gamma").get<std::string>()),
                                      Rational::parse(p.at("delta").get<std::string>())},
                                     j.at("rank").get<int>()});
    }
    throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

}  // namespace detail

inline nlohmann::json certificate_to_json(const LowerCertificate& c) {
    return std::visit(detail::CertificateToJson{}, c);
}
inline nlohmann::json certificate_to_json(const UpperCertificate& c) {
    return std::visit(detail::CertificateToJson{}, c);
}

inline nlohmann::json to_json(const Report& rep) {
    using nlohmann::json;
    const auto& r = rep.result;
    json edges = json::array();
    for (auto [u, v] : rep.graph.edges()) edges.push_back({u, v});
    json out = {
        {"format", kReportFormat},
        {"graph", {{"order", rep.graph.order()}, {"edges", edges}, {"graph6", encode_graph6(rep.graph)}}},
        {"complement", rep.complement},
        {"result",
         {{"status", r.exact ? "exact" : "interval"},
          {"lower", r.lower},
          {"upper", r.upper},
          {"value", r.value ? json(*r.value) : json(nullptr)},
          {"summary", summary(r)}}},
        {"certificates", {{"lower", certificate_to_json(r.lower_certificate)},
                          {"upper", certificate_to_json(r.upper_certificate)}}},
        {"search",
         {{"candidates", r.stats.candidates},
          {"modular_rejections", r.stats.modular_rejections},
          {"exact_evaluations", r.stats.exact_evaluations},
          {"lower_exhaustive", r.stats.lower_exhaustive}}},
        {"options",
         {{"budget", rep.options.node_budget},
          {"grid_den", rep.options.grid_den},
          {"grid_num", rep.options.grid_num},
          {"random_points", rep.options.random_points},
          {"seed", rep.options.seed},
          {"families", rep.options.use_families},
          {"instantiate_spectral", rep.options.instantiate_spectral}}},
        {"timing_ms", rep.elapsed_ms},
    };
    if (r.spectral) {
        json branches = json::array();
        for (const auto& b : r.spectral->branches)
            branches.push_back({{"modulus", detail::poly_to_json(b.modulus)}, {"rank", b.rank}});
        out["spectral"] = {{"factor", detail::poly_to_json(r.spectral->factor)},
                           {"expected_rank", r.spectral->expected_rank},
                           {"branches", branches},
                           {"verified", r.spectral->verified()}};
    }
    return out;
}

/// Throws std::invalid_argument (or a json exception) on malformed input.
inline Report report_from_json(const nlohmann::json& j) {
    if (j.at("format").get<std::string>() != kReportFormat)
        throw std::invalid_argument("unsupported report format '" + j.at("format").get<std::string>() + "'");
    Report rep;
    const auto& g = j.at("graph");
    rep.graph = Graph(g.at("order").get<int>(), g.at("edges").get<std::vector<std::pair<int, int>>>());
    if (encode_graph6(rep.graph) != g.at("graph6").get<std::string>())
        throw std::invalid_argument("graph6 field disagrees with edge list");
    rep.complement = j.at("complement").get<bool>();

    auto& r = rep.result;
    const auto& res = j.at("result");
    r.lower = res.at("lower").get<int>();
    r.upper = res.at("upper").get<int>();
    r.exact = res.at("status").get<std::string>() == "exact";
    if (!res.at("value").is_null()) r.value = res.at("value").get<int>();
    r.lower_certificate = detail::certificate_from_json<LowerCertificate>(j.at("certificates").at("lower"));
    r.upper_certificate = detail::certificate_from_json<UpperCertificate>(j.at("certificates").at("upper"));

    const auto& s = j.at("search");
    r.stats.candidates = s.at("candidates").get<std::size_t>();
    r.stats.modular_rejections = s.at("modular_rejections").get<std::size_t>();
    r.stats.exact_evaluations = s.at("exact_evaluations").get<std::size_t>();
    r.stats.lower_exhaustive = s.at("lower_exhaustive").get<bool>();

    const auto& o = j.at("options");
    rep.options.node_budget = o.at("budget").get<std::uint64_t>();
    rep.options.grid_den = o.at("grid_den").get<int>();
    rep.options.grid_num = o.at("grid_num").get<int>();
    rep.options.random_points = o.at("random_points").get<int>();
    rep.options.seed = o.at("seed").get<std::uint64_t>();
    rep.options.use_families = o.at("families").get<bool>();
    rep.options.instantiate_spectral = o.at("instantiate_spectral").get<bool>();
    rep.elapsed_ms = j.at("timing_ms").get<double>();

    if (j.contains("spectral")) {
        const auto& sp = j.at("spectral");
        SpectralInstantiation inst;
        inst.factor = detail::poly_from_json(sp.at("factor"));
        inst.expected_rank = sp.at("expected_rank").get<int>();
        for (const auto& b : sp.at("branches"))
            inst.branches.push_back({detail::poly_from_json(b.at("modulus")), b.at("rank").get<std::size_t>()});
        r.spectral = std::move(inst);
    }
    return rep;
}

inline ReplayResult replay(const Report& rep) { return replay(rep.analyzed(), rep.result); }

}  // namespace murlab
