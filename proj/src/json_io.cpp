#include "diffmod/json_io.hpp"

#include "diffmod/errors.hpp"

namespace diffmod {

using nlohmann::json;

json to_json(const Poly& p) {
    json out = json::array();
    for (int d = 0; d <= p.degree(); ++d)
        out.push_back(print(p.coeff(d)));
    return out;
}

json to_json(const DiffOp& A) {
    json coeffs = json::array();
    for (const Poly& p : A.coeffs())
        coeffs.push_back(to_json(p));
    return {{"kind", "diffop"}, {"lambda", print(A.weight())}, {"coeffs", coeffs}};
}

json to_json(const NormalSymbol& S) {
    json bars = json::array();
    for (const Poly& p : S.bars)
        bars.push_back(to_json(p));
    return {{"kind", "symbol"}, {"lambda", print(S.weight)}, {"bars", bars}};
}

json to_json(const Density& d) {
    return {{"kind", "density"}, {"weight", print(d.weight)}, {"value", to_json(d.value)}};
}

json to_json(const IntertwinerVerdict& v) {
    json alphas = json::array();
    for (const DiagonalMap& m : v.basis) {
        json row = json::array();
        for (const Scalar& a : m.alphas)
            row.push_back(print(a));
        alphas.push_back(row);
    }
    return {{"status", v.status == IsoStatus::isomorphic ? "isomorphic" : "not-isomorphic"},
            {"dimension", v.solution_dimension},
            {"alphas", alphas},
            {"degenerate_slots", v.degenerate_slots}};
}

json to_json(const Cochain1& c) {
    json terms = json::object();
    for (const auto& [pq, beta] : c.terms())
        terms[std::to_string(pq.first) + "," + std::to_string(pq.second)] = print(beta);
    return {{"kind", "cochain"}, {"s", print(c.source_weight())}, {"m", c.grade()},
            {"terms", terms}};
}

json to_json(const SymbolScheme& s) {
    json alpha = json::array();
    for (const auto& row : s.alpha) {
        json r = json::array();
        for (const Scalar& a : row)
            r.push_back(print(a));
        alpha.push_back(r);
    }
    return {{"kind", "scheme"}, {"k", s.order}, {"lambda", print(s.lambda)}, {"alpha", alpha}};
}

namespace {

void expect_kind(const json& j, const char* kind) {
    if (!j.is_object() || j.value("kind", "") != kind)
        throw domain_error(std::string("expected JSON object of kind \"") + kind + "\"");
}

} // namespace

Poly poly_from_json(const json& j) {
    std::vector<Scalar> coeffs;
    for (const auto& c : j)
        coeffs.push_back(parse_scalar(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

DiffOp diffop_from_json(const json& j) {
    expect_kind(j, "diffop");
    std::vector<Poly> coeffs;
    for (const auto& p : j.at("coeffs"))
        coeffs.push_back(poly_from_json(p));
    return DiffOp(parse_scalar(j.at("lambda").get<std::string>()), std::move(coeffs));
}

NormalSymbol symbol_from_json(const json& j) {
    expect_kind(j, "symbol");
    std::vector<Poly> bars;
    for (const auto& p : j.at("bars"))
        bars.push_back(poly_from_json(p));
    return NormalSymbol(parse_scalar(j.at("lambda").get<std::string>()), std::move(bars));
}

Density density_from_json(const json& j) {
    expect_kind(j, "density");
    return Density(parse_scalar(j.at("weight").get<std::string>()),
                   poly_from_json(j.at("value")));
}

IntertwinerVerdict verdict_from_json(const json& j) {
    IntertwinerVerdict v;
    const std::string status = j.at("status").get<std::string>();
    if (status == "isomorphic")
        v.status = IsoStatus::isomorphic;
    else if (status == "not-isomorphic")
        v.status = IsoStatus::not_isomorphic;
    else
        throw domain_error("unknown verdict status \"" + status + "\"");
    v.solution_dimension = j.at("dimension").get<int>();
    for (const auto& row : j.at("alphas")) {
        DiagonalMap m;
        for (const auto& a : row)
            m.alphas.push_back(parse_scalar(a.get<std::string>()));
        m.order = static_cast<int>(m.alphas.size()) - 1;
        v.basis.push_back(std::move(m));
    }
    for (const auto& s : j.at("degenerate_slots"))
        v.degenerate_slots.push_back(s.get<int>());
    return v;
}

Cochain1 cochain_from_json(const json& j) {
    expect_kind(j, "cochain");
    Cochain1 c(parse_scalar(j.at("s").get<std::string>()), j.at("m").get<int>());
    for (const auto& [key, val] : j.at("terms").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw domain_error("cochain term key must be \"p,q\"");
        c.set_term(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)),
                   parse_scalar(val.get<std::string>()));
    }
    return c;
}

} // namespace diffmod
