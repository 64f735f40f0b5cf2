#include "schurkit/json_io.hpp"

#include "schurkit/errors.hpp"

namespace schurkit {

json to_json(const Partition& p) {
    return json(p.parts());
}

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("partition must be a JSON array of integers");
    std::vector<Partition::value_type> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError("partition must be a JSON array of integers");
        parts.push_back(v.get<Partition::value_type>());
    }
    return Partition(parts);
}

json to_json(const Tableau& t) {
    return json(t.rows());
}

json to_json(const MonomialPolynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exponents", it->first}, {"coeff", it->second}});
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MonomialPolynomial polynomial_from_json(const json& j) {
    try {
        MonomialPolynomial p(j.at("nvars").get<int>());
        for (const auto& t : j.at("terms"))
            p.add_term(t.at("exponents").get<Exponents>(), t.at("coeff").get<std::int64_t>());
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const SchurExpansion& e) {
    json terms = json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        terms.push_back({{"partition", to_json(it->first)}, {"coeff", it->second}});
    return {{"terms", std::move(terms)}};
}

SchurExpansion schur_expansion_from_json(const json& j) {
    try {
        SchurExpansion e;
        for (const auto& t : j.at("terms"))
            e.add(partition_from_json(t.at("partition")), t.at("coeff").get<std::int64_t>());
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed Schur expansion JSON: ") + ex.what());
    }
}

json to_json(const ContractReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        json bindings = json::object();
        for (const auto& b : v.bindings)
            bindings[b.name] = b.value;
        violations.push_back(
            {{"id", v.id}, {"point", v.point}, {"bindings", std::move(bindings)}, {"message", v.message}});
    }
    json checks = json::object();
    for (const auto& [id, tally] : r.checks)
        checks[id] = {{"evaluated", tally.evaluated}, {"failed", tally.failed}};

    json out = {
        {"passed", r.passed()},
        {"violations", std::move(violations)},
        {"variants",
         {{"outer", r.variants.outer}, {"inner", r.variants.inner}, {"for", r.variants.for_loop}}},
        {"writes", json(std::vector<std::int64_t>(r.writes.begin(), r.writes.end()))},
        {"completed", r.completed},
        {"checks", std::move(checks)},
    };
    if (!r.trace.empty()) {
        json trace = json::array();
        for (const auto& ev : r.trace) {
            json step = {{"point", std::string(to_string(ev.point))}, {"partc", ev.partc}, {"edge", ev.edge}};
            step["i"] = ev.i ? json(*ev.i) : json(nullptr);
            step["old_partc"] = ev.old_partc ? json(*ev.old_partc) : json(nullptr);
            trace.push_back(std::move(step));
        }
        out["trace"] = std::move(trace);
    }
    return out;
}

}  // namespace schurkit
