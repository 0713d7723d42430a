#include "pekt/json_io.hpp"

#include "pekt/errors.hpp"

#include <sstream>

namespace pekt {

nlohmann::ordered_json exponents_to_json(const Partition& monomial) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    const CycleType type(monomial);
    for (auto [k, e] : type.multiplicities()) j[std::to_string(k)] = e;
    return j;
}

nlohmann::ordered_json to_json(const LambdaElement& a) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : a.terms())
        terms.push_back({{"powersum_exponents", exponents_to_json(mono)},
                         {"coefficient", c.to_strings()}});
    return terms;
}

LambdaElement lambda_from_json(const nlohmann::json& j, unsigned weight_cap, unsigned q_order,
                               Algebra algebra) {
    if (!j.is_array()) throw DomainError("lambda element JSON must be an array");
    LambdaElement out(weight_cap, q_order, algebra);
    for (const auto& term : j) {
        std::vector<unsigned> parts;
        for (const auto& [key, value] : term.at("powersum_exponents").items()) {
            const unsigned k = static_cast<unsigned>(std::stoul(key));
            parts.insert(parts.end(), value.get<unsigned>(), k);
        }
        std::vector<Rational> coeffs;
        for (const auto& s : term.at("coefficient")) coeffs.push_back(parse_rational(s.get<std::string>()));
        if (coeffs.size() < static_cast<std::size_t>(q_order) + 1)
            throw DomainError("coefficient list shorter than the q-order");
        out.add_term(Partition(std::move(parts)), QSeries(std::move(coeffs), q_order));
    }
    return out;
}

nlohmann::ordered_json to_json(const JSeries& j) {
    nlohmann::ordered_json out;
    out["mode"] = to_string(j.provenance);
    out["algebra"] = to_string(j.value.algebra());
    out["q_order"] = j.q_order();
    out["weight_cap"] = j.weight_cap();
    out["complete_weight"] = j.complete_weight;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : j.value.terms()) {
        if (mono.size() > j.complete_weight) break;
        terms.push_back({{"powersum_exponents", exponents_to_json(mono)},
                         {"q_coefficients", c.to_strings()}});
    }
    out["terms"] = std::move(terms);
    return out;
}

nlohmann::ordered_json to_json(const CharacterTable& t) {
    nlohmann::ordered_json out;
    out["n"] = t.n();
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : t.classes()) classes.push_back(c.to_partition().parts());
    auto irreps = nlohmann::ordered_json::array();
    for (const auto& p : t.irreps()) irreps.push_back(p.parts());
    auto values = nlohmann::ordered_json::array();
    for (const auto& row : t.values()) {
        auto r = nlohmann::ordered_json::array();
        // Character values of S_n for n <= 12 fit comfortably in 64 bits.
        for (const auto& v : row) r.push_back(v.get_si());
        values.push_back(std::move(r));
    }
    out["classes"] = std::move(classes);
    out["irreps"] = std::move(irreps);
    out["values"] = std::move(values);
    return out;
}

std::string to_csv(const CharacterTable& t) {
    std::ostringstream os;
    os << "irrep";
    for (const auto& c : t.classes()) os << ",\"" << c.to_partition().to_string() << "\"";
    os << "\n";
    for (std::size_t i = 0; i < t.irreps().size(); ++i) {
        os << "\"" << t.irreps()[i].to_string() << "\"";
        for (const auto& v : t.values()[i]) os << "," << v.get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace pekt
