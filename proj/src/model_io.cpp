#include "resloc/model_io.hpp"

#include <fstream>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

long long parse_exponent(const std::string& key) {
    try {
        std::size_t used = 0;
        long long e = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument("");
        return e;
    } catch (const std::exception&) {
        fail(Errc::InvalidModel, "exponent key '" + key + "' is not an integer");
    }
}

nlohmann::json load_json(const std::string& path, Errc code) {
    std::ifstream in(path);
    if (!in) fail(code, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        fail(code, "bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace

nlohmann::json laurent_to_json(const LaurentPolynomial& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
    return j;
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(Errc::InvalidModel, "Laurent polynomial must be a JSON object");
    LaurentPolynomial p;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            fail(Errc::InvalidModel, "coefficient of u^" + key + " must be a rational string");
        p += LaurentPolynomial::monomial(Rational::parse(value.get<std::string>()),
                                         parse_exponent(key));
    }
    return p;
}

nlohmann::json model_to_json(const ManifoldModel& m) {
    nlohmann::json j;
    j["theory"] = theory_name(m.theory);
    j["name"] = m.name;
    j["components"] = nlohmann::json::array();
    for (const auto& c : m.components) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["weights"] = c.weights;
        jc["restriction"] = laurent_to_json(c.restriction);
        if (c.side == Side::Unassigned)
            jc["side"] = nullptr;
        else
            jc["side"] = side_name(c.side);
        j["components"].push_back(std::move(jc));
    }
    return j;
}

ManifoldModel model_from_json(const nlohmann::json& j) {
    ManifoldModel m;
    if (!j.is_object() || !j.contains("theory") || !j.contains("components"))
        fail(Errc::InvalidModel, "model needs 'theory' and 'components'");
    m.theory = theory_from_name(j.at("theory").get<std::string>());
    m.name = j.value("name", std::string{});
    if (!j.at("components").is_array()) fail(Errc::InvalidModel, "'components' must be an array");
    for (const auto& jc : j.at("components")) {
        FixedComponent c;
        if (!jc.contains("id") || !jc.contains("weights") || !jc.contains("restriction"))
            fail(Errc::InvalidModel, "component needs 'id', 'weights' and 'restriction'");
        c.id = jc.at("id").get<std::string>();
        for (const auto& w : jc.at("weights")) {
            if (!w.is_number_integer())
                fail(Errc::InvalidModel, "weights of '" + c.id + "' must be integers");
            c.weights.push_back(w.get<long long>());
        }
        c.restriction = laurent_from_json(jc.at("restriction"));
        if (jc.contains("side") && !jc.at("side").is_null()) {
            const std::string s = jc.at("side").get<std::string>();
            if (s == "plus")
                c.side = Side::Plus;
            else if (s == "minus")
                c.side = Side::Minus;
            else
                fail(Errc::InvalidModel, "side of '" + c.id + "' must be plus, minus or null");
        }
        m.components.push_back(std::move(c));
    }
    m.validate();
    return m;
}

ManifoldModel read_model_file(const std::string& path) {
    return model_from_json(load_json(path, Errc::InvalidModel));
}

void write_model_file(const ManifoldModel& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::InvalidModel, "cannot write '" + path + "'");
    out << model_to_json(m).dump(2) << "\n";
}

FglTable fgl_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("entries"))
        fail(Errc::InvalidFgl, "formal group law table needs 'order' and 'entries'");
    if (!j.at("order").is_number_integer()) fail(Errc::InvalidFgl, "'order' must be an integer");
    FglTable table{FormalGroupLaw(j.at("order").get<int>()), std::nullopt};
    for (const auto& entry : j.at("entries")) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            fail(Errc::InvalidFgl, "each entry must be [k, l, laurent]");
        table.law.set(entry[0].get<int>(), entry[1].get<int>(), laurent_from_json(entry[2]));
    }
    if (j.contains("euler")) table.euler = RationalFunction(laurent_from_json(j.at("euler")));
    return table;
}

FglTable read_fgl_file(const std::string& path) {
    return fgl_from_json(load_json(path, Errc::InvalidFgl));
}

}  // namespace resloc
