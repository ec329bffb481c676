#include "touchard/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace touchard {

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(c.to_string());
    return arr;
}

Json to_json(const WeylExpr& w) {
    Json arr = Json::array();
    for (const auto& [k, c] : w.terms())
        arr.push_back(Json::array({k.first, k.second, c.to_string()}));
    return arr;
}

Json to_json(const TouchardPoly& t) {
    Json j;
    j["m"] = t.m;
    j["n"] = t.n;
    j["coeffs"] = to_json(t.poly);
    return j;
}

Json to_json(const Triangle& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(v.to_string());
        rows.push_back(std::move(r));
    }
    Json j;
    j["m"] = t.m;
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json params = Json::object();
    for (const auto& [name, value] : r.parameters)
        params[name] = value;
    Json j;
    j["identity_id"] = r.identity_id;
    j["parameters"] = std::move(params);
    j["verified_order"] = r.verified_order;
    j["status"] = r.passed() ? "pass" : "fail";
    if (r.first_mismatch) {
        Json mm;
        mm["index"] = r.first_mismatch->index;
        mm["where"] = r.first_mismatch->where;
        mm["expected"] = to_json(r.first_mismatch->expected);
        mm["actual"] = to_json(r.first_mismatch->actual);
        j["first_mismatch"] = std::move(mm);
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("poly_from_json: expected an array");
    std::vector<Rational> c;
    for (const auto& v : j)
        c.push_back(Rational::parse(v.get<std::string>()));
    return Poly(std::move(c));
}

WeylExpr weyl_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("weyl_from_json: expected an array");
    WeylExpr::TermMap t;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw std::invalid_argument("weyl_from_json: terms are [a, b, \"coeff\"] triples");
        t[{term[0].get<unsigned>(), term[1].get<unsigned>()}] +=
            Rational::parse(term[2].get<std::string>());
    }
    return WeylExpr(std::move(t));
}

std::string triangle_to_csv(const Triangle& t) {
    std::ostringstream os;
    os << "n,k,value\n";
    for (unsigned n = 0; n < t.rows.size(); ++n)
        for (unsigned i = 0; i < t.rows[n].size(); ++i)
            os << n << ',' << i + row_k_begin(n) << ',' << t.rows[n][i] << '\n';
    return os.str();
}

}  // namespace touchard
