#include "hmf/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hmf {

using nlohmann::json;

json series_to_json(const HilbertSeries& s) {
    json terms = json::array();
    for (const auto& [nu, c] : s.coeffs) {
        terms.push_back({{"a", nu.a.str()},
                         {"b", nu.b.str()},
                         {"coeff", {rat_str(c.x), rat_str(c.y)}}});
    }
    return json{{"schema", kSchemaVersion},
                {"weight", {s.weight.first, s.weight.second}},
                {"trace_bound", s.bound},
                {"denom", s.denom},
                {"terms", terms}};
}

HilbertSeries series_from_json(const json& doc) {
    if (!doc.is_object() || doc.value("schema", 0) != kSchemaVersion)
        throw std::invalid_argument("series document: bad or missing schema");
    HilbertSeries s({doc.at("weight").at(0).get<int>(), doc.at("weight").at(1).get<int>()},
                    doc.at("trace_bound").get<int>(), doc.at("denom").get<long>());
    for (const auto& t : doc.at("terms")) {
        NuIndex nu(Int(t.at("a").get<std::string>()), Int(t.at("b").get<std::string>()));
        QuadElem c(parse_rat(t.at("coeff").at(0).get<std::string>()),
                   parse_rat(t.at("coeff").at(1).get<std::string>()));
        s.set_coeff(nu, c);
    }
    return s;
}

std::string series_to_csv(const HilbertSeries& s) {
    std::ostringstream out;
    out << "a,b,x_num,x_den,y_num,y_den\n";
    for (const auto& [nu, c] : s.coeffs) {
        out << nu.a.str() << ',' << nu.b.str() << ',' << numerator(c.x).str() << ','
            << denominator(c.x).str() << ',' << numerator(c.y).str() << ','
            << denominator(c.y).str() << '\n';
    }
    return out.str();
}

}  // namespace hmf
