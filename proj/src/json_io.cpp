#include "floercone/json_io.hpp"

#include <limits>

#include "floercone/error.hpp"

namespace floercone {

Json to_json(FilteredComplex const& c)
{
    Json j;
    j["generators"] = Json::array();
    for (auto const& g : c.generators())
        j["generators"].push_back({{"name", g.name}, {"alexander", g.alexander}, {"maslov_x4", g.maslov_x4}});
    j["differential"] = Json::array();
    for (auto const& e : c.entries())
        j["differential"].push_back({{"from", c.generator(e.from).name},
                                     {"to", c.generator(e.to).name},
                                     {"u_power", e.u_power}});
    return j;
}

FilteredComplex complex_from_json(Json const& j)
{
    FilteredComplex c;
    try
    {
        for (auto const& g : j.at("generators"))
            c.add_generator({g.at("name").get<std::string>(), g.at("alexander").get<int>(),
                             g.at("maslov_x4").get<int>()});
        for (auto const& e : j.at("differential"))
            c.toggle_entry(e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                           e.at("u_power").get<int>());
    }
    catch (nlohmann::json::exception const& ex)
    {
        throw Error(ErrorKind::Parse, ex.what());
    }
    catch (Error const& ex)
    {
        throw Error(ErrorKind::Parse, ex.what());
    }
    return c;
}

namespace {

Json integer_json(BigInt const& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

} // namespace

Json to_json(Rational const& r)
{
    return {{"num", integer_json(numerator(r))}, {"den", integer_json(denominator(r))}};
}

Rational rational_from_json(Json const& j)
{
    try
    {
        auto field = [&](char const* key) {
            auto const& v = j.at(key);
            return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
        };
        return parse_rational(field("num") + "/" + field("den"));
    }
    catch (nlohmann::json::exception const& ex)
    {
        throw Error(ErrorKind::Parse, ex.what());
    }
}

Json to_json(GradedRanks const& g)
{
    Json j;
    j["keys"] = Json::array();
    for (GradingKey k : g.keys)
        j["keys"].push_back(k == GradingKey::alexander ? "alexander" : "maslov_x4");
    j["ranks"] = Json::array();
    for (auto const& [key, r] : g.ranks)
        j["ranks"].push_back({{"key", key}, {"rank", r}});
    j["torsion"] = Json::array();
    for (auto const& [key, orders] : g.torsion)
        j["torsion"].push_back({{"key", key}, {"orders", orders}});
    j["total"] = g.total();
    return j;
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

} // namespace floercone
