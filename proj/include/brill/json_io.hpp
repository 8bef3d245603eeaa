#ifndef BRILL_JSON_IO_HPP
#define BRILL_JSON_IO_HPP

#include "brill/elements.hpp"
#include "brill/symbolic.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace brill {

using json = nlohmann::json;

namespace detail {
inline Mono mono_from_json(const json& a, std::size_t expected, const char* what) {
    if (!a.is_array() || a.size() != expected)
        throw std::invalid_argument(std::string(what) + ": bad exponent array");
    Mono m;
    m.reserve(a.size());
    for (const auto& v : a) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw std::invalid_argument(std::string(what) + ": exponents must be nonnegative integers");
        m.push_back(v.get<int>());
    }
    return m;
}
} // namespace detail

inline json to_json(const SymElement<Rational>& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back({{"c", rat_to_string(c)}, {"m", m}});
    return {{"n", f.n()}, {"grade", f.grade()}, {"terms", terms}};
}

inline SymElement<Rational> sym_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("grade") || !j.contains("terms"))
        throw std::invalid_argument("SymElement JSON: need n, grade, terms");
    SymElement<Rational> f(j.at("n").get<int>(), j.at("grade").get<int>());
    for (const auto& t : j.at("terms"))
        f.add(detail::mono_from_json(t.at("m"), f.n(), "SymElement"),
              rat_from_string(t.at("c").get<std::string>()));
    return f;
}

inline json to_json(const Tens2Element<Rational>& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back({{"c", rat_to_string(c)}, {"m1", k.first}, {"m2", k.second}});
    return {{"n", x.n()}, {"grade", {x.grade().first, x.grade().second}}, {"terms", terms}};
}

inline Tens2Element<Rational> tens2_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("grade") || !j.contains("terms"))
        throw std::invalid_argument("Tens2Element JSON: need n, grade, terms");
    auto g = j.at("grade");
    if (!g.is_array() || g.size() != 2) throw std::invalid_argument("Tens2Element JSON: grade must be [a, b]");
    Tens2Element<Rational> x(j.at("n").get<int>(), g[0].get<int>(), g[1].get<int>());
    for (const auto& t : j.at("terms"))
        x.add(detail::mono_from_json(t.at("m1"), x.n(), "Tens2Element"),
              detail::mono_from_json(t.at("m2"), x.n(), "Tens2Element"),
              rat_from_string(t.at("c").get<std::string>()));
    return x;
}

inline json to_json(const CurlyElement<Rational>& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back({{"c", rat_to_string(c)}, {"w", k.first}, {"m", k.second}});
    return {{"n", x.n()}, {"grade", {x.grade().first, x.grade().second}}, {"terms", terms}};
}

inline CurlyElement<Rational> curly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("grade") || !j.contains("terms"))
        throw std::invalid_argument("CurlyElement JSON: need n, grade, terms");
    auto g = j.at("grade");
    if (!g.is_array() || g.size() != 2) throw std::invalid_argument("CurlyElement JSON: grade must be [d, m]");
    CurlyElement<Rational> x(j.at("n").get<int>(), g[0].get<int>(), g[1].get<int>());
    for (const auto& t : j.at("terms"))
        x.add(detail::mono_from_json(t.at("w"), wedge_slots(x.n()), "CurlyElement"),
              detail::mono_from_json(t.at("m"), x.n(), "CurlyElement"),
              rat_from_string(t.at("c").get<std::string>()));
    return x;
}

/// symbolic_brill output:
/// {"d":..,"n":..,"equations":[{"coordinate":{"w":..,"m":..},
///   "poly":[{"c":"p/q","exps":[..]}]}]}
inline json equations_to_json(const std::vector<BrillEquation>& eqs, int d, int n) {
    const std::size_t nvars = sym_basis(n, d).size();
    json out = {{"d", d}, {"n", n}, {"equations", json::array()}};
    for (const auto& eq : eqs) {
        json poly = json::array();
        for (const auto& [e, c] : eq.poly.terms()) {
            std::vector<int> exps(e);
            exps.resize(nvars, 0);
            poly.push_back({{"c", rat_to_string(c)}, {"exps", exps}});
        }
        out["equations"].push_back(
            {{"coordinate", {{"w", eq.wedge}, {"m", eq.mono}}}, {"poly", poly}});
    }
    return out;
}

} // namespace brill

#endif
