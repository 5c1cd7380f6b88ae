#pragma once

#include <string>

#include <json.hpp>

#include "goldnug/dyadic.hpp"
#include "goldnug/fibonacci.hpp"
#include "goldnug/game.hpp"
#include "goldnug/nugget.hpp"

namespace goldnug {

using json = nlohmann::json;

inline json to_json(const Dyadic& d) { return d.to_string(); }

inline Dyadic dyadic_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a number string like \"5/8\", got " + j.dump());
    return Dyadic::parse(j.get<std::string>());
}

/// Numbers become strings; other games {"L": [...], "R": [...]}.
inline json to_json(const Universe& u, GameId g) {
    if (auto x = u.known_number(g)) return x->to_string();
    const GameRecord& rec = u.record(g);
    json left = json::array(), right = json::array();
    for (GameId o : rec.left) left.push_back(to_json(u, o));
    for (GameId o : rec.right) right.push_back(to_json(u, o));
    return json{{"L", std::move(left)}, {"R", std::move(right)}};
}

inline GameId game_from_json(Universe& u, const json& j) {
    if (j.is_string()) return u.from_number(Dyadic::parse(j.get<std::string>()));
    if (!j.is_object() || !j.contains("L") || !j.contains("R") || !j["L"].is_array() || !j["R"].is_array()) {
        throw std::invalid_argument("expected a game object {\"L\": [...], \"R\": [...]}, got " + j.dump());
    }
    std::vector<GameId> left, right;
    for (const json& o : j["L"]) left.push_back(game_from_json(u, o));
    for (const json& o : j["R"]) right.push_back(game_from_json(u, o));
    return u.make_game(std::move(left), std::move(right));
}

inline json to_json(const FibRepr& r) {
    json terms = json::object();
    for (auto [index, mult] : r.terms) terms[std::to_string(index)] = mult;
    return json{{"kind", to_string(r.kind)}, {"terms", terms}, {"text", r.to_text()}, {"digits", r.to_digits()}};
}

inline FibRepr repr_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    FibRepr r;
    if (kind == "zeckendorf") {
        r.kind = FibRepr::Kind::zeckendorf;
    } else if (kind == "least-odd") {
        r.kind = FibRepr::Kind::least_odd;
    } else if (kind == "even") {
        r.kind = FibRepr::Kind::even;
    } else {
        throw std::invalid_argument("unknown representation kind '" + kind + "'");
    }
    for (const auto& [index, mult] : j.at("terms").items()) r.terms[std::stoi(index)] = mult.get<int>();
    if (!r.valid()) throw std::invalid_argument("representation violates the rules of its kind: " + j.dump());
    return r;
}

inline json to_json(const RcfValue& v) {
    if (!v.is_switch) return v.value.to_string();
    return json{{"L", json::array({"1"})}, {"R", json::array({v.value.to_string()})}};
}

inline json to_json(const HeapClass& c) {
    using K = HeapClass::Kind;
    static const char* names[] = {"zero", "B", "AB0+1", "B2+1", "G0", "G"};
    json j{{"class", names[static_cast<int>(c.kind)]}};
    if (c.kind == K::g0 || c.kind == K::g_switch) {
        j["n"] = c.n.str();
        j["i"] = c.i.str();
    }
    return j;
}

}  // namespace goldnug
