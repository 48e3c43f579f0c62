#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cakecut/allocation.hpp"
#include "cakecut/errors.hpp"
#include "cakecut/piece.hpp"
#include "cakecut/valuation.hpp"

namespace cakecut {

// File formats (all rationals are exact "p" / "p/q" strings):
//   instance:   {"agents":[{"id":1,"density":[{"from":"0","to":"1/2","value":"2"},...]},...]}
//   allocation: {"shares":[{"agent":1,"piece":[["0","1/3"],...]},...],"residue":[...]}

inline nlohmann::json piece_to_json(const Piece& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& iv : p.intervals()) out.push_back({rat_str(iv.lo), rat_str(iv.hi)});
    return out;
}

inline Piece piece_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("piece must be an array of [lo, hi] pairs");
    std::vector<Interval> ivs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw InputError("piece entry must be a [lo, hi] pair");
        ivs.push_back(Interval{rat_parse(pair[0].get<std::string>()),
                               rat_parse(pair[1].get<std::string>())});
    }
    return Piece::normalized(std::move(ivs), /*require_unit_range=*/true);
}

inline std::map<int, Valuation> instance_from_json(const nlohmann::json& j) {
    if (!j.contains("agents") || !j["agents"].is_array() || j["agents"].empty())
        throw InputError("instance needs a non-empty 'agents' array");
    std::map<int, Valuation> out;
    for (const auto& agent : j["agents"]) {
        if (!agent.contains("id") || !agent.contains("density"))
            throw InputError("agent entries need 'id' and 'density'");
        int id = agent["id"].get<int>();
        if (out.count(id)) throw InputError("duplicate agent id " + std::to_string(id));
        std::vector<DensitySegment> segs;
        for (const auto& seg : agent["density"]) {
            segs.push_back(DensitySegment{rat_parse(seg.at("from").get<std::string>()),
                                          rat_parse(seg.at("to").get<std::string>()),
                                          rat_parse(seg.at("value").get<std::string>())});
        }
        out.emplace(id, Valuation(std::move(segs)));
    }
    return out;
}

inline std::map<int, Valuation> load_instance(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("instance is not valid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

inline nlohmann::json instance_to_json(const std::map<int, Valuation>& vals) {
    nlohmann::json agents = nlohmann::json::array();
    for (const auto& [id, v] : vals) {
        nlohmann::json density = nlohmann::json::array();
        for (const auto& s : v.segments())
            density.push_back(
                {{"from", rat_str(s.lo)}, {"to", rat_str(s.hi)}, {"value", rat_str(s.density)}});
        agents.push_back({{"id", id}, {"density", density}});
    }
    return {{"agents", agents}};
}

inline nlohmann::json allocation_to_json(const PartialAllocation& a) {
    nlohmann::json shares = nlohmann::json::array();
    for (const auto& [agent, p] : a.shares)
        shares.push_back({{"agent", agent}, {"piece", piece_to_json(p)}});
    return {{"shares", shares}, {"residue", piece_to_json(a.residue)}};
}

inline PartialAllocation allocation_from_json(const nlohmann::json& j, const Piece& cake) {
    PartialAllocation out;
    out.cake = cake;
    if (!j.contains("shares") || !j["shares"].is_array())
        throw InputError("allocation needs a 'shares' array");
    for (const auto& s : j["shares"]) {
        int agent = s.at("agent").get<int>();
        if (out.shares.count(agent))
            throw InputError("duplicate share for agent " + std::to_string(agent));
        out.shares[agent] = piece_from_json(s.at("piece"));
    }
    if (j.contains("residue")) out.residue = piece_from_json(j["residue"]);
    return out;
}

inline PartialAllocation load_allocation(std::istream& in, const Piece& cake) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("allocation is not valid JSON: ") + e.what());
    }
    return allocation_from_json(j, cake);
}

}  // namespace cakecut
