/**
 * @file config.hpp
 * @brief Quiver config files (JSON) -> RootDatum.
 *
 * Schema, with 1-based vertices:
 *   {"n":2, "arrows":[[1,2]], "d":{"1,2":1,"2,1":1}, "f":[1,1]}
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qhall/root_datum.hpp"

namespace qhall {

inline QuiverSpec parse_quiver_json(const std::string& text, const std::string& origin = "<input>") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(origin + ": " + e.what());
    }
    QuiverSpec spec;
    try {
        spec.n = j.at("n").get<int>();
        if (spec.n <= 0) throw input_error(origin + ": n must be positive");
        spec.d = IntMat::Zero(spec.n, spec.n);
        spec.f = IntVec::Ones(spec.n);
        for (const auto& arrow : j.at("arrows")) {
            if (!arrow.is_array() || arrow.size() != 2)
                throw input_error(origin + ": each arrow must be a pair [i,j]");
            spec.arrows.emplace_back(arrow[0].get<int>() - 1, arrow[1].get<int>() - 1);
        }
        if (j.contains("d"))
            for (const auto& [key, val] : j.at("d").items()) {
                auto comma = key.find(',');
                if (comma == std::string::npos)
                    throw input_error(origin + ": d keys must look like \"i,j\"");
                int a = std::stoi(key.substr(0, comma)) - 1;
                int b = std::stoi(key.substr(comma + 1)) - 1;
                if (a < 0 || a >= spec.n || b < 0 || b >= spec.n)
                    throw input_error(origin + ": d key vertex out of range");
                spec.d(a, b) = val.get<int>();
            }
        else
            for (auto [i, jj] : spec.arrows) { spec.d(i, jj) = 1; spec.d(jj, i) = 1; }
        if (j.contains("f")) {
            const auto& fv = j.at("f");
            if (static_cast<int>(fv.size()) != spec.n)
                throw input_error(origin + ": f must have length n");
            for (int i = 0; i < spec.n; ++i) spec.f[i] = fv[i].get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(origin + ": " + e.what());
    }
    return spec;
}

inline RootDatum load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return build_root_datum(parse_quiver_json(ss.str(), path));
}

} // namespace qhall
