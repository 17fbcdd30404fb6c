#include "rayspace/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rayspace {

namespace {

StateVector state_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("a state must be a non-empty array of [re, im] pairs");
    }
    std::vector<Complex> amps;
    amps.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number()) {
            throw ParseError("each amplitude must be an [re, im] number pair");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return StateVector(std::move(amps));
}

nlohmann::json parse_or_throw(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

StateVector parse_state_json(const std::string& text) {
    return state_from_json(parse_or_throw(text));
}

std::vector<StateVector> parse_state_list_json(const std::string& text) {
    const nlohmann::json j = parse_or_throw(text);
    if (!j.is_array()) {
        throw ParseError("expected an array of states");
    }
    std::vector<StateVector> states;
    states.reserve(j.size());
    for (const auto& entry : j) states.push_back(state_from_json(entry));
    return states;
}

std::string state_to_json(const StateVector& v) {
    std::string out = "[";
    char buf[64];
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ",";
        std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]", v[i].real(),
                      v[i].imag());
        out += buf;
    }
    out += "]";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace rayspace
