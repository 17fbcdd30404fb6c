#pragma once

#include <string>
#include <vector>

#include "rayspace/fubini_study.hpp"
#include "rayspace/hilbert.hpp"

namespace rayspace {

// The on-disk state format is an array of [re, im] pairs, one per amplitude:
// [[1,0],[0,1]] is the second basis state of a 2-level system. A curve or
// loop is an array of such arrays.

StateVector parse_state_json(const std::string& text);
std::vector<StateVector> parse_state_list_json(const std::string& text);

std::string state_to_json(const StateVector& v);

// Reads the whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace rayspace
