#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cyk/linalg.hpp"

namespace cyk {

using json = nlohmann::ordered_json;

// Complex numbers travel as [re, im]; matrices as arrays of rows.
json to_json(cplx z);
json to_json(const CVec& v);
json to_json(const CMat& m);
json to_json(const RMat& m);

cplx complex_from_json(const json& j);
CVec cvec_from_json(const json& j);
CMat cmat_from_json(const json& j);

// "0.1+0.2i", "-3i", "2", "1e-3-4.5i".
cplx parse_complex(const std::string& text);
// Comma separated list of parse_complex items.
CVec parse_complex_list(const std::string& text);

}  // namespace cyk
