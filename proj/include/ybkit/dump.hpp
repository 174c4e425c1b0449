#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ybkit/chiral_potts.hpp"
#include "ybkit/rmatrix.hpp"

namespace ybkit {

// Text dumps are JSON documents. Doubles are written in shortest
// round-trip form, so write -> read -> write reproduces the bytes.

struct MatrixDump {
  RMatrix matrix;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

/// {"format", "dims": [d1, d2], "metadata", "entries"} with entries nested
/// as [i][j][k][l] -> [re, im].
std::string write_matrix_dump(const RMatrix& r,
                              const nlohmann::ordered_json& metadata = nlohmann::ordered_json::object());
/// Throws std::runtime_error on malformed input.
MatrixDump read_matrix_dump(std::string_view text);

struct WeightDump {
  CPPoint p;
  CPPoint q;
  CPWeights weights;
};

std::string write_weight_dump(const CPPoint& p, const CPPoint& q, const CPWeights& w);
WeightDump read_weight_dump(std::string_view text);

}  // namespace ybkit
