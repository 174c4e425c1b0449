#include "doctest.h"
#include "ybkit/dump.hpp"
#include "ybkit/sampling.hpp"
#include "ybkit/six_vertex.hpp"
#include "ybkit/slmn.hpp"

using namespace ybkit;

TEST_CASE("matrix dump round trip is byte exact") {
  const RMatrix r = build_slmn_root_of_unity({2, 1, 7, 3, Cplx(0.1234567890123, -3.3e-7), Cplx(1.0 / 3.0, 2.0)});
  nlohmann::ordered_json meta;
  meta["model"] = "slmn";
  meta["note"] = "x";
  const std::string first = write_matrix_dump(r, meta);
  const MatrixDump back = read_matrix_dump(first);
  CHECK(back.matrix == r);
  CHECK(back.metadata["model"] == "slmn");
  CHECK(write_matrix_dump(back.matrix, back.metadata) == first);
}

TEST_CASE("matrix dump layout") {
  RMatrix r(2, 3);
  r(1, 2, 0, 1) = Cplx(0.5, -2.0);
  const auto j = nlohmann::json::parse(write_matrix_dump(r));
  CHECK(j["dims"] == nlohmann::json::array({2, 3}));
  CHECK(j["entries"][1][2][0][1][0] == 0.5);
  CHECK(j["entries"][1][2][0][1][1] == -2.0);
  CHECK(j["entries"][0][0][0][0][0] == 0.0);
}

TEST_CASE("malformed matrix dumps are rejected") {
  CHECK_THROWS_AS(read_matrix_dump("not json"), std::runtime_error);
  CHECK_THROWS_AS(read_matrix_dump(R"({"format":"ybkit-rmatrix/1","dims":[2,2],"entries":[]})"), std::runtime_error);
  CHECK_THROWS_AS(read_matrix_dump(R"({"format":"other","dims":[1,1],"entries":[[[[[0,0]]]]]})"), std::runtime_error);
  CHECK_NOTHROW(read_matrix_dump(R"({"format":"ybkit-rmatrix/1","dims":[1,1],"entries":[[[[[1,0]]]]]})"));
}

TEST_CASE("weight dump round trip") {
  Sampler s(1);
  const auto mod = s.modulus<double>();
  const auto p = s.curve_point<double>(3, mod), q = s.curve_point<double>(3, mod);
  const auto w = cp_weight_tables(p, q);
  const std::string first = write_weight_dump(p, q, w);
  const WeightDump back = read_weight_dump(first);
  CHECK(back.weights.W == w.W);
  CHECK(back.weights.Wb == w.Wb);
  CHECK(back.p.d == p.d);
  CHECK(write_weight_dump(back.p, back.q, back.weights) == first);
  const auto j = nlohmann::json::parse(first);
  CHECK(j["W"][0][0] == 1.0);
  CHECK(j["N"] == 3);
}
