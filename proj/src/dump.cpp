#include "ybkit/dump.hpp"

#include <stdexcept>

namespace ybkit {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kMatrixFormat = "ybkit-rmatrix/1";
constexpr const char* kWeightFormat = "ybkit-cp-weights/1";

Json pair(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx unpair(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("dump: expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("dump: parse error: ") + e.what());
  }
}

void expect_format(const Json& doc, const char* format) {
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != format)
    throw std::runtime_error(std::string("dump: expected format ") + format);
}

Json point_json(const CPPoint& p) {
  return Json{{"a", pair(p.a)}, {"b", pair(p.b)}, {"c", pair(p.c)}, {"d", pair(p.d)}};
}

CPPoint point_from(const Json& j, const Modulus& mod, int N) {
  return {unpair(j.at("a")), unpair(j.at("b")), unpair(j.at("c")), unpair(j.at("d")), mod, N};
}

Json table_json(const CPWeights::Vector& v) {
  Json out = Json::array();
  for (Eigen::Index n = 0; n < v.size(); ++n) out.push_back(pair(v(n)));
  return out;
}

CPWeights::Vector table_from(const Json& j, int N) {
  if (!j.is_array() || int(j.size()) != N) throw std::runtime_error("dump: weight table length != N");
  CPWeights::Vector v(N);
  for (int n = 0; n < N; ++n) v(n) = unpair(j[n]);
  return v;
}

}  // namespace

std::string write_matrix_dump(const RMatrix& r, const Json& metadata) {
  const auto d1 = r.dim_left(), d2 = r.dim_right();
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < d1; ++i) {
    Json ji = Json::array();
    for (Eigen::Index j = 0; j < d2; ++j) {
      Json jk = Json::array();
      for (Eigen::Index k = 0; k < d1; ++k) {
        Json jl = Json::array();
        for (Eigen::Index l = 0; l < d2; ++l) jl.push_back(pair(r(i, j, k, l)));
        jk.push_back(std::move(jl));
      }
      ji.push_back(std::move(jk));
    }
    entries.push_back(std::move(ji));
  }
  Json doc;
  doc["format"] = kMatrixFormat;
  doc["dims"] = Json::array({d1, d2});
  doc["metadata"] = metadata.is_null() ? Json::object() : metadata;
  doc["entries"] = std::move(entries);
  return doc.dump(1) + "\n";
}

MatrixDump read_matrix_dump(std::string_view text) {
  const Json doc = parse(text);
  expect_format(doc, kMatrixFormat);
  try {
    const auto& dims = doc.at("dims");
    if (!dims.is_array() || dims.size() != 2) throw std::runtime_error("dump: dims must be [d1, d2]");
    const Eigen::Index d1 = dims[0].get<Eigen::Index>(), d2 = dims[1].get<Eigen::Index>();
    MatrixDump out{RMatrix(d1, d2), doc.value("metadata", Json::object())};
    const auto& e = doc.at("entries");
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d2; ++j)
        for (Eigen::Index k = 0; k < d1; ++k)
          for (Eigen::Index l = 0; l < d2; ++l) out.matrix(i, j, k, l) = unpair(e.at(i).at(j).at(k).at(l));
    if (!out.matrix.all_finite()) throw std::runtime_error("dump: non-finite entry");
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error(std::string("dump: malformed matrix: ") + ex.what());
  }
}

std::string write_weight_dump(const CPPoint& p, const CPPoint& q, const CPWeights& w) {
  Json doc;
  doc["format"] = kWeightFormat;
  doc["N"] = w.N;
  doc["modulus"] = Json{{"k", pair(p.modulus.k)}, {"k_prime", pair(p.modulus.k_prime)}};
  doc["p"] = point_json(p);
  doc["q"] = point_json(q);
  doc["W"] = table_json(w.W);
  doc["Wb"] = table_json(w.Wb);
  return doc.dump(1) + "\n";
}

WeightDump read_weight_dump(std::string_view text) {
  const Json doc = parse(text);
  expect_format(doc, kWeightFormat);
  try {
    const int N = doc.at("N").get<int>();
    if (N < 2) throw std::runtime_error("dump: N must be at least 2");
    const Modulus mod{unpair(doc.at("modulus").at("k")), unpair(doc.at("modulus").at("k_prime"))};
    WeightDump out{point_from(doc.at("p"), mod, N), point_from(doc.at("q"), mod, N), {}};
    out.weights.N = N;
    out.weights.W = table_from(doc.at("W"), N);
    out.weights.Wb = table_from(doc.at("Wb"), N);
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error(std::string("dump: malformed weight table: ") + ex.what());
  }
}

}  // namespace ybkit
