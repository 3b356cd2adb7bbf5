#include "bcx/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace bcx {

namespace {

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex c) {
  return Json::array({c.real(), c.imag()});
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

Eigen::Index index_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string(what) + ": field \"" + key + "\" must be a non-negative integer");
  return static_cast<Eigen::Index>(v.get<long long>());
}

CVector cvector_from_json(const Json& j, Eigen::Index n, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
    throw ParseError(std::string(what) + ": component length does not match dim");
  CVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v[k] = complex_from_json(j[static_cast<std::size_t>(k)], what);
  return v;
}

Json cvector_to_json(const CVector& v) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(complex_to_json(v[k]));
  return a;
}

CMatrix cmatrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw ParseError(std::string(what) + ": row count does not match rows");
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError(std::string(what) + ": column count does not match cols");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

Json cmatrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json scalar_to_json(Bicomplex a) {
  return Json{{"e1", complex_to_json(a.z1)}, {"e2", complex_to_json(a.z2)}};
}

Bicomplex scalar_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("scalar: expected an object");
  if (j.contains("e1") || j.contains("e2")) {
    return {complex_from_json(field(j, "e1", "scalar"), "scalar e1"),
            complex_from_json(field(j, "e2", "scalar"), "scalar e2")};
  }
  if (j.contains("z") || j.contains("w")) {
    return from_cartesian(complex_from_json(field(j, "z", "scalar"), "scalar z"),
                          complex_from_json(field(j, "w", "scalar"), "scalar w"));
  }
  throw ParseError("scalar: expected fields e1/e2 or z/w");
}

Json hyp_to_json(Hyperbolic h) {
  return Json::array({h.x1, h.x2});
}

Hyperbolic hyp_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("hyperbolic: expected [x1, x2]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const BCVector& x) {
  return Json{{"dim", x.dim()}, {"e1", cvector_to_json(x.v1)}, {"e2", cvector_to_json(x.v2)}};
}

BCVector vector_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("vector: expected an object");
  const Json& c1 = field(j, "e1", "vector");
  if (!c1.is_array()) throw ParseError("vector: e1 must be an array");
  const Eigen::Index n = j.contains("dim") ? index_field(j, "dim", "vector")
                                           : static_cast<Eigen::Index>(c1.size());
  return {cvector_from_json(c1, n, "vector e1"),
          cvector_from_json(field(j, "e2", "vector"), n, "vector e2")};
}

Json matrix_to_json(const BCMatrix& a) {
  return Json{{"rows", a.rows()},
              {"cols", a.cols()},
              {"e1", cmatrix_to_json(a.A1)},
              {"e2", cmatrix_to_json(a.A2)}};
}

BCMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected an object");
  const Eigen::Index rows = index_field(j, "rows", "matrix");
  const Eigen::Index cols = index_field(j, "cols", "matrix");
  return {cmatrix_from_json(field(j, "e1", "matrix"), rows, cols, "matrix e1"),
          cmatrix_from_json(field(j, "e2", "matrix"), rows, cols, "matrix e2")};
}

Json series_to_json(const PowerSeries& f) {
  Json coeffs = Json::array();
  for (const auto& a : f.coeffs) coeffs.push_back(scalar_to_json(a));
  return Json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("series: expected an object");
  const Json& coeffs = field(j, "coeffs", "series");
  if (!coeffs.is_array() || coeffs.empty())
    throw ParseError("series: coeffs must be a non-empty array");
  if (j.contains("degree") &&
      index_field(j, "degree", "series") != static_cast<Eigen::Index>(coeffs.size()) - 1)
    throw ParseError("series: degree does not match the number of coefficients");
  std::vector<Bicomplex> c;
  c.reserve(coeffs.size());
  for (const auto& item : coeffs) c.push_back(scalar_from_json(item));
  return PowerSeries(std::move(c));
}

Json weights_to_json(const WeightSequence& w) {
  Json beta = Json::array();
  for (const auto& h : w.beta) beta.push_back(hyp_to_json(h));
  return Json{{"degree", w.degree()}, {"beta", std::move(beta)}};
}

WeightSequence weights_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("weights: expected an object");
  const Json& beta = field(j, "beta", "weights");
  if (!beta.is_array() || beta.empty())
    throw ParseError("weights: beta must be a non-empty array");
  if (j.contains("degree") &&
      index_field(j, "degree", "weights") != static_cast<Eigen::Index>(beta.size()) - 1)
    throw ParseError("weights: degree does not match the number of weights");
  std::vector<Hyperbolic> b;
  b.reserve(beta.size());
  for (const auto& item : beta) b.push_back(hyp_from_json(item));
  return WeightSequence(std::move(b));
}

Json norm_report_to_json(const OperatorNormReport& r) {
  return Json{{"dnorm", hyp_to_json(r.dnorm)}, {"euclid", r.euclid}};
}

Json duality_report_to_json(const DualityReport& r) {
  return Json{{"max_violation_a", hyp_to_json(r.max_violation_a)},
              {"max_violation_b", hyp_to_json(r.max_violation_b)},
              {"trials", r.trials},
              {"seed", r.seed}};
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

}  // namespace bcx
