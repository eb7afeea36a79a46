#include "seqcap/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

namespace seqcap {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                        const std::string& what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    fail("ParseError", what + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail("ParseError", what + ": expected " + std::to_string(cols) + " columns");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        fail("ParseError", what + ": entries must be [re, im] number pairs");
      }
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

Vector vector_from_json(const json& j, Eigen::Index dim, const std::string& what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    fail("ParseError", what + ": expected " + std::to_string(dim) + " amplitudes");
  }
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& entry = j[static_cast<std::size_t>(i)];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      fail("ParseError", what + ": amplitudes must be [re, im] number pairs");
    }
    v(i) = Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return v;
}

}  // namespace

json channel_to_json(const QuantumChannel& c) {
  json j;
  j["dim_in"] = c.dim_in;
  j["dim_out"] = c.dim_out;
  json kraus = json::array();
  for (const Matrix& k : c.kraus) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  return j;
}

QuantumChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim_in") || !j.contains("dim_out") || !j.contains("kraus")) {
    fail("ParseError", "channel JSON needs dim_in, dim_out, kraus");
  }
  if (!j["dim_in"].is_number_integer() || !j["dim_out"].is_number_integer() ||
      !j["kraus"].is_array() || j["kraus"].empty()) {
    fail("ParseError", "channel JSON fields have wrong types");
  }
  QuantumChannel c;
  c.dim_in = j["dim_in"].get<int>();
  c.dim_out = j["dim_out"].get<int>();
  if (c.dim_in < 1 || c.dim_out < 1) fail("ParseError", "channel dimensions must be positive");
  for (const json& k : j["kraus"]) {
    c.kraus.push_back(matrix_from_json(k, c.dim_out, c.dim_in, "kraus operator"));
  }
  return c;
}

json code_to_json(const Code& code) {
  json j;
  j["physical_dim"] = code.physical_dim;
  json words = json::array();
  for (const Vector& w : code.words) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      amps.push_back(json::array({w(i).real(), w(i).imag()}));
    }
    words.push_back(std::move(amps));
  }
  j["words"] = std::move(words);
  return j;
}

Code code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("physical_dim") || !j.contains("words")) {
    fail("ParseError", "code JSON needs physical_dim and words");
  }
  if (!j["physical_dim"].is_number_integer() || !j["words"].is_array() || j["words"].empty()) {
    fail("ParseError", "code JSON fields have wrong types");
  }
  Code code;
  code.physical_dim = j["physical_dim"].get<int>();
  if (code.physical_dim < 1) fail("ParseError", "physical_dim must be positive");
  for (const json& w : j["words"]) {
    code.words.push_back(vector_from_json(w, code.physical_dim, "code word"));
  }
  return code;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("ParseError", std::string(e.what()));
  }
  return j;
}

}  // namespace

QuantumChannel load_channel(const std::string& path) {
  return channel_from_json(parse_file(path));
}

Code load_code(const std::string& path) {
  return code_from_json(parse_file(path));
}

std::string format_float(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace seqcap
