#include "qdnc/statefile.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace qdnc {

namespace {

using nlohmann::json;

Matrix matrix_from_parts(const json& re, const json& im, Eigen::Index n) {
  if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(n) ||
      im.size() != static_cast<std::size_t>(n)) {
    throw statefile_error("state file: re/im must be " + std::to_string(n) + " rows each");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& re_row = re[static_cast<std::size_t>(i)];
    const json& im_row = im[static_cast<std::size_t>(i)];
    if (!re_row.is_array() || !im_row.is_array() ||
        re_row.size() != static_cast<std::size_t>(n) ||
        im_row.size() != static_cast<std::size_t>(n)) {
      throw statefile_error("state file: rows must hold " + std::to_string(n) + " numbers each");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& re_v = re_row[static_cast<std::size_t>(j)];
      const json& im_v = im_row[static_cast<std::size_t>(j)];
      if (!re_v.is_number() || !im_v.is_number()) {
        throw statefile_error("state file: matrix entries must be numbers");
      }
      m(i, j) = Complex(re_v.get<double>(), im_v.get<double>());
    }
  }
  return m;
}

}  // namespace

DensityMatrix read_state(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw statefile_error(std::string("state file: not parseable JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim_a") || !doc.contains("dim_b") ||
      !doc.contains("re") || !doc.contains("im")) {
    throw statefile_error("state file: need an object with dim_a, dim_b, re, im");
  }
  if (!doc["dim_a"].is_number_integer() || !doc["dim_b"].is_number_integer()) {
    throw statefile_error("state file: dim_a and dim_b must be integers");
  }
  const int dim_a = doc["dim_a"].get<int>();
  const int dim_b = doc["dim_b"].get<int>();
  if (dim_a < 1 || dim_b < 1) {
    throw statefile_error("state file: dimensions must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  Matrix m = matrix_from_parts(doc["re"], doc["im"], n);
  return DensityMatrix(std::move(m), dim_a, dim_b);
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw statefile_error("state file: cannot open " + path);
  return read_state(in);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  const Eigen::Index n = rho.matrix().rows();
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < n; ++j) {
      re_row.push_back(rho.matrix()(i, j).real());
      im_row.push_back(rho.matrix()(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json doc;
  doc["dim_a"] = rho.dim_a();
  doc["dim_b"] = rho.dim_b();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  out << doc.dump(2) << '\n';
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw statefile_error("state file: cannot open " + path + " for writing");
  write_state(out, rho);
  out.flush();
  if (!out) throw statefile_error("state file: write to " + path + " failed");
}

}  // namespace qdnc
