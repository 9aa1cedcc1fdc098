#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fockdict/fock_core.hpp"
#include "fockdict/quantize.hpp"

namespace fockdict::io {

using nlohmann::json;

// JSON: vectors are arrays of [re, im] (index = n); matrices are arrays of such rows.

inline json to_json(const CVector& v)
{
  json out = json::array();
  for (Eigen::Index n = 0; n < v.size(); ++n) out.push_back({v(n).real(), v(n).imag()});
  return out;
}

inline json to_json(const CMatrix& m)
{
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(CVector(m.row(r).transpose())));
  return out;
}

inline cplx complex_from_json(const json& j)
{
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline CVector vector_from_json(const json& j)
{
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a non-empty array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t n = 0; n < j.size(); ++n) v(static_cast<Eigen::Index>(n)) = complex_from_json(j[n]);
  return v;
}

inline CMatrix matrix_from_json(const json& j)
{
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const CVector row = vector_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != cols) throw std::invalid_argument("matrix rows differ in length");
    m.row(r) = row.transpose();
  }
  return m;
}

/// PolySymbol as an array of [m, n, re, im] (m = power of zbar, n = power of z).
inline json to_json(const PolySymbol& s)
{
  json out = json::array();
  for (const auto& [k, v] : s.coeffs()) out.push_back({k.first, k.second, v.real(), v.imag()});
  return out;
}

inline PolySymbol poly_symbol_from_json(const json& j)
{
  if (!j.is_array()) throw std::invalid_argument("expected an array of [m, n, re, im] entries");
  PolySymbol s;
  for (const auto& e : j) {
    if (!e.is_array() || (e.size() != 3 && e.size() != 4)) throw std::invalid_argument("symbol entries are [m, n, re] or [m, n, re, im]");
    s.add(e[0].get<int>(), e[1].get<int>(), {e[2].get<double>(), e.size() == 4 ? e[3].get<double>() : 0.0});
  }
  return s;
}

// CSV: 17 significant digits, which round-trips every double.

inline std::string format_double(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string to_csv(const CVector& v)
{
  std::string out;
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    out += std::to_string(n) + "," + format_double(v(n).real()) + "," + format_double(v(n).imag()) + "\n";
  }
  return out;
}

inline std::string to_csv(const CMatrix& m)
{
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out += std::to_string(r) + "," + std::to_string(c) + "," + format_double(m(r, c).real()) + "," + format_double(m(r, c).imag()) + "\n";
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

inline double parse_double(const std::string& s)
{
  // strtod rather than stod: stod rejects subnormals, which CSV output can contain
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("malformed number in CSV: " + s);
  return x;
}

}  // namespace detail

inline CVector vector_from_csv(const std::string& text)
{
  const auto rows = detail::csv_rows(text);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(rows.size()));
  for (const auto& r : rows) {
    if (r.size() != 3) throw std::invalid_argument("vector CSV rows are index,re,im");
    const auto n = std::stol(r[0]);
    if (n < 0 || n >= v.size()) throw std::invalid_argument("vector CSV index out of range");
    v(n) = {detail::parse_double(r[1]), detail::parse_double(r[2])};
  }
  return v;
}

inline CMatrix matrix_from_csv(const std::string& text)
{
  const auto rows = detail::csv_rows(text);
  long nr = 0, nc = 0;
  for (const auto& r : rows) {
    if (r.size() != 4) throw std::invalid_argument("matrix CSV rows are row,col,re,im");
    nr = std::max(nr, std::stol(r[0]) + 1);
    nc = std::max(nc, std::stol(r[1]) + 1);
  }
  CMatrix m = CMatrix::Zero(nr, nc);
  for (const auto& r : rows) m(std::stol(r[0]), std::stol(r[1])) = {detail::parse_double(r[2]), detail::parse_double(r[3])};
  return m;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

inline json read_json_file(const std::string& path)
{
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
}

}  // namespace fockdict::io
