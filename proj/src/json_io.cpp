#include "cyk/json_io.hpp"

#include <cctype>
#include <cstdlib>

#include "cyk/error.hpp"

namespace cyk {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const CMat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json to_json(const RMat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  throw Error(ErrorCode::MalformedInput, "expected a complex number as [re, im]");
}

CVec cvec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedInput, "expected an array of complex numbers");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

CMat cmat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(ErrorCode::MalformedInput, "expected a matrix as an array of rows");
  const std::size_t cols = j[0].size();
  CMat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorCode::MalformedInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
  }
  return m;
}

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty complex number");
  const auto bad = [&] { return Error(ErrorCode::MalformedInput, "cannot parse complex number '" + raw + "'"); };
  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    std::size_t used = static_cast<std::size_t>(end - begin);
    if (used == 0) {
      // bare "i", "+i", "-i"
      std::size_t k = 0;
      double sign = 1.0;
      if (begin[0] == '+' || begin[0] == '-') {
        sign = begin[0] == '-' ? -1.0 : 1.0;
        k = 1;
      }
      if (begin[k] != 'i') throw bad();
      im += sign;
      pos += k + 1;
      continue;
    }
    pos += used;
    if (pos < s.size() && s[pos] == 'i') {
      im += v;
      ++pos;
    } else {
      re += v;
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw bad();
  }
  return {re, im};
}

CVec parse_complex_list(const std::string& text) {
  std::vector<cplx> vals;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    vals.push_back(parse_complex(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  CVec v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

}  // namespace cyk
