// JSON documents and CSV surface export.
//
// Complex numbers are [re, im] pairs; arrays are row-major. A bundle wraps
// several documents: {"kind": "bundle", "documents": [...]}.
#pragma once

#include "frames/ambiguity.hpp"
#include "frames/core.hpp"
#include "frames/dft.hpp"
#include "frames/frame.hpp"
#include "frames/group.hpp"

#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace frames::io {

using json = nlohmann::json;

/// Malformed or inconsistent document.
class FormatError : public FrameError {
 public:
  using FrameError::FrameError;
};

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex number must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

inline ComplexVector vector_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of complex numbers");
  ComplexVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = complex_from_json(j[i]);
  return v;
}

/// Rows of [re, im] pairs.
inline json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("ragged matrix rows");
    m.row(static_cast<Index>(r)) = vector_from_json(j[r]).transpose();
  }
  return m;
}

namespace detail {

inline void require_kind(const json& j, const std::string& kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind) {
    throw FormatError("expected a document of kind '" + kind + "'");
  }
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  try {
    return j[name].get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace detail

inline json to_json(const Frame& x) {
  json vectors = json::array();
  for (Index j = 0; j < x.size(); ++j) vectors.push_back(vector_to_json(x.vector(j)));
  return {{"kind", "frame"}, {"d", x.dim()}, {"vectors", vectors}};
}

inline Frame frame_from_json(const json& j) {
  detail::require_kind(j, "frame");
  const auto d = detail::field<Index>(j, "d");
  if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].empty()) {
    throw FormatError("frame needs a non-empty 'vectors' array");
  }
  std::vector<ComplexVector> vs;
  for (const json& v : j["vectors"]) {
    vs.push_back(vector_from_json(v));
    if (vs.back().size() != d) throw FormatError("frame vector length differs from d");
  }
  return Frame::from_vectors(vs);
}

inline json to_json(const VVSignal& u) {
  return {{"kind", "signal"}, {"N", u.length()}, {"d", u.dim()}, {"values", matrix_to_json(u.values())}};
}

inline VVSignal signal_from_json(const json& j) {
  detail::require_kind(j, "signal");
  const auto n = detail::field<Index>(j, "N");
  const auto d = detail::field<Index>(j, "d");
  if (!j.contains("values")) throw FormatError("missing field 'values'");
  ComplexMatrix values = matrix_from_json(j["values"]);
  if (values.rows() != n || values.cols() != d) throw FormatError("signal values do not match N x d");
  return VVSignal(std::move(values));
}

inline json to_json(const OpTable& t) { return {{"kind", "optable"}, {"n", t.size()}, {"table", t.rows()}}; }

inline OpTable optable_from_json(const json& j) {
  detail::require_kind(j, "optable");
  const auto n = detail::field<int>(j, "n");
  auto rows = detail::field<std::vector<std::vector<int>>>(j, "table");
  if (static_cast<int>(rows.size()) != n) throw FormatError("table size does not match n");
  return OpTable(std::move(rows));
}

inline json to_json(const FiniteAbelianGroup& g) { return {{"kind", "group"}, {"cyclic_orders", g.cyclic_orders()}}; }

inline FiniteAbelianGroup group_from_json(const json& j) {
  detail::require_kind(j, "group");
  return FiniteAbelianGroup(detail::field<std::vector<int>>(j, "cyclic_orders"));
}

inline json to_json(const SelectionMap& s) { return {{"kind", "selection"}, {"N", s.modulus()}, {"s", s.values()}}; }

inline SelectionMap selection_from_json(const json& j) {
  detail::require_kind(j, "selection");
  return SelectionMap(detail::field<long>(j, "N"), detail::field<std::vector<long>>(j, "s"));
}

inline json bundle(std::vector<json> documents) {
  return {{"kind", "bundle"}, {"documents", std::move(documents)}};
}

/// The document itself if it has the requested kind, else the first bundle
/// member that does.
inline const json& find_document(const json& j, const std::string& kind) {
  if (j.is_object() && j.value("kind", "") == kind) return j;
  if (j.is_object() && j.value("kind", "") == "bundle" && j.contains("documents")) {
    for (const json& d : j["documents"]) {
      if (d.is_object() && d.value("kind", "") == kind) return d;
    }
  }
  throw FormatError("no document of kind '" + kind + "' found");
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline void save(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

/// m,n,re,im rows for a scalar surface.
inline void write_csv(std::ostream& os, const AmbiguitySurface& s) {
  const auto old = os.precision(17);
  os << "m,n,re,im\n";
  for (Index m = 0; m < s.size(); ++m) {
    for (Index n = 0; n < s.size(); ++n) {
      os << m << ',' << n << ',' << s(m, n).real() << ',' << s(m, n).imag() << '\n';
    }
  }
  os.precision(old);
}

/// m,n,q,re,im rows for a vector-valued surface.
inline void write_csv(std::ostream& os, const VVAmbiguitySurface& s) {
  const auto old = os.precision(17);
  os << "m,n,q,re,im\n";
  for (Index m = 0; m < s.length; ++m) {
    for (Index n = 0; n < s.length; ++n) {
      for (Index q = 0; q < s.dim; ++q) {
        const Complex z = s(m, n, q);
        os << m << ',' << n << ',' << q << ',' << z.real() << ',' << z.imag() << '\n';
      }
    }
  }
  os.precision(old);
}

inline json to_json(const AmbiguitySurface& s) {
  return {{"kind", "surface"}, {"N", s.size()}, {"values", matrix_to_json(s.values)}};
}

inline json to_json(const VVAmbiguitySurface& s) {
  return {{"kind", "vv_surface"}, {"N", s.length}, {"d", s.dim}, {"values", matrix_to_json(s.values)}};
}

}  // namespace frames::io
