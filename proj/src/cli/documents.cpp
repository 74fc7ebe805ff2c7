#include "tqft/documents.hpp"

#include <climits>
#include <sstream>

#include "json.hpp"

namespace tqft {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field, field + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("json", std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& obj, const std::string& key, const std::string& prefix = "") {
  if (!obj.is_object()) fail(prefix.empty() ? "document" : prefix, "expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(prefix + key, "missing field \"" + prefix + key + "\"");
  return *it;
}

Rational rational_from(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<unsigned long>())), 1);
    return Rational(v.get<long>());
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const InputError& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer or a \"p/q\" string");
}

void require_array(const json& v, std::size_t size, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of length " + std::to_string(size));
  if (v.size() != size) {
    fail(field, "expected length " + std::to_string(size) + ", got " + std::to_string(v.size()));
  }
}

std::string idx(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

Matrix vector_from(const json& v, std::size_t n, const std::string& field, bool as_column) {
  require_array(v, n, field);
  Matrix out = as_column ? Matrix(n, 1) : Matrix(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    (as_column ? out(i, 0) : out(0, i)) = rational_from(v[i], idx(field, i));
  }
  return out;
}

Matrix table_from(const json& v, std::size_t rows, std::size_t cols, const std::string& field) {
  require_array(v, rows, field);
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require_array(v[i], cols, idx(field, i));
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rational_from(v[i][j], idx(idx(field, i), j));
  }
  return out;
}

// t[i][j][k] read as entry (k, i*n+j) for mult, (j*n+k, i) for comult.
Matrix cube_from(const json& v, std::size_t n, const std::string& field, bool comult) {
  require_array(v, n, field);
  Matrix out = comult ? Matrix(n * n, n) : Matrix(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    require_array(v[i], n, idx(field, i));
    for (std::size_t j = 0; j < n; ++j) {
      require_array(v[i][j], n, idx(idx(field, i), j));
      for (std::size_t k = 0; k < n; ++k) {
        const Rational q = rational_from(v[i][j][k], idx(idx(idx(field, i), j), k));
        if (comult) {
          out(j * n + k, i) = q;
        } else {
          out(k, i * n + j) = q;
        }
      }
    }
  }
  return out;
}

std::string string_from(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get<std::string>();
}

// Integers that fit a JSON number are written bare, everything else as "p/q".
std::string scalar_text(const Rational& q) {
  if (q.is_integer() && q.numerator().fits_slong_p()) return q.str();
  return json(q.str()).dump();
}

std::string row_text(const Matrix& m, std::size_t r) {
  std::string s = "[";
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) s += ", ";
    s += scalar_text(m(r, c));
  }
  return s + "]";
}

std::string column_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += scalar_text(m(r, 0));
  }
  return s + "]";
}

std::string table_text(const Matrix& m, const std::string& indent) {
  std::string s = "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += indent + "  " + row_text(m, r) + (r + 1 < m.rows() ? ",\n" : "\n");
  }
  return s + indent + "]";
}

std::string cube_text(const Matrix& m, std::size_t n, bool comult) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < n; ++i) {
    s += "    [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) s += ", ";
      s += "[";
      for (std::size_t k = 0; k < n; ++k) {
        if (k) s += ", ";
        s += scalar_text(comult ? m(j * n + k, i) : m(k, i * n + j));
      }
      s += "]";
    }
    s += i + 1 < n ? "],\n" : "]\n";
  }
  return s + "  ]";
}

}  // namespace

AlgebraDocument parse_algebra_document(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) fail("document", "expected a JSON object");

  const std::string name = string_from(require(doc, "name"), "name");
  const json& dim_v = require(doc, "dim");
  if (!dim_v.is_number_integer() || dim_v.get<long>() < 1 || dim_v.get<long>() > 64) {
    fail("dim", "expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(dim_v.get<long>());

  const json& basis_v = require(doc, "basis");
  require_array(basis_v, n, "basis");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(string_from(basis_v[i], idx("basis", i)));

  Matrix mult = cube_from(require(doc, "mult"), n, "mult", false);
  Matrix unit = vector_from(require(doc, "unit"), n, "unit", true);
  Matrix counit = vector_from(require(doc, "counit"), n, "counit", false);
  std::optional<Matrix> comult;
  if (doc.contains("comult")) comult = cube_from(doc["comult"], n, "comult", true);

  std::optional<FrobeniusAlgebra> algebra;
  try {
    algebra.emplace(name, std::move(basis), std::move(mult), std::move(unit), std::move(counit),
                    comult);
  } catch (const InputError& e) {
    throw ParseError("basis", std::string("basis: ") + e.what());
  }

  AlgebraDocument out{*algebra, std::nullopt, comult.has_value()};
  if (doc.contains("extended")) {
    const json& ext = doc["extended"];
    if (!ext.is_object()) fail("extended", "expected an object with phi and theta");
    Matrix phi = table_from(require(ext, "phi", "extended."), n, n, "extended.phi");
    Matrix theta = vector_from(require(ext, "theta", "extended."), n, "extended.theta", true);
    out.extended.emplace(*algebra, std::move(phi), std::move(theta));
  }
  return out;
}

std::string write_algebra_document(const FrobeniusAlgebra& a,
                                   const ExtendedFrobeniusAlgebra* extended) {
  const std::size_t n = a.dim();
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(a.name()).dump() << ",\n";
  os << "  \"dim\": " << n << ",\n";
  os << "  \"basis\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << json(a.basis()[i]).dump();
  os << "],\n";
  os << "  \"mult\": " << cube_text(a.mult(), n, false) << ",\n";
  os << "  \"unit\": " << column_text(a.unit()) << ",\n";
  os << "  \"counit\": " << row_text(a.counit(), 0) << ",\n";
  os << "  \"comult\": " << cube_text(a.comult(), n, true);
  if (extended != nullptr) {
    os << ",\n  \"extended\": {\n";
    os << "    \"phi\": " << table_text(extended->involution(), "    ") << ",\n";
    os << "    \"theta\": " << column_text(extended->point()) << "\n";
    os << "  }";
  }
  os << "\n}\n";
  return os.str();
}

MorphismDocument parse_morphism_document(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) fail("document", "expected a JSON object");
  MorphismDocument out;
  out.source = string_from(require(doc, "source"), "source");
  out.target = string_from(require(doc, "target"), "target");
  const json& map = require(doc, "map");
  if (!map.is_array() || map.empty() || !map[0].is_array() || map[0].empty()) {
    fail("map", "expected a non-empty table");
  }
  out.map = table_from(map, map.size(), map[0].size(), "map");
  return out;
}

std::string write_morphism_document(const MorphismDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"source\": " << json(doc.source).dump() << ",\n";
  os << "  \"target\": " << json(doc.target).dump() << ",\n";
  os << "  \"map\": " << table_text(doc.map, "  ") << "\n";
  os << "}\n";
  return os.str();
}

Matrix parse_phi_document(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const char* key = doc.contains("phi") ? "phi" : "map";
  const json& table = require(doc, key);
  if (!table.is_array() || table.empty()) fail(key, "expected a non-empty square table");
  return table_from(table, table.size(), table.size(), key);
}

}  // namespace tqft
