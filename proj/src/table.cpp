#include "qstirling/table.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

#include "qstirling/error.hpp"
#include "qstirling/paths.hpp"

namespace qstirling {

using nlohmann::json;

Method parse_method(std::string_view name) {
  if (name == "enum") return Method::Enum;
  if (name == "closed") return Method::Closed;
  if (name == "closed-alt") return Method::ClosedAlt;
  if (name == "path") return Method::Path;
  if (name == "identity") return Method::Identity;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Enum: return "enum";
    case Method::Closed: return "closed";
    case Method::ClosedAlt: return "closed-alt";
    case Method::Path: return "path";
    case Method::Identity: return "identity";
  }
  return "?";
}

namespace {

void check_cell(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "need 0 <= k <= n");
}

QPoly closed_alt(StirlingKind kind, int n, int k) {
  if (kind == StirlingKind::First) return s1_closed_alt(n, k);
  if (n == 0) return QPoly(1);
  return s2_closed_alt(n, k);
}

StirlingKind other(StirlingKind kind) {
  return kind == StirlingKind::First ? StirlingKind::Second : StirlingKind::First;
}

}  // namespace

QPoly stirling_value(StirlingKind kind, int n, int k, Method method, const EnumBounds& bounds) {
  check_cell(n, k);
  const bool first = kind == StirlingKind::First;
  switch (method) {
    case Method::Enum:
      return first ? s1_enum(n, k, bounds) : s2_enum(n, k, bounds);
    case Method::Closed:
      return first ? s1_closed(n, k) : s2_closed(n, k);
    case Method::ClosedAlt:
      if (!first && n == 0) throw Error(ErrorCode::InvalidArgument, "closed-alt: requires n > 0");
      return closed_alt(kind, n, k);
    case Method::Path: {
      const XQPoly gf = first ? s1_via_tfraction(n) : s2_via_jfraction(n);
      return xqpoly_coeff(gf, static_cast<std::size_t>(k));
    }
    case Method::Identity:
      return first ? identity_first(n, k) : identity_second(n, k);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

Triangle compute_triangle(StirlingKind kind, int nmax, Method method, const EnumBounds& bounds) {
  if (nmax < 0) throw Error(ErrorCode::InvalidArgument, "nmax must be >= 0");
  switch (method) {
    case Method::Enum: return source_triangle(kind, nmax, Source::Enum, bounds);
    case Method::Closed: return source_triangle(kind, nmax, Source::Closed, bounds);
    case Method::Path: {
      const bool first = kind == StirlingKind::First;
      const WeightSpec spec = first ? WeightSpec(s1_dyck_weights()) : WeightSpec(s2_motzkin_weights());
      const auto series = path_gf_series(spec, nmax);
      Triangle t{kind, nmax, {}};
      for (int n = 0; n <= nmax; ++n) {
        std::vector<QPoly> row;
        for (int k = 0; k <= n; ++k) {
          row.push_back(xqpoly_coeff(series[static_cast<std::size_t>(n)], static_cast<std::size_t>(k)));
        }
        t.rows.push_back(std::move(row));
      }
      return t;
    }
    case Method::ClosedAlt:
    case Method::Identity: {
      // identity cells share one inner triangle of the other kind
      Triangle inner;
      if (method == Method::Identity) inner = source_triangle(other(kind), std::max(nmax, 2 * nmax - 2), Source::Closed);
      Triangle t{kind, nmax, {}};
      for (int n = 0; n <= nmax; ++n) {
        std::vector<QPoly> row;
        for (int k = 0; k <= n; ++k) {
          row.push_back(method == Method::Identity ? cross_kind_sum(n, k, inner) : closed_alt(kind, n, k));
        }
        t.rows.push_back(std::move(row));
      }
      return t;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

TableFormat parse_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "latex") return TableFormat::Latex;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

namespace {

json qpoly_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

QPoly qpoly_from_json(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::InvalidArgument, "polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto& c : arr) {
    if (!c.is_string()) throw Error(ErrorCode::InvalidArgument, "coefficients must be decimal strings");
    BigInt value;
    if (value.set_str(c.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::InvalidArgument, "malformed coefficient '" + c.get<std::string>() + "'");
    }
    coeffs.push_back(value);
  }
  QPoly p(std::move(coeffs));
  if (p.coefficients().size() != arr.size()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial has trailing zero coefficients");
  }
  return p;
}

}  // namespace

std::string qpoly_to_json(const QPoly& p) { return qpoly_json(p).dump(); }

std::string render_csv(const Triangle& t) {
  std::ostringstream out;
  out << "n,k,poly\n";
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    for (std::size_t k = 0; k < t.rows[n].size(); ++k) {
      out << n << ',' << k << ',' << to_string(t.rows[n][k]) << '\n';
    }
  }
  return out.str();
}

std::string render_json(const Triangle& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& p : row) r.push_back(qpoly_json(p));
    rows.push_back(std::move(r));
  }
  json doc;
  doc["kind"] = static_cast<int>(t.kind);
  doc["nmax"] = t.nmax;
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string render_latex(const Triangle& t) {
  const std::size_t columns = t.rows.size();
  std::ostringstream out;
  out << "\\begin{tabular}{c|";
  for (std::size_t k = 0; k < columns; ++k) out << "c|";
  out << "}\n$n \\backslash k$";
  for (std::size_t k = 0; k < columns; ++k) out << " & " << k;
  out << " \\\\ \\hline\n";
  for (std::size_t n = 0; n < columns; ++n) {
    out << n;
    for (std::size_t k = 0; k < columns; ++k) {
      out << " & ";
      if (k >= t.rows[n].size()) {
        out << '.';
        continue;
      }
      const QPoly& p = t.rows[n][k];
      const auto deg = p.degree();
      if (!deg || *deg == 0) out << to_string(p);
      else out << '$' << to_latex(p) << '$';
    }
    out << " \\\\ \\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string render_table(const Triangle& t, TableFormat format) {
  switch (format) {
    case TableFormat::Csv: return render_csv(t);
    case TableFormat::Json: return render_json(t);
    case TableFormat::Latex: return render_latex(t);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

Triangle parse_json_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("nmax") || !doc.contains("rows")) {
    throw Error(ErrorCode::InvalidArgument, "table JSON needs kind, nmax and rows");
  }
  if (!doc["kind"].is_number_integer() || !doc["nmax"].is_number_integer() || !doc["rows"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "table JSON has fields of the wrong type");
  }
  Triangle t;
  const int kind = doc["kind"].get<int>();
  if (kind != 1 && kind != 2) throw Error(ErrorCode::InvalidArgument, "table JSON: kind must be 1 or 2");
  t.kind = static_cast<StirlingKind>(kind);
  t.nmax = doc["nmax"].get<int>();
  const auto& rows = doc["rows"];
  if (t.nmax < 0 || rows.size() != static_cast<std::size_t>(t.nmax) + 1) {
    throw Error(ErrorCode::InvalidArgument, "table JSON: rows do not match nmax");
  }
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (!rows[n].is_array() || rows[n].size() != n + 1) {
      throw Error(ErrorCode::InvalidArgument, "table JSON: row " + std::to_string(n) + " has the wrong length");
    }
    std::vector<QPoly> row;
    for (const auto& cell : rows[n]) row.push_back(qpoly_from_json(cell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qstirling
