#pragma once

// Method dispatch for single values and whole triangles, and the CSV, JSON
// and LaTeX table encodings.

#include <string>
#include <string_view>

#include "qstirling/enumerate.hpp"
#include "qstirling/formulas.hpp"

namespace qstirling {

enum class Method { Enum, Closed, ClosedAlt, Path, Identity };

/// "enum", "closed", "closed-alt", "path" or "identity".
Method parse_method(std::string_view name);
const char* to_string(Method m) noexcept;

/// S1[n,k] or S2[n,k] by the chosen method. Identity evaluates the
/// cross-kind identity with closed-form inner values.
QPoly stirling_value(StirlingKind kind, int n, int k, Method method, const EnumBounds& bounds = {});

/// Rows 0..nmax. With closed-alt the S2 cell (0,0), outside that formula's
/// domain, is the defining value 1.
Triangle compute_triangle(StirlingKind kind, int nmax, Method method, const EnumBounds& bounds = {});

enum class TableFormat { Csv, Json, Latex };
TableFormat parse_format(std::string_view name);

/// Header "n,k,poly", then one line per cell in (n,k) order. The canonical
/// text never contains a comma, so cells are written unquoted.
std::string render_csv(const Triangle& t);
/// {"kind":K,"nmax":N,"rows":[[[coefficients...]...]...]}
std::string render_json(const Triangle& t);
/// Row-per-n tabular, "." for cells with k > n.
std::string render_latex(const Triangle& t);
std::string render_table(const Triangle& t, TableFormat format);

/// Inverse of render_json. Throws InvalidArgument on malformed input.
Triangle parse_json_table(std::string_view text);

/// Array of decimal-string coefficients, ascending.
std::string qpoly_to_json(const QPoly& p);

}  // namespace qstirling
