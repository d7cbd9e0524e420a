#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "mvop/measures.hpp"
#include "mvop/operators.hpp"
#include "mvop/verify.hpp"

namespace mvop::io {

using Json = nlohmann::ordered_json;

/// A parsed CSV file: header plus string cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
};

/// Minimal CSV reader for the files written here (no quoting).
CsvTable parse_csv(std::string_view text);

Json params_json(const FamilyParams& params);

// Rationals are written as "p/q" strings. With with_float, an extra column
// (or field) named value_float holds a double for plotting.

/// x_1,...,x_n,value
std::string weight_table_csv(const WeightTable& w, bool with_float);
Json weight_table_json(const WeightTable& w, bool with_float);

/// row,col,value (zero-based lattice indices)
std::string operator_matrix_csv(const SparseMatrix& m, bool with_float);
Json operator_matrix_json(const OperatorSpec& op, const SparseMatrix& m, bool with_float);

/// row,col,m_row,m_col,value
std::string gram_csv(const GramResult& g, bool with_float);
Json gram_json(const FamilyParams& params, const GramResult& g, bool with_float);

/// x_1,...,x_n,value for one eigenpolynomial
std::string eval_table_csv(const LatticeFunction& f, bool with_float);
Json eval_table_json(const FamilyParams& params, std::span<const int> m, const LatticeFunction& f,
                     bool with_float);

// Wall-clock seconds are written only with with_timing, so that identical
// inputs give byte-identical output by default.
Json report_json(const CheckReport& r, bool with_timing = false);
Json reports_json(const FamilyParams& params, const std::vector<CheckReport>& reports, bool with_timing = false);
std::string reports_csv(const std::vector<CheckReport>& reports, bool with_timing = false);
/// Aligned columns for terminals.
std::string reports_text(const std::vector<CheckReport>& reports, bool with_timing = false);

/// Comma separated rationals ("1/2,3,2").
std::vector<Rational> parse_rational_list(std::string_view text);
/// Comma separated integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace mvop::io
