#include "mvop/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mvop::io {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string float_text(const Rational& v) {
  std::ostringstream os;
  os << std::setprecision(17) << v.to_double();
  return os.str();
}

std::string point_header(int n) {
  std::string out;
  for (int j = 1; j <= n; ++j) {
    out += "x_" + std::to_string(j) + ",";
  }
  return out;
}

std::string point_cells(const LatticePoint& x) {
  std::string out;
  for (int c : x) {
    out += std::to_string(c) + ",";
  }
  return out;
}

std::string label_text(std::span<const int> m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += (i ? " " : "") + std::to_string(m[i]);
  }
  return out;
}

Json value_json(const Rational& v, bool with_float) {
  Json j;
  j["value"] = v.str();
  if (with_float) {
    j["value_float"] = v.to_double();
  }
  return j;
}

}  // namespace

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw std::out_of_range("CSV column '" + std::string(name) + "' not found");
  }
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  for (const auto& raw : split(text, '\n')) {
    const std::string line = trim(raw);
    if (line.empty()) {
      continue;
    }
    auto cells = split(line, ',');
    for (auto& c : cells) {
      c = trim(c);
    }
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) {
        throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                                    std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

Json params_json(const FamilyParams& params) {
  Json j;
  j["family"] = std::string(to_string(params.family));
  j["n"] = params.dim();
  Json a = Json::array();
  for (const auto& ai : params.a) {
    a.push_back(ai.str());
  }
  j["a"] = a;
  switch (params.family) {
    case Family::hahn:
      j["b"] = params.b.str();
      j["N"] = params.N;
      break;
    case Family::krawtchouk:
      j["N"] = params.N;
      break;
    case Family::meixner:
      j["beta"] = params.beta.str();
      break;
  }
  return j;
}

std::string weight_table_csv(const WeightTable& w, bool with_float) {
  std::string out = point_header(w.lattice->dim()) + "value" + (with_float ? ",value_float" : "") + "\n";
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    out += point_cells(w.lattice->point(i)) + w.values[i].str();
    if (with_float) {
      out += "," + float_text(w.values[i]);
    }
    out += "\n";
  }
  return out;
}

Json weight_table_json(const WeightTable& w, bool with_float) {
  Json j;
  j["kind"] = "weights";
  j["params"] = params_json(w.params);
  j["normalized"] = w.normalized;
  if (!w.params.bounded()) {
    j["x_max"] = w.lattice->bound();
    j["tail_mass_bound"] = w.tail_mass_bound ? Json(w.tail_mass_bound->str()) : Json(nullptr);
  }
  Json entries = Json::array();
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    Json e;
    e["x"] = w.lattice->point(i).entries();
    e.update(value_json(w.values[i], with_float));
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string operator_matrix_csv(const SparseMatrix& m, bool with_float) {
  std::string out = std::string("row,col,value") + (with_float ? ",value_float" : "") + "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      out += std::to_string(r) + "," + std::to_string(c) + "," + v.str();
      if (with_float) {
        out += "," + float_text(v);
      }
      out += "\n";
    }
  }
  return out;
}

Json operator_matrix_json(const OperatorSpec& op, const SparseMatrix& m, bool with_float) {
  Json j;
  j["kind"] = "operator";
  j["params"] = params_json(op.params);
  j["operator"] = op.name();
  j["size"] = m.size();
  Json points = Json::array();
  Json invalid = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    points.push_back(m.lattice().point(r).entries());
    if (!m.row_valid(r)) {
      invalid.push_back(r);
    }
  }
  j["points"] = std::move(points);
  j["invalid_rows"] = std::move(invalid);
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      Json e;
      e["row"] = r;
      e["col"] = c;
      e.update(value_json(v, with_float));
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string gram_csv(const GramResult& g, bool with_float) {
  std::string out = std::string("row,col,m_row,m_col,value") + (with_float ? ",value_float" : "") + "\n";
  for (std::size_t r = 0; r < g.matrix.size(); ++r) {
    for (std::size_t c = 0; c < g.matrix.size(); ++c) {
      out += std::to_string(r) + "," + std::to_string(c) + "," + label_text(g.indices[r]) + "," +
             label_text(g.indices[c]) + "," + g.matrix[r][c].str();
      if (with_float) {
        out += "," + float_text(g.matrix[r][c]);
      }
      out += "\n";
    }
  }
  return out;
}

Json gram_json(const FamilyParams& params, const GramResult& g, bool with_float) {
  Json j;
  j["kind"] = "gram";
  j["params"] = params_json(params);
  j["indices"] = g.indices;
  Json rows = Json::array();
  for (const auto& row : g.matrix) {
    Json r = Json::array();
    for (const auto& v : row) {
      r.push_back(v.str());
    }
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  if (with_float) {
    Json rows_f = Json::array();
    for (const auto& row : g.matrix) {
      Json r = Json::array();
      for (const auto& v : row) {
        r.push_back(v.to_double());
      }
      rows_f.push_back(std::move(r));
    }
    j["matrix_float"] = std::move(rows_f);
  }
  if (g.max_tail_bound) {
    j["max_tail_bound"] = g.max_tail_bound->str();
  }
  j["report"] = report_json(g.report);
  return j;
}

std::string eval_table_csv(const LatticeFunction& f, bool with_float) {
  std::string out = point_header(f.lattice().dim()) + "value" + (with_float ? ",value_float" : "") + "\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += point_cells(f.lattice().point(i)) + f[i].str();
    if (with_float) {
      out += "," + float_text(f[i]);
    }
    out += "\n";
  }
  return out;
}

Json eval_table_json(const FamilyParams& params, std::span<const int> m, const LatticeFunction& f,
                     bool with_float) {
  Json j;
  j["kind"] = "eval";
  j["params"] = params_json(params);
  j["m"] = std::vector<int>(m.begin(), m.end());
  Json entries = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Json e;
    e["x"] = f.lattice().point(i).entries();
    e.update(value_json(f[i], with_float));
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json report_json(const CheckReport& r, bool with_timing) {
  Json j;
  j["name"] = r.name;
  j["instance"] = r.instance;
  j["status"] = std::string(to_string(r.status));
  j["max_defect"] = r.max_defect.str();
  j["tolerance"] = r.tolerance ? Json(r.tolerance->str()) : Json(nullptr);
  if (with_timing) {
    j["seconds"] = r.seconds;
  }
  j["note"] = r.note;
  return j;
}

Json reports_json(const FamilyParams& params, const std::vector<CheckReport>& reports, bool with_timing) {
  Json j;
  j["kind"] = "verify";
  j["params"] = params_json(params);
  std::size_t failures = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    failures += r.status == CheckStatus::fail ? 1 : 0;
    list.push_back(report_json(r, with_timing));
  }
  j["passed"] = failures == 0;
  j["failures"] = failures;
  j["reports"] = std::move(list);
  return j;
}

std::string reports_csv(const std::vector<CheckReport>& reports, bool with_timing) {
  std::string out = std::string("name,status,max_defect,tolerance") + (with_timing ? ",seconds" : "") + "\n";
  for (const auto& r : reports) {
    std::string name = r.name;
    std::replace(name.begin(), name.end(), ',', ' ');
    out += name + "," + std::string(to_string(r.status)) + "," + r.max_defect.str() + "," +
           (r.tolerance ? r.tolerance->str() : "");
    if (with_timing) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.seconds;
      out += "," + secs.str();
    }
    out += "\n";
  }
  return out;
}

std::string reports_text(const std::vector<CheckReport>& reports, bool with_timing) {
  std::size_t name_w = 5;
  std::size_t defect_w = 10;
  std::vector<std::string> defects;
  for (const auto& r : reports) {
    name_w = std::max(name_w, r.name.size());
    std::string d = r.max_defect.str();
    if (d.size() > 24) {
      std::ostringstream os;
      os << std::setprecision(6) << r.max_defect.to_double();
      d = "~" + os.str();
    }
    defect_w = std::max(defect_w, d.size());
    defects.push_back(std::move(d));
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "check" << "  " << std::setw(7) << "status" << "  "
     << std::setw(static_cast<int>(defect_w)) << "max_defect" << "  ";
  if (with_timing) {
    os << std::setw(8) << "seconds" << "  ";
  }
  os << "note\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << std::setw(static_cast<int>(name_w)) << r.name << "  " << std::setw(7) << to_string(r.status) << "  "
       << std::setw(static_cast<int>(defect_w)) << defects[i] << "  ";
    if (with_timing) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.seconds;
      os << std::setw(8) << secs.str() << "  ";
    }
    os << r.note << "\n";
  }
  return os.str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& cell : split(text, ',')) {
    out.push_back(Rational::parse(trim(cell)));
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& raw : split(text, ',')) {
    const std::string cell = trim(raw);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
      throw std::invalid_argument("not an integer: '" + cell + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace mvop::io
