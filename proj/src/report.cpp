#include "dshell/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kDigits = 9;

const char* units_name(UnitSystem u) { return u == UnitSystem::physical ? "physical" : "reduced"; }

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return {};
}

ordered_json cell_json(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return nullptr;
    return round_to_printed(v);
  }
  return nullptr;
}

Cell opt(const std::optional<double>& v, double scale) {
  if (!v) return std::monostate{};
  return *v * scale;
}

PoleKind kind_from_string(const std::string& s) {
  for (PoleKind k : {PoleKind::resonance, PoleKind::anti_resonance, PoleKind::bound, PoleKind::virtual_state}) {
    if (s == to_string(k)) return k;
  }
  raise(ErrorKind::InvalidInput, "unknown pole kind '" + s + "'");
}

double number_or(const ordered_json& j, const char* key, double fallback) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<double>();
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, kDigits);
  if (res.ec != std::errc{}) raise(ErrorKind::InvalidInput, "number formatting failed");
  return std::string(buf, res.ptr);
}

double round_to_printed(double x) {
  if (!std::isfinite(x)) return x;
  const std::string s = format_number(x);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const ReportMeta& meta, const Table& table, bool as_curve) {
  ordered_json doc;
  doc["meta"] = {
      {"command", meta.command},
      {"lambda", meta.spec.lambda},
      {"a", meta.spec.radius},
      {"units", units_name(meta.spec.units)},
      {"rel_tol", meta.rel_tol},
      {"abs_tol", meta.abs_tol},
      {"version", kVersion},
  };
  if (meta.spec.units == UnitSystem::physical) {
    doc["meta"]["mass"] = meta.spec.mass;
    doc["meta"]["hbar"] = meta.spec.hbar;
  }
  if (as_curve) {
    ordered_json curve = ordered_json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      ordered_json col = ordered_json::array();
      for (const auto& row : table.rows) col.push_back(cell_json(row[c]));
      curve[table.columns[c]] = std::move(col);
    }
    doc["curve"] = std::move(curve);
  } else {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json r = ordered_json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) r[table.columns[c]] = cell_json(row[c]);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, OutputFormat format, const ReportMeta& meta, const Table& table, bool as_curve) {
  if (format == OutputFormat::json) {
    write_json(out, meta, table, as_curve);
  } else {
    write_csv(out, table);
  }
}

Table poles_table(const PotentialSpec& spec, const std::vector<Pole>& poles) {
  const double ks = spec.wave_number_scale();
  const double es = spec.energy_scale();
  Table t;
  t.columns = {"kind", "n", "branch", "re_k", "im_k", "re_z", "im_z", "gamma_r", "residual"};
  for (const Pole& p : poles) {
    t.rows.push_back({std::string(to_string(p.kind)), static_cast<long long>(p.index),
                      static_cast<long long>(p.branch), p.k.real() * ks, p.k.imag() * ks, p.z.real() * es,
                      p.z.imag() * es, p.gamma_r * es, pole_residual(spec.lambda, p.k)});
  }
  return t;
}

Table observables_table(const PotentialSpec& spec, const std::vector<ObservablesRecord>& rows) {
  const double ks = spec.wave_number_scale();
  const double es = spec.energy_scale();
  Table t;
  t.columns = {"kind",  "n",         "branch", "re_k",            "im_k",        "re_z", "im_z",
               "gamma_r", "gamma_bar", "gamma", "gamma_bar_sharp", "gamma_sharp", "c",    "quad_error"};
  for (const ObservablesRecord& r : rows) {
    const double err_scale = r.kind == PoleKind::resonance ? es : 1.0;
    t.rows.push_back({std::string(to_string(r.kind)), static_cast<long long>(r.index),
                      static_cast<long long>(r.branch), r.k.real() * ks, r.k.imag() * ks, r.z.real() * es,
                      r.z.imag() * es, r.gamma_r * es, r.gamma_bar * es, r.gamma, opt(r.gamma_bar_sharp, es),
                      opt(r.gamma_sharp, 1.0), r.c_value * spec.radius, r.quadrature_error * err_scale});
  }
  return t;
}

Table spectrum_table(const PotentialSpec& spec, const SpectrumCurve& curve, bool with_companions, bool zero_width) {
  const double es = spec.energy_scale();
  Table t;
  t.columns = {"E", "dP_dE"};
  if (with_companions) {
    t.columns.push_back("breit_wigner");
    t.columns.push_back("matrix_element");
  }
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    std::vector<Cell> row{curve.grid[i] * es, curve.dp_de[i] / es};
    if (with_companions) {
      row.push_back(zero_width ? Cell{} : Cell{curve.breit_wigner[i] / es});
      row.push_back(curve.matrix_element[i] * es);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table interference_table(const PotentialSpec& spec, const InterferenceCurve& curve) {
  const double es = spec.energy_scale();
  Table t;
  t.columns = {"E", "dP_dE", "direct", "cross"};
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    t.rows.push_back({curve.grid[i] * es, curve.dp_de[i] / es, curve.direct[i] / es, curve.cross[i] / es});
  }
  return t;
}

Table cross_section_table(const PotentialSpec& spec, const CrossSectionBundle& bundle) {
  const double es = spec.energy_scale();
  const double area = spec.radius * spec.radius;
  Table t;
  t.columns = {"E", "exact", "laurent", "e_unitarized", "k_unitarized"};
  if (bundle.two_pole) t.columns.push_back("two_pole");
  for (std::size_t i = 0; i < bundle.grid.size(); ++i) {
    std::vector<Cell> row{bundle.grid[i] * es, bundle.exact[i] * area, bundle.laurent[i] * area,
                          bundle.e_unitarized[i] * area, bundle.k_unitarized[i] * area};
    if (bundle.two_pole) row.push_back((*bundle.two_pole)[i] * area);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<ObservablesRecord> table_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::InvalidInput, std::string("malformed table JSON: ") + e.what());
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) raise(ErrorKind::InvalidInput, "table JSON has no rows");
  std::vector<ObservablesRecord> out;
  try {
    for (const auto& r : doc["rows"]) {
      ObservablesRecord rec;
      rec.lambda = number_or(doc["meta"], "lambda", 0.0);
      rec.kind = kind_from_string(r.at("kind").get<std::string>());
      rec.index = r.at("n").get<int>();
      rec.branch = r.at("branch").get<int>();
      rec.k = {number_or(r, "re_k", 0.0), number_or(r, "im_k", 0.0)};
      rec.z = {number_or(r, "re_z", 0.0), number_or(r, "im_z", 0.0)};
      rec.gamma_r = number_or(r, "gamma_r", 0.0);
      rec.gamma_bar = number_or(r, "gamma_bar", 0.0);
      rec.gamma = number_or(r, "gamma", 0.0);
      if (!r.at("gamma_bar_sharp").is_null()) rec.gamma_bar_sharp = r["gamma_bar_sharp"].get<double>();
      if (!r.at("gamma_sharp").is_null()) rec.gamma_sharp = r["gamma_sharp"].get<double>();
      rec.c_value = number_or(r, "c", 0.0);
      rec.quadrature_error = number_or(r, "quad_error", 0.0);
      out.push_back(rec);
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::InvalidInput, std::string("malformed table row: ") + e.what());
  }
  return out;
}

std::string plot_script(const std::string& csv_path, const std::string& title) {
  std::ostringstream s;
  s << "import csv\n"
       "import matplotlib.pyplot as plt\n\n"
       "with open(" << nlohmann::json(csv_path).dump() << ") as f:\n"
       "    rows = list(csv.reader(f))\n"
       "header, data = rows[0], rows[1:]\n"
       "x = [float(r[0]) for r in data]\n"
       "for c in range(1, len(header)):\n"
       "    pts = [(xi, float(r[c])) for xi, r in zip(x, data) if r[c] != '']\n"
       "    if pts:\n"
       "        plt.plot([p[0] for p in pts], [p[1] for p in pts], label=header[c])\n"
       "plt.xlabel(header[0])\n"
       "plt.title(" << nlohmann::json(title).dump() << ")\n"
       "plt.legend()\n"
       "plt.show()\n";
  return s.str();
}

}  // namespace dshell
