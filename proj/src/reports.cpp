#include "veegroups/reports.hpp"

#include <bit>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "veegroups/clifford.hpp"
#include "veegroups/common.hpp"

namespace veegroups {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  line += '\n';
  return line;
}

/// Left-justified columns separated by two spaces.
std::string aligned_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t j = 0; j < row.size(); ++j) {
      line += row[j];
      if (j + 1 < row.size()) line.append(widths[j] - row[j].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string set_text(const std::vector<std::string>& names) {
  return "{" + join(names, ", ") + "}";
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string center_type_name(CenterType t) {
  switch (t) {
    case CenterType::c2: return "C_2";
    case CenterType::c4: return "C_4";
    case CenterType::vier: return "C_2 x C_2";
  }
  throw std::logic_error("center_type_name: unknown tag");
}

std::string group_name(const Signature& s) { return "Q(" + s.str() + ")"; }

long long factorial(int n) {
  long long out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

std::string rational_text(const Rational& r) { return r.str(); }

/// "b3 = 1 + Z - 2 e_{12}" right-hand side.
std::string element_sum_text(const GroupAlgebraElement& el, const Signature& s) {
  if (el.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [index, coeff] : el.coeffs) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string name = render_element(element_at(s, index), s.n());
    if (magnitude != 1) {
      out += rational_text(magnitude);
      out += ' ';
    }
    out += name;
  }
  return out;
}

void check_report_rank(const Signature& s, int cap, const std::string& command) {
  if (s.n() > cap) {
    throw size_cap_error(command + ": rank " + std::to_string(s.n()) +
                         " exceeds the report cap of " + std::to_string(cap));
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

// ---- info ---------------------------------------------------------------------

InfoReport build_info(const Signature& s) {
  check_report_rank(s, 12, "info");
  const int n = s.n();

  InfoReport r;
  r.signature = s;
  r.order = 1LL << (n + 1);
  r.abelian = n <= 1;

  const NormalForm nf = normal_form(s);
  r.normal_form = nf.label();
  r.normal_form_order = nf.group_order();

  const CenterInfo c = center(s);
  for (VeeElement e : c.elements) r.center_elements.push_back(render_element(e, n));
  r.center_type = center_type_name(c.type);

  r.class_count = conjugacy_class_count(s);

  for (VeeElement e : commutator_subgroup(s).subgroup) {
    r.commutator_elements.push_back(render_element(e, n));
  }

  if (n == 0) {
    r.even_signature = "";
    r.even_form = nf.label();  // a degree-zero group is its own even part
  } else {
    const Signature even = even_part(s);
    r.even_signature = even.str();
    r.even_form = normal_form(even).label();
  }

  if (auto witness = inner_witness_for_alpha(s)) {
    r.alpha_inner = true;
    r.alpha_witness = render_element(*witness, n);
  }

  if (s.p_count() == n || s.q_count() == n) {
    r.hyperoctahedral_order = factorial(n) * (1LL << n);
  }
  if (r.order <= 16) {
    r.automorphism_order = full_automorphism_count(as_graded_group(s));
  }
  return r;
}

std::string render_info(const InfoReport& r, OutputFormat f) {
  const std::string commutator = set_text(r.commutator_elements);
  const std::string center = set_text(r.center_elements);
  const std::string even = "Q(" + r.even_signature + ")";

  if (f == OutputFormat::text) {
    std::ostringstream out;
    out << "group: " << group_name(r.signature) << '\n';
    out << "order: " << r.order << '\n';
    out << "abelian: " << (r.abelian ? "yes" : "no") << '\n';
    out << "normal form: " << r.normal_form << " (order " << r.normal_form_order << ")\n";
    out << "center: " << center << " ~ " << r.center_type << '\n';
    out << "conjugacy classes: " << r.class_count << '\n';
    out << "commutator subgroup: " << commutator << '\n';
    out << "even part: " << even << " ~ " << r.even_form << '\n';
    if (r.alpha_inner) {
      out << "grading automorphism: inner (conjugation by " << r.alpha_witness << ")\n";
    } else {
      out << "grading automorphism: outer\n";
    }
    if (r.hyperoctahedral_order > 0) {
      out << "hyperoctahedral order: " << r.hyperoctahedral_order << '\n';
    }
    if (r.automorphism_order > 0) {
      out << "automorphism group order: " << r.automorphism_order << '\n';
    }
    return out.str();
  }

  if (f == OutputFormat::csv) {
    std::string out = csv_line({"key", "value"});
    out += csv_line({"group", group_name(r.signature)});
    out += csv_line({"order", std::to_string(r.order)});
    out += csv_line({"abelian", r.abelian ? "yes" : "no"});
    out += csv_line({"normal_form", r.normal_form});
    out += csv_line({"normal_form_order", std::to_string(r.normal_form_order)});
    out += csv_line({"center", center});
    out += csv_line({"center_type", r.center_type});
    out += csv_line({"conjugacy_classes", std::to_string(r.class_count)});
    out += csv_line({"commutator_subgroup", commutator});
    out += csv_line({"even_part_signature", r.even_signature});
    out += csv_line({"even_part_form", r.even_form});
    out += csv_line({"alpha_inner", r.alpha_inner ? "yes" : "no"});
    if (r.alpha_inner) out += csv_line({"alpha_witness", r.alpha_witness});
    if (r.hyperoctahedral_order > 0) {
      out += csv_line({"hyperoctahedral_order", std::to_string(r.hyperoctahedral_order)});
    }
    if (r.automorphism_order > 0) {
      out += csv_line({"automorphism_order", std::to_string(r.automorphism_order)});
    }
    return out;
  }

  ordered_json j;
  j["command"] = "info";
  j["signature"] = r.signature.str();
  j["n"] = r.signature.n();
  j["p"] = r.signature.p_count();
  j["q"] = r.signature.q_count();
  j["order"] = r.order;
  j["abelian"] = r.abelian;
  j["normal_form"] = r.normal_form;
  j["normal_form_order"] = r.normal_form_order;
  j["center"] = {{"elements", r.center_elements}, {"type", r.center_type}};
  j["conjugacy_classes"] = r.class_count;
  j["commutator_subgroup"] = r.commutator_elements;
  j["even_part"] = {{"signature", r.even_signature}, {"normal_form", r.even_form}};
  j["alpha_inner"] = r.alpha_inner;
  if (r.alpha_inner) j["alpha_witness"] = r.alpha_witness;
  if (r.hyperoctahedral_order > 0) j["hyperoctahedral_order"] = r.hyperoctahedral_order;
  if (r.automorphism_order > 0) j["automorphism_order"] = r.automorphism_order;
  return dump_json(j);
}

// ---- table --------------------------------------------------------------------

TableReport build_table(const Signature& s) {
  check_report_rank(s, 8, "table");
  const int n = s.n();
  const uint64_t subsets = uint64_t{1} << n;

  TableReport r;
  r.signature = s;
  for (int parity = 0; parity <= 1; ++parity) {
    for (uint64_t mask = 0; mask < subsets; ++mask) {
      if ((std::popcount(mask) & 1) != parity) continue;
      r.basis.push_back({0, mask});
      r.basis.push_back({1, mask});
    }
  }
  const size_t order = r.basis.size();
  r.cells.resize(order);
  for (size_t i = 0; i < order; ++i) {
    r.cells[i].reserve(order);
    for (size_t j = 0; j < order; ++j) {
      r.cells[i].push_back(vee_mul(s, r.basis[i], r.basis[j]));
    }
  }
  return r;
}

std::string render_table(const TableReport& r, OutputFormat f) {
  const int n = r.signature.n();
  std::vector<std::string> names;
  names.reserve(r.basis.size());
  for (VeeElement e : r.basis) names.push_back(render_element(e, n));

  if (f == OutputFormat::text) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"*"};
    header.insert(header.end(), names.begin(), names.end());
    grid.push_back(header);
    for (size_t i = 0; i < r.cells.size(); ++i) {
      std::vector<std::string> row{names[i]};
      for (VeeElement e : r.cells[i]) row.push_back(render_element(e, n));
      grid.push_back(row);
    }
    return "multiplication table for " + group_name(r.signature) + " (" +
           std::to_string(r.basis.size()) + " elements)\n" + aligned_rows(grid);
  }

  if (f == OutputFormat::csv) {
    std::vector<std::string> header{"*"};
    header.insert(header.end(), names.begin(), names.end());
    std::string out = csv_line(header);
    for (size_t i = 0; i < r.cells.size(); ++i) {
      std::vector<std::string> row{names[i]};
      for (VeeElement e : r.cells[i]) row.push_back(render_element(e, n));
      out += csv_line(row);
    }
    return out;
  }

  ordered_json j;
  j["command"] = "table";
  j["signature"] = r.signature.str();
  j["n"] = n;
  j["order"] = r.basis.size();
  j["basis"] = names;
  ordered_json rows = ordered_json::array();
  for (const auto& cells : r.cells) {
    ordered_json row = ordered_json::array();
    for (VeeElement e : cells) row.push_back(render_element(e, n));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return dump_json(j);
}

// ---- periodic -------------------------------------------------------------------

std::vector<PeriodicEntry> build_periodic(int max_n) {
  if (max_n < 0) throw std::invalid_argument("periodic: max-n must be nonnegative");
  if (max_n > 32) throw size_cap_error("periodic: max-n capped at 32");
  return periodic_table(max_n);
}

std::string render_periodic(const std::vector<PeriodicEntry>& entries, int max_n,
                            OutputFormat f) {
  if (f == OutputFormat::text) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "order", "groups Q_{p,q}, p descending"});
    std::vector<std::string> cells;
    int row_rank = 0;
    auto flush = [&]() {
      rows.push_back({std::to_string(row_rank), std::to_string(1LL << (row_rank + 1)),
                      join(cells, " | ")});
      cells.clear();
    };
    for (const PeriodicEntry& e : entries) {
      const int rank = e.p + e.q;
      if (rank != row_rank) {
        flush();
        row_rank = rank;
      }
      cells.push_back(e.form.label() + " [" + e.algebra + "]");
    }
    flush();
    return "groups Q_{p,q} up to rank " + std::to_string(max_n) + "\n" + aligned_rows(rows);
  }

  if (f == OutputFormat::csv) {
    std::string out = csv_line({"n", "p", "q", "order", "form", "algebra"});
    for (const PeriodicEntry& e : entries) {
      out += csv_line({std::to_string(e.p + e.q), std::to_string(e.p), std::to_string(e.q),
                       std::to_string(e.form.group_order()), e.form.label(), e.algebra});
    }
    return out;
  }

  ordered_json j;
  j["command"] = "periodic";
  j["max_n"] = max_n;
  ordered_json list = ordered_json::array();
  for (const PeriodicEntry& e : entries) {
    ordered_json item;
    item["n"] = e.p + e.q;
    item["p"] = e.p;
    item["q"] = e.q;
    item["order"] = e.form.group_order();
    item["form"] = e.form.label();
    item["algebra"] = e.algebra;
    list.push_back(std::move(item));
  }
  j["entries"] = std::move(list);
  return dump_json(j);
}

// ---- characters --------------------------------------------------------------------

std::vector<std::vector<int>> build_characters(int n) {
  if (n < 0) throw std::invalid_argument("characters: n must be nonnegative");
  if (n > 8) throw size_cap_error("characters: rank capped at 8");
  const uint64_t subsets = uint64_t{1} << n;
  std::vector<std::vector<int>> matrix(subsets);
  for (uint64_t a = 0; a < subsets; ++a) {
    matrix[a].reserve(subsets);
    for (uint64_t b = 0; b < subsets; ++b) matrix[a].push_back(character(a, b));
  }
  return matrix;
}

std::string render_characters(const std::vector<std::vector<int>>& matrix, int n,
                              OutputFormat f) {
  if (f == OutputFormat::text) {
    std::ostringstream out;
    out << "character matrix for n=" << n << " (rows chi_A, columns e_B, masks ascending)\n";
    for (const auto& row : matrix) {
      for (size_t j = 0; j < row.size(); ++j) {
        out << std::setw(j == 0 ? 2 : 3) << row[j];
      }
      out << '\n';
    }
    return out.str();
  }

  if (f == OutputFormat::csv) {
    std::string out;
    for (const auto& row : matrix) {
      std::vector<std::string> fields;
      fields.reserve(row.size());
      for (int v : row) fields.push_back(std::to_string(v));
      out += csv_line(fields);
    }
    return out;
  }

  ordered_json j;
  j["command"] = "characters";
  j["n"] = n;
  j["matrix"] = matrix;
  return dump_json(j);
}

// ---- central ----------------------------------------------------------------------

CentralReport build_central(const Signature& s) {
  check_report_rank(s, 8, "central");
  CentralReport r;
  r.signature = s;
  r.class_count = conjugacy_class_count(s);
  r.basis = central_function_basis(s);
  return r;
}

std::string render_central(const CentralReport& r, OutputFormat f) {
  const Signature& s = r.signature;

  if (f == OutputFormat::text) {
    std::ostringstream out;
    out << "central-function basis for " << group_name(s) << ": " << r.basis.size()
        << " elements (conjugacy classes: " << r.class_count << ")\n";
    for (size_t i = 0; i < r.basis.size(); ++i) {
      out << 'b' << (i + 1) << " = " << element_sum_text(r.basis[i], s) << '\n';
    }
    return out.str();
  }

  if (f == OutputFormat::csv) {
    std::string out = csv_line({"basis", "coeff", "element"});
    for (size_t i = 0; i < r.basis.size(); ++i) {
      for (const auto& [index, coeff] : r.basis[i].coeffs) {
        out += csv_line({std::to_string(i + 1), rational_text(coeff),
                         render_element(element_at(s, index), s.n())});
      }
    }
    return out;
  }

  ordered_json j;
  j["command"] = "central";
  j["signature"] = s.str();
  j["n"] = s.n();
  j["count"] = r.basis.size();
  j["class_count"] = r.class_count;
  ordered_json basis = ordered_json::array();
  for (const GroupAlgebraElement& el : r.basis) {
    ordered_json terms = ordered_json::array();
    for (const auto& [index, coeff] : el.coeffs) {
      ordered_json term;
      term["coeff"] = rational_text(coeff);
      term["element"] = render_element(element_at(s, index), s.n());
      terms.push_back(std::move(term));
    }
    basis.push_back(std::move(terms));
  }
  j["basis"] = std::move(basis);
  return dump_json(j);
}

// ---- constants ----------------------------------------------------------------------

ConstantsReport build_constants(const Signature& s) {
  check_report_rank(s, 8, "constants");
  const uint64_t subsets = uint64_t{1} << s.n();
  ConstantsReport r;
  r.signature = s;
  r.rows.reserve(subsets * subsets);
  for (uint64_t a = 0; a < subsets; ++a) {
    for (uint64_t b = 0; b < subsets; ++b) {
      const VeeElement product = vee_mul(s, {0, a}, {0, b});
      r.rows.push_back({a, b, product.z ? -1 : 1, product.mask});
    }
  }
  return r;
}

std::string render_constants(const ConstantsReport& r, OutputFormat f) {
  const int n = r.signature.n();
  auto blade = [n](uint64_t mask) { return render_element({0, mask}, n); };

  if (f == OutputFormat::text) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"A", "B", "sign", "product"});
    for (const ConstantRow& row : r.rows) {
      rows.push_back({blade(row.a), blade(row.b), row.sign > 0 ? "+1" : "-1",
                      blade(row.product)});
    }
    return "structure constants for Cl(" + r.signature.str() +
           "): e_A e_B = sign * e_{A xor B}\n" + aligned_rows(rows);
  }

  if (f == OutputFormat::csv) {
    std::string out = csv_line({"A", "B", "sign", "product"});
    for (const ConstantRow& row : r.rows) {
      out += csv_line({blade(row.a), blade(row.b), std::to_string(row.sign),
                       blade(row.product)});
    }
    return out;
  }

  ordered_json j;
  j["command"] = "constants";
  j["signature"] = r.signature.str();
  j["n"] = n;
  ordered_json rows = ordered_json::array();
  for (const ConstantRow& row : r.rows) {
    ordered_json item;
    item["A"] = blade(row.a);
    item["B"] = blade(row.b);
    item["sign"] = row.sign;
    item["product"] = blade(row.product);
    rows.push_back(std::move(item));
  }
  j["rows"] = std::move(rows);
  return dump_json(j);
}

}  // namespace veegroups
