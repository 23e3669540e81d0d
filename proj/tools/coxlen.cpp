// Batch interface to the library: root system catalogs, length bounds,
// translation dimensions, factorizations, and the experiment harness.
// Output is JSON (schema coxlen/1) or CSV, written to stdout or --out.
//
// Exit codes: 0 success, 1 computation failure (machine-readable error
// object on stdout), 2 usage or parse error.
#include "coxlen/expr.hpp"
#include "coxlen/oracle.hpp"
#include "coxlen/universal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::ordered_json;
using namespace coxlen;

namespace {

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

std::string vec_to_cell(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += rat_to_string(v[i]);
  }
  return out;
}

std::string lattice_to_cell(const std::vector<long long>& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(lambda[i]);
  }
  return out;
}

json report_to_json(const LengthReport& rep) {
  json j;
  j["lower"] = rep.lower;
  if (rep.upper)
    j["upper"] = *rep.upper;
  else
    j["upper"] = nullptr;
  j["exact"] = rep.exact;
  j["certificate"] = certificate_name(rep.certificate);
  if (rep.witness)
    j["witness"] = print_word(*rep.witness);
  else
    j["witness"] = nullptr;
  return j;
}

struct Output {
  std::string format = "json";
  std::string path;

  void write(const json& j, const std::string& csv) const {
    std::string text = format == "csv" ? csv : j.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file " + path);
    f << text;
  }
};

std::string polynomial_string(const LengthPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(p[i]);
    } else {
      if (p[i] != 1) out += std::to_string(p[i]);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

int cmd_roots(const std::string& spec, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  json j;
  j["schema"] = "coxlen/1";
  j["system"] = rs.name();
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient_dim();
  j["exponents"] = rs.exponents();
  json simples = json::array();
  for (int p : rs.simple_positive_indices()) simples.push_back(p + 1);
  j["simple_positive_indices"] = simples;
  json roots = json::array();
  for (std::size_t p = 0; p < rs.positive_roots().size(); ++p) {
    json r;
    r["index"] = p + 1;
    r["root"] = vec_to_json(rs.positive_roots()[p]);
    r["coroot"] = vec_to_json(rs.positive_coroots()[p]);
    roots.push_back(r);
  }
  j["positive_roots"] = roots;
  std::string csv = "index,root,coroot\n";
  for (std::size_t p = 0; p < rs.positive_roots().size(); ++p)
    csv += std::to_string(p + 1) + "," + vec_to_cell(rs.positive_roots()[p]) +
           "," + vec_to_cell(rs.positive_coroots()[p]) + "\n";
  out.write(j, csv);
  return 0;
}

int cmd_length(const std::string& spec, const std::string& expr, bool oracle,
               int window, int max_len, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  AffineElement w = parse_element(rs, expr);
  LengthReport rep = length_bounds(rs, w);
  json j;
  j["schema"] = "coxlen/1";
  j["system"] = rs.name();
  j["element"] = print_element(rs, w);
  json body = report_to_json(rep);
  for (auto& [key, value] : body.items()) j[key] = value;
  if (oracle) {
    int cap = max_len >= 0 ? max_len
                           : (rep.upper ? *rep.upper : 2 * rs.rank());
    LengthReport found = oracle_affine_length(rs, w, window, cap);
    j["oracle"] = report_to_json(found);
  }
  std::string upper = rep.upper ? std::to_string(*rep.upper) : "";
  std::string csv = "element,lower,upper,exact,certificate,witness\n";
  csv += print_element(rs, w) + "," + std::to_string(rep.lower) + "," + upper +
         "," + (rep.exact ? "true" : "false") + "," +
         certificate_name(rep.certificate) + "," +
         (rep.witness ? print_word(*rep.witness) : "") + "\n";
  out.write(j, csv);
  return 0;
}

int cmd_dimension(const std::string& spec, const std::string& lambda_text,
                  bool all_minimal, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  std::vector<long long> lambda = parse_lattice(rs, lambda_text);
  RealDimensionWitness real = real_dimension(rs, lambda);
  DimensionWitness integral = integral_expression(rs, lambda);
  json j;
  j["schema"] = "coxlen/1";
  j["system"] = rs.name();
  j["lambda"] = lambda;
  j["k"] = real.k;
  json idx = json::array();
  for (int i : real.coroot_indices) idx.push_back(i + 1);
  j["coroot_indices"] = idx;
  json coroots = json::array();
  for (const Vec& c : integral.coroots) coroots.push_back(vec_to_json(c));
  j["coroots"] = coroots;
  j["coefficients"] = integral.coefficients;
  std::string csv = "lambda,k,coroot_indices,coefficients\n";
  csv += lattice_to_cell(lambda) + "," + std::to_string(real.k) + ",";
  for (std::size_t i = 0; i < real.coroot_indices.size(); ++i)
    csv += (i ? " " : "") + std::to_string(real.coroot_indices[i] + 1);
  csv += ",";
  for (std::size_t i = 0; i < integral.coefficients.size(); ++i)
    csv += (i ? " " : "") + std::to_string(integral.coefficients[i]);
  csv += "\n";
  if (all_minimal) {
    auto planes = minimal_subspaces(rs, lambda);
    j["minimal_subspace_count"] = planes.size();
    json arr = json::array();
    for (const MinimalSubspace& p : planes) {
      json entry;
      json pidx = json::array();
      for (int i : p.coroot_indices) pidx.push_back(i + 1);
      entry["coroot_indices"] = pidx;
      json rows = json::array();
      for (std::size_t r = 0; r < p.basis_rref.rows(); ++r)
        rows.push_back(vec_to_json(p.basis_rref.row(r)));
      entry["basis"] = rows;
      arr.push_back(entry);
    }
    j["minimal_subspaces"] = arr;
  }
  out.write(j, csv);
  return 0;
}

int cmd_factor(const std::string& spec, const std::string& expr, int window,
               int max_len, bool all_minimal, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  AffineElement w = parse_element(rs, expr);
  LengthReport rep = length_bounds(rs, w);
  json j;
  j["schema"] = "coxlen/1";
  j["system"] = rs.name();
  j["element"] = print_element(rs, w);
  std::string csv = "word\n";
  if (rep.exact && rep.witness) {
    j["length"] = rep.lower;
    j["certificate"] = certificate_name(rep.certificate);
    j["word"] = print_word(*rep.witness);
    csv += print_word(*rep.witness) + "\n";
  } else {
    int cap = max_len >= 0 ? max_len : (rep.upper ? *rep.upper : 2 * rs.rank());
    LengthReport found = oracle_affine_length(rs, w, window, cap);
    if (!found.upper)
      throw Error("no factorization found within the window; raise --window");
    j["length"] = *found.upper;
    j["certificate"] = certificate_name(found.certificate);
    j["word"] = print_word(*found.witness);
    csv += print_word(*found.witness) + "\n";
  }
  if (all_minimal) {
    int len = j["length"].get<int>();
    auto words = oracle_all_minimal(rs, w, window, len);
    json arr = json::array();
    for (const ReflectionWord& word : words) {
      arr.push_back(print_word(word));
      csv += print_word(word) + "\n";
    }
    j["all_minimal"] = arr;
  }
  out.write(j, csv);
  return 0;
}

int cmd_uc(const std::string& word, bool unrestricted, const Output& out) {
  json j;
  j["schema"] = "coxlen/1";
  j["word"] = word;
  std::string reduced = uc_reduce(word);
  j["reduced"] = reduced;
  j["ls"] = uc_standard_length(word);
  int lr = uc_reflection_length(word);
  j["lr"] = lr;
  if (unrestricted) j["lr_unrestricted"] = uc_reflection_length_unrestricted(word);
  std::string csv = "word,reduced,ls,lr\n";
  csv += word + "," + reduced + "," + std::to_string(uc_standard_length(word)) +
         "," + std::to_string(lr) + "\n";
  out.write(j, csv);
  return 0;
}

int experiment_solomon(const std::string& spec, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  LengthPolynomial poly = solomon_polynomial(rs);
  json j;
  j["schema"] = "coxlen/1";
  j["experiment"] = "solomon";
  j["system"] = rs.name();
  j["coefficients"] = poly;
  std::string factored;
  for (int e : rs.exponents())
    factored += "(1+" + (e == 1 ? std::string() : std::to_string(e)) + "x)";
  j["factored"] = factored;
  j["polynomial"] = polynomial_string(poly);
  std::string csv = "degree,coefficient\n";
  for (std::size_t i = 0; i < poly.size(); ++i)
    csv += std::to_string(i) + "," + std::to_string(poly[i]) + "\n";
  out.write(j, csv);
  return 0;
}

int experiment_a3_crossing(const Output& out) {
  CrossingReport rep = a3_crossing_obstruction();
  json j;
  j["schema"] = "coxlen/1";
  j["experiment"] = "a3-crossing";
  j["total"] = rep.total;
  j["both_crossing"] = rep.with_both_crossings;
  j["coverage"] = rep.coverage;
  j["reflection_count"] = 6;
  std::string csv = "total,both_crossing,coverage\n" +
                    std::to_string(rep.total) + "," +
                    std::to_string(rep.with_both_crossings) + "," +
                    std::to_string(rep.coverage) + "\n";
  out.write(j, csv);
  return 0;
}

int experiment_uc_powers(int max_n, const Output& out) {
  json rows = json::array();
  std::string csv = "n,ls,lr\n";
  std::string word;
  for (int n = 1; n <= max_n; ++n) {
    word += "abc";
    json row;
    row["n"] = n;
    row["ls"] = uc_standard_length(word);
    row["lr"] = uc_reflection_length(word);
    rows.push_back(row);
    csv += std::to_string(n) + "," + std::to_string(uc_standard_length(word)) +
           "," + std::to_string(uc_reflection_length(word)) + "\n";
  }
  json j;
  j["schema"] = "coxlen/1";
  j["experiment"] = "uc-powers";
  j["rows"] = rows;
  out.write(j, csv);
  return 0;
}

int experiment_census(const std::string& spec, long long box, bool oracle,
                      int window, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  auto rows = translation_census(rs, box, oracle, window);
  json j;
  j["schema"] = "coxlen/1";
  j["experiment"] = "census";
  j["system"] = rs.name();
  j["box"] = box;
  json arr = json::array();
  std::string csv = oracle ? "lambda,k,lower,upper,certificate,oracle\n"
                           : "lambda,k,lower,upper,certificate\n";
  int max_len = 0;
  for (const CensusRow& row : rows) {
    json r;
    r["lambda"] = row.lambda;
    r["k"] = row.k;
    r["lower"] = row.lower;
    if (row.upper)
      r["upper"] = *row.upper;
    else
      r["upper"] = nullptr;
    r["certificate"] = certificate_name(row.certificate);
    if (oracle) r["oracle"] = row.oracle_length ? json(*row.oracle_length) : json();
    arr.push_back(r);
    csv += lattice_to_cell(row.lambda) + "," + std::to_string(row.k) + "," +
           std::to_string(row.lower) + "," +
           (row.upper ? std::to_string(*row.upper) : "") + "," +
           certificate_name(row.certificate);
    if (oracle)
      csv += "," + (row.oracle_length ? std::to_string(*row.oracle_length)
                                      : std::string());
    csv += "\n";
    if (row.upper && *row.upper > max_len) max_len = *row.upper;
  }
  j["rows"] = arr;
  j["max_length"] = max_len;
  out.write(j, csv);
  return 0;
}

int experiment_f_lambda(const std::string& spec, const std::string& lambda_text,
                        int window, const Output& out) {
  RootSystem rs = RootSystem::build(spec);
  std::vector<long long> lambda = parse_lattice(rs, lambda_text);
  LengthPolynomial poly = f_lambda_polynomial(rs, lambda, window);
  int k = real_dimension(rs, lambda).k;
  json j;
  j["schema"] = "coxlen/1";
  j["experiment"] = "f-lambda";
  j["system"] = rs.name();
  j["lambda"] = lambda;
  j["k"] = k;
  j["coefficients"] = poly;
  j["polynomial"] = polynomial_string(poly);
  std::string csv = "degree,coefficient\n";
  for (std::size_t i = 0; i < poly.size(); ++i)
    csv += std::to_string(i) + "," + std::to_string(poly[i]) + "\n";
  out.write(j, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reflection length computations in affine Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  int window = 4;
  int max_len = -1;
  long long seed = 0;
  app.add_option("--format", out.format, "Output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "Write output to a file instead of stdout");
  app.add_option("--window", window, "Offset window for reflection searches")
      ->capture_default_str();
  app.add_option("--max-len", max_len,
                 "Search depth cap (-1 derives it from the bounds)")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized sweeps (reserved)")
      ->capture_default_str();

  std::string spec, expr, lambda_text, word, name;
  bool all_minimal = false, with_oracle = false, unrestricted = false;
  long long box = 2;
  int max_n = 4;

  CLI::App* roots = app.add_subcommand("roots", "Catalog a root system");
  roots->add_option("spec", spec, "Root system, e.g. A2, B3, A1xA2")->required();

  CLI::App* length = app.add_subcommand("length", "Length bounds for an element");
  length->add_option("spec", spec)->required();
  length->add_option("element", expr, "Element expression")->required();
  length->add_flag("--oracle", with_oracle, "Also run the brute-force search");

  CLI::App* dimension =
      app.add_subcommand("dimension", "Translation dimension of a lattice vector");
  dimension->add_option("spec", spec)->required();
  dimension->add_option("lambda", lambda_text, "Lattice coordinates")->required();
  dimension->add_flag("--all-minimal", all_minimal,
                      "List every minimal coroot subspace");

  CLI::App* factor = app.add_subcommand("factor", "Reflection factorization");
  factor->add_option("spec", spec)->required();
  factor->add_option("element", expr)->required();
  factor->add_flag("--all-minimal", all_minimal,
                   "Enumerate all minimal factorizations in the window");

  CLI::App* experiment = app.add_subcommand("experiment", "Batch experiments");
  experiment->add_option("name", name, "solomon|a3-crossing|uc-powers|census|f-lambda")
      ->required();
  experiment->add_option("--type", spec, "Root system for the experiment");
  experiment->add_option("--lambda", lambda_text, "Lattice coordinates");
  experiment->add_option("--box", box, "Census box radius")->capture_default_str();
  experiment->add_option("--max-n", max_n, "Largest power for uc-powers")
      ->capture_default_str();
  experiment->add_flag("--oracle", with_oracle, "Cross-check census with search");

  CLI::App* uc = app.add_subcommand("uc", "Universal Coxeter group on a, b, c");
  uc->add_option("word", word, "Word over a, b, c")->required();
  uc->add_flag("--unrestricted", unrestricted,
               "Also run the unrestricted-alphabet search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(spec, out);
    if (length->parsed())
      return cmd_length(spec, expr, with_oracle, window, max_len, out);
    if (dimension->parsed())
      return cmd_dimension(spec, lambda_text, all_minimal, out);
    if (factor->parsed())
      return cmd_factor(spec, expr, window, max_len, all_minimal, out);
    if (experiment->parsed()) {
      if (name == "solomon") return experiment_solomon(spec, out);
      if (name == "a3-crossing") return experiment_a3_crossing(out);
      if (name == "uc-powers") return experiment_uc_powers(max_n, out);
      if (name == "census")
        return experiment_census(spec, box, with_oracle, window, out);
      if (name == "f-lambda")
        return experiment_f_lambda(spec, lambda_text, window, out);
      throw Error("unknown experiment " + name);
    }
    if (uc->parsed()) return cmd_uc(word, unrestricted, out);
  } catch (const Error& e) {
    json j;
    j["schema"] = "coxlen/1";
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
