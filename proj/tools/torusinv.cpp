#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "torusinv/io.hpp"
#include "torusinv/oracle.hpp"
#include "torusinv/stdecomp.hpp"
#include "torusinv/tori.hpp"
#include "torusinv/truncpoly.hpp"
#include "torusinv/verify.hpp"

using json = nlohmann::ordered_json;
using namespace torusinv;

namespace {

std::string bigint_str(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

json rational_json(const Rational& r) {
  std::ostringstream num, den;
  num << boost::multiprecision::numerator(r);
  den << boost::multiprecision::denominator(r);
  return json{{"num", num.str()}, {"den", den.str()}};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  r += '"';
  return r;
}

int run_classes(const std::string& family, int n, long long q, const std::string& format,
                const std::string& out_path) {
  GroupSpec spec = make_spec(family_from_string(family), n, q);
  json rows = json::array();
  std::ostringstream csv;
  csv << "label,centralizer_order,torus_order,epsilon\n";
  for (const WeylClassLabel& label : enumerate_classes(spec)) {
    CanonicalTorus torus = build_canonical_torus(spec, label);
    json row;
    row["label"] = label_to_string(label);
    row["centralizer_order"] = centralizer_order(spec, label);
    row["torus_order"] = bigint_str(torus.order());
    row["epsilon"] = epsilon_sign(spec, label);
    rows.push_back(row);
    csv << label_to_string(label) << "," << centralizer_order(spec, label) << ","
        << bigint_str(torus.order()) << "," << epsilon_sign(spec, label) << "\n";
  }
  if (format == "csv") {
    write_output(csv.str(), out_path);
  } else {
    json doc;
    doc["family"] = family_name(spec.family);
    doc["n"] = spec.n;
    doc["q"] = spec.q;
    doc["classes"] = rows;
    write_output(doc.dump(2) + "\n", out_path);
  }
  return 0;
}

int run_verify(const std::string& theorem, int max_n, const std::string& q_list_arg,
               long long max_enum, const std::string& format, const std::string& out_path) {
  std::vector<long long> q_list;
  std::stringstream ss(q_list_arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) q_list.push_back(std::stoll(tok));
  }
  if (q_list.empty()) throw std::runtime_error("empty q list");

  VerifyReport report = verify_theorem(theorem, max_n, q_list, max_enum);
  if (format == "csv") {
    std::ostringstream csv;
    csv << "key,expected,actual,status\n";
    for (const VerifyCell& c : report.cells)
      csv << csv_escape(c.key) << "," << csv_escape(c.expected) << ","
          << csv_escape(c.actual) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
    write_output(csv.str(), out_path);
  } else {
    json doc;
    doc["theorem"] = report.theorem;
    doc["cells"] = json::array();
    for (const VerifyCell& c : report.cells) {
      doc["cells"].push_back(json{{"key", c.key},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"status", c.pass ? "PASS" : "FAIL"}});
    }
    doc["total"] = report.cells.size();
    doc["failures"] = report.fail_count();
    write_output(doc.dump(2) + "\n", out_path);
  }
  return report.all_pass() ? 0 : 1;
}

int run_decompose(int n, long long q, const std::string& weight_arg, long long d0_arg,
                  bool d0_given, const std::string& format, const std::string& out_path) {
  GroupSpec spec = make_spec(Family::SL, n, q);
  LambdaWeight nu;
  std::stringstream ss(weight_arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) nu.coords.push_back(std::stoll(tok));
  if (int(nu.coords.size()) != n - 1)
    throw std::runtime_error("weight must have " + std::to_string(n - 1) + " entries");

  if (!is_strongly_q_restricted(nu, spec.p, spec.m)) {
    // Name the digit that breaks the restriction.
    json refusal;
    refusal["error"] = "weight not strongly q-restricted";
    auto digits = steinberg_digits(nu, spec.p, spec.m);
    if (!digits) {
      refusal["reason"] = "a coordinate lies outside [0, q)";
    } else {
      for (size_t t = 0; t < digits->size(); ++t) {
        if (!is_strongly_p_restricted((*digits)[t], spec.p)) {
          refusal["violated_digit"] = t;
          json coords = json::array();
          for (long long a : (*digits)[t].coords) coords.push_back(a);
          refusal["digit_weight"] = coords;
          refusal["reason"] = "digit is not strongly p-restricted (coefficient sum >= p)";
          break;
        }
      }
    }
    write_output(refusal.dump(2) + "\n", out_path);
    return 1;
  }

  std::optional<long long> d0 = d0_given ? std::optional<long long>(d0_arg) : std::nullopt;
  Th5Report report = theorem_th5_report(spec, nu, d0);

  json doc;
  doc["case"] = report.special ? "special" : "generic";
  if (report.special) doc["i"] = report.special_index;
  doc["d0"] = report.d0;
  doc["per_torus_values"] = json::array();
  for (const auto& [label, value] : report.per_torus_values.values)
    doc["per_torus_values"].push_back(json{{"label", label_to_string(label)}, {"value", value}});
  doc["rt1_coeffs"] = json::array();
  for (const auto& [label, coeff] : report.vector.coeffs) {
    json r = rational_json(coeff);
    doc["rt1_coeffs"].push_back(
        json{{"label", label_to_string(label)}, {"num", r["num"]}, {"den", r["den"]}});
  }
  if (format == "csv") {
    std::ostringstream csv;
    csv << "label,value,num,den\n";
    for (const auto& [label, value] : report.per_torus_values.values) {
      const Rational& c = report.vector.coeffs.at(label);
      csv << label_to_string(label) << "," << value << ","
          << boost::multiprecision::numerator(c) << ","
          << boost::multiprecision::denominator(c) << "\n";
    }
    write_output(csv.str(), out_path);
  } else {
    write_output(doc.dump(2) + "\n", out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of maximal tori of finite classical groups"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  auto* classes = app.add_subcommand("classes", "List torus classes of a group");
  classes->fallthrough();
  std::string family;
  int n = 0;
  long long q = 0;
  classes->add_option("--family", family, "Group family")->required();
  classes->add_option("--n", n, "Rank")->required();
  classes->add_option("--q", q, "Field size")->required();

  auto* verify = app.add_subcommand("verify", "Run a theorem verification sweep");
  verify->fallthrough();
  std::string theorem;
  int max_n = 3;
  std::string q_list = "2,3,4,5";
  long long max_enum = 1'000'000;
  verify->add_option("--theorem", theorem, "Theorem id")
      ->required()
      ->check(CLI::IsMember(known_theorems()));
  verify->add_option("--max-n", max_n, "Largest rank in the sweep");
  verify->add_option("--q-list", q_list, "Comma-separated field sizes");
  verify->add_option("--max-enum", max_enum, "Brute-force enumeration bound");

  auto* decompose = app.add_subcommand("decompose", "Steinberg-product decomposition for SL");
  decompose->fallthrough();
  std::string weight;
  long long d0 = 0;
  decompose->add_option("--family", family, "Group family (only sl)")
      ->check(CLI::IsMember({"sl"}));
  decompose->add_option("--n", n, "Rank")->required();
  decompose->add_option("--q", q, "Field size")->required();
  decompose->add_option("--weight", weight, "Comma-separated weight coefficients")->required();
  auto* d0_opt = decompose->add_option("--d0", d0, "Zero-weight multiplicity of the module");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classes->parsed()) return run_classes(family, n, q, format, out_path);
    if (verify->parsed()) return run_verify(theorem, max_n, q_list, max_enum, format, out_path);
    if (decompose->parsed())
      return run_decompose(n, q, weight, d0, d0_opt->count() > 0, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
