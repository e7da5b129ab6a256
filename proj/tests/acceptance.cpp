// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time budget.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "simion/analysis.hpp"
#include "simion/cli.hpp"
#include "simion/count.hpp"
#include "simion/polynomial.hpp"
#include "simion/text.hpp"
#include "simion/verify.hpp"

using namespace simion;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

IntPolynomial poly(std::initializer_list<long> coefficients) {
  std::vector<mpz_class> c;
  for (long v : coefficients) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

const std::vector<Shape>& injection_corpus() {
  static const std::vector<Shape> shapes = {
      Shape{},           make_shape({1}),    make_shape({2}),
      make_shape({1, 1}), make_shape({2, 1}), make_shape({2, 2}),
      make_shape({3, 1})};
  return shapes;
}

Outcome counterexample() {
  Outcome o;
  const auto seq = cli({"sequence", "--shape", "1", "--total", "4"});
  o.require(seq.code == 0 &&
                seq.out == "0,3,5,3,0 | log-concave: yes | unimodal: yes | "
                           "palindromic: yes\n",
            "sequence printed: " + seq.out);
  const auto roots = cli({"roots", "--shape", "1", "--total", "4"});
  o.require(roots.code == 0 &&
                roots.out ==
                    "3x^3+5x^2+3x | distinct real roots: 1 | all real: no\n",
            "roots printed: " + roots.out);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto shapes = shapes_in_box(4, 4);
  o.require(shapes.size() == 70, "4x4 box does not hold 70 shapes");
  for (const Shape& s : shapes) {
    const CountTable table(s);
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        o.require(count_paths(table, m, n) == enumerate_paths(s, m, n).size(),
                  "mismatch at shape " + format_shape(s) + ", m=" +
                      std::to_string(m) + ", n=" + std::to_string(n));
      }
    }
  }
  o.detail = o.passed ? std::to_string(shapes.size()) + " shapes, m,n <= 6"
                      : o.detail;
  return o;
}

Outcome injection_suites() {
  Outcome o;
  std::size_t pairs = 0;
  for (const Shape& s : injection_corpus()) {
    for (Injection which :
         {Injection::Psi, Injection::Phi, Injection::PhiBar}) {
      const auto report = verify_injection(s, which, 7);
      for (const auto& cell : report.cells) pairs += cell.domain_size;
      o.require(report.ok(),
                report.ok() ? ""
                            : to_json(report.violations.front()).dump());
    }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " domain pairs checked";
  return o;
}

Outcome desk_scale_theorem() {
  Outcome o;
  const auto shapes = shapes_in_box(5, 5);
  for (const Shape& s : shapes) {
    const CountTable table(s);
    for (int total = 0; total <= 12; ++total) {
      const auto seq = diagonal_sequence(table, total);
      o.require(is_log_concave(seq).holds && is_unimodal(seq),
                "sequence fails at shape " + format_shape(s) +
                    ", total " + std::to_string(total));
    }
    for (int m = 1; m <= 11; ++m) {
      for (int n = 1; m + n <= 12; ++n) {
        o.require(verify_inequalities(table, m, n).all_hold(),
                  "inequality fails at shape " + format_shape(s) + ", m=" +
                      std::to_string(m) + ", n=" + std::to_string(n));
      }
    }
  }
  if (o.passed) o.detail = std::to_string(shapes.size()) + " shapes";
  return o;
}

Outcome pascal() {
  Outcome o;
  const CountTable table{Shape{}};
  const auto seq = diagonal_sequence(table, 12);
  for (unsigned long i = 0; i <= 12; ++i) {
    mpz_class expected;
    mpz_bin_uiui(expected.get_mpz_t(), 12, i);
    o.require(seq.values[i] == expected, "entry " + std::to_string(i));
  }
  return o;
}

Outcome conjugate_symmetry() {
  Outcome o;
  for (const Shape& s : shapes_in_box(4, 4)) {
    const CountTable table(s);
    const CountTable transposed(conjugate(s));
    for (int m = 0; m <= 10; ++m) {
      for (int n = 0; m + n <= 10; ++n) {
        o.require(table.count(m, n) == transposed.count(n, m),
                  "transpose fails at shape " + format_shape(s));
      }
    }
  }
  for (const Shape& s : {make_shape({1}), make_shape({2, 1}),
                         make_shape({2, 2}), make_shape({3, 1, 1})}) {
    const CountTable table(s);
    for (int total = 0; total <= 10; ++total) {
      o.require(is_palindromic(diagonal_sequence(table, total)),
                "not palindromic: shape " + format_shape(s) + ", total " +
                    std::to_string(total));
    }
  }
  return o;
}

Outcome sturm() {
  Outcome o;
  o.require(count_real_roots(poly({1, -2, 1})) == 1, "(x-1)^2");
  o.require(count_real_roots(poly({1, 0, 1})) == 0, "x^2+1");
  o.require(all_roots_real(poly({1, 4, 6, 4, 1})), "(1+x)^4");
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> coefficient(-9, 9);
  std::uniform_int_distribution<int> degree(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& v : c) v = coefficient(rng);
    if (c.back() == 0) c.back() = 1;
    const IntPolynomial p(c);
    const int parity = square_free_part(p).degree() - count_real_roots(p);
    o.require(parity >= 0 && parity % 2 == 0,
              "parity fails for " + p.to_string());
  }
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"count", "--shape", "3,1", "--m", "9", "--n", "7"},
      {"sequence", "--shape", "2,1", "--total", "10", "--json"},
      {"roots", "--shape", "2,2", "--total", "9"},
      {"search", "--max-cells", "4", "--max-total", "7", "--json"},
      {"verify", "--shape", "2,1", "--max-total", "5", "--json"},
  };
  for (const auto& c : commands) {
    const auto a = cli(c);
    const auto b = cli(c);
    o.require(a.code == b.code && a.out == b.out,
              "nondeterministic output for " + c.front());
  }

  for (const Shape& s : injection_corpus()) {
    const auto r = cli({"verify", "--shape", format_shape(s), "--max-total",
                        "7", "--injection", "all"});
    o.require(r.code == 0, "verify exit " + std::to_string(r.code) +
                               " for shape " + format_shape(s));
  }

  const auto file =
      std::filesystem::temp_directory_path() / "simion_acceptance.svg";
  for (int paths = 1; paths <= 2; ++paths) {
    std::vector<std::string> args = {"render", "--shape", "2,1", "--path",
                                     "(3,0):ENENEN"};
    if (paths == 2) {
      args.insert(args.end(), {"--path", "(4,0):NNENENE"});
    }
    args.insert(args.end(), {"--mark", "2,1", "--out", file.string()});
    const auto r = cli(args);
    o.require(r.code == 0, "render exit " + std::to_string(r.code));
    try {
      boost::property_tree::ptree tree;
      boost::property_tree::read_xml(file.string(), tree);
      const auto& svg = tree.get_child("svg");
      int polylines = 0;
      int circles = 0;
      for (const auto& child : svg) {
        polylines += child.first == "polyline";
        circles += child.first == "circle";
      }
      o.require(polylines == paths, "polyline count " +
                                        std::to_string(polylines));
      o.require(circles == 1, "marker count " + std::to_string(circles));
    } catch (const std::exception& e) {
      o.require(false, std::string("SVG does not parse: ") + e.what());
    }
  }
  std::filesystem::remove(file);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"1 counterexample reproduction", 1, counterexample},
      {"2 oracle equivalence", 30, oracle_equivalence},
      {"3 injection suites", 120, injection_suites},
      {"4 log-concavity and inequality chain", 60, desk_scale_theorem},
      {"5 Pascal specialization", 1e9, pascal},
      {"6 conjugate and symmetry", 1e9, conjugate_symmetry},
      {"7 Sturm module", 1e9, sturm},
      {"8 CLI contract", 1e9, cli_contract},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (seconds > c.budget_seconds) {
      outcome.require(false, "over time budget");
    }
    all = all && outcome.passed;
    std::cout << (outcome.passed ? "PASS " : "FAIL ") << c.name << " ("
              << seconds << " s)";
    if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
    std::cout << '\n';
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
