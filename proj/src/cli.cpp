#include "simion/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "simion/analysis.hpp"
#include "simion/count.hpp"
#include "simion/error.hpp"
#include "simion/render.hpp"
#include "simion/text.hpp"
#include "simion/verify.hpp"

namespace simion::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::json big_to_json(const mpz_class& v) { return v.get_str(); }

struct Options {
  std::string shape;
  int m = 0;
  int n = 0;
  int total = 0;
  bool json = false;
  bool csv = false;
  int max_total = 7;
  std::string injection = "all";
  int max_cells = 0;
  bool only_failures = false;
  std::vector<std::string> paths;
  std::vector<std::string> marks;
  std::string out_file;
  int scale = 40;
};

int do_count(const Options& o, std::ostream& out) {
  const CountTable table(parse_shape(o.shape));
  out << count_paths(table, o.m, o.n).get_str() << '\n';
  return kOk;
}

int do_sequence(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape(o.shape);
  const CountTable table(shape);
  const CountSequence seq = diagonal_sequence(table, o.total);
  const bool log_concave = is_log_concave(seq).holds;
  const bool unimodal = is_unimodal(seq);
  const bool palindromic = is_palindromic(seq);

  if (o.csv) {
    out << "shape,total,index,value\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      out << '"' << format_shape(shape) << "\"," << o.total << ',' << i << ','
          << seq.values[i].get_str() << '\n';
    }
    return kOk;
  }
  if (o.json) {
    const IntPolynomial poly = sequence_polynomial(seq);
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : seq.values) values.push_back(big_to_json(v));
    nlohmann::json doc = {{"shape", format_shape(shape)},
                          {"total", o.total},
                          {"sequence", std::move(values)},
                          {"log_concave", log_concave},
                          {"unimodal", unimodal},
                          {"palindromic", palindromic},
                          {"real_rooted", nullptr}};
    if (!poly.is_zero()) doc["real_rooted"] = all_roots_real(poly);
    out << doc.dump() << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    out << (i ? "," : "") << seq.values[i].get_str();
  }
  out << " | log-concave: " << yes_no(log_concave)
      << " | unimodal: " << yes_no(unimodal)
      << " | palindromic: " << yes_no(palindromic) << '\n';
  return kOk;
}

int do_roots(const Options& o, std::ostream& out) {
  const CountTable table(parse_shape(o.shape));
  const IntPolynomial poly =
      sequence_polynomial(diagonal_sequence(table, o.total));
  if (poly.is_zero()) {
    out << "0 | empty diagonal\n";
    return kOk;
  }
  const RealRootSummary summary = summarize_real_roots(poly);
  out << poly.to_string() << " | distinct real roots: "
      << summary.distinct_real_roots << " | all real: "
      << yes_no(summary.all_real) << '\n';
  return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape(o.shape);
  std::vector<Injection> which;
  if (o.injection == "all") {
    which = {Injection::Psi, Injection::Phi, Injection::PhiBar};
  } else {
    which = {parse_injection(o.injection)};
  }

  std::vector<VerificationReport> reports;
  for (Injection w : which) {
    reports.push_back(verify_injection(shape, w, o.max_total));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.ok(); });

  if (o.json) {
    nlohmann::json doc = {{"ok", ok}, {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    out << doc.dump(2) << '\n';
    return ok ? kOk : kViolation;
  }

  out << "shape " << format_shape(shape) << ", m+n <= " << o.max_total
      << '\n';
  out << "injection  cells  domain  image  codomain  start-cuts  "
         "entry-step-exceptions  cut-without-preimage  violations\n";
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& r : reports) {
    std::size_t domain = 0, image = 0, codomain = 0, starts = 0, entry = 0,
                orphan = 0;
    for (const auto& c : r.cells) {
      domain += c.domain_size;
      image += c.image_size;
      codomain += c.codomain_size;
      starts += c.start_cuts;
      entry += c.entry_step_exceptions;
      orphan += c.cut_without_preimage;
    }
    const std::string name(injection_name(which[&r - reports.data()]));
    out << name << std::string(11 - name.size(), ' ') << r.cells.size()
        << "  " << domain << "  " << image << "  " << codomain << "  "
        << starts << "  " << entry << "  " << orphan << "  " << r.violations.size() << '\n';
    for (const auto& v : r.violations) violations.push_back(to_json(v));
  }
  if (!ok) {
    out << violations.dump(2) << '\n';
    return kViolation;
  }
  out << "all checks passed\n";
  return kOk;
}

int do_search(const Options& o, std::ostream& out, std::ostream& err) {
  nlohmann::json rows = nlohmann::json::array();
  bool consistent = true;
  for_each_root_verdict(o.max_cells, o.max_total, [&](const RootVerdict& v) {
    consistent = consistent && v.sign_check_passed;
    if (o.only_failures && v.real_rooted) return true;
    if (o.json) {
      rows.push_back({{"shape", format_shape(v.shape)},
                      {"total", v.total},
                      {"degree", v.degree},
                      {"distinct_real_roots", v.distinct_real_roots},
                      {"real_rooted", v.real_rooted},
                      {"sign_check", v.sign_check_passed}});
    } else {
      out << "shape " << format_shape(v.shape) << " | total " << v.total
          << " | degree " << v.degree << " | distinct real roots "
          << v.distinct_real_roots << " | all real: " << yes_no(v.real_rooted)
          << '\n';
    }
    return true;
  });
  if (o.json) out << rows.dump(2) << '\n';
  if (!consistent) {
    err << "error: sign-change recheck disagrees with a Sturm count\n";
    return kViolation;
  }
  return kOk;
}

int do_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.shape = parse_shape(o.shape);
  for (const auto& p : o.paths) spec.paths.push_back(parse_path(p));
  for (const auto& m : o.marks) spec.marks.push_back(parse_point(m));
  spec.scale = o.scale;
  std::string svg;
  try {
    svg = render_svg(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + o.out_file + "' for writing");
  file << svg;
  if (!file) throw ParseError("failed writing '" + o.out_file + "'");
  out << "wrote " << o.out_file << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lattice paths avoiding a Ferrers shape: counts, diagonal "
               "sequences, injections and real-rootedness"};
  app.name("simion");
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Print N(m,n)");
  count->add_option("--shape", o.shape, "Shape parts, e.g. 2,1")->required();
  count->add_option("--m", o.m, "Start row")->required()->check(
      CLI::NonNegativeNumber);
  count->add_option("--n", o.n, "End column")->required()->check(
      CLI::NonNegativeNumber);

  auto* sequence =
      app.add_subcommand("sequence", "Diagonal N(0,T)..N(T,0) with verdicts");
  sequence->add_option("--shape", o.shape)->required();
  sequence->add_option("--total", o.total)->required()->check(
      CLI::NonNegativeNumber);
  auto* json_flag = sequence->add_flag("--json", o.json, "Emit JSON");
  sequence->add_flag("--csv", o.csv, "Emit CSV rows")->excludes(json_flag);

  auto* verify = app.add_subcommand(
      "verify", "Exhaustively check the injections; exit 1 on a violation");
  verify->add_option("--shape", o.shape)->required();
  verify->add_option("--max-total", o.max_total, "Largest m+n")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--injection", o.injection)
      ->check(CLI::IsMember({"psi", "phi", "phibar", "all"}));
  verify->add_flag("--json", o.json, "Emit the full report as JSON");

  auto* roots = app.add_subcommand(
      "roots", "Generating polynomial of a diagonal and its real roots");
  roots->add_option("--shape", o.shape)->required();
  roots->add_option("--total", o.total)->required()->check(
      CLI::NonNegativeNumber);

  auto* search =
      app.add_subcommand("search", "Real-rootedness over small shapes");
  search->add_option("--max-cells", o.max_cells)->required()->check(
      CLI::NonNegativeNumber);
  search->add_option("--max-total", o.max_total)->required()->check(
      CLI::NonNegativeNumber);
  search->add_flag("--only-failures", o.only_failures);
  search->add_flag("--json", o.json);

  auto* render = app.add_subcommand("render", "Draw paths as SVG");
  render->add_option("--shape", o.shape)->required();
  render->add_option("--path", o.paths, "(r,c):STEPS, once or twice")
      ->required();
  render->add_option("--mark", o.marks, "Vertex r,c to highlight");
  render->add_option("--out", o.out_file, "Output SVG file")->required();
  render->add_option("--scale", o.scale, "Pixels per unit")
      ->check(CLI::Range(4, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return do_count(o, out);
    if (*sequence) return do_sequence(o, out);
    if (*verify) return do_verify(o, out);
    if (*roots) return do_roots(o, out);
    if (*search) return do_search(o, out, err);
    if (*render) return do_render(o, out);
  } catch (const ScaleError& e) {
    err << "error: " << e.what() << '\n';
    return kScale;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace simion::cli
