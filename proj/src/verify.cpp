#include "simion/verify.hpp"

#include <functional>
#include <map>

#include "simion/count.hpp"
#include "simion/error.hpp"
#include "simion/text.hpp"

namespace simion {

std::string_view injection_name(Injection which) {
  switch (which) {
    case Injection::Psi:
      return "psi";
    case Injection::Phi:
      return "phi";
    case Injection::PhiBar:
      return "phibar";
  }
  return "?";
}

Injection parse_injection(std::string_view name) {
  if (name == "psi") return Injection::Psi;
  if (name == "phi") return Injection::Phi;
  if (name == "phibar") return Injection::PhiBar;
  throw ParseError("unknown injection '" + std::string(name) + "'");
}

namespace {

struct Endpoints {
  int m;
  int n;
};

// Domain and codomain factors of one cell.
struct CellLayout {
  Endpoints domain_first;
  Endpoints domain_second;
  Endpoints codomain_first;
  Endpoints codomain_second;
};

CellLayout layout(Injection which, int m, int n) {
  switch (which) {
    case Injection::Psi:
      return {{m, n + 1}, {m + 1, n}, {m, n}, {m + 1, n + 1}};
    case Injection::Phi:
      return {{m - 1, n}, {m + 1, n}, {m, n}, {m, n}};
    case Injection::PhiBar:
      return {{m - 1, n + 1}, {m + 1, n - 1}, {m, n}, {m, n}};
  }
  throw std::logic_error("unknown injection");
}

int min_m(Injection which) { return which == Injection::Psi ? 0 : 1; }
int min_n(Injection which) { return which == Injection::PhiBar ? 1 : 0; }

std::string key_of(const PathPair& pair) {
  return format_path(pair.first) + "|" + format_path(pair.second);
}

bool member(const Shape& shape, const Path& path, Endpoints e) {
  return path.start() == Point{e.m, 0} && path.end() == Point{0, e.n} &&
         is_valid_path(shape, path);
}

// Every same-column pair west of `cut` is at vertical distance >= 2.
bool vertical_scan_safe(const Path& p, const Path& q, const CutPair& cut) {
  const auto pc = column_intervals(p);
  const auto qc = column_intervals(q);
  const int from = std::max(p.start().col, q.start().col);
  for (int col = from; col < cut.p_vertex.col; ++col) {
    const auto& a = pc[static_cast<std::size_t>(col - p.start().col)];
    const auto& b = qc[static_cast<std::size_t>(col - q.start().col)];
    if (b.exit_row - a.entry_row < 2) return false;
  }
  return true;
}

// Every same-row pair north of `cut` is at horizontal distance >= 2.
bool horizontal_scan_safe(const Path& p, const Path& q, const CutPair& cut) {
  const auto pr = row_intervals(p);
  const auto qr = row_intervals(q);
  const int from = std::max(p.end().row, q.end().row);
  for (int row = from; row < cut.p_vertex.row; ++row) {
    const auto& a = pr[static_cast<std::size_t>(p.start().row - row)];
    const auto& b = qr[static_cast<std::size_t>(q.start().row - row)];
    if (a.enter_col - b.leave_col < 2) return false;
  }
  return true;
}

class CellChecker {
 public:
  CellChecker(const Shape& shape, Injection which, int m, int n,
              VerificationReport& report)
      : shape_(shape), which_(which), m_(m), n_(n), report_(report) {}

  CellStats run() {
    CellStats stats{which_, m_, n_};
    const CellLayout lay = layout(which_, m_, n_);
    const auto dom_p = enumerate_paths(shape_, lay.domain_first.m,
                                       lay.domain_first.n);
    const auto dom_q = enumerate_paths(shape_, lay.domain_second.m,
                                       lay.domain_second.n);
    const auto cod_f = enumerate_paths(shape_, lay.codomain_first.m,
                                       lay.codomain_first.n);
    const auto cod_g = enumerate_paths(shape_, lay.codomain_second.m,
                                       lay.codomain_second.n);
    stats.domain_size = dom_p.size() * dom_q.size();
    stats.codomain_size = cod_f.size() * cod_g.size();

    std::map<std::string, PathPair> image;  // output key -> input
    for (const Path& p : dom_p) {
      for (const Path& q : dom_q) {
        check_forward(p, q, lay, image, stats);
      }
    }
    stats.image_size = image.size();

    for (const Path& f : cod_f) {
      for (const Path& g : cod_g) {
        check_codomain_pair({f, g}, image, stats);
      }
    }
    return stats;
  }

 private:
  PathPair forward(const Path& p, const Path& q) const {
    switch (which_) {
      case Injection::Psi:
        return psi_forward(shape_, p, q);
      case Injection::Phi:
        return phi_forward(shape_, p, q);
      case Injection::PhiBar:
        return phibar_forward(shape_, p, q);
    }
    throw std::logic_error("unknown injection");
  }

  std::optional<PathPair> inverse(const PathPair& pair) const {
    switch (which_) {
      case Injection::Psi:
        return psi_inverse(shape_, pair);
      case Injection::Phi:
        return phi_inverse(shape_, pair);
      case Injection::PhiBar:
        return phibar_inverse(shape_, pair);
    }
    throw std::logic_error("unknown injection");
  }

  void fail(std::optional<PathPair> input, std::optional<PathPair> output,
            std::string what) {
    report_.violations.push_back({which_, shape_, m_, n_, std::move(input),
                                  std::move(output), std::move(what)});
  }

  void check_forward(const Path& p, const Path& q, const CellLayout& lay,
                     std::map<std::string, PathPair>& image,
                     CellStats& stats) {
    const PathPair input{p, q};
    PathPair out{p, q};
    try {
      out = forward(p, q);
    } catch (const std::exception& e) {
      fail(input, std::nullopt, std::string("forward failed: ") + e.what());
      return;
    }

    if (!member(shape_, out.first, lay.codomain_first) ||
        !member(shape_, out.second, lay.codomain_second)) {
      fail(input, out, "output outside codomain");
    }

    try {
      const auto back = inverse(out);
      if (!back || !(*back == input)) {
        fail(input, out, "inverse does not recover input");
      }
    } catch (const std::exception& e) {
      fail(input, out, std::string("inverse failed: ") + e.what());
    }

    if (!image.emplace(key_of(out), input).second) {
      fail(input, out, "collision with input " + key_of(image.at(key_of(out))));
    }

    if (which_ == Injection::Psi) return;
    const auto cut = first_vertical_pair(p, q, 1);
    if (!cut) return;  // already reported as a forward failure
    if (!vertical_scan_safe(p, q, *cut)) {
      fail(input, out, "vertical distance below 2 west of the cut");
    }
    if (cut->p_index == 0) {
      ++stats.start_cuts;
    } else {
      const bool p_east = p.steps()[cut->p_index - 1] == 'E';
      const bool q_north =
          cut->q_index > 0 && q.steps()[cut->q_index - 1] == 'N';
      if (!p_east || !q_north) ++stats.entry_step_exceptions;
    }
    if (which_ == Injection::PhiBar) {
      const auto last = last_horizontal_pair(p, q, 1);
      if (last && !horizontal_scan_safe(p, q, *last)) {
        fail(input, out, "horizontal distance below 2 north of the cut");
      }
    }
  }

  bool has_inverse_cuts(const PathPair& pair) const {
    const auto first = first_vertical_pair(pair.first, pair.second, -1);
    if (which_ == Injection::Phi) return first.has_value();
    const auto last = last_horizontal_pair(pair.first, pair.second, -1);
    return first && last && first->p_index <= last->p_index &&
           first->q_index <= last->q_index;
  }

  void check_codomain_pair(const PathPair& pair,
                           const std::map<std::string, PathPair>& image,
                           CellStats& stats) {
    const auto hit = image.find(key_of(pair));
    const bool in_image = hit != image.end();

    if (which_ == Injection::Psi) {
      const bool crossing =
          !common_vertices(pair.first, pair.second).empty();
      if (crossing != in_image) {
        fail(std::nullopt, pair,
             crossing ? "intersecting codomain pair missing from image"
                      : "non-intersecting pair in image");
      }
    }

    std::optional<PathPair> back;
    try {
      back = inverse(pair);
    } catch (const std::exception& e) {
      fail(std::nullopt, pair, std::string("inverse failed: ") + e.what());
      return;
    }
    if (back.has_value() != in_image) {
      fail(back, pair,
           in_image ? "inverse rejects an image pair"
                    : "inverse accepts a pair outside the image");
    } else if (back && !(*back == hit->second)) {
      fail(back, pair, "inverse disagrees with the recorded preimage");
    }

    if (which_ != Injection::Psi && !in_image && has_inverse_cuts(pair)) {
      ++stats.cut_without_preimage;
    }
  }

  const Shape& shape_;
  Injection which_;
  int m_;
  int n_;
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_injection(const Shape& shape, Injection which,
                                    int max_total) {
  // The largest paths enumerated are the Psi codomain's N(m+1, n+1).
  if (max_total + 2 > kEnumerationLimit) {
    throw ScaleError("oracle scale exceeded: max total " +
                     std::to_string(max_total) + " needs paths of length " +
                     std::to_string(max_total + 2) + " > " +
                     std::to_string(kEnumerationLimit));
  }
  VerificationReport report{shape, max_total, {}, {}};
  for (int total = 0; total <= max_total; ++total) {
    for (int m = min_m(which); m <= total; ++m) {
      const int n = total - m;
      if (n < min_n(which)) continue;
      report.cells.push_back(CellChecker(shape, which, m, n, report).run());
    }
  }
  return report;
}

nlohmann::json to_json(const Violation& violation) {
  auto pair_json = [](const std::optional<PathPair>& pair) -> nlohmann::json {
    if (!pair) return nullptr;
    return nlohmann::json::array(
        {path_to_json(pair->first), path_to_json(pair->second)});
  };
  return {{"injection", std::string(injection_name(violation.which))},
          {"shape", format_shape(violation.shape)},
          {"m", violation.m},
          {"n", violation.n},
          {"input_pair", pair_json(violation.input)},
          {"output_pair", pair_json(violation.output)},
          {"violation", violation.violation}};
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"injection", std::string(injection_name(c.which))},
                     {"m", c.m},
                     {"n", c.n},
                     {"domain", c.domain_size},
                     {"codomain", c.codomain_size},
                     {"image", c.image_size},
                     {"start_cuts", c.start_cuts},
                     {"entry_step_exceptions", c.entry_step_exceptions},
                     {"cut_without_preimage", c.cut_without_preimage}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  return {{"shape", format_shape(report.shape)},
          {"max_total", report.max_total},
          {"ok", report.ok()},
          {"cells", std::move(cells)},
          {"violations", std::move(violations)}};
}

}  // namespace simion
