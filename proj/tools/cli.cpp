// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgraph/bond_graph.hpp"
#include "qgraph/bounds.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/format.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/metric_graph.hpp"
#include "qgraph/pseudo_orbits.hpp"
#include "qgraph/reduction.hpp"
#include "qgraph/secular.hpp"

namespace qgraph::cli {
namespace {

using nlohmann::json;

enum class Format { kTable, kRecords };

struct RunConfig {
  std::string command;
  std::string input;
  Format format = Format::kTable;
  std::string plan;
  std::size_t cap = kDefaultOrbitCap;
  std::optional<std::size_t> max_bonds;
  std::optional<double> radius;
  std::optional<std::string> k;
  bool exact = false;
  double cluster_tolerance = RootOptions{}.cluster_tolerance;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw Error(ErrorCode::kParse, "empty wavenumber");
  try {
    if (s.back() != 'i') {
      std::size_t used = 0;
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    s.pop_back();
    // Split at the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    const std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    std::size_t used_re = 0, used_im = 0;
    const double re = std::stod(re_part, &used_re);
    const double im = std::stod(im_part, &used_im);
    if (used_re != re_part.size() || used_im != im_part.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParse, "cannot parse wavenumber '" + text + "'");
  }
}

std::string fraction(const Rational& r) { return to_fraction_string(r); }

json fraction_list(const RationalPolynomial& p) {
  json out = json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(fraction(p.coefficient(static_cast<std::size_t>(i))));
  return out;
}

/// Small-denominator rational close to x, as text, or the decimal value.
std::string nice_number(double x) {
  for (long q = 1; q <= 64; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(p / static_cast<double>(q) - x) < 1e-9) {
      return to_string(ratio(static_cast<long>(p), q));
    }
  }
  return format_real(x);
}

/// The resonance lattice of one family written out in units of 1/ell.
std::string lattice_formula(const ResonanceFamily& f) {
  std::string phase;
  if (std::abs(std::abs(f.argument) - std::numbers::pi) < 1e-9) {
    phase = "(2n+1)π";
  } else if (std::abs(f.argument) < 1e-9) {
    phase = "2nπ";
  } else {
    phase = "2nπ " + std::string(f.argument > 0 ? "- " : "+ ") + format_real(std::abs(f.argument));
  }
  std::string decay;
  if (std::abs(f.modulus - 1) > 1e-9) decay = " - i ln " + nice_number(1 / f.modulus);
  if (decay.empty()) return "(1/ℓ)" + phase;
  return "(1/ℓ)[" + phase + decay + "]";
}

Rational in_ell(const Rational& value, const Rational& ell) { return ell == 0 ? Rational(0) : Rational(value / ell); }

int cmd_validate(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  const ValidationReport report = validate_graph(g);
  if (cfg.format == Format::kRecords) {
    for (const auto& v : report.violations)
      out << json{{"record", "violation"}, {"kind", v.kind}, {"subject", v.subject}, {"detail", v.detail}}.dump()
          << '\n';
    out << json{{"record", "validation"}, {"ok", report.ok()}, {"violations", report.violations.size()}}.dump()
        << '\n';
  } else {
    for (const auto& v : report.violations) out << v.kind << ": " << v.subject << " (" << v.detail << ")\n";
    out << (report.ok() ? "valid" : "invalid") << '\n';
  }
  return report.ok() ? 0 : 2;
}

int cmd_classify(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  require_valid(g);
  const StructuralFlags flags = structural_flags(g);
  const std::size_t n_bal = balanced_vertex_indices(g).size();
  json rec{{"record", "classify"}, {"n_bal", n_bal}};
  std::string line;
  if (flags.equilateral || cfg.exact) {
    const SecularPolynomial p = secular_polynomial(g);
    const WeylClass w = classify_weyl(p);
    const std::string verdict = w.verdict == WeylVerdict::kWeyl ? "Weyl" : "non-Weyl";
    rec["verdict"] = verdict;
    rec["method"] = "polynomial";
    rec["ell"] = fraction(p.ell);
    rec["W"] = fraction(w.effective_size);
    rec["volume"] = fraction(w.volume);
    rec["degree"] = p.degree();
    line = verdict + ", W = " + format_in_ell(in_ell(w.effective_size, p.ell)) +
           ", vol = " + format_in_ell(in_ell(w.volume, p.ell));
  } else {
    const std::string verdict = classify_weyl_by_vertices(g) == WeylVerdict::kWeyl ? "Weyl" : "non-Weyl";
    rec["verdict"] = verdict;
    rec["method"] = "vertex";
    rec["W"] = "n/a";
    rec["volume"] = fraction(g.volume());
    line = verdict + ", W = n/a, vol = " + to_string(g.volume());
  }
  if (cfg.format == Format::kRecords) {
    out << rec.dump() << '\n';
  } else {
    out << line << '\n' << "n_bal = " << n_bal << '\n';
  }
  return 0;
}

int cmd_secular(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  require_valid(g);
  const bool equilateral = structural_flags(g).equilateral;
  json rec{{"record", "secular"}};
  if (equilateral || !cfg.k) {
    const SecularPolynomial p = secular_polynomial(g);
    rec["ell"] = fraction(p.ell);
    rec["bonds"] = p.bond_count;
    rec["degree"] = p.degree();
    rec["coefficients"] = fraction_list(p.poly);
    if (cfg.format == Format::kTable) {
      out << "P(z) = " << to_string(p.poly) << "   (z = exp(ikℓ), ℓ = " << to_string(p.ell) << ")\n";
      out << "degree " << p.degree() << " of " << p.bond_count << ", zero eigenvalues "
          << p.zero_eigenvalues() << '\n';
    }
  }
  if (cfg.k) {
    const std::complex<double> k = parse_complex(*cfg.k);
    const std::complex<double> value = secular_value(g, k);
    rec["k"] = format_complex(k);
    rec["value"] = format_complex(value);
    if (cfg.format == Format::kTable) out << "det(exp(ikL) S - I) at k = " << format_complex(k) << ": "
                                          << format_complex(value) << '\n';
  }
  if (cfg.format == Format::kRecords) out << rec.dump() << '\n';
  return 0;
}

int cmd_resonances(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  const SecularPolynomial p = secular_polynomial(g);
  RootOptions options;
  options.cluster_tolerance = cfg.cluster_tolerance;
  const std::vector<ResonanceFamily> families = resonance_families(g, options);
  const double ell = to_double(p.ell);
  for (const auto& f : families) {
    const std::string formula = lattice_formula(f);
    if (cfg.format == Format::kRecords) {
      out << json{{"record", "family"},
                  {"eigenvalue", format_complex(f.eigenvalue)},
                  {"modulus", format_real(f.modulus)},
                  {"argument", format_real(f.argument)},
                  {"multiplicity", f.multiplicity},
                  {"k0", format_complex(f.resonance(0, ell))},
                  {"lattice", "k = " + formula}}
                 .dump()
          << '\n';
    } else {
      out << "c = " << format_complex(f.eigenvalue) << "  multiplicity " << f.multiplicity << "  k = " << formula
          << ", n ∈ Z\n";
    }
  }
  if (cfg.format == Format::kTable) {
    out << families.size() << " families, multiplicities counted in the k-plane\n";
  }
  if (cfg.radius) {
    const DiscCount disc = resonances_in_disc(families, *cfg.radius, ell);
    if (cfg.format == Format::kRecords) {
      json points = json::array();
      for (const auto& pt : disc.points) points.push_back({{"k", format_complex(pt.k)}, {"multiplicity", pt.multiplicity}});
      out << json{{"record", "disc"}, {"radius", format_real(*cfg.radius)}, {"count", disc.count}, {"points", points}}
                 .dump()
          << '\n';
    } else {
      out << "resonances with |k| <= " << format_real(*cfg.radius) << ": " << disc.count << '\n';
    }
  }
  return 0;
}

int cmd_orbits(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  const BondGraph bg = build_bond_graph(g);
  const std::size_t max_bonds = cfg.max_bonds.value_or(bg.size());
  const OrbitReport report = orbit_report(g, max_bonds, cfg.cap);
  for (const auto& [bonds, group] : report.by_bond_count()) {
    if (cfg.format == Format::kTable) out << bonds << " bonds: " << group.size() << " pseudo orbits\n";
    for (const PseudoOrbit* p : group) {
      const std::string text = describe(report, *p, bg);
      if (cfg.format == Format::kRecords) {
        out << json{{"record", "pseudo_orbit"},
                    {"bonds", text},
                    {"total_bonds", p->total_bonds},
                    {"m", p->orbit_count()},
                    {"amplitude", fraction(p->amplitude)},
                    {"contribution", fraction(p->contribution())}}
                   .dump()
            << '\n';
      } else {
        out << "  " << text << "  m = " << p->orbit_count() << "  A = " << to_string(p->amplitude) << '\n';
      }
    }
  }
  if (cfg.format == Format::kTable) {
    out << report.orbits.size() << " periodic orbits, " << report.pseudo_orbits.size() << " irreducible pseudo orbits\n";
  }
  return 0;
}

void print_matrix(std::ostream& out, const RationalMatrix& m, const BondGraph& bg) {
  out << "      ";
  for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << std::setw(6) << bg.label(c);
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << std::setw(6) << bg.label(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << std::setw(6) << to_string(m(r, c));
    out << '\n';
  }
}

json matrix_rows(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fraction(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_reduce(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  require_reducible(g);
  const BondGraph bg = build_bond_graph(g);
  const RationalMatrix s = exact_bond_scattering(g);
  const ReductionPlan plan = cfg.plan.empty() ? default_plan(g, bg) : parse_plan(read_file(cfg.plan), g, bg);
  const ReducedSystem reduced = apply_reduction(g, bg, s, plan);
  const bool verified = verify_reduction(s, reduced);
  if (cfg.format == Format::kRecords) {
    json steps = json::array();
    for (const auto& st : plan.steps) steps.push_back({{"vertex", g.vertex(st.vertex).id}, {"bond", bg.label(st.bond)}});
    json ghosts = json::array();
    for (const auto& e : reduced.ghost_entries)
      ghosts.push_back({{"row", bg.label(e.row)}, {"column", bg.label(e.column)}, {"amplitude", fraction(e.amplitude)},
                        {"step", e.step}});
    json labels = json::array();
    for (std::size_t b = 0; b < bg.size(); ++b) labels.push_back(bg.label(b));
    out << json{{"record", "reduction"}, {"steps", steps},         {"bonds", labels},
                {"ghost_entries", ghosts}, {"matrix", matrix_rows(reduced.matrix)}, {"verified", verified}}
               .dump()
        << '\n';
  } else {
    out << "plan:";
    for (const auto& st : plan.steps) out << ' ' << bg.label(st.bond) << '@' << g.vertex(st.vertex).id;
    out << '\n';
    print_matrix(out, reduced.matrix, bg);
    out << reduced.ghost_entries.size() << " ghost entries\n";
    for (const auto& e : reduced.ghost_entries)
      out << "  " << bg.label(e.column) << " -> " << bg.label(e.row) << "  " << to_string(e.amplitude) << '\n';
    out << "determinant preserved: " << (verified ? "yes" : "no") << '\n';
  }
  return verified ? 0 : 2;
}

int cmd_bounds(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  const BoundReport r = bound_report(g);
  const Rational& ell = r.main.ell;
  if (cfg.format == Format::kRecords) {
    json squares = json::array();
    for (const auto& sq : r.squares) {
      json ids = json::array();
      for (auto v : sq) ids.push_back(g.vertex(v).id);
      squares.push_back(ids);
    }
    out << json{{"record", "bounds"},
                {"ell", fraction(ell)},
                {"n_bal", r.main.n_bal},
                {"n_nonneig", r.main.n_nonneig},
                {"volume", fraction(r.main.volume)},
                {"bound_bal", fraction(r.main.bound_bal)},
                {"bound_main", fraction(r.main.bound_main)},
                {"squares", squares},
                {"bound_square", r.bound_square ? json(fraction(*r.bound_square)) : json(nullptr)},
                {"W_actual", fraction(r.w_actual)},
                {"rank_S", r.rank.rank_s},
                {"rank_S2", r.rank.rank_s2},
                {"rank_drop", r.rank.strict}}
               .dump()
        << '\n';
  } else {
    out << "vol = " << format_in_ell(in_ell(r.main.volume, ell)) << ", n_bal = " << r.main.n_bal
        << ", n_nonneig = " << r.main.n_nonneig << '\n';
    out << "bound from balanced vertices: " << format_in_ell(in_ell(r.main.bound_bal, ell)) << '\n';
    out << "bound with non-neighboring balanced vertices: " << format_in_ell(in_ell(r.main.bound_main, ell)) << '\n';
    if (r.squares.empty()) {
      out << "balanced squares: none\n";
    } else {
      for (const auto& sq : r.squares)
        out << "balanced square: " << g.vertex(sq[0]).id << ' ' << g.vertex(sq[1]).id << ' ' << g.vertex(sq[2]).id
            << ' ' << g.vertex(sq[3]).id << '\n';
      out << "bound from squares: " << format_in_ell(in_ell(*r.bound_square, ell)) << '\n';
    }
    out << "W = " << format_in_ell(in_ell(r.w_actual, ell)) << '\n';
    out << "rank S = " << r.rank.rank_s << ", rank S^2 = " << r.rank.rank_s2
        << ", rank drop: " << (r.rank.strict ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const MetricGraph& g, std::ostream& out) {
  OrbitOptions options;
  options.cap = cfg.cap;
  const SecularPolynomial det = secular_polynomial(g);
  const SecularPolynomial expansion = expansion_polynomial(g, options);
  const bool expansion_ok = det.poly == expansion.poly;

  std::optional<bool> reduction_ok;
  std::string reduction_note;
  try {
    require_reducible(g);
  } catch (const Error& e) {
    reduction_note = e.what();
  }
  if (reduction_note.empty()) {
    const BondGraph bg = build_bond_graph(g);
    const RationalMatrix s = exact_bond_scattering(g);
    const ReductionPlan plan = cfg.plan.empty() ? default_plan(g, bg) : parse_plan(read_file(cfg.plan), g, bg);
    reduction_ok = verify_reduction(s, apply_reduction(g, bg, s, plan));
  }
  const bool ok = expansion_ok && reduction_ok.value_or(true);
  if (cfg.format == Format::kRecords) {
    out << json{{"record", "verify"},
                {"expansion_matches", expansion_ok},
                {"reduction_preserves", reduction_ok ? json(*reduction_ok) : json(nullptr)},
                {"ok", ok}}
               .dump()
        << '\n';
  } else {
    out << "pseudo-orbit expansion equals det(zS - I): " << (expansion_ok ? "yes" : "no") << '\n';
    if (reduction_ok) {
      out << "ghost-edge reduction preserves det(zS - I): " << (*reduction_ok ? "yes" : "no") << '\n';
    } else {
      out << "ghost-edge reduction skipped: " << reduction_note << '\n';
    }
  }
  return ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resonance analysis of quantum graphs with leads", "qgraph"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "table";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "graph file (JSON)")->required();
    sub->add_option("--format", format, "table or records")->check(CLI::IsMember({"table", "records"}));
  };
  auto* validate = app.add_subcommand("validate", "check a graph file against the structural rules");
  auto* classify = app.add_subcommand("classify", "Weyl / non-Weyl verdict and effective size");
  auto* secular = app.add_subcommand("secular", "secular polynomial det(zS - I)");
  auto* resonances = app.add_subcommand("resonances", "resonance families and disc counts");
  auto* orbits = app.add_subcommand("orbits", "irreducible pseudo orbits by bond count");
  auto* reduce = app.add_subcommand("reduce", "ghost-edge reduction");
  auto* bounds = app.add_subcommand("bounds", "structural bounds on the effective size");
  auto* verify = app.add_subcommand("verify", "cross-check determinant, expansion and reduction");
  for (auto* sub : {validate, classify, secular, resonances, orbits, reduce, bounds, verify}) add_common(sub);

  classify->add_flag("--exact", cfg.exact, "require the exact polynomial path");
  secular->add_option("--k", cfg.k, "evaluate the secular determinant at this wavenumber (a+bi)");
  resonances->add_option("--radius", cfg.radius, "count resonances with |k| <= radius");
  resonances->add_option("--cluster-tol", cfg.cluster_tolerance, "root clustering tolerance");
  orbits->add_option("--cap", cfg.cap, "abort when more orbits than this are found");
  orbits->add_option("--max-bonds", cfg.max_bonds, "largest pseudo orbit to list");
  verify->add_option("--cap", cfg.cap, "orbit cap for the expansion");
  for (auto* sub : {reduce, verify}) sub->add_option("--plan", cfg.plan, "deletion plan file (JSON)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "records" ? Format::kRecords : Format::kTable;

  try {
    const MetricGraph g = load_graph(cfg.input);
    if (cfg.command == "validate") return cmd_validate(cfg, g, out);
    if (cfg.command == "classify") return cmd_classify(cfg, g, out);
    if (cfg.command == "secular") return cmd_secular(cfg, g, out);
    if (cfg.command == "resonances") return cmd_resonances(cfg, g, out);
    if (cfg.command == "orbits") return cmd_orbits(cfg, g, out);
    if (cfg.command == "reduce") return cmd_reduce(cfg, g, out);
    if (cfg.command == "bounds") return cmd_bounds(cfg, g, out);
    return cmd_verify(cfg, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kParse ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qgraph::cli
