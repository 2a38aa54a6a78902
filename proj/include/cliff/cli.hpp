#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliff/basis.hpp"
#include "cliff/dirac.hpp"
#include "cliff/fischer.hpp"
#include "cliff/json.hpp"
#include "cliff/numeric.hpp"
#include "cliff/parse.hpp"

namespace cliff::cli {

enum ExitCode : int { kOk = 0, kPrecondition = 1, kParse = 2 };

/// dim I(k) as the kernel dimension of S on P(k), by exact blocked rank.
inline std::size_t infra_dim(int m, int k) {
  if (k < 2) return space_dim(m, k);
  const BlockedOperator s(PolyBasis(m, k), {PolyBasis(m, k - 2)},
                          [](const CliffordPolynomial& p) { return stack_one(sandwich(p)); });
  return space_dim(m, k) - s.rank();
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct Inputs {
  int m = 0;
  std::optional<int> k;
  std::string format = "text";
  std::vector<std::string> polys;
  std::string file;

  std::vector<std::string> collect() const {
    std::vector<std::string> out = polys;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw PreconditionError("cannot open " + file);
      std::string line;
      while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    if (out.empty()) throw PreconditionError("no polynomial given");
    return out;
  }
};

inline void add_common(CLI::App* sub, Inputs& in, bool with_k, bool with_polys) {
  sub->add_option("--m", in.m, "Number of generators m")->required()->check(CLI::Range(1, kMaxDim));
  if (with_k) sub->add_option("--k", in.k, "Homogeneous degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  if (with_polys) {
    sub->add_option("polynomial", in.polys, "Polynomial in the x/e grammar");
    sub->add_option("--file", in.file, "Read one polynomial per line");
  }
}

inline void run_check(const Inputs& in, std::ostream& out) {
  bool first = true;
  for (const auto& text : in.collect()) {
    const CliffordPolynomial p = parse_polynomial(text, in.m);
    const std::vector<std::pair<std::string, bool>> verdicts = {
        {"left_monogenic", is_left_monogenic(p)},
        {"right_monogenic", is_right_monogenic(p)},
        {"two_sided_monogenic", is_two_sided_monogenic(p)},
        {"inframonogenic", is_inframonogenic(p)},
        {"harmonic", is_harmonic(p)},
        {"biharmonic", is_biharmonic(p)},
        {"left_3_monogenic", is_k_monogenic(p, 3, Side::Left)},
        {"right_3_monogenic", is_k_monogenic(p, 3, Side::Right)},
    };
    if (in.format == "json") {
      Json j;
      j["m"] = in.m;
      j["input"] = p.to_string();
      for (const auto& [name, v] : verdicts) j[name] = v;
      j["sandwich"] = sandwich(p).to_string();
      out << j.dump(2) << '\n';
    } else {
      if (!first) out << '\n';
      out << "input: " << p.to_string() << '\n';
      for (const auto& [name, v] : verdicts) out << name << ": " << yes_no(v) << '\n';
      out << "sandwich: " << sandwich(p).to_string() << '\n';
    }
    first = false;
  }
}

inline void run_decompose(const Inputs& in, bool tower, std::ostream& out) {
  for (const auto& text : in.collect()) {
    const CliffordPolynomial p = parse_polynomial(text, in.m);
    const DecompositionResult d = fischer_decompose(p, in.k);
    const Json j = tower ? to_json(d, fischer_tower(p, d.k)) : to_json(d);
    out << j.dump(2) << '\n';
  }
}

inline void run_inner(const Inputs& in, std::ostream& out) {
  const auto texts = in.collect();
  if (texts.size() != 2) throw PreconditionError("inner expects exactly two polynomials");
  const Rational v = fischer_inner(parse_polynomial(texts[0], in.m), parse_polynomial(texts[1], in.m));
  if (in.format == "json")
    out << Json{{"inner", to_string(v)}}.dump(2) << '\n';
  else
    out << to_string(v) << '\n';
}

inline void run_dims(const Inputs& in, std::ostream& out) {
  if (!in.k) throw PreconditionError("dims needs --k");
  const int k = *in.k;
  if (in.format == "json") {
    Json rows = Json::array();
    for (int d = 0; d <= k; ++d)
      rows.push_back({{"k", d}, {"space_dim", space_dim(in.m, d)}, {"infra_dim", infra_dim(in.m, d)}});
    out << Json{{"m", in.m}, {"k", k}, {"table", rows}}.dump(2) << '\n';
    return;
  }
  out << "space_dim(" << in.m << ", " << k << ") = " << space_dim(in.m, k) << '\n';
  out << "dim I(" << k << ") = " << infra_dim(in.m, k) << '\n';
  out << "k space_dim dim_I\n";
  for (int d = 0; d <= k; ++d) out << d << ' ' << space_dim(in.m, d) << ' ' << infra_dim(in.m, d) << '\n';
}

inline void run_almansi(const Inputs& in, std::ostream& out) {
  bool first = true;
  for (const auto& text : in.collect()) {
    const CliffordPolynomial h = parse_polynomial(text, in.m);
    const HarmonicInfraReport r = harmonic_inframonogenic_analysis(h, in.k);
    if (in.format == "json") {
      Json j;
      j["m"] = in.m;
      j["input"] = h.to_string();
      j["f1"] = r.split.f1.to_string();
      j["f2"] = r.split.f2.to_string();
      j["dirac_identity"] = almansi_dirac_identity(h, r.split);
      j["inframonogenic"] = r.inframonogenic;
      j["weighted_f2_right_monogenic"] = r.weighted_f2_right_monogenic;
      j["f2_two_sided_monogenic"] = r.f2_two_sided;
      out << j.dump(2) << '\n';
    } else {
      if (!first) out << '\n';
      out << "input: " << h.to_string() << '\n'
          << "f1: " << r.split.f1.to_string() << '\n'
          << "f2: " << r.split.f2.to_string() << '\n'
          << "dirac_identity: " << yes_no(almansi_dirac_identity(h, r.split)) << '\n'
          << "inframonogenic: " << yes_no(r.inframonogenic) << '\n'
          << "weighted_f2_right_monogenic: " << yes_no(r.weighted_f2_right_monogenic) << '\n'
          << "f2_two_sided_monogenic: " << yes_no(r.f2_two_sided) << '\n';
    }
    first = false;
  }
}

struct FamilyInputs {
  numeric::TrigExpFamily family;
  double h = numeric::kDefaultStep;
  std::size_t grid = 5;
  std::string format = "text";
};

inline void run_family(const FamilyInputs& in, std::ostream& out) {
  const auto grid = numeric::square_grid(in.grid);
  const auto field = numeric::as_field(in.family);
  const double sandwich_max = numeric::max_sandwich_residual(field, grid, in.h);
  const auto harmonic = numeric::family_harmonicity_scan(in.family, grid, in.h);
  double ode_max = 0.0;
  for (const auto& p : grid) {
    const auto r = numeric::ode_system_residual(in.family, p[0]);
    ode_max = std::max({ode_max, std::abs(r.alpha), std::abs(r.beta)});
  }
  if (in.format == "json") {
    out << Json{{"sandwich_max", format_double(sandwich_max)},
                {"laplacian_max", format_double(harmonic.max_residual)},
                {"harmonic", harmonic.harmonic},
                {"ode_max", format_double(ode_max)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "sandwich_max: " << format_double(sandwich_max) << '\n'
      << "laplacian_max: " << format_double(harmonic.max_residual) << '\n'
      << "harmonic: " << yes_no(harmonic.harmonic) << '\n'
      << "ode_max: " << format_double(ode_max) << '\n';
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 precondition failure, 2 parse error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford analysis: inframonogenic polynomials and Fischer decompositions", "cliff"};
  app.require_subcommand(1);

  detail::Inputs check_in, decomp_in, tower_in, inner_in, dims_in, almansi_in;
  detail::FamilyInputs family_in;

  auto* check = app.add_subcommand("check", "Print Dirac-operator predicates");
  detail::add_common(check, check_in, false, true);
  auto* decompose = app.add_subcommand("decompose", "Fischer decomposition P = I + x Q x (JSON)");
  detail::add_common(decompose, decomp_in, true, true);
  auto* tower = app.add_subcommand("tower", "Complete Fischer decomposition (JSON)");
  detail::add_common(tower, tower_in, true, true);
  auto* inner = app.add_subcommand("inner", "Fischer inner product of two polynomials");
  detail::add_common(inner, inner_in, false, true);
  auto* dims = app.add_subcommand("dims", "Dimensions of P(k) and I(k)");
  detail::add_common(dims, dims_in, true, false);
  auto* almansi = app.add_subcommand("almansi", "Almansi split of a harmonic polynomial");
  detail::add_common(almansi, almansi_in, true, true);
  auto* family = app.add_subcommand("family", "Finite-difference checks of the trig-exp family");
  family->set_help_flag("--help", "Print this help message and exit");
  family->add_option("--c1", family_in.family.c1);
  family->add_option("--c2", family_in.family.c2);
  family->add_option("--c3", family_in.family.c3);
  family->add_option("--c4", family_in.family.c4);
  family->add_option("--n", family_in.family.n);
  family->add_option("--h", family_in.h, "Finite-difference step")->check(CLI::PositiveNumber);
  family->add_option("--grid", family_in.grid, "Grid points per axis on [-1,1]")->check(CLI::Range(1, 1000));
  family->add_option("--format", family_in.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }

  try {
    if (check->parsed()) detail::run_check(check_in, out);
    else if (decompose->parsed()) detail::run_decompose(decomp_in, false, out);
    else if (tower->parsed()) detail::run_decompose(tower_in, true, out);
    else if (inner->parsed()) detail::run_inner(inner_in, out);
    else if (dims->parsed()) detail::run_dims(dims_in, out);
    else if (almansi->parsed()) detail::run_almansi(almansi_in, out);
    else if (family->parsed()) detail::run_family(family_in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DimensionMismatch& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}

}  // namespace cliff::cli
