#include "analogy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "analogy/analogy_ops.hpp"
#include "analogy/error.hpp"
#include "analogy/landscape.hpp"
#include "analogy/means.hpp"
#include "analogy/solver.hpp"

namespace analogy::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parsing helpers

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(fmt::format("'{}' is not a decimal number", text));
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw UsageError(fmt::format("'{}' is not a decimal number", text));
  }
  return v;
}

std::array<double, 4> parse_four(const std::vector<std::string>& terms) {
  if (terms.size() != 4) throw UsageError(fmt::format("expected 4 terms, got {}", terms.size()));
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = parse_real(terms[i]);
  return out;
}

bool looks_complex(const std::string& text) { return text.find('i') != std::string::npos; }

/// Accepts "re", "imi", "re+imi", "re-imi", "i", "-i", "re+i", "re-i".
std::complex<double> parse_complex(const std::string& text) {
  const auto fail = [&] { return UsageError(fmt::format("'{}' is not a complex literal (re+imi)", text)); };
  if (text.empty()) throw fail();
  if (text.back() != 'i') return {parse_real(text), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // The sign that separates the two parts is the last one not leading the
  // literal and not belonging to an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imaginary = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part);
  };
  try {
    if (split == std::string::npos) return {0.0, imaginary(body)};
    return {parse_real(body.substr(0, split)), imaginary(body.substr(split))};
  } catch (const UsageError&) {
    throw fail();
  }
}

Position parse_position(const std::string& text) {
  if (text == "a" || text == "A") return Position::A;
  if (text == "b" || text == "B") return Position::B;
  if (text == "c" || text == "C") return Position::C;
  if (text == "d" || text == "D") return Position::D;
  throw UsageError(fmt::format("position must be one of a, b, c, d; got '{}'", text));
}

ExtendedPower parse_power(const std::string& text) {
  try {
    return ExtendedPower::parse(text);
  } catch (const DomainError&) {
    throw UsageError(fmt::format("'{}' is not a power (decimal, inf or -inf)", text));
  }
}

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw UsageError(fmt::format("axis '{}' must be ROLE:MIN:MAX:STEPS", text));
  const double steps = parse_real(parts[3]);
  if (steps < 1 || steps != std::floor(steps)) throw UsageError("axis steps must be a positive integer");
  return Axis{parse_position(parts[0]), parse_real(parts[1]), parse_real(parts[2]),
              static_cast<std::size_t>(steps)};
}

FixedTerm parse_fixed(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError(fmt::format("fixed term '{}' must be ROLE=VALUE", text));
  return FixedTerm{parse_position(text.substr(0, eq)), parse_real(text.substr(eq + 1))};
}

// ---------------------------------------------------------------------------
// Output helpers

std::string text_number(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  return fmt::format("{:.10g}", v);
}

std::string text_complex(std::complex<double> z) {
  // Rounding noise of the polar rotation (e.g. cos(pi/2)) prints as 0.
  const double noise = 1e-14 * std::abs(z);
  const double re = std::abs(z.real()) < noise ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < noise ? 0.0 : z.imag();
  return fmt::format("{}{}{}i", text_number(re), std::signbit(im) ? "-" : "+", text_number(std::abs(im)));
}

json json_number(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  return std::stod(fmt::format("{:.9g}", v));
}

json json_power(ExtendedPower p) { return json_number(p.value()); }

json json_terms(std::span<const double> terms) {
  json arr = json::array();
  for (double t : terms) arr.push_back(json_number(t));
  return arr;
}

json result_object() {
  return json{{"status", nullptr}, {"p", nullptr}, {"x", nullptr}, {"residual", nullptr}, {"arrangement", nullptr}};
}

std::string join_terms(std::span<const double> terms) {
  std::string s;
  for (double t : terms) {
    if (!s.empty()) s += ' ';
    s += text_number(t);
  }
  return s;
}

std::string power_status(const PowerResult& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniquePower>) return "unique";
        else if constexpr (std::is_same_v<T, AllPowers>) return "allp";
        else if constexpr (std::is_same_v<T, NoPower>) return "nop";
        else return v.side.kind() == ExtendedPower::Kind::NegInf ? "inf-" : "inf+";
      },
      r);
}

void report_power(const PowerResult& r, json& obj, std::ostream& text) {
  obj["status"] = power_status(r);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniquePower>) {
          obj["p"] = json_power(v.p);
          obj["residual"] = json_number(v.residual);
          text << "p = " << to_string(v.p) << '\n' << "residual = " << text_number(v.residual) << '\n';
        } else if constexpr (std::is_same_v<T, AllPowers>) {
          obj["p"] = "all";
          text << "p = all\n";
        } else if constexpr (std::is_same_v<T, NoPower>) {
          text << "p = none (" << to_string(v.reason) << ")\n";
        } else {
          obj["p"] = json_power(v.side);
          text << "p = " << to_string(v.side) << " (degenerate)\n";
        }
      },
      r);
}

struct Common {
  bool json_output = false;
};

void add_json_flag(CLI::App* sub, Common& common) {
  sub->add_flag("--json", common.json_output, "Emit a single JSON object");
}

void emit(const Common& common, const json& obj, const std::string& text, std::ostream& out) {
  if (common.json_output) {
    out << obj.dump() << '\n';
  } else {
    out << text;
  }
}

Quadruple positive_quadruple(const std::array<double, 4>& t, bool normalize) {
  Quadruple q(t);
  if (normalize && !q.all_positive()) return negative_normalize(q);
  return q;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analogies in power p over generalized means"};
  app.name("analogy");
  app.require_subcommand(1);

  Common common;
  std::function<void()> action;

  // mean ---------------------------------------------------------------------
  std::string mean_p;
  std::vector<std::string> mean_values;
  auto* mean = app.add_subcommand("mean", "Generalized mean of positive values");
  mean->add_option("--p", mean_p, "Power: decimal, 0, inf or -inf")->required();
  mean->add_option("values", mean_values, "Positive values")->required();
  add_json_flag(mean, common);
  mean->callback([&] {
    action = [&] {
      std::vector<double> values;
      for (const auto& v : mean_values) values.push_back(parse_real(v));
      const ExtendedPower p = parse_power(mean_p);
      const double m = generalized_mean_n(values, p);
      json obj = result_object();
      obj["status"] = "ok";
      obj["p"] = json_power(p);
      obj["x"] = json_number(m);
      obj["arrangement"] = json_terms(values);
      emit(common, obj, text_number(m) + "\n", out);
    };
  });

  // check --------------------------------------------------------------------
  std::string check_p;
  std::vector<std::string> check_terms;
  double rel_tol = kDefaultRelTol;
  bool check_normalize = false;
  auto* check_cmd = app.add_subcommand("check", "Test a : b :: c : d in power p");
  check_cmd->add_option("--p", check_p, "Power: decimal, 0, inf or -inf")->required();
  check_cmd->add_option("--rel-tol", rel_tol, "Relative tolerance on the two means")->capture_default_str();
  check_cmd->add_flag("--normalize-negatives", check_normalize,
                      "Map two-negative-ratio / all-negative quadruples to positive terms first");
  check_cmd->add_option("terms", check_terms, "a b c d")->required();
  add_json_flag(check_cmd, common);
  check_cmd->callback([&] {
    action = [&] {
      const Quadruple q = positive_quadruple(parse_four(check_terms), check_normalize);
      const AnalogyVerdict v = check(q, parse_power(check_p), rel_tol);
      json obj = result_object();
      obj["status"] = v.holds ? "holds" : "fails";
      obj["p"] = json_power(v.p_used);
      obj["residual"] = json_number(v.residual);
      obj["arrangement"] = json_terms(q.terms());
      emit(common, obj,
           fmt::format("{}\nresidual = {}\n", v.holds ? "holds" : "does not hold", text_number(v.residual)), out);
    };
  });

  // find-p -------------------------------------------------------------------
  std::vector<std::string> find_terms;
  std::string arrangement_name = "sorted";
  bool fixed = false;
  bool find_normalize = false;
  FindPOptions find_options;
  auto* find_cmd = app.add_subcommand("find-p", "Find the power p of four positive terms");
  find_cmd->add_option("terms", find_terms, "Four terms")->required();
  find_cmd->add_option("--arrangement", arrangement_name, "Reordering: sorted, acdb or adbc")
      ->check(CLI::IsMember({"sorted", "acdb", "adbc"}))
      ->capture_default_str();
  find_cmd->add_flag("--fixed", fixed, "Keep the given arrangement (no reordering)");
  find_cmd->add_flag("--normalize-negatives", find_normalize,
                     "Map two-negative-ratio / all-negative quadruples to positive terms first");
  find_cmd->add_option("--tol-p", find_options.tol_p, "Bisection bracket width")->capture_default_str();
  find_cmd->add_option("--p-max", find_options.p_max, "Largest |p| searched")->capture_default_str();
  add_json_flag(find_cmd, common);
  find_cmd->callback([&] {
    action = [&] {
      if (fixed && arrangement_name != "sorted") throw UsageError("--fixed and --arrangement are exclusive");
      const auto raw = parse_four(find_terms);
      const Quadruple given = positive_quadruple(raw, find_normalize);
      require_all_positive(given, "find-p");

      std::ostringstream text;
      json obj = result_object();
      Quadruple used = given;
      if (!fixed) {
        std::array<double, 4> sorted = given.terms();
        std::sort(sorted.begin(), sorted.end());
        if (arrangement_name == "sorted") {
          used = Quadruple(sorted);
        } else {
          const auto options = reorderings(given.terms());
          used = arrangement_name == "acdb" ? options[1] : options[2];
        }
      }
      const PowerResult result = fixed || arrangement_name != "sorted"
                                     ? find_p_in_arrangement(used, find_options)
                                     : find_p(used, find_options);

      // 1-based input position of each arranged term; ties resolved left to right.
      std::array<int, 4> permutation{};
      std::array<bool, 4> taken{};
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          if (!taken[j] && given[j] == used[i]) {
            taken[j] = true;
            permutation[i] = static_cast<int>(j) + 1;
            break;
          }
        }
      }
      text << "arrangement = " << join_terms(used.terms()) << '\n'
           << fmt::format("permutation = {} {} {} {}\n", permutation[0], permutation[1], permutation[2],
                          permutation[3]);
      obj["arrangement"] = json_terms(used.terms());
      report_power(result, obj, text);
      emit(common, obj, text.str(), out);
    };
  });

  // solve --------------------------------------------------------------------
  std::string solve_p;
  std::vector<std::string> solve_terms;
  std::string missing_name = "d";
  bool force_complex = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the analogical equation for one missing term");
  solve_cmd->add_option("--p", solve_p, "Power: decimal, 0, inf or -inf")->required();
  solve_cmd->add_option("--missing", missing_name, "Position of the unknown: a, b, c or d")->capture_default_str();
  solve_cmd->add_flag("--complex", force_complex, "Solve over the complex numbers");
  solve_cmd->add_option("known", solve_terms, "The three known terms in position order")->required();
  add_json_flag(solve_cmd, common);
  solve_cmd->callback([&] {
    action = [&] {
      if (solve_terms.size() != 3) throw UsageError(fmt::format("expected 3 known terms, got {}", solve_terms.size()));
      const Position missing = parse_position(missing_name);
      const ExtendedPower p = parse_power(solve_p);
      const bool complex_mode =
          force_complex || std::any_of(solve_terms.begin(), solve_terms.end(), looks_complex);
      json obj = result_object();
      obj["p"] = json_power(p);
      std::ostringstream text;

      if (complex_mode) {
        ComplexKnownTerms known{};
        for (std::size_t i = 0; i < 3; ++i) known[i] = parse_complex(solve_terms[i]);
        const SolveResult r = solve_complex(known, missing, p);
        if (const auto* u = std::get_if<UniqueComplex>(&r)) {
          obj["status"] = "unique";
          obj["x"] = json{{"re", json_number(u->x.real())}, {"im", json_number(u->x.imag())}};
          text << "x = " << text_complex(u->x) << '\n';
          if (p.is_finite()) {
            const double residual = complex_equation_residual(move_unknown_to_d(known, missing), u->x, p.value(), u->branch);
            obj["residual"] = json_number(residual);
            text << "residual = " << text_number(residual) << '\n';
          }
          if (u->branch != 0) text << "branch = " << u->branch << '\n';
        } else {
          obj["status"] = "no-solution";
          text << "no solution\n";
        }
        emit(common, obj, text.str(), out);
        return;
      }

      KnownTerms known{};
      for (std::size_t i = 0; i < 3; ++i) known[i] = parse_real(solve_terms[i]);
      const SolveResult r = solve_real(known, missing, p);
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UniqueReal>) {
              std::array<double, 4> full{};
              const auto slot = static_cast<std::size_t>(missing);
              for (std::size_t i = 0, k = 0; i < 4; ++i) full[i] = i == slot ? v.x : known[k++];
              const AnalogyVerdict verdict = check(Quadruple(full), p, 0.0);
              obj["status"] = "unique";
              obj["x"] = json_number(v.x);
              obj["residual"] = json_number(verdict.residual);
              obj["arrangement"] = json_terms(full);
              text << "x = " << text_number(v.x) << '\n';
            } else if constexpr (std::is_same_v<T, HalfLineAtLeast>) {
              obj["status"] = "half-line-at-least";
              obj["x"] = json_number(v.bound);
              text << "x >= " << text_number(v.bound) << '\n';
            } else if constexpr (std::is_same_v<T, HalfLineAtMost>) {
              obj["status"] = "half-line-at-most";
              obj["x"] = json_number(v.bound);
              text << "x <= " << text_number(v.bound) << '\n';
            } else {
              obj["status"] = "no-solution";
              text << "no solution\n";
            }
          },
          r);
      emit(common, obj, text.str(), out);
    };
  });

  // reduce -------------------------------------------------------------------
  std::vector<std::string> reduce_terms;
  std::optional<double> scale_by;
  bool unit = false;
  std::optional<std::string> arithmetic_p;
  std::optional<double> compose_exponent;
  std::optional<std::string> compose_p;
  bool reciprocal = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply one of the analogy-preserving transformations");
  reduce_cmd->add_option("terms", reduce_terms, "a b c d")->required();
  reduce_cmd->add_option("--scale", scale_by, "Multiply every term by a positive factor");
  reduce_cmd->add_flag("--unit", unit, "Divide by the largest term d");
  reduce_cmd->add_option("--arithmetic", arithmetic_p, "Map to the arithmetic analogy of power P (x^P, or ln x for 0)");
  reduce_cmd->add_option("--compose", compose_exponent, "Raise every term to this exponent (needs --p)");
  reduce_cmd->add_option("--p", compose_p, "Power of the analogy checked on the composed terms");
  reduce_cmd->add_flag("--reciprocal", reciprocal, "Invert every term");
  add_json_flag(reduce_cmd, common);
  reduce_cmd->callback([&] {
    action = [&] {
      const int chosen = scale_by.has_value() + unit + arithmetic_p.has_value() + compose_exponent.has_value() + reciprocal;
      if (chosen != 1) {
        throw UsageError("choose exactly one of --scale, --unit, --arithmetic, --compose, --reciprocal");
      }
      if (compose_p.has_value() != compose_exponent.has_value()) throw UsageError("--compose and --p go together");
      const Quadruple q(parse_four(reduce_terms));
      json obj = result_object();
      obj["status"] = "ok";
      std::array<double, 4> result{};
      if (scale_by) {
        result = scale(q, *scale_by).terms();
      } else if (unit) {
        result = to_unit_interval(q).terms();
      } else if (arithmetic_p) {
        result = to_arithmetic(q, parse_power(*arithmetic_p));
        obj["p"] = 1.0;
      } else if (compose_exponent) {
        const ExtendedPower p = parse_power(*compose_p);
        result = compose_powers(q, p, *compose_exponent).terms();
        obj["p"] = json_power(p);
      } else {
        result = to_reciprocal(q).terms();
      }
      obj["arrangement"] = json_terms(result);
      emit(common, obj, "result = " + join_terms(result) + "\n", out);
    };
  });

  // classify -----------------------------------------------------------------
  std::vector<std::string> classify_terms;
  auto* classify_cmd = app.add_subcommand("classify", "Classify equalities among four positive terms");
  classify_cmd->add_option("terms", classify_terms, "Four positive terms")->required();
  add_json_flag(classify_cmd, common);
  classify_cmd->callback([&] {
    action = [&] {
      auto terms = parse_four(classify_terms);
      const EqualityClass cls = classify_equality(terms);
      std::sort(terms.begin(), terms.end());
      std::string p_text;
      json obj = result_object();
      obj["status"] = to_string(cls);
      obj["arrangement"] = json_terms(terms);
      switch (cls) {
        case EqualityClass::AllEqual:
        case EqualityClass::PairwiseEqual:
          obj["p"] = "all";
          p_text = "all";
          break;
        case EqualityClass::LowerPairEqual:
          obj["p"] = "-inf";
          p_text = "-inf";
          break;
        case EqualityClass::UpperPairEqual:
          obj["p"] = "+inf";
          p_text = "+inf";
          break;
        case EqualityClass::MeansEqual:
        case EqualityClass::AllDistinct:
          p_text = "unique (use find-p)";
          break;
      }
      emit(common, obj, fmt::format("class = {}\np = {}\n", to_string(cls), p_text), out);
    };
  });

  // boolean ------------------------------------------------------------------
  std::vector<int> boolean_terms;
  auto* boolean_cmd = app.add_subcommand("boolean", "Analogy between four Booleans written 0/1");
  boolean_cmd->add_option("terms", boolean_terms, "Four values in {0, 1}")->required()->expected(4);
  add_json_flag(boolean_cmd, common);
  boolean_cmd->callback([&] {
    action = [&] {
      const BooleanVerdict v =
          boolean_check({boolean_terms[0], boolean_terms[1], boolean_terms[2], boolean_terms[3]});
      json obj = result_object();
      obj["status"] = v == BooleanVerdict::ValidAllP ? "valid-all-p" : "invalid-no-p";
      if (v == BooleanVerdict::ValidAllP) obj["p"] = "all";
      obj["arrangement"] = json_terms(std::array<double, 4>{
          static_cast<double>(boolean_terms[0]), static_cast<double>(boolean_terms[1]),
          static_cast<double>(boolean_terms[2]), static_cast<double>(boolean_terms[3])});
      emit(common, obj, to_string(v) + "\n", out);
    };
  });

  // landscape ----------------------------------------------------------------
  std::string preset;
  std::vector<std::string> fixed_terms;
  std::string x_axis_text;
  std::string y_axis_text;
  double clamp = 100.0;
  std::string csv_path = "-";
  std::string ppm_path;
  FindPOptions grid_options;
  auto* landscape_cmd = app.add_subcommand("landscape", "Grid of p over two varying terms");
  landscape_cmd->add_option("--preset", preset, "fixed-means (b=2, c=5) or fixed-first-ratio (a=2, b=5)")
      ->check(CLI::IsMember({"fixed-means", "fixed-first-ratio"}));
  landscape_cmd->add_option("--fix", fixed_terms, "ROLE=VALUE, twice");
  landscape_cmd->add_option("--x-axis", x_axis_text, "ROLE:MIN:MAX:STEPS");
  landscape_cmd->add_option("--y-axis", y_axis_text, "ROLE:MIN:MAX:STEPS");
  landscape_cmd->add_option("--clamp", clamp, "Symmetric p range of the image")->capture_default_str();
  landscape_cmd->add_option("--out", csv_path, "CSV output path, '-' for stdout")->capture_default_str();
  landscape_cmd->add_option("--ppm", ppm_path, "Also write a P6 image here");
  landscape_cmd->add_option("--tol-p", grid_options.tol_p, "Bisection bracket width")->capture_default_str();
  add_json_flag(landscape_cmd, common);
  landscape_cmd->callback([&] {
    action = [&] {
      GridSpec spec{};
      if (!preset.empty()) {
        if (!fixed_terms.empty()) throw UsageError("--preset and --fix are exclusive");
        if (preset == "fixed-means") {
          spec.fixed = {FixedTerm{Position::B, 2.0}, FixedTerm{Position::C, 5.0}};
          spec.x = Axis{Position::A, 0.0, 12.0, 200};
          spec.y = Axis{Position::D, 0.0, 12.0, 200};
        } else {
          spec.fixed = {FixedTerm{Position::A, 2.0}, FixedTerm{Position::B, 5.0}};
          spec.x = Axis{Position::C, 0.0, 12.0, 200};
          spec.y = Axis{Position::D, 0.0, 12.0, 200};
        }
      } else if (fixed_terms.size() != 2) {
        throw UsageError("landscape needs --preset or exactly two --fix ROLE=VALUE");
      } else {
        spec.fixed = {parse_fixed(fixed_terms[0]), parse_fixed(fixed_terms[1])};
      }
      if (!x_axis_text.empty()) spec.x = parse_axis(x_axis_text);
      if (!y_axis_text.empty()) spec.y = parse_axis(y_axis_text);
      if (preset.empty() && (x_axis_text.empty() || y_axis_text.empty())) {
        throw UsageError("landscape needs --x-axis and --y-axis without a preset");
      }
      spec.clamp = clamp;
      spec.solver = grid_options;

      const PGrid grid = compute_grid(spec);
      if (csv_path == "-") {
        write_csv(grid, out);
      } else {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw std::ios_base::failure(fmt::format("cannot open '{}'", csv_path));
        write_csv(grid, file);
      }
      if (!ppm_path.empty()) {
        const auto bytes = render_ppm(grid);
        std::ofstream file(ppm_path, std::ios::binary);
        if (!file) throw std::ios_base::failure(fmt::format("cannot open '{}'", ppm_path));
        file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!file) throw std::ios_base::failure(fmt::format("failed writing '{}'", ppm_path));
      }
      if (csv_path != "-") {
        json obj = result_object();
        obj["status"] = "ok";
        emit(common, obj, fmt::format("wrote {} cells to {}\n", grid.cells.size(), csv_path), out);
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    err << "error: io: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace analogy::cli
