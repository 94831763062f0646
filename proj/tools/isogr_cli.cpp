#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "isogr/json_io.hpp"

namespace {

isogr::Family family_from_flag(const std::string& s) {
  if (s == "lg") return isogr::Family::LG;
  if (s == "og") return isogr::Family::OG;
  throw isogr::usage_error("--family must be lg or og");
}

void emit(const isogr::Json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else if (format == "tsv") {
    std::cout << isogr::to_tsv(doc);
  } else {
    throw isogr::usage_error("--format must be json or tsv");
  }
}

void emit_error(const std::string& kind, const std::string& message) {
  isogr::Json inner;
  inner["kind"] = kind;
  inner["message"] = message;
  isogr::Json err;
  err["error"] = inner;
  std::cout << err.dump(2) << '\n';
}

// Cone computations stay fast through n = 9; chart-backed suites enumerate
// maximal minors and are capped lower.
int suite_cap(const std::string& suite) {
  if (suite == "cones" || suite == "fano") return 9;
  return 7;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations for layered isotropic charts, spinor/Plucker "
      "embeddings, cone reports, and blow-up resolution data"};
  app.require_subcommand(1);

  std::string family = "lg";
  int n = 0;
  std::uint64_t seed = 20240914;
  int trials = 25;
  std::string format = "json";
  std::string suite = "all";
  std::string what;

  CLI::App* report = app.add_subcommand(
      "report", "Divisor classes, Mori/nef/effective cones, Fano verdict");
  report->add_option("--family", family, "lg or og");
  report->add_option("--n", n, "size parameter (1..9)")->required();
  report->add_option("--format", format, "json or tsv");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the named invariant suite");
  verify->add_option("--family", family, "lg or og");
  verify->add_option("--n", n, "maximum size (0 = suite default)");
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_option("--trials", trials, "random trials per check");
  verify->add_option("--suite", suite, "charts|spinor|cones|fano|lm|all");
  verify->add_option("--format", format, "json or tsv");

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate one operation on a JSON payload from standard input");
  eval->add_option("what", what, "chart|plucker|spinor|lm")->required();
  eval->add_option("--format", format, "json or tsv");

  try {
    app.parse(argc, argv);
    const isogr::Family fam = family_from_flag(family);

    if (report->parsed()) {
      if (n < 1 || n > 9) {
        throw isogr::usage_error("--n must be between 1 and 9 for report");
      }
      emit(isogr::report_json(fam, n), format);
      return 0;
    }

    if (verify->parsed()) {
      if (trials < 1) throw isogr::usage_error("--trials must be positive");
      const int cap = suite_cap(suite);
      if (n < 0 || n > cap) {
        throw isogr::usage_error("--n for suite '" + suite + "' is capped at " +
                                 std::to_string(cap));
      }
      const auto suites = isogr::run_suites(suite, fam, n, seed, trials);
      const isogr::Json doc = isogr::suites_json(fam, n, seed, trials, suites);
      emit(doc, format);
      return doc.at("pass").get<bool>() ? 0 : 1;
    }

    isogr::Json payload;
    try {
      payload = isogr::Json::parse(std::cin);
    } catch (const nlohmann::json::parse_error& e) {
      throw isogr::usage_error(std::string("payload is not valid JSON: ") +
                               e.what());
    }
    isogr::Json out;
    if (what == "chart") {
      out = isogr::eval_chart(payload);
    } else if (what == "plucker") {
      out = isogr::eval_plucker(payload);
    } else if (what == "spinor") {
      out = isogr::eval_spinor(payload);
    } else if (what == "lm") {
      out = isogr::eval_lm(payload);
    } else {
      throw isogr::usage_error("unknown eval operation '" + what + "'");
    }
    emit(out, format);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const isogr::usage_error& e) {
    emit_error("usage", e.what());
    return 2;
  } catch (const isogr::math_error& e) {
    emit_error(e.kind(), e.what());
    return 1;
  }
}
