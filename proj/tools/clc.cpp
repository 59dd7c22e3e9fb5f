// clc: tally elections with the Continuous Llull Condorcet method.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clc/clc.hpp"
#include "clc/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

struct InputOptions {
  std::string ballots;
  std::string matrix;
  std::string unlisted = "error";
  std::string total_weight;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw clc::DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedInput {
  std::optional<clc::LlullMatrix> llull;
  std::optional<clc::RawMatrix> raw;  // set for matrix input, before validation
  std::optional<clc::Rational> scale;
};

LoadedInput load(const InputOptions& in) {
  LoadedInput out;
  if (!in.ballots.empty()) {
    auto policy = in.unlisted == "tied-last" ? clc::UnlistedPolicy::TiedLast : clc::UnlistedPolicy::Error;
    auto profile = clc::parse_profile(slurp(in.ballots), policy);
    out.llull = clc::aggregate(profile);
    if (profile.has_integer_weights()) out.scale = profile.total_weight();
    return out;
  }
  std::optional<clc::Rational> weight;
  if (!in.total_weight.empty()) {
    weight = clc::parse_rational(in.total_weight);
    if (!weight || *weight <= 0) throw clc::DomainError("--total-weight must be a positive number");
    out.scale = weight;
  }
  out.raw = clc::read_matrix_tsv(slurp(in.matrix), weight);
  return out;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* b = cmd->add_option("--ballots", in.ballots, "Ballot profile file ('-' for stdin)");
  auto* m = cmd->add_option("--matrix", in.matrix, "Pair matrix file, tab-separated ('-' for stdin)");
  b->excludes(m);
  cmd->add_option("--unlisted", in.unlisted, "Candidates missing from a ballot: error or tied-last")
      ->check(CLI::IsMember({"error", "tied-last"}))
      ->capture_default_str();
  cmd->add_option("--total-weight", in.total_weight, "Matrix entries are counts out of this total")->needs(m);
}

int run_tally(const InputOptions& in, bool detailed, const std::string& format, int digits) {
  auto input = load(in);
  auto v = input.llull ? *input.llull : clc::make_llull(*input.raw);
  auto report = clc::tally(v);
  clc::ReportRenderer renderer(report, {detailed, digits, input.scale});
  if (format == "json")
    std::cout << renderer.json().dump(2) << '\n';
  else
    std::cout << renderer.text();
  return 0;
}

int run_check(const InputOptions& in, std::size_t random_size, std::uint64_t seed) {
  clc::LlullMatrix v;
  if (random_size > 0) {
    clc::verify::Rng rng(seed);
    v = clc::verify::random_gamma(rng, random_size);
  } else {
    auto input = load(in);
    if (input.raw) {
      auto gamma = clc::validate_gamma(*input.raw);
      if (!gamma.ok()) {
        std::cout << "FAIL completeness:";
        for (const auto& violation : gamma.violations)
          std::cout << "\n  " << clc::describe(violation, input.raw->candidates);
        std::cout << '\n';
        return kExitFail;
      }
      v = clc::make_llull(*input.raw);
    } else {
      v = *input.llull;
    }
  }
  std::cout << "PASS completeness\n";
  bool ok = true;
  for (const auto& check : clc::verify::stage_checks(clc::tally(v))) {
    std::cout << (check.result.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.result.detail.empty()) std::cout << ": " << check.result.detail;
    std::cout << '\n';
    ok = ok && check.result.passed;
  }
  return ok ? 0 : kExitFail;
}

int run_generate(std::size_t size, std::uint64_t seed, int max_denominator) {
  clc::verify::Rng rng(seed);
  std::cout << clc::write_matrix_tsv(clc::verify::random_gamma(rng, size, max_denominator));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous Llull Condorcet rates"};
  app.require_subcommand(1);

  InputOptions tally_in;
  bool detailed = false;
  std::string format = "text";
  int digits = 4;
  auto* tally = app.add_subcommand("tally", "Compute rates and the social order");
  add_input_options(tally, tally_in);
  tally->add_flag("--detailed", detailed, "Show every intermediate table");
  tally->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  tally->add_option("--digits", digits, "Decimal digits")->check(CLI::Range(0, 30))->capture_default_str();

  InputOptions check_in;
  std::size_t random_size = 0;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "Validate the input and the invariants of every stage");
  add_input_options(check, check_in);
  check->add_option("--random", random_size, "Check a random Llull matrix of this size instead")->check(CLI::Range(1, 500));
  check->add_option("--seed", seed, "Seed for --random")->capture_default_str();

  std::size_t size = 5;
  std::uint64_t gen_seed = 1;
  int max_denominator = 10;
  auto* generate = app.add_subcommand("generate", "Print a random Llull matrix");
  generate->add_option("--size", size, "Number of candidates")->check(CLI::Range(1, 500))->capture_default_str();
  generate->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  generate->add_option("--max-denominator", max_denominator, "Largest entry denominator")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tally) {
      if (tally_in.ballots.empty() && tally_in.matrix.empty()) throw clc::DomainError("need --ballots or --matrix");
      return run_tally(tally_in, detailed, format, digits);
    }
    if (*check) {
      if (random_size == 0 && check_in.ballots.empty() && check_in.matrix.empty())
        throw clc::DomainError("need --ballots, --matrix or --random");
      return run_check(check_in, random_size, seed);
    }
    return run_generate(size, gen_seed, max_denominator);
  } catch (const clc::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  } catch (const clc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}
