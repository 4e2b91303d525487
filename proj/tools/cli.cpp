#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "pfrac/alphafrac.hpp"
#include "pfrac/error.hpp"
#include "pfrac/jacobi.hpp"
#include "pfrac/json_io.hpp"
#include "pfrac/symmetry.hpp"

namespace pfrac::cli {
namespace {

using json_io::field;
using json_io::json;
using json_io::SchemaError;
using json_io::to_json;

struct Options {
  std::string input = "-";
  std::string output = "-";
  bool pure = false;
  std::string word;
  std::string lambda;
  std::string branch = "+";
  std::string name;
};

json read_input(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw SchemaError("cannot open input file '" + path + "'");
    return json::parse(file);
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("invalid JSON input: ") + ex.what());
  }
}

void write_output(const std::string& path, std::ostream& out, const json& result) {
  const std::string text = json_io::dump(result);
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw SchemaError("cannot open output file '" + path + "'");
  file << text;
}

void write_error(std::ostream& err, std::string_view code, const std::string& detail) {
  err << json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

json expansion_list(const std::vector<Expansion>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(to_json(e));
  return out;
}

Branch parse_branch(const std::string& text) {
  if (text == "+") return Branch::Plus;
  if (text == "-") return Branch::Minus;
  throw SchemaError("--branch must be '+' or '-', got '" + text + "'");
}

json cmd_expand(const json& in, const Options& opt) {
  const AlphaTriple t = json_io::triple_from_json(field(in, "triple"));
  const AlphaSequence alpha = json_io::alpha_from_json(field(in, "alpha"));
  if (opt.pure) return to_json(pure_expand(t, alpha));
  auto [plus, minus] = expand(t, alpha);
  return expansion_list({plus, minus});
}

json cmd_pure_expand(const json& in, const Options&) {
  return to_json(pure_expand(json_io::triple_from_json(field(in, "triple")),
                             json_io::alpha_from_json(field(in, "alpha"))));
}

json cmd_triple(const json& in, const Options&) {
  const Expansion e = json_io::expansion_from_json(in);
  const auto tt = expansion_to_triple(e);
  return {{"alpha", to_json(e.alpha())}, {"triple", to_json(tt.triple)}, {"T", to_json(tt.half_trace)}};
}

json cmd_admissible(const json& in, const Options&) {
  const Polynomial s = admissible_decompose(json_io::polynomial_from_json(field(in, "R")),
                                            json_io::alpha_from_json(field(in, "alpha")));
  return {{"S", to_json(s)}};
}

json cmd_act(const json& in, const Options& opt) {
  json word;
  try {
    word = json::parse(opt.word);
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("--word is not valid JSON: ") + ex.what());
  }
  return to_json(apply_word(json_io::expansion_from_json(in), json_io::word_from_json(word)));
}

json cmd_orbit(const json& in, const Options& opt) {
  return to_json(orbit(json_io::expansion_from_json(in), opt.pure));
}

json cmd_jacobi_to_triple(const json& in, const Options&) {
  return to_json(alpha_triple_from_jacobi(json_io::jacobi_from_json(field(in, "jacobi")),
                                          json_io::rational_from_json(field(in, "beta"))));
}

json cmd_triple_to_jacobi(const json& in, const Options&) {
  const auto result = jacobi_from_alpha_triple(json_io::triple_from_json(in));
  return {{"jacobi", to_json(result.jacobi)}, {"beta", to_json(result.beta)}};
}

json cmd_divisor_to_jacobi(const json& in, const Options&) {
  return to_json(jacobi_from_divisor(json_io::divisor_from_json(in), json_io::polynomial_from_json(field(in, "R"))));
}

json cmd_jacobi_to_divisor(const json& in, const Options&) {
  const JacobiTriple j = json_io::jacobi_from_json(in);
  return to_json(divisor_from_jacobi(j), j.R());
}

json cmd_pure_beta(const json& in, const Options&) {
  json betas = json::array();
  for (const auto& b : pure_beta_candidates(json_io::jacobi_from_json(field(in, "jacobi")),
                                            json_io::rational_from_json(field(in, "alpha_N")))) {
    betas.push_back(to_json(b));
  }
  return {{"beta", std::move(betas)}};
}

json cmd_verify(const json& in, const Options&) {
  return to_json(verify_expansion(json_io::expansion_from_json(field(in, "expansion")),
                                  json_io::triple_from_json(field(in, "triple"))));
}

json cmd_residual(const json& in, const Options& opt) {
  Rational lambda0;
  try {
    lambda0 = Rational::parse(opt.lambda);
  } catch (const Error& err) {
    throw SchemaError("--lambda: " + err.detail());
  }
  const Branch branch = parse_branch(opt.branch);
  const double r = numeric_residual(json_io::triple_from_json(in), lambda0, branch);
  return {{"residual", r}, {"lambda", to_json(lambda0)}, {"branch", opt.branch}};
}

using Handler = std::function<json(const json&, const Options&)>;

struct Command {
  const char* name;
  const char* help;
  Handler handler;
  bool reads_input = true;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"expand", "Both periodic expansions of an alpha-triple ({triple, alpha})", cmd_expand},
      {"pure-expand", "Pure periodic expansion of an alpha-triple ({triple, alpha})", cmd_pure_expand},
      {"triple", "Alpha-triple and half-trace T of an expansion", cmd_triple},
      {"admissible", "S with R = S^2 + prod(lambda - alpha_k) ({R, alpha})", cmd_admissible},
      {"act", "Apply a group word (--word) to an expansion", cmd_act},
      {"orbit", "Orbit of an expansion under the symmetry group", cmd_orbit},
      {"jacobi-to-triple", "Alpha-triple from a Jacobi triple and shift ({jacobi, beta})", cmd_jacobi_to_triple},
      {"triple-to-jacobi", "Jacobi triple and shift of an alpha-triple", cmd_triple_to_jacobi},
      {"divisor-to-jacobi", "Jacobi triple of a divisor ({points, R})", cmd_divisor_to_jacobi},
      {"jacobi-to-divisor", "Divisor of a Jacobi triple with rational support", cmd_jacobi_to_divisor},
      {"pure-beta", "Shifts beta giving C(alpha_N) = 0 ({jacobi, alpha_N})", cmd_pure_beta},
      {"verify", "Check an expansion against an alpha-triple ({expansion, triple})", cmd_verify},
      {"residual", "Floating residual of A phi^2 + 2 B phi + C at --lambda", cmd_residual},
      {"example", "Emit a canned dataset (--name)",
       [](const json&, const Options& opt) { return example(opt.name); }, false},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic alpha-fraction expansions on odd-degree hyperelliptic curves", "pfrac"};
  app.require_subcommand(1);
  Options opt;

  std::map<CLI::App*, const Command*> by_app;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    if (cmd.reads_input) sub->add_option("--input", opt.input, "Input JSON path, or - for stdin");
    sub->add_option("--output", opt.output, "Output path, or - for stdout");
    const std::string name = cmd.name;
    if (name == "expand" || name == "orbit") sub->add_flag("--pure", opt.pure, "Pure periodic variant");
    if (name == "act") sub->add_option("--word", opt.word, "Group word, e.g. [\"sigma:1\",\"epspi\"]")->required();
    if (name == "residual") {
      sub->add_option("--lambda", opt.lambda, "Evaluation point (rational)")->required();
      sub->add_option("--branch", opt.branch, "Square-root branch, + or -");
    }
    if (name == "example") sub->add_option("--name", opt.name, "Dataset name")->required();
    by_app[sub] = &cmd;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    write_error(err, "UsageError", ex.what());
    return kUsageError;
  }

  const Command* cmd = by_app.at(app.get_subcommands().front());
  try {
    const json input = cmd->reads_input ? read_input(opt.input, in) : json();
    write_output(opt.output, out, cmd->handler(input, opt));
    return kOk;
  } catch (const Error& ex) {
    write_error(err, code_name(ex.code()), ex.detail());
    return kDomainError;
  } catch (const SchemaError& ex) {
    write_error(err, "MalformedInput", ex.what());
    return kUsageError;
  } catch (const json::exception& ex) {
    write_error(err, "MalformedInput", ex.what());
    return kUsageError;
  }
}

}  // namespace pfrac::cli
