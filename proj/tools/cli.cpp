#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "instrseq/codegen.hpp"
#include "instrseq/error.hpp"
#include "instrseq/extraction.hpp"
#include "instrseq/pga.hpp"
#include "instrseq/services.hpp"
#include "instrseq/transforms.hpp"

namespace instrseq::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// `@path` reads the argument from a file.
std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

CodeSeq load_code(const std::string& arg) { return parse_code(load(arg)); }
LinearSpec load_spec(const std::string& arg) { return spec_from_json(load(arg)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

CodeSeq apply_step(const std::string& step, const CodeSeq& code) {
  if (step == "h") return apply_h(code);
  if (step == "hpos") return apply_h_pos(code);
  if (step == "g") return apply_g(code);
  if (step == "rev") return rev(code);
  if (step.rfind("flip:", 0) == 0) return flip(code, Action(step.substr(5)));
  if (step.rfind("swap:", 0) == 0) {
    auto operands = split(step.substr(5), ',');
    if (operands.size() != 2) throw ParseError(0, "swap needs two actions: '" + step + "'");
    return swap(code, Action(operands[0]), Action(operands[1]));
  }
  throw ParseError(0, "unknown transform '" + step + "'");
}

struct Options {
  std::string code;
  std::string code2;
  std::string spec;
  std::string spec2;
  std::string pga;
  std::string pipeline;
  std::string services;
  std::string action = "a";
  std::optional<Position> at;
  bool ltr = false;
  bool rtl = false;
  bool by_code = false;
  bool cminus = false;
  std::optional<Counter> k;
  std::size_t n = 0;
  std::uint64_t cap = kDefaultPsiCap;
};

}  // namespace

std::vector<std::string> split_pipeline(const std::string& text) {
  std::vector<std::string> steps;
  auto tokens = split(text, ',');
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].rfind("swap:", 0) == 0 && tokens[i].find(',') == std::string::npos) {
      if (i + 1 >= tokens.size()) throw ParseError(0, "swap needs two actions: '" + tokens[i] + "'");
      steps.push_back(tokens[i] + "," + tokens[i + 1]);
      ++i;
    } else {
      steps.push_back(tokens[i]);
    }
  }
  return steps;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instruction sequence toolkit: extraction, equality, transformations and encodings"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Parse code and print it in normal form");
  parse->add_option("code", o.code, "Code text or @file")->required();

  auto* extract = app.add_subcommand("extract", "Extract a linear specification from code");
  auto* at = extract->add_option("--at", o.at, "Start position");
  auto* ltr = extract->add_flag("--ltr", o.ltr, "Start at position 1");
  auto* rtl = extract->add_flag("--rtl", o.rtl, "Start at the last position");
  at->excludes(ltr)->excludes(rtl);
  ltr->excludes(rtl);
  extract->add_option("code", o.code, "Code text or @file")->required();

  auto* equal = app.add_subcommand("equal", "Decide equality of two specifications (exit 0 or 1)");
  equal->add_flag("--code", o.by_code, "Compare left-to-right extractions of two pieces of code");
  equal->add_option("first", o.spec, "Spec JSON, code, or @file")->required();
  equal->add_option("second", o.spec2, "Spec JSON, code, or @file")->required();

  auto* transform = app.add_subcommand("transform", "Apply a pipeline of code transformations");
  transform->add_option("--pipeline", o.pipeline, "Comma-separated: h, hpos, g, rev, swap:a,b, flip:a")->required();
  transform->add_option("code", o.code, "Code text or @file")->required();

  auto* encode = app.add_subcommand("encode", "Encode a specification as a C-program");
  encode->add_flag("--cminus", o.cminus, "Use only +/a, /#k, \\#k and !");
  encode->add_option("spec", o.spec, "Spec JSON or @file")->required();

  auto* project = app.add_subcommand("project", "Project a C-program into PGA");
  project->add_option("code", o.code, "Code text or @file")->required();

  auto* embed = app.add_subcommand("embed", "Translate a PGA program into C");
  embed->add_option("pga", o.pga, "PGA text or @file")->required();

  auto* validate = app.add_subcommand("validate", "Report structural properties of code");
  validate->add_option("--k", o.k, "Jump counter bound for C_k membership")->check(CLI::PositiveNumber);
  validate->add_option("code", o.code, "Code text or @file")->required();

  auto* zn = app.add_subcommand("zn", "Print the register program Z_n");
  zn->add_option("n", o.n, "n >= 1")->required()->check(CLI::PositiveNumber);

  auto* anp = app.add_subcommand("check-anp", "Find the least position with the a-n-property");
  anp->add_option("--action", o.action, "The action a");
  anp->add_option("--n", o.n, "n >= 1")->required()->check(CLI::PositiveNumber);
  anp->add_option("code", o.code, "Code text or @file")->required();

  auto* psi = app.add_subcommand("psi", "Run the P^F encoding experiment");
  psi->add_option("--n", o.n, "n >= 1")->required()->check(CLI::PositiveNumber);
  psi->add_option("--cap", o.cap, "Maximum number of functions F to enumerate");

  auto* use_cmd = app.add_subcommand("use", "Compose the extracted thread with services");
  use_cmd->add_option("--services", o.services, "Comma-separated, e.g. reg:b1,stack:s:capacity=2:alphabet=2")
      ->required();
  use_cmd->add_option("code", o.code, "Code text or @file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*parse) {
      out << to_string(load_code(o.code)) << "\n";
    } else if (*extract) {
      CodeSeq code = load_code(o.code);
      LinearSpec spec = o.rtl ? extract_rtl(code) : o.at ? extract_at(code, *o.at) : extract_ltr(code);
      out << to_json(spec) << "\n";
    } else if (*equal) {
      bool same = o.by_code ? decide_equal(extract_ltr(load_code(o.spec)), extract_ltr(load_code(o.spec2)))
                            : decide_equal(load_spec(o.spec), load_spec(o.spec2));
      out << (same ? "true" : "false") << "\n";
      return same ? kOk : kFalse;
    } else if (*transform) {
      CodeSeq code = load_code(o.code);
      for (const auto& step : split_pipeline(o.pipeline)) code = apply_step(step, code);
      out << to_string(code) << "\n";
    } else if (*encode) {
      LinearSpec spec = load_spec(o.spec);
      out << to_string(o.cminus ? spec_to_code_cminus(spec).code : spec_to_code(spec).code) << "\n";
    } else if (*project) {
      out << to_string(p2pga(load_code(o.code))) << "\n";
    } else if (*embed) {
      out << to_string(pga2c(parse_pga(load(o.pga)))) << "\n";
    } else if (*validate) {
      CodeSeq code = load_code(o.code);
      ordered_json doc;
      doc["length"] = code.size();
      doc["isProgram"] = is_program(code);
      doc["maxJumpCounter"] = max_jump_counter(code);
      if (o.k) doc["inCk"] = is_in_ck(code, *o.k);
      doc["inCMinus"] = uses_only(code, OpSet::c_minus());
      doc["inReducedSet"] = uses_only(code, OpSet::reduced());
      out << doc.dump() << "\n";
    } else if (*zn) {
      out << to_string(zn_program(o.n)) << "\n";
    } else if (*anp) {
      auto pos = code_has_a_n_property(load_code(o.code), Action(o.action), o.n);
      ordered_json doc;
      doc["position"] = pos ? ordered_json(*pos) : ordered_json(nullptr);
      out << doc.dump() << "\n";
      return pos ? kOk : kFalse;
    } else if (*psi) {
      out << to_json(psi_experiment(o.n, o.cap)) << "\n";
    } else if (*use_cmd) {
      LinearSpec spec = extract_ltr(load_code(o.code));
      for (const auto& text : split(o.services, ',')) spec = use(spec, *parse_service(text));
      out << to_json(spec) << "\n";
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ServiceError& e) {
    err << "error: " << e.what() << "\n";
    if (!e.path().empty()) {
      err << "path:";
      for (const auto& step : e.path()) err << " " << step;
      err << "\n";
    }
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

}  // namespace instrseq::cli
