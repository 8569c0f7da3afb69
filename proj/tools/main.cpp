#include <CLI11.hpp>
#include <iostream>

#include "alcove/report.hpp"

namespace {

struct CommonArgs {
  std::string type;
  int rank = -1;
  std::string format = "table";
  uint64_t cap = 1000000;
  uint64_t seed = 0;
  int samples = 20;
  int max_rank = 8;
  bool all = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_all) {
  cmd->add_option("--type", a.type, "series letter A..G, or a full label like A2");
  cmd->add_option("--rank", a.rank, "rank of the type");
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--cap", a.cap, "largest finite group the tool will enumerate");
  cmd->add_option("--seed", a.seed, "seed for sampled checks");
  cmd->add_option("--samples", a.samples, "sampled points per type");
  cmd->add_option("--max-rank", a.max_rank, "rank bound for --all");
  if (with_all) cmd->add_flag("--all", a.all, "run every type up to --max-rank");
}

alcove::CartanType parse_type(const CommonArgs& a) {
  if (a.type.empty())
    throw std::invalid_argument("--type is required");
  std::string label = a.type;
  if (a.rank >= 0) label += std::to_string(a.rank);
  return alcove::CartanType::parse(label);
}

alcove::VerifyOptions options_of(const CommonArgs& a) {
  alcove::VerifyOptions opt;
  opt.cap = a.cap;
  opt.seed = a.seed;
  opt.samples = a.samples;
  opt.max_rank = a.max_rank;
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact alcove geometry, stabilizers, and K-theory ranks for "
               "compact connected Lie groups"};
  app.require_subcommand(1);

  CommonArgs rep_args, ver_args, ext_args;
  CLI::App* rep = app.add_subcommand(
      "report", "full structural report for one type");
  add_common(rep, rep_args, false);
  CLI::App* ver = app.add_subcommand(
      "verify", "run the invariant check suite");
  add_common(ver, ver_args, true);
  CLI::App* ext = app.add_subcommand(
      "extquot", "extended-quotient components and fibers");
  add_common(ext, ext_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rep->parsed()) {
      alcove::CartanType t = parse_type(rep_args);
      alcove::Json doc =
          alcove::report_document(t, options_of(rep_args));
      if (rep_args.format == "json")
        std::cout << alcove::to_bytes(doc);
      else
        std::cout << alcove::render_report(doc);
      return doc["summary"]["ok"].get<bool>() ? 0 : 1;
    }
    if (ver->parsed()) {
      alcove::VerifyOptions opt = options_of(ver_args);
      std::vector<alcove::CheckResult> results;
      if (ver_args.all) {
        results = alcove::verify_scope(alcove::default_scope(opt.max_rank), opt);
      } else {
        alcove::CartanType t = parse_type(ver_args);
        results = alcove::verify_type(t, opt);
      }
      alcove::Json doc = alcove::verify_document(results, opt);
      if (ver_args.format == "json")
        std::cout << alcove::to_bytes(doc);
      else
        std::cout << alcove::render_verify(doc);
      return alcove::all_passed(results) ? 0 : 1;
    }
    if (ext->parsed()) {
      alcove::CartanType t = parse_type(ext_args);
      alcove::Json doc =
          alcove::extquot_document(t, options_of(ext_args));
      if (ext_args.format == "json")
        std::cout << alcove::to_bytes(doc);
      else
        std::cout << alcove::render_extquot(doc);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
