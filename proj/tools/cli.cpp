// Command line front end: analyze (full report for one flag variety), table
// (bound summary across a list of algebras), verify (named internal checks).
// Exit codes: 0 all requested work passed, 1 a check failed, 2 invalid input,
// 3 an oracle was skipped under its cap.

#include "symgap/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using symgap::AnalysisRequest;
using symgap::CommandResult;

struct CommonOpts {
  std::string real = "split";
  std::string lattice = "sc";
  std::string format = "text";
  std::string out;
  std::vector<int> cross;
  std::vector<int> module_word;
  long long oracle_cap = 200000;
};

void add_format_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write the report to FILE instead of stdout");
}

void add_request_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--cross", o.cross, "Crossed node numbers (1-based)")
      ->delimiter(',')
      ->required();
  cmd->add_option("--module", o.module_word,
                  "Restrict to the module of one length-2 word j,k")
      ->delimiter(',')
      ->expected(2);
  cmd->add_option("--real", o.real, "Real form of the ambient algebra")
      ->check(CLI::IsMember({"split", "complex"}))
      ->capture_default_str();
  cmd->add_option("--lattice", o.lattice,
                  "Group-of-definition weight lattice for the split sign check")
      ->check(CLI::IsMember({"sc", "adjoint", "sl", "pgl", "so-split"}))
      ->capture_default_str();
}

AnalysisRequest to_request(const std::string& algebra, const CommonOpts& o,
                           const std::vector<std::string>& checks = {}) {
  AnalysisRequest req;
  req.algebra = symgap::SimpleType::parse(algebra);
  req.cross = o.cross;
  if (!o.module_word.empty())
    req.module = symgap::HasseWord2{o.module_word[0], o.module_word[1]};
  req.real = symgap::parse_real_form(o.real);
  req.lattice = symgap::parse_lattice(o.lattice);
  req.oracle_cap = o.oracle_cap;
  req.checks = checks;
  return req;
}

int emit(const CommandResult& res, const CommonOpts& o) {
  std::string payload =
      o.format == "json" ? res.json.dump(2) + "\n" : res.text;
  if (o.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + o.out + "'");
    f << payload;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry gaps of parabolic flag geometries"};
  app.require_subcommand(1);

  CommonOpts an_opts, tb_opts, vf_opts;
  std::string an_algebra, vf_algebra;
  std::vector<std::string> tb_algebras;
  std::vector<std::string> vf_checks;

  CLI::App* an = app.add_subcommand("analyze", "Full report for one flag variety");
  an->add_option("--algebra", an_algebra, "Simple type, e.g. G2 or A4")->required();
  add_request_opts(an, an_opts);
  add_format_opts(an, an_opts);

  CLI::App* tb = app.add_subcommand("table", "Bound table across several algebras");
  tb->add_option("--algebra", tb_algebras, "Simple types (repeatable or comma list)")
      ->delimiter(',')
      ->required();
  tb->add_option("--cross", tb_opts.cross, "Crossed node numbers (1-based)")
      ->delimiter(',')
      ->required();
  add_format_opts(tb, tb_opts);

  CLI::App* vf = app.add_subcommand("verify", "Run named internal checks");
  vf->add_option("--algebra", vf_algebra, "Simple type, e.g. G2 or A4")->required();
  add_request_opts(vf, vf_opts);
  vf->add_option("--checks", vf_checks,
                 "Check names (comma list) or 'all'; default all")
      ->delimiter(',');
  vf->add_option("--oracle-cap", vf_opts.oracle_cap,
                 "Skip the cohomology oracle above this cochain dimension")
      ->capture_default_str();
  add_format_opts(vf, vf_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) return emit(symgap::cmd_analyze(to_request(an_algebra, an_opts)), an_opts);
    if (tb->parsed()) {
      std::vector<symgap::SimpleType> algebras;
      for (const std::string& s : tb_algebras)
        algebras.push_back(symgap::SimpleType::parse(s));
      return emit(symgap::cmd_table(algebras, tb_opts.cross), tb_opts);
    }
    return emit(symgap::cmd_verify(to_request(vf_algebra, vf_opts, vf_checks)), vf_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
