#include "enriques/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "enriques/diagram.hpp"
#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"
#include "enriques/invariants.hpp"
#include "enriques/lattice.hpp"
#include "enriques/operators.hpp"
#include "enriques/verify.hpp"

namespace enriques {

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Enriques diagrams of plane branches with a fixed number of blow-ups: "
      "enumeration, multiplicity invariants, growth operators, and the "
      "lattice of codes"};
  app.name("enriques");
  app.require_subcommand(1);

  int n = 3;
  std::string key;
  std::string kind_name;
  int position = 0;
  std::string dot_path = "-";
  bool as_json = false;
  VerifyOptions vopts;

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "Print every diagram of complexity n, one profile JSON "
                   "object per line, in canonical key order");
  cmd_enumerate->add_option("n", n, "blow-up complexity (>= 3)")->required();

  CLI::App* cmd_invariants = app.add_subcommand(
      "invariants", "Print the profile JSON of one diagram");
  cmd_invariants
      ->add_option("key", key, "diagram key, e.g. \"n=6;chi=e3\", or - for "
                               "standard input")
      ->required();

  CLI::App* cmd_dual = app.add_subcommand(
      "dual", "Print the canonical key of the dual diagram");
  cmd_dual->add_option("key", key, "diagram key, or - for standard input")
      ->required();

  CLI::App* cmd_apply = app.add_subcommand(
      "apply-op", "Apply a straightening or breaking operator and print the "
                  "canonical key of the result");
  cmd_apply->add_option("key", key, "diagram key, or - for standard input")
      ->required();
  cmd_apply->add_option("--kind", kind_name, "operator kind")
      ->required()
      ->check(CLI::IsMember({"straighten", "break"}));
  cmd_apply->add_option("--pos", position, "position p in 2..n-2")->required();

  CLI::App* cmd_hasse = app.add_subcommand(
      "hasse", "Emit the Hasse diagram of E_n (cover relation) as DOT");
  cmd_hasse->add_option("n", n, "blow-up complexity (>= 3)")->required();
  cmd_hasse->add_option("--dot", dot_path,
                        "output path, - for standard output");

  CLI::App* cmd_extremal = app.add_subcommand(
      "extremal", "Print alpha, omega and (for n >= 4) pi with their "
                  "profiles");
  cmd_extremal->add_option("n", n, "blow-up complexity (>= 3)")->required();

  CLI::App* cmd_self_duals = app.add_subcommand(
      "self-duals", "Print the keys of all self-dual diagrams of "
                    "complexity n");
  cmd_self_duals->add_option("n", n, "blow-up complexity (>= 3)")->required();

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Re-check every counted and extremal claim; exit 0 iff all "
                "pass");
  cmd_verify->add_option("--max-n", vopts.sweep_max_n,
                         "depth of the open-ended sweeps (default 10)");
  cmd_verify->add_option("--seed", vopts.seed,
                         "seed for the randomized lattice-law sampling");
  cmd_verify->add_flag("--json", as_json, "report as JSON instead of text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto read_key = [&](const std::string& k) {
    if (k == "-") {
      std::string line;
      std::getline(in, line);
      return parse(line);
    }
    return parse(k);
  };

  try {
    if (*cmd_enumerate) {
      for (const EnriquesDiagram& d : enumerate(n)) {
        out << profile_json(d) << "\n";
      }
    } else if (*cmd_invariants) {
      out << profile_json(read_key(key)) << "\n";
    } else if (*cmd_dual) {
      out << dual(read_key(key)).key() << "\n";
    } else if (*cmd_apply) {
      const OperatorKind kind = kind_name == "straighten"
                                    ? OperatorKind::Straighten
                                    : OperatorKind::Break;
      out << apply_operator(read_key(key), kind, position).output.key()
          << "\n";
    } else if (*cmd_hasse) {
      const std::string dot = to_dot(hasse(n));
      if (dot_path == "-") {
        out << dot;
      } else {
        std::ofstream file(dot_path, std::ios::binary);
        if (!file) {
          err << "error: cannot open " << dot_path << " for writing\n";
          return 2;
        }
        file << dot;
      }
    } else if (*cmd_extremal) {
      out << "alpha " << profile_json(alpha(n)) << "\n";
      out << "omega " << profile_json(omega(n)) << "\n";
      if (n >= 4) out << "pi " << profile_json(pi(n)) << "\n";
    } else if (*cmd_self_duals) {
      for (const EnriquesDiagram& d : self_duals(n)) {
        out << d.key() << "\n";
      }
    } else if (*cmd_verify) {
      const std::vector<ClaimResult> results = run_verification(vopts);
      out << (as_json ? report_json(results) : report_text(results));
      return all_passed(results) ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace enriques
