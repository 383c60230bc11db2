#include "cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "kdecomp/assembler.hpp"
#include "render.hpp"
#include "table_io.hpp"

namespace kdecomp::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  Int n = 1;
  Int q = 0;
  Int height = 3;
  std::string table = "symbolic";
  bool assume_conjecture = false;
  std::string format = "text";

  Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

void add_common_flags(CLI::App* cmd, Options& opt, bool with_n, bool with_table,
                      bool with_height, bool with_conjecture) {
  if (with_n) cmd->add_option("--n", opt.n, "number of Laurent/polynomial variables")->required();
  cmd->add_option("--q", opt.q, "K-theory degree (default 0)");
  if (with_height)
    cmd->add_option("--height", opt.height,
                    "max-norm bound for subgroup enumeration (default 3)")
        ->check(CLI::PositiveNumber);
  if (with_table)
    cmd->add_option("--table", opt.table,
                    "ring table: 'symbolic', 'regular', or a JSON file path");
  if (with_conjecture)
    cmd->add_flag("--assume-conjecture", opt.assume_conjecture,
                  "opt into the iterated-Nil rewrite (conjectural for n >= 2)");
  cmd->add_option("--format", opt.format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decompositions of K-groups of (Laurent) polynomial group rings"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* laurent = app.add_subcommand(
      "decompose-laurent", "K_q of the n-variable Laurent ring: binomial K-part plus the Nil "
                           "part over maximal cyclic subgroups");
  add_common_flags(laurent, opt, true, true, true, false);
  CLI::App* relative = app.add_subcommand(
      "decompose-relative", "the relative Nil term over maximal cyclic subgroups of Z^n");
  add_common_flags(relative, opt, true, true, true, false);
  CLI::App* nk_iter =
      app.add_subcommand("nk-iter", "iterated Nil group N^n K_q (conjectural rewrite for n >= 2)");
  add_common_flags(nk_iter, opt, true, true, true, true);
  CLI::App* kregular = app.add_subcommand(
      "kregular", "vanishing verdict: NK_j = 0 on the window forces K_q R[t_1..t_n] = K_q R");
  add_common_flags(kregular, opt, true, true, false, false);
  CLI::App* verify_ft = app.add_subcommand(
      "verify-ft", "compare the iterated fundamental theorem against the closed decomposition");
  add_common_flags(verify_ft, opt, true, true, true, true);
  CLI::App* verify_fold = app.add_subcommand(
      "verify-fold", "check the 2^(n-1)-to-1 fold map counting identity at a height");
  add_common_flags(verify_fold, opt, true, false, true, false);
  CLI::App* dihedral = app.add_subcommand(
      "dihedral", "identification chain for infinite-dihedral quotients; a concrete NK_q table "
                  "entry doubles as the coinvariant stand-in");
  add_common_flags(dihedral, opt, false, true, false, false);
  CLI::App* demo = app.add_subcommand("homology-demo",
                                      "torus, mapping torus and Z/2 coinvariant computations");
  demo->add_option("--n", opt.n, "torus dimension (default 2)")->check(CLI::Range(Int{0}, Int{6}));
  demo->add_option("--format", opt.format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (laurent->parsed()) {
      RingTable table = load_ring_table(opt.table);
      auto report = decompose_laurent(opt.n, opt.q, table, opt.height);
      out << render_decomposition("decompose-laurent", report, table.name(), opt.fmt());
      return kExitPass;
    }
    if (relative->parsed()) {
      RingTable table = load_ring_table(opt.table);
      auto report = decompose_relative_vc(opt.n, opt.q, table, opt.height);
      out << render_decomposition("decompose-relative", report, table.name(), opt.fmt());
      return kExitPass;
    }
    if (nk_iter->parsed()) {
      RingTable table = load_ring_table(opt.table);
      auto report = iterated_nk(opt.n, opt.q, table, opt.assume_conjecture, opt.height);
      out << render_decomposition("nk-iter", report, table.name(), opt.fmt());
      return kExitPass;
    }
    if (kregular->parsed()) {
      RingTable table = load_ring_table(opt.table);
      auto report = kregular_check(opt.n, opt.q, table);
      out << render_kregular(report, table.name(), opt.fmt());
      return report.satisfied ? kExitPass : kExitFail;
    }
    if (verify_ft->parsed()) {
      RingTable table = load_ring_table(opt.table);
      auto report = ft_oracle_compare(opt.n, opt.q, table, opt.assume_conjecture, opt.height);
      out << render_oracle_compare(report, table.name(), opt.fmt());
      return report.pass ? kExitPass : kExitFail;
    }
    if (verify_fold->parsed()) {
      auto report = verify_fold_counting(opt.n, opt.q, opt.height);
      out << render_fold(report, opt.fmt());
      return report.pass ? kExitPass : kExitFail;
    }
    if (dihedral->parsed()) {
      RingTable table = load_ring_table(opt.table);
      std::optional<FGAbelianGroup> stand_in;
      auto entry = table.nk_entry(opt.q);
      if (entry && entry->kind == EntryKind::concrete) stand_in = *entry->group;
      if (entry && entry->is_zero()) stand_in = FGAbelianGroup::trivial();
      auto report = dihedral_report(opt.q, stand_in);
      out << render_dihedral(report, opt.fmt());
      if (stand_in) return report.verified ? kExitPass : kExitFail;
      return kExitPass;
    }
    if (demo->parsed()) {
      Int dim = demo->count("--n") ? opt.n : 2;
      out << render_homology_demo(dim, opt.fmt());
      return kExitPass;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no command selected\n";
  return kExitUsage;
}

}  // namespace kdecomp::cli
