#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "permlab/closure.hpp"
#include "permlab/embedding.hpp"
#include "permlab/error.hpp"
#include "permlab/order.hpp"
#include "permlab/permutation.hpp"
#include "permlab/replay.hpp"
#include "permlab/serialize.hpp"

namespace permlab::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OrderSpec load_spec(const RunConfig& config) {
  OrderSpec spec = parse_order_spec(read_file(config.input_path));
  return config.complete ? complete_relations(spec) : spec;
}

std::shared_ptr<const Universe> load_universe(const RunConfig& config) {
  if (config.index_budget == 0) throw Error(ErrorCode::PreconditionViolated, "--index-budget must be >= 1");
  return build_universe(validate_order(load_spec(config)), config.depth, config.index_budget,
                        config.size_cap);
}

/// Runs `body`, turning library errors into exit codes and diagnostics.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult r;
    const bool breach =
        e.code() == ErrorCode::InvariantBreach || e.code() == ErrorCode::ShapeViolation;
    r.exit_code = breach ? 2 : 1;
    r.err = std::string("error: ") + e.what() + "\n";
    if (auto k = e.suggested_index_budget())
      r.err += "hint: rerun with --index-budget " + std::to_string(*k) + " or larger\n";
    return r;
  }
}

std::vector<AtomId> parse_atoms(const Universe& u, const std::vector<std::string>& paths) {
  std::vector<AtomId> out;
  for (const auto& p : paths) out.push_back(parse_atom_path(u, p));
  return out;
}

Json paths(const Universe& u, std::span<const AtomId> atoms) {
  Json out = Json::array();
  for (AtomId a : atoms) out.push_back(atom_path(u, a));
  return out;
}

std::string path_lines(const Universe& u, std::span<const AtomId> atoms, const char* indent = "  ") {
  std::string out;
  for (AtomId a : atoms) out += indent + atom_path(u, a) + "\n";
  return out;
}

std::string cycles_text(const Universe& u, const Cycles& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += " ";
      out += atom_path(u, cycle[i]);
    }
    out += ")";
  }
  return out;
}

std::string spec_text(const OrderSpec& spec) {
  std::string out = "elements:";
  for (const auto& e : spec.elements) out += " " + e;
  out += "\nle:";
  for (const auto& [a, b] : spec.le) out += " " + a + "<=" + b;
  out += "\nlestar:";
  for (const auto& [a, b] : spec.lestar) out += " " + a + "<=*" + b;
  return out + "\n";
}

std::string report_text(const EmbeddingReport& report, const ReportCheck& check) {
  const Universe& u = *report.universe;
  const auto& order = u.order();
  std::ostringstream out;
  out << "truncation: depth " << u.depth() << ", index budget " << u.index_budget() << ", "
      << u.size() << " atoms\n";
  out << "supports: size <= " << report.options.support_budget
      << (report.sampled ? ", sampled" : ", exhaustive") << ", seed " << report.options.seed
      << "\n";
  for (int matrix = 0; matrix < 2; ++matrix) {
    out << (matrix == 0 ? "\n|S_p| <= |S_q|" : "\n|S_p| <=* |S_q|") << "  (row p, column q)\n";
    for (ElementId p = 0; p < order.size(); ++p) {
      out << "  " << order.name(p) << ":";
      for (ElementId q = 0; q < order.size(); ++q) {
        const Cell& c = matrix == 0 ? report.le_cell(p, q) : report.lestar_cell(p, q);
        out << "  " << order.name(q) << "=";
        if (c.verdict == Verdict::positive)
          out << "yes[" << c.witness->pairs.size() << " pairs]";
        else
          out << "no[" << c.certificates.size() << " certs]";
      }
      out << "\n";
    }
  }
  out << "\nmatrices match input: " << (check.matrices_match ? "yes" : "NO") << "\n";
  out << "evidence replay: " << (check.evidence_ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

void add_common(CLI::App* app, RunConfig& config, bool with_truncation) {
  app->add_option("input", config.input_path, "JSON order file")->required();
  app->add_flag("--complete", config.complete, "close both relations before validating");
  app->add_option("--format", config.output_format, "text or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::text},
                                              {"json", OutputFormat::json}}));
  if (!with_truncation) return;
  app->add_option("--depth", config.depth, "truncation depth N")->capture_default_str();
  app->add_option("--index-budget", config.index_budget, "index budget K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--support-budget", config.support_budget, "largest support size tested")
      ->capture_default_str();
  app->add_option("--max-supports", config.max_supports,
                  "sample supports above this many candidates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--size-cap", config.size_cap, "maximum atom count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--seed", config.seed, "seed for sampled supports")->capture_default_str();
}

}  // namespace

CommandResult cmd_validate(const RunConfig& config) {
  return guarded([&] {
    const DoublyOrderedSet d = validate_order(load_spec(config));
    const OrderSpec normalized = d.to_spec();
    CommandResult r;
    r.out = config.output_format == OutputFormat::json ? to_document(to_json(normalized))
                                                       : "valid doubly ordered set\n" +
                                                             spec_text(normalized);
    return r;
  });
}

CommandResult cmd_report(const RunConfig& config) {
  return guarded([&] {
    auto u = load_universe(config);
    ReportOptions options;
    options.support_budget = config.support_budget;
    options.max_supports = config.max_supports;
    options.seed = config.seed;
    const EmbeddingReport report = embedding_report(u, options);
    const ReportCheck check = check_report(report);

    CommandResult r;
    r.out = config.output_format == OutputFormat::json ? to_document(to_json(report))
                                                       : report_text(report, check);
    if (!check.ok()) {
      r.exit_code = 2;
      for (const auto& f : check.failures) r.err += "breach: " + f + "\n";
    }
    return r;
  });
}

CommandResult cmd_closure(const RunConfig& config, const std::vector<std::string>& atoms) {
  return guarded([&] {
    auto u = load_universe(config);
    const auto base = parse_atoms(*u, atoms);
    const ClosureSet cl = closure(*u, base);
    const AtomSet nonzero = nonzero_index_part(*u, base);
    CommandResult r;
    if (config.output_format == OutputFormat::json) {
      Json j;
      j["base"] = paths(*u, cl.base);
      j["members"] = paths(*u, cl.members);
      j["x_part"] = paths(*u, cl.x_part);
      j["y_part"] = paths(*u, cl.y_part);
      j["nonzero_index_part"] = paths(*u, nonzero);
      r.out = to_document(j);
    } else {
      r.out = "closure (" + std::to_string(cl.members.size()) + " atoms):\n" +
              path_lines(*u, cl.members) + "nonzero-index part (" +
              std::to_string(nonzero.size()) + " atoms):\n" + path_lines(*u, nonzero);
    }
    return r;
  });
}

CommandResult cmd_move(const RunConfig& config, const std::vector<std::string>& support,
                       const std::string& atom) {
  return guarded([&] {
    auto u = load_universe(config);
    const auto base = parse_atoms(*u, support);
    const AtomId c = parse_atom_path(*u, atom);
    const Permutation pi = mover(*u, base, c);
    const ClosureSet cl = closure(*u, base);
    const MembershipAudit audit = audit_membership(*u, pi.map());
    const bool fixes = pi.fixes_pointwise(cl.members);
    const bool moves = pi.moves(c);

    CommandResult r;
    if (config.output_format == OutputFormat::json) {
      Json j;
      j["support"] = paths(*u, cl.base);
      j["atom"] = atom_path(*u, c);
      j["closure"] = paths(*u, cl.members);
      j["permutation"] = cycles_to_json(*u, pi.cycles());
      j["audit"] = {{"member", audit.member},
                    {"violation", audit.violation},
                    {"fixes_closure", fixes},
                    {"moves_atom", moves}};
      r.out = to_document(j);
    } else {
      r.out = "permutation: " + cycles_text(*u, pi.cycles()) + "\n" +
              "member of truncated group: " + (audit.member ? "yes" : "NO " + audit.violation) +
              "\nfixes closure pointwise: " + (fixes ? "yes" : "NO") +
              "\nmoves " + atom_path(*u, c) + ": " + (moves ? "yes" : "NO") + "\n";
    }
    if (!audit.member || !fixes || !moves) r.exit_code = 2;
    return r;
  });
}

CommandResult cmd_orbits(const RunConfig& config, const std::vector<std::string>& support) {
  return guarded([&] {
    auto u = load_universe(config);
    const auto base = parse_atoms(*u, support);
    const ClosureSet cl = closure(*u, base);
    const auto gens = fixing_generators(*u, base);
    const auto blocks = orbits(*u, gens);
    AtomSet singletons;
    for (const auto& b : blocks)
      if (b.size() == 1) singletons.push_back(b.front());
    const bool equal = singletons == cl.members;

    CommandResult r;
    if (config.output_format == OutputFormat::json) {
      Json j;
      j["support"] = paths(*u, cl.base);
      j["closure"] = paths(*u, cl.members);
      j["generators"] = gens.size();
      Json os = Json::array();
      for (const auto& b : blocks) os.push_back(paths(*u, b));
      j["orbits"] = std::move(os);
      j["singletons"] = paths(*u, singletons);
      j["singletons_equal_closure"] = equal;
      r.out = to_document(j);
    } else {
      std::string text = std::to_string(gens.size()) + " generators, " +
                         std::to_string(blocks.size()) + " orbits\n";
      for (const auto& b : blocks) {
        text += "  {";
        for (std::size_t i = 0; i < b.size(); ++i) text += (i ? ", " : "") + atom_path(*u, b[i]);
        text += "}\n";
      }
      text += std::string("singleton orbits equal closure: ") + (equal ? "yes" : "no") + "\n";
      r.out = std::move(text);
    }
    return r;
  });
}

CommandResult cmd_refute(const RunConfig& config, const std::string& kind, const std::string& p,
                         const std::string& q, const std::vector<std::string>& support) {
  return guarded([&] {
    auto u = load_universe(config);
    const auto base = parse_atoms(*u, support);
    const ElementId pe = u->order().id(p), qe = u->order().id(q);
    RefutationCertificate cert;
    if (kind == "injection")
      cert = refute_injection(*u, pe, qe, base);
    else if (kind == "surjection")
      cert = refute_surjection(*u, pe, qe, base);
    else
      throw Error(ErrorCode::PreconditionViolated, "kind must be injection or surjection");
    const ReplayResult replay = replay_certificate(*u, cert);

    CommandResult r;
    if (config.output_format == OutputFormat::json) {
      Json j = to_json(*u, cert);
      j["replay"] = {{"ok", replay.ok}, {"failure", replay.failure}};
      r.out = to_document(j);
    } else {
      std::string text = "refutes |S_" + p + "| " +
                         (kind == "injection" ? "<=" : "<=*") + " |S_" + q +
                         "| for supports equal to the given set\n";
      text += "fresh atom: " + atom_path(*u, cert.fresh) + "\n";
      for (const auto& ev : cert.evidence)
        text += "  " + atom_path(*u, ev.atom) + " [" +
                (ev.branch == Branch::moves_fresh ? "A" : "B") + "] " +
                cycles_text(*u, ev.permutation) + "\n";
      text += std::string("replay: ") + (replay.ok ? "ok" : "FAILED " + replay.failure) + "\n";
      r.out = std::move(text);
    }
    if (!replay.ok) r.exit_code = 2;
    return r;
  });
}

CommandResult cmd_enumerate(std::size_t n, OutputFormat format) {
  return guarded([&] {
    const auto all = enumerate_small_doubly_ordered(n);
    CommandResult r;
    if (format == OutputFormat::json) {
      Json list = Json::array();
      for (const auto& d : all) list.push_back(to_json(d.to_spec()));
      r.out = to_document(Json{{"n", n}, {"count", all.size()}, {"structures", list}});
    } else {
      r.out = std::to_string(all.size()) + " doubly ordered sets on " + std::to_string(n) +
              " elements\n";
      for (const auto& d : all) r.out += "\n" + spec_text(d.to_spec());
    }
    return r;
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"permlab: finite truncations of the permutation model for doubly ordered sets"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> atoms, support;
  std::string atom, kind = "injection", p, q;
  std::size_t n = 2;
  OutputFormat enumerate_format = OutputFormat::text;

  auto* validate = app.add_subcommand("validate", "check the order axioms of an input file");
  add_common(validate, config, false);

  auto* report = app.add_subcommand("report", "build and check every witness and refutation");
  add_common(report, config, true);

  auto* closure_cmd = app.add_subcommand("closure", "closure of a set of atoms");
  add_common(closure_cmd, config, true);
  closure_cmd->add_option("--atom", atoms, "atom path (repeatable)");

  auto* move = app.add_subcommand("move", "permutation fixing Cl(support) that moves an atom");
  add_common(move, config, true);
  move->add_option("--support", support, "support atom path (repeatable)");
  move->add_option("--atom", atom, "atom to move")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "orbits of the support-fixing generators");
  add_common(orbits_cmd, config, true);
  orbits_cmd->add_option("--support", support, "support atom path (repeatable)");

  auto* refute = app.add_subcommand("refute", "certificate that no supported map exists");
  add_common(refute, config, true);
  refute->add_option("--kind", kind, "injection or surjection")
      ->check(CLI::IsMember({"injection", "surjection"}));
  refute->add_option("--p", p, "source sector")->required();
  refute->add_option("--q", q, "target sector")->required();
  refute->add_option("--support", support, "support atom path (repeatable)");

  auto* enumerate = app.add_subcommand("enumerate", "list every doubly ordered set on n elements");
  enumerate->add_option("n", n, "carrier size (at most 3)")->required();
  enumerate->add_option("--format", enumerate_format, "text or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::text},
                                              {"json", OutputFormat::json}}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  CommandResult result;
  if (*validate) result = cmd_validate(config);
  else if (*report) result = cmd_report(config);
  else if (*closure_cmd) result = cmd_closure(config, atoms);
  else if (*move) result = cmd_move(config, support, atom);
  else if (*orbits_cmd) result = cmd_orbits(config, support);
  else if (*refute) result = cmd_refute(config, kind, p, q, support);
  else result = cmd_enumerate(n, enumerate_format);

  out << result.out;
  err << result.err;
  return result.exit_code;
}

}  // namespace permlab::cli
