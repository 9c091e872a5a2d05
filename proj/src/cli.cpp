#include "mobius/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mobius/catalog.hpp"
#include "mobius/errors.hpp"
#include "mobius/galois.hpp"
#include "mobius/io.hpp"
#include "mobius/parallel.hpp"
#include "mobius/selftest.hpp"

namespace mobius::cli {

namespace {

using io::Json;

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(source + " must be an unsigned integer, got '" + text + "'");
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
  RunConfig cfg;
  CLI::App app{"Möbius cohomology of poset modules and Rota-theorem verifier", "mobius"};
  app.require_subcommand(1);
  std::string format = "table";
  std::string seed_text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber); };

  auto* mob = app.add_subcommand("mobius", "Print the Möbius function of a poset");
  mob->add_option("poset", cfg.inputs, "Poset JSON file")->required()->expected(1);
  add_format(mob);

  auto* inv = app.add_subcommand("invert", "Möbius inversion of an integer function");
  inv->add_option("files", cfg.inputs, "Poset JSON file and function JSON file")->required()->expected(2);
  inv->add_flag("--lower", cfg.lower, "Lower inversion (sum over elements below)");
  add_format(inv);

  auto* coh = app.add_subcommand("cohomology", "Möbius cohomology of a module");
  coh->add_option("module", cfg.inputs, "Module JSON file")->required()->expected(1);
  auto* at = coh->add_option("--at", cfg.at, "Element (default: every element)");
  auto* spread = coh->add_option("--spread", cfg.spread, "Comma-separated spread Z for Ext(1_Z, N)");
  at->excludes(spread);
  auto* homology = coh->add_flag("--homology", cfg.homology, "Möbius homology instead of cohomology");
  homology->excludes(spread);
  add_format(coh);
  add_jobs(coh);

  auto* eul = app.add_subcommand("euler-check", "Compare Möbius inversion with the cohomological Euler characteristic");
  eul->add_option("module", cfg.inputs, "Module JSON file")->required()->expected(1);
  add_format(eul);
  add_jobs(eul);

  auto* res = app.add_subcommand("resolution-check", "Check exactness of the standard cofree resolution");
  res->add_option("module", cfg.inputs, "Module JSON file")->required()->expected(1);
  add_format(res);

  auto* gal = app.add_subcommand("galois-check", "Verify a Galois connection and Rota-type identities");
  gal->add_option("posets", cfg.inputs, "P and Q poset JSON files")->required()->expected(2);
  gal->add_option("--f", cfg.f_path, "Left adjoint f : P -> Q")->required();
  gal->add_option("--g", cfg.g_path, "Right adjoint g : Q -> P")->required();
  auto* rota = gal->add_flag("--rota", cfg.rota, "Classical Rota identity for every (a, y)");
  auto* rinv = gal->add_option("--rota-inversion", cfg.rota_inversion, "Function on Q for the inversion form");
  auto* rext = gal->add_option("--rota-ext", cfg.rota_ext, "Module on Q for the Ext form (needs --at)");
  auto* gat = gal->add_option("--at", cfg.at, "Element of P for --rota-ext");
  auto* adj = gal->add_option("--adjunctions", cfg.adjunctions, "Modules on P and on Q")->expected(2);
  auto* feq = gal->add_option("--functor-equalities", cfg.functor_equalities, "Modules on Q and on P")->expected(2);
  std::vector<CLI::Option*> checks{rota, rinv, rext, adj, feq};
  for (auto* a : checks)
    for (auto* b : checks)
      if (a != b) a->excludes(b);
  rext->needs(gat);
  gat->needs(rext);
  add_format(gal);

  auto* en = app.add_subcommand("enumerate-galois", "List all Galois connections between two posets");
  en->add_option("posets", cfg.inputs, "P and Q poset JSON files")->required()->expected(2);
  en->add_option("--max-size", cfg.max_size, "Largest poset accepted")->check(CLI::Range(1, 64));
  add_format(en);

  auto* st = app.add_subcommand("selftest", "Run the random-property battery");
  st->add_option("--seed", seed_text, "64-bit seed (default: $MOBIUS_SEED or 42)");
  st->add_option("--trials", cfg.trials, "Random instances per battery")->check(CLI::NonNegativeNumber);
  st->add_flag("--timings", cfg.timings, "Include per-battery timings");
  add_format(st);
  add_jobs(st);

  std::vector<const char*> argv{"mobius"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    cfg.command = Command::help;
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    cfg.command = Command::help;
    cfg.help_text = app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    throw UsageError(what.empty() ? "invalid arguments (see --help)" : what + " (see --help)");
  }

  cfg.format = format == "json" ? Format::json : Format::table;
  if (*mob) cfg.command = Command::mobius;
  if (*inv) cfg.command = Command::invert;
  if (*coh) cfg.command = Command::cohomology;
  if (*eul) cfg.command = Command::euler_check;
  if (*res) cfg.command = Command::resolution_check;
  if (*gal) cfg.command = Command::galois_check;
  if (*en) cfg.command = Command::enumerate_galois;
  if (*st) cfg.command = Command::selftest;

  if (!seed_text.empty())
    cfg.seed = parse_seed(seed_text, "--seed");
  else if (env_seed && !env_seed->empty())
    cfg.seed = parse_seed(*env_seed, "MOBIUS_SEED");
  return cfg;
}

namespace {

std::string command_name(Command c) {
  switch (c) {
    case Command::mobius: return "mobius";
    case Command::invert: return "invert";
    case Command::cohomology: return "cohomology";
    case Command::euler_check: return "euler-check";
    case Command::resolution_check: return "resolution-check";
    case Command::galois_check: return "galois-check";
    case Command::enumerate_galois: return "enumerate-galois";
    case Command::selftest: return "selftest";
    case Command::help: return "help";
  }
  return "?";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int emit_check_report(std::ostream& out, Format format, const std::string& command, const CheckReport& report,
                      Json extra = Json::object()) {
  bool pass = report.passed();
  if (format == Format::json) {
    Json j;
    j["command"] = command;
    j["status"] = pass ? "pass" : "fail";
    for (auto& [k, v] : extra.items()) j[k] = v;
    Json items = Json::array();
    for (const auto& item : report.items)
      items.push_back({{"label", item.label}, {"lhs", item.lhs}, {"rhs", item.rhs}, {"equal", item.equal}});
    j["items"] = items;
    emit_json(out, j);
  } else {
    std::vector<std::vector<std::string>> rows{{"check", "lhs", "rhs", "result"}};
    for (const auto& item : report.items) rows.push_back({item.label, item.lhs, item.rhs, item.equal ? "ok" : "FAIL"});
    print_table(out, rows);
    out << "status: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

PosetPtr load_poset(const std::string& path) { return share(io::poset_from_json(io::read_json_file(path))); }

PosetModule load_module(const std::string& path, const PosetPtr& known = nullptr) {
  return io::module_from_json(io::read_json_file(path), known);
}

ElementSet parse_spread(const Poset& p, const std::string& text) {
  ElementSet z;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (!p.contains(name)) throw UnknownElement("spread names unknown element '" + name + "'");
    z.push_back(p.index_of(name));
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  if (!is_spread(p, z)) throw NotASpread("{" + text + "} is not a spread");
  return z;
}

Json betti_json(const CohomologyResult& r) {
  return Json{{"betti", r.betti}, {"euler", io::integer_to_json(r.euler)}};
}

std::string betti_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int run_mobius(const RunConfig& cfg, std::ostream& out) {
  PosetPtr p = load_poset(cfg.inputs.at(0));
  IncidenceFunction mu = mobius_recursive(p);
  if (cfg.format == Format::json) {
    Json values = Json::array();
    for (Element a = 0; a < p->size(); ++a)
      for (Element b : from_mask(p->up_set(a)))
        values.push_back({{"from", p->name(a)}, {"to", p->name(b)}, {"value", io::integer_to_json(mu(a, b))}});
    emit_json(out, Json{{"command", "mobius"}, {"elements", p->names()}, {"mobius", values}});
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"mu"};
    for (const auto& n : p->names()) header.push_back(n);
    rows.push_back(header);
    for (Element a = 0; a < p->size(); ++a) {
      std::vector<std::string> row{p->name(a)};
      for (Element b = 0; b < p->size(); ++b) row.push_back(p->leq(a, b) ? mu(a, b).get_str() : ".");
      rows.push_back(row);
    }
    print_table(out, rows);
  }
  return kExitPass;
}

int run_invert(const RunConfig& cfg, std::ostream& out) {
  PosetPtr p = load_poset(cfg.inputs.at(0));
  GrFunction f = io::gr_function_from_json(io::read_json_file(cfg.inputs.at(1)), p);
  GrFunction result = cfg.lower ? lower_inversion(f) : upper_inversion(f);
  if (cfg.format == Format::json) {
    Json j;
    j["command"] = "invert";
    j["direction"] = cfg.lower ? "lower" : "upper";
    j["values"] = io::gr_function_to_json(result).at("values");
    emit_json(out, j);
  } else {
    std::vector<std::vector<std::string>> rows{{"element", "f", cfg.lower ? "lower-inversion" : "upper-inversion"}};
    for (Element a = 0; a < p->size(); ++a) rows.push_back({p->name(a), f(a).get_str(), result(a).get_str()});
    print_table(out, rows);
  }
  return kExitPass;
}

int run_cohomology(const RunConfig& cfg, std::ostream& out) {
  PosetModule n = load_module(cfg.inputs.at(0));
  const Poset& p = n.poset();
  const char* kind = cfg.homology ? "homology" : "cohomology";

  if (cfg.spread) {
    ElementSet z = parse_spread(p, *cfg.spread);
    CohomologyResult r = cohomology(hom_complex(z, n));
    if (cfg.format == Format::json) {
      std::vector<std::string> names;
      for (Element e : z) names.push_back(p.name(e));
      Json j = betti_json(r);
      j["spread"] = names;
      emit_json(out, Json{{"command", "cohomology"}, {"kind", kind}, {"results", Json::array({j})}});
    } else {
      print_table(out, {{"spread", "betti", "euler"}, {*cfg.spread, betti_text(r.betti), r.euler.get_str()}});
    }
    return kExitPass;
  }

  ElementSet targets;
  if (cfg.at)
    targets.push_back(p.index_of(*cfg.at));
  else
    for (Element e = 0; e < p.size(); ++e) targets.push_back(e);

  std::vector<CohomologyResult> results(targets.size());
  parallel_for(targets.size(), cfg.jobs, [&](std::size_t i) {
    results[i] = cfg.homology ? mobius_homology(targets[i], n) : mobius_cohomology(targets[i], n);
  });

  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Json j = betti_json(results[i]);
      j["at"] = p.name(targets[i]);
      arr.push_back(j);
    }
    emit_json(out, Json{{"command", "cohomology"}, {"kind", kind}, {"results", arr}});
  } else {
    std::vector<std::vector<std::string>> rows{{"at", "betti", "euler"}};
    for (std::size_t i = 0; i < targets.size(); ++i)
      rows.push_back({p.name(targets[i]), betti_text(results[i].betti), results[i].euler.get_str()});
    print_table(out, rows);
  }
  return kExitPass;
}

int run_euler_check(const RunConfig& cfg, std::ostream& out) {
  PosetModule n = load_module(cfg.inputs.at(0));
  const Poset& p = n.poset();
  GrFunction inverted = upper_inversion(dimension_function(n));
  std::vector<Integer> chi(p.size());
  parallel_for(p.size(), cfg.jobs, [&](std::size_t a) { chi[a] = mobius_cohomology(a, n).euler; });
  CheckReport report;
  for (Element a = 0; a < p.size(); ++a) report.add(p.name(a), inverted(a), chi[a]);
  return emit_check_report(out, cfg.format, "euler-check", report);
}

int run_resolution_check(const RunConfig& cfg, std::ostream& out) {
  PosetModule n = load_module(cfg.inputs.at(0));
  ExactnessReport r = check_resolution_exact(n);
  CheckReport report;
  if (r.ok) {
    report.add("exact", "true", "true", true);
  } else {
    report.add("exact@" + n.poset().name(*r.element) + ":degree" + std::to_string(*r.degree), "true",
               "false (" + r.reason + ")", false);
  }
  return emit_check_report(out, cfg.format, "resolution-check", report);
}

int run_galois_check(const RunConfig& cfg, std::ostream& out) {
  PosetPtr p = load_poset(cfg.inputs.at(0));
  PosetPtr q = load_poset(cfg.inputs.at(1));
  MonotoneMap f = io::map_from_json(io::read_json_file(*cfg.f_path), p, q);
  MonotoneMap g = io::map_from_json(io::read_json_file(*cfg.g_path), q, p);

  CheckReport report;
  auto adjoint = verify_connection(f, g);
  if (!adjoint.ok) {
    auto [a, x] = *adjoint.witness;
    report.add("adjoint@(" + p->name(a) + "," + q->name(x) + ")",
               q->leq(f(a), x) ? "f(a)<=x" : "not f(a)<=x", p->leq(a, g(x)) ? "a<=g(x)" : "not a<=g(x)", false);
    return emit_check_report(out, cfg.format, "galois-check", report);
  }
  report.add("adjoint", "true", "true", true);
  GaloisConnection c(f, g);

  if (cfg.rota) report.append(rota_classical_check(c));
  if (cfg.rota_inversion)
    report.append(rota_inversion_check(c, io::gr_function_from_json(io::read_json_file(*cfg.rota_inversion), q)));
  if (cfg.rota_ext) report.append(rota_ext_check(c, load_module(*cfg.rota_ext, q), p->index_of(*cfg.at)));
  if (!cfg.adjunctions.empty())
    report.append(adjunction_dim_check(f, load_module(cfg.adjunctions.at(0), p), load_module(cfg.adjunctions.at(1), q)));
  if (!cfg.functor_equalities.empty())
    report.append(check_functor_equalities(c, load_module(cfg.functor_equalities.at(0), q),
                                           load_module(cfg.functor_equalities.at(1), p)));
  return emit_check_report(out, cfg.format, "galois-check", report);
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  PosetPtr p = load_poset(cfg.inputs.at(0));
  PosetPtr q = load_poset(cfg.inputs.at(1));
  auto connections = enumerate_connections(p, q, cfg.max_size);
  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (const auto& c : connections)
      arr.push_back({{"f", io::map_to_json(c.left())["values"]}, {"g", io::map_to_json(c.right())["values"]}});
    emit_json(out, Json{{"command", "enumerate-galois"}, {"count", connections.size()}, {"connections", arr}});
  } else {
    auto show = [](const MonotoneMap& m) {
      std::string s;
      for (Element a = 0; a < m.source().size(); ++a)
        s += (a ? " " : "") + m.source().name(a) + "->" + m.target().name(m(a));
      return s;
    };
    std::vector<std::vector<std::string>> rows{{"#", "f", "g"}};
    for (std::size_t i = 0; i < connections.size(); ++i)
      rows.push_back({std::to_string(i), show(connections[i].left()), show(connections[i].right())});
    print_table(out, rows);
    out << connections.size() << " connection(s)\n";
  }
  return kExitPass;
}

int run_selftest_command(const RunConfig& cfg, std::ostream& out) {
  SelftestReport report = run_selftest({cfg.seed, cfg.trials, cfg.jobs});
  if (cfg.format == Format::json) {
    emit_json(out, selftest_to_json(report, cfg.timings));
  } else {
    std::vector<std::string> header{"battery", "passed", "total", "result"};
    if (cfg.timings) header.push_back("seconds");
    std::vector<std::vector<std::string>> rows{header};
    for (const auto& b : report.batteries) {
      std::vector<std::string> row{b.name, std::to_string(b.passed), std::to_string(b.total), b.ok() ? "ok" : "FAIL"};
      if (cfg.timings) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << b.seconds;
        row.push_back(s.str());
      }
      rows.push_back(row);
    }
    print_table(out, rows);
    for (const auto& b : report.batteries)
      for (const auto& f : b.failures) out << b.name << " " << f << "\n";
    out << "seed: " << report.seed << "  trials: " << report.trials << "\n";
    out << "status: " << (report.passed() ? "pass" : "fail") << "\n";
  }
  return report.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::help: out << cfg.help_text; return kExitPass;
      case Command::mobius: return run_mobius(cfg, out);
      case Command::invert: return run_invert(cfg, out);
      case Command::cohomology: return run_cohomology(cfg, out);
      case Command::euler_check: return run_euler_check(cfg, out);
      case Command::resolution_check: return run_resolution_check(cfg, out);
      case Command::galois_check: return run_galois_check(cfg, out);
      case Command::enumerate_galois: return run_enumerate(cfg, out);
      case Command::selftest: return run_selftest_command(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << command_name(cfg.command) << ": invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << command_name(cfg.command) << ": invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("MOBIUS_SEED")) env_seed = s;
  RunConfig cfg;
  try {
    cfg = parse_args(args, env_seed);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace mobius::cli
