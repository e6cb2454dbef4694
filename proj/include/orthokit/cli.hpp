#pragma once

// Command-line front end. run() is separate from main() so the golden tests
// can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 valid input with a negative verdict, 2 input or
// usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orthokit/amalgam.hpp"
#include "orthokit/axioms.hpp"
#include "orthokit/church.hpp"
#include "orthokit/core.hpp"
#include "orthokit/decomp.hpp"
#include "orthokit/enumerate.hpp"
#include "orthokit/format.hpp"
#include "orthokit/induce.hpp"
#include "orthokit/relsys.hpp"

namespace orthokit::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input = 2;

namespace detail {

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(fs::path const& path, std::string const& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path.string());
  out << text;
}

/// Parses a file, prefixing parse errors with its path.
inline Structure load(std::string const& path) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (parse_error const& e) {
    throw input_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (input_error const& e) {
    throw input_error(path + ": " + e.what());
  }
}

inline Groupoid load_groupoid(std::string const& path) {
  Structure s = load(path);
  if (auto* g = std::get_if<Groupoid>(&s)) return std::move(*g);
  throw input_error(path + ": expected kind groupoid");
}

inline RelationalSystem load_relsys(std::string const& path) {
  Structure s = load(path);
  if (auto* r = std::get_if<RelationalSystem>(&s)) return std::move(*r);
  throw input_error(path + ": expected kind relsys");
}

inline Json witness_json(Witness const& w, Carrier const& c) {
  Json j = Json::object();
  for (auto const& b : w) j[b.var] = c.name(b.value);
  return j;
}

inline Json report_json(CheckReport const& r, Carrier const& c) {
  Json checks = Json::array();
  for (auto const& chk : r.checks) {
    Json ws = Json::array();
    for (auto const& w : chk.witnesses) ws.push_back(witness_json(w, c));
    checks.push_back({{"name", chk.name}, {"pass", chk.pass}, {"failures", chk.failures}, {"witnesses", ws}});
  }
  return checks;
}

inline void emit_report(std::ostream& out, CheckReport const& r, Carrier const& c, bool json) {
  if (json) {
    out << Json{{"checks", report_json(r, c)}, {"pass", r.passed()}}.dump(2) << '\n';
  } else {
    out << format_report(r, c);
  }
}

inline Elem element(Carrier const& c, std::string const& name) {
  auto e = c.find(name);
  if (!e) throw input_error("unknown element " + name);
  return *e;
}

inline std::string join_names(std::vector<Elem> const& xs, Carrier const& c) {
  std::string s;
  for (Elem x : xs) s += (s.empty() ? "" : " ") + c.name(x);
  return s;
}

/// Pretty table for the center operations, header row first.
template <typename Op>
void print_table(std::ostream& out, std::string const& title, std::vector<Elem> const& xs, Carrier const& c, Op op) {
  std::size_t width = 1;
  for (Elem x : xs) width = std::max(width, c.name(x).size());
  out << title << '\n' << std::setw(static_cast<int>(width)) << "";
  for (Elem y : xs) out << ' ' << std::setw(static_cast<int>(width)) << c.name(y);
  out << '\n';
  for (Elem x : xs) {
    out << std::setw(static_cast<int>(width)) << c.name(x);
    for (Elem y : xs) out << ' ' << std::setw(static_cast<int>(width)) << c.name(op(x, y));
    out << '\n';
  }
}

/// Writes to DIR/name, or to `out` preceded by a "# name" comment.
struct Sink {
  std::string dir;
  std::ostream& out;
  std::vector<std::string> written;

  void put(std::string const& name, std::string const& text) {
    if (dir.empty()) {
      out << "# " << name << '\n' << text;
    } else {
      write_file(fs::path(dir) / name, text);
      written.push_back((fs::path(dir) / name).string());
    }
  }
  void summary() const {
    for (auto const& w : written) out << "wrote " << w << '\n';
  }
};

// ---------------------------------------------------------------------------

inline int cmd_check(std::string const& file, bool lemmas, bool json, std::ostream& out) {
  Structure s = load(file);
  if (auto const* r = std::get_if<RelationalSystem>(&s)) {
    CheckReport rep = validate(*r);
    if (rep.passed()) rep.append(check_orthogonal_system(*r));
    emit_report(out, rep, r->carrier, json);
    return rep.passed() ? exit_ok : exit_negative;
  }
  Groupoid const& g = std::get<Groupoid>(s);
  CheckReport rep = validate(g);
  bool ok = rep.passed();
  if (ok) {
    AxiomVerdict v = check_orthogroupoid(g);
    ok = v.holds();
    rep.append(v.report());
    if (lemmas) {
      CheckReport l = lemma_suite(g);
      ok = ok && l.passed();
      rep.append(l);
    }
  }
  if (json) {
    out << Json{{"checks", report_json(rep, g.carrier)}, {"pass", ok}}.dump(2) << '\n';
  } else {
    out << format_report(rep, g.carrier) << "orthogroupoid " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? exit_ok : exit_negative;
}

inline int cmd_props(std::string const& file, bool json, std::ostream& out) {
  Structure s = load(file);
  CheckReport rep;
  Carrier carrier = std::visit([](auto const& x) { return x.carrier; }, s);
  if (auto const* r = std::get_if<RelationalSystem>(&s)) {
    rep = relation_flags(*r).report();
  } else {
    Groupoid const& g = std::get<Groupoid>(s);
    if (!validate(g).passed()) {
      emit_report(out, validate(g), carrier, json);
      return exit_negative;
    }
    ZeroCommutativity zc = is_zero_commutative(g);
    Check z("zero_commutative");
    if (!zc.holds) z.fail({{"x", *zc.witness}});
    rep.checks.push_back(z);
    rep.append(relation_flags(induced_relation(g)).report());
  }
  emit_report(out, rep, carrier, json);
  return exit_ok;
}

inline int cmd_induce(std::string const& file, bool all, std::string const& dir, std::ostream& out,
                      std::ostream& err) {
  RelationalSystem s = load_relsys(file);
  CheckReport rep = validate(s);
  if (!rep.passed()) {
    err << "not a relational system with 1 and involution:\n" << format_report(rep, s.carrier);
    return exit_negative;
  }
  Induction ind = induce_groupoids(s, all ? ChoicePolicy::enumerate_all : ChoicePolicy::min_index);
  for (auto const& o : ind.overlaps) {
    err << "warning: " << s.carrier.name(o.x) << " and " << s.carrier.name(o.y)
        << " are orthogonal but related; the relational rule fixed the sum\n";
  }
  Sink sink{dir, out, {}};
  for (auto const& ig : ind.groupoids) {
    std::string name = "induced";
    for (std::size_t c : ig.choice) name += "_" + std::to_string(c);
    sink.put(name + ".txt", serialize(ig.groupoid));
  }
  sink.summary();
  return exit_ok;
}

inline int cmd_relate(std::string const& file, std::string const& dir, std::ostream& out) {
  Groupoid g = load_groupoid(file);
  Sink sink{dir, out, {}};
  sink.put("relation.txt", serialize(induced_relation(g)));
  sink.summary();
  return exit_ok;
}

inline int cmd_center(std::string const& file, bool json, std::ostream& out) {
  Groupoid g = load_groupoid(file);
  ChurchAlgebra A(g);
  BooleanCenter c = center(A);
  std::vector<Elem> at = atoms(c);
  if (json) {
    auto names = [&](std::vector<Elem> const& xs) {
      Json j = Json::array();
      for (Elem x : xs) j.push_back(g.carrier.name(x));
      return j;
    };
    out << Json{{"central", names(c.elements)}, {"atoms", names(at)}}.dump(2) << '\n';
    return exit_ok;
  }
  out << "central " << join_names(c.elements, g.carrier) << '\n';
  print_table(out, "join", c.elements, g.carrier, [&](Elem x, Elem y) { return c.join(x, y); });
  print_table(out, "meet", c.elements, g.carrier, [&](Elem x, Elem y) { return c.meet(x, y); });
  out << "complement";
  for (Elem x : c.elements) out << ' ' << g.carrier.name(x) << "->" << g.carrier.name(c.complement(x));
  out << "\natoms " << join_names(at, g.carrier) << '\n';
  return exit_ok;
}

inline int cmd_decompose(std::string const& file, std::string const& at, std::string const& dir, bool json,
                         std::ostream& out) {
  Groupoid g = load_groupoid(file);
  ChurchAlgebra A(g);
  Decomposition d = at.empty() ? full_decompose(A) : binary_decompose(A, element(g.carrier, at));

  std::ostringstream iso;
  iso << "element";
  for (std::size_t k = 0; k < d.factors.size(); ++k) iso << " factor" << k + 1;
  iso << '\n';
  for (Elem b = 0; b < g.size(); ++b) {
    iso << g.carrier.name(b);
    for (std::size_t k = 0; k < d.factors.size(); ++k) iso << ' ' << d.factors[k].carrier.name(d.iso[b][k]);
    iso << '\n';
  }

  if (json) {
    Json factors = Json::array();
    for (std::size_t k = 0; k < d.factors.size(); ++k) {
      Json members = Json::array();
      for (Elem x : d.factor_members[k]) members.push_back(g.carrier.name(x));
      factors.push_back({{"size", d.factors[k].size()}, {"members", members}, {"text", serialize(d.factors[k])}});
    }
    Json atoms_j = Json::array();
    for (Elem e : d.center_atoms) atoms_j.push_back(g.carrier.name(e));
    out << Json{{"factors", factors}, {"atoms", atoms_j}, {"iso", iso.str()}}.dump(2) << '\n';
    return exit_ok;
  }
  Sink sink{dir, out, {}};
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    sink.put("factor" + std::to_string(k + 1) + ".txt", serialize(d.factors[k]));
  }
  sink.put("iso.txt", iso.str());
  sink.summary();
  return exit_ok;
}

inline int cmd_amalgamate(std::string const& fa, std::string const& fb1, std::string const& fb2,
                          std::string const& fi, std::string const& fj, std::string const& dir, std::ostream& out) {
  VFormation v{load_groupoid(fa), load_groupoid(fb1), load_groupoid(fb2), {}, {}};
  v.i = parse_map(read_file(fi), v.a.carrier, v.b1.carrier);
  v.j = parse_map(read_file(fj), v.a.carrier, v.b2.carrier);
  CheckReport rep = validate_vformation(v);
  if (!rep.passed()) {
    for (auto const& c : rep.checks) {
      Carrier const& carrier = c.name.rfind("b1", 0) == 0 ? v.b1.carrier
                               : c.name.rfind("b2", 0) == 0 ? v.b2.carrier
                                                            : v.a.carrier;
      CheckReport one;
      one.checks.push_back(c);
      out << format_report(one, carrier);
    }
    return exit_negative;
  }
  Amalgam m = amalgamate(v);
  bool const strong = verify_strong(v, m);
  Sink sink{dir, out, {}};
  sink.put("D.txt", serialize(m.d));
  sink.put("h.map", serialize_map(m.h, v.b1.carrier, m.d.carrier));
  sink.put("k.map", serialize_map(m.k, v.b2.carrier, m.d.carrier));
  sink.summary();
  out << "size " << m.d.size() << '\n';
  for (std::size_t c = 0; c < m.proof_cases.size(); ++c) out << "case" << c + 1 << ' ' << m.proof_cases[c] << '\n';
  out << "strong " << (strong ? "PASS" : "FAIL") << '\n';
  return strong ? exit_ok : exit_negative;
}

struct EnumerateOptions {
  std::size_t size = 0;
  bool relsys = false;
  bool zero_comm = false;
  bool reflexive = false;
  bool transitive = false;
  bool up_to_iso = false;
  bool count_only = false;
  bool json = false;
  unsigned jobs = 1;
  std::string dir;
};

inline int cmd_enumerate(EnumerateOptions const& o, std::ostream& out, std::ostream& err) {
  if (o.size == 0 || o.size > max_carrier_size) throw input_error("--size must be between 1 and 64");
  if (o.relsys && o.zero_comm) throw input_error("--zero-comm applies to groupoid enumeration only");
  if (!o.relsys && (o.reflexive || o.transitive)) throw input_error("--reflexive/--transitive need --relsys");
  if (o.size > enumeration_soft_limit) {
    err << "warning: size " << o.size << " is beyond the supported range for full enumeration\n";
  }
  SearchSpec spec;
  spec.size = o.size;
  spec.zero_commutative = o.zero_comm;
  spec.reflexive = o.reflexive;
  spec.transitive = o.transitive;
  spec.dedup = o.up_to_iso ? Dedup::up_to_iso : Dedup::labelled;
  spec.jobs = std::max(1U, o.jobs);

  std::size_t count = 0;
  Json models = Json::array();
  Sink sink{o.dir, out, {}};
  auto handle = [&](std::string const& text) {
    ++count;
    if (o.count_only) return;
    if (o.json) {
      models.push_back(text);
    } else {
      std::ostringstream name;
      name << "model" << std::setw(5) << std::setfill('0') << count << ".txt";
      sink.put(name.str(), text);
    }
  };
  if (o.relsys) {
    for_each_orthosystem(spec, [&](RelationalSystem const& s) { handle(serialize(s)); });
  } else {
    for_each_orthogroupoid(spec, [&](Groupoid const& g) { handle(serialize(g)); });
  }
  if (o.json) {
    Json doc{{"count", count}};
    if (!o.count_only) doc["models"] = models;
    out << doc.dump(2) << '\n';
  } else if (o.count_only) {
    out << count << '\n';
  } else {
    sink.summary();
    out << "count " << count << '\n';
  }
  return exit_ok;
}

}  // namespace detail

inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orthokit: orthogonal relational systems and orthogroupoids"};
  app.name("orthokit");
  app.require_subcommand(1);

  std::string file, dir, at;
  bool flag_json = false, lemmas = false, all = false, full = false;

  auto* check = app.add_subcommand("check", "validate a structure and run its axiom checks");
  check->add_option("file", file, "structure file")->required();
  check->add_flag("--lemmas", lemmas, "also run the lemma suite (groupoids)");
  check->add_flag("--json", flag_json, "machine-readable report");

  auto* props = app.add_subcommand("props", "relation flags (and 0-commutativity for groupoids)");
  props->add_option("file", file, "structure file")->required();
  props->add_flag("--json", flag_json, "machine-readable report");

  auto* induce = app.add_subcommand("induce", "groupoid(s) induced by a relational system");
  induce->add_option("file", file, "relsys file")->required();
  induce->add_flag("--all", all, "every choice instead of the smallest candidates");
  induce->add_option("--out", dir, "output directory");

  auto* relate = app.add_subcommand("relate", "relational system induced by a groupoid");
  relate->add_option("file", file, "groupoid file")->required();
  relate->add_option("--out", dir, "output directory");

  auto* center_cmd = app.add_subcommand("center", "central elements and their Boolean algebra");
  center_cmd->add_option("file", file, "groupoid file")->required();
  center_cmd->add_flag("--json", flag_json, "machine-readable report");

  auto* decompose = app.add_subcommand("decompose", "direct decomposition along central elements");
  decompose->add_option("file", file, "groupoid file")->required();
  auto* at_opt = decompose->add_option("--at", at, "split at one central element");
  decompose->add_flag("--full", full, "split into directly indecomposable factors (default)")->excludes(at_opt);
  decompose->add_option("--out", dir, "output directory");
  decompose->add_flag("--json", flag_json, "machine-readable report");

  std::string fa, fb1, fb2, fi, fj;
  auto* amalgamate_cmd = app.add_subcommand("amalgamate", "strong amalgam of a V-formation");
  amalgamate_cmd->add_option("--a", fa, "common subalgebra A")->required();
  amalgamate_cmd->add_option("--b1", fb1, "first algebra B1")->required();
  amalgamate_cmd->add_option("--b2", fb2, "second algebra B2")->required();
  amalgamate_cmd->add_option("--i", fi, "embedding A -> B1 (map file)")->required();
  amalgamate_cmd->add_option("--j", fj, "embedding A -> B2 (map file)")->required();
  amalgamate_cmd->add_option("--out", dir, "output directory");

  detail::EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "all models of a given size");
  enumerate->add_option("--size", eo.size, "carrier size")->required();
  enumerate->add_flag("--relsys", eo.relsys, "orthogonal relational systems instead of orthogroupoids");
  enumerate->add_flag("--zero-comm", eo.zero_comm, "only 0-commutative orthogroupoids");
  enumerate->add_flag("--reflexive", eo.reflexive, "only reflexive relations");
  enumerate->add_flag("--transitive", eo.transitive, "only transitive relations");
  enumerate->add_flag("--up-to-iso", eo.up_to_iso, "one model per isomorphism class");
  enumerate->add_flag("--count-only", eo.count_only, "print only the number of models");
  enumerate->add_option("--out", eo.dir, "output directory");
  enumerate->add_option("--jobs", eo.jobs, "worker threads")->check(CLI::Range(1U, 1024U));
  enumerate->add_flag("--json", eo.json, "machine-readable output");

  std::vector<std::string> argv_store{"orthokit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    err << "orthokit: " << e.what() << '\n';
    return exit_input;
  }

  try {
    if (*check) return detail::cmd_check(file, lemmas, flag_json, out);
    if (*props) return detail::cmd_props(file, flag_json, out);
    if (*induce) return detail::cmd_induce(file, all, dir, out, err);
    if (*relate) return detail::cmd_relate(file, dir, out);
    if (*center_cmd) return detail::cmd_center(file, flag_json, out);
    if (*decompose) return detail::cmd_decompose(file, at, dir, flag_json, out);
    if (*amalgamate_cmd) return detail::cmd_amalgamate(fa, fb1, fb2, fi, fj, dir, out);
    if (*enumerate) return detail::cmd_enumerate(eo, out, err);
  } catch (input_error const& e) {
    err << "orthokit: " << e.what() << '\n';
    return exit_input;
  } catch (precondition_error const& e) {
    err << "orthokit: " << e.what() << '\n';
    return exit_negative;
  }
  return exit_input;
}

}  // namespace orthokit::cli
