#include "colorder/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "colorder/catalog.hpp"
#include "colorder/derivations.hpp"
#include "colorder/errors.hpp"

namespace colorder {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.contains(key)) throw ParseError("unknown field '" + key + "' in " + where);
  for (const char* key : required)
    if (!obj.contains(key)) throw ParseError("missing field '" + std::string(key) + "' in " + where);
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(where + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

CycloScalar scalar_from_json(const json& j, int m, const std::string& where) {
  try {
    if (j.is_string()) return CycloScalar::parse(j.get<std::string>(), m);
    if (j.is_number_integer()) return CycloScalar(j.get<long>(), m);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + " must be a scalar string");
}

std::string scalar_text(const CycloScalar& s) { return s.to_string(); }

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_text(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson degree_json(const GroupElement& g) { return g.residues; }

ojson serialize_json(const ColorAlgebra& a) {
  ojson doc;
  doc["group"] = {{"orders", a.group().orders()}};
  doc["bicharacter"] = {{"exponents", a.bicharacter().exponents()}};
  ojson basis = ojson::array();
  for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree.residues}});
  doc["basis"] = std::move(basis);

  auto entry = [&](std::size_t i, std::size_t j) {
    ojson result = ojson::object();
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const auto& c = a.constant(i, j, k);
      if (!c.is_zero()) result[a.name(k)] = scalar_text(c);
    }
    return ojson{{"left", a.name(i)}, {"right", a.name(j)}, {"result", std::move(result)}};
  };
  ojson brackets = ojson::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (!is_zero(a.product(i, j))) brackets.push_back(entry(i, j));
      if (i == j) continue;
      // Emit [e_j, e_i] only when antisymmetry would not regenerate it.
      const CycloScalar f = -a.eps(a.degree(j), a.degree(i));
      bool partner_matches = true;
      for (std::size_t k = 0; k < a.dim(); ++k)
        partner_matches = partner_matches && a.constant(j, i, k) == f * a.constant(i, j, k);
      if (!partner_matches) brackets.push_back(entry(j, i));
    }
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ojson comparisons_json(const std::vector<DegreeComparison>& v, const char* left, const char* right) {
  ojson arr = ojson::array();
  for (const auto& c : v)
    arr.push_back({{"degree", degree_json(c.degree)}, {left, c.left_dim}, {right, c.right_dim},
                   {"equal", c.equal}});
  return arr;
}

ojson lemma_json(const LemmaReport& r) {
  ojson j{{"check", r.check}, {"passed", r.passed()}, {"checked", r.checked}};
  for (const auto& [k, v] : r.values) j[k] = v;
  j["failures"] = r.failures;
  return j;
}

struct Session {
  bool json_output = false;
  bool timings = false;
  Limits limits;
  std::ostream& out;

  void emit(ojson report, const std::string& human) const {
    if (json_output) {
      out << report.dump(2) << '\n';
    } else {
      out << human;
    }
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Session& s, const std::string& target) {
  const auto t0 = Clock::now();
  const ColorAlgebra a = load_target(target);
  const auto bic = validate_bicharacter(a.bicharacter());
  const auto axioms = check_color_axioms(a);
  const bool passed = bic.valid() && axioms.ok();

  ojson rep{{"command", "check"}, {"target", target}, {"fingerprint", fingerprint(a)},
            {"dim", a.dim()}, {"bicharacter_valid", bic.valid()}};
  ojson viol = ojson::array();
  std::ostringstream h;
  h << "check " << target << " (dim " << a.dim() << ", fingerprint " << fingerprint(a) << ")\n";
  for (const auto& v : bic.violations) h << "  bicharacter: " << v.message << '\n';
  for (const auto& v : axioms.violations) {
    viol.push_back({{"kind", to_string(v.kind)}, {"indices", v.indices}, {"message", v.message}});
    h << "  " << to_string(v.kind) << ": " << v.message << '\n';
  }
  rep["axioms"] = {{"ok", axioms.ok()}, {"violations", std::move(viol)}};
  rep["passed"] = passed;
  if (s.timings) rep["timings_ms"] = {{"total", ms_since(t0)}};
  h << (passed ? "PASS" : "FAIL") << " (" << ms_since(t0) << " ms)\n";
  s.emit(std::move(rep), h.str());
  return passed ? 0 : 1;
}

int cmd_invariants(const Session& s, const std::string& target) {
  const ColorAlgebra a = load_target(target);
  const Subspace derived = derived_subalgebra(a);
  const Subspace z = center(a);
  ojson rep{{"command", "invariants"}, {"target", target}, {"fingerprint", fingerprint(a)},
            {"dim", a.dim()}, {"derived_dim", derived.dim()}, {"perfect", derived.dim() == a.dim()},
            {"center_dim", z.dim()}, {"center_basis", matrix_json(z.basis())}, {"passed", true}};
  std::ostringstream h;
  h << target << ": dim " << a.dim() << ", dim [L,L] = " << derived.dim()
    << ", perfect: " << yes_no(derived.dim() == a.dim()) << ", dim Z(L) = " << z.dim() << '\n';
  s.emit(std::move(rep), h.str());
  return 0;
}

int cmd_der(const Session& s, const std::string& target, int n) {
  const auto t0 = Clock::now();
  const ColorAlgebra a = load_target(target);
  const auto space = n_derivation_space(a, n, s.limits);
  ojson blocks = ojson::array();
  std::ostringstream h;
  h << n << "Der(" << target << "): total dim " << space.total_dim() << '\n';
  for (const auto& b : space.blocks()) {
    ojson maps = ojson::array();
    for (std::size_t r = 0; r < b.space.dim(); ++r)
      maps.push_back(matrix_json(space.block_map(b, b.space.basis().row(r)).matrix()));
    blocks.push_back({{"degree", degree_json(b.degree)}, {"dim", b.space.dim()}, {"basis", std::move(maps)}});
    h << "  degree " << b.degree.to_string() << ": dim " << b.space.dim() << '\n';
    for (std::size_t r = 0; r < b.space.dim(); ++r)
      h << "    " << matrix_to_string(space.block_map(b, b.space.basis().row(r)).matrix()) << '\n';
  }
  ojson rep{{"command", "der"}, {"target", target}, {"fingerprint", fingerprint(a)}, {"n", n},
            {"total_dim", space.total_dim()}, {"blocks", std::move(blocks)}, {"passed", true}};
  if (s.timings) rep["timings_ms"] = {{"total", ms_since(t0)}};
  s.emit(std::move(rep), h.str());
  return 0;
}

int cmd_verify(const Session& s, const std::string& target, int n, const std::string& part,
               bool lemmas) {
  const ColorAlgebra a = load_target(target);
  if (n < 2) throw BadArity("--n must be at least 2");
  if (n > s.limits.max_n)
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(s.limits.max_n) + "; pass --max-n to override");
  bool passed = true;
  ojson rep{{"command", "verify"}, {"target", target}, {"fingerprint", fingerprint(a)}, {"n", n}};
  ojson timings = ojson::object();
  std::ostringstream h;
  h << "verify " << target << " with n = " << n << '\n';

  if (part == "1" || part == "all") {
    const auto t0 = Clock::now();
    const auto r = verify_nder_equals_der(a, n, s.limits);
    const bool ok = r.preconditions_hold && r.passed();
    passed = passed && ok;
    ojson p{{"perfect", r.perfect}, {"center_dim", r.center_dim},
            {"preconditions_hold", r.preconditions_hold}, {"der_dim", r.der_dim},
            {"nder_dim", r.nder_dim}, {"equal", r.equal},
            {"per_degree", comparisons_json(r.per_degree, "der_dim", "nder_dim")}};
    p["delta_fixed_point"] = r.delta_fixed_point ? ojson(*r.delta_fixed_point) : ojson(nullptr);
    p["passed"] = ok;
    rep["part1"] = std::move(p);
    timings["part1"] = ms_since(t0);
    h << "  part 1: perfect " << yes_no(r.perfect) << ", dim Z(L) " << r.center_dim
      << ", dim Der " << r.der_dim << ", dim " << n << "Der " << r.nder_dim << ", equal "
      << yes_no(r.equal);
    if (!r.preconditions_hold) h << " (preconditions do not hold; nothing asserted)";
    h << (ok ? "  PASS" : "  FAIL") << '\n';
  }

  if (part == "2" || part == "all") {
    const auto t0 = Clock::now();
    try {
      const auto r = verify_second_statement(a, n, s.limits);
      passed = passed && r.passed();
      rep["part2"] = {{"preconditions_hold", true},
                      {"der_dim", r.der_dim},
                      {"part_one_equal", r.part_one_equal},
                      {"derivation_algebra_axioms_ok", r.derivation_algebra_axioms_ok},
                      {"nder_dim", r.nder_dim},
                      {"inner_dim", r.inner_dim},
                      {"equal", r.equal},
                      {"per_degree", comparisons_json(r.per_degree, "nder_dim", "inner_dim")},
                      {"preserves_inner", r.preserves_inner},
                      {"realized_by_derivation", r.realized_by_derivation},
                      {"realizing_maps", r.realizing_maps},
                      {"failures", r.failures},
                      {"passed", r.passed()}};
      h << "  part 2: dim " << n << "Der(Der L) " << r.nder_dim << ", dim ad(Der L) " << r.inner_dim
        << ", equal " << yes_no(r.equal) << ", D(ad L) in ad L " << yes_no(r.preserves_inner)
        << ", D = ad(d) " << yes_no(r.realized_by_derivation) << (r.passed() ? "  PASS" : "  FAIL")
        << '\n';
    } catch (const PreconditionFailed& e) {
      passed = false;
      rep["part2"] = {{"preconditions_hold", false}, {"reason", e.what()}, {"passed", false}};
      h << "  part 2: preconditions do not hold (" << e.what() << ")  FAIL\n";
    }
    timings["part2"] = ms_since(t0);
  }

  if (lemmas) {
    ojson arr = ojson::array();
    auto run = [&](const char* name, auto&& fn) {
      const auto t0 = Clock::now();
      try {
        const LemmaReport r = fn();
        passed = passed && r.passed();
        arr.push_back(lemma_json(r));
        h << "  " << name << ": " << r.checked << " checks" << (r.passed() ? "  PASS" : "  FAIL") << '\n';
        for (const auto& f : r.failures) h << "    " << f << '\n';
      } catch (const PreconditionFailed& e) {
        passed = false;
        arr.push_back({{"check", name}, {"passed", false}, {"preconditions_hold", false}, {"reason", e.what()}});
        h << "  " << name << ": preconditions do not hold (" << e.what() << ")  FAIL\n";
      } catch (const BadArity& e) {
        arr.push_back({{"check", name}, {"passed", true}, {"skipped", e.what()}});
        h << "  " << name << ": skipped (" << e.what() << ")\n";
      }
      timings[name] = ms_since(t0);
    };
    run("closure", [&] { return verify_closure(a, n, 100, 2024, s.limits); });
    run("inner_ideal", [&] { return verify_inner_ideal(a, n, s.limits); });
    run("centralizer_trivial", [&] { return verify_centralizer_trivial(a, n, s.limits); });
    run("delta_membership", [&] { return verify_delta_membership(a, n, s.limits); });
    run("ad_compat", [&] { return verify_ad_compat(a); });
    rep["lemmas"] = std::move(arr);
  }

  rep["passed"] = passed;
  if (s.timings) rep["timings_ms"] = std::move(timings);
  h << (passed ? "PASS" : "FAIL") << '\n';
  s.emit(std::move(rep), h.str());
  return passed ? 0 : 1;
}

int cmd_catalog(const Session& s, const std::string& action, const std::string& name) {
  if (action == "list") {
    ojson rep{{"command", "catalog"}, {"entries", catalog::names()}};
    std::string h;
    for (const auto& n : catalog::names()) h += n + "\n";
    s.emit(std::move(rep), h);
    return 0;
  }
  if (name.empty()) throw CLI::ValidationError("catalog emit", "needs a catalog name");
  s.out << serialize_algebra(catalog::by_name(name));
  return 0;
}

}  // namespace

ColorAlgebra parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, "document", {"group", "bicharacter", "basis", "brackets"},
               {"group", "bicharacter", "basis"});
  require_keys(doc["group"], "group", {"orders"}, {"orders"});
  require_keys(doc["bicharacter"], "bicharacter", {"exponents"}, {"exponents"});

  GradingGroup group;
  try {
    group = GradingGroup(int_list(doc["group"]["orders"], "group.orders"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(std::string("group.orders: ") + e.what());
  }
  const json& ex = doc["bicharacter"]["exponents"];
  if (!ex.is_array()) throw ParseError("bicharacter.exponents must be an array");
  std::vector<std::vector<int>> table;
  for (const auto& row : ex) table.push_back(int_list(row, "bicharacter.exponents row"));
  std::optional<Bicharacter> bichar;
  try {
    bichar.emplace(group, table);
  } catch (const ArityMismatch& e) {
    throw ValidationError(std::string("bicharacter.exponents: ") + e.what());
  }
  const auto brep = validate_bicharacter(*bichar);
  if (!brep.valid()) throw ValidationError("bicharacter: " + brep.violations.front().message);
  const int m = bichar->conductor();

  if (!doc["basis"].is_array()) throw ParseError("basis must be an array");
  std::vector<BasisElement> basis;
  std::map<std::string, std::size_t> index;
  for (const auto& b : doc["basis"]) {
    require_keys(b, "basis entry", {"name", "degree"}, {"name", "degree"});
    if (!b["name"].is_string() || b["name"].get<std::string>().empty())
      throw ParseError("basis name must be a nonempty string");
    const auto name = b["name"].get<std::string>();
    const auto deg = int_list(b["degree"], "degree of '" + name + "'");
    GroupElement g{deg};
    if (!group.contains(g))
      throw ValidationError("degree " + g.to_string() + " of '" + name + "' is not a reduced element of the group");
    if (!index.emplace(name, basis.size()).second) throw ValidationError("duplicate basis name '" + name + "'");
    basis.push_back({name, std::move(g)});
  }

  const std::size_t d = basis.size();
  AlgebraBuilder builder(*bichar, basis);
  std::vector<bool> listed(d * d, false);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  auto lookup = [&](const json& j, const char* field) {
    if (!j.is_string()) throw ParseError(std::string("bracket ") + field + " must be a basis name");
    auto it = index.find(j.get<std::string>());
    if (it == index.end()) throw ValidationError("unknown basis name '" + j.get<std::string>() + "'");
    return it->second;
  };
  std::vector<Vector> given(d * d);
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("brackets must be an array");
    for (const auto& br : doc["brackets"]) {
      require_keys(br, "bracket entry", {"left", "right", "result"}, {"left", "right", "result"});
      const std::size_t i = lookup(br["left"], "left");
      const std::size_t j = lookup(br["right"], "right");
      if (listed[i * d + j])
        throw ValidationError("bracket [" + basis[i].name + "," + basis[j].name + "] listed twice");
      if (!br["result"].is_object()) throw ParseError("bracket result must be an object");
      Vector v = zero_vector(d, m);
      const GroupElement target = group.add(basis[i].degree, basis[j].degree);
      for (const auto& [kname, val] : br["result"].items()) {
        auto it = index.find(kname);
        if (it == index.end()) throw ValidationError("unknown basis name '" + kname + "'");
        const std::size_t k = it->second;
        v[k] = scalar_from_json(val, m, "[" + basis[i].name + "," + basis[j].name + "]." + kname);
        if (!v[k].is_zero() && basis[k].degree != target)
          throw ValidationError("grading support violated at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + "): [" + basis[i].name +
                                "," + basis[j].name + "] has a " + kname + " component");
      }
      listed[i * d + j] = true;
      given[i * d + j] = std::move(v);
      order.emplace_back(i, j);
    }
  }
  for (const auto& [i, j] : order) {
    const Vector& v = given[i * d + j];
    builder.set_product(i, j, v);
    if (i == j || listed[j * d + i]) continue;
    const CycloScalar f = -bichar->eps(basis[j].degree, basis[i].degree);
    Vector w = v;
    for (auto& x : w) x *= f;
    builder.set_product(j, i, std::move(w));
  }
  for (const auto& [i, j] : order) {
    if (i >= j || !listed[j * d + i]) continue;
    const CycloScalar f = -bichar->eps(basis[j].degree, basis[i].degree);
    const Vector& v = given[i * d + j];
    const Vector& w = given[j * d + i];
    for (std::size_t k = 0; k < d; ++k) {
      if (!(w[k] == f * v[k]))
        throw ValidationError("brackets [" + basis[i].name + "," + basis[j].name + "] and [" +
                              basis[j].name + "," + basis[i].name + "] violate antisymmetry");
    }
  }
  return builder.build();
}

std::string serialize_algebra(const ColorAlgebra& a) { return serialize_json(a).dump(2) + "\n"; }

std::string fingerprint(const ColorAlgebra& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_json(a).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ColorAlgebra load_target(const std::string& target) {
  constexpr std::string_view prefix = "catalog:";
  if (target.starts_with(prefix)) return catalog::by_name(std::string_view(target).substr(prefix.size()));
  return parse_algebra_file(read_file(target));
}

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivations and n-derivations of Lie color algebras", "colorder"};
  app.require_subcommand(1);
  Session session{false, false, Limits{}, out};
  app.add_flag("--json", session.json_output, "Print a machine-readable JSON report");
  app.add_flag("--timings", session.timings, "Include wall-clock timings in JSON reports");
  app.add_option("--max-n", session.limits.max_n, "Override the cap on n (default 4)")
      ->check(CLI::PositiveNumber);

  std::string target;
  int n = 2;
  std::string part = "all";
  bool lemmas = false;
  std::string action;
  std::string name;

  auto* check = app.add_subcommand("check", "Validate the bicharacter and color-algebra axioms");
  check->add_option("target", target, "Algebra file or catalog:NAME")->required();
  auto* inv = app.add_subcommand("invariants", "Derived subalgebra, center and perfectness");
  inv->add_option("target", target, "Algebra file or catalog:NAME")->required();
  auto* der = app.add_subcommand("der", "Per-degree n-derivation spaces");
  der->add_option("target", target, "Algebra file or catalog:NAME")->required();
  der->add_option("--n", n, "Arity (default 2)");
  auto* verify = app.add_subcommand("verify", "Check nDer(L) = Der(L) and nDer(Der L) = ad(Der L)");
  verify->add_option("target", target, "Algebra file or catalog:NAME")->required();
  verify->add_option("--n", n, "Arity")->required();
  verify->add_option("--part", part, "1, 2 or all")->check(CLI::IsMember({"1", "2", "all"}));
  verify->add_flag("--lemmas", lemmas, "Also run the supporting lemma checks");
  auto* cat = app.add_subcommand("catalog", "List or emit shipped algebras");
  cat->add_option("action", action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  cat->add_option("name", name, "Catalog entry for emit");
  for (auto* sub : {check, inv, der, verify, cat}) sub->fallthrough();

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "colorder: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*check) return cmd_check(session, target);
    if (*inv) return cmd_invariants(session, target);
    if (*der) return cmd_der(session, target, n);
    if (*verify) return cmd_verify(session, target, n, part, lemmas);
    if (*cat) return cmd_catalog(session, action, name);
  } catch (const CLI::Error& e) {
    err << "colorder: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "colorder: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace colorder
