// isolab: command-line front end over the core library.
//
// Exit codes: 0 success or agreement, 1 a check failed (the report carries
// the certificate), 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isolab/error.hpp"
#include "isolab/iso/isotropy.hpp"
#include "isolab/models/io.hpp"
#include "isolab/models/semantics.hpp"
#include "isolab/nf/rewrite.hpp"
#include "isolab/phl/dsl.hpp"
#include "isolab/suite/properties.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/theories/constructions.hpp"
#include "isolab/theories/encode.hpp"
#include "isolab/theories/json_io.hpp"

namespace {

using namespace isolab;
using nlohmann::json;
using theories::DataKind;
using theories::TaggedData;

constexpr int kSchemaVersion = 1;

// Bad arguments or unreadable input: exit 2.
struct UsageError : Error {
  using Error::Error;
};

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

// One command's output, rendered as text or as a single JSON document.
struct Run {
  std::string command;
  json inputs = json::array();
  json result = json::object();
  std::ostringstream text;
  int status = 0;

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    std::string bytes = s.str();
    inputs.push_back({{"path", path}, {"fnv1a64", hex64(fnv1a64(bytes))}});
    return bytes;
  }

  void emit(bool as_json) const {
    if (!as_json) {
      std::cout << text.str();
      return;
    }
    json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {"inputs", inputs},
             {"status", status == 0 ? "ok" : "failed"},
             {"result", result}};
    std::cout << doc.dump(2) << "\n";
  }
};

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

DataKind data_kind(const std::string& name) {
  auto k = theories::parse_data_kind(name);
  if (!k) throw UsageError("unknown kind '" + name + "'");
  return *k;
}

std::optional<theories::TheoryKind> model_theory(DataKind k) {
  switch (k) {
    case DataKind::Monoid: return theories::TheoryKind::Monoid;
    case DataKind::CMonoid: return theories::TheoryKind::CMonoid;
    case DataKind::Group: return theories::TheoryKind::Group;
    case DataKind::Category: return theories::TheoryKind::Category;
    case DataKind::StrMonCat:
    case DataKind::SymStrMonCat: return theories::TheoryKind::StrMonCat;
    default: return std::nullopt;
  }
}

// Converts data read from a file to the representation `want` asks for.
TaggedData reconcile(TaggedData d, DataKind want) {
  const DataKind have = d.kind;
  if (have == want) return d;
  auto mismatch = [&]() -> UsageError {
    return UsageError("input holds " + std::string(theories::to_string(have)) + " data, expected " +
                      std::string(theories::to_string(want)));
  };
  switch (want) {
    case DataKind::Monoid:
      if (have == DataKind::CMonoid) return {want, std::move(d.value)};
      if (have == DataKind::Group) return {want, std::get<theories::FiniteGroup>(d.value).monoid};
      break;
    case DataKind::CMonoid:
      if (have == DataKind::Monoid || have == DataKind::Group) {
        theories::FiniteMonoid m = have == DataKind::Group
                                       ? std::get<theories::FiniteGroup>(d.value).monoid
                                       : std::get<theories::FiniteMonoid>(d.value);
        if (!m.commutative()) throw InvariantViolation("monoid '" + m.name + "' is not commutative");
        return {want, std::move(m)};
      }
      break;
    case DataKind::Group:
      if (have == DataKind::Monoid || have == DataKind::CMonoid) {
        return {want, theories::FiniteGroup::from_monoid(std::get<theories::FiniteMonoid>(d.value))};
      }
      break;
    case DataKind::StrMonCat:
      if (have == DataKind::SymStrMonCat) return {want, std::move(d.value)};
      break;
    case DataKind::SymStrMonCat:
      if (have == DataKind::StrMonCat) {
        const auto& c = std::get<theories::FiniteStrictMonCat>(d.value);
        if (!c.commutative()) {
          throw InvariantViolation("'" + c.name() + "' does not have a commutative tensor");
        }
        return {want, std::move(d.value)};
      }
      break;
    case DataKind::Presheaf:
      if (have == DataKind::MSet) return {want, std::move(d.value)};
      break;
    case DataKind::MSet:
      if (have == DataKind::Presheaf &&
          std::get<theories::PresheafData>(d.value).category.object_count() == 1) {
        return {want, std::move(d.value)};
      }
      break;
    default:
      break;
  }
  throw mismatch();
}

// A JSON data file, or a model file over the kind's theory.
TaggedData load_input(Run& run, DataKind kind, const std::string& path) {
  const std::string bytes = run.read(path);
  if (has_json_extension(path)) {
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw UsageError(path + ": " + e.what());
    }
    return reconcile(theories::read_data(doc), kind);
  }
  const auto tk = model_theory(kind);
  if (!tk) {
    throw UsageError(std::string(theories::to_string(kind)) + " input must be a JSON data file");
  }
  const models::PartialStructure m = models::parse_model(bytes, theories::build_theory(*tk));
  switch (kind) {
    case DataKind::Monoid:
    case DataKind::CMonoid: return {kind, theories::decode_monoid(m)};
    case DataKind::Group: return {kind, theories::decode_group(m)};
    case DataKind::Category: return {kind, theories::decode_category(m)};
    default: return reconcile({DataKind::StrMonCat, theories::decode_strmoncat(m)}, kind);
  }
}

iso::Bounds parse_bounds(const std::string& text) {
  iso::Bounds b;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    const long k = std::stol(text.substr(0, comma));
    const long l = std::stol(text.substr(comma + 1));
    if (k <= 0 || l <= 0) throw std::invalid_argument(text);
    b.max_x = static_cast<std::size_t>(k);
    b.max_length = static_cast<std::size_t>(l);
  } catch (const std::logic_error&) {
    throw UsageError("--bounds expects two positive integers 'k,l', got '" + text + "'");
  }
  return b;
}

// ---- theory ----------------------------------------------------------------

void theory_emit(Run& run, const std::string& kind, const std::string& data_path) {
  std::string source;
  if (kind == "presheaf" || kind == "mset") {
    if (data_path.empty()) throw UsageError("theory emit " + kind + " needs a data file");
    const TaggedData d = load_input(run, data_kind(kind), data_path);
    source = phl::print_theory(
        *theories::build_presheaf_theory(std::get<theories::PresheafData>(d.value).category));
  } else {
    const auto k = theories::parse_theory_kind(kind);
    if (!k) throw UsageError("unknown theory kind '" + kind + "'");
    source = std::string(theories::theory_source(*k));
  }
  run.text << source;
  if (!source.empty() && source.back() != '\n') run.text << "\n";
  run.result["source"] = source;
}

void theory_check(Run& run, const std::string& path) {
  const std::string source = run.read(path);
  phl::Theory t;
  try {
    t = phl::parse_theory(source);
    phl::validate_theory(t);
  } catch (const Error& e) {
    run.status = 1;
    run.text << "invalid: " << e.what() << "\n";
    run.result = {{"valid", false}, {"error", e.what()}};
    return;
  }
  const bool round_trip = phl::parse_theory(phl::print_theory(t)) == t;
  run.status = round_trip ? 0 : 1;
  run.text << (round_trip ? "ok" : "round trip failed") << ": theory " << t.name << ", "
           << t.signature.sort_count() << " sorts, " << t.signature.op_count() << " operations, "
           << t.axioms.size() << " axioms\n";
  run.result = {{"valid", true},
                {"round_trip", round_trip},
                {"name", t.name},
                {"sorts", t.signature.sort_count()},
                {"operations", t.signature.op_count()},
                {"axioms", t.axioms.size()}};
}

// ---- model -------------------------------------------------------------------

void model_check(Run& run, const std::string& theory, const std::string& path) {
  std::shared_ptr<const phl::Theory> th;
  if (auto k = theories::parse_theory_kind(theory)) {
    th = theories::build_theory(*k);
  } else {
    th = std::make_shared<const phl::Theory>(phl::parse_theory(run.read(theory)));
  }
  const models::PartialStructure m = models::parse_model(run.read(path), th);
  const models::ModelReport report = models::check_model(m);
  run.status = report.ok() ? 0 : 1;
  if (report.ok()) {
    run.text << "ok: " << m.name() << " satisfies all " << th->axioms.size() << " axioms of "
             << th->name << "\n";
  } else {
    run.text << "model " << m.name() << " fails " << report.failures.size() << " axiom(s) of "
             << th->name << "\n"
             << models::format_report(report);
  }
  json failures = json::array();
  for (const auto& f : report.failures) {
    json witness = json::object();
    for (const auto& [var, elem] : f.witness) witness[var] = elem;
    failures.push_back({{"axiom", f.axiom}, {"text", f.axiom_text}, {"witness", witness}});
  }
  run.result = {{"model", m.name()}, {"theory", th->name}, {"ok", report.ok()}, {"failures", failures}};
}

void model_encode(Run& run, const std::string& kind_name, const std::string& path) {
  const DataKind kind = data_kind(kind_name);
  if (!has_json_extension(path)) throw UsageError("model encode reads a JSON data file");
  const TaggedData d = load_input(run, kind, path);
  std::optional<models::PartialStructure> m;
  switch (kind) {
    case DataKind::Monoid:
      m = theories::encode(std::get<theories::FiniteMonoid>(d.value), theories::TheoryKind::Monoid);
      break;
    case DataKind::CMonoid:
      m = theories::encode(std::get<theories::FiniteMonoid>(d.value), theories::TheoryKind::CMonoid);
      break;
    case DataKind::Group: m = theories::encode(std::get<theories::FiniteGroup>(d.value)); break;
    case DataKind::Category: m = theories::encode(std::get<theories::FiniteCategory>(d.value)); break;
    case DataKind::StrMonCat:
    case DataKind::SymStrMonCat:
      m = theories::encode(std::get<theories::FiniteStrictMonCat>(d.value));
      break;
    case DataKind::Presheaf:
    case DataKind::MSet: m = theories::encode(std::get<theories::PresheafData>(d.value)); break;
    case DataKind::CrossedModule: throw UsageError("crossed modules have no model encoding");
  }
  const std::string text = models::print_model(*m);
  run.text << text;
  run.result["model"] = text;
}

// ---- nf ----------------------------------------------------------------------

DataKind engine_input_kind(nf::EngineKind k) {
  switch (k) {
    case nf::EngineKind::Monoid: return DataKind::Monoid;
    case nf::EngineKind::CMonoid: return DataKind::CMonoid;
    case nf::EngineKind::Group: return DataKind::Group;
    case nf::EngineKind::SmcObject:
    case nf::EngineKind::SmcArrow: return DataKind::StrMonCat;
    case nf::EngineKind::Presheaf: return DataKind::Presheaf;
  }
  return DataKind::Monoid;
}

std::string position_string(const std::vector<std::size_t>& pos) {
  if (pos.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < pos.size(); ++i) s += (i ? "." : "") + std::to_string(pos[i]);
  return s;
}

void nf_reduce(Run& run, const std::string& engine_name, const std::string& path,
               const std::string& term_text, bool trace, const std::string& strategy_name,
               const std::string& object) {
  const auto ek = nf::parse_engine_kind(engine_name);
  if (!ek) throw UsageError("unknown engine '" + engine_name + "'");
  const auto strategy = nf::parse_strategy(strategy_name);
  if (!strategy) throw UsageError("unknown strategy '" + strategy_name + "'");
  const TaggedData d = load_input(run, engine_input_kind(*ek), path);
  const auto engine =
      nf::make_engine(*ek, d, object.empty() ? std::nullopt : std::optional<std::string>(object));

  phl::Term t = [&] {
    try {
      return engine->parse(term_text);
    } catch (const Error& e) {
      throw UsageError(std::string("term: ") + e.what());
    }
  }();
  std::vector<nf::RewriteStep> steps;
  const phl::Term normal = engine->normalize(t, *strategy, trace ? &steps : nullptr);
  const auto nf = engine->read_off(normal);

  json jsteps = json::array();
  if (trace) {
    run.text << "input: " << engine->print(t) << "\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      run.text << std::setw(4) << i + 1 << ". " << s.rule << " at " << position_string(s.position)
               << ": " << engine->print(s.result) << "\n";
      jsteps.push_back({{"rule", s.rule}, {"position", s.position}, {"result", engine->print(s.result)}});
    }
  }
  if (nf) {
    run.text << engine->format(*nf) << "\n";
  } else {
    run.text << "undefined: " << engine->print(normal) << "\n";
  }
  run.result = {{"engine", std::string(nf::to_string(*ek))},
                {"strategy", std::string(nf::to_string(*strategy))},
                {"input", engine->print(t)},
                {"normal_term", engine->print(normal)},
                {"defined", nf.has_value()},
                {"normal_form", nf ? json(engine->format(*nf)) : json(nullptr)}};
  if (trace) run.result["trace"] = jsteps;
}

// ---- isotropy ------------------------------------------------------------------

json group_json(const iso::GroupTable& g) {
  json table = json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.size(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  return {{"order", g.size()},
          {"description", iso::describe_group(g)},
          {"elements", g.labels()},
          {"table", table}};
}

void print_group(std::ostream& out, const iso::GroupTable& g) {
  out << "group: " << iso::describe_group(g) << " (order " << g.size() << ")\n";
  out << "elements:\n";
  for (std::size_t a = 0; a < g.size(); ++a) out << "  g" << a << " = " << g.label(a) << "\n";
  out << "table:\n";
  const int w = static_cast<int>(std::to_string(g.size()).size()) + 2;
  out << std::string(static_cast<std::size_t>(w) + 2, ' ');
  for (std::size_t b = 0; b < g.size(); ++b) out << std::setw(w) << ("g" + std::to_string(b));
  out << "\n";
  for (std::size_t a = 0; a < g.size(); ++a) {
    out << "  " << std::setw(w) << ("g" + std::to_string(a));
    for (std::size_t b = 0; b < g.size(); ++b) out << std::setw(w) << ("g" + std::to_string(g.mul(a, b)));
    out << "\n";
  }
}

struct BruteOutcome {
  iso::IsotropyResult result;
  json doc;
};

BruteOutcome run_brute(const TaggedData& d, const iso::Bounds& bounds) {
  const auto engine = iso::make_isotropy_engine(d);
  BruteOutcome out{iso::brute_force_isotropy(*engine, bounds), {}};
  out.doc = {{"method", "brute"},
             {"bounds", {bounds.max_x, bounds.max_length}},
             {"candidates", out.result.candidates},
             {"escapes", out.result.escapes}};
  if (out.result.group) out.doc["group"] = group_json(*out.result.group);
  return out;
}

void print_escapes(std::ostream& out, const std::vector<std::string>& escapes) {
  out << "closure escapes the bounds (" << escapes.size() << " products), e.g.:\n";
  for (std::size_t i = 0; i < escapes.size() && i < 5; ++i) out << "  " << escapes[i] << "\n";
}

void isotropy_compute(Run& run, const std::string& method, const std::string& bounds_text,
                      const std::string& kind, const std::string& path) {
  const iso::Bounds bounds = parse_bounds(bounds_text);
  const TaggedData d = load_input(run, data_kind(kind), path);
  if (method == "closed") {
    const iso::GroupTable g = iso::closed_form_isotropy(d);
    run.text << "method: closed\n";
    print_group(run.text, g);
    run.result = {{"method", "closed"}, {"group", group_json(g)}};
    return;
  }
  BruteOutcome b = run_brute(d, bounds);
  run.text << "method: brute (bounds " << bounds.max_x << "," << bounds.max_length << ", "
           << b.result.candidates << " candidates)\n";
  if (b.result.group) {
    print_group(run.text, *b.result.group);
  } else {
    run.status = 1;
    print_escapes(run.text, b.result.escapes);
  }
  run.result = b.doc;
}

std::vector<std::size_t> order_profile(const iso::GroupTable& g) {
  std::vector<std::size_t> orders;
  for (std::size_t a = 0; a < g.size(); ++a) orders.push_back(g.order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

void isotropy_compare(Run& run, const std::string& bounds_text, const std::string& kind,
                      const std::string& path) {
  const iso::Bounds bounds = parse_bounds(bounds_text);
  const TaggedData d = load_input(run, data_kind(kind), path);
  const iso::GroupTable closed = iso::closed_form_isotropy(d);
  BruteOutcome b = run_brute(d, bounds);
  run.result = {{"closed", group_json(closed)}, {"brute", b.doc}};

  if (!b.result.group) {
    run.status = 1;
    run.text << "not comparable: brute-force set is not closed\n";
    print_escapes(run.text, b.result.escapes);
    run.result["isomorphic"] = false;
    return;
  }
  const iso::GroupTable& brute = *b.result.group;
  const auto iso_map = iso::group_isomorphism(brute, closed);
  run.result["isomorphic"] = iso_map.has_value();
  if (iso_map) {
    run.text << "isomorphic: " << iso::describe_group(closed) << "\n";
    json mapping = json::array();
    for (std::size_t a = 0; a < brute.size(); ++a) {
      const std::size_t to = (*iso_map)[a];
      run.text << "  " << brute.label(a) << "  ->  " << closed.label(to) << "\n";
      mapping.push_back({brute.label(a), closed.label(to)});
    }
    run.result["isomorphism"] = mapping;
    return;
  }
  run.status = 1;
  const auto pb = order_profile(brute);
  const auto pc = order_profile(closed);
  run.text << "not isomorphic\n"
           << "  brute:  " << iso::describe_group(brute) << ", order " << brute.size() << "\n"
           << "  closed: " << iso::describe_group(closed) << ", order " << closed.size() << "\n";
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  run.text << "  element orders: brute [" << list(pb) << "], closed [" << list(pc) << "]\n";
  run.result["certificate"] = {{"brute_orders", pb}, {"closed_orders", pc}};
}

// ---- suite ---------------------------------------------------------------------

void suite_run(Run& run, std::uint64_t seed, std::size_t count) {
  using namespace theories;
  std::vector<suite::PropertyResult> results;
  const FiniteMonoid t2 = full_transformation2();
  const FiniteGroup z3 = cyclic_group(3);
  const FiniteGroup s3 = symmetric_group3();
  const FiniteStrictMonCat nabla = delta_nabla(z3.monoid, Variant::Indiscrete);
  const FiniteStrictMonCat delta = delta_nabla(t2, Variant::Discrete);

  std::uint64_t s = seed;
  results.push_back(suite::dual_strategy(*nf::make_engine(nf::EngineKind::Monoid, {DataKind::Monoid, t2}), s++, count));
  results.push_back(suite::dual_strategy(*nf::make_engine(nf::EngineKind::CMonoid, {DataKind::CMonoid, z3.monoid}), s++, count));
  results.push_back(suite::dual_strategy(*nf::make_engine(nf::EngineKind::Group, {DataKind::Group, s3}), s++, count));
  results.push_back(suite::dual_strategy(*nf::make_engine(nf::EngineKind::SmcObject, {DataKind::StrMonCat, nabla}), s++, count));
  results.push_back(suite::dual_strategy(*nf::make_engine(nf::EngineKind::SmcArrow, {DataKind::StrMonCat, nabla}), s++, count));
  results.push_back(suite::monoid_subst_laws(t2, 2));
  results.push_back(suite::smc_axioms(nabla, 1));
  results.push_back(suite::arr_preservation(delta, 3));
  PresheafData p{"Z3-set", classifying_category(z3.monoid), {{"0", "1", "2", "*"}}, {}};
  for (Elem g = 0; g < 3; ++g) {
    p.maps.push_back({static_cast<Elem>(g % 3), static_cast<Elem>((1 + g) % 3),
                      static_cast<Elem>((2 + g) % 3), 3});
  }
  results.push_back(suite::presheaf_separation(p));
  results.push_back(suite::iso_reflection(s++, count));

  json list = json::array();
  for (const auto& r : results) {
    if (!r.ok()) run.status = 1;
    run.text << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked";
    if (!r.ok()) run.text << ", " << r.failures << " failed: " << r.first_failure;
    run.text << ")\n";
    list.push_back({{"name", r.name}, {"checked", r.checked}, {"failures", r.failures},
                    {"first_failure", r.first_failure}});
  }
  run.result = {{"seed", seed}, {"count", count}, {"properties", list}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isolab: partial Horn theories, normal forms and covariant isotropy"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Run run;
  std::function<void()> action;

  auto* theory = app.add_subcommand("theory", "Emit or check theory files")->require_subcommand(1);
  std::string kind, path, data, term, method = "brute", bounds = "2,7", strategy = "leftmost-innermost",
                                     object;
  bool trace = false;
  std::uint64_t seed = 1;
  std::size_t count = 1000;

  auto* emit = theory->add_subcommand("emit", "Print the DSL source of a built-in theory");
  emit->add_option("kind", kind, "monoid, cmonoid, group, category, strmoncat, presheaf")->required();
  emit->add_option("data", data, "Data file (presheaf and mset only)");
  emit->callback([&] { action = [&] { theory_emit(run, kind, data); }; run.command = "theory emit"; });

  auto* tcheck = theory->add_subcommand("check", "Parse, validate and round-trip a theory file");
  tcheck->add_option("file", path)->required();
  tcheck->callback([&] { action = [&] { theory_check(run, path); }; run.command = "theory check"; });

  auto* model = app.add_subcommand("model", "Check or encode models")->require_subcommand(1);
  auto* mcheck = model->add_subcommand("check", "Check a model against every axiom");
  mcheck->add_option("theory", kind, "Built-in theory kind or a theory file")->required();
  mcheck->add_option("model", path)->required();
  mcheck->callback([&] { action = [&] { model_check(run, kind, path); }; run.command = "model check"; });

  auto* encode = model->add_subcommand("encode", "Encode a JSON data file as a model");
  encode->add_option("kind", kind)->required();
  encode->add_option("data", path)->required();
  encode->callback([&] { action = [&] { model_encode(run, kind, path); }; run.command = "model encode"; });

  auto* nfc = app.add_subcommand("nf", "Normal forms")->require_subcommand(1);
  auto* reduce = nfc->add_subcommand("reduce", "Normalize a term of M<x>");
  reduce->add_option("engine", kind, "monoid, cmonoid, group, smc-xo, smc-xa, presheaf")->required();
  reduce->add_option("input", path, "Model or JSON data file")->required();
  reduce->add_option("term", term)->required();
  reduce->add_flag("--trace", trace, "Print every rewrite step");
  reduce->add_option("--strategy", strategy, "leftmost-innermost or rightmost-outermost");
  reduce->add_option("--object", object, "Object receiving the indeterminate (presheaf)");
  reduce->callback([&] {
    action = [&] { nf_reduce(run, kind, path, term, trace, strategy, object); };
    run.command = "nf reduce";
  });

  auto* isotropy = app.add_subcommand("isotropy", "Covariant isotropy groups")->require_subcommand(1);
  auto* compute = isotropy->add_subcommand("compute", "Compute the isotropy group");
  compute->add_option("--method", method)->check(CLI::IsMember({"closed", "brute"}));
  compute->add_option("--bounds", bounds, "x-occurrences,length");
  compute->add_option("kind", kind)->required();
  compute->add_option("input", path)->required();
  compute->callback([&] {
    action = [&] { isotropy_compute(run, method, bounds, kind, path); };
    run.command = "isotropy compute";
  });

  auto* compare = isotropy->add_subcommand("compare", "Compare brute force with the closed form");
  compare->add_option("--bounds", bounds, "x-occurrences,length");
  compare->add_option("kind", kind)->required();
  compare->add_option("input", path)->required();
  compare->callback([&] {
    action = [&] { isotropy_compare(run, bounds, kind, path); };
    run.command = "isotropy compare";
  });

  auto* suitec = app.add_subcommand("suite", "Randomized property suites")->require_subcommand(1);
  auto* srun = suitec->add_subcommand("run", "Run every property on built-in fixtures");
  srun->add_option("--seed", seed);
  srun->add_option("--count", count, "Random instances per randomized property");
  srun->callback([&] { action = [&] { suite_run(run, seed, count); }; run.command = "suite run"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool as_json = format == "json";
  try {
    action();
  } catch (const Error& e) {
    std::cerr << "isolab: " << e.what() << "\n";
    if (as_json) {
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"command", run.command},
                        {"inputs", run.inputs},
                        {"status", "error"},
                        {"error", e.what()}}
                       .dump(2)
                << "\n";
    }
    return 2;
  }
  run.emit(as_json);
  return run.status;
}
