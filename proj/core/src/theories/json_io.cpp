#include "isolab/theories/json_io.hpp"

#include <array>
#include <fstream>

#include <nlohmann/json.hpp>

#include "isolab/error.hpp"
#include "isolab/theories/constructions.hpp"

namespace isolab::theories {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<DataKind, std::string_view>, 9> kKindNames{{
    {DataKind::Monoid, "monoid"},
    {DataKind::CMonoid, "cmonoid"},
    {DataKind::Group, "group"},
    {DataKind::Category, "category"},
    {DataKind::StrMonCat, "strmoncat"},
    {DataKind::SymStrMonCat, "ssmc"},
    {DataKind::Presheaf, "presheaf"},
    {DataKind::MSet, "mset"},
    {DataKind::CrossedModule, "crossed_module"},
}};

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg, 1, 1); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    bad(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string str(const json& v, const char* what) {
  if (!v.is_string()) bad(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> str_list(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const json& x : v) out.push_back(str(x, what));
  return out;
}

std::size_t count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Elem index_of(const std::vector<std::string>& ids, const std::string& id,
              const char* what) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<Elem>(i);
  }
  bad(std::string("unknown ") + what + " '" + id + "'");
}

// A square table given as rows of element ids, in element order.
std::vector<Elem> square(const json& rows, const std::vector<std::string>& ids,
                         const char* what) {
  const std::size_t n = ids.size();
  if (!rows.is_array() || rows.size() != n) bad(std::string(what) + " must have one row per element");
  std::vector<Elem> out;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n) bad(std::string(what) + " rows must be full");
    for (const json& cell : row) out.push_back(index_of(ids, str(cell, what), "element"));
  }
  return out;
}

std::string name_of(const json& doc, std::string fallback) {
  return doc.contains("name") ? str(doc.at("name"), "name") : std::move(fallback);
}

}  // namespace

std::string_view to_string(DataKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<DataKind> parse_data_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  if (name == "smc") return DataKind::StrMonCat;
  return std::nullopt;
}

FiniteMonoid read_monoid(const json& doc) {
  if (doc.contains("construction")) {
    const std::string c = str(doc.at("construction"), "construction");
    FiniteMonoid m;
    if (c == "cyclic") {
      m = cyclic_group(count(field(doc, "order"), "order")).monoid;
    } else if (c == "symmetric3") {
      m = symmetric_group3().monoid;
    } else if (c == "semilattice2") {
      m = semilattice2();
    } else if (c == "transformation2") {
      m = full_transformation2();
    } else if (c == "with_zero") {
      m = with_zero(read_monoid(field(doc, "of")));
    } else if (c == "product") {
      const json& fs = field(doc, "factors");
      if (!fs.is_array() || fs.empty()) bad("product needs a non-empty 'factors' array");
      m = read_monoid(fs[0]);
      for (std::size_t i = 1; i < fs.size(); ++i) m = product(m, read_monoid(fs[i]));
    } else if (c == "enumerated") {
      auto all = enumerate_monoids(count(field(doc, "order"), "order"));
      const std::size_t i = count(field(doc, "index"), "index");
      if (i >= all.size()) bad("enumerated monoid index out of range");
      m = all[i];
    } else {
      bad("unknown monoid construction '" + c + "'");
    }
    m.name = name_of(doc, m.name);
    return m;
  }
  FiniteMonoid m;
  m.name = name_of(doc, "M");
  m.elements = str_list(field(doc, "elements"), "elements");
  m.unit = index_of(m.elements, str(field(doc, "unit"), "unit"), "element");
  m.table = square(field(doc, "table"), m.elements, "table");
  m.validate();
  return m;
}

FiniteGroup read_group(const json& doc) { return FiniteGroup::from_monoid(read_monoid(doc)); }

FiniteCategory read_category(const json& doc) {
  if (doc.contains("construction")) {
    const std::string c = str(doc.at("construction"), "construction");
    FiniteCategory cat;
    if (c == "classifying") {
      cat = classifying_category(read_monoid(field(doc, "monoid")));
    } else if (c == "chain") {
      cat = chain(count(field(doc, "length"), "length"));
    } else if (c == "parallel_pair") {
      cat = parallel_pair();
    } else {
      bad("unknown category construction '" + c + "'");
    }
    cat.name = name_of(doc, cat.name);
    return cat;
  }
  FiniteCategory cat;
  cat.name = name_of(doc, "J");
  cat.objects = str_list(field(doc, "objects"), "objects");
  const json& arrows = field(doc, "arrows");
  if (!arrows.is_array()) bad("'arrows' must be an array");
  for (const json& a : arrows) {
    cat.arrows.push_back(str(field(a, "name"), "arrow name"));
    cat.dom.push_back(index_of(cat.objects, str(field(a, "dom"), "dom"), "object"));
    cat.cod.push_back(index_of(cat.objects, str(field(a, "cod"), "cod"), "object"));
  }
  const json& ids = field(doc, "identities");
  for (const std::string& o : cat.objects) {
    if (!ids.contains(o)) bad("no identity given for object '" + o + "'");
    cat.id.push_back(index_of(cat.arrows, str(ids.at(o), "identity"), "arrow"));
  }
  const std::size_t na = cat.arrows.size();
  cat.comp.assign(na * na, kUndefined);
  // Composites with an identity are implied; the rest are listed as
  // [g, f, g∘f] triples.
  for (std::size_t f = 0; f < na; ++f) {
    const Elem fe = static_cast<Elem>(f);
    const auto s = static_cast<std::size_t>(cat.dom[f]);
    const auto t = static_cast<std::size_t>(cat.cod[f]);
    if (cat.id[s] >= 0) cat.comp[f * na + static_cast<std::size_t>(cat.id[s])] = fe;
    if (cat.id[t] >= 0) cat.comp[static_cast<std::size_t>(cat.id[t]) * na + f] = fe;
  }
  if (doc.contains("composition")) {
    for (const json& row : doc.at("composition")) {
      if (!row.is_array() || row.size() != 3) bad("composition rows are [g, f, g∘f]");
      const Elem g = index_of(cat.arrows, str(row[0], "arrow"), "arrow");
      const Elem f = index_of(cat.arrows, str(row[1], "arrow"), "arrow");
      cat.comp[static_cast<std::size_t>(g) * na + static_cast<std::size_t>(f)] =
          index_of(cat.arrows, str(row[2], "arrow"), "arrow");
    }
  }
  cat.validate();
  return cat;
}

FiniteStrictMonCat read_strmoncat(const json& doc) {
  if (doc.contains("construction")) {
    const std::string c = str(doc.at("construction"), "construction");
    FiniteStrictMonCat smc;
    if (c == "delta" || c == "nabla") {
      smc = delta_nabla(read_monoid(field(doc, "monoid")),
                        c == "delta" ? Variant::Discrete : Variant::Indiscrete);
    } else if (c == "thin") {
      FiniteMonoid m = read_monoid(field(doc, "monoid"));
      std::vector<Elem> sub;
      for (const std::string& id : str_list(field(doc, "submonoid"), "submonoid")) {
        sub.push_back(index_of(m.elements, id, "element"));
      }
      smc = thin_monoidal(m, sub, "thin(" + m.name + ")");
    } else if (c == "one_object") {
      FiniteMonoid m = read_monoid(field(doc, "monoid"));
      smc = one_object_monoidal(m, "B(" + m.name + ")");
    } else {
      bad("unknown strict monoidal construction '" + c + "'");
    }
    smc.cat.name = name_of(doc, smc.cat.name);
    return smc;
  }
  FiniteStrictMonCat smc;
  smc.cat = read_category(doc);
  smc.tensor_ob = square(field(doc, "tensor_objects"), smc.cat.objects, "tensor_objects");
  smc.tensor_arr = square(field(doc, "tensor_arrows"), smc.cat.arrows, "tensor_arrows");
  smc.unit_ob = index_of(smc.cat.objects, str(field(doc, "unit_object"), "unit_object"), "object");
  smc.unit_arr = index_of(smc.cat.arrows, str(field(doc, "unit_arrow"), "unit_arrow"), "arrow");
  smc.validate();
  return smc;
}

PresheafData read_presheaf(const json& doc) {
  PresheafData p;
  p.name = name_of(doc, "F");
  p.category = read_category(field(doc, "category"));
  const FiniteCategory& j = p.category;
  const json& sets = field(doc, "sets");
  for (const std::string& o : j.objects) {
    p.sets.push_back(sets.contains(o) ? str_list(sets.at(o), "set") : std::vector<std::string>{});
  }
  const json maps = doc.contains("maps") ? doc.at("maps") : json::object();
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    const auto& src = p.sets[static_cast<std::size_t>(j.dom[f])];
    const auto& dst = p.sets[static_cast<std::size_t>(j.cod[f])];
    std::vector<Elem> table;
    if (maps.contains(j.arrows[f])) {
      const json& m = maps.at(j.arrows[f]);
      for (const std::string& x : src) {
        if (!m.contains(x)) bad("map for '" + j.arrows[f] + "' misses '" + x + "'");
        table.push_back(index_of(dst, str(m.at(x), "image"), "element"));
      }
    } else if (j.is_identity(static_cast<Elem>(f))) {
      for (std::size_t x = 0; x < src.size(); ++x) table.push_back(static_cast<Elem>(x));
    } else {
      bad("no map given for arrow '" + j.arrows[f] + "'");
    }
    p.maps.push_back(std::move(table));
  }
  p.validate();
  return p;
}

namespace {

// An M-set: a presheaf over BM given by the monoid and the action.
PresheafData read_mset(const json& doc) {
  FiniteMonoid m = read_monoid(field(doc, "monoid"));
  PresheafData p;
  p.name = name_of(doc, "X");
  p.category = classifying_category(m);
  p.sets = {str_list(field(doc, "set"), "set")};
  const json& act = field(doc, "action");
  for (std::size_t a = 0; a < m.size(); ++a) {
    std::vector<Elem> table;
    if (act.contains(m.elements[a])) {
      for (const std::string& x : p.sets[0]) {
        const json& row = act.at(m.elements[a]);
        if (!row.contains(x)) bad("action of '" + m.elements[a] + "' misses '" + x + "'");
        table.push_back(index_of(p.sets[0], str(row.at(x), "image"), "element"));
      }
    } else if (static_cast<Elem>(a) == m.unit) {
      for (std::size_t x = 0; x < p.sets[0].size(); ++x) table.push_back(static_cast<Elem>(x));
    } else {
      bad("no action given for '" + m.elements[a] + "'");
    }
    p.maps.push_back(std::move(table));
  }
  p.validate();
  return p;
}

}  // namespace

CrossedModule read_crossed_module(const json& doc) {
  CrossedModule x;
  x.name = name_of(doc, "X");
  x.a = read_group(field(doc, "A"));
  x.g = read_group(field(doc, "G"));
  const auto& an = x.a.monoid.elements;
  const auto& gn = x.g.monoid.elements;
  const json& bd = field(doc, "boundary");
  for (const std::string& a : an) {
    if (!bd.contains(a)) bad("boundary misses '" + a + "'");
    x.boundary.push_back(index_of(gn, str(bd.at(a), "boundary"), "element of G"));
  }
  const json act = doc.contains("action") ? doc.at("action") : json::object();
  for (std::size_t g = 0; g < gn.size(); ++g) {
    for (std::size_t a = 0; a < an.size(); ++a) {
      if (act.contains(gn[g])) {
        const json& row = act.at(gn[g]);
        if (!row.contains(an[a])) bad("action of '" + gn[g] + "' misses '" + an[a] + "'");
        x.action.push_back(index_of(an, str(row.at(an[a]), "image"), "element of A"));
      } else {
        x.action.push_back(static_cast<Elem>(a));  // trivial unless given
      }
    }
  }
  x.validate();
  return x;
}

TaggedData read_data(const json& doc) {
  const std::string kname = str(field(doc, "kind"), "kind");
  auto kind = parse_data_kind(kname);
  if (!kind) bad("unknown kind '" + kname + "'");
  switch (*kind) {
    case DataKind::Monoid:
      return {*kind, read_monoid(doc)};
    case DataKind::CMonoid: {
      FiniteMonoid m = read_monoid(doc);
      if (!m.commutative()) throw InvariantViolation("monoid '" + m.name + "' is not commutative");
      return {*kind, std::move(m)};
    }
    case DataKind::Group:
      return {*kind, read_group(doc)};
    case DataKind::Category:
      return {*kind, read_category(doc)};
    case DataKind::StrMonCat:
      return {*kind, read_strmoncat(doc)};
    case DataKind::SymStrMonCat: {
      FiniteStrictMonCat c = read_strmoncat(doc);
      if (!c.commutative()) {
        throw InvariantViolation("'" + c.name() + "' does not have a commutative tensor");
      }
      return {*kind, std::move(c)};
    }
    case DataKind::Presheaf:
      return {*kind, read_presheaf(doc)};
    case DataKind::MSet:
      return {*kind, read_mset(doc)};
    case DataKind::CrossedModule:
      return {*kind, read_crossed_module(doc)};
  }
  bad("unknown kind");
}

TaggedData load_data_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  try {
    return read_data(doc);
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + (std::string(e.what()).substr(4)));
  }
}

json to_json(const FiniteMonoid& m) {
  json rows = json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.size(); ++b) {
      row.push_back(m.elements[static_cast<std::size_t>(
          m.mul(static_cast<Elem>(a), static_cast<Elem>(b)))]);
    }
    rows.push_back(std::move(row));
  }
  return {{"name", m.name},
          {"elements", m.elements},
          {"unit", m.elements[static_cast<std::size_t>(m.unit)]},
          {"table", std::move(rows)}};
}

json to_json(const FiniteCategory& c) {
  json arrows = json::array();
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    arrows.push_back({{"name", c.arrows[f]},
                      {"dom", c.objects[static_cast<std::size_t>(c.dom[f])]},
                      {"cod", c.objects[static_cast<std::size_t>(c.cod[f])]}});
  }
  json ids = json::object();
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    ids[c.objects[i]] = c.arrows[static_cast<std::size_t>(c.id[i])];
  }
  json comp = json::array();
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    for (std::size_t f = 0; f < c.arrow_count(); ++f) {
      const Elem gf = c.compose(static_cast<Elem>(g), static_cast<Elem>(f));
      if (gf == kUndefined || c.is_identity(static_cast<Elem>(g)) ||
          c.is_identity(static_cast<Elem>(f))) {
        continue;
      }
      comp.push_back({c.arrows[g], c.arrows[f], c.arrows[static_cast<std::size_t>(gf)]});
    }
  }
  return {{"name", c.name},         {"objects", c.objects},
          {"arrows", std::move(arrows)}, {"identities", std::move(ids)},
          {"composition", std::move(comp)}};
}

json to_json(const PresheafData& p) {
  const FiniteCategory& j = p.category;
  json sets = json::object();
  for (std::size_t i = 0; i < j.object_count(); ++i) sets[j.objects[i]] = p.sets[i];
  json maps = json::object();
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    json m = json::object();
    const auto& src = p.sets[static_cast<std::size_t>(j.dom[f])];
    const auto& dst = p.sets[static_cast<std::size_t>(j.cod[f])];
    for (std::size_t x = 0; x < src.size(); ++x) {
      m[src[x]] = dst[static_cast<std::size_t>(p.maps[f][x])];
    }
    maps[j.arrows[f]] = std::move(m);
  }
  return {{"kind", "presheaf"},
          {"name", p.name},
          {"category", to_json(j)},
          {"sets", std::move(sets)},
          {"maps", std::move(maps)}};
}

}  // namespace isolab::theories
