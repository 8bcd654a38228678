#include "kanact/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "kanact/error.hpp"

namespace kanact {

namespace fs = std::filesystem;

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::SchemaError, where + ": missing field '" + key + "'");
  }
  return *it;
}

template <class T>
T get(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, where + ": " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  return get<T>(*it, where + "." + key);
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      throw Error(ErrorCode::SchemaError, where + ": unknown field '" + k + "'");
    }
  }
}

// A string is a path relative to base; an object is used as is.
std::pair<Json, fs::path> load_ref(const Json& ref, const fs::path& base, const std::string& where) {
  if (ref.is_string()) {
    const fs::path p = base / ref.get<std::string>();
    return {read_json_file(p), p.parent_path()};
  }
  if (ref.is_object()) return {ref, base};
  throw Error(ErrorCode::SchemaError, where + ": expected a file name or an object");
}

Index element_index(const FiniteGroup& g, const Json& name, const std::string& where) {
  const auto s = get<std::string>(name, where);
  const auto found = g.find(s);
  if (!found) throw Error(ErrorCode::SchemaError, where + ": no element '" + s + "' in " + g.name());
  return *found;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line and column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" +
                                           std::to_string(column) + ": " + e.what());
  }
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << text;
}

Json complex_to_json(const SSetPresentation& x) {
  Json j;
  j["name"] = x.name();
  j["max_dim"] = x.max_dim();
  Json gens = Json::object();
  Json faces = Json::object();
  for (int n = 0; n <= x.max_dim(); ++n) {
    gens[std::to_string(n)] = x.generator_names(n);
    if (n == 0) continue;
    for (Index g = 0; g < x.generator_count(n); ++g) {
      Json list = Json::array();
      for (const auto& f : x.faces(n, g)) {
        list.push_back(Json{{"degeneracies", f.degeneracies()},
                            {"generator", x.generator_name(f.generator_dim(), f.generator)}});
      }
      faces[x.generator_name(n, g)] = std::move(list);
    }
  }
  j["generators"] = std::move(gens);
  j["faces"] = std::move(faces);
  return j;
}

SSetPresentation complex_from_json(const Json& j, bool check_identities) {
  const std::string where = "complex";
  only_keys(j, {"name", "max_dim", "generators", "faces"}, where);
  const auto name = get<std::string>(field(j, "name", where), where + ".name");
  const int max_dim = get<int>(field(j, "max_dim", where), where + ".max_dim");
  if (max_dim < 0) throw Error(ErrorCode::SchemaError, where + ".max_dim: must be >= 0");
  SSetPresentation x(name, max_dim);

  const auto& gens = field(j, "generators", where);
  if (!gens.is_object()) throw Error(ErrorCode::SchemaError, where + ".generators: expected an object");
  for (const auto& [key, list] : gens.items()) {
    int n = -1;
    try {
      std::size_t used = 0;
      n = std::stoi(key, &used);
      if (used != key.size()) n = -1;
    } catch (const std::exception&) {
    }
    if (n < 0 || n > max_dim) {
      throw Error(ErrorCode::SchemaError, where + ".generators: bad dimension '" + key + "'");
    }
  }
  for (int n = 0; n <= max_dim; ++n) {
    const auto it = gens.find(std::to_string(n));
    if (it == gens.end()) continue;
    const auto names = get<std::vector<std::string>>(*it, where + ".generators." + std::to_string(n));
    for (const auto& s : names) x.add_generator(n, s);
  }

  const auto& faces = field(j, "faces", where);
  if (!faces.is_object()) throw Error(ErrorCode::SchemaError, where + ".faces: expected an object");
  for (const auto& [key, list] : faces.items()) {
    const auto id = x.find(key);
    const std::string at = where + ".faces." + key;
    if (!id) throw Error(ErrorCode::SchemaError, at + ": unknown generator");
    if (id->dim == 0) throw Error(ErrorCode::SchemaError, at + ": vertices have no faces");
    if (!list.is_array()) throw Error(ErrorCode::SchemaError, at + ": expected a list");
    std::vector<SimplexRef> refs;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string fat = at + "[" + std::to_string(i) + "]";
      const auto& entry = list[i];
      only_keys(entry, {"degeneracies", "generator"}, fat);
      const auto degs = get_or<std::vector<int>>(entry, "degeneracies", {}, fat);
      const auto target = get<std::string>(field(entry, "generator", fat), fat + ".generator");
      const auto tid = x.find(target);
      if (!tid) throw Error(ErrorCode::SchemaError, fat + ": unknown generator '" + target + "'");
      try {
        refs.push_back(SimplexRef::from_degeneracies(degs, tid->index, tid->dim));
      } catch (const Error& e) {
        throw Error(ErrorCode::SchemaError, fat + ": " + e.what());
      }
    }
    try {
      x.set_faces(id->dim, id->index, std::move(refs));
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaError, at + ": " + e.what());
    }
  }
  for (int n = 1; n <= max_dim; ++n) {
    for (Index g = 0; g < x.generator_count(n); ++g) {
      if (!x.has_faces(n, g)) {
        throw Error(ErrorCode::SchemaError,
                    where + ".faces: missing entry for '" + x.generator_name(n, g) + "'");
      }
    }
  }
  if (check_identities) {
    const auto v = validate(x);
    if (!v.structural.empty()) throw Error(ErrorCode::InvariantViolation, v.structural.front());
    if (!v.identities.empty()) {
      throw Error(ErrorCode::InvariantViolation, describe(x, v.identities.front()));
    }
  }
  return x;
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"name", g.name()}, {"elements", g.element_names()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const Json& j) {
  const std::string where = "group";
  only_keys(j, {"name", "elements", "table"}, where);
  auto elements = get<std::vector<std::string>>(field(j, "elements", where), where + ".elements");
  auto table = get<std::vector<std::vector<Index>>>(field(j, "table", where), where + ".table");
  const auto name = get_or<std::string>(j, "name", "G", where);
  if (table.size() != elements.size()) {
    throw Error(ErrorCode::SchemaError, where + ".table: expected " +
                                            std::to_string(elements.size()) + " rows");
  }
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table[r].size() != elements.size()) {
      throw Error(ErrorCode::SchemaError, where + ".table[" + std::to_string(r) + "]: wrong length");
    }
  }
  return FiniteGroup(name, std::move(elements), std::move(table));
}

FiniteGroup resolve_group(const Json& ref, const fs::path& base) {
  if (ref.is_string()) {
    const auto s = ref.get<std::string>();
    if (s.size() > 5 && s.ends_with(".json")) return group_from_json(read_json_file(base / s));
    return group_from_spec(s);
  }
  if (ref.is_object()) return group_from_json(ref);
  throw Error(ErrorCode::SchemaError, "group: expected a file name, a spec or an object");
}

Json quotient_to_json(const QuotientMap& q, const SSetPresentation& k, const Json& group_ref) {
  Json images = Json::object();
  for (Index e = 0; e < k.generator_count(1); ++e) {
    images[k.generator_name(1, e)] = q.group.element_name(q.images[e]);
  }
  return Json{{"group", group_ref}, {"images", images}};
}

QuotientMap quotient_from_json(const Json& j, const SSetPresentation& k, const fs::path& base) {
  const std::string where = "quotient";
  only_keys(j, {"group", "images"}, where);
  auto q = resolve_group(field(j, "group", where), base);
  const auto& images = field(j, "images", where);
  if (!images.is_object()) throw Error(ErrorCode::SchemaError, where + ".images: expected an object");
  if (k.max_dim() < 1) throw Error(ErrorCode::SchemaError, where + ": complex has no edges");
  std::vector<Index> values(k.generator_count(1), 0);
  std::vector<bool> seen(values.size(), false);
  for (const auto& [edge, target] : images.items()) {
    const auto id = k.find(edge);
    if (!id || id->dim != 1) {
      throw Error(ErrorCode::SchemaError, where + ".images: '" + edge + "' is not an edge");
    }
    values[id->index] = element_index(q, target, where + ".images." + edge);
    seen[id->index] = true;
  }
  for (Index e = 0; e < k.generator_count(1); ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::SchemaError, where + ".images: missing '" + k.generator_name(1, e) + "'");
    }
  }
  return make_quotient(k, std::move(q), std::move(values));
}

Json action_to_json(const SimplicialAction& a, const SSetPresentation& x, const Json& group_ref) {
  Json maps = Json::object();
  for (Index g = 0; g < a.group.order(); ++g) {
    Json per_dim = Json::object();
    for (int n = 0; n <= x.max_dim(); ++n) {
      std::vector<std::string> names;
      for (Index s : a.maps[g].generators[n]) names.push_back(x.generator_name(n, s));
      per_dim[std::to_string(n)] = names;
    }
    maps[a.group.element_name(g)] = std::move(per_dim);
  }
  return Json{{"group", group_ref}, {"maps", maps}};
}

SimplicialAction action_from_json(const Json& j, const SSetPresentation& x, const fs::path& base) {
  const std::string where = "action";
  only_keys(j, {"group", "maps"}, where);
  SimplicialAction a{resolve_group(field(j, "group", where), base), {}};
  const auto& maps = field(j, "maps", where);
  for (Index g = 0; g < a.group.order(); ++g) {
    const auto& gname = a.group.element_name(g);
    const auto& per_dim = field(maps, gname.c_str(), where + ".maps");
    SimplicialMap f;
    for (int n = 0; n <= x.max_dim(); ++n) {
      const std::string at = where + ".maps." + gname + "." + std::to_string(n);
      const auto names = get<std::vector<std::string>>(field(per_dim, std::to_string(n).c_str(), at), at);
      if (names.size() != static_cast<std::size_t>(x.generator_count(n))) {
        throw Error(ErrorCode::SchemaError, at + ": expected " + std::to_string(x.generator_count(n)) +
                                                " images");
      }
      std::vector<Index> images;
      for (const auto& s : names) {
        const auto id = x.find(s);
        if (!id || id->dim != n) {
          throw Error(ErrorCode::SchemaError, at + ": '" + s + "' is not a generator of dimension " +
                                                  std::to_string(n));
        }
        images.push_back(id->index);
      }
      f.generators.push_back(std::move(images));
    }
    a.maps.push_back(std::move(f));
  }
  if (maps.size() != static_cast<std::size_t>(a.group.order())) {
    throw Error(ErrorCode::SchemaError, where + ".maps: expected one entry per group element");
  }
  verify_action(x, a);
  return a;
}

Json phi_to_json(const PhiData& p, const FiniteGroup& q, const Json& group_ref) {
  Json maps = Json::object();
  for (Index g = 0; g < p.group.order(); ++g) {
    std::vector<std::string> names;
    for (Index a : p.phi.phi[g]) names.push_back(q.element_name(a));
    maps[p.group.element_name(g)] = names;
  }
  return Json{{"group", group_ref}, {"maps", maps}};
}

PhiData phi_from_json(const Json& j, const FiniteGroup& q, const fs::path& base) {
  const std::string where = "phi";
  only_keys(j, {"group", "maps"}, where);
  PhiData out{resolve_group(field(j, "group", where), base), {}};
  const auto& maps = field(j, "maps", where);
  if (maps.size() != static_cast<std::size_t>(out.group.order())) {
    throw Error(ErrorCode::SchemaError, where + ".maps: expected one entry per group element");
  }
  for (Index g = 0; g < out.group.order(); ++g) {
    const auto& gname = out.group.element_name(g);
    const std::string at = where + ".maps." + gname;
    const auto names = get<std::vector<std::string>>(field(maps, gname.c_str(), where + ".maps"), at);
    if (names.size() != static_cast<std::size_t>(q.order())) {
      throw Error(ErrorCode::SchemaError, at + ": expected " + std::to_string(q.order()) + " images");
    }
    Permutation p;
    for (const auto& s : names) p.push_back(element_index(q, Json(s), at));
    out.phi.phi.push_back(std::move(p));
  }
  verify_automorphism_action(q, out.group, out.phi);
  return out;
}

TheoremCase load_case(const fs::path& path) {
  const auto j = read_json_file(path);
  const fs::path base = path.parent_path();
  const std::string where = "case";
  only_keys(j, {"name", "complex", "truncation", "quotient", "action", "space", "action_on", "p",
                "check_depth", "theorems", "phi"},
            where);
  TheoremCase c;
  c.name = get_or<std::string>(j, "name", path.stem().string(), where);

  const auto [cj, cbase] = load_ref(field(j, "complex", where), base, where + ".complex");
  auto complex = complex_from_json(cj);
  const int truncation = get_or<int>(j, "truncation", complex.max_dim(), where);
  if (truncation < 1 || truncation > complex.max_dim()) {
    throw Error(ErrorCode::SchemaError, where + ".truncation: must be in 1.." +
                                            std::to_string(complex.max_dim()));
  }
  c.complex = truncation == complex.max_dim() ? std::move(complex) : truncate(complex, truncation);
  c.p = get_or<int>(j, "p", 2, where);
  if (!is_prime(c.p)) throw Error(ErrorCode::NotPrime, std::to_string(c.p) + " is not prime");
  c.check_depth = get_or<int>(j, "check_depth", 2, where);
  if (c.check_depth < 0 || c.check_depth + 1 > truncation) {
    throw Error(ErrorCode::InvariantViolation, "check_depth + 1 <= truncation");
  }
  c.theorems = get<std::vector<std::string>>(field(j, "theorems", where), where + ".theorems");

  const auto space = get_or<std::string>(j, "space", "base", where);
  if (space != "base" && space != "cover") {
    throw Error(ErrorCode::SchemaError, where + ".space: expected 'base' or 'cover'");
  }
  c.space = space == "cover" ? CaseSpace::cover : CaseSpace::base;
  const auto action_on = get_or<std::string>(j, "action_on", "base", where);
  if (action_on != "base" && action_on != "space") {
    throw Error(ErrorCode::SchemaError, where + ".action_on: expected 'base' or 'space'");
  }
  c.action_on_space = action_on == "space";

  const auto [qj, qbase] = load_ref(field(j, "quotient", where), base, where + ".quotient");
  c.quotient = quotient_from_json(qj, c.complex, qbase);

  const auto [aj, abase] = load_ref(field(j, "action", where), base, where + ".action");
  if (c.action_on_space && c.space == CaseSpace::cover) {
    c.action = action_from_json(aj, build_cover(c.complex, c.quotient).total, abase);
  } else {
    c.action = action_from_json(aj, c.complex, abase);
  }

  if (j.contains("phi")) {
    const auto [pj, pbase] = load_ref(j.at("phi"), base, where + ".phi");
    auto p = phi_from_json(pj, c.quotient.group, pbase);
    c.phi_group = std::move(p.group);
    c.phi = std::move(p.phi);
  }
  return c;
}

Json homology_to_json(const HomologyResult& h) {
  Json degrees = Json::array();
  for (std::size_t i = 0; i < h.degrees.size(); ++i) {
    Json d{{"degree", i}};
    if (h.prime) {
      d["dimension"] = h.degrees[i].dimension;
    } else {
      d["group"] = format_group(h.degrees[i]);
    }
    degrees.push_back(std::move(d));
  }
  return Json{{"coefficients", h.prime ? "F_" + std::to_string(*h.prime) : std::string("Z")},
              {"reliable_up_to", h.reliable_up_to},
              {"degrees", degrees}};
}

std::string format_homology(const HomologyResult& h) {
  std::ostringstream out;
  for (std::size_t i = 0; i < h.degrees.size(); ++i) {
    if (h.prime) {
      out << "dim H^" << i << "(F_" << *h.prime << ") = " << h.degrees[i].dimension << "\n";
    } else {
      out << "H_" << i << " = " << format_group(h.degrees[i]) << "\n";
    }
  }
  out << "reliable <= " << h.reliable_up_to << "\n";
  return out.str();
}

Json reports_to_json(const std::string& case_name, const std::vector<TheoremReport>& reports) {
  Json list = Json::array();
  for (const auto& r : reports) {
    Json lines = Json::array();
    for (const auto& l : r.lines) {
      lines.push_back(Json{{"name", l.name}, {"outcome", to_string(l.outcome)}, {"detail", l.detail}});
    }
    list.push_back(Json{{"theorem", r.theorem},
                        {"outcome", to_string(r.outcome())},
                        {"checks", lines},
                        {"table", r.table}});
  }
  return Json{{"case", case_name}, {"outcome", to_string(combine(reports))}, {"theorems", list}};
}

std::string format_reports(const std::string& case_name, const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  out << "case " << case_name << "\n";
  for (const auto& r : reports) {
    out << "[" << r.theorem << "] " << to_string(r.outcome()) << "\n";
    for (const auto& l : r.lines) {
      out << "  " << std::left << std::setw(18) << to_string(l.outcome) << l.name;
      if (!l.detail.empty()) out << ": " << l.detail;
      out << "\n";
    }
    if (!r.table.empty()) {
      std::vector<std::size_t> width;
      for (const auto& row : r.table) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      for (const auto& row : r.table) {
        std::string line = "   ";
        for (std::size_t c = 0; c < row.size(); ++c) {
          line += " " + row[c] + std::string(width[c] - row[c].size() + 1, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
      }
    }
  }
  out << "outcome: " << to_string(combine(reports)) << "\n";
  return out.str();
}

}  // namespace kanact
