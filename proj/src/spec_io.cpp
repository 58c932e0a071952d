#include "wordmetrics/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wordmetrics/catalog.hpp"

namespace wordmetrics {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) {
    throw SpecError(where, "expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw SpecError(where, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::uint64_t uint_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw SpecError(where + "." + key, "expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<Elem> index_row(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw SpecError(where, "expected an array of indices");
  }
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& v = j[i];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw SpecError(where + "[" + std::to_string(i) + "]", "expected a nonnegative integer");
    }
    out.push_back(static_cast<Elem>(v.get<std::uint64_t>()));
  }
  return out;
}

std::vector<std::vector<Elem>> index_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw SpecError(where, "expected an array of rows");
  }
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(index_row(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string kind_of(const json& j, const std::string& where) {
  const json& k = field(j, "kind", where);
  if (!k.is_string()) {
    throw SpecError(where + ".kind", "expected a string");
  }
  return k.get<std::string>();
}

template <typename F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(where, e.what());
  }
}

}  // namespace

GroupPtr group_from_json(const json& j, const std::string& where) {
  const std::string kind = kind_of(j, where);
  if (kind == "cyclic" || kind == "dihedral" || kind == "symmetric" || kind == "alternating" ||
      kind == "dicyclic") {
    const std::uint64_t n = uint_field(j, "n", where);
    return wrap(where, [&] {
      if (kind == "cyclic") {
        return cyclic(n);
      }
      if (kind == "dihedral") {
        return dihedral(n);
      }
      if (kind == "symmetric") {
        return symmetric(n);
      }
      if (kind == "alternating") {
        return alternating(n);
      }
      return dicyclic(n);
    });
  }
  if (kind == "catalog") {
    const json& name = field(j, "name", where);
    if (!name.is_string()) {
      throw SpecError(where + ".name", "expected a string");
    }
    return wrap(where, [&] { return catalog_group(name.get<std::string>()); });
  }
  if (kind == "table") {
    const auto rows = index_matrix(field(j, "mul", where), where + ".mul");
    std::vector<Elem> flat;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw SpecError(where + ".mul[" + std::to_string(i) + "]",
                        "row length " + std::to_string(rows[i].size()) + " differs from " +
                            std::to_string(rows.size()));
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    std::string name = "table";
    if (auto it = j.find("name"); it != j.end() && it->is_string()) {
      name = it->get<std::string>();
    }
    return wrap(where, [&] { return FiniteGroup::from_table(name, rows.size(), flat); });
  }
  if (kind == "product") {
    const json& f = field(j, "factors", where);
    if (!f.is_array() || f.size() != 2) {
      throw SpecError(where + ".factors", "expected exactly two factor specs");
    }
    GroupPtr a = group_from_json(f[0], where + ".factors[0]");
    GroupPtr b = group_from_json(f[1], where + ".factors[1]");
    return direct_product(a, b);
  }
  if (kind == "semidirect") {
    GroupPtr h = group_from_json(field(j, "h", where), where + ".h");
    GroupPtr k = group_from_json(field(j, "k", where), where + ".k");
    const auto action = index_matrix(field(j, "action", where), where + ".action");
    return wrap(where, [&] { return semidirect_product(h, k, action); });
  }
  throw SpecError(where + ".kind", "unknown group kind \"" + kind + "\"");
}

GroupAction action_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) {
    throw SpecError(where, "expected an object");
  }
  if (j.contains("kind")) {
    const std::string kind = kind_of(j, where);
    if (kind == "translation") {
      GroupPtr g = group_from_json(field(j, "group", where), where + ".group");
      return GroupAction::right_translation(g);
    }
    if (kind == "natural") {
      const std::uint64_t n = uint_field(j, "n", where);
      return wrap(where, [&] { return natural_symmetric_action(n); });
    }
    if (kind == "quandle") {
      StarSet x = star_set_from_json(field(j, "quandle", where), where + ".quandle");
      return wrap(where, [&] { return automorphism_action(x).action; });
    }
    throw SpecError(where + ".kind", "unknown action kind \"" + kind + "\"");
  }
  GroupPtr g = group_from_json(field(j, "group", where), where + ".group");
  if (j.contains("perms")) {
    const auto perms = index_matrix(j["perms"], where + ".perms");
    return wrap(where, [&] { return GroupAction::from_permutations(g, perms); });
  }
  const std::uint64_t m = uint_field(j, "size", where);
  const auto rows = index_matrix(field(j, "table", where), where + ".table");
  if (rows.size() != m) {
    throw SpecError(where + ".table", "expected " + std::to_string(m) + " rows");
  }
  std::vector<Elem> flat;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != g->order()) {
      throw SpecError(where + ".table[" + std::to_string(i) + "]",
                      "expected one entry per group element");
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return wrap(where, [&] { return GroupAction(g, m, flat); });
}

StarSet star_set_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) {
    throw SpecError(where, "expected an object");
  }
  if (j.contains("kind")) {
    const std::string kind = kind_of(j, where);
    if (kind == "dihedral_quandle" || kind == "trivial_quandle") {
      const std::uint64_t n = uint_field(j, "n", where);
      return wrap(where, [&] {
        return kind == "dihedral_quandle" ? StarSet::dihedral_quandle(n)
                                          : StarSet::trivial_quandle(n);
      });
    }
    if (kind == "group") {
      GroupPtr g = group_from_json(field(j, "group", where), where + ".group");
      return StarSet::from_group(*g);
    }
    throw SpecError(where + ".kind", "unknown star-set kind \"" + kind + "\"");
  }
  const std::uint64_t m = uint_field(j, "size", where);
  const json& ops = field(j, "ops", where);
  if (!ops.is_array()) {
    throw SpecError(where + ".ops", "expected an array of tables");
  }
  std::vector<std::vector<Elem>> tables;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string w = where + ".ops[" + std::to_string(i) + "]";
    if (ops[i].is_array() && !ops[i].empty() && ops[i][0].is_array()) {
      std::vector<Elem> flat;
      const auto rows = index_matrix(ops[i], w);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m) {
          throw SpecError(w + "[" + std::to_string(r) + "]",
                          "expected " + std::to_string(m) + " entries");
        }
        flat.insert(flat.end(), rows[r].begin(), rows[r].end());
      }
      tables.push_back(std::move(flat));
    } else {
      tables.push_back(index_row(ops[i], w));
    }
  }
  std::optional<Elem> unit;
  if (auto it = j.find("unital"); it != j.end() && !it->is_null()) {
    unit = static_cast<Elem>(uint_field(j, "unital", where));
  }
  std::string name;
  if (auto it = j.find("name"); it != j.end() && it->is_string()) {
    name = it->get<std::string>();
  }
  return wrap(where, [&] { return StarSet(m, tables, unit, name); });
}

json load_json_argument(const std::string& arg) {
  std::size_t p = 0;
  while (p < arg.size() && std::isspace(static_cast<unsigned char>(arg[p])) != 0) {
    ++p;
  }
  std::string text;
  std::string origin = "argument";
  if (p < arg.size() && (arg[p] == '{' || arg[p] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) {
      throw SpecError(arg, "not inline JSON and not a readable file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    origin = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(origin + " byte " + std::to_string(e.byte), e.what());
  }
}

GroupPtr parse_group_argument(const std::string& arg) {
  const bool looks_json = arg.find_first_of("{[") != std::string::npos;
  if (!looks_json && !std::ifstream(arg)) {
    return wrap("group", [&] { return catalog_group(arg); });
  }
  return group_from_json(load_json_argument(arg));
}

GroupAction parse_action_argument(const std::string& arg) {
  return action_from_json(load_json_argument(arg));
}

StarSet parse_star_set_argument(const std::string& arg) {
  return star_set_from_json(load_json_argument(arg));
}

}  // namespace wordmetrics
