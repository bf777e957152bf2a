#include "intrep/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace intrep {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("element labels must be strings or integers");
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

PosetPtr poset_from_json(const json& j) {
  if (j.contains("grid")) {
    std::vector<int> sizes = j.at("grid").get<std::vector<int>>();
    return std::make_shared<const Poset>(Poset::grid(sizes));
  }
  if (!j.contains("elements"))
    throw ParseError("poset object needs \"elements\" or \"grid\"");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) elements.push_back(label_of(e));
  std::vector<std::pair<std::string, std::string>> relations;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2)
        throw ParseError("relations must be [a, b] pairs");
      relations.push_back({label_of(r[0]), label_of(r[1])});
    }
  return std::make_shared<const Poset>(Poset::from_relations(elements, relations));
}

template <class F>
Matrix<F> matrix_from_json(const F& field, const json& rows, int expect_rows,
                           int expect_cols, const std::string& where) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  if (static_cast<int>(rows.size()) != expect_rows)
    throw ParseError("matrix for " + where + " has " +
                     std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(expect_rows));
  Matrix<F> m(field, expect_rows, expect_cols);
  for (int i = 0; i < expect_rows; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != expect_cols)
      throw ParseError("matrix for " + where + " has a row of length " +
                       std::to_string(row.size()) + ", expected " +
                       std::to_string(expect_cols));
    for (int j = 0; j < expect_cols; ++j) {
      const auto& e = row[j];
      if (e.is_number_integer())
        m.at(i, j) = field.from_int(e.get<long>());
      else if (e.is_string())
        m.at(i, j) = field.parse(e.get<std::string>());
      else
        throw ParseError("matrix entries must be integers or strings");
    }
  }
  return m;
}

template <class F>
PersistenceModule<F> module_from_json(const json& j, PosetPtr poset, F field,
                                      Validation validation) {
  const Poset& P = *poset;
  std::vector<int> dims(P.size(), 0);
  if (j.contains("dims"))
    for (const auto& [key, value] : j.at("dims").items()) {
      int x = P.index_of(key);
      dims[x] = value.template get<int>();
      if (dims[x] < 0) throw ParseError("negative dimension at " + key);
    }
  typename PersistenceModule<F>::ArrowMaps maps;
  if (j.contains("maps"))
    for (const auto& [key, value] : j.at("maps").items()) {
      auto sep = key.find("->");
      if (sep == std::string::npos)
        throw ParseError("map keys must look like \"x->y\": " + key);
      int x = P.index_of(key.substr(0, sep));
      int y = P.index_of(key.substr(sep + 2));
      bool is_hasse = false;
      for (int z : P.hasse_up(x)) is_hasse |= (z == y);
      if (!is_hasse)
        throw ParseError("map key " + key +
                         " is not a Hasse arrow; composite maps are derived, "
                         "not free data");
      maps.emplace(std::pair{x, y},
                   matrix_from_json(field, value, dims[y], dims[x], key));
    }
  return PersistenceModule<F>(std::move(poset), std::move(field),
                              std::move(dims), std::move(maps), validation);
}

std::string csv_interval(const Poset& P, const Interval& I) {
  std::string out;
  for (std::size_t k = 0; k < I.members.size(); ++k) {
    if (k) out += '|';
    out += P.label(I.members[k]);
  }
  return out;
}

json interval_members_json(const Poset& P, const std::vector<int>& xs) {
  json arr = json::array();
  for (int x : xs) arr.push_back(P.label(x));
  return arr;
}

}  // namespace

AnyField parse_field_spec(const std::string& spec) {
  if (spec == "q" || spec == "Q") return RationalField{};
  if (spec.rfind("fp:", 0) == 0) {
    try {
      return PrimeField(std::stoull(spec.substr(3)));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad field spec: " + spec);
    } catch (const std::out_of_range&) {
      throw ParseError("bad field spec: " + spec);
    }
  }
  throw ParseError("field must be q or fp:<prime>, got: " + spec);
}

std::string field_name(const AnyField& field) {
  return std::visit([](const auto& f) { return f.name(); }, field);
}

PosetPtr load_poset_json(const std::string& text) {
  return poset_from_json(parse(text));
}

PosetPtr load_poset_file(const std::string& path) {
  return load_poset_json(read_file(path));
}

AnyModule load_module_json(const std::string& text,
                           const std::optional<AnyField>& field_override,
                           Validation validation) {
  json j = parse(text);
  if (!j.contains("poset")) throw ParseError("module object needs \"poset\"");
  PosetPtr poset = poset_from_json(j.at("poset"));

  AnyField field = RationalField{};
  if (field_override) {
    field = *field_override;
  } else if (j.contains("field")) {
    const auto& f = j.at("field");
    if (f.contains("prime"))
      field = PrimeField(f.at("prime").get<std::uint64_t>());
    else if (f.contains("rational") && f.at("rational").get<bool>())
      field = RationalField{};
    else
      throw ParseError("field must be {\"rational\":true} or {\"prime\":p}");
  }
  return std::visit(
      [&](auto concrete) -> AnyModule {
        return module_from_json(j, poset, concrete, validation);
      },
      field);
}

AnyModule load_module_file(const std::string& path,
                           const std::optional<AnyField>& field_override,
                           Validation validation) {
  return load_module_json(read_file(path), field_override, validation);
}

CompressionSystem load_custom_system_json(const std::string& text,
                                          const PosetPtr& ambient) {
  json j = parse(text);
  std::map<std::vector<std::string>, CompressionDatum> data;
  if (!j.contains("intervals"))
    throw ParseError("custom system file needs \"intervals\"");
  for (const auto& entry : j.at("intervals")) {
    std::vector<int> members;
    for (const auto& e : entry.at("interval"))
      members.push_back(ambient->index_of(label_of(e)));
    Interval I = make_interval(*ambient, members);

    std::vector<std::string> elements;
    for (const auto& e : entry.at("elements")) elements.push_back(label_of(e));
    std::vector<std::pair<std::string, std::string>> relations;
    if (entry.contains("relations"))
      for (const auto& r : entry.at("relations"))
        relations.push_back({label_of(r[0]), label_of(r[1])});
    auto compressed =
        std::make_shared<const Poset>(Poset::from_relations(elements, relations));

    std::vector<int> vm(compressed->size(), -1);
    for (const auto& [from, to] : entry.at("map").items())
      vm[compressed->index_of(from)] = ambient->index_of(label_of(to));
    for (int v : vm)
      if (v < 0) throw ParseError("custom map does not cover every element");
    PosetMap map = PosetMap::make(compressed, ambient, std::move(vm));

    std::vector<std::string> key;
    for (int x : I.members) key.push_back(ambient->label(x));
    data.emplace(std::move(key),
                 CompressionDatum{std::move(I), compressed, std::move(map)});
  }

  return CompressionSystem::custom(std::move(data));
}

CompressionSystem load_custom_system_file(const std::string& path,
                                          const PosetPtr& ambient) {
  return load_custom_system_json(read_file(path), ambient);
}

std::string interval_to_json(const Poset& P, const Interval& I) {
  json j;
  j["members"] = interval_members_json(P, I.members);
  j["sources"] = interval_members_json(P, I.sources);
  j["sinks"] = interval_members_json(P, I.sinks);
  return j.dump();
}

std::string table_to_json(const IntervalLattice& lattice,
                          const InvariantTable& table,
                          const std::string& field) {
  json j;
  j["system"] = table.system;
  j["field"] = field;
  json rows = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    json row;
    row["interval"] = interval_members_json(lattice.poset(), lattice[i].members);
    row["mult"] = table.values[i];
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

std::string table_to_csv(const IntervalLattice& lattice,
                         const InvariantTable& table, const std::string& field) {
  std::ostringstream os;
  os << "# system=" << table.system << " field=" << field << "\n";
  os << "interval,mult\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    os << csv_interval(lattice.poset(), lattice[i]) << ',' << table.values[i]
       << "\n";
  return os.str();
}

namespace {

json signed_rows(const IntervalLattice& lattice, const std::vector<int>& vals,
                 bool skip_zero) {
  json rows = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (skip_zero && vals[i] == 0) continue;
    json row;
    row["interval"] = interval_members_json(lattice.poset(), lattice[i].members);
    row["value"] = vals[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string replacement_to_json(const IntervalLattice& lattice,
                                const SignedInvariant& delta,
                                const Replacement& repl,
                                const std::string& field) {
  json j;
  j["system"] = delta.system;
  j["field"] = field;
  j["delta"] = signed_rows(lattice, delta.values, false);
  j["positive"] = signed_rows(lattice, repl.positive, true);
  j["negative"] = signed_rows(lattice, repl.negative, true);
  return j.dump(2);
}

std::string replacement_to_csv(const IntervalLattice& lattice,
                               const SignedInvariant& delta,
                               const Replacement& repl,
                               const std::string& field) {
  std::ostringstream os;
  os << "# system=" << delta.system << " field=" << field << "\n";
  os << "interval,delta,positive,negative\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    os << csv_interval(lattice.poset(), lattice[i]) << ',' << delta.values[i]
       << ',' << repl.positive[i] << ',' << repl.negative[i] << "\n";
  return os.str();
}

}  // namespace intrep
