#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intrep/compression.hpp"
#include "intrep/invariants.hpp"
#include "intrep/module.hpp"
#include "intrep/poset.hpp"
#include "intrep/replacement.hpp"

namespace intrep {

using AnyField = std::variant<RationalField, PrimeField>;
using AnyModule = std::variant<PersistenceModule<RationalField>,
                               PersistenceModule<PrimeField>>;

// "q" or "fp:<p>".
AnyField parse_field_spec(const std::string& spec);
std::string field_name(const AnyField& field);

// {"elements": [...], "relations": [[a,b], ...]} or {"grid": [n1, ..., nd]}.
PosetPtr load_poset_json(const std::string& text);
PosetPtr load_poset_file(const std::string& path);

// {"poset": ..., "field": {"rational": true} | {"prime": p},
//  "dims": {label: n, ...}, "maps": {"x->y": [[...], ...], ...}}
// A --field style override replaces the file's field selection.
AnyModule load_module_json(const std::string& text,
                           const std::optional<AnyField>& field_override,
                           Validation validation = Validation::kFull);
AnyModule load_module_file(const std::string& path,
                           const std::optional<AnyField>& field_override,
                           Validation validation = Validation::kFull);

// Custom compression data: {"intervals": [{"interval": [...members...],
//   "elements": [...], "relations": [[a,b], ...], "map": {elt: member}},
//   ...]}. Intervals without an entry fall back to the total datum.
CompressionSystem load_custom_system_json(const std::string& text,
                                          const PosetPtr& ambient);
CompressionSystem load_custom_system_file(const std::string& path,
                                          const PosetPtr& ambient);

std::string interval_to_json(const Poset& P, const Interval& I);

std::string table_to_json(const IntervalLattice& lattice,
                          const InvariantTable& table,
                          const std::string& field);
std::string table_to_csv(const IntervalLattice& lattice,
                         const InvariantTable& table, const std::string& field);

std::string replacement_to_json(const IntervalLattice& lattice,
                                const SignedInvariant& delta,
                                const Replacement& repl,
                                const std::string& field);
std::string replacement_to_csv(const IntervalLattice& lattice,
                               const SignedInvariant& delta,
                               const Replacement& repl,
                               const std::string& field);

// Built-in example inputs, as module JSON documents.
std::vector<std::string> fixture_names();
std::string fixture_json(const std::string& name);

}  // namespace intrep
