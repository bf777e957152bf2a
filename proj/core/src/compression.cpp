#include "intrep/compression.hpp"

#include <algorithm>
#include <set>

namespace intrep {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::kTot:
      return "tot";
    case SystemKind::kSS:
      return "ss";
    case SystemKind::kZZ:
      return "zz";
    case SystemKind::kCustom:
      return "custom";
  }
  return "?";
}

SystemKind system_kind_from_string(const std::string& name) {
  if (name == "tot") return SystemKind::kTot;
  if (name == "ss") return SystemKind::kSS;
  if (name == "zz") return SystemKind::kZZ;
  if (name == "custom" || name.rfind("custom:", 0) == 0)
    return SystemKind::kCustom;
  throw ParseError("unknown compression system: " + name);
}

namespace {

// Inclusion of the full subposet on `members` (ambient-sorted indices).
CompressionDatum inclusion_datum(const PosetPtr& ambient, const Interval& I,
                                 std::vector<int> members) {
  std::sort(members.begin(), members.end());
  auto sub = std::make_shared<const Poset>(ambient->induced(members));
  PosetMap map = PosetMap::make(sub, ambient, members);
  return CompressionDatum{I, sub, std::move(map)};
}

int grid_join(const Poset& P, int a, int b) {
  const auto& ca = P.grid_coords(a);
  const auto& cb = P.grid_coords(b);
  std::vector<int> c(ca.size());
  for (std::size_t k = 0; k < ca.size(); ++k) c[k] = std::max(ca[k], cb[k]);
  std::string lbl = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
  return P.index_of(lbl);
}

int grid_meet(const Poset& P, int a, int b) {
  const auto& ca = P.grid_coords(a);
  const auto& cb = P.grid_coords(b);
  std::vector<int> c(ca.size());
  for (std::size_t k = 0; k < ca.size(); ++k) c[k] = std::min(ca[k], cb[k]);
  std::string lbl = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
  return P.index_of(lbl);
}

CompressionDatum zigzag_datum(const PosetPtr& ambient, const Interval& I) {
  const Poset& P = *ambient;
  if (!P.is_grid() || P.grid_sizes().size() != 2)
    throw NotAGrid("the zz system is defined on 2D-grids only");

  // Canonical order sorts grid antichains by strictly increasing first
  // coordinate, as the construction requires.
  const auto& sc = I.sources;
  const auto& sk = I.sinks;
  std::set<int> points(sc.begin(), sc.end());
  points.insert(sk.begin(), sk.end());
  std::vector<std::pair<int, int>> rels;
  for (std::size_t i = 0; i + 1 < sc.size(); ++i) {
    int j = grid_join(P, sc[i], sc[i + 1]);
    points.insert(j);
    rels.push_back({sc[i], j});
    rels.push_back({sc[i + 1], j});
  }
  for (std::size_t j = 0; j + 1 < sk.size(); ++j) {
    int m = grid_meet(P, sk[j], sk[j + 1]);
    points.insert(m);
    rels.push_back({m, sk[j]});
    rels.push_back({m, sk[j + 1]});
  }
  rels.push_back({sc.front(), sk.front()});

  std::vector<int> members(points.begin(), points.end());
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (int x : members) labels.push_back(P.label(x));
  std::vector<std::pair<std::string, std::string>> rel_labels;
  rel_labels.reserve(rels.size());
  for (auto [a, b] : rels) rel_labels.push_back({P.label(a), P.label(b)});

  auto sub = std::make_shared<const Poset>(
      Poset::from_relations(labels, rel_labels));
  PosetMap map = PosetMap::make(sub, ambient, members);
  return CompressionDatum{I, sub, std::move(map)};
}

}  // namespace

CompressionSystem CompressionSystem::total() {
  return CompressionSystem(
      SystemKind::kTot, "tot",
      [](const PosetPtr& ambient, const Interval& I) {
        return inclusion_datum(ambient, I, I.members);
      });
}

CompressionSystem CompressionSystem::source_sink() {
  return CompressionSystem(
      SystemKind::kSS, "ss", [](const PosetPtr& ambient, const Interval& I) {
        std::vector<int> members = I.sources;
        members.insert(members.end(), I.sinks.begin(), I.sinks.end());
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()),
                      members.end());
        return inclusion_datum(ambient, I, std::move(members));
      });
}

CompressionSystem CompressionSystem::zigzag() {
  return CompressionSystem(SystemKind::kZZ, "zz", zigzag_datum);
}

CompressionSystem CompressionSystem::custom(
    std::map<std::vector<std::string>, CompressionDatum> data) {
  auto shared = std::make_shared<std::map<std::vector<std::string>, CompressionDatum>>(
      std::move(data));
  return CompressionSystem(
      SystemKind::kCustom, "custom",
      [shared](const PosetPtr& ambient, const Interval& I) {
        std::vector<std::string> key;
        key.reserve(I.members.size());
        for (int x : I.members) key.push_back(ambient->label(x));
        auto it = shared->find(key);
        if (it != shared->end()) return it->second;
        // Intervals without explicit data use the total datum.
        return inclusion_datum(ambient, I, I.members);
      });
}

SystemReport validate_system(const CompressionSystem& system,
                             const IntervalLattice& lattice) {
  SystemReport report;
  const Poset& P = lattice.poset();
  for (int i = 0; i < static_cast<int>(lattice.size()); ++i) {
    const Interval& I = lattice[i];
    CompressionDatum datum = system.compress(lattice.poset_ptr(), I);
    const Poset& Q = *datum.compressed;

    SystemReport::Entry e{i, true, true, true, true};
    for (int z = 0; z < Q.size(); ++z)
      if (!I.bits.test(datum.map(z))) e.image_in_interval = false;

    Bitset image(P.size());
    for (int z = 0; z < Q.size(); ++z) image.set(datum.map(z));
    for (int x : I.sources)
      if (!image.test(x)) e.image_covers_extremes = false;
    for (int x : I.sinks)
      if (!image.test(x)) e.image_covers_extremes = false;

    std::vector<int> all(Q.size());
    for (int z = 0; z < Q.size(); ++z) all[z] = z;
    e.compressed_connected = !all.empty() && interval_check(Q, all);

    if (I.sources.size() == 1 && I.sinks.size() == 1) {
      const int x = I.sources[0], y = I.sinks[0];
      bool covered = false;
      for (int a = 0; a < Q.size() && !covered; ++a)
        for (int b = 0; b < Q.size() && !covered; ++b)
          if (Q.leq(a, b) && datum.map(a) == x && datum.map(b) == y)
            covered = true;
      e.segment_pair_covered = covered;
    }
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace intrep
