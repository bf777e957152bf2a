#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "intrep/poset.hpp"

namespace intrep {

// One interval's compression: a connected poset together with an
// order-preserving map into the ambient poset whose image lies in the
// interval and contains all of its sources and sinks.
struct CompressionDatum {
  Interval interval;
  PosetPtr compressed;
  PosetMap map;  // compressed -> ambient
};

enum class SystemKind { kTot, kSS, kZZ, kCustom };

std::string to_string(SystemKind kind);
SystemKind system_kind_from_string(const std::string& name);

// A compression system: one datum per interval, generated on demand.
class CompressionSystem {
 public:
  using Generator =
      std::function<CompressionDatum(const PosetPtr&, const Interval&)>;

  static CompressionSystem total();
  static CompressionSystem source_sink();
  // Zigzag through consecutive source joins / sink meets; 2D-grids only
  // (compress throws NotAGrid elsewhere).
  static CompressionSystem zigzag();
  // Explicit per-interval data keyed by canonical member labels.
  static CompressionSystem custom(
      std::map<std::vector<std::string>, CompressionDatum> data);

  SystemKind kind() const { return kind_; }
  std::string name() const { return name_; }

  CompressionDatum compress(const PosetPtr& ambient, const Interval& I) const {
    return generator_(ambient, I);
  }

 private:
  CompressionSystem(SystemKind kind, std::string name, Generator gen)
      : kind_(kind), name_(std::move(name)), generator_(std::move(gen)) {}

  SystemKind kind_;
  std::string name_;
  Generator generator_;
};

struct SystemReport {
  struct Entry {
    int interval_index;
    bool image_in_interval;      // Def. condition (1)
    bool image_covers_extremes;  // Def. condition (2)
    bool compressed_connected;
    bool segment_pair_covered;   // rank condition (3); true off segments
    bool ok() const {
      return image_in_interval && image_covers_extremes &&
             compressed_connected && segment_pair_covered;
    }
  };
  std::vector<Entry> entries;
  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok()) return false;
    return true;
  }
};

// Checks the compression-system axioms and the rank condition on every
// interval of the lattice. Failures are reported, not thrown.
SystemReport validate_system(const CompressionSystem& system,
                             const IntervalLattice& lattice);

}  // namespace intrep
