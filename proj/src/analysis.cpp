#include "ocdf/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace ocdf {

std::string_view to_string(AbstractionLevel level) {
  switch (level) {
    case AbstractionLevel::L1: return "L1";
    case AbstractionLevel::L2: return "L2";
    case AbstractionLevel::L3: return "L3";
  }
  return "L3";
}

std::optional<AbstractionLevel> parse_level(std::string_view token) {
  if (token == "L1" || token == "l1" || token == "1") return AbstractionLevel::L1;
  if (token == "L2" || token == "l2" || token == "2") return AbstractionLevel::L2;
  if (token == "L3" || token == "l3" || token == "3") return AbstractionLevel::L3;
  return std::nullopt;
}

OcdfClass project(const OcdfClass& cls, AbstractionLevel level) {
  if (level == AbstractionLevel::L3) return cls;
  OcdfClass out;
  out.name = cls.name;
  out.features = cls.features;
  for (const auto& flow : cls.flows) {
    bool keep = false;
    if (flow.kind == FlowKind::Control) {
      keep = level == AbstractionLevel::L2;
    } else {
      const Feature* src = cls.find(flow.source);
      const Feature* dst = cls.find(flow.target);
      keep = (src && src->is_member()) || (dst && dst->is_member());
    }
    if (keep) out.flows.push_back(flow);
  }
  return out;
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

std::size_t common_prefix(std::string_view a, std::string_view b) {
  auto mismatch = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(mismatch.first - a.begin());
}

}  // namespace

SubstructureReport substructures(const OcdfClass& cls) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < cls.features.size(); ++i) index.emplace(cls.features[i].id, i);

  DisjointSet sets(cls.features.size());
  for (const auto& flow : cls.flows) {
    auto s = index.find(flow.source);
    auto t = index.find(flow.target);
    if (s != index.end() && t != index.end()) sets.unite(s->second, t->second);
  }

  SubstructureReport report;
  std::vector<std::vector<std::size_t>> members;
  std::unordered_map<std::size_t, std::size_t> component_of_root;
  for (std::size_t i = 0; i < cls.features.size(); ++i) {
    auto [it, fresh] = component_of_root.emplace(sets.find(i), members.size());
    if (fresh) members.emplace_back();
    members[it->second].push_back(i);
  }
  for (const auto& group : members) {
    auto& ids = report.components.emplace_back();
    for (auto i : group) ids.push_back(cls.features[i].id);
  }

  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      std::size_t affinity = 0;
      for (auto i : members[a]) {
        for (auto j : members[b]) {
          affinity = std::max(affinity, common_prefix(cls.features[i].name, cls.features[j].name));
        }
      }
      // Two separate components join as soon as one flow links them.
      if (affinity > 0) report.cut_suggestions.push_back({a, b, affinity, 1});
    }
  }
  std::stable_sort(report.cut_suggestions.begin(), report.cut_suggestions.end(),
                   [](const CutSuggestion& x, const CutSuggestion& y) {
                     if (x.affinity != y.affinity) return x.affinity > y.affinity;
                     return std::pair(x.first, x.second) < std::pair(y.first, y.second);
                   });
  return report;
}

std::vector<RaceHazard> detect_races(const OcdfClass& cls) {
  std::map<std::string, std::vector<std::string>> callees;
  for (const auto& flow : cls.flows) {
    if (flow.kind == FlowKind::Control) callees[flow.source].push_back(flow.target);
  }

  // Interface methods that can enter each method.
  std::map<std::string, std::set<std::string>> entries;
  for (const auto& f : cls.features) {
    if (f.kind != FeatureKind::InterfaceMethod) continue;
    std::vector<std::string> stack{f.id};
    std::set<std::string> seen{f.id};
    while (!stack.empty()) {
      std::string cur = std::move(stack.back());
      stack.pop_back();
      entries[cur].insert(f.id);
      for (const auto& next : callees[cur]) {
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }

  auto distinct_entries = [&](const std::string& a, const std::string& b) {
    const auto& ea = entries[a];
    const auto& eb = entries[b];
    for (const auto& x : ea) {
      for (const auto& y : eb) {
        if (x != y) return true;
      }
    }
    return false;
  };

  std::vector<RaceHazard> hazards;
  for (const auto& member : cls.features) {
    if (!member.is_member() || member.is_const) continue;
    std::set<std::string> writers;
    std::set<std::string> readers;
    for (const auto& flow : cls.flows) {
      if (flow.kind != FlowKind::Data) continue;
      if (flow.target == member.id) {
        const Feature* src = cls.find(flow.source);
        if (src && src->is_method() && !src->is_constructor) writers.insert(src->id);
      } else if (flow.source == member.id) {
        const Feature* dst = cls.find(flow.target);
        if (dst && dst->is_method()) readers.insert(dst->id);
      }
    }
    std::size_t pure_readers = 0;
    for (const auto& r : readers) pure_readers += !writers.count(r);
    if (!(writers.size() >= 2 || (!writers.empty() && pure_readers >= 1))) continue;

    std::set<std::string> accessors = writers;
    accessors.insert(readers.begin(), readers.end());
    bool conflict = false;
    for (const auto& w : writers) {
      for (const auto& other : accessors) {
        if (other != w && distinct_entries(w, other)) conflict = true;
      }
    }
    if (!conflict) continue;

    RaceHazard hazard;
    hazard.member = member.id;
    hazard.writers.assign(writers.begin(), writers.end());
    hazard.readers.assign(readers.begin(), readers.end());
    std::set<std::string> entry_set;
    for (const auto& a : accessors) {
      const auto& e = entries[a];
      entry_set.insert(e.begin(), e.end());
    }
    hazard.entry_points.assign(entry_set.begin(), entry_set.end());
    hazards.push_back(std::move(hazard));
  }
  return hazards;
}

}  // namespace ocdf
