#include "support/oracles.hpp"

#include <functional>
#include <map>

namespace ocdf::testing {

Partition naive_components(const OcdfClass& cls) {
  std::map<std::string, int> label;
  int next = 0;
  for (const auto& f : cls.features) label[f.id] = next++;
  for (const auto& flow : cls.flows) {
    int from = label.at(flow.target);
    int to = label.at(flow.source);
    for (auto& [id, l] : label) {
      if (l == from) l = to;
    }
  }
  std::map<int, std::set<std::string>> groups;
  for (const auto& [id, l] : label) groups[l].insert(id);
  Partition out;
  for (auto& [l, ids] : groups) out.insert(ids);
  return out;
}

Partition as_partition(const std::vector<std::vector<std::string>>& components) {
  Partition out;
  for (const auto& c : components) out.insert(std::set<std::string>(c.begin(), c.end()));
  return out;
}

std::set<std::string> exhaustive_race_members(const OcdfClass& cls) {
  std::map<std::string, const Feature*> by_id;
  for (const auto& f : cls.features) by_id[f.id] = &f;

  // reachers[m] = interface methods with some simple control path to m.
  std::map<std::string, std::set<std::string>> reachers;
  std::function<void(const std::string&, const std::string&, std::set<std::string>&)> walk =
      [&](const std::string& root, const std::string& at, std::set<std::string>& on_path) {
        reachers[at].insert(root);
        for (const auto& flow : cls.flows) {
          if (flow.kind != FlowKind::Control || flow.source != at) continue;
          if (on_path.count(flow.target)) continue;
          on_path.insert(flow.target);
          walk(root, flow.target, on_path);
          on_path.erase(flow.target);
        }
      };
  for (const auto& f : cls.features) {
    if (f.kind != FeatureKind::InterfaceMethod) continue;
    std::set<std::string> on_path{f.id};
    walk(f.id, f.id, on_path);
  }

  std::set<std::string> out;
  for (const auto& member : cls.features) {
    if (member.kind != FeatureKind::Member || member.is_const) continue;
    std::set<std::string> writers, readers;
    for (const auto& flow : cls.flows) {
      if (flow.kind != FlowKind::Data) continue;
      if (flow.target == member.id && by_id[flow.source]->kind != FeatureKind::Member &&
          !by_id[flow.source]->is_constructor) {
        writers.insert(flow.source);
      }
      if (flow.source == member.id && by_id[flow.target]->kind != FeatureKind::Member) {
        readers.insert(flow.target);
      }
    }
    // Every ordered (writer, other accessor) pair, other != writer.
    bool hazard = false;
    for (const auto& w : writers) {
      std::set<std::string> others = writers;
      others.insert(readers.begin(), readers.end());
      for (const auto& o : others) {
        if (o == w) continue;
        for (const auto& ew : reachers[w]) {
          for (const auto& eo : reachers[o]) hazard = hazard || ew != eo;
        }
      }
    }
    if (hazard) out.insert(member.id);
  }
  return out;
}

FlowSet expected_level_flows(const OcdfClass& cls, int level) {
  FlowSet out;
  for (const auto& flow : cls.flows) {
    bool member_end = cls.find(flow.source)->kind == FeatureKind::Member ||
                      cls.find(flow.target)->kind == FeatureKind::Member;
    bool keep = level >= 3 || (flow.kind == FlowKind::Data && member_end) ||
                (level == 2 && flow.kind == FlowKind::Control);
    if (keep) out.emplace(flow.kind, flow.source, flow.target);
  }
  return out;
}

}  // namespace ocdf::testing
