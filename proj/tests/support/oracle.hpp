#pragma once

#include <map>
#include <string>
#include <vector>

#include "prefkb/formula.hpp"
#include "prefkb/model.hpp"

namespace prefkb::testing {

/// Reference truth of a grounded, desugared formula at one world, computed
/// directly from the definitions with world loops and no memoisation.
bool ref_holds(const Formula& f, const PreferenceModel& m, int w);

/// Reference extension built from ref_holds.
std::vector<bool> ref_extension(const Formula& f, const PreferenceModel& m);

/// Every valuation of `atoms` over the given relation on n worlds.
std::vector<PreferenceModel> all_valuations(const Relation& r, const std::vector<std::string>& atoms);

/// Reference preorder enumeration: filters all relations by the postulates.
std::vector<Relation> ref_preorders(int n, bool total);

/// Minimal Graphviz digraph reader: node and edge statements with optional
/// attribute lists. Fails (returns false) on anything else.
struct DotGraph {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::map<std::string, std::string>> node_attrs;
  std::vector<std::map<std::string, std::string>> edge_attrs;
};
bool parse_dot(const std::string& text, DotGraph& out);

}  // namespace prefkb::testing
