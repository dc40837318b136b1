#pragma once

#include <map>
#include <string>
#include <vector>

#include "sedict/classifier.hpp"

namespace sedict {

enum class ChainTerminal { synchronous_pair, diffuse_leaf, disjunctive_leaf, cut_by_neutral };
enum class CutReason { none, neutral, cycle, depth, dead_end };

std::string_view to_string(ChainTerminal t);
std::string_view to_string(CutReason r);
std::optional<ChainTerminal> chain_terminal_from_string(std::string_view s);
std::optional<CutReason> cut_reason_from_string(std::string_view s);

// links[i] is the sense the i-th sign leaves from; the last link is where the final sign arrives
// (absent when it arrives at a descriptive equivalent). Consecutive links alternate language.
struct ImplicativeChain {
  std::vector<std::string> links;
  std::vector<std::string> signs;
  ChainTerminal terminal = ChainTerminal::cut_by_neutral;
  CutReason cut_reason = CutReason::none;

  bool operator==(const ImplicativeChain&) const = default;
};

struct ChainSet {
  std::vector<ImplicativeChain> chains;
  std::map<std::string, int> levels;  // sign id -> polarization level, header signs at 0
  Diagnostics diagnostics;
};

struct ChainRequest {
  std::vector<std::string> roots;         // header member senses
  std::vector<std::string> header_signs;  // shown in row 1, never expanded
  int max_depth = 4;
};

ChainSet build_chains(const ChainRequest& request, const SignGraph& graph, const LexiconModel& model);

// Minimum level of every sign over all chains; header signs get 0.
std::map<std::string, int> assign_polarization(const std::vector<ImplicativeChain>& chains,
                                               const std::vector<std::string>& header_signs);

}  // namespace sedict
