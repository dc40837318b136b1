#include "sedict/chains.hpp"

#include <algorithm>
#include <set>

namespace sedict {

namespace {

constexpr std::array<std::pair<ChainTerminal, std::string_view>, 4> kTerminalNames{{
    {ChainTerminal::synchronous_pair, "synchronous_pair"},
    {ChainTerminal::diffuse_leaf, "diffuse_leaf"},
    {ChainTerminal::disjunctive_leaf, "disjunctive_leaf"},
    {ChainTerminal::cut_by_neutral, "cut_by_neutral"},
}};

constexpr std::array<std::pair<CutReason, std::string_view>, 5> kCutNames{{
    {CutReason::none, "none"},
    {CutReason::neutral, "neutral"},
    {CutReason::cycle, "cycle"},
    {CutReason::depth, "depth"},
    {CutReason::dead_end, "dead_end"},
}};

class Builder {
 public:
  Builder(const ChainRequest& req, const SignGraph& graph, const LexiconModel& model)
      : req_(req), graph_(graph), model_(model), header_(req.header_signs.begin(), req.header_signs.end()) {}

  ChainSet run() {
    for (const auto& root : req_.roots) {
      const Sense* rs = model_.find_sense(root);
      if (!rs) continue;
      const Lexeme& lex = model_.lexeme_of(*rs);
      std::vector<std::pair<const BinarySign*, std::string>> starts;
      for (const Sense* s : model_.senses_of(lex)) {
        for (const BinarySign* b : graph_.signs_of(s->id)) {
          if (header_.count(b->id) || is_warning(b->type)) continue;
          if (s->id == root && is_synchronous(b->type)) continue;
          starts.emplace_back(b, s->id);
        }
      }
      sort_candidates(starts);
      for (const auto& [sign, from] : starts) {
        Path path;
        path.lexemes.insert(lex.id);
        for (const auto& r : req_.roots) path.lexemes.insert(model_.lexeme_of(*model_.find_sense(r)).id);
        path.chain.links.push_back(from);
        step(path, *sign, from);
      }
    }
    out_.levels = assign_polarization(out_.chains, req_.header_signs);
    return std::move(out_);
  }

 private:
  struct Path {
    ImplicativeChain chain;
    std::set<std::string> lexemes;
  };

  static void sort_candidates(std::vector<std::pair<const BinarySign*, std::string>>& c) {
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first->id < b.first->id; });
    c.erase(std::unique(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            c.end());
  }

  void finish(Path path, ChainTerminal terminal, CutReason reason, const std::string& detail) {
    path.chain.terminal = terminal;
    path.chain.cut_reason = reason;
    if (terminal == ChainTerminal::cut_by_neutral) {
      std::string subject = path.chain.links.empty() ? std::string() : path.chain.links.front();
      out_.diagnostics.push_back(
          warning("chain-cut", subject, std::string(to_string(reason)) + ": " + detail));
    }
    if (!path.chain.signs.empty()) out_.chains.push_back(std::move(path.chain));
  }

  void step(Path path, const BinarySign& sign, const std::string& from) {
    const Sense* origin = model_.find_sense(from);
    const std::string& to = sign.partner_of(from);
    const Sense* partner = to.empty() ? nullptr : model_.find_sense(to);

    if (origin->scheme_neutral || (partner && partner->scheme_neutral)) {
      finish(std::move(path), ChainTerminal::cut_by_neutral, CutReason::neutral,
             "sign " + sign.id + " leaves the action scheme");
      return;
    }
    if (partner && path.lexemes.count(partner->lexeme)) {
      finish(std::move(path), ChainTerminal::cut_by_neutral, CutReason::cycle,
             "sign " + sign.id + " returns to " + model_.lexeme_of(*partner).lemma);
      return;
    }
    if (static_cast<int>(path.chain.signs.size()) + 1 > req_.max_depth) {
      finish(std::move(path), ChainTerminal::cut_by_neutral, CutReason::depth,
             "depth limit " + std::to_string(req_.max_depth) + " reached before " + sign.id);
      return;
    }

    // a step from another sense of the same lexeme departs from that sense
    path.chain.links.back() = from;
    path.chain.signs.push_back(sign.id);
    if (partner) {
      path.chain.links.push_back(partner->id);
      path.lexemes.insert(partner->lexeme);
    }
    if (sign.type == SignType::Diffuse) return finish(std::move(path), ChainTerminal::diffuse_leaf, CutReason::none, "");
    if (sign.type == SignType::Disjunctive)
      return finish(std::move(path), ChainTerminal::disjunctive_leaf, CutReason::none, "");
    if (is_synchronous(sign.type))
      return finish(std::move(path), ChainTerminal::synchronous_pair, CutReason::none, "");

    // Asynchronous: a synchronous sign on the arrival sense closes the chain.
    std::vector<std::pair<const BinarySign*, std::string>> closing;
    for (const BinarySign* b : graph_.signs_of(partner->id))
      if (b->id != sign.id && is_synchronous(b->type) && !header_.count(b->id)) closing.emplace_back(b, partner->id);
    sort_candidates(closing);
    if (!closing.empty()) {
      for (const auto& [b, at] : closing) step(path, *b, at);
      return;
    }

    std::vector<std::pair<const BinarySign*, std::string>> next;
    for (const Sense* s : model_.senses_of(model_.lexeme_of(*partner))) {
      for (const BinarySign* b : graph_.signs_of(s->id)) {
        if (b->id == sign.id || header_.count(b->id) || is_warning(b->type)) continue;
        next.emplace_back(b, s->id);
      }
    }
    sort_candidates(next);
    if (next.empty()) {
      finish(std::move(path), ChainTerminal::cut_by_neutral, CutReason::dead_end,
             "no further sign from " + model_.lexeme_of(*partner).lemma);
      return;
    }
    for (const auto& [b, at] : next) step(path, *b, at);
  }

  const ChainRequest& req_;
  const SignGraph& graph_;
  const LexiconModel& model_;
  std::set<std::string> header_;
  ChainSet out_;
};

}  // namespace

std::string_view to_string(ChainTerminal t) {
  for (const auto& [v, n] : kTerminalNames)
    if (v == t) return n;
  return "?";
}

std::string_view to_string(CutReason r) {
  for (const auto& [v, n] : kCutNames)
    if (v == r) return n;
  return "?";
}

std::optional<ChainTerminal> chain_terminal_from_string(std::string_view s) {
  for (const auto& [v, n] : kTerminalNames)
    if (n == s) return v;
  return std::nullopt;
}

std::optional<CutReason> cut_reason_from_string(std::string_view s) {
  for (const auto& [v, n] : kCutNames)
    if (n == s) return v;
  return std::nullopt;
}

ChainSet build_chains(const ChainRequest& request, const SignGraph& graph, const LexiconModel& model) {
  return Builder(request, graph, model).run();
}

std::map<std::string, int> assign_polarization(const std::vector<ImplicativeChain>& chains,
                                               const std::vector<std::string>& header_signs) {
  std::map<std::string, int> levels;
  for (const auto& h : header_signs) levels[h] = 0;
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < c.signs.size(); ++i) {
      int level = static_cast<int>(i) + 1;
      auto [it, inserted] = levels.emplace(c.signs[i], level);
      if (!inserted) it->second = std::min(it->second, level);
    }
  }
  return levels;
}

}  // namespace sedict
