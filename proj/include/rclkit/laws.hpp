#pragma once

#include <deque>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rclkit/lattice.hpp"

namespace rclkit {

inline constexpr std::size_t kMaxWitnesses = 16;

/// Outcome of one exhaustively checked law. Witnesses are the first
/// violating tuples in lexicographic index order.
struct LawResult {
  std::string name;
  bool holds = true;
  std::size_t violations = 0;
  std::vector<std::vector<Elem>> witnesses;
  std::string note;

  void fail(std::initializer_list<Elem> tuple) {
    holds = false;
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.emplace_back(tuple);
  }
};

struct LawFlags {
  std::deque<LawResult> laws;  // deque: references from add() stay valid

  LawResult& add(std::string name, std::string note = {}) {
    laws.push_back(LawResult{std::move(name), true, 0, {}, std::move(note)});
    return laws.back();
  }
  const LawResult* find(std::string_view name) const {
    for (const auto& l : laws)
      if (l.name == name) return &l;
    return nullptr;
  }
  bool holds(std::string_view name) const {
    const auto* l = find(name);
    return l != nullptr && l->holds;
  }
  bool all() const {
    for (const auto& l : laws)
      if (!l.holds) return false;
    return true;
  }
};

}  // namespace rclkit
