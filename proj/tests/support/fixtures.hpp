#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rclkit/approximation.hpp"
#include "rclkit/io.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(RCLKIT_TEST_DATA) + "/" + name; }

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"⊥", "⊤", "a", "b", "c", "e", "f"};
  return names;
}

inline const std::vector<std::pair<std::string, std::string>>& example_covers() {
  static const std::vector<std::pair<std::string, std::string>> covers{
      {"c", "a"}, {"f", "b"}, {"c", "e"}, {"f", "e"}, {"a", "⊤"}, {"b", "⊤"}, {"e", "⊤"}, {"⊥", "c"}, {"⊥", "f"}};
  return covers;
}

inline std::shared_ptr<const rclkit::FiniteLattice> example_lattice() {
  return std::make_shared<const rclkit::FiniteLattice>(rclkit::FiniteLattice::build(example_names(), example_covers()));
}

/// Builds a structure from name-level maps listed in element order.
inline rclkit::RclStructure structure(std::shared_ptr<const rclkit::FiniteLattice> L,
                                      const std::vector<std::string>& lower, const std::vector<std::string>& upper) {
  std::vector<rclkit::Elem> l, u;
  for (const auto& n : lower) l.push_back(L->find(n));
  for (const auto& n : upper) u.push_back(L->find(n));
  return rclkit::RclStructure(L, l, u);
}

/// The worked example's maps over ⊥ ⊤ a b c e f.
inline rclkit::RclStructure worked_example() {
  return structure(example_lattice(), {"⊥", "e", "c", "b", "c", "c", "⊥"}, {"⊥", "⊤", "a", "⊤", "e", "e", "b"});
}

inline std::shared_ptr<const rclkit::FiniteLattice> chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) order.emplace_back(names[i - 1], names[i]);
  }
  return std::make_shared<const rclkit::FiniteLattice>(rclkit::FiniteLattice::build(names, order));
}

/// ⊥ < x, y < j < ⊤.
inline std::shared_ptr<const rclkit::FiniteLattice> pentagon_j() {
  return std::make_shared<const rclkit::FiniteLattice>(rclkit::FiniteLattice::build(
      {"⊥", "x", "y", "j", "⊤"}, {{"⊥", "x"}, {"⊥", "y"}, {"x", "j"}, {"y", "j"}, {"j", "⊤"}}));
}

inline rclkit::RclStructure identity(std::shared_ptr<const rclkit::FiniteLattice> L) {
  std::vector<rclkit::Elem> id(L->size());
  for (rclkit::Elem i = 0; i < id.size(); ++i) id[i] = i;
  return rclkit::RclStructure(L, id, id);
}

}  // namespace fixtures
