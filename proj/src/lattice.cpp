#include "rclkit/lattice.hpp"

#include <algorithm>

namespace rclkit {

std::string_view canonical_alias(std::string_view name) {
  if (name == "bot") return "⊥";
  if (name == "top") return "⊤";
  return name;
}

void FiniteLattice::index_names() {
  by_name_.clear();
  by_name_.reserve(names_.size());
  for (Elem i = 0; i < names_.size(); ++i) {
    if (!by_name_.emplace(names_[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate element name '" + names_[i] + "'");
  }
}

std::optional<Elem> FiniteLattice::try_find(std::string_view name) const {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) return it->second;
  const auto canon = canonical_alias(name);
  if (auto it = by_name_.find(std::string(canon)); it != by_name_.end()) return it->second;
  if (canon == "⊥") return bottom_;
  if (canon == "⊤") return top_;
  return std::nullopt;
}

Elem FiniteLattice::find(std::string_view name) const {
  if (auto e = try_find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "no element named '" + std::string(name) + "'");
}

FiniteLattice FiniteLattice::build(std::vector<std::string> names,
                                   const std::vector<std::pair<std::string, std::string>>& order) {
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  auto lookup = [&](const std::string& n) {
    if (auto it = index.find(n); it != index.end()) return it->second;
    if (auto it = index.find(std::string(canonical_alias(n))); it != index.end()) return it->second;
    throw Error(ErrorKind::UnknownElement, "order pair references undeclared element '" + n + "'");
  };
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(order.size());
  for (const auto& [x, y] : order) pairs.emplace_back(lookup(x), lookup(y));
  return build_indexed(std::move(names), pairs);
}

FiniteLattice FiniteLattice::build_indexed(std::vector<std::string> names,
                                           const std::vector<std::pair<Elem, Elem>>& order) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::NoBound, "empty carrier has no bounds");
  if (n > kMaxExplicitElements)
    throw Error(ErrorKind::BoundExceeded, "explicit lattices are limited to 4096 elements");

  FiniteLattice L;
  L.names_ = std::move(names);
  L.index_names();

  std::vector<std::vector<Elem>> succ(n);
  for (const auto& [x, y] : order) {
    if (x >= n || y >= n) throw Error(ErrorKind::UnknownElement, "order pair index out of range");
    succ[x].push_back(y);
  }

  // Reachability by DFS from every element.
  L.up_.assign(n, ElementSet(n));
  std::vector<Elem> stack;
  for (Elem s = 0; s < n; ++s) {
    auto& seen = L.up_[s];
    seen.set(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      const Elem v = stack.back();
      stack.pop_back();
      for (Elem w : succ[v]) {
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
  }
  L.down_.assign(n, ElementSet(n));
  for (Elem a = 0; a < n; ++a) L.up_[a].for_each([&](std::size_t b) { L.down_[b].set(a); });

  for (Elem a = 0; a < n; ++a) {
    bool cycle = false;
    Elem other = 0;
    L.up_[a].for_each([&](std::size_t b) {
      if (!cycle && b != a && L.up_[b].test(a)) {
        cycle = true;
        other = static_cast<Elem>(b);
      }
    });
    if (cycle)
      throw Error(ErrorKind::CycleDetected,
                  "'" + L.names_[a] + "' and '" + L.names_[other] + "' are mutually below each other");
  }

  L.materialize_bounds_and_tables();
  return L;
}

void FiniteLattice::materialize_bounds_and_tables() {
  const std::size_t n = size();
  std::optional<Elem> bottom, top;
  for (Elem a = 0; a < n; ++a) {
    if (up_[a].count() == n) bottom = a;
    if (down_[a].count() == n) top = a;
  }
  if (!bottom) throw Error(ErrorKind::NoBound, "no least element");
  if (!top) throw Error(ErrorKind::NoBound, "no greatest element");
  bottom_ = *bottom;
  top_ = *top;

  std::vector<std::size_t> down_count(n), up_count(n);
  for (Elem a = 0; a < n; ++a) {
    down_count[a] = down_[a].count();
    up_count[a] = up_[a].count();
  }

  // The glb of a and b is the common lower bound whose down-set is the whole
  // set of common lower bounds; dually for the lub.
  auto extremal = [](const ElementSet& bounds, const std::vector<std::size_t>& counts) -> std::optional<Elem> {
    const std::size_t target = bounds.count();
    std::optional<Elem> found;
    bounds.for_each([&](std::size_t g) {
      if (!found && counts[g] == target) found = static_cast<Elem>(g);
    });
    return found;
  };

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const auto m = extremal(down_[a] & down_[b], down_count);
      if (!m)
        throw Error(ErrorKind::NotALattice,
                    "'" + names_[a] + "' and '" + names_[b] + "' have no greatest lower bound");
      const auto j = extremal(up_[a] & up_[b], up_count);
      if (!j)
        throw Error(ErrorKind::NotALattice,
                    "'" + names_[a] + "' and '" + names_[b] + "' have no least upper bound");
      meet_[a * n + b] = meet_[b * n + a] = *m;
      join_[a * n + b] = join_[b * n + a] = *j;
    }
  }
}

FiniteLattice FiniteLattice::powerset(const std::vector<std::string>& items) {
  if (items.size() > 12)
    throw Error(ErrorKind::BoundExceeded, "explicit powersets are limited to 12 items");
  const std::size_t n = std::size_t{1} << items.size();
  FiniteLattice L;
  L.names_.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1u) {
        if (!first) s += ',';
        s += items[i];
        first = false;
      }
    }
    s += '}';
    L.names_.push_back(std::move(s));
  }
  L.index_names();
  L.up_.assign(n, ElementSet(n));
  L.down_.assign(n, ElementSet(n));
  L.meet_.resize(n * n);
  L.join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & b) == a) {
        L.up_[a].set(b);
        L.down_[b].set(a);
      }
      L.meet_[a * n + b] = static_cast<Elem>(a & b);
      L.join_[a * n + b] = static_cast<Elem>(a | b);
    }
  }
  L.bottom_ = 0;
  L.top_ = static_cast<Elem>(n - 1);
  return L;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = size();
  for (Elem x = 0; x < n; ++x) {
    up_[x].for_each([&](std::size_t y) {
      if (y == x) return;
      // y covers x iff nothing lies strictly between them.
      const ElementSet between = up_[x] & down_[y];
      if (between.count() == 2) out.emplace_back(x, static_cast<Elem>(y));
    });
  }
  return out;
}

Elem lattice_op(const FiniteLattice& lattice, LatticeOp which, Elem a, Elem b) {
  if (a >= lattice.size() || b >= lattice.size())
    throw Error(ErrorKind::UnknownElement, "element index out of range");
  return which == LatticeOp::Meet ? lattice.meet(a, b) : lattice.join(a, b);
}

Extrema subset_extrema(const FiniteLattice& lattice, const ElementSet& subset) {
  if (subset.width() != lattice.size())
    throw Error(ErrorKind::UnknownElement, "subset does not range over this lattice");
  Extrema r{lattice.top(), lattice.bottom()};
  subset.for_each([&](std::size_t x) {
    r.inf = lattice.meet(r.inf, static_cast<Elem>(x));
    r.sup = lattice.join(r.sup, static_cast<Elem>(x));
  });
  return r;
}

ElementSet principal_filter(const FiniteLattice& lattice, Elem a) {
  if (a >= lattice.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
  return lattice.up_set(a);
}

}  // namespace rclkit
