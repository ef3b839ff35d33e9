#include "symgen/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace symgen {

namespace {

std::vector<Permutation> closure(std::size_t degree, std::vector<Permutation> const& gens) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (auto const& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree) {
  for (auto const& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
  elements_ = closure(degree, generators_);
}

PermGroup PermGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::transposition(n, 1, 2));
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(cycle));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.elements_ = std::move(elements);
  // Greedy generating set: walk the elements in order, keep any element not
  // yet generated.
  std::vector<Permutation> current = closure(degree, {});
  for (auto const& x : g.elements_) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    g.generators_.push_back(x);
    current = closure(degree, g.generators_);
    if (current.size() == g.elements_.size()) break;
  }
  if (current != g.elements_) {
    throw std::invalid_argument("PermGroup::from_elements: element list is not a group");
  }
  return g;
}

bool PermGroup::contains(Permutation const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(PermGroup const& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](Permutation const& p) { return other.contains(p); });
}

std::string PermGroup::to_string() const {
  if (generators_.empty()) return "<()>";
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ',';
    s += generators_[i].to_string();
  }
  return s + ">";
}

std::uint64_t group_order(PermGroup const& g) { return g.order(); }

PermGroup pointwise_stabilizer(PermGroup const& g, std::span<const Point> points) {
  for (Point p : points) {
    if (p < 1 || p > g.degree()) throw std::invalid_argument("pointwise_stabilizer: invalid point");
  }
  std::vector<Permutation> keep;
  for (auto const& x : g.elements()) {
    if (std::all_of(points.begin(), points.end(), [&](Point p) { return x(p - 1) == p - 1; })) {
      keep.push_back(x);
    }
  }
  return PermGroup::from_elements(g.degree(), std::move(keep));
}

PermGroup setwise_stabilizer(PermGroup const& g, std::span<const std::vector<Point>> sets) {
  std::vector<std::vector<bool>> masks;
  for (auto const& s : sets) {
    std::vector<bool> m(g.degree(), false);
    for (Point p : s) {
      if (p < 1 || p > g.degree()) throw std::invalid_argument("setwise_stabilizer: invalid point");
      m[p - 1] = true;
    }
    masks.push_back(std::move(m));
  }
  std::vector<Permutation> keep;
  for (auto const& x : g.elements()) {
    bool ok = true;
    for (auto const& m : masks) {
      for (std::size_t i = 0; i < m.size() && ok; ++i) {
        if (m[i] && !m[x(static_cast<Point>(i))]) ok = false;
      }
    }
    if (ok) keep.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(keep));
}

PermGroup centralizer(PermGroup const& g, PermGroup const& h) {
  if (g.degree() != h.degree() || !h.is_subgroup_of(g)) {
    throw std::invalid_argument("centralizer: h is not contained in g");
  }
  std::vector<Permutation> keep;
  for (auto const& x : g.elements()) {
    bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                [&](Permutation const& y) { return x * y == y * x; });
    if (commutes) keep.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(keep));
}

}  // namespace symgen
