#include "symgen/dihedral.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace symgen {

std::optional<Permutation> as_control_element(ExactMatrix const& m, std::size_t n) {
  if (m.dim() < n || !m.is_permutation_matrix()) return std::nullopt;
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::size_t j = 0;
    while (m(i, j) != 1) ++j;
    if (i >= n) {
      if (j != i) return std::nullopt;
    } else {
      if (j >= n) return std::nullopt;
      images[i] = static_cast<Point>(j);
    }
  }
  return Permutation(std::move(images));
}

DihedralIntersection dihedral_intersection_check(ExactMatrix const& ti, ExactMatrix const& tj,
                                                 std::size_t n, PermGroup const& bound,
                                                 std::size_t limit) {
  ExactMatrix const id = ExactMatrix::identity(ti.dim());
  if (!(ti * ti == id) || !(tj * tj == id)) {
    throw std::invalid_argument("dihedral_intersection_check: inputs must be involutions");
  }
  std::unordered_set<ExactMatrix, ExactMatrixHash> seen{id};
  std::vector<ExactMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<ExactMatrix> next;
    for (auto const& x : frontier) {
      for (auto const* g : {&ti, &tj}) {
        ExactMatrix y = x * *g;
        if (seen.insert(y).second) {
          if (seen.size() > limit) throw std::invalid_argument("dihedral_intersection_check: group too large");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  DihedralIntersection out;
  out.dihedral_order = seen.size();
  for (auto const& m : seen) {
    if (auto p = as_control_element(m, n)) out.intersection.push_back(std::move(*p));
  }
  std::sort(out.intersection.begin(), out.intersection.end());
  out.contained = std::all_of(out.intersection.begin(), out.intersection.end(),
                              [&](Permutation const& p) { return bound.contains(p); });
  return out;
}

DihedralIntersection dihedral_intersection_check(Representation const& rep, KSubset const& a,
                                                 KSubset const& b) {
  auto const& spec = rep.spec();
  auto const& subsets = spec.subsets();
  PermGroup const sn = PermGroup::symmetric(spec.n());
  std::vector<std::vector<Point>> sets{a, b};
  PermGroup stab = setwise_stabilizer(sn, sets);
  PermGroup bound = centralizer(sn, stab);
  return dihedral_intersection_check(rep.generator(subsets.index_of(a)),
                                     rep.generator(subsets.index_of(b)), spec.n(), bound);
}

}  // namespace symgen
