// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion is timed against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symgen/coset_enum.hpp"
#include "symgen/dihedral.hpp"
#include "symgen/expected.hpp"
#include "symgen/gf2.hpp"
#include "symgen/oracles.hpp"
#include "symgen/perm_group.hpp"
#include "symgen/progenitor.hpp"
#include "symgen/properties.hpp"
#include "symgen/representation.hpp"

using namespace symgen;

namespace {

// Collects failures for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, std::string const& what) {
    if (!ok) failures.push_back(what);
  }
};

EnumerationReport run_enumeration(FamilySpec const& spec, Outcome& out) {
  EnumerationReport report = enumerate(spec);
  auto exp = expected_counts(spec);
  out.expect(exp.has_value(), spec.name() + ": no expected table");
  if (exp) {
    CheckReport c = check_enumeration(report, *exp);
    for (auto const& check : c.checks) out.expect(check.passed, spec.name() + ": " + check.name + " " + check.detail);
  }
  return report;
}

void criterion_a_tower(Outcome& out) {
  for (std::size_t n = 2; n <= 7; ++n) {
    FamilySpec spec(Family::A, n);
    auto r = run_enumeration(spec, out);
    out.expect(r.index == n + 1 && r.rank() == 2 && r.group_order == factorial(n + 1),
               spec.name() + ": index/rank/order");
    auto p = check_oracle_agreement(spec, 500, kDefaultSeed + n);
    out.expect(p.passed(), p.name + ": " + p.first_failure);
  }
}

void criterion_d_tower(Outcome& out) {
  for (std::size_t n = 4; n <= 8; ++n) {
    FamilySpec spec(Family::D, n);
    auto r = run_enumeration(spec, out);
    out.expect(r.index == (std::uint64_t{1} << (n - 1)) && r.rank() == n / 2 + 1 &&
                   r.group_order == (factorial(n) << (n - 1)),
               spec.name() + ": index/rank/order");
    for (std::size_t m = 0; m < r.records.size(); ++m) {
      out.expect(r.records[m].rep_word == dn_standard_word(m, spec), spec.name() + ": representative " +
                                                                          std::to_string(m));
    }
    out.expect(dn_structure_check(spec).passed(), spec.name() + ": D structure checks");
    auto p = check_oracle_agreement(spec, 500, kDefaultSeed + n);
    out.expect(p.passed(), p.name + ": " + p.first_failure);
  }
  // D4 image against the even-signed permutations, both by closure.
  FamilySpec d4(Family::D, 4);
  Representation rep(d4);
  std::vector<ExactMatrix> gens = rep.generators();
  for (auto const& c : rep.control_generator_images()) gens.push_back(c);
  std::set<SignedPermutation> seen{SignedPermutation::identity(4)};
  std::vector<ExactMatrix> queue{ExactMatrix::identity(4)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& g : gens) {
      ExactMatrix x = queue[head] * g;
      auto s = as_signed_permutation(x);
      if (!s) {
        out.expect(false, "D4: image element is not a signed permutation");
        return;
      }
      if (seen.insert(*s).second) queue.push_back(std::move(x));
    }
  }
  auto even = d_oracle_elements(4);
  out.expect(seen.size() == 192, "D4: image order " + std::to_string(seen.size()));
  out.expect(std::set<SignedPermutation>(even.begin(), even.end()) == seen, "D4: image = even signed permutations");
}

void criterion_e(std::size_t n, Outcome& out) {
  FamilySpec spec(Family::E, n);
  auto r = run_enumeration(spec, out);
  std::ostringstream s;
  s << "index " << r.index << ", rank " << r.rank() << ", order " << r.group_order << ", sizes";
  for (auto const& rec : r.records) s << ' ' << rec.size;
  out.notes.push_back(s.str());
}

void criterion_representations(Outcome& out) {
  for (std::size_t n = 1; n <= 8; ++n) {
    FamilySpec spec(Family::A, n);
    out.expect(verify_representation(spec).passed(), spec.name() + ": representation checks");
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    FamilySpec spec(Family::D, n);
    out.expect(verify_representation(spec).passed(), spec.name() + ": representation checks");
  }
  for (std::size_t n = 6; n <= 8; ++n) {
    FamilySpec spec(Family::E, n);
    out.expect(verify_representation(spec).passed(), spec.name() + ": representation checks");
  }
  out.expect(e_block_constants_check().passed(), "E block constants");
}

void criterion_mod2(Outcome& out) {
  for (std::size_t n = 6; n <= 8; ++n) {
    auto r = gf2_suite(FamilySpec(Family::E, n));
    for (auto const& c : r.checks) out.expect(c.passed, "E" + std::to_string(n) + ": " + c.name + " " + c.detail);
    for (auto const& w : r.warnings) out.notes.push_back("E" + std::to_string(n) + " report: " + w);
  }
}

Permutation cycle(std::size_t n, std::vector<Point> pts) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
  return Permutation(img);
}

void criterion_tables(Outcome& out) {
  std::vector<Point> const pts{1, 2};
  for (std::size_t n = 2; n <= 8; ++n) {
    PermGroup sn = PermGroup::symmetric(n);
    PermGroup stab = pointwise_stabilizer(sn, pts);
    PermGroup expect_stab = PermGroup::trivial(n);
    if (n >= 4) {
      std::vector<Point> rest;
      for (Point p = 3; p <= n; ++p) rest.push_back(p);
      expect_stab = PermGroup(n, {cycle(n, {3, 4}), cycle(n, rest)});
    }
    out.expect(stab == expect_stab, "n=" + std::to_string(n) + ": Stab(1,2) = " + stab.to_string());
    PermGroup cent = centralizer(sn, stab);
    std::vector<Permutation> gens{cycle(n, {1, 2})};
    if (n == 3) gens.push_back(cycle(n, {1, 2, 3}));
    if (n == 4) gens.push_back(cycle(n, {3, 4}));
    out.expect(cent == PermGroup(n, gens), "n=" + std::to_string(n) + ": centralizer = " + cent.to_string());
  }
}

void criterion_properties(Outcome& out) {
  std::size_t const trials = 500;
  std::vector<PropertyResult> results;
  std::vector<FamilySpec> specs;
  for (std::size_t n = 2; n <= 7; ++n) specs.emplace_back(Family::A, n);
  for (std::size_t n = 4; n <= 8; ++n) specs.emplace_back(Family::D, n);
  for (std::size_t n = 6; n <= 8; ++n) specs.emplace_back(Family::E, n);
  for (auto const& spec : specs) {
    results.push_back(check_word_homomorphism(spec, trials, kDefaultSeed));
    results.push_back(check_canonical_invariance(spec, trials, kDefaultSeed + 1));
    results.push_back(check_dihedral_containment(spec, trials, kDefaultSeed + 5));
    if (spec.family() == Family::D) results.push_back(check_shorten_invariance(spec, trials, kDefaultSeed + 2));
    if (spec.family() != Family::E) results.push_back(check_oracle_agreement(spec, trials, kDefaultSeed + 3));
    if (spec.family() == Family::E) results.push_back(check_mod2_homomorphism(spec, trials, kDefaultSeed + 4));
  }
  for (auto const& r : results) {
    out.expect(r.passed() && r.trials >= trials, r.name + ": " + std::to_string(r.failures) + "/" +
                                                     std::to_string(r.trials) + " " + r.first_failure);
  }
  out.notes.push_back(std::to_string(results.size()) + " suites of " + std::to_string(trials) + " trials");
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "A_n tower n=2..7 with oracle words", 1.0, criterion_a_tower},
      {2, "D_n tower n=4..8, representatives and D4 image", 5.0, criterion_d_tower},
      {3, "E6 enumeration", 10.0, [](Outcome& o) { criterion_e(6, o); }},
      {4, "E7 enumeration", 60.0, [](Outcome& o) { criterion_e(7, o); }},
      {5, "E8 enumeration", 600.0, [](Outcome& o) { criterion_e(8, o); }},
      {6, "representation checks for every family", 1.0, criterion_representations},
      {7, "mod-2 suite E6, E7, E8", 60.0, criterion_mod2},
      {8, "Stab(1,2) and centralizer tables n=2..8", 5.0, criterion_tables},
      {9, "property suites", 600.0, criterion_properties},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    Outcome out;
    auto const start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (std::exception const& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      out.failures.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    bool const ok = out.failures.empty();
    failed += !ok;
    std::printf("Criterion %d: %s  %s (%.2f s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs);
    for (auto const& n : out.notes) std::printf("    %s\n", n.c_str());
    for (auto const& f : out.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
