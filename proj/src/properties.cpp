#include "symgen/properties.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symgen/coset_enum.hpp"
#include "symgen/dihedral.hpp"
#include "symgen/gf2.hpp"
#include "symgen/oracles.hpp"
#include "symgen/progenitor.hpp"
#include "symgen/representation.hpp"

namespace symgen {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  // Fisher-Yates with our own index draws so the sequence is the same on
  // every standard library.
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = rng() % i;
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(std::move(images));
}

Word random_word(FamilySpec const& spec, std::mt19937_64& rng, std::size_t max_letters) {
  Word w{random_permutation(spec.n(), rng), {}};
  std::size_t const length = rng() % (max_letters + 1);
  for (std::size_t i = 0; i < length; ++i) {
    w.letters.push_back(static_cast<std::uint32_t>(rng() % spec.generator_count()));
  }
  free_reduce(w.letters);
  return w;
}

namespace {

std::string describe(Word const& w, FamilySpec const& spec) {
  return format_word(w, spec.subsets());
}

bool has_shared_point(Word const& w, FamilySpec const& spec) {
  auto const& s = spec.subsets();
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    for (std::size_t j = i + 1; j < w.letters.size(); ++j) {
      if (s.mask_of(w.letters[i]) & s.mask_of(w.letters[j])) return true;
    }
  }
  return false;
}

}  // namespace

PropertyResult check_word_homomorphism(FamilySpec const& spec, std::size_t trials, std::uint64_t seed) {
  PropertyResult r{"word homomorphism " + spec.name(), 0, 0, {}};
  std::mt19937_64 rng(seed);
  Representation rep(spec);
  ExactMatrix const id = ExactMatrix::identity(rep.dim());
  for (std::size_t i = 0; i < trials; ++i, ++r.trials) {
    Word a = random_word(spec, rng, 8);
    Word b = random_word(spec, rng, 8);
    ExactMatrix ma = evaluate_word(a, rep);
    if (!(evaluate_word(multiply(a, b, spec), rep) == ma * evaluate_word(b, rep))) {
      r.fail("product of " + describe(a, spec) + " and " + describe(b, spec));
      continue;
    }
    if (!(evaluate_word(inverse(a, spec), rep) * ma == id)) {
      r.fail("inverse of " + describe(a, spec));
      continue;
    }
    if (spec.family() == Family::A) {
      Word reduced = an_reduce(a, spec);
      if (reduced.length() > 1 || !(evaluate_word(reduced, rep) == ma)) {
        r.fail("an_reduce of " + describe(a, spec));
      }
    }
  }
  return r;
}

PropertyResult check_shorten_invariance(FamilySpec const& spec, std::size_t trials, std::uint64_t seed) {
  if (spec.family() != Family::D) throw std::invalid_argument("check_shorten_invariance: family must be D");
  PropertyResult r{"shorten_common_index invariance " + spec.name(), 0, 0, {}};
  std::mt19937_64 rng(seed);
  Representation rep(spec);
  for (std::size_t i = 0; i < trials; ++i, ++r.trials) {
    Word w = random_word(spec, rng, 10);
    Word s = shorten_common_index(w, spec);
    std::string const name = describe(w, spec);
    if (has_shared_point(s, spec)) {
      r.fail(name + ": result still shares a point");
    } else if (has_shared_point(w, spec) && s.length() >= w.length()) {
      r.fail(name + ": not shortened");
    } else if (!(evaluate_word(s, rep) == evaluate_word(w, rep))) {
      r.fail(name + ": element changed");
    } else if (!same_double_coset(w, s, rep)) {
      r.fail(name + ": double coset changed");
    } else if (!same_double_coset(w, dn_canonical(w, spec), rep)) {
      r.fail(name + ": dn_canonical left the double coset");
    }
  }
  return r;
}

PropertyResult check_canonical_invariance(FamilySpec const& spec, std::size_t trials, std::uint64_t seed) {
  PropertyResult r{"canonicalize row-permutation invariance " + spec.name(), 0, 0, {}};
  std::mt19937_64 rng(seed);
  Representation rep(spec);
  for (std::size_t i = 0; i < trials; ++i, ++r.trials) {
    Word w = random_word(spec, rng, 6);
    ExactMatrix m = evaluate_word(w, rep);
    Permutation pi = random_permutation(spec.n(), rng);
    if (!(canonical_form(rep.control(pi) * m, spec.n()) == canonical_form(m, spec.n()))) {
      r.fail(describe(w, spec) + " under " + pi.to_string());
    }
  }
  return r;
}

PropertyResult check_dihedral_containment(FamilySpec const& spec, std::size_t trials, std::uint64_t seed) {
  PropertyResult r{"dihedral intersection containment " + spec.name(), 0, 0, {}};
  std::mt19937_64 rng(seed);
  Representation rep(spec);
  auto const& subsets = spec.subsets();
  auto run = [&](std::size_t a, std::size_t b) {
    auto result = dihedral_intersection_check(rep, subsets.at(a), subsets.at(b));
    ++r.trials;
    if (!result.contained) {
      r.fail("t" + subset_to_string(subsets.at(a)) + ", t" + subset_to_string(subsets.at(b)));
    }
  };
  if (subsets.size() > 1) run(0, 1);
  while (r.trials < trials) {
    run(rng() % subsets.size(), rng() % subsets.size());
  }
  return r;
}

PropertyResult check_oracle_agreement(FamilySpec const& spec, std::size_t trials, std::uint64_t seed) {
  PropertyResult r{"oracle agreement " + spec.name(), 0, 0, {}};
  std::mt19937_64 rng(seed);
  Representation rep(spec);
  for (std::size_t i = 0; i < trials; ++i, ++r.trials) {
    Word w = random_word(spec, rng, 10);
    ExactMatrix m = evaluate_word(w, rep);
    switch (spec.family()) {
      case Family::A:
        if (!(m == perm_matrix(a_oracle_map(w, spec), rep.dim()))) r.fail(describe(w, spec));
        break;
      case Family::D: {
        SignedPermutation o = d_oracle_map(w, spec);
        auto read = as_signed_permutation(m);
        if (!read || !(*read == o)) {
          r.fail(describe(w, spec));
        } else if (o.negative_count() % 2 != 0) {
          r.fail(describe(w, spec) + ": odd number of sign flips");
        }
        break;
      }
      case Family::E:
        throw std::invalid_argument("check_oracle_agreement: no oracle for family E");
    }
  }
  return r;
}

PropertyResult check_mod2_homomorphism(FamilySpec const& spec, std::size_t trials, std::uint64_t seed) {
  if (spec.family() != Family::E) throw std::invalid_argument("check_mod2_homomorphism: family must be E");
  PropertyResult r{"mod-2 reduction homomorphism " + spec.name(), 0, 0, {}};
  std::mt19937_64 rng(seed);
  Representation rep(spec);
  for (std::size_t i = 0; i < trials; ++i, ++r.trials) {
    Word a = random_word(spec, rng, 5);
    Word b = random_word(spec, rng, 5);
    ExactMatrix ma = evaluate_word(a, rep), mb = evaluate_word(b, rep);
    if (!(reduce_mod2(ma * mb) == reduce_mod2(ma) * reduce_mod2(mb))) {
      r.fail(describe(a, spec) + " times " + describe(b, spec));
    }
  }
  return r;
}

}  // namespace symgen
