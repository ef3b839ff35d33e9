#include "symgen/representation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace symgen {

ExactMatrix perm_matrix(Permutation const& p, std::size_t dim) {
  if (p.degree() > dim) throw std::invalid_argument("perm_matrix: degree exceeds dimension");
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t j = i < p.degree() ? p(static_cast<Point>(i)) : i;
    m(i, j) = 1;
  }
  return m;
}

ExactMatrix e_block_matrix(std::size_t n) {
  if (n < 4) throw std::invalid_argument("e_block_matrix: n must be at least 4");
  ExactMatrix m = ExactMatrix::identity(n);
  Rational const two_thirds(2, 3);
  Rational const third(1, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) -= two_thirds;
    for (std::size_t j = 3; j < n; ++j) m(i, j) = third;
  }
  return m;
}

ExactMatrix e_generator_via(Permutation const& sigma) {
  std::size_t n = sigma.degree();
  return perm_matrix(sigma.inverse(), n) * e_block_matrix(n) * perm_matrix(sigma, n);
}

namespace {

void check_subset(FamilySpec const& spec, KSubset const& s) {
  spec.subsets().index_of(s);  // throws on wrong cardinality or bad points
}

// A permutation carrying {1..k} onto s, in order, and the rest onto the
// complement, in order.
Permutation carrier(std::size_t n, KSubset const& s) {
  std::vector<bool> in(n + 1, false);
  std::vector<Point> images;
  for (Point p : s) {
    in[p] = true;
    images.push_back(p - 1);
  }
  for (Point p = 1; p <= n; ++p) {
    if (!in[p]) images.push_back(p - 1);
  }
  return Permutation(std::move(images));
}

}  // namespace

ExactMatrix sym_gen_matrix(FamilySpec const& spec, KSubset const& s) {
  check_subset(spec, s);
  std::size_t const n = spec.n();
  switch (spec.family()) {
    case Family::A:
      return perm_matrix(Permutation::transposition(n + 1, s[0], static_cast<Point>(n + 1)), n + 1);
    case Family::D: {
      ExactMatrix m = ExactMatrix::identity(n);
      std::size_t i = s[0] - 1, j = s[1] - 1;
      m(i, i) = 0;
      m(j, j) = 0;
      m(i, j) = -1;
      m(j, i) = -1;
      return m;
    }
    case Family::E:
      return e_generator_via(carrier(n, s));
  }
  throw std::logic_error("unreachable");
}

Representation::Representation(FamilySpec spec) : spec_(std::move(spec)) {
  gens_.reserve(spec_.generator_count());
  for (auto const& s : spec_.subsets().all()) gens_.push_back(sym_gen_matrix(spec_, s));
}

std::vector<ExactMatrix> Representation::control_generator_images() const {
  std::vector<ExactMatrix> out;
  for (auto const& p : spec_.control_generators()) out.push_back(control(p));
  return out;
}

ExactMatrix evaluate_word(Word const& w, Representation const& rep) {
  if (w.control.degree() != rep.spec().n()) throw std::invalid_argument("evaluate_word: degree mismatch");
  ExactMatrix m = rep.control(w.control);
  for (auto x : w.letters) m = m * rep.generator(x);
  return m;
}

CheckReport verify_representation(FamilySpec const& spec) {
  Representation rep(spec);
  CheckReport r;
  r.title = "representation " + spec.name() + " (dimension " + std::to_string(rep.dim()) + ")";
  auto const& subsets = spec.subsets();
  ExactMatrix const id = ExactMatrix::identity(rep.dim());

  bool involutions = true, determinants = true;
  std::string first_bad;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto const& t = rep.generator(i);
    if (!(t * t == id)) {
      involutions = false;
      if (first_bad.empty()) first_bad = "t" + subset_to_string(subsets.at(i));
    }
    if (t.determinant() != -1) determinants = false;
  }
  r.add("generators are involutions", involutions, first_bad);
  r.add("generators have determinant -1", determinants);

  bool covariant = true;
  for (auto const& p : spec.control_generators()) {
    ExactMatrix P = rep.control(p);
    ExactMatrix Pinv = rep.control(p.inverse());
    for (std::size_t i = 0; i < subsets.size() && covariant; ++i) {
      if (!(Pinv * rep.generator(i) * P == rep.generator(subsets.image(i, p)))) covariant = false;
    }
  }
  r.add("covariance P^-1 t_S P = t_{S^pi} on control generators", covariant);

  bool perms = true;
  for (auto const& p : spec.control_generators()) {
    ExactMatrix P = rep.control(p);
    if (!P.is_permutation_matrix() || P.determinant() != p.sign()) perms = false;
  }
  r.add("control images are permutation matrices with det = sign", perms);

  if (auto const& rel = spec.relator()) {
    ExactMatrix img = evaluate_word(*rel, rep);
    r.add("relator " + format_word(*rel, subsets) + " evaluates to I", img.is_identity());
  } else {
    r.add("no relator needed (S_1 control group)", true);
  }
  return r;
}

CheckReport e_block_constants_check() {
  Rational const a = 1, b(-2, 3), c(1, 3), a2 = 1, b2 = 0, c2 = 0;
  CheckReport r;
  r.title = "E block constants a=1 b=-2/3 c=1/3 a'=1 b'=0 c'=0";
  r.add("c(a+a'+3b+3b') = 0", c * (a + a2 + 3 * b + 3 * b2) == 0);
  r.add("c'(a+a'+3b+3b') = 0", c2 * (a + a2 + 3 * b + 3 * b2) == 0);
  r.add("a^2 = a'^2 = 1", a * a == 1 && a2 * a2 == 1);
  r.add("2ab+3b^2+3cc' = 0", 2 * a * b + 3 * b * b + 3 * c * c2 == 0);
  r.add("2a'b'+3b'^2+3cc' = 0", 2 * a2 * b2 + 3 * b2 * b2 + 3 * c * c2 == 0);
  r.add("(a+3b)(a'+3b') = -1", (a + 3 * b) * (a2 + 3 * b2) == -1);
  return r;
}

IrreducibilityWitness irreducibility_witness(FamilySpec const& spec) {
  if (spec.family() != Family::E) throw std::invalid_argument("irreducibility_witness: family must be E");
  std::size_t const n = spec.n();
  ExactMatrix t = sym_gen_matrix(spec, {1, 2, 3});
  std::vector<Rational> ones(n, Rational(1));
  IrreducibilityWitness w;
  w.image_of_all_ones = t.apply(ones);
  // Scalar multiple of (1,...,1) iff all coordinates agree.
  w.all_ones_fixed_up_to_scalar =
      std::all_of(w.image_of_all_ones.begin(), w.image_of_all_ones.end(),
                  [&](Rational const& x) { return x == w.image_of_all_ones[0]; });
  // The hyperplane sum(x) = 0 is spanned by e_i - e_{i+1}.
  w.perp_invariant = true;
  for (std::size_t i = 0; i + 1 < n && w.perp_invariant; ++i) {
    std::vector<Rational> x(n, Rational(0));
    x[i] = 1;
    x[i + 1] = -1;
    auto y = t.apply(x);
    Rational s = 0;
    for (auto const& v : y) s += v;
    if (s != 0) w.perp_invariant = false;
  }
  return w;
}

ExactMatrix dn_e_matrix(FamilySpec const& spec, Point i, Point j) {
  KSubset s{std::min(i, j), std::max(i, j)};
  return perm_matrix(Permutation::transposition(spec.n(), i, j), spec.n()) * sym_gen_matrix(spec, s);
}

CheckReport dn_structure_check(FamilySpec const& spec) {
  if (spec.family() != Family::D || spec.n() > 8) {
    throw std::invalid_argument("dn_structure_check: needs family D with n <= 8");
  }
  std::size_t const n = spec.n();
  Representation rep(spec);
  auto const& subsets = spec.subsets();
  auto t = [&](Point a, Point b) -> ExactMatrix const& {
    return rep.generator(subsets.index_of({a, b}));
  };
  auto P = [&](Point a, Point b) { return perm_matrix(Permutation::transposition(n, a, b), n); };
  ExactMatrix const id = ExactMatrix::identity(n);

  CheckReport r;
  r.title = "D" + std::to_string(n) + " e_{ij} calculus";

  r.add("t12 t13 = (23) t12", t(1, 2) * t(1, 3) == P(2, 3) * t(1, 2));

  // Conjugating by (2,3) keeps the product inside its double coset.
  r.add("t12 t34 ~ t13 t24 via (2,3)", P(2, 3) * t(1, 2) * t(3, 4) * P(2, 3) == t(1, 3) * t(2, 4));

  bool disjoint_commute = true;
  for (std::size_t x = 0; x < subsets.size(); ++x) {
    for (std::size_t y = 0; y < subsets.size(); ++y) {
      if (subsets.mask_of(x) & subsets.mask_of(y)) continue;
      if (!(rep.generator(x) * rep.generator(y) == rep.generator(y) * rep.generator(x))) {
        disjoint_commute = false;
      }
    }
  }
  r.add("disjoint t_{ij}, t_{kl} commute", disjoint_commute);

  bool diagonal = true, squares = true, commute = true, product_rule = true;
  std::vector<ExactMatrix> es;
  for (Point i = 1; i <= n; ++i) {
    for (Point j = i + 1; j <= n; ++j) {
      ExactMatrix e = dn_e_matrix(spec, i, j);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Rational expect = a != b ? 0 : (a + 1 == i || a + 1 == j ? -1 : 1);
          if (e(a, b) != expect) diagonal = false;
        }
      }
      if (!(e * e == id)) squares = false;
      es.push_back(std::move(e));
    }
  }
  for (auto const& x : es) {
    for (auto const& y : es) {
      if (!(x * y == y * x)) commute = false;
    }
  }
  for (Point i = 1; i <= n; ++i) {
    for (Point j = 1; j <= n; ++j) {
      for (Point k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!(dn_e_matrix(spec, i, j) * dn_e_matrix(spec, i, k) == dn_e_matrix(spec, j, k))) {
          product_rule = false;
        }
      }
    }
  }
  r.add("e_{ij} = diag with -1 at i, j", diagonal);
  r.add("e_{ij}^2 = I", squares);
  r.add("all e_{ij} commute", commute);
  r.add("e_{ij} e_{ik} = e_{jk}", product_rule);

  std::vector<ExactMatrix> gens;
  for (Point j = 2; j <= n; ++j) gens.push_back(dn_e_matrix(spec, 1, j));
  std::unordered_set<ExactMatrix, ExactMatrixHash> seen{id};
  std::vector<ExactMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<ExactMatrix> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        ExactMatrix y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::uint64_t expect = std::uint64_t{1} << (n - 1);
  r.add("|<e_12,...,e_1n>| = 2^(n-1)", seen.size() == expect,
        std::to_string(seen.size()) + " elements");
  return r;
}

}  // namespace symgen
