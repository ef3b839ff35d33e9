#include "symgen/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "symgen/coset_enum.hpp"
#include "symgen/expected.hpp"
#include "symgen/representation.hpp"

namespace symgen {

Gf2Matrix::Gf2Matrix(std::size_t dim) : dim_(dim) {
  if (dim > kMaxGf2Dim) throw std::invalid_argument("Gf2Matrix: dimension above 8");
}

Gf2Matrix::Gf2Matrix(std::size_t dim, std::span<const Gf2Vector> rows) : Gf2Matrix(dim) {
  if (rows.size() != dim) throw std::invalid_argument("Gf2Matrix: row count mismatch");
  std::copy(rows.begin(), rows.end(), rows_.begin());
}

Gf2Matrix Gf2Matrix::identity(std::size_t dim) {
  Gf2Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i] = static_cast<Gf2Vector>(1u << i);
  return m;
}

Gf2Matrix Gf2Matrix::parse(std::span<const std::string> rows) {
  Gf2Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("Gf2Matrix::parse: not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1') throw std::invalid_argument("Gf2Matrix::parse: expected 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool v) {
  if (v) {
    rows_[i] = static_cast<Gf2Vector>(rows_[i] | (1u << j));
  } else {
    rows_[i] = static_cast<Gf2Vector>(rows_[i] & ~(1u << j));
  }
}

int parity(Gf2Vector x) { return std::popcount(static_cast<unsigned>(x)) & 1; }

Gf2Vector Gf2Matrix::apply(Gf2Vector x) const {
  Gf2Vector y = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (parity(static_cast<Gf2Vector>(rows_[i] & x))) y = static_cast<Gf2Vector>(y | (1u << i));
  }
  return y;
}

Gf2Vector Gf2Matrix::apply_row(Gf2Vector x) const {
  Gf2Vector y = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if ((x >> i) & 1u) y ^= rows_[i];
  }
  return y;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t.set(j, i, (*this)(i, j));
  }
  return t;
}

bool Gf2Matrix::is_permutation_matrix() const {
  Gf2Vector cols = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (std::popcount(static_cast<unsigned>(rows_[i])) != 1) return false;
    cols |= rows_[i];
  }
  return std::popcount(static_cast<unsigned>(cols)) == static_cast<int>(dim_);
}

std::uint64_t Gf2Matrix::canonical_key() const {
  std::array<Gf2Vector, kMaxGf2Dim> sorted = rows_;
  std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(dim_));
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < dim_; ++i) key |= std::uint64_t{sorted[i]} << (8 * i);
  return key;
}

std::vector<std::string> Gf2Matrix::to_rows() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(vector_to_string(rows_[i], dim_));
  return out;
}

Gf2Matrix operator*(Gf2Matrix const& a, Gf2Matrix const& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Gf2Matrix product: dimension mismatch");
  std::vector<Gf2Vector> rows(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) rows[i] = b.apply_row(a.row(i));
  return Gf2Matrix(a.dim(), rows);
}

std::string vector_to_string(Gf2Vector x, std::size_t dim) {
  std::string s(dim, '0');
  for (std::size_t j = 0; j < dim; ++j) {
    if ((x >> j) & 1u) s[j] = '1';
  }
  return s;
}

Gf2Matrix reduce_mod2(ExactMatrix const& m) {
  if (m.dim() > kMaxGf2Dim) throw std::invalid_argument("reduce_mod2: dimension above 8");
  Gf2Matrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      auto const& q = m(i, j);
      if (mpz_even_p(q.get_den_mpz_t())) {
        throw std::invalid_argument("reduce_mod2: even denominator has no image mod 2");
      }
      // The denominator is odd, hence a unit congruent to 1.
      out.set(i, j, mpz_odd_p(q.get_num_mpz_t()) != 0);
    }
  }
  return out;
}

int Gf2Form::quadratic(Gf2Vector x) const {
  if (kind != FormKind::SumOfDistinctProducts) {
    throw std::logic_error("Gf2Form::quadratic: form has no quadratic part");
  }
  // sum_{i<j} x_i x_j = C(wt(x), 2).
  int w = std::popcount(static_cast<unsigned>(x));
  return (w * (w - 1) / 2) & 1;
}

int Gf2Form::bilinear(Gf2Vector x, Gf2Vector y) const {
  switch (kind) {
    case FormKind::SumOfDistinctProducts:
      return quadratic(static_cast<Gf2Vector>(x ^ y)) ^ quadratic(x) ^ quadratic(y);
    case FormKind::BilinearJ:
      return parity(x) & parity(y);
    case FormKind::Gram:
      return parity(static_cast<Gf2Vector>(x & gram.apply(y)));
  }
  return 0;
}

std::string Gf2Form::name() const {
  switch (kind) {
    case FormKind::SumOfDistinctProducts: return "sum_of_distinct_products/" + std::to_string(dim);
    case FormKind::BilinearJ: return "bilinear_j/" + std::to_string(dim);
    case FormKind::Gram: return "gram/" + std::to_string(dim);
  }
  return "?";
}

bool preserves_form(Gf2Matrix const& m, Gf2Form const& f) {
  if (m.dim() != f.dim) throw std::invalid_argument("preserves_form: dimension mismatch");
  unsigned const count = 1u << f.dim;
  switch (f.kind) {
    case FormKind::SumOfDistinctProducts:
      for (unsigned x = 0; x < count; ++x) {
        auto v = static_cast<Gf2Vector>(x);
        if (f.quadratic(m.apply(v)) != f.quadratic(v)) return false;
      }
      return true;
    case FormKind::BilinearJ:
    case FormKind::Gram:
      for (unsigned x = 0; x < count; ++x) {
        for (unsigned y = 0; y < count; ++y) {
          auto vx = static_cast<Gf2Vector>(x), vy = static_cast<Gf2Vector>(y);
          Gf2Vector mx = f.kind == FormKind::BilinearJ ? m.apply_row(vx) : m.apply(vx);
          Gf2Vector my = f.kind == FormKind::BilinearJ ? m.apply_row(vy) : m.apply(vy);
          if (f.bilinear(mx, my) != f.bilinear(vx, vy)) return false;
        }
      }
      return true;
  }
  return false;
}

std::vector<Gf2Vector> echelon_basis(std::span<const Gf2Vector> vectors) {
  std::vector<Gf2Vector> basis;  // each with a distinct lowest set bit
  for (Gf2Vector v : vectors) {
    for (Gf2Vector b : basis) {
      if (v & (b & -b)) v ^= b;
    }
    if (!v) continue;
    Gf2Vector pivot = static_cast<Gf2Vector>(v & -v);
    for (auto& b : basis) {
      if (b & pivot) b ^= v;
    }
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(),
            [](Gf2Vector a, Gf2Vector b) { return (a & -a) < (b & -b); });
  return basis;
}

std::vector<Gf2Vector> fixed_vectors(std::span<const Gf2Matrix> gens) {
  if (gens.empty()) throw std::invalid_argument("fixed_vectors: no generators");
  std::size_t const dim = gens[0].dim();
  std::vector<Gf2Vector> fixed;
  for (unsigned x = 1; x < (1u << dim); ++x) {
    auto v = static_cast<Gf2Vector>(x);
    if (std::all_of(gens.begin(), gens.end(), [&](Gf2Matrix const& g) { return g.apply(v) == v; })) {
      fixed.push_back(v);
    }
  }
  return echelon_basis(fixed);
}

std::vector<Gf2Vector> spin(Gf2Vector seed, std::span<const Gf2Matrix> gens) {
  std::vector<Gf2Vector> basis = echelon_basis(std::span<const Gf2Vector>(&seed, 1));
  std::size_t done = 0;
  std::vector<Gf2Vector> pending(basis);
  while (done < pending.size()) {
    Gf2Vector v = pending[done++];
    for (auto const& g : gens) {
      Gf2Vector w = g.apply(v);
      std::vector<Gf2Vector> grown = basis;
      grown.push_back(w);
      grown = echelon_basis(grown);
      if (grown.size() > basis.size()) {
        basis = std::move(grown);
        pending.push_back(w);
      }
    }
  }
  return basis;
}

bool spin_irreducible(std::span<const Gf2Matrix> gens) {
  if (gens.empty()) throw std::invalid_argument("spin_irreducible: no generators");
  std::size_t const dim = gens[0].dim();
  for (unsigned x = 1; x < (1u << dim); ++x) {
    if (spin(static_cast<Gf2Vector>(x), gens).size() < dim) return false;
  }
  return true;
}

namespace {

// Coordinates of x (in the span of an echelon basis) with respect to it.
Gf2Vector coordinates(Gf2Vector x, std::vector<Gf2Vector> const& basis) {
  Gf2Vector c = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Gf2Vector pivot = static_cast<Gf2Vector>(basis[i] & -basis[i]);
    if (x & pivot) {
      x ^= basis[i];
      c = static_cast<Gf2Vector>(c | (1u << i));
    }
  }
  if (x) throw std::invalid_argument("vector outside the subspace");
  return c;
}

}  // namespace

Gf2Matrix RestrictedModule::restrict(Gf2Matrix const& g) const {
  // Row convention first: row a holds the coordinates of basis[a] * g.
  Gf2Matrix row_form(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Gf2Vector c = coordinates(g.apply_row(basis[a]), basis);
    for (std::size_t b = 0; b < basis.size(); ++b) row_form.set(a, b, (c >> b) & 1u);
  }
  return row_form.transpose();
}

RestrictedModule restrict_to_perp(std::span<const Gf2Matrix> gens, Gf2Vector v,
                                  Gf2Form const& perp_form, Gf2Form const& carried_form) {
  if (gens.empty()) throw std::invalid_argument("restrict_to_perp: no generators");
  std::size_t const dim = gens[0].dim();
  for (auto const& g : gens) {
    if (g.apply(v) != v) throw std::invalid_argument("restrict_to_perp: v is not fixed");
  }
  std::vector<Gf2Vector> perp;
  for (unsigned x = 1; x < (1u << dim); ++x) {
    auto u = static_cast<Gf2Vector>(x);
    if (perp_form.bilinear(u, v) == 0) perp.push_back(u);
  }
  RestrictedModule out;
  out.basis = echelon_basis(perp);
  for (auto const& g : gens) {
    for (Gf2Vector b : out.basis) {
      Gf2Vector image = g.apply_row(b);
      if (perp_form.bilinear(image, v) != 0) {
        throw std::invalid_argument("restrict_to_perp: v^perp is not invariant");
      }
    }
  }
  for (auto const& g : gens) out.gens.push_back(out.restrict(g));

  std::size_t const d = out.basis.size();
  Gf2Matrix gram(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      gram.set(a, b, carried_form.bilinear(out.basis[a], out.basis[b]) != 0);
    }
  }
  out.form = Gf2Form::from_gram(gram);
  out.alternating = true;
  for (unsigned x = 0; x < (1u << d); ++x) {
    if (out.form.bilinear(static_cast<Gf2Vector>(x), static_cast<Gf2Vector>(x))) out.alternating = false;
  }
  std::vector<Gf2Vector> rows;
  for (std::size_t a = 0; a < d; ++a) rows.push_back(gram.row(a));
  out.nondegenerate = echelon_basis(rows).size() == d;
  out.form_invariant = std::all_of(out.gens.begin(), out.gens.end(),
                                   [&](Gf2Matrix const& g) { return preserves_form(g, out.form); });
  return out;
}

std::vector<Gf2Matrix> gf2_generators(FamilySpec const& spec, bool with_control) {
  Representation rep(spec);
  std::vector<Gf2Matrix> out;
  for (auto const& t : rep.generators()) out.push_back(reduce_mod2(t));
  if (with_control) {
    for (auto const& p : rep.control_generator_images()) out.push_back(reduce_mod2(p));
  }
  return out;
}

Gf2ImageOrder gf2_image_order(FamilySpec const& spec, std::uint64_t cap) {
  if (spec.family() != Family::E) throw std::invalid_argument("gf2_image_order: family must be E");
  if (cap == 0) cap = default_cap(spec);
  if (cap == 0) throw std::invalid_argument("gf2_image_order: an explicit cap is required");
  std::vector<Gf2Matrix> gens = gf2_generators(spec, false);

  auto const from_key = [&](std::uint64_t key) {
    std::vector<Gf2Vector> rows(spec.dim());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<Gf2Vector>(key >> (8 * i));
    return Gf2Matrix(spec.dim(), rows);
  };
  std::uint64_t const start = Gf2Matrix::identity(spec.dim()).canonical_key();
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Gf2Matrix m = from_key(queue[head]);
    for (auto const& g : gens) {
      std::uint64_t key = (m * g).canonical_key();
      if (seen.insert(key).second) {
        queue.push_back(key);
        if (seen.size() > cap) throw CapExceeded(cap, seen.size());
      }
    }
  }
  return {seen.size(), seen.size() * spec.control_order()};
}

}  // namespace symgen

namespace symgen {

namespace {

Gf2Matrix evaluate_mod2(Word const& w, FamilySpec const& spec) {
  Representation rep(spec);
  Gf2Matrix m = reduce_mod2(rep.control(w.control));
  for (auto x : w.letters) m = m * reduce_mod2(rep.generator(x));
  return m;
}

std::string basis_to_string(std::vector<Gf2Vector> const& basis, std::size_t dim) {
  if (basis.empty()) return "zero subspace";
  std::string s = "span{";
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? "," : "") + vector_to_string(basis[i], dim);
  return s + "}";
}

}  // namespace

CheckReport gf2_suite(FamilySpec const& spec) {
  CheckReport r;
  r.title = "mod 2 " + spec.name();
  std::size_t const dim = spec.dim();
  if (dim > kMaxGf2Dim) {
    r.warnings.push_back("mod 2 checks need dimension <= 8; skipped");
    return r;
  }
  std::vector<Gf2Matrix> const all = gf2_generators(spec, true);

  if (spec.family() != Family::E) {
    bool perms = std::all_of(all.begin(), all.end(), [](Gf2Matrix const& g) { return g.is_permutation_matrix(); });
    r.add("reduced images are permutation matrices", perms);
    return r;
  }

  Gf2Matrix const t = reduce_mod2(sym_gen_matrix(spec, {1, 2, 3}));
  Gf2Matrix block = Gf2Matrix::identity(dim);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 3; j < dim; ++j) block.set(i, j, true);
  }
  r.add("t{1,2,3} mod 2 = [I3, J; 0, I]", t == block);

  Gf2Form const form = spec.n() == 7 ? Gf2Form::bilinear_j(dim) : Gf2Form::sum_of_distinct_products(dim);
  bool preserved = std::all_of(all.begin(), all.end(), [&](Gf2Matrix const& g) { return preserves_form(g, form); });
  r.add("generators and control images preserve " + form.name(), preserved);

  if (auto const& rel = spec.relator()) {
    r.add("relator holds mod 2", evaluate_mod2(*rel, spec).is_identity());
  }

  Gf2Vector const ones = static_cast<Gf2Vector>((1u << dim) - 1);
  auto fixed = fixed_vectors(all);
  Gf2Vector const image = t.apply(ones);
  std::string const image_text = vector_to_string(image, dim);
  bool const irreducible = spin_irreducible(all);

  if (spec.n() == 7) {
    r.add("common fixed space is span{1^7}", fixed.size() == 1 && fixed[0] == ones, basis_to_string(fixed, dim));
    r.add("7-dimensional module is reducible", !irreducible);
    try {
      RestrictedModule res = restrict_to_perp(all, ones, Gf2Form::bilinear_j(dim),
                                              Gf2Form::sum_of_distinct_products(dim));
      r.add("(1^7)^perp has dimension 6", res.basis.size() == 6, basis_to_string(res.basis, dim));
      r.add("restricted form is symplectic", res.symplectic());
      r.add("restricted generators preserve the restricted form", res.form_invariant);
      r.add("6-dimensional restriction is spin-irreducible", spin_irreducible(res.gens));
      if (auto const& rel = spec.relator()) {
        // Restriction reverses products (column convention of a row action).
        Representation rep(spec);
        Gf2Matrix m = res.restrict(reduce_mod2(rep.control(rel->control)));
        for (auto x : rel->letters) m = res.restrict(reduce_mod2(rep.generator(x))) * m;
        r.add("relator holds on the 6-dimensional module", m.is_identity());
      }
    } catch (std::invalid_argument const& e) {
      r.add("restriction to (1^7)^perp", false, e.what());
    }
  } else {
    r.add("no nonzero common fixed vector", fixed.empty(), basis_to_string(fixed, dim));
    r.add(std::to_string(dim) + "-dimensional module is spin-irreducible", irreducible);
    if (spec.n() == 8) r.add("t{1,2,3} 1^8 = (0^3,1^5)", image_text == "00011111", image_text);
  }
  r.warnings.push_back("t{1,2,3} applied to the all-ones column: " + image_text);

  try {
    Gf2ImageOrder order = gf2_image_order(spec);
    std::string detail = std::to_string(order.cosets) + " cosets x " + std::to_string(spec.control_order()) +
                         " = " + std::to_string(order.order);
    if (auto exp = expected_counts(spec); exp && exp->gf2_order) {
      if (spec.n() == 6) {
        r.add("GF(2) image order equals |W(E6)|", order.order == *exp->gf2_order, detail);
      } else {
        r.add("GF(2) image order measured", true, detail);
        if (order.order != *exp->gf2_order) {
          r.warnings.push_back("GF(2) image order " + std::to_string(order.order) + " differs from the prediction " +
                               std::to_string(*exp->gf2_order) + " (" + exp->gf2_note + ")");
        }
      }
    } else {
      r.add("GF(2) image order measured", true, detail);
    }
  } catch (CapExceeded const& e) {
    r.add("GF(2) image order", false, e.what());
  }
  return r;
}

}  // namespace symgen
