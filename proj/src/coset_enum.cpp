#include "symgen/coset_enum.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace symgen {

ExactMatrix canonical_form(ExactMatrix const& m, std::size_t permuted_rows) {
  std::size_t const n = m.dim();
  std::size_t const k = permuted_rows == 0 ? n : std::min(permuted_rows, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
            [&](std::size_t a, std::size_t b) { return compare_rows(m.row(a), m.row(b)) > 0; });
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(order[i], j);
  }
  return out;
}

CanonicalCoset canonicalize(ExactMatrix const& m, FamilySpec const& spec, Word witness) {
  return CanonicalCoset{canonical_form(m, spec.n()), std::move(witness)};
}

CapExceeded::CapExceeded(std::uint64_t cap, std::uint64_t discovered)
    : std::runtime_error("coset cap exceeded: more than " + std::to_string(cap) +
                         " cosets discovered (" + std::to_string(discovered) +
                         "); the image is probably infinite"),
      cap_(cap),
      discovered_(discovered) {}

std::uint64_t default_cap(FamilySpec const& spec) {
  std::size_t const n = spec.n();
  switch (spec.family()) {
    case Family::A: return 10 * (n + 1);
    case Family::D: return 10 * (std::uint64_t{1} << (n - 1));
    case Family::E:
      if (n == 6) return 10 * 72;
      if (n == 7) return 10 * 576;
      if (n == 8) return 10 * 17280;
      return 0;
  }
  return 0;
}

unsigned default_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (char const* env = std::getenv("SYMGEN_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
  }
  return hw;
}

namespace {

// Nonzero entries of a generator matrix, by row.
struct SparseMatrix {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;

  explicit SparseMatrix(ExactMatrix const& m) : rows(m.dim()) {
    for (std::size_t k = 0; k < m.dim(); ++k) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (sgn(m(k, j)) != 0) rows[k].emplace_back(j, m(k, j));
      }
    }
  }
};

ExactMatrix right_multiply(ExactMatrix const& m, SparseMatrix const& g) {
  std::size_t const n = m.dim();
  ExactMatrix r(n);
  mpq_class tmp;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      auto const& x = m(i, k);
      if (sgn(x) == 0) continue;
      for (auto const& [j, v] : g.rows[k]) {
        if (v == 1) {
          mpq_add(r(i, j).get_mpq_t(), r(i, j).get_mpq_t(), x.get_mpq_t());
        } else {
          mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), v.get_mpq_t());
          mpq_add(r(i, j).get_mpq_t(), r(i, j).get_mpq_t(), tmp.get_mpq_t());
        }
      }
    }
  }
  return r;
}

// m * P_(i,i+1): swaps columns i and i+1, then re-canonicalizes.
ExactMatrix swap_columns_canonical(ExactMatrix const& m, std::size_t i, std::size_t n) {
  ExactMatrix s = m;
  for (std::size_t r = 0; r < s.dim(); ++r) std::swap(s(r, i), s(r, i + 1));
  return canonical_form(s, n);
}

struct CosetNode {
  std::uint32_t parent;
  std::uint32_t letter;
};

class CosetStore {
 public:
  std::uint32_t size() const { return static_cast<std::uint32_t>(canon_.size()); }
  ExactMatrix const& canon(std::uint32_t id) const { return *canon_[id]; }

  // Returns the id and whether it was new.
  std::pair<std::uint32_t, bool> insert(ExactMatrix&& m) {
    auto [it, fresh] = index_.try_emplace(std::move(m), size());
    if (fresh) canon_.push_back(&it->first);
    return {it->second, fresh};
  }
  std::uint32_t find(ExactMatrix const& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("coset missing from table: orbit not closed");
    return it->second;
  }

 private:
  std::unordered_map<ExactMatrix, std::uint32_t, ExactMatrixHash> index_;
  std::vector<ExactMatrix const*> canon_;
};

Word witness_of(std::uint32_t id, std::vector<CosetNode> const& nodes, std::size_t n) {
  Word w = Word::identity(n);
  while (id != 0) {
    w.letters.push_back(nodes[id].letter);
    id = nodes[id].parent;
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

}  // namespace

EnumerationReport enumerate(FamilySpec const& spec, EnumerateOptions options) {
  auto const start = std::chrono::steady_clock::now();
  std::uint64_t const cap = options.cap ? options.cap : default_cap(spec);
  if (cap == 0) throw std::invalid_argument("enumerate: an explicit cap is required for " + spec.name());
  unsigned const threads = options.threads ? options.threads : default_threads();

  Representation rep(spec);
  std::size_t const n = spec.n();
  std::vector<SparseMatrix> gens;
  for (auto const& g : rep.generators()) gens.emplace_back(g);

  CosetStore store;
  std::vector<CosetNode> nodes;
  store.insert(canonical_form(ExactMatrix::identity(rep.dim()), n));
  nodes.push_back({0, 0});

  // Level-synchronous BFS. Products for a chunk of the frontier are computed
  // (possibly in parallel) into a buffer, then inserted sequentially in
  // (frontier position, generator) order.
  std::size_t constexpr kChunk = 256;
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::size_t base = 0; base < frontier.size(); base += kChunk) {
      std::size_t const count = std::min(kChunk, frontier.size() - base);
      std::vector<ExactMatrix> buffer(count * gens.size());
      auto work = [&](std::size_t from, std::size_t to) {
        for (std::size_t slot = from; slot < to; ++slot) {
          std::size_t fi = slot / gens.size();
          std::size_t gi = slot % gens.size();
          buffer[slot] = canonical_form(right_multiply(store.canon(frontier[base + fi]), gens[gi]), n);
        }
      };
      std::size_t const total = buffer.size();
      if (threads <= 1 || total < 2 * threads) {
        work(0, total);
      } else {
        std::vector<std::thread> pool;
        std::size_t const step = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          std::size_t from = t * step, to = std::min(total, from + step);
          if (from < to) pool.emplace_back(work, from, to);
        }
        for (auto& th : pool) th.join();
      }
      for (std::size_t slot = 0; slot < total; ++slot) {
        auto [id, fresh] = store.insert(std::move(buffer[slot]));
        if (!fresh) continue;
        nodes.push_back({frontier[base + slot / gens.size()],
                         static_cast<std::uint32_t>(slot % gens.size())});
        next.push_back(id);
        if (store.size() > cap) throw CapExceeded(cap, store.size());
      }
    }
    frontier = std::move(next);
  }

  // Double cosets: orbits of the single cosets under the adjacent
  // transpositions, labelled in BFS order so each record's first member
  // carries the shortest, lexicographically least witness.
  std::uint32_t const index = store.size();
  std::vector<std::int32_t> orbit_of(index, -1);
  EnumerationReport report{spec, 0, {}, 0, 0, 1};
  report.index = index;
  report.threads = threads;
  std::uint64_t const control_order = spec.control_order();
  for (std::uint32_t id = 0; id < index; ++id) {
    if (orbit_of[id] >= 0) continue;
    auto const label = static_cast<std::int32_t>(report.records.size());
    std::deque<std::uint32_t> queue{id};
    orbit_of[id] = label;
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        std::uint32_t y = store.find(swap_columns_canonical(store.canon(x), i, n));
        if (orbit_of[y] < 0) {
          orbit_of[y] = label;
          queue.push_back(y);
        }
      }
    }
    report.records.push_back({witness_of(id, nodes, n), size, control_order / size});
  }
  report.group_order = static_cast<std::uint64_t>(index) * control_order;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ExactMatrix> double_coset_members(ExactMatrix const& canon, FamilySpec const& spec) {
  std::unordered_set<ExactMatrix, ExactMatrixHash> seen{canon};
  std::vector<ExactMatrix> order{canon};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t i = 0; i + 1 < spec.n(); ++i) {
      ExactMatrix y = swap_columns_canonical(order[head], i, spec.n());
      if (seen.insert(y).second) order.push_back(std::move(y));
    }
  }
  return order;
}

std::uint64_t coset_stabilizer_order(CanonicalCoset const& c, FamilySpec const& spec) {
  return spec.control_order() / double_coset_members(c.canon, spec).size();
}

bool same_double_coset(Word const& a, Word const& b, Representation const& rep) {
  ExactMatrix ca = canonical_form(evaluate_word(a, rep), rep.spec().n());
  ExactMatrix cb = canonical_form(evaluate_word(b, rep), rep.spec().n());
  auto members = double_coset_members(ca, rep.spec());
  return std::find(members.begin(), members.end(), cb) != members.end();
}

std::string format_report_text(EnumerationReport const& report) {
  auto const& subsets = report.spec.subsets();
  std::vector<std::string> labels;
  std::size_t width = std::string("Label [w]").size();
  for (auto const& r : report.records) {
    std::string l = r.rep_word.letters.empty() ? "[*]" : "[" + format_word(r.rep_word, subsets) + "]";
    width = std::max(width, l.size());
    labels.push_back(std::move(l));
  }
  std::ostringstream out;
  out << "W(" << report.spec.name() << "): control group S" << report.spec.n() << " of order "
      << report.spec.control_order() << ", " << report.spec.generator_count()
      << " symmetric generators\n";
  out << std::left << std::setw(static_cast<int>(width) + 2) << "Label [w]" << std::setw(36)
      << "Coset stabilizing subgroup order"
      << "|N:N^(w)|\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << labels[i] << std::setw(36)
        << report.records[i].stabilizer_order << report.records[i].size << "\n";
  }
  out << "Index: " << report.index << ", Rank: " << report.rank() << "\n";
  out << "Group order: " << report.index << " x " << report.spec.control_order() << " = "
      << report.group_order << "\n";
  return out.str();
}

std::string format_report_json(EnumerationReport const& report) {
  auto const& subsets = report.spec.subsets();
  nlohmann::ordered_json j;
  j["family"] = std::string(1, family_letter(report.spec.family()));
  j["n"] = report.spec.n();
  j["index"] = report.index;
  j["rank"] = report.rank();
  j["control_order"] = report.spec.control_order();
  j["group_order"] = report.group_order;
  auto& records = j["records"] = nlohmann::ordered_json::array();
  for (auto const& r : report.records) {
    records.push_back({{"label", r.rep_word.letters.empty() ? "*" : format_word(r.rep_word, subsets)},
                       {"length", r.rep_word.length()},
                       {"stabilizer_order", r.stabilizer_order},
                       {"size", r.size}});
  }
  j["timing"] = {{"seconds", report.seconds}, {"threads", report.threads}};
  return j.dump(2);
}

}  // namespace symgen
