#ifndef FISCHER_CHAINS_HPP
#define FISCHER_CHAINS_HPP

// Chains of transpositions: validation, extension, exhaustive search for
// the longest chain, isometry extension, and the S_{m+1} generated by a chain.

#include "fischer/coxeter.hpp"
#include "fischer/errors.hpp"
#include "fischer/formspace.hpp"
#include "fischer/linalg.hpp"
#include "fischer/transpositions.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace fischer {

template <FiniteField F> struct Chain {
  ClassSpec cls;
  std::vector<Vec<F>> elems;

  int length() const { return static_cast<int>(elems.size()); }
};

struct ChainCheck {
  bool ok = true;
  std::string violation;
  int i = -1;
  int j = -1;

  explicit operator bool() const { return ok; }
};

template <FiniteField F>
ChainCheck is_chain(const FormSpace<F>& space, const ClassSpec& cls, const std::vector<Vec<F>>& vs)
{
  ChainCheck out;
  auto fail = [&](std::string what, int i, int j) {
    out.ok = false;
    out.violation = std::move(what);
    out.i = i;
    out.j = j;
    return out;
  };
  const int k = static_cast<int>(vs.size());
  std::vector<Vec<F>> reps;
  for (int i = 0; i < k; ++i) {
    if (vs[static_cast<std::size_t>(i)].size() != space.dim())
      throw PreconditionError("chain vector has the wrong dimension");
    if (!in_class_D(space, cls, vs[static_cast<std::size_t>(i)]))
      return fail("element " + std::to_string(i + 1) + " is not in D", i, i);
    reps.push_back(canonical_rep(vs[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto& a = reps[static_cast<std::size_t>(i)];
      const auto& b = reps[static_cast<std::size_t>(j)];
      if (a == b)
        return fail("elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide", i, j);
      const bool commute = space.bilinear(a, b).is_zero();
      if (j == i + 1 && commute)
        return fail("neighbours " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + " commute", i, j);
      if (j > i + 1 && !commute)
        return fail("elements " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + " do not commute", i, j);
    }
  }
  return out;
}

template <FiniteField F> ChainCheck is_chain(const FormSpace<F>& space, const Chain<F>& chain)
{
  return is_chain(space, chain.cls, chain.elems);
}

/// Canonical D-vectors x such that chain + x is again a chain, ascending.
template <FiniteField F>
std::vector<Vec<F>> extend_candidates(const FormSpace<F>& space, const ClassSpec& cls, const std::vector<Vec<F>>& chain)
{
  if (chain.empty())
    return enumerate_class(space, cls);
  std::vector<std::pair<Vec<F>, F>> constraints;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    constraints.emplace_back(chain[i], F(0));
  const auto sol = solve_linear(space, constraints);
  std::vector<Vec<F>> reps;
  for (const auto& c : chain)
    reps.push_back(canonical_rep(c));
  const Vec<F>& last = chain.back();
  std::vector<Vec<F>> out;
  for_each_solution(sol, [&](const Vec<F>& x) {
    if (!is_canonical(x) || space.bilinear(x, last).is_zero() || !in_class_D(space, cls, x))
      return false;
    if (std::find(reps.begin(), reps.end(), x) != reps.end())
      return false;
    out.push_back(x);
    return false;
  });
  std::sort(out.begin(), out.end(), [](const Vec<F>& a, const Vec<F>& b) { return lex_less(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// Witt extension

template <FiniteField F> struct PartialIsometry {
  std::vector<Vec<F>> domain;
  std::vector<Vec<F>> image;
};

template <FiniteField F> ChainCheck check_partial_isometry(const FormSpace<F>& space, const PartialIsometry<F>& p)
{
  ChainCheck out;
  auto fail = [&](std::string what) {
    out.ok = false;
    out.violation = std::move(what);
    return out;
  };
  const int n = space.dim();
  if (p.domain.size() != p.image.size())
    return fail("domain and image sizes differ");
  if (!linearly_independent(p.domain, n) || !linearly_independent(p.image, n))
    return fail("domain or image is not independent");
  for (std::size_t i = 0; i < p.domain.size(); ++i) {
    for (std::size_t j = 0; j < p.domain.size(); ++j) {
      if (space.bilinear(p.domain[i], p.domain[j]) != space.bilinear(p.image[i], p.image[j]))
        return fail("form values differ");
    }
    if (space.kind() == FormKind::OrthogonalF2 && space.quadratic(p.domain[i]) != space.quadratic(p.image[i]))
      return fail("quadratic values differ");
  }
  return out;
}

/// A full isometry agreeing with `p` on its domain. The domain is extended
/// by standard basis vectors, each time solving for an image with the
/// required inner products (and Q value) outside the current image span.
template <FiniteField F> Mat<F> witt_extend(const FormSpace<F>& space, const PartialIsometry<F>& p)
{
  if (!space.nondegenerate())
    throw PreconditionError("witt_extend needs a nondegenerate space");
  if (auto chk = check_partial_isometry(space, p); !chk)
    throw PreconditionError("not a partial isometry: " + chk.violation);
  const int n = space.dim();
  std::vector<Vec<F>> dom = p.domain;
  std::vector<Vec<F>> img = p.image;
  EchelonBasis<F> dom_span(n);
  EchelonBasis<F> img_span(n);
  for (const auto& v : dom)
    dom_span.insert(v);
  for (const auto& v : img)
    img_span.insert(v);

  const bool need_q = space.kind() == FormKind::OrthogonalF2;
  const bool need_norm = space.kind() == FormKind::Unitary || space.kind() == FormKind::OrthogonalF3;

  for (int j = 0; j < n && static_cast<int>(dom.size()) < n; ++j) {
    const Vec<F> e = unit_vector<F>(n, j);
    if (dom_span.contains(e))
      continue;
    std::vector<std::pair<Vec<F>, F>> constraints;
    for (std::size_t i = 0; i < dom.size(); ++i)
      constraints.emplace_back(img[i], space.bilinear(e, dom[i]));
    const auto sol = solve_linear(space, constraints);
    const F norm = space.bilinear(e, e);
    const F qval = need_q ? space.quadratic(e) : F(0);
    std::optional<Vec<F>> pick;
    for_each_solution(sol, [&](const Vec<F>& y) {
      if (need_norm && space.bilinear(y, y) != norm)
        return false;
      if (need_q && space.quadratic(y) != qval)
        return false;
      if (img_span.contains(y))
        return false;
      pick = y;
      return true;
    });
    if (!pick)
      throw ContractFailure("witt_extend: no image for basis vector " + std::to_string(j + 1));
    dom.push_back(e);
    img.push_back(*pick);
    dom_span.insert(e);
    img_span.insert(*pick);
  }

  const Mat<F> d = columns_to_matrix(dom, n);
  const Mat<F> m = columns_to_matrix(img, n) * *inverse<F>(d);
  if (!space.is_isometry(m))
    throw ContractFailure("witt_extend: result is not an isometry");
  for (std::size_t i = 0; i < p.domain.size(); ++i) {
    if (Vec<F>(m * p.domain[i]) != p.image[i])
      throw ContractFailure("witt_extend: result does not restrict to the partial map");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Search

enum class Reduction { Auto, None, FirstVertex, ChainOrbit };

inline const char* reduction_name(Reduction r)
{
  switch (r) {
  case Reduction::Auto: return "auto";
  case Reduction::None: return "none";
  case Reduction::FirstVertex: return "first-vertex";
  case Reduction::ChainOrbit: return "chain-orbit";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Auto uses the first-vertex reduction up to this dimension and the
// chain-orbit reduction above it.
inline constexpr int kAutoFirstVertexMaxDim = 6;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  Reduction reduction = Reduction::Auto;
  int threads = 1;
  // chain-orbit mode: skipped siblings confirmed equivalent by witt_extend
  int orbit_spot_checks = 16;
};

template <FiniteField F> struct SearchOutcome {
  int max_length = 0;
  Chain<F> witness;
  std::uint64_t nodes_explored = 0;
  bool used_symmetry_reduction = false;
  Reduction reduction = Reduction::None;
  // stopped early because a chain of length dim + 1 was found
  bool reached_dimension_bound = false;
};

inline constexpr int kMaxSearchDim = 16;

template <FiniteField F> class ChainSearch {
  using Word = std::uint64_t;
  using Coords = std::array<F, kMaxSearchDim>;

public:
  ChainSearch(FormSpace<F> space, ClassSpec cls)
  : space_(std::move(space))
  , cls_(cls)
  {
    detail::check_class(space_, cls_);
    if (space_.dim() > kMaxSearchDim)
      throw ConfigError("search dimension above " + std::to_string(kMaxSearchDim));
    points_ = enumerate_class(space_, cls_);
    n_ = static_cast<int>(points_.size());
    words_ = (n_ + 63) / 64;
    coords_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      Coords c{};
      for (int k = 0; k < space_.dim(); ++k)
        c[static_cast<std::size_t>(k)] = points_[static_cast<std::size_t>(i)](k);
      coords_[static_cast<std::size_t>(i)] = c;
    }
    nonorth_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
    for (int i = 0; i < n_; ++i) {
      const Vec<F> gv = space_.gram() * conj<F>(points_[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n_; ++j) {
        if (!points_[static_cast<std::size_t>(j)].dot(gv).is_zero())
          row(nonorth_, i)[j / 64] |= Word{1} << (j % 64);
      }
    }
  }

  const FormSpace<F>& space() const { return space_; }
  const ClassSpec& cls() const { return cls_; }
  const std::vector<Vec<F>>& points() const { return points_; }
  int bound() const { return space_.dim() + 1; }

  std::optional<int> index_of(const Vec<F>& v) const
  {
    const Vec<F> c = canonical_rep(v);
    auto it = std::lower_bound(points_.begin(), points_.end(), c,
                               [](const Vec<F>& a, const Vec<F>& b) { return lex_less(a, b); });
    if (it == points_.end() || *it != c)
      return std::nullopt;
    return static_cast<int>(it - points_.begin());
  }

  /// Whether the isometry group is verified transitive on D (by extending
  /// D[0] -> d for every d).
  bool class_transitive() const
  {
    if (transitive_)
      return *transitive_;
    bool ok = space_.nondegenerate();
    for (int i = 1; ok && i < n_; ++i) {
      try {
        witt_extend(space_, PartialIsometry<F>{{points_[0]}, {points_[static_cast<std::size_t>(i)]}});
      } catch (const PreconditionError&) {
        ok = false;
      }
    }
    transitive_ = ok;
    return ok;
  }

  SearchOutcome<F> run(const SearchOptions& opt) const
  {
    SearchOutcome<F> out;
    out.witness.cls = cls_;
    if (n_ == 0)
      return out;

    Reduction mode = resolve(opt.reduction, opt.orbit_spot_checks);
    out.reduction = mode;
    out.used_symmetry_reduction = mode != Reduction::None;

    if (mode == Reduction::ChainOrbit) {
      Worker w(*this, opt.node_budget, true);
      w.spot_checks = opt.orbit_spot_checks;
      w.start_root(0);
      finish(out, w, opt);
      return out;
    }

    // Work items: the bare root, then each (root, second) pair.
    struct Item {
      int first;
      int second;
    };
    std::vector<Item> items;
    const int roots = mode == Reduction::FirstVertex ? 1 : n_;
    for (int a = 0; a < roots; ++a) {
      items.push_back({a, -1});
      const Word* nb = row(nonorth_, a);
      for (int b = 0; b < n_; ++b) {
        if (b != a && (nb[b / 64] >> (b % 64) & 1))
          items.push_back({a, b});
      }
    }

    struct Result {
      int best = 0;
      std::vector<int> chain;
      std::uint64_t nodes = 0;
      bool exhausted = false;
      bool hit_bound = false;
      bool cancelled = false;
    };
    std::vector<Result> results(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> bound_item{std::numeric_limits<std::size_t>::max()};

    auto work = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size())
          return;
        if (bound_item.load() < i) {
          results[i].cancelled = true;
          continue;
        }
        Worker w(*this, opt.node_budget, false);
        w.cancel_if_before = &bound_item;
        w.item_index = i;
        if (items[i].second < 0)
          w.visit_root_only(items[i].first);
        else
          w.start_pair(items[i].first, items[i].second);
        auto& r = results[i];
        r.best = w.best_len;
        r.chain = w.best_chain;
        r.nodes = w.nodes;
        r.exhausted = w.exhausted;
        r.hit_bound = w.hit_bound;
        r.cancelled = w.cancelled;
        if (w.hit_bound) {
          std::size_t cur = bound_item.load();
          while (i < cur && !bound_item.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back(work);
      for (auto& th : pool)
        th.join();
    }

    const std::size_t last = std::min(bound_item.load(), items.size() - 1);
    std::uint64_t nodes = 0;
    int best = 0;
    std::vector<int> chain;
    bool exhausted = false;
    for (std::size_t i = 0; i <= last; ++i) {
      const auto& r = results[i];
      if (r.cancelled)
        throw ContractFailure("search item cancelled before the bound item");
      nodes += r.nodes;
      exhausted = exhausted || r.exhausted;
      if (r.best > best) {
        best = r.best;
        chain = r.chain;
      }
    }
    if (exhausted || nodes > opt.node_budget)
      throw SearchIncomplete("node budget " + std::to_string(opt.node_budget) + " exceeded");
    out.nodes_explored = nodes;
    out.max_length = best;
    out.reached_dimension_bound = best >= bound();
    for (int idx : chain)
      out.witness.elems.push_back(points_[static_cast<std::size_t>(idx)]);
    return out;
  }

  /// Longest chain extending `prefix` (which must itself be a chain).
  SearchOutcome<F> run_from(const std::vector<Vec<F>>& prefix, const SearchOptions& opt) const
  {
    if (prefix.empty())
      return run(opt);
    if (auto chk = is_chain(space_, cls_, prefix); !chk)
      throw PreconditionError("prefix is not a chain: " + chk.violation);
    std::vector<int> idx;
    for (const auto& v : prefix)
      idx.push_back(*index_of(v));
    // Below a fixed prefix only the chain-orbit rule applies; it needs Witt.
    const bool orbit = opt.reduction == Reduction::ChainOrbit;
    if (orbit && !space_.nondegenerate())
      throw PreconditionError("chain-orbit reduction needs a nondegenerate space");
    Worker w(*this, opt.node_budget, orbit);
    w.spot_checks = opt.orbit_spot_checks;
    w.start_prefix(idx);
    SearchOutcome<F> out;
    out.witness.cls = cls_;
    out.reduction = orbit ? Reduction::ChainOrbit : Reduction::None;
    out.used_symmetry_reduction = orbit;
    finish(out, w, opt);
    return out;
  }

private:
  Reduction resolve(Reduction r, int spot_checks) const
  {
    if (r == Reduction::Auto) {
      if (!space_.nondegenerate())
        return Reduction::None;
      r = space_.dim() <= kAutoFirstVertexMaxDim ? Reduction::FirstVertex : Reduction::ChainOrbit;
    }
    if (r == Reduction::FirstVertex && !class_transitive())
      throw PreconditionError("first-vertex reduction needs a transitive isometry group on D");
    if (r == Reduction::ChainOrbit) {
      // Witt makes D one orbit in a nondegenerate space; confirm on a sample.
      if (!space_.nondegenerate())
        throw PreconditionError("chain-orbit reduction needs a nondegenerate space");
      const int step = std::max(1, n_ / std::max(1, spot_checks));
      for (int i = step; i < n_; i += step)
        witt_extend(space_, PartialIsometry<F>{{points_[0]}, {points_[static_cast<std::size_t>(i)]}});
    }
    return r;
  }

  void finish(SearchOutcome<F>& out, const auto& w, const SearchOptions& opt) const
  {
    if (w.exhausted || w.nodes > opt.node_budget)
      throw SearchIncomplete("node budget " + std::to_string(opt.node_budget) + " exceeded");
    out.nodes_explored = w.nodes;
    out.max_length = w.best_len;
    out.reached_dimension_bound = w.best_len >= bound();
    for (int idx : w.best_chain)
      out.witness.elems.push_back(points_[static_cast<std::size_t>(idx)]);
  }

  // Witt map fixing chain[0..k-1] and sending point x to a multiple of y.
  void confirm_equivalent(const std::vector<int>& chain, int k, int x, int y) const
  {
    const Vec<F>& last = points_[static_cast<std::size_t>(chain[static_cast<std::size_t>(k - 1)])];
    const Vec<F>& vx = points_[static_cast<std::size_t>(x)];
    const Vec<F>& vy = points_[static_cast<std::size_t>(y)];
    const F c = space_.bilinear(vx, last) * space_.bilinear(vy, last).inverse();
    PartialIsometry<F> p;
    for (int i = 0; i < k; ++i) {
      p.domain.push_back(points_[static_cast<std::size_t>(chain[static_cast<std::size_t>(i)])]);
      p.image.push_back(p.domain.back());
    }
    p.domain.push_back(vx);
    p.image.push_back((c * vy).eval());
    if (auto chk = check_partial_isometry(space_, p); !chk)
      throw ContractFailure("chain-orbit siblings are not isometric: " + chk.violation);
    witt_extend(space_, p);
  }

  static Word* row(std::vector<Word>& bits, int i, int words) { return bits.data() + static_cast<std::size_t>(i) * words; }
  Word* row(std::vector<Word>& bits, int i) const { return row(bits, i, words_); }
  const Word* row(const std::vector<Word>& bits, int i) const
  {
    return bits.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_);
  }

  // Echelon basis on fixed-size coordinate arrays, cheap to copy per level.
  struct SmallEchelon {
    std::array<Coords, kMaxSearchDim> rows{};
    std::array<int, kMaxSearchDim> piv{};
    int count = 0;

    bool insert(Coords x, int n)
    {
      for (int r = 0; r < count; ++r) {
        const F c = x[static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])];
        if (!c.is_zero())
          for (int k = 0; k < n; ++k)
            x[static_cast<std::size_t>(k)] -= c * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
      }
      int p = -1;
      for (int k = 0; k < n; ++k) {
        if (!x[static_cast<std::size_t>(k)].is_zero()) {
          p = k;
          break;
        }
      }
      if (p < 0)
        return false;
      const F inv = x[static_cast<std::size_t>(p)].inverse();
      for (int k = 0; k < n; ++k)
        x[static_cast<std::size_t>(k)] *= inv;
      rows[static_cast<std::size_t>(count)] = x;
      piv[static_cast<std::size_t>(count)] = p;
      ++count;
      return true;
    }
  };

  struct Worker {
    const ChainSearch& s;
    std::uint64_t budget;
    bool orbit;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool hit_bound = false;
    bool cancelled = false;
    int best_len = 0;
    std::vector<int> best_chain;
    const std::atomic<std::size_t>* cancel_if_before = nullptr;
    std::size_t item_index = 0;
    int spot_checks = 0;

    std::vector<int> chain;
    std::vector<Word> allowed; // level k: orthogonal to chain[0..k-1], members removed
    std::vector<SmallEchelon> ech;
    std::vector<Word> cand;

    Worker(const ChainSearch& search, std::uint64_t b, bool orb)
    : s(search)
    , budget(b)
    , orbit(orb)
    {
      const int levels = s.bound() + 2;
      allowed.assign(static_cast<std::size_t>(levels) * static_cast<std::size_t>(s.words_), 0);
      cand.assign(static_cast<std::size_t>(levels) * static_cast<std::size_t>(s.words_), 0);
      ech.resize(static_cast<std::size_t>(levels));
      Word* all = level(allowed, 0);
      for (int j = 0; j < s.n_; ++j)
        all[j / 64] |= Word{1} << (j % 64);
    }

    Word* level(std::vector<Word>& v, int k) { return v.data() + static_cast<std::size_t>(k) * s.words_; }

    // Push point idx as element k (0-based); returns whether it is independent.
    bool push(int idx, int k)
    {
      chain.resize(static_cast<std::size_t>(k));
      chain.push_back(idx);
      const Word* prev = level(allowed, k);
      Word* next = level(allowed, k + 1);
      const Word* nb = s.row(s.nonorth_, idx);
      for (int w = 0; w < s.words_; ++w)
        next[w] = prev[w] & ~nb[w];
      next[idx / 64] &= ~(Word{1} << (idx % 64));
      ech[static_cast<std::size_t>(k + 1)] = ech[static_cast<std::size_t>(k)];
      return ech[static_cast<std::size_t>(k + 1)].insert(s.coords_[static_cast<std::size_t>(idx)], s.space_.dim());
    }

    void visit_root_only(int a)
    {
      push(a, 0);
      count_node(1);
    }

    void start_root(int a)
    {
      const bool indep = push(a, 0);
      visit(1, !indep);
    }

    void start_pair(int a, int b)
    {
      push(a, 0);
      const bool indep = push(b, 1);
      visit(2, !indep);
    }

    void start_prefix(const std::vector<int>& idx)
    {
      bool indep = true;
      for (std::size_t k = 0; k < idx.size(); ++k)
        indep = push(idx[k], static_cast<int>(k));
      // the prefix itself is the root; nodes below it are counted
      best_len = static_cast<int>(idx.size());
      best_chain = chain;
      visit(static_cast<int>(idx.size()), !indep);
    }

    // Returns true when the whole search must stop.
    bool count_node(int k)
    {
      if (++nodes > budget) {
        exhausted = true;
        return true;
      }
      if (k > best_len) {
        best_len = k;
        best_chain.assign(chain.begin(), chain.begin() + k);
        if (best_len >= s.bound()) {
          hit_bound = true;
          return true;
        }
      }
      return false;
    }

    bool visit(int k, bool last_dependent)
    {
      if (count_node(k))
        return true;
      if (last_dependent)
        return false; // small lemma: a dependent element ends the chain
      if (cancel_if_before && (nodes & 0xfff) == 0 && cancel_if_before->load() < item_index) {
        cancelled = true;
        return true;
      }
      const int last = chain[static_cast<std::size_t>(k - 1)];
      const Word* prev = level(allowed, k - 1);
      const Word* nb = s.row(s.nonorth_, last);
      Word* c = level(cand, k);
      for (int w = 0; w < s.words_; ++w)
        c[w] = prev[w] & nb[w];
      c[last / 64] &= ~(Word{1} << (last % 64));
      int explored_independent = -1;
      for (int w = 0; w < s.words_; ++w) {
        Word bits = c[w];
        while (bits) {
          const int j = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const bool indep = push(j, k);
          if (orbit && indep) {
            if (explored_independent >= 0) {
              if (spot_checks > 0) {
                --spot_checks;
                s.confirm_equivalent(chain, k, explored_independent, j);
              }
              continue;
            }
            explored_independent = j;
          }
          if (visit(k + 1, !indep))
            return true;
        }
      }
      return false;
    }
  };

  FormSpace<F> space_;
  ClassSpec cls_;
  std::vector<Vec<F>> points_;
  std::vector<Coords> coords_;
  int n_ = 0;
  int words_ = 0;
  std::vector<Word> nonorth_;
  mutable std::optional<bool> transitive_;
};

template <FiniteField F>
SearchOutcome<F> max_chain(const FormSpace<F>& space, const ClassSpec& cls, const SearchOptions& opt = {})
{
  return ChainSearch<F>(space, cls).run(opt);
}

template <FiniteField F>
SearchOutcome<F> max_chain_from(const FormSpace<F>& space, const ClassSpec& cls, const std::vector<Vec<F>>& prefix,
                                const SearchOptions& opt = {})
{
  return ChainSearch<F>(space, cls).run_from(prefix, opt);
}

// ---------------------------------------------------------------------------
// Chains and symmetric groups

template <FiniteField F> struct SnEmbeddingReport {
  int degree = 0; // m + 1
  std::vector<Mat<F>> generators;
  RelationCheck relations;
  RelationCheck kernel_argument;
  std::optional<bool> injective_by_enumeration;

  bool ok() const { return relations.ok && kernel_argument.ok && injective_by_enumeration.value_or(true); }
};

inline constexpr int kDefaultEnumerationDegree = 7;

/// Generators s_i = t(elems[i]) of S_{m+1}, with the type-A relations and
/// the faithfulness checks. Full enumeration when m + 1 <= enumerate_up_to.
template <FiniteField F>
SnEmbeddingReport<F> chain_to_sn_embedding(const FormSpace<F>& space, const Chain<F>& chain,
                                           int enumerate_up_to = kDefaultEnumerationDegree)
{
  if (auto chk = is_chain(space, chain); !chk)
    throw PreconditionError("not a chain: " + chk.violation);
  SnEmbeddingReport<F> rep;
  rep.degree = chain.length() + 1;
  for (const auto& v : chain.elems)
    rep.generators.push_back(matrix_of(space, chain.cls, v));
  rep.relations = check_type_a_relations<F>(rep.generators);
  if (!rep.relations.ok)
    throw ContractFailure("chain generators violate a Coxeter relation: " + rep.relations.failure);
  rep.kernel_argument = check_kernel_argument<F>(rep.generators);
  if (!rep.kernel_argument.ok)
    throw ContractFailure("chain generators fail the kernel argument: " + rep.kernel_argument.failure);
  if (rep.degree <= enumerate_up_to)
    rep.injective_by_enumeration = injective_by_enumeration<F>(rep.generators, space.dim());
  return rep;
}

} // namespace fischer

#endif
