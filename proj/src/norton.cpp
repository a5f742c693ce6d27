#include "fischer/norton.hpp"

#include "fischer/coxeter.hpp"
#include "fischer/phi.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace fischer {

namespace {

template <FiniteField F> std::vector<Mat<F>> products(const Realized<F>& real, std::uint64_t& class_size)
{
  const auto pts = enumerate_class(real.space, real.cls);
  class_size = pts.size();
  std::vector<Mat<F>> t;
  for (const auto& v : pts)
    t.push_back(matrix_of(real.space, real.cls, v));
  const int n = real.space.dim();
  const Mat<F> id = Mat<F>::Identity(n, n);
  std::map<std::vector<std::uint8_t>, Mat<F>> s;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (!real.space.bilinear(pts[a], pts[b]).is_zero())
        continue;
      Mat<F> p = t[a] * t[b];
      if (Mat<F>(p * p) != id || p == id)
        throw ContractFailure("product of two commuting transpositions is not an involution");
      s.emplace(detail::matrix_key<F>(p), std::move(p));
    }
  std::vector<Mat<F>> out;
  for (auto& [k, m] : s)
    out.push_back(std::move(m));
  return out;
}

struct Tally {
  std::map<int, std::uint64_t> histogram;
  std::vector<NortonViolation> violations;
  std::uint64_t tested = 0;
};

template <FiniteField F> void tally(const std::vector<Mat<F>>& s, int i, int j, Tally& out)
{
  const int order = matrix_order<F>(Mat<F>(s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)]),
                                    kDefaultOrderCap);
  ++out.histogram[order];
  ++out.tested;
  if (order == 0 || order > kNortonOrderBound)
    out.violations.push_back({i, j, order});
}

} // namespace

NortonReport norton_check(const GroupSpec& spec, std::uint64_t budget, std::uint64_t seed, int threads)
{
  NortonReport rep;
  rep.spec = spec;
  if (!is_classical(spec))
    throw Unsupported("norton check needs a classical group, got " + to_string(spec));
  if (budget == 0)
    throw ConfigError("norton budget must be positive");
  std::visit(
      [&](const auto& real) {
        using F = typename std::decay_t<decltype(real.space)>::Scalar;
        const std::vector<Mat<F>> s = products<F>(real, rep.class_size);
        const std::uint64_t k = s.size();
        rep.s_size = k;
        rep.pairs_total = k * (k + 1) / 2;
        rep.exhaustive = rep.pairs_total <= budget;
        if (!rep.exhaustive)
          rep.seed = seed;
        // Row i covers pairs (i, j), j >= i. Rows are split into contiguous
        // blocks, one per thread, and merged in row order.
        const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::uint64_t>(k, 1))));
        std::vector<Tally> parts(static_cast<std::size_t>(workers));
        auto run_rows = [&](int w) {
          const int lo = static_cast<int>(k * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers));
          const int hi = static_cast<int>(k * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers));
          Tally& out = parts[static_cast<std::size_t>(w)];
          for (int i = lo; i < hi; ++i) {
            const std::uint64_t row = k - static_cast<std::uint64_t>(i);
            if (rep.exhaustive) {
              for (int j = i; j < static_cast<int>(k); ++j)
                tally<F>(s, i, j, out);
              continue;
            }
            // this row's share of the budget, proportional to its length
            const std::uint64_t before = static_cast<std::uint64_t>(i) * (2 * k - static_cast<std::uint64_t>(i) + 1) / 2;
            const std::uint64_t q0 = before * budget / rep.pairs_total;
            const std::uint64_t q1 = (before + row) * budget / rep.pairs_total;
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
            std::uniform_int_distribution<std::uint64_t> pick(0, row - 1);
            for (std::uint64_t q = q0; q < q1; ++q)
              tally<F>(s, i, i + static_cast<int>(pick(rng)), out);
          }
        };
        if (workers == 1) {
          run_rows(0);
        } else {
          std::vector<std::thread> pool;
          for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_rows, w);
          for (auto& th : pool)
            th.join();
        }
        for (const auto& p : parts) {
          for (const auto& [o, c] : p.histogram)
            rep.histogram[o] += c;
          rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
          rep.pairs_tested += p.tested;
        }
      },
      realize(spec));
  for (const auto& [o, c] : rep.histogram)
    rep.max_order_seen = std::max(rep.max_order_seen, o == 0 ? kDefaultOrderCap + 1 : o);
  return rep;
}

} // namespace fischer
