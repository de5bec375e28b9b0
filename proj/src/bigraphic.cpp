#include "fanramsey/bigraphic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fanramsey {

const char* to_string(BigraphicFailure f) {
  switch (f) {
    case BigraphicFailure::None:
      return "none";
    case BigraphicFailure::NegativeEntry:
      return "negative entry";
    case BigraphicFailure::EntryTooLarge:
      return "entry exceeds opposite side size";
    case BigraphicFailure::SumMismatch:
      return "degree sums differ";
    case BigraphicFailure::PrefixViolated:
      return "Gale-Ryser prefix inequality violated";
  }
  return "?";
}

BigraphicCertificate is_bigraphic(const DegreePairSpec& spec) {
  BigraphicCertificate cert;
  const auto a = static_cast<int>(spec.xs.size());
  const auto b = static_cast<int>(spec.ys.size());
  auto fail = [&](BigraphicFailure f) {
    cert.failure = f;
    return cert;
  };
  for (int x : spec.xs)
    if (x < 0) return fail(BigraphicFailure::NegativeEntry);
  for (int y : spec.ys)
    if (y < 0) return fail(BigraphicFailure::NegativeEntry);
  const long long sx = std::accumulate(spec.xs.begin(), spec.xs.end(), 0LL);
  const long long sy = std::accumulate(spec.ys.begin(), spec.ys.end(), 0LL);
  if (sx != sy) {
    cert.lhs = sx;
    cert.rhs = sy;
    return fail(BigraphicFailure::SumMismatch);
  }
  for (int x : spec.xs)
    if (x > b) return fail(BigraphicFailure::EntryTooLarge);
  for (int y : spec.ys)
    if (y > a) return fail(BigraphicFailure::EntryTooLarge);

  std::vector<int> xs = spec.xs;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  long long prefix = 0;
  for (int k = 1; k <= a; ++k) {
    prefix += xs[static_cast<std::size_t>(k - 1)];
    long long cap = 0;
    for (int y : spec.ys) cap += std::min(y, k);
    if (prefix > cap) {
      cert.violated_k = k;
      cert.lhs = prefix;
      cert.rhs = cap;
      return fail(BigraphicFailure::PrefixViolated);
    }
  }
  cert.bigraphic = true;
  return cert;
}

std::vector<bool> BipartiteRealization::left_mask() const {
  std::vector<bool> mask(static_cast<std::size_t>(a + b), false);
  std::fill(mask.begin(), mask.begin() + a, true);
  return mask;
}

BipartiteRealization realize_bigraphic(const DegreePairSpec& spec) {
  const auto cert = is_bigraphic(spec);
  if (!cert) {
    std::string msg = std::string("degree pair is not bigraphic: ") + to_string(cert.failure);
    if (cert.failure == BigraphicFailure::PrefixViolated) {
      msg += " at k=" + std::to_string(cert.violated_k) + " (" + std::to_string(cert.lhs) + " > " +
             std::to_string(cert.rhs) + ")";
    }
    throw RealizationError(msg);
  }
  const int a = static_cast<int>(spec.xs.size());
  const int b = static_cast<int>(spec.ys.size());

  std::vector<int> x_order(static_cast<std::size_t>(a));
  std::iota(x_order.begin(), x_order.end(), 0);
  std::stable_sort(x_order.begin(), x_order.end(), [&](int i, int j) {
    return spec.xs[static_cast<std::size_t>(i)] > spec.xs[static_cast<std::size_t>(j)];
  });
  std::vector<int> residual = spec.ys;
  std::vector<int> y_order(static_cast<std::size_t>(b));
  std::vector<Edge> edges;
  for (int i : x_order) {
    std::iota(y_order.begin(), y_order.end(), 0);
    std::stable_sort(y_order.begin(), y_order.end(), [&](int p, int q) {
      return residual[static_cast<std::size_t>(p)] > residual[static_cast<std::size_t>(q)];
    });
    const int need = spec.xs[static_cast<std::size_t>(i)];
    for (int t = 0; t < need; ++t) {
      const int j = y_order[static_cast<std::size_t>(t)];
      // Gale-Ryser guarantees enough positive residuals at every step.
      if (residual[static_cast<std::size_t>(j)] <= 0) throw std::logic_error("greedy bipartite realization stalled");
      --residual[static_cast<std::size_t>(j)];
      edges.emplace_back(i, a + j);
    }
  }
  return {Graph::from_edges(a + b, edges), a, b};
}

IntervalRealization realize_interval(const IntervalRealizationParams& p) {
  if (p.a < 1 || p.b < 1) throw RealizationError("interval realization needs positive side sizes");
  if (p.c < 0 || p.d < 0 || p.sigma < 0) throw RealizationError("c, d and sigma must be non-negative");
  const long long a = p.a;
  const long long b = p.b;
  const long long excess = a * p.c - b * p.d;
  if (excess > static_cast<long long>(p.sigma) * a || excess < -static_cast<long long>(p.sigma) * b) {
    throw RealizationError("need -sigma*b <= ac - bd <= sigma*a, got ac - bd = " + std::to_string(excess) +
                           " with sigma=" + std::to_string(p.sigma));
  }
  IntervalRealization out;
  out.excess = excess;
  if (excess >= 0) {
    // a-r vertices of degree c-q and r of degree c-q-1 against uniform d.
    out.a_side_reduced = true;
    out.q = static_cast<int>(excess / a);
    out.r = static_cast<int>(excess % a);
    out.degrees.xs.assign(static_cast<std::size_t>(p.a - out.r), p.c - out.q);
    out.degrees.xs.insert(out.degrees.xs.end(), static_cast<std::size_t>(out.r), p.c - out.q - 1);
    out.degrees.ys.assign(static_cast<std::size_t>(p.b), p.d);
  } else {
    out.a_side_reduced = false;
    out.q = static_cast<int>(-excess / b);
    out.r = static_cast<int>(-excess % b);
    out.degrees.xs.assign(static_cast<std::size_t>(p.a), p.c);
    out.degrees.ys.assign(static_cast<std::size_t>(p.b - out.r), p.d - out.q);
    out.degrees.ys.insert(out.degrees.ys.end(), static_cast<std::size_t>(out.r), p.d - out.q - 1);
  }
  if (out.q > p.sigma || (out.q == p.sigma && out.r != 0)) {
    throw std::logic_error("interval realization: q/r split escaped the sigma window");
  }
  out.realization = realize_bigraphic(out.degrees);
  return out;
}

}  // namespace fanramsey
