#include "dikeopt/gen_instance.hpp"

#include "dikeopt/error.hpp"

namespace dikeopt {

namespace {

// Money amounts with two decimal places, up to ~100.
Rational cents(std::uint64_t hundredths) {
  Rational v(static_cast<long>(hundredths), 100);
  v.canonicalize();
  return v;
}

std::vector<Rational> gen_heights(SplitMix64& rng, int levels) {
  std::vector<Rational> heights;
  Rational h = 0;
  for (int i = 0; i < levels; ++i) {
    heights.push_back(h);
    Rational step(static_cast<long>(1 + rng.below(20)), 10);
    step.canonicalize();
    h += step;
  }
  return heights;
}

// Non-decreasing f with f(0) = 0, used for separable cost parts.
std::vector<Rational> gen_nondecreasing(SplitMix64& rng, int levels) {
  std::vector<Rational> f(static_cast<size_t>(levels), Rational(0));
  for (int i = 1; i < levels; ++i) f[static_cast<size_t>(i)] = f[static_cast<size_t>(i) - 1] + cents(rng.below(1000));
  return f;
}

// Strictly decreasing non-negative values, used for damage baselines.
std::vector<Rational> gen_decreasing(SplitMix64& rng, int levels) {
  std::vector<Rational> f(static_cast<size_t>(levels), Rational(0));
  f[static_cast<size_t>(levels) - 1] = cents(rng.below(500));
  for (int i = levels - 2; i >= 0; --i)
    f[static_cast<size_t>(i)] = f[static_cast<size_t>(i) + 1] + cents(1 + rng.below(800));
  return f;
}

// Monge-by-construction cost table: f(h2) - f(h1) + c0 + A*h1*(top - h2).
// The separable part meets the exchange inequality with equality; the bump
// is supermodular, so the inequality holds for every quadruple.
template <typename Setter>
void fill_monge_cost(SplitMix64& rng, int periods, int levels, Setter&& set) {
  for (int t = 0; t < periods; ++t) {
    if (t == 0) {
      for (int h1 = 0; h1 < levels; ++h1)
        for (int h2 = h1; h2 < levels; ++h2) set(t, h1, h2, Money(0));
      continue;
    }
    std::vector<Rational> f = gen_nondecreasing(rng, levels);
    Rational c0 = cents(rng.below(500));
    long bump = static_cast<long>(rng.below(3));
    for (int h1 = 0; h1 < levels; ++h1)
      for (int h2 = h1; h2 < levels; ++h2)
        set(t, h1, h2,
            f[static_cast<size_t>(h2)] - f[static_cast<size_t>(h1)] + c0 +
                Rational(bump * h1 * (levels - 1 - h2)));
  }
}

enum class DamageShape { geq, leq };

// Damage with a controlled exchange direction:
//   geq: P(h2) + Q(hb) + A*(top - h2)*hb   (decreasing differences, (i))
//   leq: P(h2) + Q(hb) + A*h2*hb           (increasing differences, (16))
// The bump is strict whenever A > 0 and both sides move.
template <typename Setter>
void fill_damage(SplitMix64& rng, int periods, int dikeLevels, int barrierLevels,
                 DamageShape shape, Setter&& set) {
  for (int t = 0; t < periods; ++t) {
    if (t == 0) {
      for (int h2 = 0; h2 < dikeLevels; ++h2)
        for (int hb = 0; hb < barrierLevels; ++hb) set(t, h2, hb, Money(0));
      continue;
    }
    std::vector<Rational> p = gen_decreasing(rng, dikeLevels);
    std::vector<Rational> q = gen_decreasing(rng, barrierLevels);
    long a = static_cast<long>(1 + rng.below(3));
    for (int h2 = 0; h2 < dikeLevels; ++h2) {
      for (int hb = 0; hb < barrierLevels; ++hb) {
        long bump = shape == DamageShape::geq ? a * (dikeLevels - 1 - h2) * hb : a * h2 * hb;
        set(t, h2, hb, p[static_cast<size_t>(h2)] + q[static_cast<size_t>(hb)] + Rational(bump));
      }
    }
  }
}

}  // namespace

InstanceFamily family_from_string(const std::string& name) {
  if (name == "monge") return InstanceFamily::monge;
  if (name == "random") return InstanceFamily::random;
  if (name == "mixed") return InstanceFamily::mixed;
  fail(ErrorCode::IoError, "unknown instance family '" + name + "'");
}

Instance gen_instance(std::uint64_t seed, const GenDims& dims, InstanceFamily family) {
  if (dims.horizon < 1 || dims.horizon > 64 || dims.segments < 0 || dims.segments > 16 ||
      dims.dikeLevels < 1 || dims.dikeLevels > 64 || dims.barrierLevels < 1 ||
      dims.barrierLevels > 64)
    fail(ErrorCode::DimsTooLarge, "generator dims outside supported ranges");

  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);

  std::vector<std::string> segments;
  for (int d = 0; d < dims.segments; ++d) segments.push_back("d" + std::to_string(d));

  Instance inst(dims.horizon, std::move(segments), gen_heights(rng, dims.dikeLevels),
                gen_heights(rng, dims.barrierLevels));
  const int periods = dims.horizon + 1;

  if (family == InstanceFamily::random) {
    for (int t = 0; t < periods; ++t) {
      const bool zero = t == 0;
      for (int d = 0; d < dims.segments; ++d) {
        for (int h1 = 0; h1 < dims.dikeLevels; ++h1)
          for (int h2 = h1; h2 < dims.dikeLevels; ++h2)
            inst.setDikeCost(t, d, h1, h2, zero ? Money(0) : cents(rng.below(10000)));
        for (int h2 = 0; h2 < dims.dikeLevels; ++h2)
          for (int hb = 0; hb < dims.barrierLevels; ++hb)
            inst.setDikeExpDam(t, d, h2, hb, zero ? Money(0) : cents(rng.below(10000)));
      }
      for (int hb1 = 0; hb1 < dims.barrierLevels; ++hb1)
        for (int hb2 = hb1; hb2 < dims.barrierLevels; ++hb2)
          inst.setBarrierCost(t, hb1, hb2, zero ? Money(0) : cents(rng.below(10000)));
      for (int hb = 0; hb < dims.barrierLevels; ++hb)
        inst.setBarrierExpDam(t, hb, zero ? Money(0) : cents(rng.below(10000)));
    }
    return inst;
  }

  // monge / mixed: conditioned cost tables; mixed flips the damage
  // direction on odd segments.
  fill_monge_cost(rng, periods, dims.barrierLevels,
                  [&](int t, int h1, int h2, Money v) { inst.setBarrierCost(t, h1, h2, std::move(v)); });
  for (int t = 0; t < periods; ++t)
    for (int hb = 0; hb < dims.barrierLevels; ++hb)
      inst.setBarrierExpDam(t, hb, t == 0 ? Money(0) : cents(rng.below(2000)));

  for (int d = 0; d < dims.segments; ++d) {
    fill_monge_cost(rng, periods, dims.dikeLevels,
                    [&](int t, int h1, int h2, Money v) { inst.setDikeCost(t, d, h1, h2, std::move(v)); });
    const DamageShape shape = (family == InstanceFamily::mixed && d % 2 == 1)
                                  ? DamageShape::leq
                                  : DamageShape::geq;
    fill_damage(rng, periods, dims.dikeLevels, dims.barrierLevels, shape,
                [&](int t, int h2, int hb, Money v) { inst.setDikeExpDam(t, d, h2, hb, std::move(v)); });
  }
  return inst;
}

}  // namespace dikeopt
