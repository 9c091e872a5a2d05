#include "mobius/random.hpp"

#include <limits>
#include <map>

namespace mobius {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do draw = next();
  while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

std::vector<std::string> element_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  return names;
}

Poset random_poset(SplitMix64& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
  // position[i] is the rank of element i in a hidden linear order.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(position[i - 1], position[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (position[a] < position[b] && rng.chance(num, den)) pairs.emplace_back(a, b);
  return Poset::from_index_relations(element_names(n), pairs);
}

namespace {

Scalar random_scalar(SplitMix64& rng, const FieldSpec& k) {
  if (k.is_prime()) return Scalar(static_cast<unsigned long>(rng.uniform(0, static_cast<std::int64_t>(k.modulus()) - 1)));
  return Scalar(static_cast<long>(rng.uniform(-1, 1)));
}

}  // namespace

PosetModule random_module(const PosetPtr& p, FieldSpec field, std::size_t max_dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = p->size();
  std::vector<std::size_t> dims(n);
  for (Element e = 0; e < n; ++e) dims[e] = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_dim)));

  std::map<Cover, Matrix> maps;
  // along[a * n + b] = M(a ≤ b) for the part built so far.
  std::vector<Matrix> along(n * n);
  for (Element b : p->linear_extension()) {
    along[b * n + b] = Matrix::identity(field, dims[b]);
    const auto& lower = p->lower_covers(b);
    if (lower.empty()) continue;

    // Unknowns: the entries of X_i = M(a_i ⋖ b), row-major, stacked.
    std::vector<std::size_t> offset(lower.size() + 1, 0);
    for (std::size_t i = 0; i < lower.size(); ++i) offset[i + 1] = offset[i] + dims[b] * dims[lower[i]];

    // X_i M(c ≤ a_i) = X_j M(c ≤ a_j) for every common lower bound c.
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < lower.size(); ++i)
      for (std::size_t j = i + 1; j < lower.size(); ++j)
        for (Element c : from_mask(p->down_set(lower[i]) & p->down_set(lower[j]))) {
          const Matrix& mi = along[c * n + lower[i]];
          const Matrix& mj = along[c * n + lower[j]];
          for (std::size_t r = 0; r < dims[b]; ++r)
            for (std::size_t col = 0; col < dims[c]; ++col) {
              std::vector<Scalar> row(offset.back());
              for (std::size_t l = 0; l < dims[lower[i]]; ++l)
                row[offset[i] + r * dims[lower[i]] + l] = field.add(row[offset[i] + r * dims[lower[i]] + l], mi(l, col));
              for (std::size_t l = 0; l < dims[lower[j]]; ++l)
                row[offset[j] + r * dims[lower[j]] + l] = field.sub(row[offset[j] + r * dims[lower[j]] + l], mj(l, col));
              rows.push_back(std::move(row));
            }
        }

    Matrix solutions = rows.empty() ? Matrix::identity(field, offset.back())
                                    : kernel_basis(Matrix::from_rows(field, rows, offset.back()));
    Matrix combo(field, solutions.cols(), 1);
    for (std::size_t k = 0; k < solutions.cols(); ++k) combo.set(k, 0, random_scalar(rng, field));
    Matrix x = compose(solutions, combo);

    for (std::size_t i = 0; i < lower.size(); ++i) {
      Matrix xi(field, dims[b], dims[lower[i]]);
      for (std::size_t r = 0; r < dims[b]; ++r)
        for (std::size_t l = 0; l < dims[lower[i]]; ++l) xi.set(r, l, x(offset[i] + r * dims[lower[i]] + l, 0));
      maps.emplace(Cover{lower[i], b}, std::move(xi));
    }
    for (Element c : from_mask(p->down_set(b))) {
      if (c == b) continue;
      for (Element a : lower)
        if (p->leq(c, a)) {
          along[c * n + b] = compose(maps.at({a, b}), along[c * n + a]);
          break;
        }
    }
  }
  return PosetModule::create(p, field, std::move(dims), std::move(maps));
}

GrFunction random_gr_function(const PosetPtr& p, SplitMix64& rng, std::int64_t lo, std::int64_t hi) {
  GrFunction f(p);
  for (Element e = 0; e < p->size(); ++e) f.set(e, static_cast<long>(rng.uniform(lo, hi)));
  return f;
}

ElementSet random_spread(const Poset& p, SplitMix64& rng) {
  if (p.size() == 0) return {};
  ElementMask chosen = 0;
  for (Element e = 0; e < p.size(); ++e)
    if (rng.chance(1, 3)) chosen |= ElementMask{1} << e;
  if (chosen == 0) chosen = ElementMask{1} << rng.uniform(0, static_cast<std::int64_t>(p.size()) - 1);
  ElementMask hull = chosen;
  for (Element a : from_mask(chosen))
    for (Element c : from_mask(chosen))
      if (p.leq(a, c)) hull |= p.up_set(a) & p.down_set(c);
  return from_mask(hull);
}

MonotoneMap random_monotone_map(SplitMix64& rng, const PosetPtr& source, const PosetPtr& target) {
  const std::size_t n = source->size();
  std::vector<Element> values(n);
  for (int attempt = 0; attempt < 20; ++attempt) {
    bool stuck = false;
    for (Element a : source->linear_extension()) {
      ElementMask allowed = ~ElementMask{0};
      if (target->size() < 64) allowed = (ElementMask{1} << target->size()) - 1;
      for (Element c : source->lower_covers(a)) allowed &= target->up_set(values[c]);
      ElementSet options = from_mask(allowed);
      if (options.empty()) {
        stuck = true;
        break;
      }
      values[a] = options[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(options.size()) - 1))];
    }
    if (!stuck) return MonotoneMap(source, target, values);
  }
  Element top = target->linear_extension().back();
  return MonotoneMap::constant(source, target, top);
}

}  // namespace mobius
