#include "mobius/module.hpp"

#include <algorithm>
#include <string>

#include "mobius/errors.hpp"

namespace mobius {

namespace {

std::string cover_name(const Poset& p, Element a, Element b) { return p.name(a) + "<" + p.name(b); }

void require_compatible(const PosetModule& m, const PosetModule& n) {
  if (!(m.poset() == n.poset())) throw PosetMismatch("modules live on different posets");
  if (!(m.field() == n.field())) throw FieldMismatch("modules have different fields");
}

}  // namespace

PosetModule PosetModule::unchecked(PosetPtr p, FieldSpec field, std::vector<std::size_t> dims,
                                   std::map<Cover, Matrix> maps) {
  if (dims.size() != p->size())
    throw ShapeMismatch("module has " + std::to_string(dims.size()) + " dimensions for " +
                        std::to_string(p->size()) + " elements");
  for (const auto& [key, mat] : maps) {
    auto [a, b] = key;
    if (a >= p->size() || b >= p->size() || !p->is_cover(a, b))
      throw UnknownElement("map given on a pair that is not a covering relation");
    if (mat.rows() != dims[b] || mat.cols() != dims[a])
      throw ShapeMismatch("map on " + cover_name(*p, a, b) + " has shape " + std::to_string(mat.rows()) + "x" +
                          std::to_string(mat.cols()) + ", expected " + std::to_string(dims[b]) + "x" +
                          std::to_string(dims[a]));
    if (!(mat.field() == field)) throw FieldMismatch("map on " + cover_name(*p, a, b) + " is over another field");
  }
  for (const auto& [a, b] : p->covers())
    if (!maps.contains({a, b})) maps.emplace(Cover{a, b}, Matrix::zero(field, dims[b], dims[a]));

  PosetModule m;
  m.poset_ = std::move(p);
  m.field_ = field;
  m.dims_ = std::move(dims);
  m.maps_ = std::move(maps);

  const std::size_t n = m.poset_->size();
  m.along_.assign(n * n, Matrix{});
  for (Element b : m.poset_->linear_extension()) {
    m.along_[b * n + b] = Matrix::identity(field, m.dims_[b]);
    for (Element a : from_mask(m.poset_->down_set(b))) {
      if (a == b) continue;
      for (Element c : m.poset_->lower_covers(b)) {
        if (!m.poset_->leq(a, c)) continue;
        m.along_[a * n + b] = compose(m.maps_.at({c, b}), m.along_[a * n + c]);
        break;
      }
    }
  }
  return m;
}

PosetModule PosetModule::create(PosetPtr p, FieldSpec field, std::vector<std::size_t> dims,
                                std::map<Cover, Matrix> maps) {
  PosetModule m = unchecked(std::move(p), field, std::move(dims), std::move(maps));
  auto report = check_functoriality(m);
  if (!report.ok) {
    auto [a, b] = *report.violation;
    throw FunctorialityError("module is not functorial: paths from '" + m.poset().name(a) + "' to '" +
                             m.poset().name(b) + "' disagree");
  }
  return m;
}

std::size_t PosetModule::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

const Matrix& PosetModule::cover_map(Element a, Element b) const {
  auto it = maps_.find({a, b});
  if (it == maps_.end()) throw NotComparable("'" + poset_->name(a) + "' is not covered by '" + poset_->name(b) + "'");
  return it->second;
}

const Matrix& PosetModule::map_between(Element a, Element b) const {
  if (!poset_->leq(a, b)) throw NotComparable("'" + poset_->name(a) + "' is not below '" + poset_->name(b) + "'");
  return along_[a * poset_->size() + b];
}

FunctorialityReport check_functoriality(const PosetModule& m) {
  const Poset& p = m.poset();
  for (Element b : p.linear_extension())
    for (Element a : from_mask(p.down_set(b))) {
      if (a == b) continue;
      const Matrix& expected = m.map_between(a, b);
      for (Element c : p.lower_covers(b)) {
        if (!p.leq(a, c)) continue;
        if (!(compose(m.cover_map(c, b), m.map_between(a, c)) == expected)) return {false, std::make_pair(a, b)};
      }
    }
  return {};
}

PosetModule zero_module(const PosetPtr& p, FieldSpec field) {
  return PosetModule::unchecked(p, field, std::vector<std::size_t>(p->size(), 0), {});
}

PosetModule constant_module(const PosetPtr& p, std::size_t dim, FieldSpec field) {
  std::map<Cover, Matrix> maps;
  for (const auto& c : p->covers()) maps.emplace(c, Matrix::identity(field, dim));
  return PosetModule::unchecked(p, field, std::vector<std::size_t>(p->size(), dim), std::move(maps));
}

PosetModule principal_cofree(const PosetPtr& p, Element a, std::size_t dim, FieldSpec field) {
  if (a >= p->size()) throw UnknownElement("principal cofree module at unknown element");
  std::vector<std::size_t> dims(p->size(), 0);
  for (Element b : from_mask(p->down_set(a))) dims[b] = dim;
  std::map<Cover, Matrix> maps;
  for (const auto& [x, y] : p->covers())
    if (p->leq(y, a)) maps.emplace(Cover{x, y}, Matrix::identity(field, dim));
  return PosetModule::unchecked(p, field, std::move(dims), std::move(maps));
}

PosetModule indicator(const PosetPtr& p, const ElementSet& z, FieldSpec field) {
  for (Element e : z)
    if (e >= p->size()) throw UnknownElement("spread contains an unknown element");
  if (!is_spread(*p, z)) throw NotASpread("element set is not a spread");
  ElementMask zm = to_mask(z);
  std::vector<std::size_t> dims(p->size(), 0);
  for (Element e : z) dims[e] = 1;
  std::map<Cover, Matrix> maps;
  for (const auto& [x, y] : p->covers())
    if (((zm >> x) & 1U) && ((zm >> y) & 1U)) maps.emplace(Cover{x, y}, Matrix::identity(field, 1));
  return PosetModule::unchecked(p, field, std::move(dims), std::move(maps));
}

PosetModule direct_sum(const std::vector<PosetModule>& summands) {
  if (summands.empty()) throw ShapeMismatch("direct sum needs at least one summand");
  const PosetModule& first = summands.front();
  for (const auto& s : summands) require_compatible(first, s);
  const Poset& p = first.poset();
  std::vector<std::size_t> dims(p.size(), 0);
  for (const auto& s : summands)
    for (Element e = 0; e < p.size(); ++e) dims[e] += s.dim(e);
  std::map<Cover, Matrix> maps;
  for (const auto& [a, b] : p.covers()) {
    Matrix block(first.field(), dims[b], dims[a]);
    std::size_t r = 0, c = 0;
    for (const auto& s : summands) {
      block.place(r, c, s.cover_map(a, b));
      r += s.dim(b);
      c += s.dim(a);
    }
    maps.emplace(Cover{a, b}, std::move(block));
  }
  return PosetModule::unchecked(first.poset_ptr(), first.field(), std::move(dims), std::move(maps));
}

GrFunction dimension_function(const PosetModule& m) {
  GrFunction f(m.poset_ptr());
  for (Element e = 0; e < m.poset().size(); ++e) f.set(e, static_cast<unsigned long>(m.dim(e)));
  return f;
}

NatSpace nat_space(const PosetModule& m, const PosetModule& n) {
  require_compatible(m, n);
  const Poset& p = m.poset();
  const FieldSpec& k = m.field();

  std::vector<std::size_t> offset(p.size() + 1, 0);
  for (Element e = 0; e < p.size(); ++e) offset[e + 1] = offset[e] + n.dim(e) * m.dim(e);
  const std::size_t unknowns = offset[p.size()];

  std::size_t equations = 0;
  for (const auto& [a, b] : p.covers()) equations += n.dim(b) * m.dim(a);

  // Row (i, j) of the block for a ⋖ b: (N(a⋖b) η_a - η_b M(a⋖b))_{ij}.
  Matrix constraint(k, equations, unknowns);
  std::size_t row = 0;
  for (const auto& [a, b] : p.covers()) {
    const Matrix& nab = n.cover_map(a, b);
    const Matrix& mab = m.cover_map(a, b);
    const std::size_t ma = m.dim(a), mb = m.dim(b), na = n.dim(a);
    for (std::size_t i = 0; i < n.dim(b); ++i)
      for (std::size_t j = 0; j < ma; ++j, ++row) {
        for (std::size_t l = 0; l < na; ++l)
          if (nab(i, l) != 0) constraint.set(row, offset[a] + l * ma + j, k.add(constraint(row, offset[a] + l * ma + j), nab(i, l)));
        for (std::size_t l = 0; l < mb; ++l)
          if (mab(l, j) != 0)
            constraint.set(row, offset[b] + i * mb + l, k.sub(constraint(row, offset[b] + i * mb + l), mab(l, j)));
      }
  }

  Matrix kernel = kernel_basis(constraint);
  NatSpace space;
  space.dimension = kernel.cols();
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    std::vector<Matrix> eta;
    eta.reserve(p.size());
    for (Element e = 0; e < p.size(); ++e) {
      Matrix comp(k, n.dim(e), m.dim(e));
      for (std::size_t i = 0; i < n.dim(e); ++i)
        for (std::size_t j = 0; j < m.dim(e); ++j) comp.set(i, j, kernel(offset[e] + i * m.dim(e) + j, c));
      eta.push_back(std::move(comp));
    }
    space.basis.push_back(std::move(eta));
  }
  return space;
}

bool is_natural(const PosetModule& m, const PosetModule& n, const std::vector<Matrix>& eta) {
  require_compatible(m, n);
  const Poset& p = m.poset();
  if (eta.size() != p.size()) return false;
  for (Element e = 0; e < p.size(); ++e)
    if (eta[e].rows() != n.dim(e) || eta[e].cols() != m.dim(e)) return false;
  for (const auto& [a, b] : p.covers())
    if (!(compose(n.cover_map(a, b), eta[a]) == compose(eta[b], m.cover_map(a, b)))) return false;
  return true;
}

namespace {

// Covers of the subposet induced on `index`.
std::vector<std::pair<std::size_t, std::size_t>> induced_covers(const Poset& p, const ElementSet& index) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  ElementMask im = to_mask(index);
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) {
      Element a = index[i], b = index[j];
      if (!p.lt(a, b)) continue;
      ElementMask between = p.up_set(a) & p.down_set(b) & im & ~(ElementMask{1} << a) & ~(ElementMask{1} << b);
      if (between == 0) out.emplace_back(i, j);
    }
  return out;
}

// (v_a) ↦ (M(a≤b) v_a - v_b) over induced covers a ⋖ b.
Matrix compatibility_map(const PosetModule& m, const ElementSet& index, const std::vector<std::size_t>& offsets,
                         std::size_t ambient) {
  auto covers = induced_covers(m.poset(), index);
  std::size_t rows = 0;
  for (const auto& [i, j] : covers) rows += m.dim(index[j]);
  Matrix out(m.field(), rows, ambient);
  std::size_t r = 0;
  for (const auto& [i, j] : covers) {
    Element a = index[i], b = index[j];
    out.place(r, offsets[i], m.map_between(a, b));
    out.accumulate(r, offsets[j], Matrix::identity(m.field(), m.dim(b)).scaled(-1));
    r += m.dim(b);
  }
  return out;
}

// Columns v ∈ M(a) per induced cover a ⋖ b, mapped to ι_a v - ι_b M(a≤b) v.
Matrix relation_map(const PosetModule& m, const ElementSet& index, const std::vector<std::size_t>& offsets,
                    std::size_t ambient) {
  auto covers = induced_covers(m.poset(), index);
  std::size_t cols = 0;
  for (const auto& [i, j] : covers) cols += m.dim(index[i]);
  Matrix out(m.field(), ambient, cols);
  std::size_t c = 0;
  for (const auto& [i, j] : covers) {
    Element a = index[i], b = index[j];
    out.place(offsets[i], c, Matrix::identity(m.field(), m.dim(a)));
    out.accumulate(offsets[j], c, m.map_between(a, b).scaled(-1));
    c += m.dim(a);
  }
  return out;
}

std::vector<std::size_t> block_offsets(const PosetModule& m, const ElementSet& index, std::size_t& ambient) {
  std::vector<std::size_t> offsets;
  ambient = 0;
  for (Element a : index) {
    offsets.push_back(ambient);
    ambient += m.dim(a);
  }
  return offsets;
}

// Rows of the ambient sum over `outer` that belong to blocks of `inner` ⊆ outer.
std::vector<std::size_t> sub_rows(const PosetModule& m, const ElementSet& outer, const std::vector<std::size_t>& offsets,
                                  const ElementSet& inner) {
  std::vector<std::size_t> rows;
  ElementMask in = to_mask(inner);
  for (std::size_t i = 0; i < outer.size(); ++i)
    if ((in >> outer[i]) & 1U)
      for (std::size_t k = 0; k < m.dim(outer[i]); ++k) rows.push_back(offsets[i] + k);
  return rows;
}

}  // namespace

LimitPresentation limit_over(const PosetModule& m, const ElementSet& index) {
  LimitPresentation lim;
  lim.index = index;
  lim.offsets = block_offsets(m, index, lim.ambient);
  lim.basis = kernel_basis(compatibility_map(m, index, lim.offsets, lim.ambient));
  return lim;
}

ColimitPresentation colimit_over(const PosetModule& m, const ElementSet& index) {
  ColimitPresentation colim;
  colim.index = index;
  colim.offsets = block_offsets(m, index, colim.ambient);
  colim.quotient = cokernel_map(relation_map(m, index, colim.offsets, colim.ambient));
  return colim;
}

ElementSet upper_fiber(const MonotoneMap& f, Element x) {
  ElementSet out;
  for (Element a = 0; a < f.source().size(); ++a)
    if (f.target().leq(x, f(a))) out.push_back(a);
  return out;
}

ElementSet lower_fiber(const MonotoneMap& f, Element x) {
  ElementSet out;
  for (Element a = 0; a < f.source().size(); ++a)
    if (f.target().leq(f(a), x)) out.push_back(a);
  return out;
}

PosetModule pullback_module(const MonotoneMap& f, const PosetModule& n) {
  if (!(f.target() == n.poset())) throw PosetMismatch("module is not defined on the map's target");
  const Poset& p = f.source();
  std::vector<std::size_t> dims(p.size());
  for (Element a = 0; a < p.size(); ++a) dims[a] = n.dim(f(a));
  std::map<Cover, Matrix> maps;
  for (const auto& [a, b] : p.covers()) maps.emplace(Cover{a, b}, n.map_between(f(a), f(b)));
  return PosetModule::unchecked(f.source_ptr(), n.field(), std::move(dims), std::move(maps));
}

PosetModule pushforward_module(const MonotoneMap& f, const PosetModule& m) {
  if (!(f.source() == m.poset())) throw PosetMismatch("module is not defined on the map's source");
  const Poset& q = f.target();
  std::vector<LimitPresentation> limits;
  std::vector<std::size_t> dims;
  for (Element x = 0; x < q.size(); ++x) {
    limits.push_back(limit_over(m, upper_fiber(f, x)));
    dims.push_back(limits.back().basis.cols());
  }
  std::map<Cover, Matrix> maps;
  for (const auto& [x, y] : q.covers()) {
    const auto& from = limits[x];
    const auto& to = limits[y];
    Matrix restricted = from.basis.select_rows(sub_rows(m, from.index, from.offsets, to.index));
    auto coords = solve(to.basis, restricted);
    if (!coords) throw Error("restriction of a limit cone left the limit");
    maps.emplace(Cover{x, y}, std::move(*coords));
  }
  return PosetModule::unchecked(f.target_ptr(), m.field(), std::move(dims), std::move(maps));
}

PosetModule pushforward_open_module(const MonotoneMap& f, const PosetModule& m) {
  if (!(f.source() == m.poset())) throw PosetMismatch("module is not defined on the map's source");
  const Poset& q = f.target();
  const FieldSpec& k = m.field();
  std::vector<ColimitPresentation> colimits;
  std::vector<std::size_t> dims;
  for (Element x = 0; x < q.size(); ++x) {
    colimits.push_back(colimit_over(m, lower_fiber(f, x)));
    dims.push_back(colimits.back().quotient.rows());
  }
  std::map<Cover, Matrix> maps;
  for (const auto& [x, y] : q.covers()) {
    const auto& from = colimits[x];
    const auto& to = colimits[y];
    auto section = solve(from.quotient, Matrix::identity(k, dims[x]));
    if (!section) throw Error("colimit quotient map is not surjective");
    // Inclusion of the smaller index set's ambient sum into the larger one.
    auto rows = sub_rows(m, to.index, to.offsets, from.index);
    Matrix include(k, to.ambient, from.ambient);
    for (std::size_t r = 0; r < rows.size(); ++r) include.set(rows[r], r, 1);
    maps.emplace(Cover{x, y}, compose(to.quotient, compose(include, *section)));
  }
  return PosetModule::unchecked(f.target_ptr(), k, std::move(dims), std::move(maps));
}

}  // namespace mobius
