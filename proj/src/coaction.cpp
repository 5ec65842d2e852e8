#include "qaut/coaction.hpp"

#include <algorithm>

namespace qaut {

namespace {

void require_shape(const FiniteSpace& space, const Presentation& p) {
  if (p.blocks != space.blocks() || p.dim != space.dim()) {
    throw ShapeMismatch(p.name + " does not act on a space with these blocks");
  }
}

std::vector<GaussQ> unit_vector(std::size_t dim, std::size_t a) {
  std::vector<GaussQ> v(dim);
  v[a] = GaussQ(1);
  return v;
}

void append_components(std::vector<Identity>& ids, const std::string& label, const BTensorElement& x) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!x[a].is_zero()) ids.push_back({label + " @e" + std::to_string(a + 1), x[a]});
  }
}

std::string basis_label(const FiniteSpace& space, std::size_t a) {
  const BasisIndex& e = space.at(a);
  return "e[" + std::to_string(e.k) + "," + std::to_string(e.l) + "|" + std::to_string(e.x) + "]";
}

// Rank over Q(i) by row reduction.
std::size_t rank(std::vector<std::vector<GaussQ>> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const GaussQ f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

bool BTensorElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const NCPoly& p) { return p.is_zero(); });
}

BTensorElement BTensorElement::scalar(const FiniteSpace& space, const std::vector<GaussQ>& b) {
  BTensorElement x(space);
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (!b[a].is_zero()) x.c_[a] = NCPoly::constant(b[a]);
  }
  return x;
}

BTensorElement BTensorElement::star() const {
  BTensorElement out(*space_);
  for (std::size_t a = 0; a < c_.size(); ++a) out.c_[space_->star(a)] = c_[a].star();
  return out;
}

BTensorElement operator*(const BTensorElement& x, const BTensorElement& y) {
  BTensorElement out(*x.space_);
  for (std::size_t a = 0; a < x.c_.size(); ++a) {
    if (x.c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.c_.size(); ++b) {
      if (y.c_[b].is_zero()) continue;
      if (auto ab = x.space_->product(a, b)) out.c_[*ab] += x.c_[a] * y.c_[b];
    }
  }
  return out;
}

BTensorElement operator-(const BTensorElement& x, const BTensorElement& y) {
  BTensorElement out(*x.space_);
  for (std::size_t a = 0; a < x.c_.size(); ++a) out.c_[a] = x.c_[a] - y.c_[a];
  return out;
}

BTensorElement operator*(const GaussQ& s, const BTensorElement& x) {
  BTensorElement out(*x.space_);
  for (std::size_t a = 0; a < x.c_.size(); ++a) out.c_[a] = s * x.c_[a];
  return out;
}

BTensorElement alpha(const FiniteSpace& space, const Presentation& p, const std::vector<GaussQ>& b) {
  require_shape(space, p);
  BTensorElement out(space);
  for (std::size_t col = 0; col < b.size(); ++col) {
    if (b[col].is_zero()) continue;
    for (std::size_t a = 0; a < space.dim(); ++a) out[a] += NCPoly::gen(p.entry(a, col), b[col]);
  }
  return out;
}

BTensorElement alpha_basis(const FiniteSpace& space, const Presentation& p, std::size_t b) {
  return alpha(space, p, unit_vector(space.dim(), b));
}

StructureReport check_homomorphism(const FiniteSpace& space, const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<BTensorElement> images;
  for (std::size_t a = 0; a < space.dim(); ++a) images.push_back(alpha_basis(space, p, a));
  std::vector<Identity> ids;
  for (std::size_t a = 0; a < space.dim(); ++a) {
    for (std::size_t b = 0; b < space.dim(); ++b) {
      std::vector<GaussQ> prod(space.dim());
      if (auto ab = space.product(a, b)) prod[*ab] = GaussQ(1);
      append_components(ids, "alpha(" + basis_label(space, a) + basis_label(space, b) + ")",
                        alpha(space, p, prod) - images[a] * images[b]);
    }
  }
  StructureReport rep = verify_identities("coaction.homomorphism", ids, ctx.single());
  rep.details = "all basis pairs";
  return rep;
}

StructureReport check_star(const FiniteSpace& space, const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  for (std::size_t a = 0; a < space.dim(); ++a) {
    append_components(ids, "alpha(" + basis_label(space, a) + "^*)",
                      alpha_basis(space, p, space.star(a)) - alpha_basis(space, p, a).star());
  }
  StructureReport rep = verify_identities("coaction.star", ids, ctx.single());
  rep.details = "alpha(e^*) = alpha(e)^* on the basis";
  return rep;
}

StructureReport check_unital(const FiniteSpace& space, const HopfContext& ctx) {
  std::vector<Identity> ids;
  append_components(ids, "alpha(1)",
                    alpha(space, ctx.presentation(), space.unit()) -
                        BTensorElement::scalar(space, space.unit()));
  StructureReport rep = verify_identities("coaction.unital", ids, ctx.single());
  rep.details = "alpha(1) = 1 (x) 1";
  return rep;
}

StructureReport check_coaction_square(const FiniteSpace& space, const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  bool free_equal = true;
  for (std::size_t b = 0; b < space.dim(); ++b) {
    const BTensorElement img = alpha_basis(space, p, b);
    BTensorElement lhs(space);
    for (std::size_t a = 0; a < space.dim(); ++a) lhs[a] = substitute(img[a], p.coproduct);
    BTensorElement rhs(space);
    for (std::size_t c = 0; c < space.dim(); ++c) {
      const NCPoly right = on_leg(img[c], 2);
      if (right.is_zero()) continue;
      const BTensorElement inner = alpha_basis(space, p, c);
      for (std::size_t a = 0; a < space.dim(); ++a) rhs[a] += on_leg(inner[a], 1) * right;
    }
    const BTensorElement diff = lhs - rhs;
    free_equal = free_equal && diff.is_zero();
    append_components(ids, "square(" + basis_label(space, b) + ")", diff);
  }
  if (free_equal) {
    StructureReport rep = verify_free("coaction.square", ids);
    rep.details = "both sides agree in the free doubled algebra";
    return rep;
  }
  StructureReport rep = verify_identities("coaction.square", ids, ctx.doubled());
  rep.details = "compared in the doubled system";
  return rep;
}

StructureReport check_counit_action(const FiniteSpace& space, const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  for (std::size_t b = 0; b < space.dim(); ++b) {
    const BTensorElement img = alpha_basis(space, p, b);
    for (std::size_t a = 0; a < space.dim(); ++a) {
      NCPoly value;
      for (const Term& t : img[a].terms()) {
        GaussQ c = t.coeff;
        for (Gen g : t.word) {
          const GaussQ e = p.counit.at(g.unstarred());
          c *= g.starred() ? e.conj() : e;
        }
        value += NCPoly::constant(c);
      }
      if (a == b) value -= NCPoly::one();
      ids.push_back({"(id x eps)alpha(" + basis_label(space, b) + ") @e" + std::to_string(a + 1),
                     std::move(value)});
    }
  }
  StructureReport rep = verify_free("coaction.counit", ids);
  rep.details = "exact identities";
  return rep;
}

StructureReport check_invariant_functional(const FiniteSpace& space, const HopfContext& ctx,
                                           const std::vector<GaussQ>& weights) {
  if (weights.size() != space.dim()) throw ShapeMismatch("functional weights do not match the space");
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  for (std::size_t b = 0; b < space.dim(); ++b) {
    const BTensorElement img = alpha_basis(space, p, b);
    NCPoly value = -NCPoly::constant(weights[b]);
    for (std::size_t a = 0; a < space.dim(); ++a) value += weights[a] * img[a];
    ids.push_back({"(phi x id)alpha(" + basis_label(space, b) + ")", std::move(value)});
  }
  StructureReport rep = verify_identities("coaction.invariant_functional", ids, ctx.single());
  rep.details = "(phi x id)alpha(e) = phi(e) 1";
  return rep;
}

StructureReport check_generator_span(const FiniteSpace& space, const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  const std::vector<Gen>& gens = p.generators;
  std::vector<std::vector<GaussQ>> rows;
  for (std::size_t b = 0; b < space.dim(); ++b) {
    const BTensorElement img = alpha_basis(space, p, b);
    for (std::size_t a = 0; a < space.dim(); ++a) {
      std::vector<GaussQ> row(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i) row[i] = img[a].coeff(Word{gens[i]});
      rows.push_back(std::move(row));
    }
  }
  StructureReport rep;
  rep.check = "coaction.faithfulness_shadow";
  rep.identities = rows.size();
  rep.system_status = "free";
  const std::size_t r = rank(std::move(rows), gens.size());
  rep.verdict = r == gens.size() ? Verdict::Pass : Verdict::Fail;
  rep.details = "generator-coefficient rank " + std::to_string(r) + " of " +
                std::to_string(gens.size()) + " (finite shadow of faithfulness)";
  return rep;
}

}  // namespace qaut
