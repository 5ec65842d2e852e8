#include "qaut/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qaut {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

NCPoly g(Gen x) { return NCPoly::gen(x); }

NCPoly c(long v) { return v == 0 ? NCPoly() : NCPoly::constant(GaussQ(v)); }

Gen fundamental_gen(SpaceKind kind, const BasisIndex& row, const BasisIndex& col) {
  switch (kind) {
    case SpaceKind::Points:
      return Gen::x(row.x, col.x);
    case SpaceKind::Matrices:
      return Gen::m(row.k, row.l, col.k, col.l);
    case SpaceKind::Blocks:
      return Gen::b(row.k, row.l, col.k, col.l, row.x, col.x);
    case SpaceKind::Generic:
      break;
  }
  throw std::logic_error("fundamental_gen: generic space has no basis indexing");
}

void set_fundamental(Presentation& p, const FiniteSpace& space) {
  p.dim = space.dim();
  p.u.clear();
  for (std::size_t a = 0; a < p.dim; ++a) {
    for (std::size_t b = 0; b < p.dim; ++b) {
      p.u.push_back(fundamental_gen(p.kind, space.at(a), space.at(b)));
    }
  }
  p.generators = p.u;
}

void set_generic_fundamental(Presentation& p, int m) {
  p.dim = static_cast<std::size_t>(m);
  p.u.clear();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) p.u.push_back(Gen::u(i, j));
  }
  p.generators = p.u;
}

// Matrix coproduct and delta counit, shared by every presentation here.
void set_matrix_coalgebra(Presentation& p) {
  p.coproduct.clear();
  p.counit.clear();
  for (std::size_t a = 0; a < p.dim; ++a) {
    for (std::size_t b = 0; b < p.dim; ++b) {
      NCPoly img;
      for (std::size_t k = 0; k < p.dim; ++k) {
        img += NCPoly::monomial(Word{p.entry(a, k).on_leg(1), p.entry(k, b).on_leg(2)});
      }
      p.coproduct[p.entry(a, b)] = std::move(img);
      p.counit[p.entry(a, b)] = GaussQ(a == b ? 1 : 0);
    }
  }
}

// kappa(u_ab) = u_{b* a*}: the adjoint matrix with the adjoint relations applied.
void set_adjoint_antipode(Presentation& p, const FiniteSpace& space) {
  p.antipode.clear();
  for (std::size_t a = 0; a < p.dim; ++a) {
    for (std::size_t b = 0; b < p.dim; ++b) {
      p.antipode[p.entry(a, b)] = g(p.entry(space.star(b), space.star(a)));
    }
  }
  p.kac = true;
}

void set_matrix_antipode(Presentation& p, const PolyMatrix& kappa, bool kac) {
  p.antipode.clear();
  for (std::size_t a = 0; a < p.dim; ++a) {
    for (std::size_t b = 0; b < p.dim; ++b) p.antipode[p.entry(a, b)] = kappa(a, b);
  }
  p.kac = kac;
}

void add(Presentation& p, const std::string& family, NCPoly poly) {
  if (poly.is_zero()) return;
  p.relations.push_back({family, std::move(poly)});
}

void add_matrix_identity(Presentation& p, const std::string& family, const PolyMatrix& lhs) {
  const PolyMatrix diff = lhs - PolyMatrix::identity(lhs.dim());
  for (std::size_t a = 0; a < diff.dim(); ++a) {
    for (std::size_t b = 0; b < diff.dim(); ++b) add(p, family, diff(a, b));
  }
}

// Rows and columns of a_ij are partitions of unity into projections; for each
// partition {p_j} and each i, the elements p_j p_i (j != i) satisfy
// sum_j (p_j p_i)^* (p_j p_i) = p_i (1 - p_i) p_i.
void add_magic_positivity(Presentation& p, int n) {
  if (n < 2) return;
  for (int r = 1; r <= n; ++r) {
    for (int col = 1; col <= n; ++col) {
      PositivityFamily fam{"row " + std::to_string(r) + " at " + std::to_string(col), {}};
      for (int j = 1; j <= n; ++j) {
        if (j != col) fam.elements.push_back(g(Gen::x(r, j)) * g(Gen::x(r, col)));
      }
      p.positivity.push_back(std::move(fam));
    }
  }
  for (int col = 1; col <= n; ++col) {
    for (int r = 1; r <= n; ++r) {
      PositivityFamily fam{"column " + std::to_string(col) + " at " + std::to_string(r), {}};
      for (int i = 1; i <= n; ++i) {
        if (i != r) fam.elements.push_back(g(Gen::x(i, col)) * g(Gen::x(r, col)));
      }
      p.positivity.push_back(std::move(fam));
    }
  }
}

void add_magic_relations_1_2(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Gen a = Gen::x(i, j);
      add(p, "1", g(a) * g(a) - g(a));
      add(p, "1", g(a.star()) - g(a));
    }
  }
  for (int i = 1; i <= n; ++i) {
    NCPoly row = -c(1);
    for (int j = 1; j <= n; ++j) row += g(Gen::x(i, j));
    add(p, "2", std::move(row));
  }
}

void add_magic_relation_3(Presentation& p, int n) {
  for (int j = 1; j <= n; ++j) {
    NCPoly col = -c(1);
    for (int i = 1; i <= n; ++i) col += g(Gen::x(i, j));
    add(p, "3", std::move(col));
  }
}

void add_relation_5(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
              NCPoly rel;
              for (int v = 1; v <= n; ++v) rel += g(Gen::m(k, v, i, j)) * g(Gen::m(v, l, r, s));
              if (j == r) rel -= g(Gen::m(k, l, i, s));
              add(p, "5", std::move(rel));
            }
}

void add_relation_6(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
              NCPoly rel;
              for (int v = 1; v <= n; ++v) rel += g(Gen::m(s, r, l, v)) * g(Gen::m(j, i, v, k));
              if (j == r) rel -= g(Gen::m(s, i, l, k));
              add(p, "6", std::move(rel));
            }
}

void add_relation_7(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) add(p, "7", g(Gen::m(k, l, i, j).star()) - g(Gen::m(l, k, j, i)));
}

void add_relation_8(Presentation& p, int n) {
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      NCPoly rel = -c(delta(k, l));
      for (int r = 1; r <= n; ++r) rel += g(Gen::m(k, l, r, r));
      add(p, "8", std::move(rel));
    }
}

void add_relation_9(Presentation& p, int n) {
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      NCPoly rel = -c(delta(k, l));
      for (int r = 1; r <= n; ++r) rel += g(Gen::m(r, r, k, l));
      add(p, "9", std::move(rel));
    }
}

void add_relation_11(Presentation& p, const std::vector<int>& nb) {
  const int m = static_cast<int>(nb.size());
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int z = 1; z <= m; ++z) {
        const int nx = nb[x - 1], ny = nb[y - 1], nz = nb[z - 1];
        for (int i = 1; i <= ny; ++i)
          for (int j = 1; j <= ny; ++j)
            for (int k = 1; k <= nx; ++k)
              for (int l = 1; l <= nx; ++l)
                for (int r = 1; r <= nz; ++r)
                  for (int s = 1; s <= nz; ++s) {
                    NCPoly rel;
                    for (int v = 1; v <= nx; ++v) {
                      rel += g(Gen::b(k, v, i, j, x, y)) * g(Gen::b(v, l, r, s, x, z));
                    }
                    if (j == r && y == z) rel -= g(Gen::b(k, l, i, s, x, y));
                    add(p, "11", std::move(rel));
                  }
      }
}

void add_relation_12(Presentation& p, const std::vector<int>& nb) {
  const int m = static_cast<int>(nb.size());
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int z = 1; z <= m; ++z) {
        const int nx = nb[x - 1], ny = nb[y - 1], nz = nb[z - 1];
        for (int i = 1; i <= nz; ++i)
          for (int j = 1; j <= nz; ++j)
            for (int k = 1; k <= nx; ++k)
              for (int l = 1; l <= nx; ++l)
                for (int r = 1; r <= ny; ++r)
                  for (int s = 1; s <= ny; ++s) {
                    NCPoly rel;
                    for (int v = 1; v <= nx; ++v) {
                      rel += g(Gen::b(s, r, l, v, y, x)) * g(Gen::b(j, i, v, k, z, x));
                    }
                    if (j == r && y == z) rel -= g(Gen::b(s, i, l, k, y, x));
                    add(p, "12", std::move(rel));
                  }
      }
}

void add_relation_13(Presentation& p, const std::vector<int>& nb) {
  const int m = static_cast<int>(nb.size());
  for (int y = 1; y <= m; ++y)
    for (int z = 1; z <= m; ++z)
      for (int i = 1; i <= nb[z - 1]; ++i)
        for (int j = 1; j <= nb[z - 1]; ++j)
          for (int k = 1; k <= nb[y - 1]; ++k)
            for (int l = 1; l <= nb[y - 1]; ++l) {
              add(p, "13", g(Gen::b(k, l, i, j, y, z).star()) - g(Gen::b(l, k, j, i, y, z)));
            }
}

void add_relation_14(Presentation& p, const std::vector<int>& nb) {
  const int m = static_cast<int>(nb.size());
  for (int y = 1; y <= m; ++y)
    for (int k = 1; k <= nb[y - 1]; ++k)
      for (int l = 1; l <= nb[y - 1]; ++l) {
        NCPoly rel = -c(delta(k, l));
        for (int z = 1; z <= m; ++z)
          for (int r = 1; r <= nb[z - 1]; ++r) rel += g(Gen::b(k, l, r, r, y, z));
        add(p, "14", std::move(rel));
      }
}

void add_relation_15(Presentation& p, const std::vector<int>& nb) {
  const int m = static_cast<int>(nb.size());
  for (int z = 1; z <= m; ++z)
    for (int k = 1; k <= nb[z - 1]; ++k)
      for (int l = 1; l <= nb[z - 1]; ++l) {
        NCPoly rel = -c(delta(k, l));
        for (int y = 1; y <= m; ++y)
          for (int r = 1; r <= nb[y - 1]; ++r) rel += g(Gen::b(r, r, k, l, y, z));
        add(p, "15", std::move(rel));
      }
}

void check_q(const QMatrix& q, std::size_t dim) {
  if (q.dim() != dim) {
    throw DimensionMismatch("Q has dimension " + std::to_string(q.dim()) + ", expected " +
                            std::to_string(dim));
  }
  if (!q.is_positive()) throw NotPositive("Q is not positive definite");
}

}  // namespace

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Points:
      return "X";
    case SpaceKind::Matrices:
      return "M";
    case SpaceKind::Blocks:
      return "blocks";
    case SpaceKind::Generic:
      return "generic";
  }
  return "?";
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::Aut:
      return "aut";
    case Variant::QAut:
      return "q_aut";
    case Variant::AoNew:
      return "a_o_new";
    case Variant::AoOld:
      return "a_o_old";
    case Variant::Au:
      return "a_u";
  }
  return "?";
}

SpaceSpec SpaceSpec::points(int n) {
  if (n < 1) throw std::invalid_argument("X(n) needs n >= 1");
  return {SpaceKind::Points, std::vector<int>(n, 1)};
}

SpaceSpec SpaceSpec::matrices(int n) {
  if (n < 1) throw std::invalid_argument("M(n) needs n >= 1");
  return {SpaceKind::Matrices, {n}};
}

SpaceSpec SpaceSpec::block_list(std::vector<int> blocks) {
  if (blocks.empty()) throw std::invalid_argument("blocks(...) needs at least one block");
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
  }
  return {SpaceKind::Blocks, std::move(blocks)};
}

std::string SpaceSpec::str() const {
  switch (kind) {
    case SpaceKind::Points:
      return "X(" + std::to_string(blocks.size()) + ")";
    case SpaceKind::Matrices:
      return "M(" + std::to_string(blocks.front()) + ")";
    case SpaceKind::Blocks:
    case SpaceKind::Generic: {
      std::string s = "blocks(";
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(blocks[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

PolyMatrix Presentation::fundamental() const {
  PolyMatrix m(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) m(a, b) = NCPoly::gen(entry(a, b));
  }
  return m;
}

std::size_t Presentation::count(std::string_view family) const {
  return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(),
                                                [&](const Relation& r) { return r.family == family; }));
}

std::vector<std::string> Presentation::families() const {
  std::vector<std::string> out;
  for (const Relation& r : relations) {
    if (std::find(out.begin(), out.end(), r.family) == out.end()) out.push_back(r.family);
  }
  return out;
}

std::vector<NCPoly> Presentation::relation_polys() const {
  std::vector<NCPoly> out;
  out.reserve(relations.size());
  for (const Relation& r : relations) out.push_back(r.poly);
  return out;
}

std::optional<FiniteSpace> Presentation::space() const {
  if (blocks.empty()) return std::nullopt;
  return FiniteSpace(blocks);
}

bool Presentation::has_generator(Gen x) const {
  return std::find(generators.begin(), generators.end(), x.unstarred()) != generators.end();
}

Presentation magic_presentation(int n) {
  const SpaceSpec spec = SpaceSpec::points(n);
  Presentation p;
  p.name = "aut " + spec.str();
  p.kind = SpaceKind::Points;
  p.variant = Variant::Aut;
  p.blocks = spec.blocks;
  const FiniteSpace space = spec.space();
  set_fundamental(p, space);
  add_magic_relations_1_2(p, n);
  add_magic_relation_3(p, n);
  set_matrix_coalgebra(p);
  set_adjoint_antipode(p, space);
  add_magic_positivity(p, n);
  return p;
}

Presentation aut_Mn_presentation(int n) {
  const SpaceSpec spec = SpaceSpec::matrices(n);
  Presentation p;
  p.name = "aut " + spec.str();
  p.kind = SpaceKind::Matrices;
  p.variant = Variant::Aut;
  p.blocks = spec.blocks;
  const FiniteSpace space = spec.space();
  set_fundamental(p, space);
  add_relation_5(p, n);
  add_relation_6(p, n);
  add_relation_7(p, n);
  add_relation_8(p, n);
  add_relation_9(p, n);
  set_matrix_coalgebra(p);
  set_adjoint_antipode(p, space);
  return p;
}

Presentation aut_B_presentation(const std::vector<int>& blocks) {
  const SpaceSpec spec = SpaceSpec::block_list(blocks);
  Presentation p;
  p.name = "aut " + spec.str();
  p.kind = SpaceKind::Blocks;
  p.variant = Variant::Aut;
  p.blocks = spec.blocks;
  const FiniteSpace space = spec.space();
  set_fundamental(p, space);
  add_relation_11(p, blocks);
  add_relation_12(p, blocks);
  add_relation_13(p, blocks);
  add_relation_14(p, blocks);
  add_relation_15(p, blocks);
  set_matrix_coalgebra(p);
  set_adjoint_antipode(p, space);
  return p;
}

Presentation aut_presentation(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::Points:
      return magic_presentation(static_cast<int>(spec.blocks.size()));
    case SpaceKind::Matrices:
      return aut_Mn_presentation(spec.blocks.front());
    case SpaceKind::Blocks:
    case SpaceKind::Generic:
      return aut_B_presentation(spec.blocks);
  }
  throw std::logic_error("aut_presentation: unknown space kind");
}

Presentation q_aut_presentation(const SpaceSpec& spec, const QMatrix& q) {
  const FiniteSpace space = spec.space();
  check_q(q, space.dim());
  Presentation p;
  p.name = "q_aut " + spec.str();
  p.kind = spec.kind == SpaceKind::Generic ? SpaceKind::Blocks : spec.kind;
  p.variant = Variant::QAut;
  p.blocks = spec.blocks;
  p.q = q;
  set_fundamental(p, space);

  const PolyMatrix u = p.fundamental();
  const PolyMatrix qm = PolyMatrix::scalar(q);
  const PolyMatrix qinv = PolyMatrix::scalar(q.inverse());
  const bool kac = q.is_identity();
  switch (p.kind) {
    case SpaceKind::Points: {
      const int n = static_cast<int>(spec.blocks.size());
      add_magic_relations_1_2(p, n);
      add_matrix_identity(p, "4", u.transpose() * qm * u * qinv);
      add_matrix_identity(p, "4", qm * u * qinv * u.transpose());
      set_matrix_antipode(p, qinv * u.transpose() * qm, kac);
      add_magic_positivity(p, n);
      break;
    }
    case SpaceKind::Matrices: {
      const int n = spec.blocks.front();
      add_relation_5(p, n);
      add_relation_7(p, n);
      add_relation_8(p, n);
      add_matrix_identity(p, "10", u.adjoint() * qm * u * qinv);
      add_matrix_identity(p, "10", qm * u * qinv * u.adjoint());
      set_matrix_antipode(p, qinv * u.adjoint() * qm, kac);
      break;
    }
    case SpaceKind::Blocks:
    case SpaceKind::Generic:
      add_relation_11(p, spec.blocks);
      add_relation_13(p, spec.blocks);
      add_relation_14(p, spec.blocks);
      add_matrix_identity(p, "16", u.adjoint() * qm * u * qinv);
      add_matrix_identity(p, "16", qm * u * qinv * u.adjoint());
      set_matrix_antipode(p, qinv * u.adjoint() * qm, kac);
      break;
  }
  set_matrix_coalgebra(p);
  return p;
}

namespace {

Presentation ao_base(const QMatrix& q, const std::string& name, Variant variant) {
  if (!q.is_positive()) throw NotPositive("Q is not positive definite");
  Presentation p;
  p.name = name + "(" + std::to_string(q.dim()) + ")";
  p.kind = SpaceKind::Generic;
  p.variant = variant;
  p.q = q;
  set_generic_fundamental(p, static_cast<int>(q.dim()));
  for (Gen x : p.generators) add(p, "conj", g(x.star()) - g(x));
  const PolyMatrix u = p.fundamental();
  const PolyMatrix qm = PolyMatrix::scalar(q);
  const PolyMatrix qinv = PolyMatrix::scalar(q.inverse());
  add_matrix_identity(p, "twisted", u.transpose() * qm * u * qinv);
  add_matrix_identity(p, "twisted", qm * u * qinv * u.transpose());
  set_matrix_antipode(p, qinv * u.transpose() * qm, q.is_identity());
  set_matrix_coalgebra(p);
  return p;
}

}  // namespace

Presentation ao_new_presentation(const QMatrix& q) { return ao_base(q, "a_o_new", Variant::AoNew); }

Presentation ao_old_presentation(const QMatrix& q) {
  Presentation p = ao_base(q, "a_o_old", Variant::AoOld);
  const PolyMatrix u = p.fundamental();
  add_matrix_identity(p, "orthogonal", u * u.transpose());
  add_matrix_identity(p, "orthogonal", u.transpose() * u);
  set_matrix_antipode(p, u.transpose(), true);
  return p;
}

Presentation au_presentation(int n) {
  if (n < 1) throw std::invalid_argument("A_u(n) needs n >= 1");
  Presentation p;
  p.name = "a_u(" + std::to_string(n) + ")";
  p.kind = SpaceKind::Generic;
  p.variant = Variant::Au;
  set_generic_fundamental(p, n);
  const PolyMatrix u = p.fundamental();
  const PolyMatrix ubar = u.conjugate();
  add_matrix_identity(p, "u u*", u * u.adjoint());
  add_matrix_identity(p, "u* u", u.adjoint() * u);
  add_matrix_identity(p, "ubar ubar*", ubar * ubar.adjoint());
  add_matrix_identity(p, "ubar* ubar", ubar.adjoint() * ubar);
  set_matrix_antipode(p, u.adjoint(), true);
  set_matrix_coalgebra(p);
  return p;
}

Presentation without_families(const Presentation& p, const std::vector<std::string>& families) {
  Presentation out = p;
  std::erase_if(out.relations, [&](const Relation& r) {
    return std::find(families.begin(), families.end(), r.family) != families.end();
  });
  return out;
}

RewriteSystem build_system(const Presentation& p, CompletionLimits limits, const TraceSink& trace) {
  return complete(orient(p.relation_polys(), limits, p.positivity), trace);
}

Substitution block_to_matrix_morphism(const std::vector<int>& blocks, int k0) {
  Substitution phi = block_to_matrix_morphism_literal(blocks, k0);
  const int m = static_cast<int>(blocks.size());
  for (int x = 1; x <= m; ++x) {
    if (x == k0) continue;
    for (int k = 1; k <= blocks[x - 1]; ++k) {
      for (int l = 1; l <= blocks[x - 1]; ++l) phi[Gen::b(k, l, k, l, x, x)] = c(1);
    }
  }
  return phi;
}

Substitution block_to_matrix_morphism_literal(const std::vector<int>& blocks, int k0) {
  const int m = static_cast<int>(blocks.size());
  if (k0 < 1 || k0 > m) throw std::out_of_range("block index k0 out of range");
  Substitution phi;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int k = 1; k <= blocks[x - 1]; ++k)
        for (int l = 1; l <= blocks[x - 1]; ++l)
          for (int r = 1; r <= blocks[y - 1]; ++r)
            for (int s = 1; s <= blocks[y - 1]; ++s) {
              phi[Gen::b(k, l, r, s, x, y)] =
                  (x == k0 && y == k0) ? g(Gen::m(k, l, r, s)) : NCPoly();
            }
  return phi;
}

Substitution block_to_points_morphism(int m, int n) {
  Substitution phi;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
              phi[Gen::b(k, l, r, s, x, y)] = (k == r && l == s) ? g(Gen::x(x, y)) : NCPoly();
            }
  return phi;
}

Substitution matrix_to_au_morphism(int n) {
  Substitution phi;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          phi[Gen::m(k, l, i, j)] = g(Gen::u(k, i)) * g(Gen::u(l, j).star());
        }
  return phi;
}

}  // namespace qaut
