#include "qaut/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace qaut {

namespace {

std::complex<double> to_c(const GaussQ& q) { return q.to_complex(); }

GaussQ value_of(const Character& chi, Gen g) {
  auto it = chi.values.find(g.unstarred());
  if (it == chi.values.end()) throw MissingValue("no character value for " + g.unstarred().str());
  return g.starred() ? it->second.conj() : it->second;
}

CMatrix image_of(const NumericRep& rep, Gen g) {
  auto it = rep.images.find(g.unstarred());
  if (it == rep.images.end()) throw MissingImage(g.unstarred());
  return g.starred() ? CMatrix(it->second.adjoint()) : it->second;
}

void require_unitary(const CMatrix& w, double tol, const std::string& what) {
  if (w.rows() != w.cols()) throw NotUnitary(what + " is not square");
  const CMatrix id = CMatrix::Identity(w.rows(), w.cols());
  if (operator_norm(w * w.adjoint() - id) > tol || operator_norm(w.adjoint() * w - id) > tol) {
    throw NotUnitary(what + " is not unitary");
  }
}

StructureReport character_fail(StructureReport rep, const std::string& label, const GaussQ& value) {
  rep.verdict = Verdict::Fail;
  rep.witness = NCPoly::constant(value);
  rep.witness_label = label;
  return rep;
}

// The map e_ij -> sum_kl chi(a^{kl}_{ij}) e_kl as n x n images of the matrix units.
StructureReport check_induced_automorphism(const Presentation& p, const Character& chi,
                                           StructureReport rep) {
  const int n = p.blocks.front();
  auto image = [&](int i, int j) {
    QMatrix m(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) m(k - 1, l - 1) = value_of(chi, Gen::m(k, l, i, j));
    return m;
  };
  std::vector<QMatrix> t;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t.push_back(image(i, j));
  auto at = [&](int i, int j) -> const QMatrix& { return t[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };

  QMatrix unit(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (std::size_t a = 0; a < unit.dim(); ++a)
      for (std::size_t b = 0; b < unit.dim(); ++b) unit(a, b) += at(i, i)(a, b);
  }
  if (!unit.is_identity()) return character_fail(rep, "induced map is not unital", GaussQ(1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const QMatrix& m = at(i, j);
      const QMatrix& s = at(j, i);
      for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < m.dim(); ++b) {
          if (!(s(a, b) == m(b, a).conj())) {
            return character_fail(rep, "induced map does not preserve *", s(a, b) - m(b, a).conj());
          }
        }
      for (int r = 1; r <= n; ++r)
        for (int s2 = 1; s2 <= n; ++s2) {
          const QMatrix prod = at(i, j) * at(r, s2);
          const QMatrix expect = j == r ? at(i, s2) : QMatrix(static_cast<std::size_t>(n));
          if (!(prod == expect)) return character_fail(rep, "induced map is not multiplicative", GaussQ(1));
        }
    }
  QMatrix full(static_cast<std::size_t>(n * n));
  for (std::size_t a = 0; a < full.dim(); ++a)
    for (std::size_t b = 0; b < full.dim(); ++b) full(a, b) = value_of(chi, p.entry(a, b));
  if (full.determinant().is_zero()) return character_fail(rep, "induced map is not bijective", GaussQ(0));
  rep.details += "; induced map is a unital *-automorphism of M_" + std::to_string(n);
  return rep;
}

}  // namespace

GaussQ evaluate(const NCPoly& p, const Character& chi) {
  GaussQ total(0);
  for (const Term& t : p.terms()) {
    GaussQ c = t.coeff;
    for (Gen g : t.word) {
      c *= value_of(chi, g);
      if (c.is_zero()) break;
    }
    total += c;
  }
  return total;
}

Character permutation_character(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  Character chi;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) chi.values[Gen::x(i, j)] = GaussQ(sigma[j - 1] == i ? 1 : 0);
  return chi;
}

Permutation character_permutation(const Character& chi, int n) {
  Permutation sigma(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      if (value_of(chi, Gen::x(i, j)).is_one()) sigma[j - 1] = i;
    }
  return sigma;
}

std::vector<Character> enumerate_characters_magic(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_characters_magic: n must be positive");
  if (n > cap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the character cap " + std::to_string(cap));
  const Presentation p = magic_presentation(n);
  Permutation sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<Character> out;
  do {
    Character chi = permutation_character(sigma);
    if (check_character(p, chi).verdict == Verdict::Pass) out.push_back(std::move(chi));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<Character> characters_magic_q(int n, const QMatrix& q, int cap) {
  if (n > cap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the character cap " + std::to_string(cap));
  if (!q.is_diagonal()) throw std::invalid_argument("characters_magic_q: Q must be diagonal");
  const Presentation p = q_aut_presentation(SpaceSpec::points(n), q);
  std::vector<Character> out;
  for (Character& chi : enumerate_characters_magic(n, cap)) {
    if (check_character(p, chi).verdict == Verdict::Pass) out.push_back(std::move(chi));
  }
  return out;
}

StructureReport check_character(const Presentation& p, const Character& chi) {
  StructureReport rep;
  rep.check = "models.character";
  rep.identities = p.relations.size();
  rep.system_status = "exact";
  rep.details = "relations evaluated exactly";
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const GaussQ v = evaluate(p.relations[i].poly, chi);
    if (!v.is_zero()) {
      return character_fail(rep, "relation " + p.relations[i].family + " #" + std::to_string(i + 1), v);
    }
  }
  if (p.kind == SpaceKind::Matrices) return check_induced_automorphism(p, chi, rep);
  return rep;
}

Character inner_character(const QMatrix& w) {
  const int n = static_cast<int>(w.dim());
  Character chi;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          chi.values[Gen::m(k, l, i, j)] = w(k - 1, i - 1) * w(l - 1, j - 1).conj();
        }
  return chi;
}

CMatrix evaluate(const NCPoly& p, const NumericRep& rep) {
  const auto d = static_cast<Eigen::Index>(rep.dim);
  CMatrix total = CMatrix::Zero(d, d);
  for (const Term& t : p.terms()) {
    CMatrix acc = to_c(t.coeff) * CMatrix::Identity(d, d);
    for (Gen g : t.word) acc = acc * image_of(rep, g);
    total += acc;
  }
  return total;
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

NumericRep two_projection_rep(double theta) {
  if (!(theta > 0.0 && theta < M_PI / 2)) {
    throw std::domain_error("two_projection_rep: theta must lie in (0, pi/2)");
  }
  CMatrix p = CMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  Eigen::Vector2cd v(std::cos(theta), std::sin(theta));
  const CMatrix q = v * v.adjoint();
  const CMatrix one = CMatrix::Identity(2, 2);
  const CMatrix zero = CMatrix::Zero(2, 2);
  const CMatrix entries[4][4] = {{p, one - p, zero, zero},
                                 {one - p, p, zero, zero},
                                 {zero, zero, q, one - q},
                                 {zero, zero, one - q, q}};
  NumericRep rep;
  rep.dim = 2;
  rep.tolerance = 1e-12;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) rep.images[Gen::x(i, j)] = entries[i - 1][j - 1];
  return rep;
}

NumericRep au_twisted_rep(const CMatrix& w, const std::vector<CMatrix>& d) {
  const auto n = w.rows();
  require_unitary(w, 1e-9, "w");
  if (static_cast<Eigen::Index>(d.size()) != n) throw std::invalid_argument("au_twisted_rep: need one D_j per column");
  for (const CMatrix& dj : d) require_unitary(dj, 1e-9, "D_j");
  NumericRep rep;
  rep.dim = static_cast<std::size_t>(d.front().rows());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) rep.images[Gen::u(i, j)] = w(i - 1, j - 1) * d[static_cast<std::size_t>(j - 1)];
  return rep;
}

NumericRep pull_back(const NumericRep& rep, const Substitution& phi) {
  NumericRep out;
  out.dim = rep.dim;
  out.tolerance = rep.tolerance;
  for (const auto& [g, img] : phi) out.images[g] = evaluate(img, rep);
  return out;
}

NumericRep au_model_rep(const CMatrix& w, double tolerance) {
  require_unitary(w, tolerance, "w");
  const auto n = static_cast<int>(w.rows());
  NumericRep base = au_twisted_rep(w, std::vector<CMatrix>(static_cast<std::size_t>(n), CMatrix::Identity(1, 1)));
  base.tolerance = tolerance;
  return pull_back(base, matrix_to_au_morphism(n));
}

NumericRep character_rep(const Character& chi) {
  NumericRep rep;
  rep.dim = 1;
  for (const auto& [g, v] : chi.values) rep.images[g] = CMatrix::Constant(1, 1, to_c(v));
  return rep;
}

NumericReport numeric_verify(const Presentation& p, const NumericRep& rep, const std::vector<Identity>& extra) {
  NumericReport out;
  auto consider = [&](const std::string& label, const NCPoly& poly) {
    const double r = operator_norm(evaluate(poly, rep));
    ++out.checked;
    if (out.worst.empty() || r > out.max_residual) {
      out.max_residual = r;
      out.worst = label;
    }
  };
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    consider("relation " + p.relations[i].family + " #" + std::to_string(i + 1), p.relations[i].poly);
  }
  for (const Identity& id : extra) consider(id.label, id.poly);
  out.within_tolerance = out.max_residual <= rep.tolerance;
  return out;
}

CMatrix sqrt_positive(const CMatrix& q) {
  const CMatrix h = (q + q.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw NotPositive("matrix is not positive definite");
  }
  const Eigen::VectorXd s = es.eigenvalues().cwiseSqrt();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

CMatrix gaussian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = nd(rng);
      const double im = nd(rng);
      a(i, j) = {re, im};
    }
  return a;
}

}  // namespace

CMatrix random_positive(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CMatrix a = gaussian(dim, rng);
  return a * a.adjoint() + 0.5 * CMatrix::Identity(dim, dim);
}

CMatrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::HouseholderQR<CMatrix> qr(gaussian(dim, rng));
  return qr.householderQ();
}

AppendixReport appendix_q_checks(const CMatrix& q_m, const CMatrix& q_nn, int n, std::uint64_t seed,
                                 double tol) {
  AppendixReport rep;
  const auto m = q_m.rows();
  const CMatrix s = sqrt_positive(q_m);
  const CMatrix s_inv = s.inverse();
  const CMatrix q_inv = q_m.inverse();
  const CMatrix id = CMatrix::Identity(m, m);

  auto twisted = [&](const CMatrix& u) {
    return std::max(operator_norm(u.adjoint() * q_m * u * q_inv - id),
                    operator_norm(q_m * u * q_inv * u.adjoint() - id));
  };
  auto unitary = [&](const CMatrix& u) {
    const CMatrix v = s * u * s_inv;
    return std::max(operator_norm(v.adjoint() * v - id), operator_norm(v * v.adjoint() - id));
  };

  const CMatrix u = s_inv * random_unitary(static_cast<int>(m), seed) * s;
  rep.twisted_residual = twisted(u);
  rep.unitary_residual = unitary(u);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const CMatrix broken = u + 0.1 * gaussian(static_cast<int>(m), rng);
  rep.broken_twisted_residual = twisted(broken);
  rep.broken_unitary_residual = unitary(broken);

  const int nn = n * n;
  if (q_nn.rows() != nn || q_nn.cols() != nn) throw DimensionMismatch("Q on C^n (x) C^n must be n^2 x n^2");
  sqrt_positive(q_nn);
  const CMatrix qt = q_nn.inverse();
  auto idx = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  CMatrix p(nn, nn), pt(nn, nn), pt_literal(nn, nn);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          p(idx(k, l), idx(i, j)) = q_nn(idx(l, k), idx(i, j));
          pt(idx(k, l), idx(i, j)) = qt(idx(k, l), idx(j, i));
          pt_literal(idx(k, l), idx(i, j)) = q_nn(idx(k, l), idx(j, i));
        }
  const CMatrix id_nn = CMatrix::Identity(nn, nn);
  rep.p_inverse_residual = operator_norm(p * pt - id_nn);
  rep.literal_p_inverse_residual = operator_norm(p * pt_literal - id_nn);

  rep.pass = rep.twisted_residual <= tol && rep.unitary_residual <= tol &&
             rep.broken_twisted_residual > tol && rep.broken_unitary_residual > tol &&
             rep.p_inverse_residual <= tol;
  return rep;
}

ClassicalPoints classical_point_discrepancy(int n, const QMatrix& q1, const QMatrix& q2, int cap) {
  ClassicalPoints out;
  for (const Character& chi : characters_magic_q(n, q1, cap)) out.first.push_back(character_permutation(chi, n));
  for (const Character& chi : characters_magic_q(n, q2, cap)) out.second.push_back(character_permutation(chi, n));
  out.distinct = out.first != out.second;
  return out;
}

nlohmann::json to_json(const NumericRep& rep) {
  nlohmann::json images = nlohmann::json::object();
  for (const auto& [g, m] : rep.images) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
    images[g.str()] = std::move(entries);
  }
  return {{"dim", rep.dim}, {"tolerance", rep.tolerance}, {"images", std::move(images)}};
}

NumericRep numeric_rep_from_json(const nlohmann::json& j) {
  NumericRep rep;
  rep.dim = j.at("dim").get<std::size_t>();
  rep.tolerance = j.at("tolerance").get<double>();
  const auto d = static_cast<Eigen::Index>(rep.dim);
  for (const auto& [name, entries] : j.at("images").items()) {
    auto g = Gen::parse(name);
    if (!g) throw std::invalid_argument("numeric_rep_from_json: bad generator " + name);
    if (entries.size() != rep.dim * rep.dim) throw std::invalid_argument("numeric_rep_from_json: bad size for " + name);
    CMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k) {
        const auto& e = entries.at(static_cast<std::size_t>(i * d + k));
        m(i, k) = {e.at(0).get<double>(), e.at(1).get<double>()};
      }
    rep.images[*g] = std::move(m);
  }
  return rep;
}

}  // namespace qaut
