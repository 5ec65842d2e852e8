#include "qaut/hopf.hpp"

#include <stdexcept>

namespace qaut {

namespace {

// Letters of a word split by leg, each moved back to leg 0.
std::vector<Word> split_legs(const Word& w, int legs) {
  std::vector<Word::Storage> parts(static_cast<std::size_t>(legs));
  for (Gen g : w) {
    const int leg = g.leg();
    if (leg < 1 || leg > legs) throw std::invalid_argument("split_legs: letter on unexpected leg");
    parts[static_cast<std::size_t>(leg - 1)].push_back(g.on_leg(0));
  }
  std::vector<Word> out;
  out.reserve(parts.size());
  for (auto& s : parts) out.emplace_back(std::move(s));
  return out;
}

NCPoly identity_entry(std::size_t a, std::size_t b) {
  return a == b ? NCPoly::one() : NCPoly();
}

std::vector<Identity> matrix_identities(const std::string& label, const PolyMatrix& m) {
  std::vector<Identity> ids;
  for (std::size_t a = 0; a < m.dim(); ++a) {
    for (std::size_t b = 0; b < m.dim(); ++b) {
      ids.push_back({label + "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]",
                     m(a, b) - identity_entry(a, b)});
    }
  }
  return ids;
}

GaussQ counit_of(const Presentation& p, Gen g) {
  auto it = p.counit.find(g.unstarred());
  if (it == p.counit.end()) throw MissingImage(g.unstarred());
  return g.starred() ? it->second.conj() : it->second;
}

NCPoly counit_of_word(const Presentation& p, const Word& w) {
  GaussQ c(1);
  for (Gen g : w) {
    c *= counit_of(p, g);
    if (c.is_zero()) return {};
  }
  return NCPoly::constant(c);
}

std::optional<NCPoly> antipode_image(const Presentation& p, Gen g) {
  auto it = p.antipode.find(g);
  if (it == p.antipode.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::vector<Gen> irreducible_letters(const RewriteSystem& sys, const std::vector<Gen>& letters) {
  std::vector<Gen> out;
  for (Gen g : letters) {
    for (Gen h : {g, g.star()}) {
      if (sys.is_irreducible(Word{h})) out.push_back(h);
    }
  }
  return out;
}

RewriteSystem tensor_power_system(const RewriteSystem& single, const std::vector<Gen>& letters,
                                  int copies) {
  if (copies < 1 || copies > Gen::kMaxLeg) throw std::out_of_range("tensor_power_system: copies");
  std::vector<RewriteRule> rules;
  for (int leg = 1; leg <= copies; ++leg) {
    for (const RewriteRule& r : single.rules()) {
      Word::Storage lhs;
      for (Gen g : r.lhs) lhs.push_back(g.on_leg(leg));
      rules.push_back({rules.size(), Word(std::move(lhs)), on_leg(r.rhs, leg), RuleOrigin::Assembled,
                       {r.id}});
    }
  }
  const std::vector<Gen> free_letters = irreducible_letters(single, letters);
  for (int right = 2; right <= copies; ++right) {
    for (int left = 1; left < right; ++left) {
      for (Gen h : free_letters) {
        for (Gen g : free_letters) {
          const Gen hr = h.on_leg(right);
          const Gen gl = g.on_leg(left);
          rules.push_back({rules.size(), Word{hr, gl}, NCPoly::monomial(Word{gl, hr}),
                           RuleOrigin::Assembled, {}});
        }
      }
    }
  }
  return RewriteSystem::assemble(std::move(rules), single.status(), single.limits(),
                                 single.exhaustive());
}

HopfContext::HopfContext(Presentation p, CompletionLimits limits, const TraceSink& trace)
    : p_(std::move(p)), single_(build_system(p_, limits, trace)) {}

HopfContext::HopfContext(Presentation p, RewriteSystem single)
    : p_(std::move(p)), single_(std::move(single)) {}

const RewriteSystem& HopfContext::doubled() const {
  if (!doubled_) doubled_ = tensor_power_system(single_, p_.generators, 2);
  return *doubled_;
}

const RewriteSystem& HopfContext::tripled() const {
  if (!tripled_) tripled_ = tensor_power_system(single_, p_.generators, 3);
  return *tripled_;
}

NCPoly apply_coproduct_on_leg(const NCPoly& p, const Presentation& pres, int leg) {
  return substitute(p, [&](Gen g) -> std::optional<NCPoly> {
    if (g.starred()) return std::nullopt;
    if (g.leg() < leg) return NCPoly::gen(g);
    if (g.leg() > leg) return NCPoly::gen(g.on_leg(g.leg() + 1));
    auto it = pres.coproduct.find(g.on_leg(0));
    if (it == pres.coproduct.end()) throw MissingImage(g.on_leg(0));
    std::vector<Term> terms;
    for (const Term& t : it->second.terms()) {
      Word::Storage letters;
      for (Gen h : t.word) letters.push_back(h.on_leg(h.leg() + leg - 1));
      terms.push_back({Word(std::move(letters)), t.coeff});
    }
    return NCPoly::from_terms(std::move(terms));
  });
}

StructureReport check_coproduct_well_defined(const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    ids.push_back({"relation " + p.relations[i].family + " #" + std::to_string(i + 1),
                   substitute(p.relations[i].poly, p.coproduct)});
  }
  StructureReport rep = verify_identities("hopf.coproduct", ids, ctx.doubled());
  rep.details = "images of the defining relations reduced in the doubled system";
  return rep;
}

StructureReport check_coassociativity(const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  bool free_equal = true;
  for (Gen g : p.generators) {
    const NCPoly phi = p.coproduct.at(g);
    NCPoly diff = apply_coproduct_on_leg(phi, p, 1) - apply_coproduct_on_leg(phi, p, 2);
    free_equal = free_equal && diff.is_zero();
    ids.push_back({g.str(), std::move(diff)});
  }
  if (free_equal) {
    StructureReport rep = verify_free("hopf.coassociativity", ids);
    rep.details = "(Phi x id)Phi and (id x Phi)Phi agree in the free algebra";
    return rep;
  }
  StructureReport rep = verify_identities("hopf.coassociativity", ids, ctx.tripled());
  rep.details = "compared in the tripled system";
  return rep;
}

StructureReport check_counit(const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  std::vector<Identity> ids;
  for (Gen g : p.generators) {
    NCPoly left, right;
    for (const Term& t : p.coproduct.at(g).terms()) {
      const auto parts = split_legs(t.word, 2);
      left += NCPoly::constant(t.coeff) * counit_of_word(p, parts[0]) * NCPoly::monomial(parts[1]);
      right += NCPoly::constant(t.coeff) * NCPoly::monomial(parts[0]) * counit_of_word(p, parts[1]);
    }
    ids.push_back({"(eps x id)Phi(" + g.str() + ")", left - NCPoly::gen(g)});
    ids.push_back({"(id x eps)Phi(" + g.str() + ")", right - NCPoly::gen(g)});
  }
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    NCPoly value;
    for (const Term& t : p.relations[i].poly.terms()) {
      value += NCPoly::constant(t.coeff) * counit_of_word(p, t.word);
    }
    ids.push_back({"eps(relation " + p.relations[i].family + " #" + std::to_string(i + 1) + ")",
                   std::move(value)});
  }
  StructureReport rep = verify_free("hopf.counit", ids);
  rep.details = "exact identities, no quotient";
  return rep;
}

StructureReport check_antipode(const HopfContext& ctx) {
  const Presentation& p = ctx.presentation();
  auto kappa = [&](Gen g) { return antipode_image(p, g); };
  std::vector<Identity> ids;
  for (Gen g : p.generators) {
    NCPoly left, right;
    for (const Term& t : p.coproduct.at(g).terms()) {
      const auto parts = split_legs(t.word, 2);
      const NCPoly k1 = substitute_reversed(NCPoly::monomial(parts[0]), kappa);
      const NCPoly k2 = substitute_reversed(NCPoly::monomial(parts[1]), kappa);
      left += NCPoly::constant(t.coeff) * k1 * NCPoly::monomial(parts[1]);
      right += NCPoly::constant(t.coeff) * NCPoly::monomial(parts[0]) * k2;
    }
    const NCPoly eps = NCPoly::constant(counit_of(p, g));
    ids.push_back({"kappa(g1) g2 for " + g.str(), left - eps});
    ids.push_back({"g1 kappa(g2) for " + g.str(), right - eps});
  }
  std::string details = "antipode law on generators";
  if (p.kac) {
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      ids.push_back({"kappa(relation " + p.relations[i].family + " #" + std::to_string(i + 1) + ")",
                     substitute_reversed(p.relations[i].poly, kappa)});
    }
    details += "; reversed substitution on every relation";
  } else {
    details += "; antipode is not *-preserving, relation images not checked";
  }
  StructureReport rep = verify_identities("hopf.antipode", ids, ctx.single());
  rep.details = details;
  return rep;
}

StructureReport check_kac_unitarity(const HopfContext& ctx) {
  const PolyMatrix u = ctx.presentation().fundamental();
  const PolyMatrix ubar = u.conjugate();
  std::vector<Identity> ids;
  for (auto& id : matrix_identities("u u*", u * u.adjoint())) ids.push_back(std::move(id));
  for (auto& id : matrix_identities("u* u", u.adjoint() * u)) ids.push_back(std::move(id));
  for (auto& id : matrix_identities("ubar ubar*", ubar * ubar.adjoint())) ids.push_back(std::move(id));
  for (auto& id : matrix_identities("ubar* ubar", ubar.adjoint() * ubar)) ids.push_back(std::move(id));
  StructureReport rep = verify_identities("hopf.kac_unitarity", ids, ctx.single());
  rep.details = "u and its entrywise adjoint are unitary";
  return rep;
}

StructureReport check_orthogonality(const HopfContext& ctx) {
  const PolyMatrix u = ctx.presentation().fundamental();
  std::vector<Identity> ids;
  for (auto& id : matrix_identities("u u^t", u * u.transpose())) ids.push_back(std::move(id));
  for (auto& id : matrix_identities("u^t u", u.transpose() * u)) ids.push_back(std::move(id));
  StructureReport rep = verify_identities("hopf.orthogonality", ids, ctx.single());
  rep.details = "u u^t = I = u^t u";
  return rep;
}

StructureReport check_commutativity(const HopfContext& ctx) {
  const auto& gens = ctx.presentation().generators;
  std::vector<Identity> ids;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ids.push_back({"[" + gens[i].str() + "," + gens[j].str() + "]",
                     commutator(NCPoly::gen(gens[i]), NCPoly::gen(gens[j]))});
    }
  }
  StructureReport rep = verify_identities("hopf.commutativity", ids, ctx.single());
  rep.details = "all generator commutators";
  return rep;
}

StructureReport check_morphism(const Presentation& src, const RewriteSystem& dst,
                               const Substitution& phi, std::string check) {
  std::vector<Identity> ids;
  for (std::size_t i = 0; i < src.relations.size(); ++i) {
    ids.push_back({"relation " + src.relations[i].family + " #" + std::to_string(i + 1),
                   substitute(src.relations[i].poly, phi)});
  }
  StructureReport rep = verify_identities(std::move(check), ids, dst);
  rep.details = "images of " + src.name + " relations";
  return rep;
}

}  // namespace qaut
