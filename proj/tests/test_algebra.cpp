#include <doctest.h>

#include <complex>
#include <map>

#include "qaut/dsl.hpp"
#include "qaut/ncalg.hpp"
#include "support.hpp"

using namespace qaut;
using qaut::testing::Rng;

namespace {

// Naive term map: word keys -> coefficient, built without NCPoly's merge logic.
using Naive = std::map<std::vector<std::uint64_t>, GaussQ>;

Naive naive(const NCPoly& p) {
  Naive out;
  for (const Term& t : p.terms()) {
    std::vector<std::uint64_t> key;
    for (Gen g : t.word) key.push_back(g.key());
    out[key] += t.coeff;
  }
  return out;
}

Naive naive_mul(const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<std::uint64_t> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::complex<double> approx(const GaussQ& q) { return q.to_complex(); }

const std::vector<Gen> kLetters = testing::with_stars({Gen::x(1, 1), Gen::x(1, 2), Gen::x(2, 1), Gen::u(1, 1)});

}  // namespace

TEST_SUITE("ncalg") {
  TEST_CASE("GaussQ field operations agree with complex doubles") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const GaussQ a = rng.scalar();
      const GaussQ b = rng.nonzero_scalar();
      CHECK(std::abs(approx(a + b) - (approx(a) + approx(b))) < 1e-12);
      CHECK(std::abs(approx(a * b) - approx(a) * approx(b)) < 1e-12);
      CHECK(std::abs(approx(a / b) - approx(a) / approx(b)) < 1e-12);
      CHECK((a / b) * b == a);
      CHECK(a.conj().conj() == a);
      CHECK((a * a.conj()).is_real());
    }
  }

  TEST_CASE("GaussQ text form and division by zero") {
    CHECK(GaussQ(3).str() == "3");
    CHECK(GaussQ::fraction(-1, 2).str() == "-1/2");
    CHECK(GaussQ::i().str() == "i");
    CHECK(GaussQ(mpq_class(2), mpq_class(-3, 4)).str() == "2-3/4i");
    CHECK_THROWS_AS(GaussQ(1) / GaussQ(), std::domain_error);
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const GaussQ a = rng.scalar();
      CHECK(parse_scalar(a.str()) == a);
    }
  }

  TEST_CASE("generator keys order by leg, star, family, indices") {
    CHECK(Gen::x(2, 2) < Gen::m(1, 1, 1, 1));
    CHECK(Gen::x(1, 2) < Gen::x(2, 1));
    CHECK(Gen::x(4, 4) < Gen::x(1, 1).star());
    CHECK(Gen::x(1, 1).star() < Gen::x(1, 1).on_leg(1));
    CHECK(Gen::x(1, 1).on_leg(1).star() < Gen::x(1, 1).on_leg(2));
    CHECK_THROWS_AS(Gen::x(256, 1), std::out_of_range);
    CHECK_THROWS_AS(Gen::make(Family::M, {1, 2}), std::out_of_range);
  }

  TEST_CASE("generator text round-trips") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      Gen g;
      switch (rng.uniform(0, 3)) {
        case 0: g = Gen::x(rng.uniform(1, 9), rng.uniform(1, 9)); break;
        case 1: g = Gen::m(rng.uniform(1, 3), rng.uniform(1, 3), rng.uniform(1, 3), rng.uniform(1, 3)); break;
        case 2: g = Gen::b(1, 2, 2, 1, rng.uniform(1, 3), rng.uniform(1, 3)); break;
        default: g = Gen::u(rng.uniform(1, 12), rng.uniform(1, 12)); break;
      }
      if (rng.coin()) g = g.star();
      if (rng.coin()) g = g.on_leg(rng.uniform(1, 3));
      const auto back = Gen::parse(g.str());
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
    CHECK_FALSE(Gen::parse("a[1").has_value());
    CHECK_FALSE(Gen::parse("q[1,1]").has_value());
  }

  TEST_CASE("words order degree-lexicographically") {
    const Word a{Gen::x(2, 2)};
    const Word ab{Gen::x(1, 1), Gen::x(1, 2)};
    const Word ba{Gen::x(1, 2), Gen::x(1, 1)};
    CHECK(Word{} < a);
    CHECK(a < ab);
    CHECK(ab < ba);
    CHECK(ab.star() == Word{Gen::x(1, 2).star(), Gen::x(1, 1).star()});
  }

  TEST_CASE("listed examples") {
    const NCPoly a11 = NCPoly::gen(Gen::x(1, 1));
    const NCPoly a12 = NCPoly::gen(Gen::x(1, 2));
    const NCPoly a21 = NCPoly::gen(Gen::x(2, 1));
    const NCPoly a22 = NCPoly::gen(Gen::x(2, 2));
    CHECK(NCPoly() + a11 == a11);
    CHECK(a11 + a11 == GaussQ(2) * a11);
    CHECK((a11 * a12 + GaussQ(-1) * (a11 * a12)).is_zero());
    CHECK(NCPoly::one() * a11 == a11);
    CHECK(a11 * a22 == NCPoly::monomial(Word{Gen::x(1, 1), Gen::x(2, 2)}));
    CHECK((a11 + a12) * a21 == a11 * a21 + a12 * a21);
    CHECK(star(a11) == NCPoly::gen(Gen::x(1, 1).star()));
    CHECK(star(GaussQ::i() * (a11 * a12)) ==
          NCPoly::monomial(Word{Gen::x(1, 2).star(), Gen::x(1, 1).star()}, -GaussQ::i()));
    CHECK(star(NCPoly::one()) == NCPoly::one());
  }

  TEST_CASE("multiplication matches a naive term map") {
    Rng rng(14);
    for (int trial = 0; trial < 300; ++trial) {
      const NCPoly p = rng.poly(kLetters, 5, 3);
      const NCPoly q = rng.poly(kLetters, 5, 3);
      CHECK(naive(p * q) == naive_mul(naive(p), naive(q)));
    }
  }

  TEST_CASE("ring axioms on random triples") {
    Rng rng(15);
    for (int trial = 0; trial < 300; ++trial) {
      const NCPoly p = rng.poly(kLetters, 4, 3);
      const NCPoly q = rng.poly(kLetters, 4, 3);
      const NCPoly r = rng.poly(kLetters, 4, 3);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p + q) * r == p * r + q * r);
      CHECK(p + q == q + p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p - p).is_zero());
      CHECK(NCPoly::one() * p == p);
      CHECK(p * NCPoly::one() == p);
      CHECK((NCPoly() * p).is_zero());
      const GaussQ c = rng.scalar();
      CHECK(c * (p * q) == (c * p) * q);
    }
  }

  TEST_CASE("star is an anti-multiplicative conjugate-linear involution") {
    Rng rng(16);
    for (int trial = 0; trial < 300; ++trial) {
      const NCPoly p = rng.poly(kLetters, 4, 3);
      const NCPoly q = rng.poly(kLetters, 4, 3);
      const GaussQ c = rng.scalar();
      CHECK(star(star(p)) == p);
      CHECK(star(p * q) == star(q) * star(p));
      CHECK(star(p + q) == star(p) + star(q));
      CHECK(star(c * p) == c.conj() * star(p));
    }
  }

  TEST_CASE("substitution is a unital *-homomorphism") {
    Rng rng(17);
    const std::vector<Gen> base = {Gen::x(1, 1), Gen::x(1, 2), Gen::x(2, 1), Gen::u(1, 1)};
    const std::vector<Gen> targets = testing::with_stars({Gen::letter(1), Gen::letter(2), Gen::letter(3)});
    for (int trial = 0; trial < 200; ++trial) {
      Substitution phi;
      for (Gen g : base) phi[g] = rng.poly(targets, 3, 2);
      const NCPoly p = rng.poly(kLetters, 4, 3);
      const NCPoly q = rng.poly(kLetters, 4, 3);
      CHECK(substitute(p * q, phi) == substitute(p, phi) * substitute(q, phi));
      CHECK(substitute(p + q, phi) == substitute(p, phi) + substitute(q, phi));
      CHECK(substitute(star(p), phi) == star(substitute(p, phi)));
      CHECK(substitute(NCPoly::one(), phi) == NCPoly::one());
    }
    Substitution id;
    for (Gen g : base) id[g] = NCPoly::gen(g);
    const NCPoly w = NCPoly::gen(Gen::x(1, 1)) * NCPoly::gen(Gen::x(1, 2));
    CHECK(substitute(w, id) == w);
    CHECK_THROWS_AS(substitute(NCPoly::gen(Gen::x(3, 3)), id), MissingImage);
  }

  TEST_CASE("coproduct image under substitution") {
    Substitution phi;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        NCPoly img;
        for (int k = 1; k <= 2; ++k) img += NCPoly::gen(Gen::x(i, k).on_leg(1)) * NCPoly::gen(Gen::x(k, j).on_leg(2));
        phi[Gen::x(i, j)] = img;
      }
    const NCPoly lhs = substitute(NCPoly::gen(Gen::x(1, 2)), phi);
    CHECK(lhs.size() == 2);
    CHECK(lhs.coeff(Word{Gen::x(1, 1).on_leg(1), Gen::x(1, 2).on_leg(2)}).is_one());
    CHECK(substitute(NCPoly::gen(Gen::x(1, 1).star()), phi) == star(phi[Gen::x(1, 1)]));
  }

  TEST_CASE("reversed substitution and legs") {
    const NCPoly w = NCPoly::gen(Gen::x(1, 1)) * NCPoly::gen(Gen::x(1, 2));
    auto swap = [](Gen g) -> std::optional<NCPoly> { return NCPoly::gen(Gen::x(g.index(1), g.index(0))); };
    CHECK(substitute_reversed(w, swap) == NCPoly::gen(Gen::x(2, 1)) * NCPoly::gen(Gen::x(1, 1)));
    const NCPoly l2 = on_leg(w, 2);
    for (const Term& t : l2.terms())
      for (Gen g : t.word) CHECK(g.leg() == 2);
    CHECK(commutator(w, w).is_zero());
  }
}
