#include <doctest.h>

#include "modinv/errors.hpp"
#include "modinv/gf.hpp"

using namespace modinv;

TEST_CASE("prime field arithmetic") {
  auto F = FieldCtx::make(7);
  CHECK(F->p() == 7);
  CHECK(F->k() == 1);
  CHECK(F->size() == 7);
  Fq a = F->from_int(3), b = F->from_int(5);
  CHECK(F->to_string(F->add(a, b)) == "1");
  CHECK(F->to_string(F->mul(a, b)) == "1");
  CHECK(F->mul(a, F->inv(a)) == F->one());
  CHECK(F->from_int(-1) == F->from_int(6));
  CHECK(F->is_zero(F->sub(a, a)));
  CHECK(F->pow(a, 6) == F->one());  // Fermat
}

TEST_CASE("GF(4) arithmetic: inverses, division, p-th roots") {
  auto F = FieldCtx::make(2, {1, 1, 1});  // t^2 + t + 1
  CHECK(F->size() == 4);
  Fq t = F->parse("t");
  Fq one = F->one();
  // 1/(1+t) = t since t(1+t) = t + t^2 = 1
  CHECK(F->inv(F->add(one, t)) == t);
  CHECK(F->div(one, t) == F->add(one, t));
  // square root of t is t+1: (t+1)^2 = t^2+1 = t
  CHECK(F->pth_root(t) == F->add(one, t));
  CHECK(F->mul(F->pth_root(t), F->pth_root(t)) == t);
}

TEST_CASE("p-th root inverts the Frobenius on every element") {
  for (auto F : {FieldCtx::make(2, {1, 1, 1}), FieldCtx::make(3, {1, 0, 1}),
                 FieldCtx::make(2, {1, 1, 0, 1}), FieldCtx::make(5)}) {
    for (const Fq& a : F->all_elements()) {
      CHECK(F->pth_root(F->pow(a, F->p())) == a);
      CHECK(F->pow(F->pth_root(a), F->p()) == a);
    }
  }
}

TEST_CASE("Frobenius is additive") {
  auto F = FieldCtx::make(3, {1, 0, 1});  // GF(9) = F_3[t]/(t^2+1)
  for (const Fq& a : F->all_elements())
    for (const Fq& b : F->all_elements())
      CHECK(F->pow(F->add(a, b), 3) == F->add(F->pow(a, 3), F->pow(b, 3)));
}

TEST_CASE("element text round-trips") {
  for (auto F : {FieldCtx::make(2, {1, 1, 1}), FieldCtx::make(3, {1, 0, 1}), FieldCtx::make(13)}) {
    for (const Fq& a : F->all_elements()) {
      CHECK(F->parse(F->to_string(a)) == a);
    }
  }
}

TEST_CASE("invalid field parameters are rejected") {
  CHECK_THROWS_AS(FieldCtx::make(6), error);                // not prime
  CHECK_THROWS_AS(FieldCtx::make(2, {1, 0, 1}), error);     // t^2+1 = (t+1)^2 mod 2
  CHECK_THROWS_AS(FieldCtx::make(3, {2, 0, 1}), error);     // t^2+2 = (t+1)(t+2) mod 3
  CHECK_THROWS((void)FieldCtx::make(7)->div(FieldCtx::make(7)->one(), FieldCtx::make(7)->zero()));
}

TEST_CASE("modulus text round-trips") {
  std::vector<uint32_t> c = parse_modulus_text("t^2+t+1", 2);
  CHECK(c == std::vector<uint32_t>{1, 1, 1});
  CHECK(modulus_to_string(c) == "t^2+t+1");
  CHECK(parse_modulus_text("t^3+t+1", 2) == std::vector<uint32_t>{1, 1, 0, 1});
  CHECK(parse_modulus_text(modulus_to_string({1, 0, 1}), 3) == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("mixing field contexts is detected") {
  auto F4 = FieldCtx::make(2, {1, 1, 1});
  auto F2 = FieldCtx::make(2);
  CHECK_THROWS_AS((void)F4->add(F4->one(), F2->one()), error);
}
