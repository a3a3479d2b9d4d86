#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperfourier/generators.hpp"
#include "hyperfourier/multivector.hpp"
#include "hyperfourier/quaternion.hpp"

using namespace hyperfourier;

namespace {

Quaternion random_quat(Rng& rng) {
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0)};
}

Multivector31 random_mv(Rng& rng) {
    Multivector31 m;
    for (double& v : m.c) v = rng.uniform(-1.0, 1.0);
    return m;
}

}  // namespace

TEST_CASE("quaternion unit multiplication table") {
    CHECK(kQuatI * kQuatJ == kQuatK);
    CHECK(kQuatJ * kQuatI == -kQuatK);
    CHECK(kQuatJ * kQuatK == kQuatI);
    CHECK(kQuatK * kQuatJ == -kQuatI);
    CHECK(kQuatK * kQuatI == kQuatJ);
    CHECK(kQuatI * kQuatK == -kQuatJ);
    CHECK(kQuatI * kQuatI == -kQuatOne);
    CHECK(kQuatJ * kQuatJ == -kQuatOne);
    CHECK(kQuatK * kQuatK == -kQuatOne);
    CHECK(kQuatI * kQuatJ * kQuatK == -kQuatOne);
}

TEST_CASE("quaternion identity and conjugation") {
    const Quaternion q{1, 2, 3, 4};
    CHECK(kQuatOne * q == q);
    CHECK(q * kQuatOne == q);
    CHECK(q.conj() == Quaternion{1, -2, -3, -4});
    CHECK(q.conj().conj() == q);
    CHECK(q * q.conj() == Quaternion{30, 0, 0, 0});
    CHECK(q.norm_sq() == 30.0);
    CHECK(Quaternion{0, 5, -5, 7}.scalar_part() == 0.0);
    CHECK(q.scalar_part() == 0.5 * (q + q.conj()).r);
}

TEST_CASE("split of the identity") {
    const SplitPair sp = quat_split(kQuatOne);
    CHECK(sp.plus == (kQuatOne + kQuatK) * 0.5);
    CHECK(sp.minus == (kQuatOne - kQuatK) * 0.5);
}

TEST_CASE("split of (1,2,3,4) against the direct product oracle") {
    const Quaternion q{1, 2, 3, 4};
    const SplitPair sp = quat_split(q);
    // Oracle: (q ± iqj)/2 assembled with plain quaternion products.
    const Quaternion iqj = kQuatI * q * kQuatJ;
    CHECK(sp.plus == (q + iqj) * 0.5);
    CHECK(sp.minus == (q - iqj) * 0.5);
    CHECK(sp.plus == Quaternion{5, -1, 1, 5} * 0.5);
    CHECK(sp.minus == Quaternion{-3, 5, 5, 3} * 0.5);
    CHECK(sp.minus.norm_sq() == doctest::Approx(17.0).epsilon(1e-15));
    CHECK(sp.plus.norm_sq() == doctest::Approx(13.0).epsilon(1e-15));
    CHECK(sp.minus.norm_sq() + sp.plus.norm_sq() == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(sp.minus + sp.plus == q);  // dyadic values reconstruct bit-exactly
}

TEST_CASE("split eigenvalue structure") {
    Rng rng(11);
    for (int it = 0; it < 100; ++it) {
        const SplitPair sp = quat_split(random_quat(rng));
        CHECK((sandwich_iqj(sp.plus) - sp.plus).norm() == 0.0);
        CHECK((sandwich_iqj(sp.minus) + sp.minus).norm() == 0.0);
    }
}

TEST_CASE("modulus identity and reconstruction, seeded") {
    Rng rng(42);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion q = random_quat(rng);
        const SplitPair sp = quat_split(q);
        CHECK((sp.minus + sp.plus - q).norm() <= 1e-15 * q.norm());
        CHECK(std::abs(q.norm_sq() - sp.minus.norm_sq() - sp.plus.norm_sq()) <=
              1e-12 * q.norm_sq());
    }
}

TEST_CASE("mixed scalar parts vanish") {
    const Quaternion q{1, 2, 3, 4};
    const auto [self1, self2] = mixed_scalar(q, q);
    CHECK(self1 == 0.0);
    CHECK(self2 == 0.0);

    const auto [ok1, ok2] = mixed_scalar(kQuatOne, kQuatK);
    CHECK(ok1 == 0.0);
    CHECK(ok2 == 0.0);

    Rng rng(7);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion p = random_quat(rng);
        const Quaternion r = random_quat(rng);
        const auto [m1, m2] = mixed_scalar(p, r);
        const double scale = p.norm() * r.norm();
        CHECK(std::abs(m1) < 1e-13 * scale + 1e-300);
        CHECK(std::abs(m2) < 1e-13 * scale + 1e-300);
    }
}

TEST_CASE("norm is multiplicative") {
    Rng rng(13);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion p = random_quat(rng);
        const Quaternion q = random_quat(rng);
        CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-12));
    }
}

TEST_CASE("idempotent-like products of (1 +- k)/2") {
    const Quaternion plus = (kQuatOne + kQuatK) * 0.5;
    const Quaternion minus = (kQuatOne - kQuatK) * 0.5;
    CHECK(plus * plus == kQuatK * 0.5);
    CHECK(minus * minus == kQuatK * -0.5);
}

TEST_CASE("blade metric and the three anti-commuting units") {
    CHECK(mv_et * mv_et == -mv_one);
    CHECK(mv_i3 * mv_i3 == -mv_one);
    CHECK(mv_ist * mv_ist == -mv_one);
    for (int g : {blades::kE1, blades::kE2, blades::kE3}) {
        const Multivector31 e = Multivector31::basis(g);
        CHECK(e * e == mv_one);
    }
    CHECK(mv_et * mv_i3 == mv_ist);
    CHECK(mv_i3 * mv_et == -mv_ist);
    CHECK(mv_i3 * mv_ist == mv_et);
    CHECK(mv_ist * mv_et == mv_i3);
}

TEST_CASE("geometric product is associative") {
    Rng rng(3);
    for (int it = 0; it < 500; ++it) {
        const Multivector31 a = random_mv(rng), b = random_mv(rng), c = random_mv(rng);
        const double scale = a.norm() * b.norm() * c.norm();
        CHECK(((a * b) * c - a * (b * c)).norm() <= 1e-12 * scale);
    }
}

TEST_CASE("volume-time embedding is a homomorphism") {
    CHECK(quat_embed(kQuatI) * quat_embed(kQuatJ) == quat_embed(kQuatK));
    Rng rng(5);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion p = random_quat(rng);
        const Quaternion q = random_quat(rng);
        const Multivector31 lhs = quat_embed(p) * quat_embed(q);
        const Multivector31 rhs = quat_embed(p * q);
        CHECK((lhs - rhs).norm() <= 1e-12 * p.norm() * q.norm());
        CHECK(quat_embed(p).norm() == doctest::Approx(p.norm()).epsilon(1e-15));
    }
}

TEST_CASE("extract round trips and rejects off-subalgebra support") {
    const Quaternion q{1, 2, 3, 4};
    CHECK(quat_extract(quat_embed(q)) == q);
    CHECK_THROWS_AS((void)quat_extract(Multivector31::basis(blades::kE1)), NotInSubalgebra);
    Multivector31 noisy = quat_embed(q);
    noisy.c[std::size_t(blades::kE2)] = 1e-9;
    CHECK_THROWS_AS((void)quat_extract(noisy), NotInSubalgebra);
    noisy.c[std::size_t(blades::kE2)] = 1e-14;
    CHECK(quat_extract(noisy) == q);
}

TEST_CASE("spacetime split of simple elements") {
    const STSplitPair one = st_split(mv_one);
    CHECK(one.plus == (mv_one + mv_ist) * 0.5);
    CHECK(one.minus == (mv_one - mv_ist) * 0.5);

    // On e1 the sandwich lands on the e_t e2 e3 trivector.
    const Multivector31 e1 = Multivector31::basis(blades::kE1);
    const Multivector31 t = mv_et * e1 * mv_i3;
    const STSplitPair sp = st_split(e1);
    CHECK(sp.plus == (e1 + t) * 0.5);
    CHECK(sp.minus == (e1 - t) * 0.5);
    CHECK(t == Multivector31::basis(blades::kEt) * e1 * mv_i3);
}

TEST_CASE("spacetime split matches the quaternion split through the embedding") {
    Rng rng(17);
    for (int it = 0; it < 200; ++it) {
        const Quaternion q = random_quat(rng);
        const SplitPair qs = quat_split(q);
        const STSplitPair ms = st_split(quat_embed(q));
        CHECK((ms.minus - quat_embed(qs.minus)).norm() == 0.0);
        CHECK((ms.plus - quat_embed(qs.plus)).norm() == 0.0);
    }
}

TEST_CASE("spacetime split reconstruction, modulus and involution") {
    Rng rng(19);
    for (int it = 0; it < 500; ++it) {
        const Multivector31 m = random_mv(rng);
        const STSplitPair sp = st_split(m);
        CHECK((sp.minus + sp.plus - m).norm() <= 1e-15 * m.norm());
        CHECK(std::abs(m.norm_sq() - sp.minus.norm_sq() - sp.plus.norm_sq()) <=
              1e-12 * m.norm_sq());
        CHECK((sandwich_et_i3(sp.plus) - sp.plus).norm() == 0.0);
        CHECK((sandwich_et_i3(sp.minus) + sp.minus).norm() == 0.0);
    }
}
