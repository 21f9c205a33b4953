#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqmod/twist.hpp"

using namespace uqmod;

namespace {

PairingSpec uqsl2_pairing() { return make_pairing(preset_uqsl('A', 1)); }

// tensor expansions compared as multisets of (slot words/groups, coeff)
bool tensor_lists_equal(std::vector<SmashTensorTerm> a, std::vector<SmashTensorTerm> b) {
    auto key = [](const SmashTensorTerm& t) {
        std::string s;
        for (const auto& [w, g] : t.slots) {
            for (int l : w) s += char('a' + l);
            s += '|';
            for (long e : g.exps()) s += std::to_string(e) + ",";
            s += ';';
        }
        return s;
    };
    auto collapse = [&](std::vector<SmashTensorTerm>& v) {
        std::map<std::string, Scalar> m;
        for (auto& t : v) {
            auto k = key(t);
            auto it = m.find(k);
            if (it == m.end())
                m.emplace(k, t.coeff);
            else
                it->second += t.coeff;
        }
        return m;
    };
    auto ma = collapse(a), mb = collapse(b);
    for (auto& [k, c] : ma) {
        auto it = mb.find(k);
        if (it == mb.end()) {
            if (!c.is_zero()) return false;
        } else if (!(it->second == c)) {
            return false;
        }
    }
    for (auto& [k, c] : mb)
        if (ma.find(k) == ma.end() && !c.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("coproduct of a letter and of a group-like") {
    auto sp = uqsl2_pairing();
    const auto& U = sp.U();
    FieldCtx F = U.ctx();
    auto d = coproduct_iterate(SmashElement::letter(U, 0), 2);
    // z (x) u + u (x) 1
    REQUIRE(d.size() == 2);
    bool found_zu = false, found_u1 = false;
    for (const auto& t : d) {
        if (t.slots[0].first.empty() && t.slots[1].first == Word{0})
            found_zu = t.slots[0].second == U.deg[0] && t.coeff.is_one();
        if (t.slots[0].first == Word{0} && t.slots[1].first.empty())
            found_u1 = t.slots[1].second.is_identity() && t.coeff.is_one();
    }
    CHECK(found_zu);
    CHECK(found_u1);

    auto dg = coproduct_iterate(SmashElement::group(U, U.deg[0]), 3);
    REQUIRE(dg.size() == 1);
    for (int k = 0; k < 3; ++k) CHECK(dg[0].slots[static_cast<size_t>(k)].second == U.deg[0]);
}

TEST_CASE("coassociativity on words of length <= 4") {
    auto sp = make_pairing(preset_uqsl('A', 2));
    const auto& U = sp.U();
    for (int d = 0; d <= 4; ++d) {
        for (const auto& w : U.nich->basis_words(d)) {
            SmashElement x = SmashElement::term(U, w, GroupElement::identity(U.grp),
                                                Scalar::one(U.ctx()));
            // (Delta (x) id) Delta = Delta_3 = (id (x) Delta) Delta: expand the
            // leftmost slot of Delta_2 and compare with coproduct_iterate(x,3)
            auto d2 = coproduct_iterate(x, 2);
            std::vector<SmashTensorTerm> left;
            for (const auto& t : d2) {
                SmashElement first = SmashElement::term(U, t.slots[0].first, t.slots[0].second,
                                                        Scalar::one(U.ctx()));
                for (const auto& s : coproduct_iterate(first, 2)) {
                    SmashTensorTerm nt;
                    nt.slots = {s.slots[0], s.slots[1], t.slots[1]};
                    nt.coeff = t.coeff * s.coeff;
                    left.push_back(nt);
                }
            }
            CHECK(tensor_lists_equal(left, coproduct_iterate(x, 3)));
        }
    }
}

TEST_CASE("9-term Delta^2 of a length-2 word") {
    auto sp = make_pairing(preset_uqsl('A', 2));
    const auto& U = sp.U();
    SmashElement x = SmashElement::term(U, {0, 1}, GroupElement::identity(U.grp),
                                        Scalar::one(U.ctx()));
    auto d3 = coproduct_iterate(x, 3);
    // product of two trinomials: 9 terms before collection
    CHECK(d3.size() == 9);
}

TEST_CASE("tau on generators") {
    auto sp = uqsl2_pairing();
    const auto& U = sp.U();
    const auto& A = sp.A();
    FieldCtx F = A.ctx();
    GroupElement z = U.deg[0];
    GroupElement K = A.deg[0];

    // tau(z, g) = phi(z)(g) = chi^-1(K) = q^-2
    Scalar q = Scalar::variable(F, 0);
    CHECK(sp.tau(SmashElement::group(U, z), SmashElement::group(A, K)) == q.pow(-2));
    // tau(u, g) = 0, tau(z, a) = 0
    CHECK(sp.tau(SmashElement::letter(U, 0), SmashElement::group(A, K)).is_zero());
    CHECK(sp.tau(SmashElement::group(U, z), SmashElement::letter(A, 0)).is_zero());
    // tau(u, a) = beta = -q_11^-1 l_1
    Scalar l = preset_uqsl('A', 1).l[0];
    CHECK(sp.tau(SmashElement::letter(U, 0), SmashElement::letter(A, 0)) ==
          -q.pow(-2) * l);
}

TEST_CASE("tau on a length-2 pair matches the convolution oracle") {
    auto sp = make_pairing(preset_uqsl('A', 2));
    const auto& U = sp.U();
    const auto& A = sp.A();
    FieldCtx F = A.ctx();
    // tau(u_i u_j, w) = sum over Delta(w) of tau(u_i, w_(1)') tau(u_j ...):
    // direct oracle: tau(xy, a) = sum tau(x, a_(1)) tau(y, a_(2)) with the
    // A^{o cop} convolution = our recursion; verify against explicit
    // two-splits of Delta for all degree-2 words.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            SmashElement u = SmashElement::term(U, {i, j}, GroupElement::identity(U.grp),
                                                Scalar::one(F));
            for (const auto& wa : A.nich->basis_words(2)) {
                SmashElement a = SmashElement::term(A, wa, GroupElement::identity(A.grp),
                                                    Scalar::one(F));
                Scalar direct = sp.tau(u, a);
                Scalar conv = Scalar::zero(F);
                for (const auto& at : coproduct_iterate(a, 2))
                    conv += at.coeff *
                            sp.tau(SmashElement::letter(U, i),
                                   SmashElement::term(A, at.slots[0].first, at.slots[0].second,
                                                      Scalar::one(F))) *
                            sp.tau(SmashElement::letter(U, j),
                                   SmashElement::term(A, at.slots[1].first, at.slots[1].second,
                                                      Scalar::one(F)));
                CHECK(direct == conv);
            }
        }
}

TEST_CASE("(u (x) 1)(1 (x) a) = u (x) a") {
    auto sp = uqsl2_pairing();
    HElement u = HElement::embed_u(sp, SmashElement::letter(sp.U(), 0));
    HElement a = HElement::embed_a(sp, SmashElement::letter(sp.A(), 0));
    HElement prod = u * a;
    HElement expect = HElement::tensor(sp, SmashElement::letter(sp.U(), 0),
                                       SmashElement::letter(sp.A(), 0));
    CHECK(prod == expect);
}

TEST_CASE("reduced linking relation reproduced by twisted multiplication") {
    for (auto rd : {preset_uqsl('A', 1), preset_uqsl('A', 2), preset_benkart(2)}) {
        auto sp = make_pairing(rd);
        int n = rd.n();
        std::vector<GroupElement> z_image = rd.L; // z_i -> L_i
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                HElement x = HElement::embed_u(sp, SmashElement::letter(sp.U(), i));
                HElement y = HElement::embed_a(sp, SmashElement::letter(sp.A(), j));
                HElement lhs = x * y - (y * x).scale(rd.chi[static_cast<size_t>(j)](
                                   rd.L[static_cast<size_t>(i)]));
                HElement rhs = HElement::zero(sp);
                if (i == j) {
                    HElement one = HElement::one(sp);
                    HElement KL = HElement::tensor(
                        sp,
                        SmashElement::group(sp.U(), sp.U().deg[static_cast<size_t>(i)]),
                        SmashElement::group(sp.A(), rd.K[static_cast<size_t>(i)]));
                    rhs = (one - KL).scale(rd.l[static_cast<size_t>(i)]);
                }
                CHECK(quotient_identify(sp, z_image, lhs - rhs).is_zero());
            }
    }
}

TEST_CASE("z_i (x) g_i^-1 is central on degree <= 2 basis elements") {
    auto rd = preset_uqsl('A', 2);
    auto sp = make_pairing(rd);
    const auto& U = sp.U();
    const auto& A = sp.A();
    for (int i = 0; i < rd.n(); ++i) {
        HElement c = HElement::tensor(sp, SmashElement::group(U, U.deg[static_cast<size_t>(i)]),
                                      SmashElement::group(A, rd.L[static_cast<size_t>(i)].inverse()));
        for (int du = 0; du <= 2; ++du)
            for (const auto& wu : U.nich->basis_words(du))
                for (int da = 0; da + du <= 2; ++da)
                    for (const auto& wa : A.nich->basis_words(da)) {
                        HElement h = HElement::tensor(
                            sp,
                            SmashElement::term(U, wu, GroupElement::identity(U.grp), Scalar::one(U.ctx())),
                            SmashElement::term(A, wa, GroupElement::identity(A.grp), Scalar::one(A.ctx())));
                        CHECK(c * h == h * c);
                    }
    }
}

TEST_CASE("cocycle_check passes for presets") {
    auto repA = cocycle_check(make_pairing(preset_uqsl('A', 1)), 2);
    CHECK(repA.passed);
    CHECK(repA.failures.empty());
    auto repB = cocycle_check(make_pairing(preset_benkart(1)), 2);
    CHECK(repB.passed);
}

TEST_CASE("broken pairing spec is reported") {
    // spoil beta so that EqVarPhI2 breaks: swap phi to the non-inverse
    auto rd = preset_uqsl('A', 1);
    auto good = make_pairing(rd);
    std::vector<Character> bad_phi{rd.chi[0]}; // should be chi^-1
    PairingSpec bad(good.U(), good.A(), {0}, {Scalar::one(rd.F)}, bad_phi);
    CHECK(!bad.compatibility_violations().empty());
    auto rep = cocycle_check(bad, 2);
    CHECK(!rep.passed);
    CHECK(!rep.failures.empty());
}

TEST_CASE("trivial pairing: H = U (x) A untwisted") {
    auto rd = preset_uqsl('A', 1);
    auto good = make_pairing(rd);
    // all beta_i = 0 is a valid spec (no compatibility constraints apply)
    PairingSpec triv(good.U(), good.A(), {0}, {Scalar::zero(rd.F)},
                     {rd.chi[0].inverse()});
    auto rep = cocycle_check(triv, 2);
    CHECK(rep.passed);
    // and multiplication is componentwise: (1 (x) a)(u (x) 1) = u (x) a
    HElement a = HElement::embed_a(triv, SmashElement::letter(triv.A(), 0));
    HElement u = HElement::embed_u(triv, SmashElement::letter(triv.U(), 0));
    HElement prod = a * u;
    // commuting a past u picks up only the coalgebra braiding, no twist terms
    CHECK(prod.terms().size() == 1);
}

TEST_CASE("antipode identities") {
    auto sp = make_pairing(preset_uqsl('A', 2));
    const auto& U = sp.U();
    FieldCtx F = U.ctx();
    // S(x) * x-style convolution identity: m (S (x) id) Delta = eta eps
    for (int d = 0; d <= 3; ++d)
        for (const auto& w : U.nich->basis_words(d)) {
            SmashElement x = SmashElement::term(U, w, GroupElement::identity(U.grp), Scalar::one(F));
            SmashElement acc = SmashElement::zero(U);
            for (const auto& t : coproduct_iterate(x, 2)) {
                SmashElement s1 = antipode(
                    SmashElement::term(U, t.slots[0].first, t.slots[0].second, Scalar::one(F)));
                SmashElement s2 =
                    SmashElement::term(U, t.slots[1].first, t.slots[1].second, Scalar::one(F));
                acc = acc + (s1 * s2).scale(t.coeff);
            }
            SmashElement expect = SmashElement::one(U).scale(counit(x));
            CHECK(acc == expect);
        }
}
