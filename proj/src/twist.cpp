#include "uqmod/twist.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace uqmod {

SmashSide make_side(FieldCtx F, FgAbelianGroup grp, std::vector<GroupElement> deg,
                    std::vector<Character> chr, int degree_budget) {
    SmashSide s;
    s.nich = std::make_shared<NicholsContext>(BraidedVectorSpace(F, deg, chr), degree_budget);
    s.grp = std::move(grp);
    s.deg = std::move(deg);
    s.chr = std::move(chr);
    return s;
}

SmashElement SmashElement::zero(const SmashSide& side) { return SmashElement(&side); }

SmashElement SmashElement::one(const SmashSide& side) {
    return term(side, {}, GroupElement::identity(side.grp), Scalar::one(side.ctx()));
}

SmashElement SmashElement::letter(const SmashSide& side, int i) {
    return term(side, {i}, GroupElement::identity(side.grp), Scalar::one(side.ctx()));
}

SmashElement SmashElement::group(const SmashSide& side, const GroupElement& g) {
    return term(side, {}, g, Scalar::one(side.ctx()));
}

SmashElement SmashElement::term(const SmashSide& side, const Word& w, const GroupElement& g,
                                const Scalar& c) {
    SmashElement x(&side);
    x.add_term(w, g, c);
    return x;
}

void SmashElement::add_term(const Word& w, const GroupElement& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, g.exps());
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
    SmashElement r = *this;
    if (!r.side_) r.side_ = o.side_;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, GroupElement(r.side().grp, k.second), c);
    return r;
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
    SmashElement r = *this;
    if (!r.side_) r.side_ = o.side_;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, GroupElement(r.side().grp, k.second), -c);
    return r;
}

SmashElement SmashElement::scale(const Scalar& c) const {
    SmashElement r(side_);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.terms_[k] = x * c;
    return r;
}

SmashElement SmashElement::operator*(const SmashElement& o) const {
    const SmashSide& sd = side();
    SmashElement r(side_);
    for (const auto& [ka, ca] : terms_) {
        GroupElement g1(sd.grp, ka.second);
        for (const auto& [kb, cb] : o.terms_) {
            // g1 commutes past the letters of the second word
            Scalar coef = ca * cb;
            for (int l : kb.first) coef *= sd.chr[static_cast<size_t>(l)](g1);
            if (coef.is_zero()) continue;
            Word w = ka.first;
            w.insert(w.end(), kb.first.begin(), kb.first.end());
            TensorPoly red =
                sd.nich->reduce(TensorPoly::word(sd.ctx(), std::move(w), Scalar::one(sd.ctx())));
            GroupElement g = g1 * GroupElement(sd.grp, kb.second);
            for (const auto& [rw, rc] : red.terms()) r.add_term(rw, g, coef * rc);
        }
    }
    return r;
}

int SmashElement::degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max<int>(d, static_cast<int>(k.first.size()));
    return d;
}

std::string SmashElement::to_string(const std::string& letter_prefix,
                                    const std::string& group_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int l : k.first) os << "*" << letter_prefix << (l + 1);
        for (size_t j = 0; j < k.second.size(); ++j)
            if (k.second[j] != 0) os << "*" << group_prefix << (j + 1) << "^" << k.second[j];
    }
    return os.str();
}

SmashElement antipode(const SmashElement& x) {
    const SmashSide& sd = x.side();
    SmashElement r = SmashElement::zero(sd);
    for (const auto& [k, c] : x.terms()) {
        GroupElement g(sd.grp, k.second);
        SmashElement acc = SmashElement::term(sd, {}, g.inverse(), c);
        for (size_t l = k.first.size(); l-- > 0;) {
            int i = k.first[l];
            // S(x_i) = -deg_i^-1 x_i = -q_ii^-1 x_i deg_i^-1
            Scalar qii = sd.chr[static_cast<size_t>(i)](sd.deg[static_cast<size_t>(i)]);
            SmashElement factor = SmashElement::term(
                sd, {i}, sd.deg[static_cast<size_t>(i)].inverse(), -qii.inverse());
            acc = acc * factor;
        }
        r = r + acc;
    }
    return r;
}

Scalar counit(const SmashElement& x) {
    Scalar r = Scalar::zero(x.side().ctx());
    for (const auto& [k, c] : x.terms())
        if (k.first.empty()) r += c;
    return r;
}

namespace {

// binary coproduct of a normal-form term; both slots re-normalized
std::vector<std::tuple<Word, GroupElement, Word, GroupElement, Scalar>> delta_term(
    const SmashSide& sd, const Word& w, const GroupElement& g) {
    std::vector<std::tuple<Word, GroupElement, Word, GroupElement, Scalar>> out;
    const auto& q = sd.nich->space();
    size_t len = w.size();
    for (size_t mask = 0; mask < (size_t{1} << len); ++mask) {
        Word left, right;
        GroupElement lg = g;
        Scalar coef = Scalar::one(sd.ctx());
        for (size_t l = 0; l < len; ++l) {
            if (mask & (size_t{1} << l)) {
                right.push_back(w[l]);
                lg = lg * sd.deg[static_cast<size_t>(w[l])];
                for (size_t m = l + 1; m < len; ++m)
                    if (!(mask & (size_t{1} << m))) coef *= q.q(w[l], w[m]);
            } else {
                left.push_back(w[l]);
            }
        }
        // re-normalize the word parts (subwords of canonical words need not
        // be canonical)
        TensorPoly lred = sd.nich->reduce(TensorPoly::word(sd.ctx(), left, Scalar::one(sd.ctx())));
        TensorPoly rred = sd.nich->reduce(TensorPoly::word(sd.ctx(), right, Scalar::one(sd.ctx())));
        for (const auto& [lw, lc] : lred.terms())
            for (const auto& [rw, rc] : rred.terms())
                out.emplace_back(lw, lg, rw, g, coef * lc * rc);
    }
    return out;
}

} // namespace

std::vector<SmashTensorTerm> coproduct_iterate(const SmashElement& x, int k) {
    if (k < 1) fail(Err::PositionOutOfRange, "coproduct arity must be >= 1");
    const SmashSide& sd = x.side();
    std::vector<SmashTensorTerm> cur;
    for (const auto& [key, c] : x.terms())
        cur.push_back({{{key.first, GroupElement(sd.grp, key.second)}}, c});
    for (int round = 1; round < k; ++round) {
        std::vector<SmashTensorTerm> next;
        for (const auto& t : cur) {
            const auto& [lw, lg] = t.slots.back();
            for (auto& [a, ag, b, bg, c] : delta_term(sd, lw, lg)) {
                SmashTensorTerm nt;
                nt.slots.assign(t.slots.begin(), t.slots.end() - 1);
                nt.slots.emplace_back(a, ag);
                nt.slots.emplace_back(b, bg);
                nt.coeff = t.coeff * c;
                if (!nt.coeff.is_zero()) next.push_back(std::move(nt));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

PairingSpec::PairingSpec(SmashSide u_side, SmashSide a_side, std::vector<int> s,
                         std::vector<Scalar> beta, std::vector<Character> phi_gen)
    : U_(std::make_shared<SmashSide>(std::move(u_side))),
      A_(std::make_shared<SmashSide>(std::move(a_side))), s_(std::move(s)), beta_(std::move(beta)),
      phi_gen_(std::move(phi_gen)) {
    if (static_cast<int>(s_.size()) != U_->letters() || beta_.size() != s_.size())
        fail(Err::ParseError, "pairing spec arity mismatch");
    if (static_cast<int>(phi_gen_.size()) != U_->grp.num_gens())
        fail(Err::ParseError, "phi must assign a character per Lambda generator");
    for (int k = U_->grp.free_rank; k < U_->grp.num_gens(); ++k) {
        long d = U_->grp.torsion[static_cast<size_t>(k - U_->grp.free_rank)];
        if (!phi_gen_[static_cast<size_t>(k)].pow(d).is_trivial())
            fail(Err::ParseError, "phi not well-defined on torsion generator " + std::to_string(k + 1));
    }
}

Character PairingSpec::phi(const GroupElement& z) const {
    Character r = Character::trivial(A_->grp, A_->ctx());
    for (size_t k = 0; k < phi_gen_.size(); ++k) {
        long e = z.exps()[k];
        if (e != 0) r = r * phi_gen_[k].pow(e);
    }
    return r;
}

std::vector<std::string> PairingSpec::compatibility_violations() const {
    std::vector<std::string> out;
    for (int i = 0; i < U_->letters(); ++i) {
        if (beta_[static_cast<size_t>(i)].is_zero()) continue;
        Character lhs = phi(U_->deg[static_cast<size_t>(i)]);
        Character rhs = A_->chr[static_cast<size_t>(s_[static_cast<size_t>(i)])].inverse();
        if (!(lhs == rhs))
            out.push_back("phi(z_" + std::to_string(i + 1) + ") != chi_{s(i)}^-1");
        for (int k = 0; k < U_->grp.num_gens(); ++k) {
            Scalar eta = U_->chr[static_cast<size_t>(i)](GroupElement::generator(U_->grp, k));
            Scalar val = phi_gen_[static_cast<size_t>(k)](
                A_->deg[static_cast<size_t>(s_[static_cast<size_t>(i)])]);
            if (eta != val)
                out.push_back("eta_" + std::to_string(i + 1) + "(z_" + std::to_string(k + 1) +
                              ") != phi(z_" + std::to_string(k + 1) + ")(g_s(i))");
        }
    }
    return out;
}

Scalar PairingSpec::tau_term(const Word& w, const std::vector<long>& zexp, const Word& v,
                             const std::vector<long>& gexp) const {
    FieldCtx F = A_->ctx();
    if (w.size() != v.size()) return Scalar::zero(F);
    if (w.empty())
        return phi(GroupElement(U_->grp, zexp))(GroupElement(A_->grp, gexp));
    auto key = std::make_tuple(w, zexp, v, gexp);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int i = w[0];
    Word rest(w.begin() + 1, w.end());
    Character gamma = phi(U_->deg[static_cast<size_t>(i)]);
    Scalar total = Scalar::zero(F);
    for (size_t p = 0; p < v.size(); ++p) {
        if (v[p] != s_[static_cast<size_t>(i)]) continue;
        // delta_i peels the letter at p; group degrees before p vanish under
        // the counit, the ones after p feed the gamma_i-twist
        Scalar coef = beta_[static_cast<size_t>(i)];
        for (size_t l = p + 1; l < v.size(); ++l)
            coef *= gamma(A_->deg[static_cast<size_t>(v[l])]);
        coef *= gamma(GroupElement(A_->grp, gexp));
        if (coef.is_zero()) continue;
        Word vrem;
        vrem.reserve(v.size() - 1);
        for (size_t l = 0; l < v.size(); ++l)
            if (l != p) vrem.push_back(v[l]);
        total += coef * tau_term(rest, zexp, vrem, gexp);
    }
    memo_[key] = total;
    return total;
}

Scalar PairingSpec::tau(const SmashElement& u, const SmashElement& a) const {
    Scalar r = Scalar::zero(A_->ctx());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [ka, ca] : a.terms()) r += cu * ca * tau_term(ku.first, ku.second, ka.first, ka.second);
    return r;
}

Scalar PairingSpec::tau_inverse(const SmashElement& u, const SmashElement& a) const {
    return tau(antipode(u), a);
}

namespace {

long element_order(const FgAbelianGroup& grp, const GroupElement& x) {
    for (int k = 0; k < grp.free_rank; ++k)
        if (x.exps()[static_cast<size_t>(k)] != 0) return 0; // infinite
    long n = 1;
    for (size_t j = 0; j < grp.torsion.size(); ++j) {
        long d = grp.torsion[j];
        long e = x.exps()[static_cast<size_t>(grp.free_rank) + j];
        long g = std::gcd(d, e == 0 ? d : e);
        n = std::lcm(n, d / g);
    }
    return n;
}

long character_order(const Character& chi) {
    long n = 1;
    for (const auto& v : chi.values()) {
        auto ord = is_root_of_unity(v);
        if (!ord) return 0; // infinite
        n = std::lcm(n, static_cast<long>(*ord));
    }
    return n;
}

} // namespace

PairingSpec make_pairing(const ReducedDatum& rd, int degree_budget) {
    int n = rd.n();
    FieldCtx F = rd.F;
    // A side: V with basis a_j of degree K_j and character chi_j
    SmashSide A = make_side(F, rd.group, rd.K, rd.chi, degree_budget);
    // U side: W with basis u_i over Lambda; eta_j(z_i) = chi_j^-1(L_i)
    FgAbelianGroup lambda;
    if (rd.group.is_finite()) {
        std::vector<long> orders;
        for (int i = 0; i < n; ++i) {
            long og = element_order(rd.group, rd.L[static_cast<size_t>(i)]);
            long oc = character_order(rd.chi[static_cast<size_t>(i)]);
            if (og == 0 || oc == 0) fail(Err::Internal, "finite group with infinite-order data");
            long ni = std::lcm(og, oc);
            if (ni < 2) ni = 2; // z_i of order 1 would make Lambda degenerate
            orders.push_back(ni);
        }
        lambda = FgAbelianGroup(0, orders);
    } else {
        lambda = FgAbelianGroup(n, {});
    }
    std::vector<GroupElement> zs;
    std::vector<Character> eta;
    for (int i = 0; i < n; ++i) zs.push_back(GroupElement::generator(lambda, i));
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> vals;
        for (int k = 0; k < n; ++k)
            vals.push_back(rd.chi[static_cast<size_t>(i)](rd.L[static_cast<size_t>(k)]).inverse());
        eta.emplace_back(lambda, std::move(vals));
    }
    SmashSide U = make_side(F, lambda, std::move(zs), std::move(eta), degree_budget);
    std::vector<int> s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = i;
    std::vector<Scalar> beta;
    std::vector<Character> phi_gen;
    for (int i = 0; i < n; ++i) {
        beta.push_back(-rd.q(i, i).inverse() * rd.l[static_cast<size_t>(i)]);
        phi_gen.push_back(rd.chi[static_cast<size_t>(i)].inverse());
    }
    PairingSpec spec(std::move(U), std::move(A), std::move(s), std::move(beta), std::move(phi_gen));
    auto bad = spec.compatibility_violations();
    if (!bad.empty()) fail(Err::Internal, "reduced datum produced incompatible pairing: " + bad[0]);
    return spec;
}

HElement HElement::zero(const PairingSpec& spec) { return HElement(&spec); }

HElement HElement::one(const PairingSpec& spec) {
    return tensor(spec, SmashElement::one(spec.U()), SmashElement::one(spec.A()));
}

HElement HElement::embed_u(const PairingSpec& spec, const SmashElement& u) {
    return tensor(spec, u, SmashElement::one(spec.A()));
}

HElement HElement::embed_a(const PairingSpec& spec, const SmashElement& a) {
    return tensor(spec, SmashElement::one(spec.U()), a);
}

HElement HElement::tensor(const PairingSpec& spec, const SmashElement& u, const SmashElement& a) {
    HElement x(&spec);
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [ka, ca] : a.terms())
            x.add_term({ku.first, ku.second, ka.first, ka.second}, cu * ca);
    return x;
}

void HElement::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HElement HElement::operator+(const HElement& o) const {
    HElement r = *this;
    if (!r.spec_) r.spec_ = o.spec_;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

HElement HElement::operator-(const HElement& o) const {
    HElement r = *this;
    if (!r.spec_) r.spec_ = o.spec_;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

HElement HElement::scale(const Scalar& c) const {
    HElement r(spec_);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.terms_[k] = x * c;
    return r;
}

HElement HElement::operator*(const HElement& o) const {
    const PairingSpec& sp = *spec_;
    const SmashSide& Us = sp.U();
    const SmashSide& As = sp.A();
    HElement r(spec_);
    for (const auto& [kx, cx] : terms_) {
        const auto& [xuw, xuz, xaw, xag] = kx;
        SmashElement xa = SmashElement::term(As, xaw, GroupElement(As.grp, xag), Scalar::one(As.ctx()));
        auto a_exp = coproduct_iterate(xa, 3);
        for (const auto& [ky, cy] : o.terms_) {
            const auto& [yuw, yuz, yaw, yag] = ky;
            SmashElement yu =
                SmashElement::term(Us, yuw, GroupElement(Us.grp, yuz), Scalar::one(Us.ctx()));
            auto u_exp = coproduct_iterate(yu, 3);
            for (const auto& ut : u_exp) {
                for (const auto& at : a_exp) {
                    Scalar t1 = sp.tau(
                        SmashElement::term(Us, ut.slots[0].first, ut.slots[0].second, Scalar::one(Us.ctx())),
                        SmashElement::term(As, at.slots[0].first, at.slots[0].second, Scalar::one(As.ctx())));
                    if (t1.is_zero()) continue;
                    Scalar t3 = sp.tau_inverse(
                        SmashElement::term(Us, ut.slots[2].first, ut.slots[2].second, Scalar::one(Us.ctx())),
                        SmashElement::term(As, at.slots[2].first, at.slots[2].second, Scalar::one(As.ctx())));
                    if (t3.is_zero()) continue;
                    Scalar coef = cx * cy * ut.coeff * at.coeff * t1 * t3;
                    if (coef.is_zero()) continue;
                    // U part: x_u * u'_(2);  A part: a_(2) * y_a
                    SmashElement upart =
                        SmashElement::term(Us, xuw, GroupElement(Us.grp, xuz), Scalar::one(Us.ctx())) *
                        SmashElement::term(Us, ut.slots[1].first, ut.slots[1].second, Scalar::one(Us.ctx()));
                    SmashElement apart =
                        SmashElement::term(As, at.slots[1].first, at.slots[1].second, Scalar::one(As.ctx())) *
                        SmashElement::term(As, yaw, GroupElement(As.grp, yag), Scalar::one(As.ctx()));
                    for (const auto& [ku2, cu2] : upart.terms())
                        for (const auto& [ka2, ca2] : apart.terms())
                            r.add_term({ku2.first, ku2.second, ka2.first, ka2.second},
                                       coef * cu2 * ca2);
                }
            }
        }
    }
    return r;
}

std::string HElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const auto& [uw, uz, aw, ag] = k;
        os << "(" << c.to_string() << ")";
        for (int l : uw) os << "*u" << (l + 1);
        for (size_t j = 0; j < uz.size(); ++j)
            if (uz[j] != 0) os << "*z" << (j + 1) << "^" << uz[j];
        os << " (x)";
        for (int l : aw) os << " a" << (l + 1);
        for (size_t j = 0; j < ag.size(); ++j)
            if (ag[j] != 0) os << " g" << (j + 1) << "^" << ag[j];
        if (aw.empty()) {
            bool triv = true;
            for (long e : ag) triv &= e == 0;
            if (triv) os << " 1";
        }
    }
    return os.str();
}

HElement quotient_identify(const PairingSpec& spec, const std::vector<GroupElement>& z_image,
                           const HElement& x) {
    if (static_cast<int>(z_image.size()) != spec.U().grp.num_gens())
        fail(Err::ParseError, "need one Gamma image per Lambda generator");
    HElement r(&spec);
    const SmashSide& As = spec.A();
    for (const auto& [k, c] : x.terms()) {
        const auto& [uw, uz, aw, ag] = k;
        GroupElement img = GroupElement::identity(As.grp);
        for (size_t j = 0; j < uz.size(); ++j)
            if (uz[j] != 0) img = img * z_image[j].pow(uz[j]);
        // commute the image past the A-side letters
        Scalar coef = c;
        for (int l : aw) coef *= As.chr[static_cast<size_t>(l)](img);
        r.add_term({uw, std::vector<long>(uz.size(), 0), aw, (img * GroupElement(As.grp, ag)).exps()},
                   coef);
    }
    return r;
}

CocycleReport cocycle_check(const PairingSpec& spec, int bound) {
    CocycleReport rep;
    const SmashSide& Us = spec.U();
    const SmashSide& As = spec.A();
    FieldCtx F = As.ctx();

    auto record = [&rep](bool ok, const std::string& name, const std::string& detail) {
        if (ok) {
            rep.checks.push_back(name + ": ok");
        } else {
            rep.passed = false;
            rep.failures.push_back(name + ": " + detail);
        }
    };

    // sampled basis: canonical words up to the bound, with and without a
    // nontrivial group part
    auto side_elements = [&](const SmashSide& sd, int maxdeg) {
        std::vector<SmashElement> out;
        std::vector<GroupElement> gparts{GroupElement::identity(sd.grp)};
        if (sd.grp.num_gens() > 0) gparts.push_back(GroupElement::generator(sd.grp, 0));
        for (int d = 0; d <= maxdeg; ++d)
            for (const auto& w : sd.nich->basis_words(d))
                for (const auto& g : gparts)
                    out.push_back(SmashElement::term(sd, w, g, Scalar::one(sd.ctx())));
        return out;
    };

    // tau * tau^-1 = counit x counit on sampled pairs
    for (const auto& u : side_elements(Us, bound)) {
        for (const auto& a : side_elements(As, bound)) {
            Scalar acc = Scalar::zero(F);
            for (const auto& ut : coproduct_iterate(u, 2))
                for (const auto& at : coproduct_iterate(a, 2)) {
                    Scalar t1 = spec.tau(
                        SmashElement::term(Us, ut.slots[0].first, ut.slots[0].second, Scalar::one(F)),
                        SmashElement::term(As, at.slots[0].first, at.slots[0].second, Scalar::one(F)));
                    if (t1.is_zero()) continue;
                    Scalar t2 = spec.tau_inverse(
                        SmashElement::term(Us, ut.slots[1].first, ut.slots[1].second, Scalar::one(F)),
                        SmashElement::term(As, at.slots[1].first, at.slots[1].second, Scalar::one(F)));
                    acc += ut.coeff * at.coeff * t1 * t2;
                }
            Scalar expect = counit(u) * counit(a);
            if (!(acc == expect)) {
                record(false, "tau-convolution-inverse",
                       "u = " + u.to_string("u", "z") + ", a = " + a.to_string("a", "g"));
                return rep;
            }
        }
    }
    record(true, "tau-convolution-inverse", "");

    // associativity of the twisted multiplication on low-degree triples
    auto h_elements = [&](int maxtotal) {
        std::vector<std::pair<HElement, int>> out;
        for (int du = 0; du <= maxtotal; ++du)
            for (const auto& wu : Us.nich->basis_words(du))
                for (int da = 0; da + du <= maxtotal; ++da)
                    for (const auto& wa : As.nich->basis_words(da))
                        out.emplace_back(
                            HElement::tensor(spec,
                                             SmashElement::term(Us, wu, GroupElement::identity(Us.grp),
                                                                Scalar::one(F)),
                                             SmashElement::term(As, wa, GroupElement::identity(As.grp),
                                                                Scalar::one(F))),
                            du + da);
        return out;
    };
    auto elems = h_elements(bound);
    for (const auto& [x, dx] : elems)
        for (const auto& [y, dy] : elems) {
            if (dx + dy > bound + 1) continue;
            for (const auto& [z, dz] : elems) {
                if (dx + dy + dz > bound + 2) continue;
                HElement lhs = (x * y) * z;
                HElement rhs = x * (y * z);
                if (!(lhs == rhs)) {
                    record(false, "twisted-associativity",
                           "x = " + x.to_string() + ", y = " + y.to_string() +
                               ", z = " + z.to_string());
                    return rep;
                }
            }
        }
    record(true, "twisted-associativity", "");
    return rep;
}

} // namespace uqmod
