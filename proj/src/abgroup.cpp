#include "uqmod/abgroup.hpp"

#include <cassert>

namespace uqmod {

FgAbelianGroup::FgAbelianGroup(int rank, std::vector<long> tors)
    : free_rank(rank), torsion(std::move(tors)) {
    if (free_rank < 0) fail(Err::ParseError, "negative free rank");
    for (long d : torsion)
        if (d < 2) fail(Err::ParseError, "torsion orders must be >= 2");
}

long FgAbelianGroup::order() const {
    assert(is_finite());
    long n = 1;
    for (long d : torsion) n *= d;
    return n;
}

GroupElement::GroupElement(FgAbelianGroup grp, std::vector<long> exps)
    : grp_(std::move(grp)), e_(std::move(exps)) {
    if (static_cast<int>(e_.size()) != grp_.num_gens())
        fail(Err::GroupMismatch, "exponent vector length does not match group");
    reduce();
}

void GroupElement::reduce() {
    for (size_t j = 0; j < grp_.torsion.size(); ++j) {
        long d = grp_.torsion[j];
        long& x = e_[static_cast<size_t>(grp_.free_rank) + j];
        x %= d;
        if (x < 0) x += d;
    }
}

GroupElement GroupElement::identity(const FgAbelianGroup& grp) {
    return GroupElement(grp, std::vector<long>(static_cast<size_t>(grp.num_gens()), 0));
}

GroupElement GroupElement::generator(const FgAbelianGroup& grp, int i) {
    std::vector<long> e(static_cast<size_t>(grp.num_gens()), 0);
    e[static_cast<size_t>(i)] = 1;
    return GroupElement(grp, std::move(e));
}

bool GroupElement::is_identity() const {
    for (long x : e_)
        if (x != 0) return false;
    return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (!(grp_ == o.grp_)) fail(Err::GroupMismatch, "product of elements of different groups");
    GroupElement r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    r.reduce();
    return r;
}

GroupElement GroupElement::inverse() const {
    GroupElement r = *this;
    for (auto& x : r.e_) x = -x;
    r.reduce();
    return r;
}

GroupElement GroupElement::pow(long k) const {
    GroupElement r = *this;
    for (auto& x : r.e_) x *= k;
    r.reduce();
    return r;
}

Character::Character(FgAbelianGroup grp, std::vector<Scalar> values)
    : grp_(std::move(grp)), vals_(std::move(values)) {
    if (static_cast<int>(vals_.size()) != grp_.num_gens())
        fail(Err::GroupMismatch, "character value count does not match group");
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (vals_[i].is_zero()) fail(Err::ParseError, "character values must be nonzero");
        if (static_cast<int>(i) >= grp_.free_rank) {
            long d = grp_.torsion[i - static_cast<size_t>(grp_.free_rank)];
            if (!vals_[i].pow(d).is_one())
                fail(Err::ParseError,
                     "character value on torsion generator of order " + std::to_string(d) +
                         " must satisfy value^d = 1, got " + vals_[i].to_string());
        }
    }
}

Character Character::trivial(const FgAbelianGroup& grp, FieldCtx F) {
    return Character(grp, std::vector<Scalar>(static_cast<size_t>(grp.num_gens()), Scalar::one(F)));
}

Scalar Character::operator()(const GroupElement& x) const {
    if (!(grp_ == x.group())) fail(Err::GroupMismatch, "character evaluated on foreign element");
    Scalar r = Scalar::one(ctx());
    for (size_t i = 0; i < vals_.size(); ++i) {
        long e = x.exps()[i];
        if (e != 0) r *= vals_[i].pow(e);
    }
    return r;
}

Character Character::operator*(const Character& o) const {
    if (!(grp_ == o.grp_)) fail(Err::GroupMismatch, "product of characters of different groups");
    std::vector<Scalar> v = vals_;
    for (size_t i = 0; i < v.size(); ++i) v[i] *= o.vals_[i];
    return Character(grp_, std::move(v));
}

Character Character::inverse() const {
    std::vector<Scalar> v = vals_;
    for (auto& x : v) x = x.inverse();
    return Character(grp_, std::move(v));
}

Character Character::pow(long k) const {
    std::vector<Scalar> v = vals_;
    for (auto& x : v) x = x.pow(k);
    return Character(grp_, std::move(v));
}

bool Character::is_trivial() const {
    for (const auto& v : vals_)
        if (!v.is_one()) return false;
    return true;
}

std::vector<Character> all_characters(const FgAbelianGroup& grp, FieldCtx F) {
    if (!grp.is_finite()) fail(Err::Internal, "all_characters requires a finite group");
    for (long d : grp.torsion)
        if (F->order() % d != 0)
            fail(Err::NoCharacterExists,
                 "field lacks roots of unity of order " + std::to_string(d));
    std::vector<Character> out;
    size_t k = grp.torsion.size();
    std::vector<long> idx(k, 0);
    while (true) {
        std::vector<Scalar> vals;
        vals.reserve(k);
        for (size_t j = 0; j < k; ++j) {
            long step = static_cast<long>(F->order()) / grp.torsion[j];
            vals.push_back(Scalar::zeta(F, idx[j] * step));
        }
        out.emplace_back(grp, std::move(vals));
        size_t j = 0;
        while (j < k) {
            if (++idx[j] < grp.torsion[j]) break;
            idx[j] = 0;
            ++j;
        }
        if (j == k) break;
        if (k == 0) break;
    }
    return out;
}

} // namespace uqmod
