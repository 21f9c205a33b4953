#pragma once

#include <vector>

#include "uqmod/scalar.hpp"

namespace uqmod {

/// Finitely generated abelian group Z^r + Z/(d_1) + ... + Z/(d_k) in
/// invariant-factor shape; groups are compared structurally.
struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<long> torsion; // each >= 2

    FgAbelianGroup() = default;
    FgAbelianGroup(int rank, std::vector<long> tors);

    int num_gens() const { return free_rank + static_cast<int>(torsion.size()); }
    bool is_finite() const { return free_rank == 0; }
    long order() const; // only when finite
    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

/// Group element as exponent vector; torsion coordinates reduced mod d_j.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(FgAbelianGroup grp, std::vector<long> exps);

    static GroupElement identity(const FgAbelianGroup& grp);
    static GroupElement generator(const FgAbelianGroup& grp, int i);

    const FgAbelianGroup& group() const { return grp_; }
    const std::vector<long>& exps() const { return e_; }
    bool is_identity() const;

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement pow(long k) const;
    bool operator==(const GroupElement& o) const { return grp_ == o.grp_ && e_ == o.e_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return e_ < o.e_; }

private:
    void reduce();
    FgAbelianGroup grp_;
    std::vector<long> e_;
};

/// K-valued character, stored by its values on the generators. Torsion
/// generators of order d require value^d = 1.
class Character {
public:
    Character() = default;
    Character(FgAbelianGroup grp, std::vector<Scalar> values);

    static Character trivial(const FgAbelianGroup& grp, FieldCtx F);

    const FgAbelianGroup& group() const { return grp_; }
    const std::vector<Scalar>& values() const { return vals_; }
    FieldCtx ctx() const { return vals_.empty() ? nullptr : vals_[0].ctx(); }

    Scalar operator()(const GroupElement& x) const; // Err::GroupMismatch
    Character operator*(const Character& o) const;
    Character inverse() const;
    Character pow(long k) const;
    bool is_trivial() const;
    bool operator==(const Character& o) const { return grp_ == o.grp_ && vals_ == o.vals_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    FgAbelianGroup grp_;
    std::vector<Scalar> vals_;
};

/// All characters of a finite abelian group with values in Q(zeta_N);
/// requires every torsion order to divide N. Deterministic order.
std::vector<Character> all_characters(const FgAbelianGroup& grp, FieldCtx F);

} // namespace uqmod
