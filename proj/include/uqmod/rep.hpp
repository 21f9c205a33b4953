#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqmod/datum.hpp"
#include "uqmod/linalg.hpp"

namespace uqmod {

/// Outcome of solving chi(K_i L_i) = q_ii^{m_i} for exponents m_i >= 0.
/// Exact over the exponent lattice when both sides are Laurent monomials;
/// otherwise a bounded search that can come back inconclusive.
struct DominanceResult {
    enum class Status { Dominant, NotDominant, Inconclusive };
    Status status = Status::NotDominant;
    std::vector<long> m;
    bool complete = true; // solving method was exhaustive
    int witness = -1;     // index i that failed (NotDominant/Inconclusive)

    bool dominant() const { return status == Status::Dominant; }
};

DominanceResult is_dominant(const ReducedDatum& rd, const Character& chi, long m_max = 64);

/// One entry of the dominant-character enumeration: the exponent vector and
/// a concrete character chi_m realizing it: chi_m(K_i L_i) = q_ii^{m_i}.
struct DominantFamily {
    std::vector<long> m;
    Character chi_m;
};

/// All m with m_i <= bound realized by explicit characters; requires a free
/// group (Err::NoCharacterExists otherwise or when the lattice has no
/// solution).
std::vector<DominantFamily> enumerate_dominant(const ReducedDatum& rd, long bound);

/// psi(K_i L_i) = 1 for all i: the characters whose L(psi) is one-dimensional.
bool is_one_dimensional_twist(const ReducedDatum& rd, const Character& psi);

/// chi = psi * chi_m with psi a one-dimensional twist, m from is_dominant.
struct DominantFactorization {
    std::vector<long> m;
    Character chi_m, psi;
};
std::optional<DominantFactorization> factor_dominant(const ReducedDatum& rd, const Character& chi);

/// A computed module: labeled basis, diagonal group matrices, one matrix per
/// x_i (F-side) and y_i (E-side) generator, weights, and provenance.
/// Matrices act on column vectors; basis order is discovery order with the
/// highest-weight vector first.
struct ModuleRep {
    FieldCtx F;
    FgAbelianGroup group;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<long>> multidegree;
    std::vector<std::vector<Scalar>> weights; // values on Gamma generators
    std::vector<Mat> gamma_mats;              // one per Gamma generator
    std::vector<Mat> x_mats;                  // n (reduced) or theta (full datum)
    std::vector<Mat> y_mats;                  // n in reduced form; empty otherwise
    std::vector<Scalar> chi_values;
    std::vector<long> m_exponents;
    std::vector<GroupElement> L_elems, K_elems; // reduced form only
    int highest_index = 0;
    bool full_datum_form = false;

    size_t dim() const { return basis_labels.size(); }
    Mat gamma_action(const GroupElement& g) const;
    const Mat& E(int i) const { return y_mats[static_cast<size_t>(i)]; }
    Mat Fmat(int i) const; // x_i L_i^{-1}
};

/// Quantum-linear-space fast path (all components A1): basis
/// u^t m, 0 <= t_i <= m_i, matrices from the explicit action formulas.
/// Err::NotQLS / Err::NotDominant.
ModuleRep build_qls_module(const ReducedDatum& rd, const Character& chi,
                           const std::vector<long>& m);

/// General path for generic data of finite Cartan type: realizes L(chi)
/// inside the Nichols algebra of W by spinning the twisted left-multiplication
/// operators; the E-action is recovered by the commutation recursion and is
/// certified by verify_module. Err::BudgetExceeded when the spin outgrows the
/// caps.
ModuleRep build_general_module(const ReducedDatum& rd, const Character& chi,
                               const std::vector<long>& m, size_t dim_budget = 200,
                               int degree_budget = -1);

/// Finite quantum-linear-space case over a finite group: every character
/// yields a module with caps min(ord q_ii, first vanishing coefficient).
/// Err::OrderHypothesisViolated unless all ord(q_ii) are odd and > 3.
ModuleRep finite_qls(const ReducedDatum& rd, const Character& chi);

/// Substitutes the matrices into every defining relation.
struct RelationReport {
    std::vector<std::pair<std::string, bool>> relations;
    bool all_passed = true;

    void add(const std::string& name, bool ok) {
        relations.emplace_back(name, ok);
        all_passed = all_passed && ok;
    }
};

RelationReport verify_module_reduced(const ModuleRep& rep, const ReducedDatum& rd);
RelationReport verify_module_full(const ModuleRep& rep, const CartanDatum& d,
                                  const LinkingData& lam);

/// Exact kernel of all E-actions: dimension of the joint highest-weight
/// space (must be 1 on every constructed simple module).
size_t highest_weight_space_dim(const ModuleRep& rep);

struct SimplicityResult {
    bool simple = false;
    std::vector<Vec> witness; // basis of a proper nonzero submodule
};

/// Brute-force check: every weight-space basis vector must generate the whole
/// module, and the joint E-kernel must be one-dimensional.
/// Err::DimensionTooLarge above the bound.
SimplicityResult check_simplicity(const ModuleRep& rep, size_t dim_bound = 200);

/// Module over the full U(D,lambda): x_{t(i)} act by the reduced matrices,
/// every other x_k acts as zero, the group action is unchanged.
ModuleRep pullback_module(const ProjectedDatum& p, const CartanDatum& d, const ModuleRep& rep);

/// Coefficient prod_{l<t} (1 - q_ii^{-l} chi(K_i L_i)) controlling the
/// nilpotency ladder u_i^t m.
Scalar ladder_coefficient(const ReducedDatum& rd, const Character& chi, int i, long t);

} // namespace uqmod
