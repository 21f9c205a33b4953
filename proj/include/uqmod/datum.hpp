#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqmod/abgroup.hpp"
#include "uqmod/cartan.hpp"
#include "uqmod/scalar.hpp"

namespace uqmod {

/// Datum of finite Cartan type D(Gamma, (g_i), (chi_i), (a_ij)): validated
/// against q_ij q_ji = q_ii^{a_ij}, q_ii != 1, with the braiding matrix
/// q_ij = chi_j(g_i) and, where one exists in K, a per-component q_J with
/// q_ii = q_J^{2 d_i}.
class CartanDatum {
public:
    CartanDatum() = default;
    CartanDatum(FieldCtx F, FgAbelianGroup group, std::vector<GroupElement> g,
                std::vector<Character> chi, CartanMatrix cartan);

    int theta() const { return static_cast<int>(g_.size()); }
    const FieldCtx& ctx() const { return F_; }
    const FgAbelianGroup& group() const { return group_; }
    const GroupElement& g(int i) const { return g_[static_cast<size_t>(i)]; }
    const Character& chi(int i) const { return chi_[static_cast<size_t>(i)]; }
    const CartanMatrix& cartan() const { return cartan_; }
    const Scalar& q(int i, int j) const { return q_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    /// q_J for the component containing vertex i, when it exists in K.
    std::optional<Scalar> q_component(int comp) const;

    /// true iff no q_ii is a root of unity; otherwise the offending index.
    std::pair<bool, int> is_generic() const;

    /// Twist-equivalent Drinfeld-Jimbo braiding q'_ij = q_J^{d_i a_ij}
    /// (0 off-component). Err::NoQJ if some component lacks q_J in K.
    std::vector<std::vector<Scalar>> twist_matrix() const;

    bool linkable(int i, int j) const;

private:
    FieldCtx F_;
    FgAbelianGroup group_;
    std::vector<GroupElement> g_;
    std::vector<Character> chi_;
    CartanMatrix cartan_;
    std::vector<std::vector<Scalar>> q_;
    std::vector<std::optional<Scalar>> qJ_; // per component
};

CartanDatum build_datum(FieldCtx F, FgAbelianGroup group, std::vector<GroupElement> g,
                        std::vector<Character> chi, CartanMatrix cartan);

/// Linking parameters: sparse lambda_ij over pairs i !~ j, antisymmetric via
/// lambda_ji = -q_ji lambda_ij and supported on linkable pairs.
class LinkingData {
public:
    LinkingData() = default;
    explicit LinkingData(int theta) : theta_(theta) {}

    Scalar lambda(const CartanDatum& d, int i, int j) const;
    bool is_linked(int i, int j) const;
    const std::map<std::pair<int, int>, Scalar>& entries() const { return lam_; }
    /// Linked pairs (i, j) with i < j, ascending.
    std::vector<std::pair<int, int>> linked_pairs() const;
    /// Nonfatal findings (multi-linked vertices in the small-order regime).
    const std::vector<std::string>& warnings() const { return warnings_; }

    friend LinkingData validate_linking(const CartanDatum& d,
                                        const std::vector<std::tuple<int, int, Scalar>>& given);

private:
    int theta_ = 0;
    std::map<std::pair<int, int>, Scalar> lam_; // both orientations stored
    std::vector<std::string> warnings_;
};

/// Completes and validates the family lambda. When ord(q_ii) > 3 for all i,
/// a vertex linked to two different vertices is a hard error (it contradicts
/// the uniqueness lemma); at small orders the situation can genuinely occur
/// and is recorded as a warning instead.
LinkingData validate_linking(const CartanDatum& d,
                             const std::vector<std::tuple<int, int, Scalar>>& given);

struct LinkingGraph {
    int num_components = 0;
    std::vector<std::pair<int, int>> edges; // component pairs, deduplicated
};

LinkingGraph linking_graph(const CartanDatum& d, const LinkingData& lam);

std::string linking_dot(const CartanDatum& d, const LinkingData& lam);

/// Two-coloring of the linking graph plus the pairing map t: t(k) in I^- is
/// linked with t(n+k) in I^+. Components without links land in I^+.
struct BipartitePartition {
    std::vector<int> minus_components, plus_components;
    std::vector<int> i_minus, i_plus; // vertex sets, ascending
    int n = 0;
    std::vector<int> t; // size 2n
};

/// Err::OddCycle carries the component cycle; for generic data an odd cycle
/// is impossible (the linking graph is bipartite then) so it is escalated as
/// invalid input; for non-generic data the error reports the limitation.
BipartitePartition bipartite_partition(const CartanDatum& d, const LinkingData& lam,
                                       bool swap_sides = false);

/// Projection data of pi : U(D,lambda) -> U(D',lambda'): D' keeps only the
/// linked vertices t(1..2n); every other generator is sent to 0.
struct ProjectedDatum {
    CartanDatum datum;   // D'
    LinkingData linking; // lambda'
    BipartitePartition part;
    std::vector<int> killed; // vertices k with pi(x_k) = 0
};

ProjectedDatum project_datum(const CartanDatum& d, const LinkingData& lam,
                             bool swap_sides = false);

/// Reduced datum D_red(Gamma,(L_i),(K_i),(chi_i),(a_ij)) with the family l.
struct ReducedDatum {
    FieldCtx F;
    FgAbelianGroup group;
    std::vector<GroupElement> L, K;
    std::vector<Character> chi;
    CartanMatrix cartan;
    std::vector<Scalar> l;

    int n() const { return static_cast<int>(K.size()); }
    Scalar q(int i, int j) const { return chi[static_cast<size_t>(j)](K[static_cast<size_t>(i)]); }
    std::pair<bool, int> is_generic() const;
};

/// Validates the reduced-datum equations; Err::ReducedInvariantViolated.
ReducedDatum make_reduced(FieldCtx F, FgAbelianGroup group, std::vector<GroupElement> L,
                          std::vector<GroupElement> K, std::vector<Character> chi,
                          CartanMatrix cartan, std::vector<Scalar> l);

/// Reads off the reduced datum from a projected (non-degenerate, paired) D'.
ReducedDatum to_reduced(const ProjectedDatum& p);

/// Doubled Cartan datum of a reduced datum: theta = 2n with g_i = L_i,
/// g_{n+i} = K_i, chi_i inverted on the minus side, block-diagonal Cartan
/// matrix, and lambda_{i,n+i} = l_i.
std::pair<CartanDatum, LinkingData> double_reduced(const ReducedDatum& rd);

/// Named presets.
ReducedDatum preset_uqsl(char type, int rank);   // one-parameter U_q(g), q = first indeterminate
ReducedDatum preset_benkart(int n);              // two-parameter U_{r,s}(gl_{n+1})

} // namespace uqmod
