#include "uqmod/datum.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace uqmod {

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// D0-th roots of a constant c in K, restricted to torsion * rational form;
// candidates ordered positive-rational-part first, then by zeta exponent.
std::vector<Scalar> constant_roots(FieldCtx F, const Cyclo& c, long D0) {
    const FieldContext& Fc = *F;
    std::vector<Scalar> out;
    long N = static_cast<long>(Fc.order());
    // decompose c = zeta^k * r
    std::vector<std::pair<long, Rat>> forms;
    for (long k = 0; k < N; ++k) {
        Cyclo cand = cy_mul(Fc, c, cy_zeta_pow(Fc, -k));
        if (cand.is_rational() && cand.c[0] != 0) forms.emplace_back(k, cand.c[0]);
    }
    auto exact_root = [](const Rat& a, long n) -> std::optional<Rat> {
        // positive rational n-th root, exact only
        if (a <= 0) return std::nullopt;
        mpz_class num = a.get_num(), den = a.get_den(), rn, rd;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) == 0)
            return std::nullopt;
        if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) == 0)
            return std::nullopt;
        return Rat(rn) / Rat(rd);
    };
    std::vector<std::pair<int, Scalar>> ranked; // (rank key, candidate)
    for (auto& [k, r] : forms) {
        auto s0 = exact_root(abs(r), D0);
        if (!s0) continue;
        for (int sign = 0; sign < 2; ++sign) {
            Rat s = sign == 0 ? *s0 : -*s0;
            for (long kp = 0; kp < N; ++kp) {
                Scalar cand = Scalar::rational(F, s) * Scalar::zeta(F, kp);
                if (cand.pow(D0) == Scalar::cyclo(F, c))
                    ranked.emplace_back(sign * 1000 + static_cast<int>(kp), cand);
            }
        }
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, cand] : ranked)
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    return out;
}

// q with q^{2 d_i} = q_ii for all i in the component, if one exists in K.
std::optional<Scalar> solve_qJ(const FieldCtx& F, const std::vector<std::vector<Scalar>>& q,
                               const CartanComponent& comp, const std::vector<long>& d) {
    int i0 = comp.vertices[0];
    for (int v : comp.vertices)
        if (d[static_cast<size_t>(v)] < d[static_cast<size_t>(i0)]) i0 = v;
    long D0 = 2 * d[static_cast<size_t>(i0)];
    const Scalar& base = q[static_cast<size_t>(i0)][static_cast<size_t>(i0)];
    if (!base.is_monomial()) return std::nullopt;
    auto [coef, exps] = base.monomial_parts();
    std::vector<int> root_exp(exps.size());
    for (size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] % D0 != 0) return std::nullopt;
        root_exp[v] = exps[v] / static_cast<int>(D0);
    }
    Scalar mono = Scalar::one(F);
    for (size_t v = 0; v < root_exp.size(); ++v)
        if (root_exp[v] != 0) mono *= Scalar::variable(F, static_cast<int>(v), root_exp[v]);
    for (const Scalar& c0 : constant_roots(F, coef, D0)) {
        Scalar cand = c0 * mono;
        bool ok = true;
        for (int v : comp.vertices)
            if (cand.pow(2 * d[static_cast<size_t>(v)]) != q[static_cast<size_t>(v)][static_cast<size_t>(v)]) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return std::nullopt;
}

} // namespace

CartanDatum::CartanDatum(FieldCtx F, FgAbelianGroup group, std::vector<GroupElement> g,
                         std::vector<Character> chi, CartanMatrix cartan)
    : F_(std::move(F)), group_(std::move(group)), g_(std::move(g)), chi_(std::move(chi)),
      cartan_(std::move(cartan)) {
    size_t theta = g_.size();
    if (chi_.size() != theta || static_cast<size_t>(cartan_.rank()) != theta)
        fail(Err::ParseError, "datum arity mismatch: g, chi, cartan must share theta");
    for (size_t i = 0; i < theta; ++i) {
        if (!(g_[i].group() == group_)) fail(Err::GroupMismatch, "g_i not in the datum group");
        if (!(chi_[i].group() == group_)) fail(Err::GroupMismatch, "chi_i not on the datum group");
    }
    q_.assign(theta, std::vector<Scalar>(theta, Scalar::zero(F_)));
    for (size_t i = 0; i < theta; ++i)
        for (size_t j = 0; j < theta; ++j) q_[i][j] = chi_[j](g_[i]);

    for (size_t i = 0; i < theta; ++i) {
        if (q_[i][i].is_one())
            fail(Err::QiiIsOne, "q_" + std::to_string(i + 1) + std::to_string(i + 1) + " = 1");
        for (size_t j = 0; j < theta; ++j) {
            Scalar lhs = q_[i][j] * q_[j][i];
            Scalar rhs = q_[i][i].pow(cartan_.entry(static_cast<int>(i), static_cast<int>(j)));
            if (lhs != rhs)
                fail(Err::CartanConditionViolated,
                     "Cartan condition q_ij q_ji = q_ii^a_ij violated at " +
                         pair_str(static_cast<int>(i), static_cast<int>(j)) + ": " + lhs.to_string() +
                         " != " + rhs.to_string());
        }
    }
    for (const auto& comp : cartan_.components().components)
        qJ_.push_back(solve_qJ(F_, q_, comp, cartan_.components().d));
}

CartanDatum build_datum(FieldCtx F, FgAbelianGroup group, std::vector<GroupElement> g,
                        std::vector<Character> chi, CartanMatrix cartan) {
    return CartanDatum(std::move(F), std::move(group), std::move(g), std::move(chi), std::move(cartan));
}

std::optional<Scalar> CartanDatum::q_component(int comp) const { return qJ_[static_cast<size_t>(comp)]; }

std::pair<bool, int> CartanDatum::is_generic() const {
    for (int i = 0; i < theta(); ++i)
        if (is_root_of_unity(q(i, i)).has_value()) return {false, i};
    return {true, -1};
}

std::vector<std::vector<Scalar>> CartanDatum::twist_matrix() const {
    int th = theta();
    std::vector<std::vector<Scalar>> qp(static_cast<size_t>(th),
                                        std::vector<Scalar>(static_cast<size_t>(th), Scalar::zero(F_)));
    for (int i = 0; i < th; ++i)
        for (int j = 0; j < th; ++j) {
            if (!cartan_.same_component(i, j)) continue;
            int comp = cartan_.components().comp_of[static_cast<size_t>(i)];
            const auto& qJ = qJ_[static_cast<size_t>(comp)];
            if (!qJ)
                fail(Err::NoQJ, "component " + std::to_string(comp + 1) +
                                    " admits no q_J in K; twist matrix undefined");
            qp[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                qJ->pow(cartan_.d(i) * cartan_.entry(i, j));
        }
    return qp;
}

bool CartanDatum::linkable(int i, int j) const {
    if (i == j || cartan_.same_component(i, j)) return false;
    if ((g_[static_cast<size_t>(i)] * g_[static_cast<size_t>(j)]).is_identity()) return false;
    if (!(chi_[static_cast<size_t>(i)] * chi_[static_cast<size_t>(j)]).is_trivial()) return false;
    // consequence of the Cartan condition for linkable pairs
    if (!(q(i, i) * q(j, j)).is_one())
        fail(Err::Internal, "linkable pair " + pair_str(i, j) + " violates q_ii = q_jj^-1");
    return true;
}

Scalar LinkingData::lambda(const CartanDatum& d, int i, int j) const {
    auto it = lam_.find({i, j});
    return it == lam_.end() ? Scalar::zero(d.ctx()) : it->second;
}

bool LinkingData::is_linked(int i, int j) const {
    auto it = lam_.find({i, j});
    return it != lam_.end() && !it->second.is_zero();
}

std::vector<std::pair<int, int>> LinkingData::linked_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, val] : lam_)
        if (key.first < key.second && !val.is_zero()) out.push_back(key);
    return out;
}

LinkingData validate_linking(const CartanDatum& d,
                             const std::vector<std::tuple<int, int, Scalar>>& given) {
    LinkingData lam(d.theta());
    for (const auto& [i, j, v] : given) {
        if (i < 0 || j < 0 || i >= d.theta() || j >= d.theta() || i == j)
            fail(Err::ParseError, "linking index out of range at " + pair_str(i, j));
        if (d.cartan().same_component(i, j))
            fail(Err::NonLinkablePair, "lambda given on connected pair " + pair_str(i, j));
        if (!v.is_zero() && !d.linkable(i, j))
            fail(Err::NonLinkablePair, "nonzero lambda on non-linkable pair " + pair_str(i, j));
        auto it = lam.lam_.find({i, j});
        if (it != lam.lam_.end() && it->second != v)
            fail(Err::InconsistentSymmetry, "conflicting lambda at " + pair_str(i, j));
        lam.lam_[{i, j}] = v;
        Scalar other = -d.q(j, i) * v; // lambda_ji = -q_ji lambda_ij
        auto jt = lam.lam_.find({j, i});
        if (jt != lam.lam_.end() && jt->second != other)
            fail(Err::InconsistentSymmetry,
                 "lambda_ji != -q_ji lambda_ij at " + pair_str(j, i));
        lam.lam_[{j, i}] = other;
    }
    // A vertex linked to two different vertices contradicts the uniqueness
    // lemma whenever ord(q_ii) > 3 for all i; at small orders it is possible
    // and only flagged.
    for (int i = 0; i < d.theta(); ++i) {
        std::vector<int> partners;
        for (int j = 0; j < d.theta(); ++j)
            if (lam.is_linked(i, j)) partners.push_back(j);
        if (partners.size() > 1) {
            bool hyp = true;
            for (int k = 0; k < d.theta(); ++k) {
                auto ord = is_root_of_unity(d.q(k, k));
                if (ord && *ord <= 3) hyp = false;
            }
            std::string msg = "vertex " + std::to_string(i + 1) + " linked to " +
                              std::to_string(partners.size()) + " vertices";
            if (hyp) fail(Err::MultipleLinksFromVertex, msg + " (impossible: ord(q_ii) > 3 for all i)");
            lam.warnings_.push_back(msg + " (ord(q_ii) <= 3 regime)");
        }
    }
    return lam;
}

LinkingGraph linking_graph(const CartanDatum& d, const LinkingData& lam) {
    LinkingGraph g;
    g.num_components = static_cast<int>(d.cartan().components().components.size());
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& [i, j] : lam.linked_pairs()) {
        int ci = d.cartan().components().comp_of[static_cast<size_t>(i)];
        int cj = d.cartan().components().comp_of[static_cast<size_t>(j)];
        auto key = std::minmax(ci, cj);
        if (!seen[{key.first, key.second}]) {
            seen[{key.first, key.second}] = true;
            g.edges.emplace_back(key.first, key.second);
        }
    }
    return g;
}

std::string linking_dot(const CartanDatum& d, const LinkingData& lam) {
    std::ostringstream os;
    os << "graph linking {\n";
    const auto& comps = d.cartan().components().components;
    for (size_t c = 0; c < comps.size(); ++c) {
        os << "  c" << (c + 1) << " [label=\"" << comps[c].type << comps[c].rank << " {";
        for (size_t k = 0; k < comps[c].vertices.size(); ++k)
            os << (k ? "," : "") << (comps[c].vertices[k] + 1);
        os << "}\"];\n";
    }
    for (const auto& [a, b] : linking_graph(d, lam).edges)
        os << "  c" << (a + 1) << " -- c" << (b + 1) << ";\n";
    os << "}\n";
    return os.str();
}

BipartitePartition bipartite_partition(const CartanDatum& d, const LinkingData& lam,
                                       bool swap_sides) {
    const auto& cd = d.cartan().components();
    int nc = static_cast<int>(cd.components.size());
    auto graph = linking_graph(d, lam);
    std::vector<std::vector<int>> adj(static_cast<size_t>(nc));
    for (auto& [a, b] : graph.edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<int> color(static_cast<size_t>(nc), -1), parent(static_cast<size_t>(nc), -1);
    for (int start = 0; start < nc; ++start) {
        if (color[static_cast<size_t>(start)] >= 0 || adj[static_cast<size_t>(start)].empty())
            continue;
        color[static_cast<size_t>(start)] = 0;
        std::vector<int> queue{start};
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int v : adj[static_cast<size_t>(u)]) {
                if (color[static_cast<size_t>(v)] < 0) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    parent[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    // reconstruct the odd cycle through the BFS tree
                    std::vector<int> pu, pv;
                    for (int x = u; x >= 0; x = parent[static_cast<size_t>(x)]) pu.push_back(x);
                    for (int x = v; x >= 0; x = parent[static_cast<size_t>(x)]) pv.push_back(x);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    size_t common = 0;
                    while (common + 1 < pu.size() && common + 1 < pv.size() &&
                           pu[common + 1] == pv[common + 1])
                        ++common;
                    std::ostringstream cyc;
                    for (size_t x = common; x < pu.size(); ++x) cyc << " c" << (pu[x] + 1);
                    for (size_t x = pv.size(); x-- > common;) cyc << " c" << (pv[x] + 1);
                    bool generic = d.is_generic().first;
                    std::string msg = "linking graph has an odd cycle:" + cyc.str();
                    msg += generic ? " — impossible for generic data; the datum/linking input is invalid"
                                   : " — non-generic datum accepted, but no bipartite presentation exists"
                                     " and module construction for it is out of scope";
                    fail(Err::OddCycle, msg);
                }
            }
        }
    }
    BipartitePartition part;
    // side containing the smallest-indexed linked component becomes I^-
    int minus_color = swap_sides ? 1 : 0;
    for (int c = 0; c < nc; ++c) {
        if (color[static_cast<size_t>(c)] == minus_color)
            part.minus_components.push_back(c);
        else
            part.plus_components.push_back(c); // unlinked components land in I^+
    }
    for (int c : part.minus_components)
        for (int v : cd.components[static_cast<size_t>(c)].vertices) part.i_minus.push_back(v);
    for (int c : part.plus_components)
        for (int v : cd.components[static_cast<size_t>(c)].vertices) part.i_plus.push_back(v);
    std::sort(part.i_minus.begin(), part.i_minus.end());
    std::sort(part.i_plus.begin(), part.i_plus.end());

    std::vector<int> link_count(static_cast<size_t>(d.theta()), 0);
    for (auto [i, j] : lam.linked_pairs()) {
        ++link_count[static_cast<size_t>(i)];
        ++link_count[static_cast<size_t>(j)];
    }
    for (int v = 0; v < d.theta(); ++v)
        if (link_count[static_cast<size_t>(v)] > 1)
            fail(Err::MultipleLinksFromVertex,
                 "vertex " + std::to_string(v + 1) +
                     " is linked more than once; no pairing map t exists");
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : lam.linked_pairs()) {
        bool i_minus = std::binary_search(part.i_minus.begin(), part.i_minus.end(), i);
        pairs.emplace_back(i_minus ? i : j, i_minus ? j : i);
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    part.n = static_cast<int>(pairs.size());
    part.t.resize(static_cast<size_t>(2 * part.n));
    for (int k = 0; k < part.n; ++k) {
        part.t[static_cast<size_t>(k)] = pairs[static_cast<size_t>(k)].first;
        part.t[static_cast<size_t>(part.n + k)] = pairs[static_cast<size_t>(k)].second;
    }
    return part;
}

ProjectedDatum project_datum(const CartanDatum& d, const LinkingData& lam, bool swap_sides) {
    ProjectedDatum p;
    p.part = bipartite_partition(d, lam, swap_sides);
    int n2 = 2 * p.part.n;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    std::vector<std::vector<long>> a(static_cast<size_t>(n2), std::vector<long>(static_cast<size_t>(n2), 0));
    for (int i = 0; i < n2; ++i) {
        int ti = p.part.t[static_cast<size_t>(i)];
        g.push_back(d.g(ti));
        chi.push_back(d.chi(ti));
        for (int j = 0; j < n2; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                d.cartan().entry(ti, p.part.t[static_cast<size_t>(j)]);
    }
    if (n2 > 0) {
        p.datum = build_datum(d.ctx(), d.group(), std::move(g), std::move(chi), validate_cartan(a));
        std::vector<std::tuple<int, int, Scalar>> lentries;
        for (int i = 0; i < p.part.n; ++i)
            lentries.emplace_back(i, p.part.n + i,
                                  lam.lambda(d, p.part.t[static_cast<size_t>(i)],
                                             p.part.t[static_cast<size_t>(p.part.n + i)]));
        p.linking = validate_linking(p.datum, lentries);
    } else {
        p.linking = LinkingData(0);
    }
    std::vector<bool> kept(static_cast<size_t>(d.theta()), false);
    for (int v : p.part.t) kept[static_cast<size_t>(v)] = true;
    for (int v = 0; v < d.theta(); ++v)
        if (!kept[static_cast<size_t>(v)]) p.killed.push_back(v);
    return p;
}

std::pair<bool, int> ReducedDatum::is_generic() const {
    for (int i = 0; i < n(); ++i)
        if (is_root_of_unity(q(i, i)).has_value()) return {false, i};
    return {true, -1};
}

ReducedDatum make_reduced(FieldCtx F, FgAbelianGroup group, std::vector<GroupElement> L,
                          std::vector<GroupElement> K, std::vector<Character> chi,
                          CartanMatrix cartan, std::vector<Scalar> l) {
    ReducedDatum rd{std::move(F), std::move(group), std::move(L), std::move(K), std::move(chi),
                    std::move(cartan), std::move(l)};
    size_t n = rd.K.size();
    if (rd.L.size() != n || rd.chi.size() != n || rd.l.size() != n ||
        static_cast<size_t>(rd.cartan.rank()) != n)
        fail(Err::ParseError, "reduced datum arity mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (rd.l[i].is_zero())
            fail(Err::ReducedInvariantViolated, "l_" + std::to_string(i + 1) + " must be nonzero");
        if ((rd.K[i] * rd.L[i]).is_identity())
            fail(Err::ReducedInvariantViolated, "K_i L_i = 1 at i = " + std::to_string(i + 1));
        if (rd.chi[i](rd.K[i]).is_one())
            fail(Err::ReducedInvariantViolated, "chi_i(K_i) = 1 at i = " + std::to_string(i + 1));
        for (size_t j = 0; j < n; ++j) {
            Scalar lhs = rd.chi[i](rd.K[j]) * rd.chi[j](rd.K[i]);
            Scalar rhs = rd.chi[i](rd.K[i]).pow(rd.cartan.entry(static_cast<int>(i), static_cast<int>(j)));
            if (lhs != rhs)
                fail(Err::ReducedInvariantViolated,
                     "chi_i(K_j) chi_j(K_i) != chi_i(K_i)^a_ij at " +
                         pair_str(static_cast<int>(i), static_cast<int>(j)));
            if (rd.chi[i](rd.L[j]) != rd.chi[j](rd.K[i]))
                fail(Err::ReducedInvariantViolated,
                     "chi_i(L_j) != chi_j(K_i) at " + pair_str(static_cast<int>(i), static_cast<int>(j)));
        }
    }
    return rd;
}

ReducedDatum to_reduced(const ProjectedDatum& p) {
    int n = p.part.n;
    if (n == 0) fail(Err::ReducedInvariantViolated, "projected datum has no linked pairs");
    const CartanDatum& dp = p.datum;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dp.cartan().entry(i, j) != dp.cartan().entry(n + i, n + j))
                fail(Err::ReducedInvariantViolated,
                     "projected Cartan blocks disagree at " + pair_str(i, j));
    std::vector<GroupElement> L, K;
    std::vector<Character> chi;
    std::vector<Scalar> l;
    std::vector<std::vector<long>> a(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        L.push_back(dp.g(i));
        K.push_back(dp.g(n + i));
        chi.push_back(dp.chi(n + i));
        l.push_back(p.linking.lambda(dp, i, n + i));
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = dp.cartan().entry(i, j);
    }
    return make_reduced(dp.ctx(), dp.group(), std::move(L), std::move(K), std::move(chi),
                        validate_cartan(a), std::move(l));
}

std::pair<CartanDatum, LinkingData> double_reduced(const ReducedDatum& rd) {
    int n = rd.n();
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    std::vector<std::vector<long>> a(static_cast<size_t>(2 * n), std::vector<long>(static_cast<size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        g.push_back(rd.L[static_cast<size_t>(i)]);
        chi.push_back(rd.chi[static_cast<size_t>(i)].inverse());
    }
    for (int i = 0; i < n; ++i) {
        g.push_back(rd.K[static_cast<size_t>(i)]);
        chi.push_back(rd.chi[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = rd.cartan.entry(i, j);
            a[static_cast<size_t>(n + i)][static_cast<size_t>(n + j)] = rd.cartan.entry(i, j);
        }
    CartanDatum d = build_datum(rd.F, rd.group, std::move(g), std::move(chi), validate_cartan(a));
    std::vector<std::tuple<int, int, Scalar>> lentries;
    for (int i = 0; i < n; ++i) lentries.emplace_back(i, n + i, rd.l[static_cast<size_t>(i)]);
    LinkingData lam = validate_linking(d, lentries);
    return {std::move(d), std::move(lam)};
}

ReducedDatum preset_uqsl(char type, int rank) {
    FieldCtx F = FieldContext::make({1, {"q"}});
    CartanMatrix cm = validate_cartan(cartan_of_type(type, rank));
    FgAbelianGroup grp(rank, {});
    std::vector<GroupElement> K;
    std::vector<Character> chi;
    Scalar q = Scalar::variable(F, 0);
    for (int i = 0; i < rank; ++i) K.push_back(GroupElement::generator(grp, i));
    for (int j = 0; j < rank; ++j) {
        std::vector<Scalar> vals;
        for (int i = 0; i < rank; ++i) vals.push_back(q.pow(cm.d(i) * cm.entry(i, j)));
        chi.emplace_back(grp, std::move(vals));
    }
    std::vector<Scalar> l;
    for (int i = 0; i < rank; ++i) {
        long di = cm.d(i);
        l.push_back(q.pow(2 * di) / (q.pow(di) - q.pow(-di)));
    }
    return make_reduced(F, grp, K, K, std::move(chi), std::move(cm), std::move(l));
}

ReducedDatum preset_benkart(int n) {
    if (n < 1) fail(Err::ParseError, "benkart preset needs n >= 1");
    FieldCtx F = FieldContext::make({1, {"r", "s"}});
    CartanMatrix cm = validate_cartan(cartan_of_type('A', n));
    FgAbelianGroup grp(2 * (n + 1), {});
    Scalar r = Scalar::variable(F, 0), s = Scalar::variable(F, 1);
    auto a_idx = [&](int i) { return i; };            // a_1..a_{n+1} at 0..n
    auto b_idx = [&](int i) { return (n + 1) + i; };  // b_1..b_{n+1} after
    // (epsilon_i, alpha_j) with alpha_j = epsilon_j - epsilon_{j+1}
    auto pairing = [&](int i, int j) { return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0); };
    std::vector<Character> chi;
    for (int j = 0; j < n; ++j) {
        std::vector<Scalar> vals(static_cast<size_t>(2 * (n + 1)), Scalar::one(F));
        for (int i = 0; i <= n; ++i) {
            vals[static_cast<size_t>(a_idx(i))] = r.pow(pairing(i, j));
            vals[static_cast<size_t>(b_idx(i))] = s.pow(pairing(i, j));
        }
        chi.emplace_back(grp, std::move(vals));
    }
    std::vector<GroupElement> K, L;
    for (int i = 0; i < n; ++i) {
        std::vector<long> ek(static_cast<size_t>(2 * (n + 1)), 0);
        ek[static_cast<size_t>(a_idx(i))] = 1;
        ek[static_cast<size_t>(b_idx(i + 1))] = 1;
        K.emplace_back(grp, std::move(ek));
        std::vector<long> el(static_cast<size_t>(2 * (n + 1)), 0);
        el[static_cast<size_t>(a_idx(i + 1))] = -1;
        el[static_cast<size_t>(b_idx(i))] = -1;
        L.emplace_back(grp, std::move(el));
    }
    std::vector<Scalar> l(static_cast<size_t>(n), r / (s * (r - s)));
    return make_reduced(F, grp, std::move(L), std::move(K), std::move(chi), std::move(cm),
                        std::move(l));
}

} // namespace uqmod
