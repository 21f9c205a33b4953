#include "uqmod/rep.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "uqmod/braided.hpp"

namespace uqmod {

namespace {

// Shared per-build data in reduced terms: the braiding of W is
// qW(i,j) = eta_j(z_i) = q_ji^-1, the pairing values beta_i = -q_ii^-1 l_i,
// and rhochi_i = chi(L_i K_i), the scalar rho(z_i) chi(g_i) controlling caps.
struct ModCtx {
    const ReducedDatum& rd;
    Character chi;
    int n;
    FieldCtx F;
    std::vector<std::vector<Scalar>> q;
    std::vector<Scalar> beta, rhochi;

    ModCtx(const ReducedDatum& rd_, Character chi_)
        : rd(rd_), chi(std::move(chi_)), n(rd_.n()), F(rd_.F) {
        if (!(chi.group() == rd.group)) fail(Err::GroupMismatch, "chi must be a character of Gamma");
        q.assign(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(F)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q[static_cast<size_t>(i)][static_cast<size_t>(j)] = rd.q(i, j);
        for (int i = 0; i < n; ++i) {
            beta.push_back(-q[static_cast<size_t>(i)][static_cast<size_t>(i)].inverse() *
                           rd.l[static_cast<size_t>(i)]);
            rhochi.push_back(chi(rd.L[static_cast<size_t>(i)] * rd.K[static_cast<size_t>(i)]));
        }
    }

    Scalar qW(int i, int j) const { return q[static_cast<size_t>(j)][static_cast<size_t>(i)].inverse(); }

    // coefficient alpha_p of removing position p when a_j acts on the
    // word (0-based positions)
    Scalar alpha(const Word& word, size_t p, int j) const {
        if (word[p] != j) return Scalar::zero(F);
        Scalar c = beta[static_cast<size_t>(j)];
        for (size_t r = 0; r < p; ++r) c *= qW(word[r], j);
        Scalar tail = Scalar::one(F);
        for (size_t s = p + 1; s < word.size(); ++s) tail *= qW(word[s], j) * qW(j, word[s]);
        c *= Scalar::one(F) - tail * rhochi[static_cast<size_t>(j)];
        return c;
    }

    // scalar of the twisted operator T_i on multidegree d
    Scalar twist_coeff(const Content& d, int i) const {
        Scalar c = rhochi[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            c *= q[static_cast<size_t>(j)][static_cast<size_t>(i)].pow(-d[static_cast<size_t>(j)]);
        return c;
    }

    // scalar of the central element z_i (x) K_i on multidegree d
    Scalar central_coeff(const Content& d, int i) const {
        Scalar c = rhochi[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            c *= (q[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                  q[static_cast<size_t>(i)][static_cast<size_t>(j)])
                     .pow(-d[static_cast<size_t>(j)]);
        return c;
    }

    // Gamma-weight of multidegree d: chi * prod chi_j^{-d_j}, as values on
    // the generators
    std::vector<Scalar> weight_values(const std::vector<long>& d) const {
        Character w = chi;
        for (int j = 0; j < n; ++j)
            if (d[static_cast<size_t>(j)] != 0)
                w = w * rd.chi[static_cast<size_t>(j)].pow(-d[static_cast<size_t>(j)]);
        return w.values();
    }
};

bool all_components_a1(const ReducedDatum& rd) {
    for (int i = 0; i < rd.n(); ++i)
        for (int j = 0; j < rd.n(); ++j)
            if (i != j && rd.cartan.entry(i, j) != 0) return false;
    return true;
}

std::string qls_label(const std::vector<long>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        s += "u" + std::to_string(i + 1);
        if (t[i] > 1) s += "^" + std::to_string(t[i]);
        s += "*";
    }
    return s + "m";
}

// Core of the quantum-linear-space construction: basis u^t m, 0 <= t <= cap.
ModuleRep qls_core(const ReducedDatum& rd, const Character& chi, const std::vector<long>& m) {
    ModCtx ctx(rd, chi);
    int n = ctx.n;
    FieldCtx F = ctx.F;

    std::vector<std::vector<long>> tuples;
    std::vector<long> t(static_cast<size_t>(n), 0);
    while (true) {
        tuples.push_back(t);
        int j = n - 1;
        while (j >= 0 && t[static_cast<size_t>(j)] == m[static_cast<size_t>(j)]) {
            t[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++t[static_cast<size_t>(j)];
    }
    std::sort(tuples.begin(), tuples.end());
    std::map<std::vector<long>, size_t> index;
    for (size_t k = 0; k < tuples.size(); ++k) index[tuples[k]] = k;
    size_t dim = tuples.size();

    ModuleRep rep;
    rep.F = F;
    rep.group = rd.group;
    rep.chi_values = chi.values();
    rep.m_exponents = m;
    rep.L_elems = rd.L;
    rep.K_elems = rd.K;
    rep.highest_index = 0;
    for (const auto& tu : tuples) {
        rep.basis_labels.push_back(qls_label(tu));
        rep.multidegree.push_back(tu);
        rep.weights.push_back(ctx.weight_values(tu));
    }
    for (int k = 0; k < rd.group.num_gens(); ++k) {
        Mat g = mat_zero(F, dim, dim);
        for (size_t b = 0; b < dim; ++b) g[b][b] = rep.weights[b][static_cast<size_t>(k)];
        rep.gamma_mats.push_back(std::move(g));
    }
    auto sorted_word = [&](const std::vector<long>& tu) {
        Word w;
        for (int i = 0; i < n; ++i)
            for (long r = 0; r < tu[static_cast<size_t>(i)]; ++r) w.push_back(i);
        return w;
    };
    for (int j = 0; j < n; ++j) {
        Mat xj = mat_zero(F, dim, dim);
        Mat yj = mat_zero(F, dim, dim);
        for (size_t col = 0; col < dim; ++col) {
            const auto& tu = tuples[col];
            if (tu[static_cast<size_t>(j)] < m[static_cast<size_t>(j)]) {
                // u_j walks left past u_i^{t_i} for i < j
                Scalar c = Scalar::one(F);
                for (int i = 0; i < j; ++i)
                    c *= ctx.qW(i, j).pow(-tu[static_cast<size_t>(i)]);
                auto up = tu;
                ++up[static_cast<size_t>(j)];
                xj[index.at(up)][col] = c;
            }
            if (tu[static_cast<size_t>(j)] > 0) {
                Word w = sorted_word(tu);
                Scalar c = Scalar::zero(F);
                for (size_t p = 0; p < w.size(); ++p)
                    if (w[p] == j) c += ctx.alpha(w, p, j);
                auto down = tu;
                --down[static_cast<size_t>(j)];
                yj[index.at(down)][col] = c;
            }
        }
        rep.x_mats.push_back(std::move(xj));
        rep.y_mats.push_back(std::move(yj));
    }
    return rep;
}

} // namespace

// ---------------------------------------------------------------------------
// Dominance

DominanceResult is_dominant(const ReducedDatum& rd, const Character& chi, long m_max) {
    DominanceResult res;
    res.status = DominanceResult::Status::Dominant;
    res.m.assign(static_cast<size_t>(rd.n()), 0);
    for (int i = 0; i < rd.n(); ++i) {
        Scalar base = rd.q(i, i);
        Scalar target = chi(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]);
        bool solved = false;
        if (base.is_monomial() && target.is_monomial()) {
            auto [cb, eb] = base.monomial_parts();
            auto [ct, et] = target.monomial_parts();
            bool base_const = true;
            for (int e : eb) base_const &= e == 0;
            if (!base_const) {
                // unique candidate from the exponent lattice
                size_t piv = 0;
                while (eb[piv] == 0) ++piv;
                long num = et[piv], den = eb[piv];
                if (num % den == 0) {
                    long cand = num / den;
                    if (cand >= 0 && base.pow(cand) == target) {
                        res.m[static_cast<size_t>(i)] = cand;
                        solved = true;
                    }
                }
                if (!solved) {
                    res.status = DominanceResult::Status::NotDominant;
                    res.witness = i;
                    return res;
                }
                continue;
            }
            // constant base: complete when it is a root of unity
            auto ord = is_root_of_unity(base);
            if (ord) {
                bool t_const = true;
                for (int e : et) t_const &= e == 0;
                if (t_const) {
                    Scalar p = Scalar::one(rd.F);
                    for (long k = 0; k < static_cast<long>(*ord); ++k) {
                        if (p == target) {
                            res.m[static_cast<size_t>(i)] = k;
                            solved = true;
                            break;
                        }
                        p *= base;
                    }
                }
                if (!solved) {
                    res.status = DominanceResult::Status::NotDominant;
                    res.witness = i;
                    return res;
                }
                continue;
            }
        }
        // bounded search, flagged incomplete
        Scalar p = Scalar::one(rd.F);
        for (long k = 0; k <= m_max; ++k) {
            if (p == target) {
                res.m[static_cast<size_t>(i)] = k;
                solved = true;
                break;
            }
            p *= base;
        }
        if (!solved) {
            res.status = DominanceResult::Status::Inconclusive;
            res.complete = false;
            res.witness = i;
            return res;
        }
        res.complete = false;
    }
    return res;
}

namespace {

// Integer linear solver by unimodular column reduction: C x = e over Z.
class ZColumnSolver {
public:
    explicit ZColumnSolver(std::vector<std::vector<long>> c) : h_(std::move(c)) {
        rows_ = h_.size();
        cols_ = rows_ ? h_[0].size() : 0;
        u_ = std::vector<std::vector<long>>(cols_, std::vector<long>(cols_, 0));
        for (size_t i = 0; i < cols_; ++i) u_[i][i] = 1;
        size_t cur = 0;
        for (size_t r = 0; r < rows_ && cur < cols_; ++r) {
            while (true) {
                size_t best = cols_;
                for (size_t c2 = cur; c2 < cols_; ++c2)
                    if (h_[r][c2] != 0 &&
                        (best == cols_ || std::abs(h_[r][c2]) < std::abs(h_[r][best])))
                        best = c2;
                if (best == cols_) break;
                col_swap(best, cur);
                bool clean = true;
                for (size_t c2 = cur + 1; c2 < cols_; ++c2) {
                    if (h_[r][c2] == 0) continue;
                    long qq = h_[r][c2] / h_[r][cur];
                    col_axpy(c2, cur, -qq);
                    if (h_[r][c2] != 0) clean = false;
                }
                if (clean) break;
            }
            if (h_[r][cur] != 0) {
                pivots_.emplace_back(r, cur);
                ++cur;
            }
        }
    }

    std::optional<std::vector<long>> solve(const std::vector<long>& e) const {
        std::vector<long> y(cols_, 0);
        std::vector<bool> pivot_row(rows_, false);
        for (auto [r, c] : pivots_) {
            long acc = e[r];
            for (auto [r2, c2] : pivots_) {
                if (c2 == c) break;
                acc -= h_[r][c2] * y[c2];
            }
            if (acc % h_[r][c] != 0) return std::nullopt;
            y[c] = acc / h_[r][c];
            pivot_row[r] = true;
        }
        for (size_t r = 0; r < rows_; ++r) {
            if (pivot_row[r]) continue;
            long acc = 0;
            for (auto [r2, c2] : pivots_) acc += h_[r][c2] * y[c2];
            if (acc != e[r]) return std::nullopt;
        }
        // u_ holds the accumulated column operations row-wise (i.e. U^T)
        std::vector<long> x(cols_, 0);
        for (size_t i = 0; i < cols_; ++i)
            for (size_t j = 0; j < cols_; ++j) x[i] += u_[j][i] * y[j];
        return x;
    }

private:
    void col_swap(size_t a, size_t b) {
        for (size_t r = 0; r < rows_; ++r) std::swap(h_[r][a], h_[r][b]);
        std::swap(u_[a], u_[b]);
    }
    void col_axpy(size_t dst, size_t src, long f) {
        for (size_t r = 0; r < rows_; ++r) h_[r][dst] += f * h_[r][src];
        for (size_t j = 0; j < cols_; ++j) u_[dst][j] += f * u_[src][j];
    }
    std::vector<std::vector<long>> h_, u_;
    std::vector<std::pair<size_t, size_t>> pivots_;
    size_t rows_ = 0, cols_ = 0;
};

std::optional<Character> solve_chi_m(const ReducedDatum& rd, const std::vector<long>& m) {
    if (!rd.group.torsion.empty() || rd.group.free_rank == 0) return std::nullopt;
    int G = rd.group.num_gens();
    int V = rd.F->num_vars();
    int n = rd.n();
    std::vector<std::vector<long>> C(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(G), 0));
    for (int i = 0; i < n; ++i) {
        GroupElement kl = rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)];
        for (int k = 0; k < G; ++k) C[static_cast<size_t>(i)][static_cast<size_t>(k)] = kl.exps()[static_cast<size_t>(k)];
    }
    ZColumnSolver solver(C);
    // per field variable: target exponents m_i * exp_var(q_ii)
    std::vector<std::vector<long>> X(static_cast<size_t>(G), std::vector<long>(static_cast<size_t>(V), 0));
    for (int v = 0; v < V; ++v) {
        std::vector<long> e(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            Scalar qii = rd.q(i, i);
            if (!qii.is_monomial()) return std::nullopt;
            auto [c, exps] = qii.monomial_parts();
            e[static_cast<size_t>(i)] = m[static_cast<size_t>(i)] * exps[static_cast<size_t>(v)];
        }
        auto sol = solver.solve(e);
        if (!sol) return std::nullopt;
        for (int k = 0; k < G; ++k) X[static_cast<size_t>(k)][static_cast<size_t>(v)] = (*sol)[static_cast<size_t>(k)];
    }
    std::vector<Scalar> vals;
    for (int k = 0; k < G; ++k) {
        Scalar v = Scalar::one(rd.F);
        for (int var = 0; var < V; ++var)
            if (X[static_cast<size_t>(k)][static_cast<size_t>(var)] != 0)
                v *= Scalar::variable(rd.F, var, 1).pow(X[static_cast<size_t>(k)][static_cast<size_t>(var)]);
        vals.push_back(v);
    }
    Character chi_m(rd.group, std::move(vals));
    for (int i = 0; i < n; ++i) {
        Scalar want = rd.q(i, i).pow(m[static_cast<size_t>(i)]);
        if (chi_m(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]) != want)
            return std::nullopt;
    }
    return chi_m;
}

} // namespace

std::vector<DominantFamily> enumerate_dominant(const ReducedDatum& rd, long bound) {
    if (!rd.group.torsion.empty() || rd.group.free_rank == 0)
        fail(Err::NoCharacterExists, "dominant-character enumeration requires a free group");
    std::vector<DominantFamily> out;
    std::vector<long> m(static_cast<size_t>(rd.n()), 0);
    while (true) {
        auto chi_m = solve_chi_m(rd, m);
        if (!chi_m)
            fail(Err::NoCharacterExists,
                 "no character realizes m = (" + [&] {
                     std::string s;
                     for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
                     return s;
                 }() + ")");
        out.push_back({m, *chi_m});
        int j = rd.n() - 1;
        while (j >= 0 && m[static_cast<size_t>(j)] == bound) {
            m[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++m[static_cast<size_t>(j)];
    }
    return out;
}

bool is_one_dimensional_twist(const ReducedDatum& rd, const Character& psi) {
    for (int i = 0; i < rd.n(); ++i)
        if (!psi(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]).is_one()) return false;
    return true;
}

std::optional<DominantFactorization> factor_dominant(const ReducedDatum& rd, const Character& chi) {
    auto dom = is_dominant(rd, chi);
    if (!dom.dominant()) return std::nullopt;
    auto chi_m = solve_chi_m(rd, dom.m);
    if (!chi_m) return std::nullopt;
    Character psi = chi * chi_m->inverse();
    if (!is_one_dimensional_twist(rd, psi)) return std::nullopt;
    return DominantFactorization{dom.m, *chi_m, psi};
}

// ---------------------------------------------------------------------------
// ModuleRep helpers

Mat ModuleRep::gamma_action(const GroupElement& g) const {
    Mat r = mat_zero(F, dim(), dim());
    for (size_t b = 0; b < dim(); ++b) {
        Scalar v = Scalar::one(F);
        for (size_t k = 0; k < weights[b].size(); ++k) {
            long e = g.exps()[k];
            if (e != 0) v *= weights[b][k].pow(e);
        }
        r[b][b] = v;
    }
    return r;
}

Mat ModuleRep::Fmat(int i) const {
    Mat Linv = gamma_action(L_elems[static_cast<size_t>(i)].inverse());
    return mat_mul(x_mats[static_cast<size_t>(i)], Linv);
}

// ---------------------------------------------------------------------------
// Builders

ModuleRep build_qls_module(const ReducedDatum& rd, const Character& chi,
                           const std::vector<long>& m) {
    if (!all_components_a1(rd)) fail(Err::NotQLS, "Cartan matrix has a component larger than A1");
    if (m.size() != static_cast<size_t>(rd.n())) fail(Err::ParseError, "exponent vector arity");
    for (int i = 0; i < rd.n(); ++i) {
        if (m[static_cast<size_t>(i)] < 0) fail(Err::NotDominant, "negative exponent");
        Scalar want = rd.q(i, i).pow(m[static_cast<size_t>(i)]);
        if (chi(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]) != want)
            fail(Err::NotDominant,
                 "chi(K_i L_i) != q_ii^m_i at i = " + std::to_string(i + 1));
    }
    return qls_core(rd, chi, m);
}

ModuleRep finite_qls(const ReducedDatum& rd, const Character& chi) {
    if (!rd.group.is_finite()) fail(Err::OrderHypothesisViolated, "group must be finite");
    if (!all_components_a1(rd)) fail(Err::NotQLS, "finite case implemented for A1 components only");
    std::vector<long> caps;
    for (int i = 0; i < rd.n(); ++i) {
        auto ord = is_root_of_unity(rd.q(i, i));
        if (!ord) fail(Err::Internal, "finite group with non-torsion q_ii");
        if (*ord % 2 == 0 || *ord <= 3)
            fail(Err::OrderHypothesisViolated,
                 "ord(q_ii) must be odd and > 3, got " + std::to_string(*ord) + " at i = " +
                     std::to_string(i + 1));
        Scalar target = chi(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]);
        long cap = static_cast<long>(*ord);
        Scalar p = Scalar::one(rd.F);
        for (long t = 1; t <= static_cast<long>(*ord); ++t) {
            if (p == target) { // q_ii^{t-1} = chi(K_i L_i)
                cap = t;
                break;
            }
            p *= rd.q(i, i);
        }
        caps.push_back(cap - 1);
    }
    return qls_core(rd, chi, caps);
}

namespace {

// Incremental span of module vectors inside one multidegree block of B(W),
// tracking how reduced vectors decompose over the adjoined members.
class CoordTracker {
public:
    explicit CoordTracker(size_t width) : width_(width) {}

    // expresses v over the members if possible
    std::optional<std::vector<std::pair<int, Scalar>>> try_express(Vec v) const {
        std::map<int, Scalar> combo;
        reduce(v, combo);
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        std::vector<std::pair<int, Scalar>> out(combo.begin(), combo.end());
        return out;
    }

    void add(Vec v, int member) {
        std::map<int, Scalar> combo;
        reduce(v, combo);
        size_t piv = width_;
        for (size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) {
                piv = j;
                break;
            }
        if (piv == width_) fail(Err::Internal, "CoordTracker::add on dependent vector");
        Scalar d = v[piv].inverse();
        for (auto& x : v) x *= d;
        std::map<int, Scalar> crow;
        crow[member] = d;
        for (auto& [mem, c] : combo) {
            Scalar val = -c * d;
            if (val.is_zero()) continue;
            auto it = crow.find(mem);
            if (it == crow.end())
                crow[mem] = val;
            else {
                it->second += val;
                if (it->second.is_zero()) crow.erase(it);
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        combos_.push_back(std::move(crow));
    }

private:
    // v -> v - sum c_r rows_r; combo accumulates sum c_r combos_r
    void reduce(Vec& v, std::map<int, Scalar>& combo) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            Scalar f = c;
            for (size_t j = 0; j < width_; ++j)
                if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
            for (const auto& [mem, cc] : combos_[r]) {
                Scalar add = f * cc;
                if (add.is_zero()) continue;
                auto it = combo.find(mem);
                if (it == combo.end())
                    combo[mem] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) combo.erase(it);
                }
            }
        }
    }

    size_t width_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
    std::vector<std::map<int, Scalar>> combos_;
};

using SparseCol = std::vector<std::pair<int, Scalar>>;

} // namespace

ModuleRep build_general_module(const ReducedDatum& rd, const Character& chi,
                               const std::vector<long>& m, size_t dim_budget,
                               int degree_budget) {
    ModCtx ctx(rd, chi);
    int n = ctx.n;
    FieldCtx F = ctx.F;
    if (m.size() != static_cast<size_t>(n)) fail(Err::ParseError, "exponent vector arity");
    for (int i = 0; i < n; ++i) {
        Scalar want = rd.q(i, i).pow(m[static_cast<size_t>(i)]);
        if (chi(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]) != want)
            fail(Err::NotDominant, "chi(K_i L_i) != q_ii^m_i at i = " + std::to_string(i + 1));
    }
    if (degree_budget < 0) {
        long b = 0;
        const auto& cd = rd.cartan.components();
        for (int i = 0; i < n; ++i)
            b += m[static_cast<size_t>(i)] *
                 cd.components[static_cast<size_t>(cd.comp_of[static_cast<size_t>(i)])].positive_roots;
        degree_budget = static_cast<int>(b) + 1;
    }

    std::vector<std::vector<Scalar>> qw(static_cast<size_t>(n),
                                        std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(F)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) qw[static_cast<size_t>(i)][static_cast<size_t>(j)] = ctx.qW(i, j);
    NicholsContext nich(BraidedVectorSpace(F, qw), degree_budget);

    std::vector<TensorPoly> polys{TensorPoly::unit(F)};
    std::vector<Content> degs{Content(static_cast<size_t>(n), 0)};
    std::vector<std::string> labels{"m"};
    std::map<Content, CoordTracker> trackers;
    auto block_coords = [&](const TensorPoly& p, const Content& c) {
        const auto& blk = nich.block(c);
        Vec v(blk.basis_words.size(), Scalar::zero(F));
        for (const auto& [w, coeff] : p.terms()) {
            int wi = blk.index.at(w);
            // canonical polys are supported on basis words
            int pos = -1;
            for (size_t b = 0; b < blk.basis_words.size(); ++b)
                if (blk.basis_words[b] == wi) pos = static_cast<int>(b);
            if (pos < 0) fail(Err::Internal, "non-canonical word in module vector");
            v[static_cast<size_t>(pos)] = coeff;
        }
        return v;
    };
    {
        CoordTracker t0(1);
        t0.add(block_coords(polys[0], degs[0]), 0);
        trackers.emplace(degs[0], std::move(t0));
    }

    std::vector<std::vector<SparseCol>> x_cols(static_cast<size_t>(n));
    std::vector<std::vector<SparseCol>> e_cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) e_cols[static_cast<size_t>(j)].push_back({}); // E_j m = 0

    auto apply_x = [&](int i, const SparseCol& v) {
        std::map<int, Scalar> acc;
        for (const auto& [k, c] : v) {
            for (const auto& [t, xc] : x_cols[static_cast<size_t>(i)][static_cast<size_t>(k)]) {
                Scalar add = c * xc;
                if (add.is_zero()) continue;
                auto it = acc.find(t);
                if (it == acc.end())
                    acc[t] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        return SparseCol(acc.begin(), acc.end());
    };

    for (size_t k = 0; k < polys.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            Content dnew = degs[k];
            ++dnew[static_cast<size_t>(i)];
            TensorPoly ti;
            try {
                TensorPoly left = nich.reduce(TensorPoly::letter(F, i) * polys[k]);
                TensorPoly right = nich.reduce(polys[k] * TensorPoly::letter(F, i));
                ti = left - right.scale(ctx.twist_coeff(degs[k], i));
            } catch (const Error& e) {
                if (e.kind() == Err::DegreeBudgetExceeded)
                    fail(Err::BudgetExceeded,
                         "module spin exceeded the Nichols degree budget; "
                         "non-dominant input or budget too small");
                throw;
            }
            if (ti.is_zero()) {
                x_cols[static_cast<size_t>(i)].resize(polys.size());
                continue;
            }
            auto it = trackers.find(dnew);
            if (it == trackers.end()) {
                it = trackers.emplace(dnew, CoordTracker(nich.dim_at(dnew))).first;
            }
            Vec coords = block_coords(ti, dnew);
            auto expr = it->second.try_express(coords);
            if (x_cols[static_cast<size_t>(i)].size() < polys.size())
                x_cols[static_cast<size_t>(i)].resize(polys.size());
            if (expr) {
                x_cols[static_cast<size_t>(i)][k] = *expr;
                continue;
            }
            // new basis vector
            int idx = static_cast<int>(polys.size());
            if (static_cast<size_t>(idx) >= dim_budget)
                fail(Err::BudgetExceeded, "module dimension exceeded the budget " +
                                              std::to_string(dim_budget));
            it->second.add(coords, idx);
            polys.push_back(ti);
            degs.push_back(dnew);
            labels.push_back("F" + std::to_string(i + 1) + "*" + labels[k]);
            x_cols[static_cast<size_t>(i)].resize(polys.size());
            x_cols[static_cast<size_t>(i)][k] = {{idx, Scalar::one(F)}};
            // E_j on the new vector via the commutation recursion
            Scalar qK = rd.chi[static_cast<size_t>(i)](rd.K[static_cast<size_t>(i)]); // placeholder, replaced per j
            (void)qK;
            for (int j = 0; j < n; ++j) {
                // a_j (u_i v) = chi_i^-1(K_j) u_i (a_j v) + [i=j] beta_i (1 - theta_i(d)) v
                Scalar comm = rd.chi[static_cast<size_t>(i)](rd.K[static_cast<size_t>(j)]).inverse();
                SparseCol col = apply_x(i, e_cols[static_cast<size_t>(j)][k]);
                for (auto& [t, c] : col) c *= comm;
                if (i == j) {
                    Scalar extra = ctx.beta[static_cast<size_t>(i)] *
                                   (Scalar::one(F) - ctx.central_coeff(degs[k], i));
                    if (!extra.is_zero()) {
                        bool merged = false;
                        for (auto& [t, c] : col)
                            if (t == static_cast<int>(k)) {
                                c += extra;
                                merged = true;
                            }
                        if (!merged) col.emplace_back(static_cast<int>(k), extra);
                        std::sort(col.begin(), col.end(),
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
                        col.erase(std::remove_if(col.begin(), col.end(),
                                                 [](const auto& p) { return p.second.is_zero(); }),
                                  col.end());
                    }
                }
                e_cols[static_cast<size_t>(j)].push_back(std::move(col));
            }
        }
    }

    size_t dim = polys.size();
    ModuleRep rep;
    rep.F = F;
    rep.group = rd.group;
    rep.chi_values = chi.values();
    rep.m_exponents = m;
    rep.L_elems = rd.L;
    rep.K_elems = rd.K;
    rep.highest_index = 0;
    rep.basis_labels = labels;
    for (size_t b = 0; b < dim; ++b) {
        std::vector<long> d(degs[b].begin(), degs[b].end());
        rep.multidegree.push_back(d);
        rep.weights.push_back(ctx.weight_values(d));
    }
    for (int g = 0; g < rd.group.num_gens(); ++g) {
        Mat gm = mat_zero(F, dim, dim);
        for (size_t b = 0; b < dim; ++b) gm[b][b] = rep.weights[b][static_cast<size_t>(g)];
        rep.gamma_mats.push_back(std::move(gm));
    }
    for (int i = 0; i < n; ++i) {
        Mat xm = mat_zero(F, dim, dim);
        for (size_t c = 0; c < dim; ++c)
            if (c < x_cols[static_cast<size_t>(i)].size())
                for (const auto& [t, v] : x_cols[static_cast<size_t>(i)][c])
                    xm[static_cast<size_t>(t)][c] = v;
        rep.x_mats.push_back(std::move(xm));
        Mat ym = mat_zero(F, dim, dim);
        for (size_t c = 0; c < dim; ++c)
            for (const auto& [t, v] : e_cols[static_cast<size_t>(i)][c])
                ym[static_cast<size_t>(t)][c] = v;
        rep.y_mats.push_back(std::move(ym));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

Mat serre_matrix(const Mat& xi, const Mat& xj, long a, const Scalar& qii, const Scalar& qij) {
    FieldCtx F = qii.ctx();
    size_t dim = xi.size();
    Mat acc = mat_zero(F, dim, dim);
    for (long s = 0; s <= a; ++s) {
        Mat t = mat_mul(mat_pow(xi, static_cast<unsigned>(a - s)),
                        mat_mul(xj, mat_pow(xi, static_cast<unsigned>(s))));
        acc = mat_add(acc, mat_scale(serre_coefficient(a, s, qii, qij), t));
    }
    return acc;
}

} // namespace

RelationReport verify_module_reduced(const ModuleRep& rep, const ReducedDatum& rd) {
    RelationReport out;
    int n = rd.n();
    FieldCtx F = rd.F;
    size_t dim = rep.dim();

    for (int k = 0; k < rd.group.num_gens(); ++k) {
        const Mat& g = rep.gamma_mats[static_cast<size_t>(k)];
        GroupElement gen = GroupElement::generator(rd.group, k);
        for (int i = 0; i < n; ++i) {
            Scalar cx = rd.chi[static_cast<size_t>(i)](gen).inverse();
            Scalar cy = rd.chi[static_cast<size_t>(i)](gen);
            bool okx = mat_equal(mat_mul(g, rep.x_mats[static_cast<size_t>(i)]),
                                 mat_scale(cx, mat_mul(rep.x_mats[static_cast<size_t>(i)], g)));
            bool oky = mat_equal(mat_mul(g, rep.y_mats[static_cast<size_t>(i)]),
                                 mat_scale(cy, mat_mul(rep.y_mats[static_cast<size_t>(i)], g)));
            out.add("group-action g" + std::to_string(k + 1) + " x" + std::to_string(i + 1), okx);
            out.add("group-action g" + std::to_string(k + 1) + " y" + std::to_string(i + 1), oky);
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            long a = 1 - rd.cartan.entry(i, j);
            Scalar qxii = rd.q(i, i).inverse(), qxij = rd.q(j, i).inverse();
            bool okx = mat_is_zero(serre_matrix(rep.x_mats[static_cast<size_t>(i)],
                                                rep.x_mats[static_cast<size_t>(j)], a, qxii, qxij));
            bool oky = mat_is_zero(serre_matrix(rep.y_mats[static_cast<size_t>(i)],
                                                rep.y_mats[static_cast<size_t>(j)], a, rd.q(i, i),
                                                rd.q(i, j)));
            out.add("serre-x (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", okx);
            out.add("serre-y (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", oky);
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat lhs = mat_sub(
                mat_mul(rep.x_mats[static_cast<size_t>(i)], rep.y_mats[static_cast<size_t>(j)]),
                mat_scale(rd.chi[static_cast<size_t>(j)](rd.L[static_cast<size_t>(i)]),
                          mat_mul(rep.y_mats[static_cast<size_t>(j)], rep.x_mats[static_cast<size_t>(i)])));
            if (i == j) {
                Mat KiLi = rep.gamma_action(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]);
                Mat rhs = mat_scale(rd.l[static_cast<size_t>(i)],
                                    mat_sub(mat_identity(F, dim), KiLi));
                lhs = mat_sub(lhs, rhs);
            }
            out.add("linking (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                    mat_is_zero(lhs));
        }

    // E/F reformulation with the p_ij coefficients
    std::vector<Mat> E, Fm;
    for (int i = 0; i < n; ++i) {
        E.push_back(rep.E(i));
        Fm.push_back(rep.Fmat(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            long a = 1 - rd.cartan.entry(i, j);
            bool okE = mat_is_zero(serre_matrix(E[static_cast<size_t>(i)], E[static_cast<size_t>(j)],
                                                a, rd.q(i, i), rd.q(i, j)));
            Scalar qfij = rd.q(i, j).inverse() * rd.q(i, i).pow(rd.cartan.entry(i, j));
            bool okF = mat_is_zero(serre_matrix(Fm[static_cast<size_t>(i)], Fm[static_cast<size_t>(j)],
                                                a, rd.q(i, i), qfij));
            out.add("serre-E (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", okE);
            out.add("serre-F (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", okF);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat lhs = mat_sub(mat_mul(E[static_cast<size_t>(i)], Fm[static_cast<size_t>(j)]),
                              mat_mul(Fm[static_cast<size_t>(j)], E[static_cast<size_t>(i)]));
            if (i == j) {
                Mat Ki = rep.gamma_action(rd.K[static_cast<size_t>(i)]);
                Mat Linv = rep.gamma_action(rd.L[static_cast<size_t>(i)].inverse());
                Mat rhs = mat_scale(rd.q(i, i).inverse() * rd.l[static_cast<size_t>(i)],
                                    mat_sub(Ki, Linv));
                lhs = mat_sub(lhs, rhs);
            }
            out.add("EF (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                    mat_is_zero(lhs));
        }

    // the highest-weight vector is killed by every E and has weight chi
    bool hw = true;
    for (int j = 0; j < n; ++j)
        for (size_t r = 0; r < dim; ++r)
            hw = hw && rep.y_mats[static_cast<size_t>(j)][r][static_cast<size_t>(rep.highest_index)].is_zero();
    for (size_t k = 0; k < rep.chi_values.size(); ++k)
        hw = hw && rep.weights[static_cast<size_t>(rep.highest_index)][k] == rep.chi_values[k];
    out.add("highest-weight vector", hw);
    return out;
}

RelationReport verify_module_full(const ModuleRep& rep, const CartanDatum& d,
                                  const LinkingData& lam) {
    RelationReport out;
    int theta = d.theta();
    FieldCtx F = d.ctx();
    size_t dim = rep.dim();
    for (int k = 0; k < d.group().num_gens(); ++k) {
        const Mat& g = rep.gamma_mats[static_cast<size_t>(k)];
        GroupElement gen = GroupElement::generator(d.group(), k);
        for (int i = 0; i < theta; ++i) {
            Scalar c = d.chi(i)(gen);
            bool ok = mat_equal(mat_mul(g, rep.x_mats[static_cast<size_t>(i)]),
                                mat_scale(c, mat_mul(rep.x_mats[static_cast<size_t>(i)], g)));
            out.add("group-action g" + std::to_string(k + 1) + " x" + std::to_string(i + 1), ok);
        }
    }
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j) {
            if (i == j) continue;
            if (d.cartan().same_component(i, j)) {
                long a = 1 - d.cartan().entry(i, j);
                bool ok = mat_is_zero(serre_matrix(rep.x_mats[static_cast<size_t>(i)],
                                                   rep.x_mats[static_cast<size_t>(j)], a, d.q(i, i),
                                                   d.q(i, j)));
                out.add("serre (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", ok);
            } else if (i < j) {
                Mat lhs = mat_sub(
                    mat_mul(rep.x_mats[static_cast<size_t>(i)], rep.x_mats[static_cast<size_t>(j)]),
                    mat_scale(d.q(i, j), mat_mul(rep.x_mats[static_cast<size_t>(j)],
                                                 rep.x_mats[static_cast<size_t>(i)])));
                Scalar l = lam.lambda(d, i, j);
                if (!l.is_zero()) {
                    Mat gg = rep.gamma_action(d.g(i) * d.g(j));
                    lhs = mat_sub(lhs, mat_scale(l, mat_sub(mat_identity(F, dim), gg)));
                }
                out.add("linking (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                        mat_is_zero(lhs));
            }
        }
    return out;
}

size_t highest_weight_space_dim(const ModuleRep& rep) {
    size_t dim = rep.dim();
    Mat stacked;
    for (const auto& y : rep.y_mats)
        for (const auto& row : y) stacked.push_back(row);
    if (stacked.empty()) return dim;
    return dim - mat_rank(stacked);
}

SimplicityResult check_simplicity(const ModuleRep& rep, size_t dim_bound) {
    size_t dim = rep.dim();
    if (dim > dim_bound)
        fail(Err::DimensionTooLarge, "simplicity check limited to dimension " +
                                         std::to_string(dim_bound));
    FieldCtx F = rep.F;
    std::vector<const Mat*> gens;
    for (const auto& g : rep.gamma_mats) gens.push_back(&g);
    for (const auto& x : rep.x_mats) gens.push_back(&x);
    for (const auto& y : rep.y_mats) gens.push_back(&y);

    auto spin = [&](const Vec& seed) {
        SpanBuilder span(dim);
        std::vector<Vec> queue{seed};
        span.add(seed);
        for (size_t h = 0; h < queue.size(); ++h) {
            Vec v = queue[h];
            for (const Mat* g : gens) {
                Vec w = mat_apply(*g, v);
                Vec res = span.reduce(w);
                bool nonzero = false;
                for (const auto& x : res) nonzero |= !x.is_zero();
                if (nonzero) {
                    span.add(w);
                    queue.push_back(std::move(w));
                }
            }
        }
        return queue; // spanning set of the cyclic submodule
    };

    SimplicityResult res;
    for (size_t b = 0; b < dim; ++b) {
        Vec seed(dim, Scalar::zero(F));
        seed[b] = Scalar::one(F);
        auto sub = spin(seed);
        SpanBuilder span(dim);
        for (auto& v : sub) span.add(v);
        if (span.rank() < dim) {
            res.simple = false;
            res.witness = std::move(sub);
            return res;
        }
    }
    if (highest_weight_space_dim(rep) != 1) {
        // a second E-killed weight line violates highest-weight uniqueness
        Mat stacked;
        for (const auto& y : rep.y_mats)
            for (const auto& row : y) stacked.push_back(row);
        auto ker = kernel_basis(stacked, F);
        res.simple = false;
        res.witness = std::move(ker);
        return res;
    }
    res.simple = true;
    return res;
}

ModuleRep pullback_module(const ProjectedDatum& p, const CartanDatum& d, const ModuleRep& rep) {
    ModuleRep out;
    out.F = rep.F;
    out.group = rep.group;
    out.basis_labels = rep.basis_labels;
    out.multidegree = rep.multidegree;
    out.weights = rep.weights;
    out.gamma_mats = rep.gamma_mats;
    out.chi_values = rep.chi_values;
    out.m_exponents = rep.m_exponents;
    out.highest_index = rep.highest_index;
    out.full_datum_form = true;
    size_t dim = rep.dim();
    out.x_mats.assign(static_cast<size_t>(d.theta()), mat_zero(rep.F, dim, dim));
    int n = p.part.n;
    for (int i = 0; i < n; ++i) {
        out.x_mats[static_cast<size_t>(p.part.t[static_cast<size_t>(i)])] =
            rep.x_mats[static_cast<size_t>(i)];
        out.x_mats[static_cast<size_t>(p.part.t[static_cast<size_t>(n + i)])] =
            rep.y_mats[static_cast<size_t>(i)];
    }
    return out;
}

Scalar ladder_coefficient(const ReducedDatum& rd, const Character& chi, int i, long t) {
    Scalar acc = Scalar::one(rd.F);
    Scalar rc = chi(rd.K[static_cast<size_t>(i)] * rd.L[static_cast<size_t>(i)]);
    Scalar qwii = rd.q(i, i).inverse();
    for (long l = 0; l < t; ++l) acc *= Scalar::one(rd.F) - qwii.pow(l) * rc;
    return acc;
}

} // namespace uqmod
