#include "uqmod/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace uqmod {

const char* err_name(Err kind) {
    switch (kind) {
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ZeroInput: return "ZeroInput";
        case Err::SpecializationPole: return "SpecializationPole";
        case Err::GroupMismatch: return "GroupMismatch";
        case Err::NotGeneralizedCartan: return "NotGeneralizedCartan";
        case Err::NotFiniteType: return "NotFiniteType";
        case Err::CartanConditionViolated: return "CartanConditionViolated";
        case Err::QiiIsOne: return "QiiIsOne";
        case Err::NoQJ: return "NoQJ";
        case Err::NonLinkablePair: return "NonLinkablePair";
        case Err::InconsistentSymmetry: return "InconsistentSymmetry";
        case Err::MultipleLinksFromVertex: return "MultipleLinksFromVertex";
        case Err::OddCycle: return "OddCycle";
        case Err::ReducedInvariantViolated: return "ReducedInvariantViolated";
        case Err::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
        case Err::PositionOutOfRange: return "PositionOutOfRange";
        case Err::NotQLS: return "NotQLS";
        case Err::NotDominant: return "NotDominant";
        case Err::UnboundedSearch: return "UnboundedSearch";
        case Err::NoCharacterExists: return "NoCharacterExists";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::InconsistentEAction: return "InconsistentEAction";
        case Err::DimensionTooLarge: return "DimensionTooLarge";
        case Err::OrderHypothesisViolated: return "OrderHypothesisViolated";
        case Err::CheckFailed: return "CheckFailed";
        case Err::ParseError: return "ParseError";
        case Err::Io: return "Io";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Univariate rational polynomials (only used to set up the cyclotomic field).

namespace {

using UPoly = std::vector<Rat>; // coefficient of x^i at index i

int up_deg(const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void up_trim(UPoly& p) { p.resize(static_cast<size_t>(up_deg(p) + 1)); }

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    up_trim(r);
    return r;
}

// Division with remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> up_divmod(UPoly a, const UPoly& b) {
    int db = up_deg(b);
    assert(db >= 0);
    UPoly q;
    int da = up_deg(a);
    if (da < db) return {q, a};
    q.assign(static_cast<size_t>(da - db + 1), Rat(0));
    while ((da = up_deg(a)) >= db) {
        Rat c = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(da - db)] = c;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] -= c * b[static_cast<size_t>(i)];
    }
    up_trim(a);
    return {q, a};
}

// Bezout: returns (g, u) with u*a = g mod m, g = gcd(a, m) monic.
std::pair<UPoly, UPoly> up_half_ext_gcd(UPoly a, UPoly m) {
    UPoly r0 = std::move(m), r1 = std::move(a);
    UPoly s0 = {}, s1 = {Rat(1)};
    while (up_deg(r1) >= 0) {
        auto [q, r2] = up_divmod(r0, r1);
        UPoly s2 = s0;
        UPoly qs1 = up_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        up_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    int d = up_deg(r0);
    assert(d >= 0);
    Rat lc = r0[static_cast<size_t>(d)];
    for (auto& c : r0) c /= lc;
    for (auto& c : s0) c /= lc;
    return {r0, s0};
}

UPoly cyclotomic_poly(unsigned n, std::map<unsigned, UPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    UPoly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1; // x^n - 1
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = up_divmod(p, cyclotomic_poly(d, memo));
        assert(up_deg(r) < 0);
        p = std::move(q);
    }
    memo[n] = p;
    return p;
}

} // namespace

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.cyclotomic_order < 1) fail(Err::ParseError, "cyclotomic order must be >= 1");
    for (size_t i = 0; i < spec_.indeterminates.size(); ++i) {
        const auto& nm = spec_.indeterminates[i];
        if (nm.empty()) fail(Err::ParseError, "empty indeterminate name");
        if (nm == "z") fail(Err::ParseError, "indeterminate name 'z' is reserved for zeta");
        for (size_t j = 0; j < i; ++j)
            if (spec_.indeterminates[j] == nm) fail(Err::ParseError, "duplicate indeterminate name: " + nm);
    }
    std::map<unsigned, UPoly> memo;
    cyclo_ = cyclotomic_poly(spec_.cyclotomic_order, memo);
    phi_ = static_cast<unsigned>(up_deg(cyclo_));
    // Reduction of x^k for k = phi .. 2*phi-2 as vectors over 1..zeta^(phi-1).
    std::vector<Rat> cur(phi_, Rat(0)); // x^(phi-1)
    if (phi_ >= 1) cur[phi_ - 1] = 1;
    for (unsigned k = phi_; phi_ >= 2 && k <= 2 * phi_ - 2; ++k) {
        std::vector<Rat> nxt(phi_, Rat(0));
        // multiply cur by x, reduce x^phi = -(lower terms)
        Rat top = cur[phi_ - 1];
        for (unsigned i = phi_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < phi_; ++i) nxt[i] -= top * cyclo_[i];
        red_.push_back(nxt);
        cur = std::move(nxt);
    }
}

FieldCtx FieldContext::make(FieldSpec spec) { return FieldCtx(new FieldContext(std::move(spec))); }

int FieldContext::var_index(const std::string& name) const {
    for (size_t i = 0; i < spec_.indeterminates.size(); ++i)
        if (spec_.indeterminates[i] == name) return static_cast<int>(i);
    return -1;
}

bool FieldContext::same_as(const FieldContext& other) const {
    return this == &other ||
           (spec_.cyclotomic_order == other.spec_.cyclotomic_order &&
            spec_.indeterminates == other.spec_.indeterminates);
}

// ---------------------------------------------------------------------------
// Cyclo

bool Cyclo::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (c.empty() || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool Cyclo::operator<(const Cyclo& o) const {
    for (size_t i = 0; i < c.size(); ++i) {
        int s = cmp(c[i], o.c[i]);
        if (s != 0) return s < 0;
    }
    return false;
}

Cyclo cy_zero(const FieldContext& F) { return Cyclo{std::vector<Rat>(F.phi(), Rat(0))}; }

Cyclo cy_one(const FieldContext& F) { return cy_rat(F, Rat(1)); }

Cyclo cy_rat(const FieldContext& F, const Rat& r) {
    Cyclo x = cy_zero(F);
    x.c[0] = r;
    return x;
}

Cyclo cy_zeta_pow(const FieldContext& F, long k) {
    long n = static_cast<long>(F.order());
    k %= n;
    if (k < 0) k += n;
    Cyclo x = cy_zero(F);
    x.c[0] = 1;
    for (long i = 0; i < k; ++i) { // multiply by zeta repeatedly
        Cyclo z = cy_zero(F);
        Rat top = x.c[F.phi() - 1];
        for (unsigned j = F.phi() - 1; j >= 1; --j) z.c[j] = x.c[j - 1];
        z.c[0] = 0;
        if (top != 0)
            for (unsigned j = 0; j < F.phi(); ++j) z.c[j] -= top * F.cyclotomic()[j];
        x = std::move(z);
    }
    return x;
}

Cyclo cy_add(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Cyclo cy_sub(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Cyclo cy_neg(const Cyclo& a) {
    Cyclo r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Cyclo cy_mul(const FieldContext& F, const Cyclo& a, const Cyclo& b) {
    unsigned phi = F.phi();
    std::vector<Rat> full(2 * phi - 1, Rat(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c[j] == 0) continue;
            full[i + j] += a.c[i] * b.c[j];
        }
    }
    Cyclo r = cy_zero(F);
    for (unsigned i = 0; i < phi; ++i) r.c[i] = full[i];
    for (unsigned k = phi; k <= 2 * phi - 2 && phi >= 2; ++k) {
        if (full[k] == 0) continue;
        const auto& row = F.reduction_table()[k - phi];
        for (unsigned i = 0; i < phi; ++i) r.c[i] += full[k] * row[i];
    }
    return r;
}

Cyclo cy_inv(const FieldContext& F, const Cyclo& a) {
    if (a.is_zero()) fail(Err::DivisionByZero, "inverse of zero in Q(zeta)");
    if (a.is_rational()) {
        Cyclo r = cy_zero(F);
        r.c[0] = Rat(1) / a.c[0];
        return r;
    }
    UPoly ap(a.c.begin(), a.c.end());
    up_trim(ap);
    auto [g, u] = up_half_ext_gcd(ap, F.cyclotomic());
    if (up_deg(g) != 0) fail(Err::Internal, "cyclotomic polynomial not coprime to element");
    Cyclo r = cy_zero(F);
    for (size_t i = 0; i < u.size() && i < r.c.size(); ++i) r.c[i] = u[i];
    return r;
}

// ---------------------------------------------------------------------------
// Mono

int Mono::total() const {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

bool Mono::is_one() const {
    for (int x : e)
        if (x != 0) return false;
    return true;
}

bool Mono::operator<(const Mono& o) const {
    int ta = total(), tb = o.total();
    if (ta != tb) return ta < tb;
    // lex on exponents, higher first-exponent means larger
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != o.e[i]) return e[i] < o.e[i];
    return false;
}

bool Mono::divides(const Mono& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::zero(FieldCtx F) { return MPoly(std::move(F)); }

MPoly MPoly::constant(FieldCtx F, Cyclo c) {
    MPoly p(F);
    if (!c.is_zero()) p.terms_.emplace_back(Mono{std::vector<int>(F->num_vars(), 0)}, std::move(c));
    return p;
}

MPoly MPoly::rational(FieldCtx F, const Rat& r) { return constant(F, cy_rat(*F, r)); }

MPoly MPoly::variable(FieldCtx F, int var, int exp) {
    if (var < 0 || var >= F->num_vars()) fail(Err::Internal, "variable index out of range");
    Mono m{std::vector<int>(F->num_vars(), 0)};
    m.e[var] = exp;
    return monomial(F, m, cy_one(*F));
}

MPoly MPoly::monomial(FieldCtx F, Mono m, Cyclo c) {
    MPoly p(F);
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

const Cyclo& MPoly::lead_coeff() const {
    assert(!terms_.empty());
    return terms_[0].second;
}

const Mono& MPoly::lead_mono() const {
    assert(!terms_.empty());
    return terms_[0].first;
}

Cyclo MPoly::constant_value() const {
    for (const auto& [m, c] : terms_)
        if (m.is_one()) return c;
    return cy_zero(*F_);
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

bool MPoly::uses_var(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.e[var] != 0) return true;
    return false;
}

void MPoly::add_term(const Mono& m, const Cyclo& c) {
    if (c.is_zero()) return;
    // binary search: terms are descending
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const std::pair<Mono, Cyclo>& t, const Mono& key) { return key < t.first; });
    if (it != terms_.end() && it->first == m) {
        it->second = cy_add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, cy_neg(c));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = cy_neg(c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(F_ ? F_ : o.F_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, cy_mul(*r.ctx(), ca, cb));
    return r;
}

bool MPoly::operator<(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].first == o.terms_[i].first)) return terms_[i].first < o.terms_[i].first;
        if (!(terms_[i].second == o.terms_[i].second)) return terms_[i].second < o.terms_[i].second;
    }
    return false;
}

MPoly MPoly::mul_coeff(const Cyclo& c) const {
    if (c.is_zero()) return MPoly(F_);
    MPoly r(F_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, cc] : terms_) {
        Cyclo prod = cy_mul(*F_, cc, c);
        if (!prod.is_zero()) r.terms_.emplace_back(m, std::move(prod));
    }
    return r;
}

MPoly MPoly::mul_mono(const Mono& m) const {
    MPoly r(F_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc);
    return r;
}

MPoly mp_exact_div(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
    MPoly rem = f;
    MPoly q(f.ctx() ? f.ctx() : g.ctx());
    const FieldContext& F = *q.ctx();
    Cyclo glc_inv = cy_inv(F, g.lead_coeff());
    while (!rem.is_zero()) {
        if (!g.lead_mono().divides(rem.lead_mono()))
            fail(Err::Internal, "mp_exact_div: not divisible");
        Mono qm = rem.lead_mono() / g.lead_mono();
        Cyclo qc = cy_mul(F, rem.lead_coeff(), glc_inv);
        q.add_term(qm, qc);
        rem = rem - g.mul_mono(qm).mul_coeff(qc);
    }
    return q;
}

namespace {

MPoly mp_normalize_lead(const MPoly& p) {
    if (p.is_zero()) return p;
    if (p.lead_coeff().is_one()) return p;
    return p.mul_coeff(cy_inv(*p.ctx(), p.lead_coeff()));
}

std::vector<MPoly> mp_coeffs_in_var(const MPoly& f, int v) {
    std::vector<MPoly> cs(static_cast<size_t>(f.degree_in(v) + 1), MPoly(f.ctx()));
    for (const auto& [m, c] : f.terms()) {
        Mono rest = m;
        int d = rest.e[v];
        rest.e[v] = 0;
        cs[static_cast<size_t>(d)].add_term(rest, c);
    }
    return cs;
}

MPoly mp_from_coeffs(FieldCtx F, const std::vector<MPoly>& cs, int v) {
    MPoly r(F);
    for (size_t d = 0; d < cs.size(); ++d) {
        Mono vm{std::vector<int>(F->num_vars(), 0)};
        vm.e[v] = static_cast<int>(d);
        r = r + cs[d].mul_mono(vm);
    }
    return r;
}

int mp_deg_in(const std::vector<MPoly>& cs) {
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
        if (!cs[i].is_zero()) return i;
    return -1;
}

// Pseudo-remainder of a by b viewed in variable v (coefficient vectors).
std::vector<MPoly> mp_prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    int da = mp_deg_in(a), db = mp_deg_in(b);
    assert(db >= 0);
    const MPoly& lb = b[static_cast<size_t>(db)];
    while ((da = mp_deg_in(a)) >= db) {
        MPoly la = a[static_cast<size_t>(da)];
        // a = lb*a - la * x^(da-db) * b
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] =
                a[static_cast<size_t>(da - db + i)] - la * b[static_cast<size_t>(i)];
        a[static_cast<size_t>(da)] = MPoly(la.ctx()); // force exact cancellation
        a.resize(static_cast<size_t>(mp_deg_in(a) + 1));
        if (a.empty()) break;
    }
    return a;
}

MPoly mp_gcd_list(const std::vector<MPoly>& ps) {
    MPoly g = ps.empty() ? MPoly() : MPoly(ps[0].ctx());
    for (const auto& p : ps) {
        g = mp_gcd(g, p);
        if (!g.is_zero() && g.is_constant()) return g; // gcd is a unit already
    }
    return g;
}

} // namespace

namespace {

// Monic Euclidean gcd for polynomials in a single variable over Q(zeta);
// pseudo-division would blow up coefficients exponentially here.
MPoly mp_gcd_univariate(const MPoly& f, const MPoly& g, int v) {
    FieldCtx F = f.ctx();
    auto to_vec = [&](const MPoly& p) {
        std::vector<Cyclo> c(static_cast<size_t>(p.degree_in(v) + 1), cy_zero(*F));
        for (const auto& [m, coef] : p.terms()) c[static_cast<size_t>(m.e[static_cast<size_t>(v)])] = coef;
        return c;
    };
    auto deg = [](const std::vector<Cyclo>& c) {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<size_t>(i)].is_zero()) return i;
        return -1;
    };
    std::vector<Cyclo> a = to_vec(f), b = to_vec(g);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (deg(b) >= 0) {
        // make b monic, then reduce a mod b
        int db = deg(b);
        Cyclo inv = cy_inv(*F, b[static_cast<size_t>(db)]);
        for (auto& c : b) c = cy_mul(*F, c, inv);
        int da;
        while ((da = deg(a)) >= db) {
            Cyclo lead = a[static_cast<size_t>(da)];
            for (int i = 0; i <= db; ++i)
                a[static_cast<size_t>(da - db + i)] =
                    cy_sub(a[static_cast<size_t>(da - db + i)], cy_mul(*F, lead, b[static_cast<size_t>(i)]));
            a[static_cast<size_t>(da)] = cy_zero(*F);
        }
        std::swap(a, b);
    }
    MPoly out(F);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        Mono m{std::vector<int>(F->num_vars(), 0)};
        m.e[static_cast<size_t>(v)] = static_cast<int>(i);
        out.add_term(m, a[i]);
    }
    return mp_normalize_lead(out);
}

} // namespace

MPoly mp_gcd(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) return mp_normalize_lead(g);
    if (g.is_zero()) return mp_normalize_lead(f);
    FieldCtx F = f.ctx();
    if (f.is_constant() || g.is_constant()) return MPoly::constant(F, cy_one(*F));
    int v = -1;
    int vars_used = 0;
    for (int i = F->num_vars() - 1; i >= 0; --i)
        if (f.uses_var(i) || g.uses_var(i)) {
            if (v < 0) v = i;
            ++vars_used;
        }
    assert(v >= 0);
    if (vars_used == 1) return mp_gcd_univariate(f, g, v);
    auto fc = mp_coeffs_in_var(f, v);
    auto gc = mp_coeffs_in_var(g, v);
    MPoly contF = mp_gcd_list(fc);
    MPoly contG = mp_gcd_list(gc);
    MPoly cont = mp_gcd(contF, contG);
    // primitive parts
    for (auto& c : fc) c = mp_exact_div(c, contF);
    for (auto& c : gc) c = mp_exact_div(c, contG);
    // primitive PRS in variable v
    std::vector<MPoly>*a = &fc, *b = &gc;
    if (mp_deg_in(*a) < mp_deg_in(*b)) std::swap(a, b);
    std::vector<MPoly> ra = *a, rb = *b;
    while (true) {
        if (mp_deg_in(rb) < 0) break; // gcd is ra
        if (mp_deg_in(rb) == 0) {
            // primitive of degree 0 is a unit
            ra = {MPoly::constant(F, cy_one(*F))};
            break;
        }
        std::vector<MPoly> r = mp_prem(ra, rb);
        ra = std::move(rb);
        rb = std::move(r);
        if (mp_deg_in(rb) >= 0) {
            MPoly c = mp_gcd_list(rb);
            for (auto& x : rb) x = mp_exact_div(x, c);
        }
    }
    MPoly prim = mp_from_coeffs(F, ra, v);
    return mp_normalize_lead(cont * prim);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(FieldCtx F) {
    Scalar s;
    s.F_ = F;
    s.num_ = MPoly::zero(F);
    s.den_ = MPoly::rational(F, Rat(1));
    return s;
}

Scalar Scalar::one(FieldCtx F) { return integer(F, 1); }

Scalar Scalar::integer(FieldCtx F, long v) { return rational(F, Rat(v)); }

Scalar Scalar::rational(FieldCtx F, const Rat& r) {
    Scalar s = zero(F);
    s.num_ = MPoly::rational(F, r);
    return s;
}

Scalar Scalar::cyclo(FieldCtx F, Cyclo c) {
    Scalar s = zero(F);
    s.num_ = MPoly::constant(F, std::move(c));
    return s;
}

Scalar Scalar::zeta(FieldCtx F, long k) { return cyclo(F, cy_zeta_pow(*F, k)); }

Scalar Scalar::variable(FieldCtx F, int var, int exp) {
    Scalar s = zero(F);
    if (exp >= 0) {
        s.num_ = MPoly::variable(F, var, exp);
    } else {
        s.num_ = MPoly::rational(F, Rat(1));
        s.den_ = MPoly::variable(F, var, -exp);
    }
    return s;
}

Scalar Scalar::fraction(MPoly num, MPoly den) {
    Scalar s;
    s.F_ = num.ctx() ? num.ctx() : den.ctx();
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    if (s.den_.is_zero()) fail(Err::DivisionByZero, "scalar with zero denominator");
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::rational(F_, Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = mp_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = mp_exact_div(num_, g);
            den_ = mp_exact_div(den_, g);
        }
    }
    if (!den_.lead_coeff().is_one()) {
        Cyclo inv = cy_inv(*F_, den_.lead_coeff());
        num_ = num_.mul_coeff(inv);
        den_ = den_.mul_coeff(inv);
    }
}

bool Scalar::is_one() const { return den_.is_constant() && den_.lead_coeff().is_one() && num_ == den_; }

bool Scalar::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Cyclo Scalar::constant_value() const {
    assert(is_constant());
    return num_.constant_value(); // den is monic constant = 1
}

bool Scalar::is_rational() const {
    return is_constant() && num_.constant_value().is_rational();
}

Rat Scalar::rational_value() const {
    assert(is_rational());
    return num_.constant_value().c.empty() ? Rat(0) : num_.constant_value().c[0];
}

bool Scalar::is_monomial() const { return !is_zero() && num_.is_monomial() && den_.is_monomial(); }

std::pair<Cyclo, std::vector<int>> Scalar::monomial_parts() const {
    assert(is_monomial());
    std::vector<int> e = num_.lead_mono().e;
    const auto& d = den_.lead_mono().e;
    for (size_t i = 0; i < e.size(); ++i) e[i] -= d[i];
    Cyclo c = cy_mul(*F_, num_.lead_coeff(), cy_inv(*F_, den_.lead_coeff()));
    return {c, e};
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar s;
    s.F_ = F_;
    if (den_ == o.den_) {
        s.num_ = num_ + o.num_;
        s.den_ = den_;
    } else {
        s.num_ = num_ * o.den_ + o.num_ * den_;
        s.den_ = den_ * o.den_;
    }
    s.normalize();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar s;
    s.F_ = F_;
    s.num_ = num_ * o.num_;
    s.den_ = den_ * o.den_;
    s.normalize();
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) fail(Err::DivisionByZero, "scalar division by zero");
    Scalar s;
    s.F_ = F_;
    s.num_ = num_ * o.den_;
    s.den_ = den_ * o.num_;
    s.normalize();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero scalar");
    Scalar s;
    s.F_ = F_;
    s.num_ = den_;
    s.den_ = num_;
    s.normalize();
    return s;
}

Scalar Scalar::pow(long k) const {
    if (k == 0) {
        if (is_zero()) fail(Err::DivisionByZero, "0^0 undefined");
        return one(F_);
    }
    Scalar base = *this;
    if (k < 0) {
        base = inverse();
        k = -k;
    }
    Scalar acc = one(F_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator<(const Scalar& o) const {
    if (!(num_ == o.num_)) return num_ < o.num_;
    return den_ < o.den_;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// One zeta-component "c*z^k" (k = 0: just "c"); c = 1/-1 abbreviated.
std::string cyclo_term_string(const Rat& c, size_t k, bool lead_in_expr) {
    std::string s;
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (neg)
        s += "-";
    else if (!lead_in_expr)
        s += "+";
    if (a != 1 || k == 0) {
        s += rat_to_string(a);
        if (k > 0) s += "*";
    }
    if (k > 0) {
        s += "z";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

std::string cyclo_to_string(const Cyclo& c) {
    std::string s;
    bool first = true;
    for (size_t k = 0; k < c.c.size(); ++k) {
        if (c.c[k] == 0) continue;
        s += cyclo_term_string(c.c[k], k, first);
        first = false;
    }
    if (first) s = "0";
    return s;
}

size_t cyclo_num_terms(const Cyclo& c) {
    size_t n = 0;
    for (const auto& x : c.c)
        if (x != 0) ++n;
    return n;
}

} // namespace

std::string mpoly_to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    const FieldContext& F = *p.ctx();
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string mono;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += F.var_name(static_cast<int>(v));
            if (m.e[v] != 1) mono += "^" + std::to_string(m.e[v]);
        }
        size_t nt = cyclo_num_terms(c);
        std::string cs;
        if (nt > 1) {
            cs = "(" + cyclo_to_string(c) + ")";
            if (!first) cs = "+" + cs;
        } else {
            // single component: sign handled inside
            size_t k = 0;
            Rat r(0);
            for (size_t i = 0; i < c.c.size(); ++i)
                if (c.c[i] != 0) {
                    k = i;
                    r = c.c[i];
                }
            if (mono.empty()) {
                cs = cyclo_term_string(r, k, first);
            } else if (r == 1 && k == 0) {
                cs = first ? "" : "+";
            } else if (r == -1 && k == 0) {
                cs = "-";
            } else {
                cs = cyclo_term_string(r, k, first);
                cs += "*";
            }
        }
        s += cs;
        if (!mono.empty() && nt > 1) s += "*";
        s += mono;
        first = false;
    }
    return s;
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    if (den_.is_constant()) return mpoly_to_string(num_);
    return "(" + mpoly_to_string(num_) + ")/(" + mpoly_to_string(den_) + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    FieldCtx F;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(Err::ParseError, "scalar literal: " + msg + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            skip_ws();
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }

    Scalar parse_factor() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        Scalar v = parse_primary();
        skip_ws();
        if (eat('^')) {
            long k = parse_int();
            v = v.pow(k);
        }
        return neg ? -v : v;
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) error("expected integer");
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    Scalar parse_primary() {
        skip_ws();
        if (pos >= s.size()) error("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Scalar::rational(F, Rat(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "z") return Scalar::zeta(F);
            int idx = F->var_index(name);
            if (idx < 0) error("unknown symbol '" + name + "'");
            return Scalar::variable(F, idx);
        }
        error(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Scalar Scalar::parse(FieldCtx F, const std::string& text) {
    Parser p{F, text};
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.error("trailing input");
    return v;
}

// ---------------------------------------------------------------------------
// Roots of unity

std::optional<unsigned> is_root_of_unity(const Scalar& a) {
    if (a.is_zero()) fail(Err::ZeroInput, "is_root_of_unity(0)");
    if (!a.is_constant()) return std::nullopt;
    const FieldContext& F = *a.ctx();
    Cyclo c = a.constant_value();
    // torsion of Q(zeta_N)^x has exponent lcm(2, N) <= 2N
    unsigned bound = 2 * F.order();
    Cyclo p = c;
    for (unsigned k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p = cy_mul(F, p, c);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// q-combinatorics

QBinomialTable::QBinomialTable(Scalar v) : v_(std::move(v)) {}

Scalar QBinomialTable::q_int(long n) const {
    assert(n >= 0);
    if (static_cast<size_t>(n) < ints_.size()) return ints_[static_cast<size_t>(n)];
    FieldCtx F = v_.ctx();
    while (static_cast<long>(ints_.size()) <= n) {
        long k = static_cast<long>(ints_.size());
        if (k == 0) {
            ints_.push_back(Scalar::zero(F));
            continue;
        }
        Scalar diff = v_ - v_.inverse();
        if (diff.is_zero()) fail(Err::SpecializationPole, "[n] undefined: v = v^-1");
        ints_.push_back((v_.pow(k) - v_.pow(-k)) / diff);
    }
    return ints_[static_cast<size_t>(n)];
}

Scalar QBinomialTable::q_factorial(long n) const {
    assert(n >= 0);
    if (static_cast<size_t>(n) < facts_.size()) return facts_[static_cast<size_t>(n)];
    FieldCtx F = v_.ctx();
    while (static_cast<long>(facts_.size()) <= n) {
        long k = static_cast<long>(facts_.size());
        if (k == 0)
            facts_.push_back(Scalar::one(F));
        else {
            Scalar f = facts_.back() * q_int(k);
            if (f.is_zero())
                fail(Err::SpecializationPole, "q-factorial [" + std::to_string(k) + "]! vanishes at this base");
            facts_.push_back(f);
        }
    }
    return facts_[static_cast<size_t>(n)];
}

Scalar QBinomialTable::q_binomial(long n, long i) const {
    if (i < 0 || i > n) fail(Err::Internal, "q_binomial index out of range");
    return q_factorial(n) / (q_factorial(i) * q_factorial(n - i));
}

Scalar q_binomial(long n, long i, const Scalar& v) { return QBinomialTable(v).q_binomial(n, i); }

Scalar gauss_binomial(long n, long i, const Scalar& q) {
    if (i < 0 || i > n) fail(Err::Internal, "gauss_binomial index out of range");
    FieldCtx F = q.ctx();
    // row-by-row Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k)
    std::vector<Scalar> row{Scalar::one(F)};
    for (long r = 1; r <= n; ++r) {
        std::vector<Scalar> nxt(static_cast<size_t>(r) + 1, Scalar::zero(F));
        nxt[0] = Scalar::one(F);
        nxt[static_cast<size_t>(r)] = Scalar::one(F);
        for (long k = 1; k < r; ++k)
            nxt[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k - 1)] + q.pow(k) * row[static_cast<size_t>(k)];
        row = std::move(nxt);
    }
    return row[static_cast<size_t>(i)];
}

} // namespace uqmod
