#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uqmod/error.hpp"

namespace uqmod {

using Rat = mpq_class;

/// Declares the coefficient field K = Q(zeta_N)(t_1,...,t_m).
struct FieldSpec {
    unsigned cyclotomic_order = 1;
    std::vector<std::string> indeterminates;
};

class FieldContext;
using FieldCtx = std::shared_ptr<const FieldContext>;

/// Immutable per-field data: the N-th cyclotomic polynomial, power-reduction
/// table for zeta, and the indeterminate names. Shared by every Scalar of the
/// field via shared_ptr; all arithmetic is exact.
class FieldContext {
public:
    static FieldCtx make(FieldSpec spec);

    unsigned order() const { return spec_.cyclotomic_order; }
    unsigned phi() const { return phi_; }
    const std::vector<Rat>& cyclotomic() const { return cyclo_; }
    // x^k mod Phi_N for k in [phi, 2*phi-2]
    const std::vector<std::vector<Rat>>& reduction_table() const { return red_; }

    int num_vars() const { return static_cast<int>(spec_.indeterminates.size()); }
    const std::string& var_name(int i) const { return spec_.indeterminates[i]; }
    int var_index(const std::string& name) const;
    const FieldSpec& spec() const { return spec_; }

    bool same_as(const FieldContext& other) const;

private:
    explicit FieldContext(FieldSpec spec);
    FieldSpec spec_;
    unsigned phi_ = 1;
    std::vector<Rat> cyclo_; // monic, degree phi_
    std::vector<std::vector<Rat>> red_;
};

/// Element of Q(zeta_N) as coordinates over 1, zeta, ..., zeta^(phi-1).
struct Cyclo {
    std::vector<Rat> c;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const; // lies in Q
    bool operator==(const Cyclo& o) const { return c == o.c; }
    bool operator<(const Cyclo& o) const;
};

Cyclo cy_zero(const FieldContext& F);
Cyclo cy_one(const FieldContext& F);
Cyclo cy_rat(const FieldContext& F, const Rat& r);
Cyclo cy_zeta_pow(const FieldContext& F, long k);
Cyclo cy_add(const Cyclo& a, const Cyclo& b);
Cyclo cy_sub(const Cyclo& a, const Cyclo& b);
Cyclo cy_neg(const Cyclo& a);
Cyclo cy_mul(const FieldContext& F, const Cyclo& a, const Cyclo& b);
Cyclo cy_inv(const FieldContext& F, const Cyclo& a);

/// Monomial exponent vector; compared by graded lex (total degree first).
struct Mono {
    std::vector<int> e;

    int total() const;
    bool is_one() const;
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator<(const Mono& o) const; // graded lex, ascending
    bool divides(const Mono& o) const;
    Mono operator*(const Mono& o) const;
    Mono operator/(const Mono& o) const; // assumes divisibility
};

/// Sparse multivariate polynomial over Q(zeta_N); terms kept sorted in
/// descending graded-lex order with nonzero coefficients.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(FieldCtx F) : F_(std::move(F)) {}

    static MPoly zero(FieldCtx F);
    static MPoly constant(FieldCtx F, Cyclo c);
    static MPoly rational(FieldCtx F, const Rat& r);
    static MPoly variable(FieldCtx F, int var, int exp = 1);
    static MPoly monomial(FieldCtx F, Mono m, Cyclo c);

    const FieldCtx& ctx() const { return F_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Cyclo& lead_coeff() const;
    const Mono& lead_mono() const;
    Cyclo constant_value() const; // coefficient of the 1-monomial
    int total_degree() const;
    int degree_in(int var) const;
    bool uses_var(int var) const;
    size_t num_terms() const { return terms_.size(); }
    const std::vector<std::pair<Mono, Cyclo>>& terms() const { return terms_; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const MPoly& o) const;

    MPoly mul_coeff(const Cyclo& c) const;
    MPoly mul_mono(const Mono& m) const;

    // Term insertion used by builders; keeps canonical order.
    void add_term(const Mono& m, const Cyclo& c);

private:
    FieldCtx F_;
    std::vector<std::pair<Mono, Cyclo>> terms_; // descending graded lex
};

// Exact division (caller guarantees divisibility; Err::Internal otherwise).
MPoly mp_exact_div(const MPoly& f, const MPoly& g);
// Reduced gcd, normalized to leading coefficient 1; gcd(0,0) = 0.
MPoly mp_gcd(const MPoly& f, const MPoly& g);

/// Element of K = Q(zeta_N)(t_1,...,t_m): reduced fraction num/den with
/// monic denominator. Equality is structural on the canonical form.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(FieldCtx F);
    static Scalar one(FieldCtx F);
    static Scalar integer(FieldCtx F, long v);
    static Scalar rational(FieldCtx F, const Rat& r);
    static Scalar cyclo(FieldCtx F, Cyclo c);
    static Scalar zeta(FieldCtx F, long k = 1);
    static Scalar variable(FieldCtx F, int var, int exp = 1);
    static Scalar fraction(MPoly num, MPoly den); // normalizes

    const FieldCtx& ctx() const { return F_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const; // element of Q(zeta_N)
    Cyclo constant_value() const;
    bool is_rational() const;
    Rat rational_value() const;
    // c * t^e with integer exponent vector e (possibly negative entries)
    bool is_monomial() const;
    std::pair<Cyclo, std::vector<int>> monomial_parts() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // Err::DivisionByZero
    Scalar inverse() const;
    Scalar pow(long k) const; // negative k requires nonzero base

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const; // structural order for map keys

    std::string to_string() const;
    /// Parses the literal grammar: rationals, z (= zeta_N), declared
    /// indeterminates, + - * / ^ with integer exponents, parentheses.
    static Scalar parse(FieldCtx F, const std::string& text);

private:
    void normalize();
    FieldCtx F_;
    MPoly num_, den_;
};

std::string mpoly_to_string(const MPoly& p);

/// Multiplicative order if a is a root of unity in K, none otherwise.
/// The only roots of unity in K are the torsion constants of Q(zeta_N).
std::optional<unsigned> is_root_of_unity(const Scalar& a); // Err::ZeroInput

/// Balanced q-integers, factorials and binomials at a fixed base v:
/// [n] = (v^n - v^-n)/(v - v^-1), [n]! = [1]...[n].
class QBinomialTable {
public:
    explicit QBinomialTable(Scalar v);

    const Scalar& base() const { return v_; }
    Scalar q_int(long n) const;       // Err::SpecializationPole if v = v^-1
    Scalar q_factorial(long n) const; // Err::SpecializationPole if some [k] = 0
    Scalar q_binomial(long n, long i) const;

private:
    Scalar v_;
    mutable std::vector<Scalar> ints_, facts_;
};

Scalar q_binomial(long n, long i, const Scalar& v);

/// Classical Gaussian binomial C(n,i)_q via the division-free Pascal rule;
/// polynomial in q, defined for every nonzero q.
Scalar gauss_binomial(long n, long i, const Scalar& q);

} // namespace uqmod
