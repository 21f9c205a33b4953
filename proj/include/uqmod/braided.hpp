#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "uqmod/abgroup.hpp"
#include "uqmod/linalg.hpp"
#include "uqmod/scalar.hpp"

namespace uqmod {

/// Braided vector space of diagonal type: c(x_i (x) x_j) = q_ij x_j (x) x_i.
class BraidedVectorSpace {
public:
    BraidedVectorSpace() = default;
    BraidedVectorSpace(FieldCtx F, std::vector<std::vector<Scalar>> braiding);
    /// Diagonal braiding from Yetter-Drinfeld data: q_ij = chi_j(deg_i).
    BraidedVectorSpace(FieldCtx F, const std::vector<GroupElement>& degrees,
                       const std::vector<Character>& characters);

    int dim() const { return static_cast<int>(q_.size()); }
    const FieldCtx& ctx() const { return F_; }
    const Scalar& q(int i, int j) const { return q_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

private:
    FieldCtx F_;
    std::vector<std::vector<Scalar>> q_;
};

using Word = std::vector<int>;      // letters 0..n-1
using Content = std::vector<int>;   // letter multiplicities, length n

Content word_content(const Word& w, int n);
int content_total(const Content& c);

/// Element of the free algebra on the basis letters: K-linear combination of
/// words, zero coefficients pruned, terms ordered lexicographically.
class TensorPoly {
public:
    TensorPoly() = default;
    explicit TensorPoly(FieldCtx F) : F_(std::move(F)) {}

    static TensorPoly zero(FieldCtx F);
    static TensorPoly unit(FieldCtx F); // empty word
    static TensorPoly letter(FieldCtx F, int i);
    static TensorPoly word(FieldCtx F, Word w, Scalar c);

    const FieldCtx& ctx() const { return F_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    void add_term(const Word& w, const Scalar& c);

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator*(const TensorPoly& o) const; // concatenation product
    TensorPoly scale(const Scalar& c) const;
    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

    /// max word length appearing
    int degree() const;
    /// true if every term has the same Z^n content; returns it
    bool homogeneous_content(int n, Content& out) const;
    std::string to_string(const std::vector<std::string>& letters = {}) const;

private:
    FieldCtx F_;
    std::map<Word, Scalar> terms_;
};

/// Braiding c applied at tensor positions (pos, pos+1), 1-based pos < length;
/// defined on the span of degree-d words. Err::PositionOutOfRange.
TensorPoly braid_op(const BraidedVectorSpace& v, const TensorPoly& p, int pos);

/// ad_c(x_i)(y) = x_i y - (prod_s q_{i,y_s}) y x_i on homogeneous words,
/// extended linearly.
TensorPoly braided_adjoint(const BraidedVectorSpace& v, int i, const TensorPoly& y);

/// Coefficient of x_i^{a-s} x_j x_i^s in (ad_c x_i)^a (x_j):
/// (-q_ij)^s q_ii^{s(s-1)/2} C(a,s)_{q_ii} with the classical Gaussian
/// binomial; equals the boxed q_J-form of the expansion identically.
Scalar serre_coefficient(long a, long s, const Scalar& qii, const Scalar& qij);

/// The full expansion of (ad_c x_i)^a (x_j) as a TensorPoly.
TensorPoly serre_expand(const BraidedVectorSpace& v, int i, int j, long a);

/// Per-degree normal forms for the Nichols algebra B(V) realized as
/// T(V)_d / ker(S_d) with S_d the quantum symmetrizer. Deterministic pivot
/// choice: canonical basis words are the lexicographically earliest ones.
class NicholsContext {
public:
    explicit NicholsContext(BraidedVectorSpace v, int degree_budget = 10,
                            size_t block_word_budget = 200000);

    const BraidedVectorSpace& space() const { return v_; }
    FieldCtx ctx() const { return v_.ctx(); }
    int degree_budget() const { return degree_budget_; }

    struct Block {
        std::vector<Word> words; // lex ascending
        std::map<Word, int> index;
        Mat symmetrizer;                 // on the word basis
        std::vector<int> basis_words;    // indices into words, lex earliest
        std::vector<Vec> rewrite;        // per word: coordinates over basis_words
    };

    const Block& block(const Content& c) const;

    /// dim B(V) in the given Z^n-degree / total degree
    size_t dim_at(const Content& c) const;
    std::vector<size_t> graded_dims(int through_degree) const;
    /// canonical basis words of B(V)(d), all contents of total degree d
    std::vector<Word> basis_words(int degree) const;

    /// canonical representative modulo ker S
    TensorPoly reduce(const TensorPoly& p) const;
    TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) const;
    bool is_canonical_word(const Word& w) const;

private:
    Block compute_block(const Content& c) const;
    BraidedVectorSpace v_;
    int degree_budget_;
    size_t block_word_budget_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Content, std::unique_ptr<Block>> cache_;
};

} // namespace uqmod
