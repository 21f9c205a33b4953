#include "uqmod/braided.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace uqmod {

BraidedVectorSpace::BraidedVectorSpace(FieldCtx F, std::vector<std::vector<Scalar>> braiding)
    : F_(std::move(F)), q_(std::move(braiding)) {
    for (const auto& row : q_) {
        if (row.size() != q_.size()) fail(Err::ParseError, "braiding matrix not square");
        for (const auto& x : row)
            if (x.is_zero()) fail(Err::ParseError, "braiding entries must be nonzero");
    }
}

BraidedVectorSpace::BraidedVectorSpace(FieldCtx F, const std::vector<GroupElement>& degrees,
                                       const std::vector<Character>& characters)
    : F_(std::move(F)) {
    size_t n = degrees.size();
    if (characters.size() != n) fail(Err::ParseError, "degree/character count mismatch");
    q_.assign(n, std::vector<Scalar>(n, Scalar::zero(F_)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            q_[i][j] = characters[j](degrees[i]);
            if (q_[i][j].is_zero()) fail(Err::ParseError, "braiding entries must be nonzero");
        }
}

Content word_content(const Word& w, int n) {
    Content c(static_cast<size_t>(n), 0);
    for (int l : w) ++c[static_cast<size_t>(l)];
    return c;
}

int content_total(const Content& c) {
    int t = 0;
    for (int x : c) t += x;
    return t;
}

TensorPoly TensorPoly::zero(FieldCtx F) { return TensorPoly(F); }

TensorPoly TensorPoly::unit(FieldCtx F) {
    TensorPoly p(F);
    p.terms_[{}] = Scalar::one(F);
    return p;
}

TensorPoly TensorPoly::letter(FieldCtx F, int i) {
    TensorPoly p(F);
    p.terms_[{i}] = Scalar::one(F);
    return p;
}

TensorPoly TensorPoly::word(FieldCtx F, Word w, Scalar c) {
    TensorPoly p(F);
    if (!c.is_zero()) p.terms_[std::move(w)] = std::move(c);
    return p;
}

void TensorPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    TensorPoly r(F_ ? F_ : o.F_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

TensorPoly TensorPoly::scale(const Scalar& c) const {
    TensorPoly r(F_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.terms_[w] = x * c;
    return r;
}

int TensorPoly::degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
}

bool TensorPoly::homogeneous_content(int n, Content& out) const {
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Content cc = word_content(w, n);
        if (first) {
            out = cc;
            first = false;
        } else if (cc != out) {
            return false;
        }
    }
    return !first;
}

std::string TensorPoly::to_string(const std::vector<std::string>& letters) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int l : w) {
            os << "*";
            if (static_cast<size_t>(l) < letters.size())
                os << letters[static_cast<size_t>(l)];
            else
                os << "x" << (l + 1);
        }
    }
    return os.str();
}

TensorPoly braid_op(const BraidedVectorSpace& v, const TensorPoly& p, int pos) {
    TensorPoly r(p.ctx() ? p.ctx() : v.ctx());
    for (const auto& [w, c] : p.terms()) {
        if (pos < 1 || static_cast<size_t>(pos) >= w.size())
            fail(Err::PositionOutOfRange,
                 "braid position " + std::to_string(pos) + " on word of length " +
                     std::to_string(w.size()));
        Word s = w;
        std::swap(s[static_cast<size_t>(pos - 1)], s[static_cast<size_t>(pos)]);
        r.add_term(s, c * v.q(w[static_cast<size_t>(pos - 1)], w[static_cast<size_t>(pos)]));
    }
    return r;
}

TensorPoly braided_adjoint(const BraidedVectorSpace& v, int i, const TensorPoly& y) {
    FieldCtx F = v.ctx();
    TensorPoly xi = TensorPoly::letter(F, i);
    TensorPoly r = xi * y;
    for (const auto& [w, c] : y.terms()) {
        Scalar coef = c;
        for (int l : w) coef *= v.q(i, l);
        Word wxi = w;
        wxi.push_back(i);
        r.add_term(wxi, -coef);
    }
    return r;
}

Scalar serre_coefficient(long a, long s, const Scalar& qii, const Scalar& qij) {
    Scalar c = gauss_binomial(a, s, qii);
    c *= qii.pow(s * (s - 1) / 2);
    c *= (-qij).pow(s);
    return c;
}

TensorPoly serre_expand(const BraidedVectorSpace& v, int i, int j, long a) {
    FieldCtx F = v.ctx();
    TensorPoly r(F);
    for (long s = 0; s <= a; ++s) {
        Word w;
        for (long k = 0; k < a - s; ++k) w.push_back(i);
        w.push_back(j);
        for (long k = 0; k < s; ++k) w.push_back(i);
        r.add_term(w, serre_coefficient(a, s, v.q(i, i), v.q(i, j)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// NicholsContext

NicholsContext::NicholsContext(BraidedVectorSpace v, int degree_budget, size_t block_word_budget)
    : v_(std::move(v)), degree_budget_(degree_budget), block_word_budget_(block_word_budget) {}

const NicholsContext::Block& NicholsContext::block(const Content& c) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = cache_.find(c);
    if (it != cache_.end()) return *it->second;
    auto blk = std::make_unique<Block>(compute_block(c));
    auto [pos, inserted] = cache_.emplace(c, std::move(blk));
    return *pos->second;
}

namespace {

// all distinct words with the given content, lex ascending
void enumerate_words(const Content& c, Word& cur, std::vector<Word>& out) {
    bool done = true;
    for (size_t l = 0; l < c.size(); ++l) {
        if (c[l] == 0) continue;
        done = false;
        Content c2 = c;
        --c2[l];
        cur.push_back(static_cast<int>(l));
        enumerate_words(c2, cur, out);
        cur.pop_back();
    }
    if (done) out.push_back(cur);
}

size_t multinomial(const Content& c) {
    size_t total = 0, r = 1, acc = 0;
    for (int x : c) total += static_cast<size_t>(x);
    // product of C(acc + x, x)
    for (int x : c) {
        for (int k = 1; k <= x; ++k) {
            r = r * (acc + static_cast<size_t>(k)) / static_cast<size_t>(k);
            if (r > 100000000) return r; // saturate, enough for budget checks
        }
        acc += static_cast<size_t>(x);
    }
    (void)total;
    return r;
}

} // namespace

NicholsContext::Block NicholsContext::compute_block(const Content& c) const {
    int k = content_total(c);
    if (k > degree_budget_)
        fail(Err::DegreeBudgetExceeded,
             "Nichols degree " + std::to_string(k) + " exceeds budget " +
                 std::to_string(degree_budget_));
    if (multinomial(c) > block_word_budget_)
        fail(Err::DegreeBudgetExceeded, "word count exceeds per-degree budget");

    Block blk;
    Word cur;
    enumerate_words(c, cur, blk.words);
    std::sort(blk.words.begin(), blk.words.end());
    for (size_t i = 0; i < blk.words.size(); ++i) blk.index[blk.words[i]] = static_cast<int>(i);
    size_t W = blk.words.size();
    FieldCtx F = v_.ctx();

    if (k <= 1) {
        blk.symmetrizer = mat_identity(F, W);
    } else {
        blk.symmetrizer = mat_zero(F, W, W);
        for (size_t wi = 0; wi < W; ++wi) {
            // B_k(w): sum over j of c_{k-2}...c_j applied (c_j first), plus id
            std::vector<std::pair<Word, Scalar>> stage;
            stage.emplace_back(blk.words[wi], Scalar::one(F));
            for (int j = k - 2; j >= 0; --j) {
                // tau_j = s_{k-2}...s_j: apply swaps upward from position j
                Word u = blk.words[wi];
                Scalar coef = Scalar::one(F);
                for (int p = j; p <= k - 2; ++p) {
                    coef *= v_.q(u[static_cast<size_t>(p)], u[static_cast<size_t>(p + 1)]);
                    std::swap(u[static_cast<size_t>(p)], u[static_cast<size_t>(p + 1)]);
                }
                stage.emplace_back(std::move(u), std::move(coef));
            }
            // apply S_{k-1} (x) id via the cached sub-blocks
            for (auto& [u, coef] : stage) {
                Word prefix(u.begin(), u.end() - 1);
                int last = u.back();
                const Block& sub = block(word_content(prefix, v_.dim()));
                int pi = sub.index.at(prefix);
                for (size_t ri = 0; ri < sub.words.size(); ++ri) {
                    const Scalar& sc = sub.symmetrizer[ri][static_cast<size_t>(pi)];
                    if (sc.is_zero()) continue;
                    Word full = sub.words[ri];
                    full.push_back(last);
                    blk.symmetrizer[static_cast<size_t>(blk.index.at(full))][wi] += sc * coef;
                }
            }
        }
    }

    // Kernel of S and rewriting onto the lex-earliest complement basis:
    // eliminate kernel vectors with pivots at lex-latest words.
    std::vector<Vec> ker = kernel_basis(blk.symmetrizer, F);
    std::vector<size_t> kpiv;
    for (size_t r = 0; r < ker.size(); ++r) {
        // choose pivot = highest nonzero index not already used
        size_t piv = W;
        for (size_t j = W; j-- > 0;) {
            if (ker[r][j].is_zero()) continue;
            bool used = false;
            for (size_t t = 0; t < r; ++t)
                if (kpiv[t] == j) used = true;
            if (!used) {
                piv = j;
                break;
            }
        }
        if (piv == W) fail(Err::Internal, "kernel basis not independent");
        Scalar d = ker[r][piv].inverse();
        for (auto& x : ker[r]) x *= d;
        for (size_t t = 0; t < ker.size(); ++t) {
            if (t == r || ker[t][piv].is_zero()) continue;
            Scalar f = ker[t][piv];
            for (size_t j = 0; j < W; ++j) ker[t][j] -= f * ker[r][j];
        }
        kpiv.push_back(piv);
    }
    std::vector<bool> is_pivot(W, false);
    for (size_t p : kpiv) is_pivot[p] = true;
    std::vector<int> basis_pos(W, -1);
    for (size_t j = 0; j < W; ++j)
        if (!is_pivot[j]) {
            basis_pos[j] = static_cast<int>(blk.basis_words.size());
            blk.basis_words.push_back(static_cast<int>(j));
        }
    size_t B = blk.basis_words.size();
    blk.rewrite.assign(W, Vec(B, Scalar::zero(F)));
    for (size_t j = 0; j < W; ++j) {
        if (!is_pivot[j]) {
            blk.rewrite[j][static_cast<size_t>(basis_pos[j])] = Scalar::one(F);
            continue;
        }
        // find the kernel row with this pivot: word_j = -sum of non-pivot entries
        for (size_t r = 0; r < ker.size(); ++r) {
            if (kpiv[r] != j) continue;
            for (size_t t = 0; t < W; ++t) {
                if (t == j || ker[r][t].is_zero()) continue;
                assert(!is_pivot[t]);
                blk.rewrite[j][static_cast<size_t>(basis_pos[t])] = -ker[r][t];
            }
        }
    }
    return blk;
}

size_t NicholsContext::dim_at(const Content& c) const { return block(c).basis_words.size(); }

namespace {
void enumerate_contents(int n, int total, Content& cur, size_t pos, std::vector<Content>& out) {
    if (pos + 1 == static_cast<size_t>(n)) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur[pos] = x;
        enumerate_contents(n, total - x, cur, pos + 1, out);
    }
}
} // namespace

std::vector<size_t> NicholsContext::graded_dims(int through_degree) const {
    std::vector<size_t> dims;
    for (int d = 0; d <= through_degree; ++d) {
        size_t total = 0;
        std::vector<Content> cs;
        Content cur(static_cast<size_t>(v_.dim()), 0);
        enumerate_contents(v_.dim(), d, cur, 0, cs);
        for (const auto& c : cs) total += dim_at(c);
        dims.push_back(total);
    }
    return dims;
}

std::vector<Word> NicholsContext::basis_words(int degree) const {
    std::vector<Word> out;
    std::vector<Content> cs;
    Content cur(static_cast<size_t>(v_.dim()), 0);
    enumerate_contents(v_.dim(), degree, cur, 0, cs);
    for (const auto& c : cs) {
        const Block& blk = block(c);
        for (int bi : blk.basis_words) out.push_back(blk.words[static_cast<size_t>(bi)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TensorPoly NicholsContext::reduce(const TensorPoly& p) const {
    TensorPoly r(p.ctx() ? p.ctx() : v_.ctx());
    for (const auto& [w, c] : p.terms()) {
        const Block& blk = block(word_content(w, v_.dim()));
        int wi = blk.index.at(w);
        const Vec& coords = blk.rewrite[static_cast<size_t>(wi)];
        for (size_t b = 0; b < coords.size(); ++b) {
            if (coords[b].is_zero()) continue;
            r.add_term(blk.words[static_cast<size_t>(blk.basis_words[b])], c * coords[b]);
        }
    }
    return r;
}

TensorPoly NicholsContext::multiply(const TensorPoly& a, const TensorPoly& b) const {
    return reduce(a * b);
}

bool NicholsContext::is_canonical_word(const Word& w) const {
    const Block& blk = block(word_content(w, v_.dim()));
    int wi = blk.index.at(w);
    for (int bi : blk.basis_words)
        if (bi == wi) return true;
    return false;
}

} // namespace uqmod
