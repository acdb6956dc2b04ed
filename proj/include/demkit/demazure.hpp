// Demazure subcrystals B_w(lambda) = F_w {b_lambda}, their recognition inside
// ambient crystals, and the divided difference (Demazure operator) character
// oracle on Laurent polynomials over the weight lattice.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "demkit/crystal.hpp"

namespace demkit {

// (nu, w) with w canonicalized to the minimal coset representative mod W_nu
struct DemazureLabel {
    Weight weight;
    WeylElement weyl;

    static DemazureLabel make(Weight nu, WeylElement w);
    std::string str() const;  // "B_{s1*s2}(1,1)"
    bool operator==(const DemazureLabel& o) const {
        return weight == o.weight && weyl == o.weyl;
    }
    bool operator<(const DemazureLabel& o) const;
};

class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    static LaurentPolynomial x_pow(const Weight& lam);

    void add_term(const Weight& lam, long long coeff);  // drops zeros
    LaurentPolynomial operator+(const LaurentPolynomial&) const;
    LaurentPolynomial operator-(const LaurentPolynomial&) const;
    bool operator==(const LaurentPolynomial&) const = default;

    const std::map<Weight, long long>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long long total() const;           // sum of coefficients
    std::string str() const;           // monomials in descending lex order

  private:
    std::map<Weight, long long> t_;
};

// F_w {b_lambda} inside a connected ambient with a unique highest weight
Subcrystal demazure_subset(const CrystalPtr& g, const WeylElement& w);

// closure_f agrees across every reduced word of w
bool reduced_word_independence_check(const CrystalPtr& g, const WeylElement& w);

// shortest word (BFS by length, lex within a level) whose string closure from
// the highest weight contains b; asserts the result is reduced
ReducedWord minimal_expansion_word(const CrystalPtr& g, int b);

// is S exactly B_w(nu) for some w?  S must live in a single component whose
// highest-weight element exists and is unique; returns the canonical label
std::optional<DemazureLabel> recognize_demazure(const Subcrystal& S);

struct Decomposition {
    bool ok = false;
    std::vector<DemazureLabel> labels;  // sorted
    std::string failure;
};

// split S along ambient components, map each intersection into the freshly
// built reference crystal (type A) or recognize in place (other types)
Decomposition decompose_demazure(const Subcrystal& S);

// sum of x^{wt(b)}
LaurentPolynomial character(const Subcrystal& S);
LaurentPolynomial character(const CrystalPtr& g);

// Demazure operator pi_i applied monomial-wise
LaurentPolynomial demazure_operator(const CartanPtr& c, int color,
                                    const LaurentPolynomial& p);

// pi_{i_1} ... pi_{i_l} (x^lam), rightmost letter applied first
LaurentPolynomial demazure_char_poly(const CartanPtr& c, const Weight& lam,
                                     const ReducedWord& word);

// character(B_w(lam)) equals the operator character; all_words checks every
// reduced word of w, otherwise just the canonical one
bool demazure_character_check(const CrystalPtr& g, const WeylElement& w,
                              bool all_words = false);

// recognition by induced colored-graph isomorphism, rooted at the unique
// element with no e-edges inside the piece; this is the notion that survives
// edge removal, where the ambient is no longer a normal crystal
std::optional<DemazureLabel> recognize_demazure_induced(const CrystalPtr& piece);

}  // namespace demkit
