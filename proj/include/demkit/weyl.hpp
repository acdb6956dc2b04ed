// Weyl group elements as integer matrices acting on the weight lattice in
// fundamental-weight coordinates (column j = image of omega_j).  Length and
// descents come from root counting, Bruhat order from the lifting property,
// and coset representatives from greedy descent stripping.

#pragma once

#include <set>
#include <vector>

#include "demkit/cartan.hpp"

namespace demkit {

// letters are 1-based generator indices; [] is the identity
using ReducedWord = std::vector<int>;

class WeylElement {
  public:
    static WeylElement identity(CartanPtr c);
    static WeylElement simple(CartanPtr c, int i);

    WeylElement operator*(const WeylElement&) const;
    Weight apply(const Weight&) const;
    std::vector<int> apply_vec(const std::vector<int>& weight_coords) const;

    int length() const;
    std::set<int> right_descents() const;  // {i : l(w s_i) < l(w)}
    std::set<int> left_descents() const;   // {i : l(s_i w) < l(w)}
    WeylElement inverse() const;
    bool is_identity() const;

    const CartanPtr& cartan() const { return cartan_; }
    const std::vector<int>& matrix() const { return m_; }

    bool operator==(const WeylElement& o) const { return m_ == o.m_; }
    bool operator!=(const WeylElement& o) const { return m_ != o.m_; }
    bool operator<(const WeylElement& o) const { return m_ < o.m_; }

  private:
    WeylElement(CartanPtr c, std::vector<int> m) : cartan_(std::move(c)), m_(std::move(m)) {}

    CartanPtr cartan_;
    std::vector<int> m_;  // row-major rank x rank
};

// deterministic reduced word: repeatedly strip the smallest right descent
ReducedWord reduce_word(const WeylElement& w);

WeylElement word_product(CartanPtr c, const ReducedWord& word);

// all reduced words of w, lexicographically sorted
std::vector<ReducedWord> enumerate_reduced_words(const WeylElement& w);

WeylElement longest_element(CartanPtr c);

// the full group, sorted by (length, matrix); intended as a small-rank oracle
std::vector<WeylElement> enumerate_weyl_group(CartanPtr c);

// Bruhat order u <= w
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// {i : <alpha_i^vee, lambda> = 0}; lambda must be dominant
std::set<int> stabilizer_generators(CartanPtr c, const Weight& lam);

// minimal / maximal representative of the coset w W_lambda
WeylElement min_coset_rep(WeylElement w, const Weight& lam);
WeylElement max_coset_rep(WeylElement w, const Weight& lam);

// does w lie in the standard parabolic subgroup generated by {s_j : j in J}?
bool parabolic_membership(const WeylElement& w, const std::set<int>& J);

// floor(w, lambda) in W_{ceil(u, mu)}, the closure criterion for
// B_w(lambda) tensor B_u(mu) being a direct sum of Demazure crystals
bool kouno_criterion(const Weight& lam, const WeylElement& w,
                     const Weight& mu, const WeylElement& u);

}  // namespace demkit
