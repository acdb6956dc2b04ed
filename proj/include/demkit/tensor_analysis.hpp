// Extremal subsets, i-hinges, and the product analyses built on them:
// the local hinge criterion for extremality of X tensor Y, the coset
// criterion for Demazure decomposability, diagonal components of tensor
// squares and powers, and the exhaustive sweep harness.

#pragma once

#include <optional>
#include <vector>

#include "demkit/demazure.hpp"

namespace demkit {

struct ExtremalityViolation {
    int color = 0;
    std::vector<int> string_elems;   // whole i-string, top to bottom
    std::vector<int> intersection;   // members met by it
};

struct ExtremalityReport {
    bool extremal = false;
    std::vector<ExtremalityViolation> violations;
};

// every i-string meets X in nothing, everything, or the top element only
ExtremalityReport is_extremal(const Subcrystal& X);

struct ProductSubset {
    CrystalPtr product;   // ambient tensor of the two ambients
    Subcrystal members;   // X tensor Y inside it
    Subcrystal X, Y;      // the factors
};

ProductSubset product_subset(const Subcrystal& X, const Subcrystal& Y);

struct Hinge {
    int left = -1, right = -1;  // factor indices of x tensor y
    int color = 0;
    bool broken = false;
    int witness_left = -1, witness_right = -1;  // x tensor f_i(y) when broken
};

struct HingeReport {
    std::vector<Hinge> hinges;
    int broken_count() const;
    bool broken_free() const { return broken_count() == 0; }
};

// all i-hinges of the member set; asserts that e_i/f_i act on the expected
// factors at each hinge (TheoremFalsified otherwise)
HingeReport find_hinges(const ProductSubset& ps);

// extremality of X tensor Y via the string scan and via hinge counting,
// cross-asserted; factors must be extremal (std::invalid_argument otherwise)
bool hinge_criterion(const ProductSubset& ps);

struct ProductClassification {
    Weight lam, mu;
    WeylElement w, u;             // as given
    bool extremal = false;        // string scan on the product members
    bool hinge_free = false;      // no broken hinges
    bool kouno = false;           // coset criterion
    bool demazure_sum = false;    // decompose succeeded
    HingeReport hinges;
    Decomposition decomposition;

    bool coherent() const {
        return extremal == hinge_free && hinge_free == kouno && kouno == demazure_sum;
    }
};

// cache of tableau crystals and Demazure subsets keyed by weight / (weight, w)
struct CrystalCache {
    std::map<Weight, CrystalPtr> crystals;
    std::map<std::pair<Weight, WeylElement>, Subcrystal> subsets;

    CrystalPtr crystal(const CartanPtr& c, const Weight& lam);
    Subcrystal subset(const CartanPtr& c, const Weight& lam, const WeylElement& w);
};

// the four verdicts for B_w(lam) tensor B_u(mu), computed independently;
// coherence is for the caller to assert
ProductClassification classify_demazure_product(const CartanPtr& c,
                                                const Weight& lam, const WeylElement& w,
                                                const Weight& mu, const WeylElement& u,
                                                CrystalCache* cache = nullptr);

// connected component of b_lam tensor b_mu in a product of two highest-weight
// ambients
Subcrystal diagonal_component(const CrystalPtr& product);

// F({b_lam tensor b_mu}) meets B_u(lam) tensor B_v(mu) in a copy of
// B_u(lam + mu); requires u <= v and supp-zero compatibility of (lam, mu)
bool diagonal_theorem_check(const CartanPtr& c, const Weight& lam, const Weight& mu,
                            const WeylElement& u, const WeylElement& v);

// the m-fold version on B_w(lam)^{tensor m}, expecting B_{floor w}(m lam)
bool tensor_power_diagonal_check(const CartanPtr& c, const Weight& lam,
                                 const WeylElement& w, int m,
                                 long long budget = 1'000'000);

struct FactorClosureReport {
    bool x_e_closed = false;   // must hold when the product is extremal
    bool y_e_closed = false;
    std::optional<bool> x_extremal;  // computed when y_e_closed; must be true
    bool y_extremal = false;         // informational
};

// necessary conditions on the factors of an extremal product
// (std::invalid_argument if the product member set is not extremal)
FactorClosureReport factor_closure_check(const ProductSubset& ps);

// all nonempty extremal subsets, brute force; ambient limited to 20 elements
std::vector<Subcrystal> enumerate_extremal_subsets(const CrystalPtr& g);

struct SweepRow {
    Weight lam, mu;
    WeylElement w, u;
    int n_broken = 0;
    bool extremal = false, kouno = false, demazure_sum = false;
    std::vector<DemazureLabel> labels;
    bool coherent = false;
};

// classify every (lam, mu, w, u) over the weight grid and the full Weyl
// group; deterministic row order regardless of jobs
std::vector<SweepRow> run_sweep(const CartanPtr& c, const std::vector<Weight>& grid,
                                int jobs = 1);

// dominant weights with coordinate sum <= bound, ascending; optionally with 0
std::vector<Weight> dominant_weights_up_to(const CartanPtr& c, int bound,
                                           bool include_zero);

}  // namespace demkit
