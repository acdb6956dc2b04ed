// Finite Cartan data: types A-G at fixed rank, Cartan matrices in the
// convention a_{ij} = <alpha_i^vee, alpha_j> with Bourbaki node numbering,
// and the root system generated from them by reflection saturation.
//
// Weights live in fundamental-weight coordinates throughout: the j-th
// coordinate of lambda is <alpha_j^vee, lambda>.  Simple generator and color
// indices are 1-based everywhere in the public API (s_1..s_n); element ids
// and matrix entries are 0-based.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace demkit {

struct Weight {
    std::vector<int> c;  // fundamental-weight coordinates

    Weight() = default;
    explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}

    int rank() const { return static_cast<int>(c.size()); }
    bool dominant() const;
    bool is_zero() const;
    std::string str() const;  // "(1,1)"

    Weight operator+(const Weight&) const;
    Weight operator-(const Weight&) const;
    Weight operator*(int k) const;
    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const { return c < o.c; }
};

enum class Family { A, B, C, D, E, F, G };

struct TypeLabel {
    Family family = Family::A;
    int rank = 1;

    std::string str() const;                       // "A2"
    static TypeLabel parse(std::string_view);      // case-insensitive, throws
    bool operator==(const TypeLabel&) const = default;
};

class CartanData;
using CartanPtr = std::shared_ptr<const CartanData>;

class CartanData {
  public:
    static CartanPtr make(TypeLabel t);
    static CartanPtr make(std::string_view label);

    const TypeLabel& type() const { return label_; }
    int rank() const { return n_; }

    // a_{ij} = <alpha_i^vee, alpha_j>, i, j in 1..rank
    int a(int i, int j) const;

    // <alpha_i^vee, lambda>; in these coordinates just lambda_i
    int pairing(int i, const Weight& lam) const;

    // alpha_j in fundamental-weight coordinates (column j of the Cartan matrix)
    Weight simple_root(int j) const;

    // s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i
    Weight reflect(int i, const Weight& lam) const;

    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

    // positive roots in simple-root coordinates, fixed construction order;
    // index 0..num_positive_roots()-1
    const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

    // the same roots expressed in fundamental-weight coordinates
    const std::vector<int>& positive_root_weight_coords(int k) const;

    // <beta^vee, lambda> for the k-th positive root beta (exact integer)
    long long posroot_coroot_pairing(int k, const Weight& lam) const;

    // classify a fundamental-weight-coordinate vector: +1 positive root,
    // -1 negative root, 0 not a root
    int root_sign(const std::vector<int>& weight_coords) const;

    Weight rho() const;
    Weight zero_weight() const { return Weight(std::vector<int>(n_, 0)); }
    Weight fundamental_weight(int i) const;

    // minimal positive symmetrizer d_i with d_i a_{ij} = d_j a_{ji}
    const std::vector<int>& symmetrizer() const { return d_; }

  private:
    CartanData(TypeLabel, std::vector<int> cartan_matrix);
    void build_roots();

    TypeLabel label_;
    int n_ = 0;
    std::vector<int> a_;   // row-major n x n
    std::vector<int> d_;   // symmetrizer diagonal
    std::vector<std::vector<int>> pos_roots_;          // simple-root coords
    std::vector<std::vector<int>> pos_roots_wt_;       // weight coords
    std::vector<long long> pos_root_norm_;             // (beta, beta) in d-scale
    std::map<std::vector<int>, int> sign_by_wt_coords_;  // all roots -> sign
};

}  // namespace demkit
