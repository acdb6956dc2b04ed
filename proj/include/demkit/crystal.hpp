// Finite crystal graphs: elements carry weights, f_i edges are stored per
// color, e_i is the inverse partial map.  Normality is a property checked by
// validate(), not assumed by the data structure, so corrupted imports and
// deliberately modified graphs can be represented and diagnosed.

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "demkit/cartan.hpp"
#include "demkit/weyl.hpp"

namespace demkit {

// raised when two independently computed views of a proven statement disagree
struct TheoremFalsified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Provenance { Tableaux, Tensor, Import, Component, Modified };

std::string provenance_str(Provenance);
Provenance provenance_parse(const std::string&);

struct FEdge {
    int color;  // 1-based
    int from;
    int to;
};

class CrystalGraph;
using CrystalPtr = std::shared_ptr<const CrystalGraph>;

class CrystalGraph {
  public:
    struct TensorInfo {
        CrystalPtr left, right;
    };

    CrystalGraph(CartanPtr c, std::vector<Weight> weights,
                 const std::vector<FEdge>& f_edges, Provenance prov);

    static CrystalPtr create(CartanPtr c, std::vector<Weight> weights,
                             const std::vector<FEdge>& f_edges, Provenance prov);

    int size() const { return static_cast<int>(wts_.size()); }
    int rank() const { return cartan_->rank(); }
    const CartanPtr& cartan() const { return cartan_; }
    Provenance provenance() const { return prov_; }

    const Weight& weight(int b) const { return wts_.at(b); }

    // -1 when undefined
    int f(int color, int b) const;
    int e(int color, int b) const;

    // string distances; throw if the i-chain does not terminate (invalid data)
    int eps(int color, int b) const;
    int phi(int color, int b) const;

    std::vector<std::pair<int, Weight>> highest_weight_elements() const;

    // the i-string through b, listed top (e_i undefined) to bottom
    std::vector<int> string_through(int color, int b) const;
    // all i-strings; every element appears in exactly one
    std::vector<std::vector<int>> strings(int color) const;

    // edges in canonical order (color, from)
    std::vector<FEdge> f_edges_sorted() const;
    // duplicate f-edges dropped at construction, kept for validate()
    const std::vector<FEdge>& shadowed_edges() const { return shadowed_; }

    std::shared_ptr<const TensorInfo> tensor_info() const { return tinfo_; }
    int tensor_encode(int x, int y) const;
    std::pair<int, int> tensor_decode(int idx) const;

  private:
    friend CrystalPtr tensor(const CrystalPtr&, const CrystalPtr&);
    friend CrystalPtr remove_edge(const CrystalPtr&, int, int);

    CartanPtr cartan_;
    std::vector<Weight> wts_;
    std::vector<std::vector<int>> f_, e_;  // [color-1][elem] -> target or -1
    Provenance prov_;
    std::vector<FEdge> shadowed_;
    std::shared_ptr<const TensorInfo> tinfo_;
};

struct Subcrystal {
    CrystalPtr ambient;
    std::set<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int b) const { return members.count(b) != 0; }
    bool subset_of(const Subcrystal& o) const;
    bool operator==(const Subcrystal& o) const;
    std::vector<int> sorted_members() const { return {members.begin(), members.end()}; }
};

// Kashiwara tensor product; element (x, y) gets index x * |right| + y.
// Construction applies the f-rule on factor strings, then cross-checks the
// closed eps/phi formulas as an independent oracle (TheoremFalsified on
// mismatch, which would mean the rule and the formulas disagree).
CrystalPtr tensor(const CrystalPtr& left, const CrystalPtr& right);

// verify eps/phi of a product against the closed formulas on the factors
bool check_tensor_eps_phi(const CrystalPtr& product, std::string* diag = nullptr);

CrystalPtr direct_sum(const std::vector<CrystalPtr>& parts);

// copy without the f_color edge at b; provenance becomes Modified
CrystalPtr remove_edge(const CrystalPtr& g, int b, int color);

// induced subgraph on the members, elements re-indexed in ascending order
CrystalPtr extract_subgraph(const Subcrystal& s);

Subcrystal component_of(const CrystalPtr& g, int b);
std::vector<Subcrystal> component_split(const CrystalPtr& g);

// full i-string saturation downward / upward
Subcrystal closure_fi(Subcrystal s, int color);
Subcrystal closure_ei(Subcrystal s, int color);
// word closures process letters right to left
Subcrystal closure_f(Subcrystal s, const ReducedWord& word);
Subcrystal closure_e(Subcrystal s, const ReducedWord& word);
// fixed points under all colors
Subcrystal closure_f_all(Subcrystal s);
Subcrystal closure_e_all(Subcrystal s);

struct IsoFailure {
    int element = -1;  // ambient-side element where matching failed
    int color = 0;
    std::string reason;
};

struct IsoResult {
    bool ok = false;
    std::vector<int> map;  // ambient index -> target index, -1 outside
    IsoFailure failure;
};

// the unique crystal isomorphism component -> target (target must be a
// connected crystal with a unique highest-weight element), or a failure report
IsoResult canonical_component_iso(const Subcrystal& component, const CrystalPtr& target);

struct Violation {
    std::string axiom;  // "C1".."C4", "structure", "component"
    int element = -1;
    int color = 0;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
    std::string summary() const;
};

// Report-only checker.  For Modified provenance, checks (C2)-(C4) and skips
// (C1) plus the component checks; otherwise also verifies that every
// component has a unique highest-weight element with dominant weight, has
// the size the Weyl dimension formula predicts, matches the divided
// difference character, and (type A) is isomorphic to the tableau model.
ValidationReport validate(const CrystalPtr& g);

}  // namespace demkit
