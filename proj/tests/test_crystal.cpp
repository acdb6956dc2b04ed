#include <algorithm>
#include <stdexcept>

#include "demkit/crystal.hpp"
#include "demkit/tableaux.hpp"
#include "doctest.h"

using namespace demkit;

namespace {

CartanPtr a1() { return CartanData::make("A1"); }
CartanPtr a2() { return CartanData::make("A2"); }

// the (m+1)-element string crystal for sl_2, highest weight (m)
CrystalPtr a1_string(int m) {
    std::vector<Weight> wts;
    std::vector<FEdge> edges;
    for (int k = 0; k <= m; ++k) {
        wts.push_back(Weight({m - 2 * k}));
        if (k < m) edges.push_back({1, k, k + 1});
    }
    return CrystalGraph::create(a1(), std::move(wts), edges, Provenance::Import);
}

}  // namespace

TEST_CASE("hand-built sl_2 string: operators, distances, strings") {
    auto g = a1_string(3);
    REQUIRE(g->size() == 4);
    CHECK(g->f(1, 0) == 1);
    CHECK(g->f(1, 3) == -1);
    CHECK(g->e(1, 0) == -1);
    CHECK(g->e(1, 2) == 1);
    CHECK(g->eps(1, 0) == 0);
    CHECK(g->phi(1, 0) == 3);
    CHECK(g->eps(1, 2) == 2);
    CHECK(g->phi(1, 2) == 1);
    CHECK(g->weight(1) == Weight({1}));

    auto hw = g->highest_weight_elements();
    REQUIRE(hw.size() == 1);
    CHECK(hw[0].first == 0);
    CHECK(hw[0].second == Weight({3}));

    CHECK(g->string_through(1, 2) == std::vector<int>{0, 1, 2, 3});
    auto strs = g->strings(1);
    REQUIRE(strs.size() == 1);
    CHECK(strs[0].size() == 4);

    CHECK_THROWS_AS(g->f(2, 0), std::out_of_range);
    CHECK_THROWS_AS(g->f(0, 0), std::out_of_range);
}

TEST_CASE("validation passes on correctly built graphs") {
    CHECK(validate(a1_string(0)).pass());
    CHECK(validate(a1_string(4)).pass());
    CHECK(validate(build_typeA(a2(), Weight({1, 1}))).pass());
}

TEST_CASE("validation pinpoints axiom violations") {
    SUBCASE("wrong weight on an edge target") {
        auto g = CrystalGraph::create(a1(), {Weight({1}), Weight({1})}, {{1, 0, 1}},
                                      Provenance::Import);
        auto rep = validate(g);
        REQUIRE_FALSE(rep.pass());
        bool has_c2 = false;
        for (const auto& v : rep.violations) has_c2 |= (v.axiom == "C2");
        CHECK(has_c2);
    }
    SUBCASE("weight inconsistent with string position") {
        // correct weight steps but phi - eps != <coroot, wt> at the top
        auto g = CrystalGraph::create(a1(), {Weight({0}), Weight({-2})}, {{1, 0, 1}},
                                      Provenance::Import);
        auto rep = validate(g);
        REQUIRE_FALSE(rep.pass());
        bool has_c1 = false;
        for (const auto& v : rep.violations) has_c1 |= (v.axiom == "C1");
        CHECK(has_c1);
    }
    SUBCASE("two f-edges out of one element") {
        auto g = CrystalGraph::create(
            a1(), {Weight({2}), Weight({0}), Weight({0}), Weight({-2})},
            {{1, 0, 1}, {1, 0, 2}, {1, 1, 3}}, Provenance::Import);
        CHECK(g->shadowed_edges().size() == 1);
        auto rep = validate(g);
        REQUIRE_FALSE(rep.pass());
        bool has_c3 = false;
        for (const auto& v : rep.violations) has_c3 |= (v.axiom == "C3");
        CHECK(has_c3);
    }
    SUBCASE("two f-edges into one element") {
        auto g = CrystalGraph::create(a1(), {Weight({2}), Weight({2}), Weight({0})},
                                      {{1, 0, 2}, {1, 1, 2}}, Provenance::Import);
        auto rep = validate(g);
        REQUIRE_FALSE(rep.pass());
        bool has_c3 = false;
        for (const auto& v : rep.violations) has_c3 |= (v.axiom == "C3");
        CHECK(has_c3);
    }
    SUBCASE("f-cycle breaks string termination") {
        auto g = CrystalGraph::create(a1(), {Weight({0}), Weight({-2})},
                                      {{1, 0, 1}, {1, 1, 0}}, Provenance::Import);
        auto rep = validate(g);
        REQUIRE_FALSE(rep.pass());
        bool has_c4 = false;
        for (const auto& v : rep.violations) has_c4 |= (v.axiom == "C4");
        CHECK(has_c4);
        CHECK_THROWS(g->eps(1, 0));
    }
    SUBCASE("isolated element with non-dominant weight") {
        auto g = CrystalGraph::create(a1(), {Weight({-1})}, {}, Provenance::Import);
        CHECK_FALSE(validate(g).pass());
    }
    SUBCASE("truncated string") {
        // a 2-element "string" claiming highest weight (2)
        auto g = CrystalGraph::create(a1(), {Weight({2}), Weight({0})}, {{1, 0, 1}},
                                      Provenance::Import);
        CHECK_FALSE(validate(g).pass());
    }
}

TEST_CASE("edge construction rejects bad input") {
    CHECK_THROWS_AS(CrystalGraph::create(a1(), {Weight({0})}, {{1, 0, 5}}, Provenance::Import),
                    std::invalid_argument);
    CHECK_THROWS_AS(CrystalGraph::create(a1(), {Weight({0})}, {{3, 0, 0}}, Provenance::Import),
                    std::invalid_argument);
    CHECK_THROWS_AS(CrystalGraph::create(a1(), {Weight({0, 0})}, {}, Provenance::Import),
                    std::invalid_argument);
}

TEST_CASE("tensor square of the sl_2 letter crystal") {
    auto b = a1_string(1);
    auto t = tensor(b, b);
    REQUIRE(t->size() == 4);
    CHECK(t->provenance() == Provenance::Tensor);

    // index (x, y) -> 2x + y
    CHECK(t->tensor_encode(1, 0) == 2);
    CHECK(t->tensor_decode(3) == std::pair<int, int>{1, 1});

    // f acts on the left factor first, then moves right
    CHECK(t->f(1, 0) == 2);   // (0,0) -> (1,0)
    CHECK(t->f(1, 2) == 3);   // (1,0) -> (1,1)
    CHECK(t->f(1, 1) == -1);  // (0,1) is the singleton component
    CHECK(t->e(1, 1) == -1);

    auto comps = component_split(t);
    std::vector<size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 3});

    CHECK(check_tensor_eps_phi(t));
    CHECK(validate(t).pass());
}

TEST_CASE("tensor eps/phi closed formulas hold on mixed products") {
    auto g = tensor(a1_string(2), a1_string(1));
    for (int b = 0; b < g->size(); ++b) {
        auto [x, y] = g->tensor_decode(b);
        auto li = g->tensor_info()->left;
        auto ri = g->tensor_info()->right;
        int wt_x = li->weight(x).c[0];
        CHECK(g->eps(1, b) == std::max(li->eps(1, x), ri->eps(1, y) - wt_x));
        CHECK(g->phi(1, b) == std::max(ri->phi(1, y), li->phi(1, x) + ri->weight(y).c[0]));
    }
    CHECK(validate(g).pass());
}

TEST_CASE("direct sums concatenate with shifted indices") {
    auto s = direct_sum({a1_string(2), a1_string(0)});
    REQUIRE(s->size() == 4);
    CHECK(s->weight(3) == Weight({0}));
    CHECK(s->f(1, 3) == -1);
    CHECK(s->f(1, 0) == 1);
    CHECK(validate(s).pass());
    CHECK(component_split(s).size() == 2);
}

TEST_CASE("edge removal produces a flagged modified graph") {
    auto g = a1_string(2);
    auto cut = remove_edge(g, 1, 1);
    CHECK(cut->provenance() == Provenance::Modified);
    CHECK(cut->f(1, 1) == -1);
    CHECK(cut->f(1, 0) == 1);
    CHECK(cut->size() == g->size());
    CHECK_THROWS_AS(remove_edge(g, 2, 1), std::invalid_argument);

    // removal makes phi/eps disagree with the weight, but validate must not
    // report C1 on modified graphs (the cut is intentional)
    auto rep = validate(cut);
    CHECK(rep.pass());
}

TEST_CASE("subgraph extraction reindexes in ascending order") {
    auto g = tensor(a1_string(1), a1_string(1));
    Subcrystal diag{g, {0, 2, 3}};
    auto piece = extract_subgraph(diag);
    REQUIRE(piece->size() == 3);
    CHECK(piece->weight(0) == Weight({2}));
    CHECK(piece->weight(1) == Weight({0}));
    CHECK(piece->weight(2) == Weight({-2}));
    CHECK(piece->f(1, 0) == 1);
    CHECK(piece->f(1, 1) == 2);
    CHECK(validate(piece).pass());

    // edges leaving the member set are dropped
    Subcrystal half{g, {0, 2}};
    auto top = extract_subgraph(half);
    CHECK(top->f(1, 1) == -1);
}

TEST_CASE("component extraction") {
    auto g = tensor(a1_string(1), a1_string(1));
    CHECK(component_of(g, 3).members == std::set<int>{0, 2, 3});
    CHECK(component_of(g, 1).members == std::set<int>{1});
}

TEST_CASE("string closures saturate downward and upward") {
    auto g = build_typeA(a2(), Weight({1, 1}));
    auto hw = g->highest_weight_elements();
    REQUIRE(hw.size() == 1);
    int top = hw[0].first;

    Subcrystal seed{g, {top}};
    auto f1 = closure_fi(seed, 1);
    CHECK(f1.members.size() == 2);
    auto f21 = closure_fi(f1, 2);
    auto f121 = closure_fi(f21, 1);
    CHECK(closure_f(seed, ReducedWord{1, 2, 1}) == f121);

    // right-to-left processing: word (2,1) saturates color 1 first
    auto w21 = closure_f(seed, ReducedWord{2, 1});
    CHECK(w21 == closure_fi(closure_fi(seed, 1), 2));

    auto all = closure_f_all(seed);
    CHECK(all.members.size() == static_cast<size_t>(g->size()));
    CHECK(closure_e_all(Subcrystal{g, {g->size() - 1}}).members.size() ==
          static_cast<size_t>(g->size()));
    CHECK(closure_ei(closure_fi(seed, 1), 1) == f1);
}

TEST_CASE("canonical component isomorphism maps weights and edges") {
    auto g = tensor(a1_string(1), a1_string(1));
    auto target = a1_string(2);
    auto iso = canonical_component_iso(component_of(g, 0), target);
    REQUIRE(iso.ok);
    CHECK(iso.map[0] == 0);
    CHECK(iso.map[2] == 1);
    CHECK(iso.map[3] == 2);
    CHECK(iso.map[1] == -1);

    SUBCASE("size mismatch is rejected") {
        auto bad = canonical_component_iso(component_of(g, 0), a1_string(3));
        CHECK_FALSE(bad.ok);
        CHECK_FALSE(bad.failure.reason.empty());
    }
    SUBCASE("weight mismatch is rejected") {
        auto bad = canonical_component_iso(component_of(g, 1), a1_string(2));
        CHECK_FALSE(bad.ok);
    }
    SUBCASE("component argument must be closed under the operators") {
        auto part = canonical_component_iso(Subcrystal{g, {0, 2}}, a1_string(2));
        CHECK_FALSE(part.ok);
    }
}

TEST_CASE("provenance names round-trip") {
    for (auto p : {Provenance::Tableaux, Provenance::Tensor, Provenance::Import,
                   Provenance::Component, Provenance::Modified}) {
        CHECK(provenance_parse(provenance_str(p)) == p);
    }
    CHECK_THROWS_AS(provenance_parse("nonsense"), std::invalid_argument);
}

TEST_CASE("subcrystal set operations") {
    auto g = a1_string(2);
    Subcrystal a{g, {0, 1}};
    Subcrystal b{g, {0, 1, 2}};
    CHECK(a.subset_of(b));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.contains(1));
    CHECK_FALSE(a.contains(2));
    CHECK(a.sorted_members() == std::vector<int>{0, 1});
    CHECK(a.size() == 2);
}
