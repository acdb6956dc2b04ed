#include "demkit/tensor_analysis.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "demkit/tableaux.hpp"

namespace demkit {

namespace {

// intersection patterns allowed on every i-string: nothing, everything, top only
bool string_pattern_ok(const std::vector<int>& s, const std::vector<int>& met) {
    if (met.empty() || met.size() == s.size()) return true;
    return met.size() == 1 && met[0] == s.front();
}

}  // namespace

ExtremalityReport is_extremal(const Subcrystal& X) {
    ExtremalityReport rep;
    const auto& g = X.ambient;
    for (int i = 1; i <= g->rank(); ++i)
        for (const auto& s : g->strings(i)) {
            std::vector<int> met;
            for (int b : s)
                if (X.contains(b)) met.push_back(b);
            if (!string_pattern_ok(s, met))
                rep.violations.push_back({i, s, std::move(met)});
        }
    rep.extremal = rep.violations.empty();
    return rep;
}

ProductSubset product_subset(const Subcrystal& X, const Subcrystal& Y) {
    ProductSubset ps;
    ps.product = tensor(X.ambient, Y.ambient);
    ps.X = X;
    ps.Y = Y;
    std::set<int> members;
    for (int x : X.members)
        for (int y : Y.members) members.insert(ps.product->tensor_encode(x, y));
    ps.members = Subcrystal{ps.product, std::move(members)};
    return ps;
}

int HingeReport::broken_count() const {
    int n = 0;
    for (const auto& h : hinges)
        if (h.broken) ++n;
    return n;
}

HingeReport find_hinges(const ProductSubset& ps) {
    HingeReport rep;
    const auto& gl = ps.X.ambient;
    const auto& gr = ps.Y.ambient;
    for (int i = 1; i <= gl->rank(); ++i)
        for (int x : ps.X.members) {
            if (gl->eps(i, x) == 0 || gl->phi(i, x) != 0) continue;
            for (int y : ps.Y.members) {
                if (gr->eps(i, y) != 0 || gr->phi(i, y) == 0) continue;
                Hinge h;
                h.left = x;
                h.right = y;
                h.color = i;
                int fy = gr->f(i, y);
                h.broken = !ps.Y.contains(fy);
                if (h.broken) {
                    h.witness_left = x;
                    h.witness_right = fy;
                }
                int idx = ps.product->tensor_encode(x, y);
                if (ps.product->e(i, idx) != ps.product->tensor_encode(gl->e(i, x), y) ||
                    ps.product->f(i, idx) != ps.product->tensor_encode(x, fy))
                    throw TheoremFalsified(
                        "operators at a hinge do not act on the expected factors");
                rep.hinges.push_back(h);
            }
        }
    return rep;
}

bool hinge_criterion(const ProductSubset& ps) {
    if (!is_extremal(ps.X).extremal || !is_extremal(ps.Y).extremal)
        throw std::invalid_argument("hinge criterion needs extremal factors");
    bool via_strings = is_extremal(ps.members).extremal;
    bool via_hinges = find_hinges(ps).broken_free();
    if (via_strings != via_hinges)
        throw TheoremFalsified("broken-hinge count disagrees with the string scan");
    return via_strings;
}

CrystalPtr CrystalCache::crystal(const CartanPtr& c, const Weight& lam) {
    auto it = crystals.find(lam);
    if (it != crystals.end()) return it->second;
    auto g = build_typeA(c, lam);
    crystals.emplace(lam, g);
    return g;
}

Subcrystal CrystalCache::subset(const CartanPtr& c, const Weight& lam, const WeylElement& w) {
    auto key = std::make_pair(lam, min_coset_rep(w, lam));
    auto it = subsets.find(key);
    if (it != subsets.end()) return it->second;
    auto sub = demazure_subset(crystal(c, lam), key.second);
    subsets.emplace(std::move(key), sub);
    return sub;
}

ProductClassification classify_demazure_product(const CartanPtr& c, const Weight& lam,
                                                const WeylElement& w, const Weight& mu,
                                                const WeylElement& u, CrystalCache* cache) {
    CrystalCache local;
    CrystalCache* cc = cache ? cache : &local;
    auto ps = product_subset(cc->subset(c, lam, w), cc->subset(c, mu, u));

    ProductClassification cls{lam, mu, w, u, false, false, false, false, {}, {}};
    cls.extremal = is_extremal(ps.members).extremal;
    cls.hinges = find_hinges(ps);
    cls.hinge_free = cls.hinges.broken_free();
    cls.kouno = kouno_criterion(lam, w, mu, u);
    cls.decomposition = decompose_demazure(ps.members);
    cls.demazure_sum = cls.decomposition.ok;
    return cls;
}

Subcrystal diagonal_component(const CrystalPtr& product) {
    auto info = product->tensor_info();
    if (!info) throw std::invalid_argument("not a tensor product crystal");
    auto hl = info->left->highest_weight_elements();
    auto hr = info->right->highest_weight_elements();
    if (hl.size() != 1 || hr.size() != 1)
        throw std::invalid_argument("factors must be highest-weight crystals");
    return component_of(product, product->tensor_encode(hl[0].first, hr[0].first));
}

bool diagonal_theorem_check(const CartanPtr& c, const Weight& lam, const Weight& mu,
                            const WeylElement& u, const WeylElement& v) {
    for (int i = 1; i <= c->rank(); ++i)
        if (c->pairing(i, lam) == 0 && c->pairing(i, mu) != 0)
            throw std::invalid_argument(
                "the right weight must vanish on every coroot the left one does");
    if (!bruhat_leq(u, v))
        throw std::invalid_argument("the left Weyl element must precede the right one");

    auto ambl = build_typeA(c, lam);
    auto ambm = build_typeA(c, mu);
    auto prod = tensor(ambl, ambm);
    auto diag = diagonal_component(prod);

    // every x tensor y in the diagonal with x in B_w: y must lie in B_w too,
    // for the minimal w containing x
    std::map<WeylElement, Subcrystal> memo;
    for (int idx : diag.members) {
        auto [x, y] = prod->tensor_decode(idx);
        auto wmin = word_product(c, minimal_expansion_word(ambl, x));
        auto it = memo.find(wmin);
        if (it == memo.end()) it = memo.emplace(wmin, demazure_subset(ambm, wmin)).first;
        if (!it->second.contains(y)) return false;
    }

    auto X = demazure_subset(ambl, u);
    auto Y = demazure_subset(ambm, v);
    std::set<int> inter;
    for (int idx : diag.members) {
        auto [x, y] = prod->tensor_decode(idx);
        if (X.contains(x) && Y.contains(y)) inter.insert(idx);
    }

    auto ref = build_typeA(c, lam + mu);
    auto iso = canonical_component_iso(diag, ref);
    if (!iso.ok) return false;
    std::set<int> image;
    for (int idx : inter) image.insert(iso.map[idx]);
    auto rec = recognize_demazure(Subcrystal{ref, std::move(image)});
    return rec && *rec == DemazureLabel::make(lam + mu, u);
}

bool tensor_power_diagonal_check(const CartanPtr& c, const Weight& lam, const WeylElement& w,
                                 int m, long long budget) {
    if (m < 1) throw std::invalid_argument("power must be at least 1");
    auto amb = build_typeA(c, lam);
    auto X = demazure_subset(amb, w);
    auto hw = amb->highest_weight_elements();

    CrystalPtr cur = amb;
    std::set<int> members = X.members;
    int top = hw[0].first;
    for (int k = 2; k <= m; ++k) {
        if (static_cast<long long>(cur->size()) * amb->size() > budget)
            throw std::invalid_argument("product exceeds the element budget");
        auto next = tensor(cur, amb);
        std::set<int> grown;
        for (int a : members)
            for (int b : X.members) grown.insert(next->tensor_encode(a, b));
        top = next->tensor_encode(top, hw[0].first);
        cur = next;
        members = std::move(grown);
    }

    auto diag = component_of(cur, top);
    auto ref = build_typeA(c, lam * m);
    auto iso = canonical_component_iso(diag, ref);
    if (!iso.ok) return false;
    std::set<int> image;
    for (int idx : diag.members)
        if (members.count(idx)) image.insert(iso.map[idx]);
    auto rec = recognize_demazure(Subcrystal{ref, std::move(image)});
    return rec && *rec == DemazureLabel::make(lam * m, w);
}

FactorClosureReport factor_closure_check(const ProductSubset& ps) {
    if (!is_extremal(ps.members).extremal)
        throw std::invalid_argument("the product member set must be extremal");
    auto e_closed = [](const Subcrystal& S) {
        for (int b : S.members)
            for (int i = 1; i <= S.ambient->rank(); ++i) {
                int t = S.ambient->e(i, b);
                if (t != -1 && !S.contains(t)) return false;
            }
        return true;
    };
    FactorClosureReport rep;
    rep.x_e_closed = e_closed(ps.X);
    rep.y_e_closed = e_closed(ps.Y);
    if (rep.y_e_closed) rep.x_extremal = is_extremal(ps.X).extremal;
    rep.y_extremal = is_extremal(ps.Y).extremal;
    return rep;
}

std::vector<Subcrystal> enumerate_extremal_subsets(const CrystalPtr& g) {
    if (g->size() > 20)
        throw std::invalid_argument("brute-force enumeration is limited to 20 elements");
    std::vector<std::vector<std::vector<int>>> strs;
    for (int i = 1; i <= g->rank(); ++i) strs.push_back(g->strings(i));

    std::vector<Subcrystal> out;
    for (unsigned mask = 1; mask < (1u << g->size()); ++mask) {
        bool ok = true;
        for (const auto& per_color : strs) {
            for (const auto& s : per_color) {
                std::vector<int> met;
                for (int b : s)
                    if (mask & (1u << b)) met.push_back(b);
                if (!string_pattern_ok(s, met)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        std::set<int> members;
        for (int b = 0; b < g->size(); ++b)
            if (mask & (1u << b)) members.insert(b);
        out.push_back(Subcrystal{g, std::move(members)});
    }
    return out;
}

std::vector<SweepRow> run_sweep(const CartanPtr& c, const std::vector<Weight>& grid,
                                int jobs) {
    auto W = enumerate_weyl_group(c);
    const size_t nw = W.size(), ng = grid.size();
    const size_t total = ng * ng * nw * nw;
    const SweepRow blank{c->zero_weight(), c->zero_weight(), WeylElement::identity(c),
                         WeylElement::identity(c), 0, false, false, false, {}, false};
    std::vector<SweepRow> rows(total, blank);
    auto worker = [&](size_t start, size_t stride) {
        CrystalCache cache;
        for (size_t r = start; r < total; r += stride) {
            size_t rest = r;
            size_t iu = rest % nw;
            rest /= nw;
            size_t iw = rest % nw;
            rest /= nw;
            size_t im = rest % ng;
            size_t il = rest / ng;
            auto cls = classify_demazure_product(c, grid[il], W[iw], grid[im], W[iu], &cache);
            SweepRow& row = rows[r];
            row.lam = cls.lam;
            row.mu = cls.mu;
            row.w = cls.w;
            row.u = cls.u;
            row.n_broken = cls.hinges.broken_count();
            row.extremal = cls.extremal;
            row.kouno = cls.kouno;
            row.demazure_sum = cls.demazure_sum;
            row.labels = cls.decomposition.labels;
            row.coherent = cls.coherent();
        }
    };
    if (jobs <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, static_cast<size_t>(t), jobs);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::vector<Weight> dominant_weights_up_to(const CartanPtr& c, int bound, bool include_zero) {
    std::vector<Weight> out;
    std::vector<int> coords(c->rank(), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == c->rank()) {
            out.emplace_back(coords);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            coords[pos] = v;
            self(self, pos + 1, left - v);
        }
        coords[pos] = 0;
    };
    if (bound >= 0) rec(rec, 0, bound);
    std::sort(out.begin(), out.end());
    if (!include_zero)
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Weight& w) { return w.is_zero(); }),
                  out.end());
    return out;
}

}  // namespace demkit
