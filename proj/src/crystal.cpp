#include "demkit/crystal.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace demkit {

std::string provenance_str(Provenance p) {
    switch (p) {
        case Provenance::Tableaux: return "tableaux";
        case Provenance::Tensor: return "tensor";
        case Provenance::Import: return "import";
        case Provenance::Component: return "component";
        case Provenance::Modified: return "modified";
    }
    throw std::logic_error("bad provenance");
}

Provenance provenance_parse(const std::string& s) {
    if (s == "tableaux") return Provenance::Tableaux;
    if (s == "tensor") return Provenance::Tensor;
    if (s == "import") return Provenance::Import;
    if (s == "component") return Provenance::Component;
    if (s == "modified") return Provenance::Modified;
    throw std::invalid_argument("unknown provenance '" + s + "'");
}

CrystalGraph::CrystalGraph(CartanPtr c, std::vector<Weight> weights,
                           const std::vector<FEdge>& f_edges, Provenance prov)
    : cartan_(std::move(c)), wts_(std::move(weights)), prov_(prov) {
    const int n = cartan_->rank();
    const int sz = size();
    for (const auto& wt : wts_)
        if (wt.rank() != n) throw std::invalid_argument("element weight has wrong rank");
    f_.assign(n, std::vector<int>(sz, -1));
    e_.assign(n, std::vector<int>(sz, -1));
    for (const auto& ed : f_edges) {
        if (ed.color < 1 || ed.color > n) throw std::invalid_argument("edge color out of range");
        if (ed.from < 0 || ed.from >= sz || ed.to < 0 || ed.to >= sz)
            throw std::invalid_argument("edge endpoint out of range");
        int& slot = f_[ed.color - 1][ed.from];
        if (slot != -1) {
            shadowed_.push_back(ed);  // keep for validate(), first edge wins
            continue;
        }
        slot = ed.to;
        int& back = e_[ed.color - 1][ed.to];
        if (back == -1) back = ed.from;  // collisions surface as (C3) violations
    }
}

CrystalPtr CrystalGraph::create(CartanPtr c, std::vector<Weight> weights,
                                const std::vector<FEdge>& f_edges, Provenance prov) {
    return std::make_shared<CrystalGraph>(std::move(c), std::move(weights), f_edges, prov);
}

int CrystalGraph::f(int color, int b) const {
    if (color < 1 || color > rank()) throw std::out_of_range("color out of range");
    return f_[color - 1].at(b);
}

int CrystalGraph::e(int color, int b) const {
    if (color < 1 || color > rank()) throw std::out_of_range("color out of range");
    return e_[color - 1].at(b);
}

int CrystalGraph::eps(int color, int b) const {
    int steps = 0;
    for (int cur = e(color, b); cur != -1; cur = e(color, cur)) {
        if (++steps > size()) throw std::runtime_error("e-chain does not terminate");
    }
    return steps;
}

int CrystalGraph::phi(int color, int b) const {
    int steps = 0;
    for (int cur = f(color, b); cur != -1; cur = f(color, cur)) {
        if (++steps > size()) throw std::runtime_error("f-chain does not terminate");
    }
    return steps;
}

std::vector<std::pair<int, Weight>> CrystalGraph::highest_weight_elements() const {
    std::vector<std::pair<int, Weight>> out;
    for (int b = 0; b < size(); ++b) {
        bool top = true;
        for (int i = 1; i <= rank() && top; ++i)
            if (e(i, b) != -1) top = false;
        if (top) out.emplace_back(b, wts_[b]);
    }
    return out;
}

std::vector<int> CrystalGraph::string_through(int color, int b) const {
    int top = b, steps = 0;
    while (e(color, top) != -1) {
        top = e(color, top);
        if (++steps > size()) throw std::runtime_error("e-chain does not terminate");
    }
    std::vector<int> s{top};
    for (int cur = f(color, top); cur != -1; cur = f(color, cur)) {
        s.push_back(cur);
        if (static_cast<int>(s.size()) > size()) throw std::runtime_error("f-chain does not terminate");
    }
    return s;
}

std::vector<std::vector<int>> CrystalGraph::strings(int color) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(size(), 0);
    for (int b = 0; b < size(); ++b) {
        if (seen[b] || e(color, b) != -1) continue;  // start only at tops
        auto s = string_through(color, b);
        for (int x : s) seen[x] = 1;
        out.push_back(std::move(s));
    }
    // a cyclic i-chain has no top; surface that instead of dropping elements
    for (int b = 0; b < size(); ++b)
        if (!seen[b]) throw std::runtime_error("i-chain without top element (cycle)");
    return out;
}

std::vector<FEdge> CrystalGraph::f_edges_sorted() const {
    std::vector<FEdge> out;
    for (int i = 1; i <= rank(); ++i)
        for (int b = 0; b < size(); ++b)
            if (f_[i - 1][b] != -1) out.push_back({i, b, f_[i - 1][b]});
    return out;
}

int CrystalGraph::tensor_encode(int x, int y) const {
    if (!tinfo_) throw std::logic_error("not a tensor product crystal");
    return x * tinfo_->right->size() + y;
}

std::pair<int, int> CrystalGraph::tensor_decode(int idx) const {
    if (!tinfo_) throw std::logic_error("not a tensor product crystal");
    int r = tinfo_->right->size();
    return {idx / r, idx % r};
}

bool Subcrystal::subset_of(const Subcrystal& o) const {
    return ambient == o.ambient &&
           std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
}

bool Subcrystal::operator==(const Subcrystal& o) const {
    return ambient == o.ambient && members == o.members;
}

CrystalPtr tensor(const CrystalPtr& left, const CrystalPtr& right) {
    if (left->cartan() != right->cartan() && !(left->cartan()->type() == right->cartan()->type()))
        throw std::invalid_argument("tensor factors must share Cartan data");
    const auto& c = left->cartan();
    const int n = c->rank();
    const int L = left->size(), R = right->size();

    // factor string statistics, computed once
    auto table = [&](const CrystalPtr& g, bool up) {
        std::vector<std::vector<int>> t(n, std::vector<int>(g->size()));
        for (int i = 1; i <= n; ++i)
            for (int b = 0; b < g->size(); ++b) t[i - 1][b] = up ? g->eps(i, b) : g->phi(i, b);
        return t;
    };
    auto eps_l = table(left, true), phi_l = table(left, false);
    auto eps_r = table(right, true), phi_r = table(right, false);

    std::vector<Weight> wts;
    wts.reserve(static_cast<size_t>(L) * R);
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < R; ++y) wts.push_back(left->weight(x) + right->weight(y));

    std::vector<FEdge> edges;
    for (int i = 1; i <= n; ++i)
        for (int x = 0; x < L; ++x)
            for (int y = 0; y < R; ++y) {
                int idx = x * R + y;
                if (eps_r[i - 1][y] < phi_l[i - 1][x]) {
                    int fx = left->f(i, x);  // defined: phi > eps >= 0
                    edges.push_back({i, idx, fx * R + y});
                } else if (int fy = right->f(i, y); fy != -1) {
                    edges.push_back({i, idx, x * R + fy});
                }
            }

    auto g = std::make_shared<CrystalGraph>(c, std::move(wts), edges, Provenance::Tensor);
    g->tinfo_ = std::make_shared<CrystalGraph::TensorInfo>(CrystalGraph::TensorInfo{left, right});
    std::string diag;
    if (!check_tensor_eps_phi(g, &diag))
        throw TheoremFalsified("tensor eps/phi formulas disagree with string walk: " + diag);
    return g;
}

bool check_tensor_eps_phi(const CrystalPtr& product, std::string* diag) {
    auto info = product->tensor_info();
    if (!info) throw std::logic_error("not a tensor product crystal");
    const auto& gl = info->left;
    const auto& gr = info->right;
    for (int idx = 0; idx < product->size(); ++idx) {
        auto [x, y] = product->tensor_decode(idx);
        for (int i = 1; i <= product->rank(); ++i) {
            int wl = gl->cartan()->pairing(i, gl->weight(x));
            int wr = gr->cartan()->pairing(i, gr->weight(y));
            int eps_want = std::max(gl->eps(i, x), gr->eps(i, y) - wl);
            int phi_want = std::max(gr->phi(i, y), gl->phi(i, x) + wr);
            if (product->eps(i, idx) != eps_want || product->phi(i, idx) != phi_want) {
                if (diag) {
                    std::ostringstream os;
                    os << "element " << idx << " color " << i << ": walked ("
                       << product->eps(i, idx) << "," << product->phi(i, idx)
                       << ") formula (" << eps_want << "," << phi_want << ")";
                    *diag = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

CrystalPtr direct_sum(const std::vector<CrystalPtr>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
    const auto& c = parts.front()->cartan();
    std::vector<Weight> wts;
    std::vector<FEdge> edges;
    bool modified = false;
    int offset = 0;
    for (const auto& p : parts) {
        if (p->rank() != c->rank() || !(p->cartan()->type() == c->type()))
            throw std::invalid_argument("direct sum over mixed Cartan data");
        if (p->provenance() == Provenance::Modified) modified = true;
        for (int b = 0; b < p->size(); ++b) wts.push_back(p->weight(b));
        for (const auto& ed : p->f_edges_sorted())
            edges.push_back({ed.color, ed.from + offset, ed.to + offset});
        offset += p->size();
    }
    return CrystalGraph::create(c, std::move(wts), edges,
                                modified ? Provenance::Modified : Provenance::Component);
}

CrystalPtr remove_edge(const CrystalPtr& g, int b, int color) {
    if (g->f(color, b) == -1) throw std::invalid_argument("no such f-edge to remove");
    std::vector<FEdge> edges;
    for (const auto& ed : g->f_edges_sorted())
        if (!(ed.color == color && ed.from == b)) edges.push_back(ed);
    std::vector<Weight> wts;
    for (int x = 0; x < g->size(); ++x) wts.push_back(g->weight(x));
    auto out = std::make_shared<CrystalGraph>(g->cartan(), std::move(wts), edges,
                                              Provenance::Modified);
    out->tinfo_ = g->tensor_info();  // factors still meaningful for hinge scans
    return out;
}

CrystalPtr extract_subgraph(const Subcrystal& s) {
    const auto& g = s.ambient;
    auto idx = s.sorted_members();
    std::vector<int> pos(g->size(), -1);
    for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    std::vector<Weight> wts;
    for (int b : idx) wts.push_back(g->weight(b));
    std::vector<FEdge> edges;
    for (const auto& ed : g->f_edges_sorted())
        if (pos[ed.from] != -1 && pos[ed.to] != -1)
            edges.push_back({ed.color, pos[ed.from], pos[ed.to]});
    Provenance p = g->provenance() == Provenance::Modified ? Provenance::Modified
                                                           : Provenance::Component;
    return CrystalGraph::create(g->cartan(), std::move(wts), edges, p);
}

Subcrystal component_of(const CrystalPtr& g, int b) {
    std::set<int> seen{b};
    std::queue<int> q;
    q.push(b);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int i = 1; i <= g->rank(); ++i)
            for (int y : {g->f(i, x), g->e(i, x)})
                if (y != -1 && seen.insert(y).second) q.push(y);
    }
    return Subcrystal{g, std::move(seen)};
}

std::vector<Subcrystal> component_split(const CrystalPtr& g) {
    std::vector<Subcrystal> out;
    std::vector<char> seen(g->size(), 0);
    for (int b = 0; b < g->size(); ++b) {
        if (seen[b]) continue;
        auto comp = component_of(g, b);
        for (int x : comp.members) seen[x] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

Subcrystal closure_fi(Subcrystal s, int color) {
    const auto& g = s.ambient;
    std::queue<int> q;
    for (int b : s.members) q.push(b);
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        int t = g->f(color, b);
        if (t != -1 && s.members.insert(t).second) q.push(t);
    }
    return s;
}

Subcrystal closure_ei(Subcrystal s, int color) {
    const auto& g = s.ambient;
    std::queue<int> q;
    for (int b : s.members) q.push(b);
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        int t = g->e(color, b);
        if (t != -1 && s.members.insert(t).second) q.push(t);
    }
    return s;
}

Subcrystal closure_f(Subcrystal s, const ReducedWord& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) s = closure_fi(std::move(s), *it);
    return s;
}

Subcrystal closure_e(Subcrystal s, const ReducedWord& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) s = closure_ei(std::move(s), *it);
    return s;
}

Subcrystal closure_f_all(Subcrystal s) {
    size_t before;
    do {
        before = s.members.size();
        for (int i = 1; i <= s.ambient->rank(); ++i) s = closure_fi(std::move(s), i);
    } while (s.members.size() != before);
    return s;
}

Subcrystal closure_e_all(Subcrystal s) {
    size_t before;
    do {
        before = s.members.size();
        for (int i = 1; i <= s.ambient->rank(); ++i) s = closure_ei(std::move(s), i);
    } while (s.members.size() != before);
    return s;
}

IsoResult canonical_component_iso(const Subcrystal& component, const CrystalPtr& target) {
    IsoResult res;
    res.map.assign(component.ambient->size(), -1);
    const auto& g = component.ambient;

    std::vector<int> comp_hw;
    for (int b : component.members) {
        bool top = true;
        for (int i = 1; i <= g->rank() && top; ++i)
            if (g->e(i, b) != -1) top = false;
        if (top) comp_hw.push_back(b);
    }
    auto tgt_hw = target->highest_weight_elements();
    if (comp_hw.size() != 1) {
        res.failure = {comp_hw.empty() ? -1 : comp_hw[0], 0,
                       "component does not have a unique highest-weight element"};
        return res;
    }
    if (tgt_hw.size() != 1) {
        res.failure = {-1, 0, "target does not have a unique highest-weight element"};
        return res;
    }
    int a0 = comp_hw[0], t0 = tgt_hw[0].first;
    if (!(g->weight(a0) == target->weight(t0))) {
        res.failure = {a0, 0, "highest weights differ: " + g->weight(a0).str() + " vs " +
                                  target->weight(t0).str()};
        return res;
    }

    std::vector<int> back(target->size(), -1);
    res.map[a0] = t0;
    back[t0] = a0;
    std::queue<int> q;
    q.push(a0);
    int covered = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        int t = res.map[a];
        for (int i = 1; i <= g->rank(); ++i) {
            int fa = g->f(i, a), ft = target->f(i, t);
            if ((fa == -1) != (ft == -1)) {
                res.failure = {a, i, "f-edge present on one side only"};
                return res;
            }
            if (fa == -1) continue;
            if (!component.contains(fa)) {
                res.failure = {a, i, "edge leaves the component"};
                return res;
            }
            if (res.map[fa] == -1 && back[ft] == -1) {
                if (!(g->weight(fa) == target->weight(ft))) {
                    res.failure = {fa, i, "weights differ along matched edge"};
                    return res;
                }
                res.map[fa] = ft;
                back[ft] = fa;
                ++covered;
                q.push(fa);
            } else if (res.map[fa] != ft || back[ft] != fa) {
                res.failure = {fa, i, "inconsistent matching"};
                return res;
            }
        }
    }
    if (covered != component.size() || covered != target->size()) {
        res.failure = {-1, 0, "element counts differ or part of the component is unreachable"};
        return res;
    }
    res.ok = true;
    return res;
}

std::string ValidationReport::summary() const {
    if (violations.empty()) return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) {
        os << "\n  [" << v.axiom << "]";
        if (v.element >= 0) os << " element " << v.element;
        if (v.color > 0) os << " color " << v.color;
        os << ": " << v.detail;
    }
    return os.str();
}

}  // namespace demkit
