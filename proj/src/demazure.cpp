#include "demkit/demazure.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "demkit/tableaux.hpp"

namespace demkit {

namespace {

std::string word_brace(const WeylElement& w) {
    auto word = reduce_word(w);
    if (word.empty()) return "id";
    std::ostringstream os;
    for (size_t k = 0; k < word.size(); ++k) os << (k ? "*s" : "s") << word[k];
    return os.str();
}

// the unique element with no incoming e-edges, or -1
int sole_highest(const CrystalPtr& g) {
    auto hw = g->highest_weight_elements();
    return hw.size() == 1 ? hw[0].first : -1;
}

}  // namespace

DemazureLabel DemazureLabel::make(Weight nu, WeylElement w) {
    if (!nu.dominant()) throw std::invalid_argument("Demazure label needs a dominant weight");
    auto canonical = min_coset_rep(std::move(w), nu);
    return DemazureLabel{std::move(nu), std::move(canonical)};
}

std::string DemazureLabel::str() const {
    return "B_{" + word_brace(weyl) + "}" + weight.str();
}

bool DemazureLabel::operator<(const DemazureLabel& o) const {
    if (!(weight == o.weight)) return weight < o.weight;
    return weyl < o.weyl;
}

LaurentPolynomial LaurentPolynomial::x_pow(const Weight& lam) {
    LaurentPolynomial p;
    p.add_term(lam, 1);
    return p;
}

void LaurentPolynomial::add_term(const Weight& lam, long long coeff) {
    if (coeff == 0) return;
    auto it = t_.find(lam);
    if (it == t_.end()) {
        t_.emplace(lam, coeff);
    } else if ((it->second += coeff) == 0) {
        t_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial out = *this;
    for (const auto& [lam, c] : o.t_) out.add_term(lam, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial out = *this;
    for (const auto& [lam, c] : o.t_) out.add_term(lam, -c);
    return out;
}

long long LaurentPolynomial::total() const {
    long long s = 0;
    for (const auto& [lam, c] : t_) s += c;
    return s;
}

std::string LaurentPolynomial::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        long long c = it->second;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << "x^" << it->first.str();
    }
    return os.str();
}

Subcrystal demazure_subset(const CrystalPtr& g, const WeylElement& w) {
    int h = sole_highest(g);
    if (h < 0)
        throw std::invalid_argument("ambient must have a unique highest-weight element");
    return closure_f(Subcrystal{g, {h}}, reduce_word(w));
}

bool reduced_word_independence_check(const CrystalPtr& g, const WeylElement& w) {
    auto base = demazure_subset(g, w);
    int h = sole_highest(g);
    for (const auto& word : enumerate_reduced_words(w))
        if (!(closure_f(Subcrystal{g, {h}}, word) == base)) return false;
    return true;
}

ReducedWord minimal_expansion_word(const CrystalPtr& g, int b) {
    int h = sole_highest(g);
    if (h < 0)
        throw std::invalid_argument("ambient must have a unique highest-weight element");
    if (b < 0 || b >= g->size()) throw std::out_of_range("element out of range");

    struct State {
        ReducedWord word;
        std::set<int> set;
    };
    std::vector<State> level{{{}, {h}}};
    std::set<std::set<int>> visited{{h}};
    auto finish = [&](const ReducedWord& word) {
        auto w = word_product(g->cartan(), word);
        if (w.length() != static_cast<int>(word.size()))
            throw TheoremFalsified("minimal expansion word is not reduced");
        return word;
    };
    if (b == h) return finish({});
    while (!level.empty()) {
        std::vector<State> next;
        for (int i = 1; i <= g->rank(); ++i)
            for (const auto& st : level) {
                auto grown = closure_fi(Subcrystal{g, st.set}, i).members;
                if (grown == st.set || visited.count(grown)) continue;
                ReducedWord word;
                word.reserve(st.word.size() + 1);
                word.push_back(i);
                word.insert(word.end(), st.word.begin(), st.word.end());
                next.push_back({std::move(word), std::move(grown)});
            }
        std::sort(next.begin(), next.end(),
                  [](const State& a, const State& b2) { return a.word < b2.word; });
        level.clear();
        for (auto& st : next) {
            if (!visited.insert(st.set).second) continue;  // lex-smaller word got there first
            if (st.set.count(b)) return finish(st.word);
            level.push_back(std::move(st));
        }
    }
    throw std::invalid_argument("element is not reachable from the highest weight");
}

std::optional<DemazureLabel> recognize_demazure(const Subcrystal& S) {
    if (S.members.empty()) return std::nullopt;
    const auto& g = S.ambient;
    auto comp = component_of(g, *S.members.begin());
    if (!S.subset_of(comp)) return std::nullopt;

    int h = -1;
    for (int b : comp.members) {
        bool top = true;
        for (int i = 1; i <= g->rank() && top; ++i)
            if (g->e(i, b) != -1) top = false;
        if (top) {
            if (h != -1) return std::nullopt;  // ambiguous component
            h = b;
        }
    }
    if (h == -1 || !S.contains(h)) return std::nullopt;
    Weight nu = g->weight(h);
    if (!nu.dominant()) return std::nullopt;

    std::set<int> seed{h};
    if (seed == S.members) return DemazureLabel::make(nu, WeylElement::identity(g->cartan()));

    std::set<std::set<int>> visited{seed};
    std::queue<std::pair<WeylElement, std::set<int>>> q;
    q.emplace(WeylElement::identity(g->cartan()), std::move(seed));
    while (!q.empty()) {
        auto [w, cur] = std::move(q.front());
        q.pop();
        for (int i = 1; i <= g->rank(); ++i) {
            auto grown = closure_fi(Subcrystal{g, cur}, i).members;
            if (grown == cur) continue;
            auto wi = WeylElement::simple(g->cartan(), i) * w;
            if (wi.length() <= w.length())
                throw TheoremFalsified(
                    "f-saturation enlarged a Demazure subset along a descent");
            if (!std::includes(S.members.begin(), S.members.end(), grown.begin(), grown.end()))
                continue;
            if (grown == S.members) return DemazureLabel::make(nu, wi);
            if (visited.insert(grown).second) q.emplace(std::move(wi), std::move(grown));
        }
    }
    return std::nullopt;
}

Decomposition decompose_demazure(const Subcrystal& S) {
    Decomposition out;
    const auto& g = S.ambient;
    for (const auto& comp : component_split(g)) {
        std::set<int> inter;
        std::set_intersection(comp.members.begin(), comp.members.end(), S.members.begin(),
                              S.members.end(), std::inserter(inter, inter.end()));
        if (inter.empty()) continue;
        Subcrystal piece{g, std::move(inter)};

        std::optional<DemazureLabel> label;
        if (g->cartan()->type().family == Family::A) {
            auto piece_graph = extract_subgraph(comp);
            int h = sole_highest(piece_graph);
            if (h < 0) {
                out.failure = "component without a unique highest-weight element";
                return out;
            }
            auto ref = build_typeA(g->cartan(), piece_graph->weight(h));
            auto iso = canonical_component_iso(comp, ref);
            if (!iso.ok) {
                out.failure = "component is not a standard crystal: " + iso.failure.reason;
                return out;
            }
            std::set<int> mapped;
            for (int b : piece.members) mapped.insert(iso.map[b]);
            label = recognize_demazure(Subcrystal{ref, std::move(mapped)});
        } else {
            label = recognize_demazure(piece);
        }
        if (!label) {
            std::ostringstream os;
            os << "the part in the component of element " << *comp.members.begin()
               << " is not a Demazure subcrystal";
            out.failure = os.str();
            return out;
        }
        out.labels.push_back(std::move(*label));
    }
    std::sort(out.labels.begin(), out.labels.end());
    out.ok = true;
    return out;
}

LaurentPolynomial character(const Subcrystal& S) {
    LaurentPolynomial p;
    for (int b : S.members) p.add_term(S.ambient->weight(b), 1);
    return p;
}

LaurentPolynomial character(const CrystalPtr& g) {
    LaurentPolynomial p;
    for (int b = 0; b < g->size(); ++b) p.add_term(g->weight(b), 1);
    return p;
}

LaurentPolynomial demazure_operator(const CartanPtr& c, int color,
                                    const LaurentPolynomial& p) {
    const Weight alpha = c->simple_root(color);
    LaurentPolynomial out;
    for (const auto& [lam, coeff] : p.terms()) {
        int m = c->pairing(color, lam);
        if (m >= 0) {
            for (int k = 0; k <= m; ++k) out.add_term(lam - alpha * k, coeff);
        } else if (m <= -2) {
            for (int k = 1; k <= -m - 1; ++k) out.add_term(lam + alpha * k, -coeff);
        }
        // m == -1 contributes nothing
    }
    return out;
}

LaurentPolynomial demazure_char_poly(const CartanPtr& c, const Weight& lam,
                                     const ReducedWord& word) {
    auto p = LaurentPolynomial::x_pow(lam);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        p = demazure_operator(c, *it, p);
    return p;
}

bool demazure_character_check(const CrystalPtr& g, const WeylElement& w, bool all_words) {
    int h = sole_highest(g);
    if (h < 0)
        throw std::invalid_argument("ambient must have a unique highest-weight element");
    auto from_subset = character(demazure_subset(g, w));
    const Weight lam = g->weight(h);
    if (all_words) {
        for (const auto& word : enumerate_reduced_words(w))
            if (!(demazure_char_poly(g->cartan(), lam, word) == from_subset)) return false;
        return true;
    }
    return demazure_char_poly(g->cartan(), lam, reduce_word(w)) == from_subset;
}

std::optional<DemazureLabel> recognize_demazure_induced(const CrystalPtr& piece) {
    if (piece->cartan()->type().family != Family::A)
        throw std::invalid_argument(
            "induced recognition needs a constructible reference crystal (type A)");
    if (piece->size() == 0) return std::nullopt;
    int root = sole_highest(piece);
    if (root < 0) return std::nullopt;
    Weight nu = piece->weight(root);
    if (!nu.dominant()) return std::nullopt;

    auto ref = build_typeA(piece->cartan(), nu);
    Subcrystal whole{piece, {}};
    for (int b = 0; b < piece->size(); ++b) whole.members.insert(b);

    std::set<std::set<int>> seen;
    for (const auto& v : enumerate_weyl_group(piece->cartan())) {
        auto sub = demazure_subset(ref, v);
        if (!seen.insert(sub.members).second) continue;
        if (sub.size() != piece->size()) continue;
        if (canonical_component_iso(whole, extract_subgraph(sub)).ok)
            return DemazureLabel::make(nu, v);
    }
    return std::nullopt;
}

}  // namespace demkit
