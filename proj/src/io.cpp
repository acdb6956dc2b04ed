#include "demkit/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace demkit {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed JSON: ") + ex.what());
    }
}

const char* kEdgePalette[] = {"blue",   "red",  "forestgreen", "orange",
                              "purple", "brown", "cadetblue",  "magenta"};

int strict_int(const std::string& piece) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(piece, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + piece + "' is not an integer");
    }
    while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) ++pos;
    if (pos != piece.size()) throw std::invalid_argument("'" + piece + "' is not an integer");
    return v;
}

}  // namespace

std::string to_canonical_json(const CrystalPtr& g) {
    json j;
    j["cartan"] = g->cartan()->type().str();
    j["provenance"] = provenance_str(g->provenance());
    j["elements"] = json::array();
    for (int b = 0; b < g->size(); ++b)
        j["elements"].push_back({{"id", b}, {"wt", g->weight(b).c}});
    j["edges"] = json::array();
    for (const auto& ed : g->f_edges_sorted())
        j["edges"].push_back({{"i", ed.color}, {"from", ed.from}, {"to", ed.to}});
    return j.dump();
}

CrystalPtr graph_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    try {
        auto c = CartanData::make(j.at("cartan").get<std::string>());
        auto prov = provenance_parse(j.at("provenance").get<std::string>());
        std::vector<Weight> wts;
        for (const auto& el : j.at("elements")) {
            if (el.at("id").get<int>() != static_cast<int>(wts.size()))
                throw std::invalid_argument("element ids must be 0..n-1 in order");
            wts.emplace_back(el.at("wt").get<std::vector<int>>());
        }
        std::vector<FEdge> edges;
        for (const auto& ed : j.at("edges"))
            edges.push_back(
                {ed.at("i").get<int>(), ed.at("from").get<int>(), ed.at("to").get<int>()});
        return CrystalGraph::create(std::move(c), std::move(wts), edges, prov);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("bad crystal JSON: ") + ex.what());
    }
}

std::string subset_to_json(const Subcrystal& s) {
    json j;
    j["ambient"] = sha256_hex(to_canonical_json(s.ambient));
    j["members"] = s.sorted_members();
    return j.dump();
}

Subcrystal subset_from_json(const std::string& text, const CrystalPtr& ambient) {
    json j = parse_or_throw(text);
    try {
        if (j.at("ambient").get<std::string>() != sha256_hex(to_canonical_json(ambient)))
            throw std::invalid_argument("subset does not belong to this ambient crystal");
        Subcrystal s{ambient, {}};
        for (int b : j.at("members").get<std::vector<int>>()) {
            if (b < 0 || b >= ambient->size())
                throw std::invalid_argument("subset member out of range");
            s.members.insert(b);
        }
        return s;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("bad subset JSON: ") + ex.what());
    }
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 0xf]);
    }
    return out;
}

std::string to_dot(const CrystalPtr& g, const std::set<int>* members) {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box,fontsize=10];\n";
    for (int b = 0; b < g->size(); ++b) {
        os << "  n" << b << " [label=\"" << b << "\\n" << g->weight(b).str() << "\"";
        if (members && members->count(b)) os << ",style=filled,fillcolor=lightgoldenrod";
        os << "];\n";
    }
    for (const auto& ed : g->f_edges_sorted())
        os << "  n" << ed.from << " -> n" << ed.to << " [label=\"" << ed.color
           << "\",color=" << kEdgePalette[(ed.color - 1) % 8] << "];\n";
    os << "}\n";
    return os.str();
}

Weight parse_weight(const std::string& text, int rank) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<int> coords;
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) coords.push_back(strict_int(piece));
    if (static_cast<int>(coords.size()) != rank) {
        std::ostringstream os;
        os << "expected " << rank << " weight coordinates, got " << coords.size();
        throw std::invalid_argument(os.str());
    }
    return Weight(std::move(coords));
}

WeylElement parse_word(const CartanPtr& c, const std::string& text) {
    if (text == "id" || text.empty()) return WeylElement::identity(c);
    if (text == "w0") return longest_element(c);
    ReducedWord word;
    auto check = [&](int i) {
        if (i < 1 || i > c->rank())
            throw std::invalid_argument("generator index out of range in '" + text + "'");
        word.push_back(i);
    };
    if (text.front() == 's' || text.front() == 'S') {
        std::istringstream is(text);
        std::string piece;
        while (std::getline(is, piece, '*')) {
            if (piece.size() < 2 || (piece[0] != 's' && piece[0] != 'S'))
                throw std::invalid_argument("expected sK*sK*... in '" + text + "'");
            check(strict_int(piece.substr(1)));
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("expected a digit string in '" + text + "'");
            check(ch - '0');
        }
    }
    return word_product(c, word);
}

std::string word_str(const WeylElement& w) { return word_str(reduce_word(w)); }

std::string word_str(const ReducedWord& word) {
    if (word.empty()) return "id";
    std::ostringstream os;
    for (size_t k = 0; k < word.size(); ++k) os << (k ? "*s" : "s") << word[k];
    return os.str();
}

}  // namespace demkit
