#include "flagein/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace flagein {

namespace {

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> parse_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw std::invalid_argument("bad node list: " + s);
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty node list");
    return out;
}

Family family_from(char c)
{
    switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    default: throw std::invalid_argument(std::string("unknown family letter ") + c);
    }
}

Family exceptional_from(const std::string& s)
{
    static const std::map<std::string, Family> m = {
        {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4}, {"G2", Family::G2}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown family " + s);
    return it->second;
}

}  // namespace

std::string describe(const LieFamily& f, const std::vector<int>& painted)
{
    RootSystem rs(f);
    std::vector<int> white;
    for (int i = 1; i <= rs.rank(); ++i)
        if (!std::count(painted.begin(), painted.end(), i)) white.push_back(i);
    std::string w = white.empty() ? "" : subdiagram_type(rs, white) + " x ";
    return f.name() + " / " + w + "T" + std::to_string(painted.size());
}

SpaceSpec parse_space(const std::string& alias)
{
    std::string s = alias;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    std::string type;
    static const std::regex suffix(R"(^(.*)-(I|IIa|IIb)$)");
    std::smatch m;
    if (std::regex_match(s, m, suffix)) {
        type = m[2];
        s = m[1];
    }
    std::string head = s, params;
    if (auto c = s.find(':'); c != std::string::npos) {
        head = s.substr(0, c);
        params = s.substr(c + 1);
    }

    std::map<std::string, std::string> kv;
    std::vector<int> nodes;
    if (auto n = params.find("nodes="); n != std::string::npos) {
        nodes = parse_list(params.substr(n + 6));
        params = params.substr(0, n);
        if (!params.empty() && params.back() == ',') params.pop_back();
    }
    {
        std::stringstream ss(params);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto e = tok.find('=');
            if (e == std::string::npos) throw std::invalid_argument("expected key=value in " + alias);
            kv[tok.substr(0, e)] = tok.substr(e + 1);
        }
    }
    auto intparam = [&](const std::string& k) -> int {
        auto it = kv.find(k);
        if (it == kv.end()) throw std::invalid_argument("missing " + k + "= in " + alias);
        return parse_list(it->second).at(0);
    };

    SpaceSpec spec{LieFamily(Family::A, 1), {}, "", "", false};
    static const std::regex classical(R"(^([ABCD])(\d*)$)");
    if (head == "E8(i)" || head == "E8(ii)") {
        spec.family = LieFamily(Family::E8);
        spec.painted = {head == "E8(i)" ? 3 : 6};
    } else if (std::regex_match(head, m, classical)) {
        int rank = m[2].length() ? std::stoi(m[2]) : intparam("l");
        spec.family = LieFamily(family_from(head[0]), rank);
        if (nodes.empty()) {
            if (kv.count("p")) {
                int p = intparam("p");
                if (spec.family.family != Family::C && spec.family.family != Family::D)
                    throw std::invalid_argument("p= applies to C and D only");
                spec.painted = {p, rank};
                if (type.empty()) type = "IIb";
            } else if (type == "IIa") {
                spec.painted = {1, 2};
            } else {
                throw std::invalid_argument("cannot infer painted nodes from " + alias);
            }
        }
    } else {
        spec.family = LieFamily(exceptional_from(head));
        if (nodes.empty()) {
            if (kv.count("node")) spec.painted = {intparam("node")};
            else if (type == "IIa" && (head == "E6" || head == "E7")) spec.painted = {1, 2};
            else if (type == "I" && head == "F4") spec.painted = {3};
            else if (type == "I" && head == "E7") spec.painted = {4};
            else throw std::invalid_argument("cannot infer painted nodes from " + alias);
        }
    }
    if (!nodes.empty()) spec.painted = nodes;
    std::sort(spec.painted.begin(), spec.painted.end());

    const int rank = spec.family.rank;
    for (int v : spec.painted)
        if (v < 1 || v > rank) throw std::invalid_argument("node out of range in " + alias);

    spec.degenerate = spec.family.family == Family::D && rank == 3 && spec.painted == std::vector<int>{1, 2};
    if (!spec.degenerate && !type.empty()) {
        auto rs = std::make_shared<const RootSystem>(spec.family);
        auto dec = decompose(PaintedDiagram(rs, spec.painted));
        if (to_string(dec.type) != type)
            throw std::invalid_argument(alias + " is of type " + to_string(dec.type) + ", not " + type);
    }
    spec.alias = spec.family.name() + ":nodes=" + join(spec.painted) + (type.empty() ? "" : "-" + type);
    spec.label = spec.degenerate ? "SO(6)/U(1)xU(1)xSO(2)" : describe(spec.family, spec.painted);
    return spec;
}

SpaceModel so6_series_model()
{
    SpaceModel m;
    m.name = "D3:nodes=1,2";
    m.type = SpaceType::TypeIIa;
    m.dims = {2, 4, 4, 2};
    m.triples = TripleTable(4);
    m.triples.set(0, 1, 2, make_rational(1, 2));
    m.triples.set(1, 2, 3, make_rational(1, 2));
    const std::vector<std::vector<int>> ke = {{1, 1, 2, 3}, {3, 1, 2, 1}, {3, 2, 1, 1}, {1, 2, 1, 3}};
    for (int id = 0; id < 4; ++id) {
        KEMetric g;
        g.ordering = id;
        for (int v : ke[id]) g.values.push_back(Rational(v));
        for (int v : ke[id]) g.normalized.push_back(make_rational(v, ke[id][0]));
        m.ke.push_back(g);
    }
    return m;
}

SpaceModel build_model(const SpaceSpec& s)
{
    if (s.degenerate) return so6_series_model();
    auto rs = std::make_shared<const RootSystem>(s.family);
    return model_from_decomposition(decompose(PaintedDiagram(rs, s.painted)), s.alias);
}

std::vector<SpaceSpec> standard_spaces()
{
    std::vector<SpaceSpec> out;
    for (const char* a : {"F4-I", "E7-I", "E8(i)-I", "E8(ii)-I", "E6-IIa", "E7-IIa"}) out.push_back(parse_space(a));
    for (int l = 3; l <= 6; ++l) out.push_back(parse_space("B:l=" + std::to_string(l) + "-IIa"));
    for (int l = 4; l <= 6; ++l) out.push_back(parse_space("D:l=" + std::to_string(l) + "-IIa"));
    for (int p = 2; p <= 4; ++p) out.push_back(parse_space("D:l=" + std::to_string(2 * p) + ",p=" + std::to_string(p) + "-IIb"));
    for (int p = 1; p <= 3; ++p) out.push_back(parse_space("C:l=" + std::to_string(2 * p) + ",p=" + std::to_string(p) + "-IIb"));
    return out;
}

}  // namespace flagein
