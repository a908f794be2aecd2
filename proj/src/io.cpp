#include "homcount/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homcount {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

}  // namespace

SimpleGraph parse_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) fail("graph header must be 'n m'");
    if (n < 0 || m < 0) fail("negative counts in graph header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) fail("expected " + std::to_string(m) + " edge lines");
        if (!(0 <= u && u < v && v < n)) fail("edge must satisfy 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    std::string extra;
    if (in >> extra) fail("trailing content after the edge list");
    try {
        return SimpleGraph(n, edges);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

SimpleGraph parse_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_graph(in);
}

TargetGraph parse_target(std::istream& in) {
    int k = 0;
    if (!(in >> k)) fail("target header must be the colour count");
    if (k < 0) fail("negative colour count");
    std::vector<std::string> names(k);
    for (int i = 0; i < k; ++i)
        if (!(in >> names[i])) fail("expected " + std::to_string(k) + " colour names");
    std::vector<std::pair<int, int>> edges;
    std::string a, b;
    while (in >> a) {
        if (!(in >> b)) fail("dangling edge endpoint '" + a + "'");
        const auto find = [&](const std::string& name) {
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) fail("unknown colour '" + name + "' in edge list");
            return static_cast<int>(it - names.begin());
        };
        edges.emplace_back(find(a), find(b));
    }
    try {
        return TargetGraph(std::move(names), edges);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

TargetGraph parse_target_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_target(in);
}

ListAssignment parse_lists(std::istream& in, const TargetGraph& target, int n) {
    ListAssignment out = ListAssignment::all_colours(n, target.colour_count());
    std::vector<char> seen(n, 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        const auto where = " (lists line " + std::to_string(line_no) + ")";
        if (head.back() != ':') fail("expected 'v:' prefix" + where);
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(head.substr(0, head.size() - 1), &used);
            if (used + 1 != head.size()) fail("malformed vertex id" + where);
        } catch (const std::exception&) {
            fail("malformed vertex id" + where);
        }
        if (v < 0 || v >= n) fail("vertex id out of range" + where);
        if (seen[v]) fail("duplicate list for vertex " + std::to_string(v) + where);
        seen[v] = 1;
        std::vector<int> list;
        std::string name;
        while (ls >> name) {
            const int c = target.index_of(name);
            if (c < 0) fail("unknown colour '" + name + "'" + where);
            list.push_back(c);
        }
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            fail("repeated colour in list" + where);
        out.lists[v] = std::move(list);
    }
    return out;
}

ListAssignment parse_lists_file(const std::string& path, const TargetGraph& target, int n) {
    auto in = open_or_throw(path);
    return parse_lists(in, target, n);
}

WeightTable parse_weights(std::istream& in, const TargetGraph& target, int n) {
    WeightTable out;
    int v = 0;
    std::string name, value;
    while (in >> v) {
        if (!(in >> name >> value)) fail("weight lines must be 'v c p/q'");
        if (v < 0 || v >= n) fail("vertex id out of range in weights");
        const int c = target.index_of(name);
        if (c < 0) fail("unknown colour '" + name + "' in weights");
        if (out.contains(v, c))
            fail("duplicate weight for vertex " + std::to_string(v) + " colour " + name);
        try {
            out.set(v, c, parse_rational(value));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (!in.eof()) fail("malformed vertex id in weights");
    return out;
}

WeightTable parse_weights_file(const std::string& path, const TargetGraph& target, int n) {
    auto in = open_or_throw(path);
    return parse_weights(in, target, n);
}

std::string polynomial_to_text(const Polynomial& p, const std::vector<std::string>& var_tokens) {
    if (static_cast<int>(var_tokens.size()) != p.num_vars())
        throw std::invalid_argument("token count does not match the polynomial");
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += rational_to_string(it->second);
        bool any_var = false;
        for (int var = 0; var < p.num_vars(); ++var) {
            const int e = it->first[var];
            if (e == 0) continue;
            out += any_var ? " " : " * ";
            any_var = true;
            out += var_tokens[var];
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::vector<std::string> colour_tokens(const TargetGraph& target) {
    std::vector<std::string> tokens;
    tokens.reserve(target.colour_count());
    for (int h = 0; h < target.colour_count(); ++h) tokens.push_back("x_" + target.name(h));
    return tokens;
}

nlohmann::json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& var_names) {
    if (static_cast<int>(var_names.size()) != p.num_vars())
        throw std::invalid_argument("name count does not match the polynomial");
    nlohmann::json out = nlohmann::json::array();
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        nlohmann::json exps = nlohmann::json::object();
        for (int var = 0; var < p.num_vars(); ++var)
            if (it->first[var] != 0) exps[var_names[var]] = it->first[var];
        out.push_back({{"coeff", rational_to_string(it->second)}, {"exps", std::move(exps)}});
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j, const std::vector<std::string>& var_names) {
    Polynomial p(static_cast<int>(var_names.size()));
    for (const auto& term : j) {
        std::vector<int> exps(var_names.size(), 0);
        for (const auto& [name, e] : term.at("exps").items()) {
            const auto it = std::find(var_names.begin(), var_names.end(), name);
            if (it == var_names.end()) throw ParseError("unknown variable '" + name + "'");
            exps[it - var_names.begin()] = e.get<int>();
        }
        p.add_term(exps, parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

nlohmann::json decomposition_to_json(const PathDecomposition& pd) {
    return {{"bags", pd.bags}, {"width", pd.width()}};
}

nlohmann::json forest_to_json(const RootedForest& f) {
    nlohmann::json parent = nlohmann::json::array();
    for (int p : f.parent)
        parent.push_back(p == -1 ? nlohmann::json(nullptr) : nlohmann::json(p));
    return {{"roots", f.roots}, {"parent", std::move(parent)}, {"height", f.height()}};
}

}  // namespace homcount
