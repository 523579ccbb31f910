#include <rcl/hypergraph.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace rcl {

KHypergraph KHypergraph::make(int k, int n, std::vector<std::vector<int>> edges)
{
    if (k < 1)
        throw HypergraphError("uniformity k must be >= 1");
    if (n < 0)
        throw HypergraphError("vertex count must be >= 0");
    for (auto & e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k)
            throw HypergraphError("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw HypergraphError("repeated vertex in edge");
        if (e.front() < 1 || e.back() > n)
            throw HypergraphError("vertex id outside 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw HypergraphError("duplicate edge");
    return KHypergraph{k, n, std::move(edges)};
}

bool KHypergraph::has_edge(const std::vector<int> & sorted_edge) const
{
    return std::binary_search(edges.begin(), edges.end(), sorted_edge);
}

std::vector<std::uint64_t> KHypergraph::adjacency() const
{
    if (k != 2)
        throw HypergraphError("adjacency masks require k = 2");
    if (n > 64)
        throw HypergraphError("adjacency masks support n <= 64");
    std::vector<std::uint64_t> adj(n + 1, 0);
    for (const auto & e : edges) {
        adj[e[0]] |= std::uint64_t{1} << e[1];
        adj[e[1]] |= std::uint64_t{1} << e[0];
    }
    return adj;
}

KHypergraph parse_hypergraph_text(std::istream & in)
{
    std::string line;
    int lineno = 0;
    int k = -1, n = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> nums;
        long x;
        while (ls >> x)
            nums.push_back(x);
        if (! ls.eof()) {
            std::string tok;
            ls.clear();
            ls >> tok;
            throw HypergraphError("line " + std::to_string(lineno) + ": bad token '" + tok + "'");
        }
        if (nums.empty())
            continue;
        if (k < 0) {
            if (nums.size() != 2)
                throw HypergraphError("line " + std::to_string(lineno) + ": header must be 'k n'");
            k = static_cast<int>(nums[0]);
            n = static_cast<int>(nums[1]);
            continue;
        }
        if (static_cast<int>(nums.size()) != k)
            throw HypergraphError("line " + std::to_string(lineno) + ": expected " + std::to_string(k) + " vertex ids");
        edges.emplace_back(nums.begin(), nums.end());
    }
    if (k < 0)
        throw HypergraphError("missing 'k n' header");
    try {
        return KHypergraph::make(k, n, std::move(edges));
    }
    catch (const HypergraphError & e) {
        throw HypergraphError(std::string(e.what()));
    }
}

KHypergraph parse_hypergraph_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw HypergraphError("cannot open hypergraph file " + path);
    try {
        return parse_hypergraph_text(in);
    }
    catch (const HypergraphError & e) {
        throw HypergraphError(path + ": " + e.what());
    }
}

std::string format_hypergraph_text(const KHypergraph & h)
{
    std::ostringstream out;
    out << h.k << ' ' << h.n << '\n';
    for (const auto & e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

KHypergraph strip_isolated(const KHypergraph & h)
{
    std::vector<char> used(h.n + 1, 0);
    for (const auto & e : h.edges)
        for (int v : e)
            used[v] = 1;
    std::vector<int> keep;
    for (int v = 1; v <= h.n; ++v)
        if (used[v])
            keep.push_back(v);
    return induced_subhypergraph(h, keep);
}

KHypergraph induced_subhypergraph(const KHypergraph & h, const std::vector<int> & verts)
{
    std::vector<int> relabel(h.n + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        relabel[verts[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> edges;
    for (const auto & e : h.edges) {
        std::vector<int> img;
        img.reserve(e.size());
        bool inside = true;
        for (int v : e) {
            if (! relabel[v]) {
                inside = false;
                break;
            }
            img.push_back(relabel[v]);
        }
        if (inside)
            edges.push_back(std::move(img));
    }
    return KHypergraph::make(h.k, static_cast<int>(verts.size()), std::move(edges));
}

KHypergraph canonical_form(const KHypergraph & h)
{
    if (h.n > 9)
        throw HypergraphError("canonical_form: exhaustive relabelling supports n <= 9");
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> best;
    bool have = false;
    do {
        std::vector<std::vector<int>> relab;
        relab.reserve(h.edges.size());
        for (const auto & e : h.edges) {
            std::vector<int> img;
            img.reserve(e.size());
            for (int v : e)
                img.push_back(perm[v - 1]);
            std::sort(img.begin(), img.end());
            relab.push_back(std::move(img));
        }
        std::sort(relab.begin(), relab.end());
        if (! have || relab < best) {
            best = std::move(relab);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return KHypergraph::make(h.k, h.n, std::move(best));
}

long automorphism_count(const KHypergraph & h)
{
    if (h.n > 9)
        throw HypergraphError("automorphism_count: supports n <= 9");
    std::set<std::vector<int>> edge_set(h.edges.begin(), h.edges.end());
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        bool ok = true;
        for (const auto & e : h.edges) {
            std::vector<int> img;
            img.reserve(e.size());
            for (int v : e)
                img.push_back(perm[v - 1]);
            std::sort(img.begin(), img.end());
            if (! edge_set.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<int> degrees(const KHypergraph & h)
{
    std::vector<int> deg(h.n + 1, 0);
    for (const auto & e : h.edges)
        for (int v : e)
            ++deg[v];
    return deg;
}

int max_degree(const KHypergraph & h)
{
    auto deg = degrees(h);
    int best = 0;
    for (int v = 1; v <= h.n; ++v)
        best = std::max(best, deg[v]);
    return best;
}

KHypergraph complete_graph(int n)
{
    return complete_khypergraph(2, n);
}

KHypergraph complete_khypergraph(int k, int n)
{
    std::vector<std::vector<int>> edges;
    std::vector<int> pick(k);
    // enumerate k-subsets in lex order
    auto rec = [&](auto && self, int start, int depth) -> void {
        if (depth == k) {
            edges.push_back(pick);
            return;
        }
        for (int v = start; v <= n; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (n >= k)
        rec(rec, 1, 0);
    return KHypergraph::make(k, n, std::move(edges));
}

KHypergraph cycle_graph(int n)
{
    std::vector<std::vector<int>> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    if (n >= 3)
        edges.push_back({1, n});
    return KHypergraph::make(2, n, std::move(edges));
}

KHypergraph path_graph(int n)
{
    std::vector<std::vector<int>> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    return KHypergraph::make(2, n, std::move(edges));
}

KHypergraph single_edge(int k)
{
    std::vector<int> e(k);
    std::iota(e.begin(), e.end(), 1);
    return KHypergraph::make(k, k, {e});
}

KHypergraph empty_graph(int n)
{
    return KHypergraph::make(2, n, {});
}

} // namespace rcl
