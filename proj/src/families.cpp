#include "satpart/families.hpp"

#include <algorithm>
#include <numeric>

#include "satpart/errors.hpp"

namespace satpart {

namespace {

void require_params(const std::vector<int>& params, size_t count, const char* what) {
    if (params.empty()) throw InputError("empty parameter list");
    if (count != 0 && params.size() != count)
        throw InputError(std::string(what) + ": expected " + std::to_string(count) +
                         " size parameter(s), got " + std::to_string(params.size()));
    for (int p : params)
        if (p <= 0) throw InputError(std::string(what) + ": sizes must be positive");
}

Graph multipartite(const std::vector<int>& sizes) {
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> start(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
    for (size_t i = 0; i < sizes.size(); ++i)
        for (size_t j = i + 1; j < sizes.size(); ++j)
            for (int u = start[i]; u < start[i + 1]; ++u)
                for (int v = start[j]; v < start[j + 1]; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate_family(Family family, const std::vector<int>& params) {
    switch (family) {
        case Family::Complete: {
            require_params(params, 1, "complete");
            int n = params[0];
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph::from_edges(n, edges);
        }
        case Family::Star: {
            require_params(params, 1, "star");
            int m = params[0];
            std::vector<std::pair<int, int>> edges;
            for (int l = 1; l <= m; ++l) edges.emplace_back(0, l);
            return Graph::from_edges(m + 1, edges);
        }
        case Family::Cycle: {
            require_params(params, 1, "cycle");
            int n = params[0];
            if (n < 3) throw InputError("cycle needs at least 3 vertices");
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(n - 1, 0);
            return Graph::from_edges(n, edges);
        }
        case Family::Path: {
            require_params(params, 1, "path");
            int n = params[0];
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return Graph::from_edges(n, edges);
        }
        case Family::CompleteBipartite: {
            require_params(params, 2, "complete bipartite");
            return multipartite(params);
        }
        case Family::CompleteMultipartite: {
            require_params(params, 0, "complete multipartite");
            return multipartite(params);
        }
    }
    throw InputError("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "complete" || s == "clique") return Family::Complete;
    if (s == "star") return Family::Star;
    if (s == "cycle") return Family::Cycle;
    if (s == "path") return Family::Path;
    if (s == "complete-bipartite" || s == "biclique") return Family::CompleteBipartite;
    if (s == "complete-multipartite") return Family::CompleteMultipartite;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Cycle: return "cycle";
        case Family::Path: return "path";
        case Family::CompleteBipartite: return "complete-bipartite";
        case Family::CompleteMultipartite: return "complete-multipartite";
    }
    return "?";
}

}  // namespace satpart
