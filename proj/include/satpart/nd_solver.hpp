#ifndef SATPART_ND_SOLVER_HPP
#define SATPART_ND_SOLVER_HPP

#include <optional>
#include <vector>

#include "satpart/graph.hpp"
#include "satpart/ilp.hpp"

namespace satpart {

enum class ClassKind { Clique, Independent, Singleton };

/// Partition of V(G) into same-type classes: u ~ v iff N(u)\{v} = N(v)\{u}.
/// Classes are ordered by smallest contained vertex, members ascending.
struct NdDecomposition {
    std::vector<std::vector<int>> classes;
    std::vector<ClassKind> kinds;

    int k() const { return static_cast<int>(classes.size()); }
    int size_of(int i) const { return static_cast<int>(classes[static_cast<size_t>(i)].size()); }
    /// Clique-kind classes (cliques and singletons) may not be split by a
    /// satisfactory partition and use the closed-neighbourhood constraints.
    bool clique_kind(int i) const { return kinds[static_cast<size_t>(i)] != ClassKind::Independent; }
};

/// Quotient graph: one node per type class, an edge where the two classes
/// are joined by a complete bipartite connection.
struct TypeGraph {
    std::vector<std::vector<int>> adj;  // sorted neighbour class ids

    int k() const { return static_cast<int>(adj.size()); }
};

enum class Placement : std::uint8_t { I1, I2, I3 };

/// Class id -> side assignment: I1 wholly in V1, I2 wholly in V2, I3 split.
using Guess = std::vector<Placement>;

/// Exact minimum type partition, computed by pairwise neighbourhood
/// comparison against class representatives.
NdDecomposition compute_type_classes(const Graph& g);

/// Builds the quotient graph and verifies the all-or-nothing join property
/// between every pair of classes (violations indicate a decomposition bug).
TypeGraph build_type_graph(const Graph& g, const NdDecomposition& d);

/// Streams guesses in mixed-radix counting order, first class fastest, with
/// digit order I1 < I2 < I3. Clique-kind classes only take I1/I2. The all-I1
/// and all-I2 assignments are skipped: they cannot produce a nontrivial
/// partition.
class GuessStream {
public:
    explicit GuessStream(const NdDecomposition& d);
    bool next(Guess& out);

private:
    std::vector<int> radix_;
    std::vector<int> digits_;
    bool done_ = false;
    bool advance();
};

/// Linear system over one variable per class (x_i = |V1 ∩ C_i|), with box
/// bounds fixing I1/I2 classes and one satisfaction row per class, two
/// nontriviality rows, and the balance row when requested. Row coefficients
/// on x-terms are 0 or ±2.
IlpSystem build_ilp(const NdDecomposition& d, const TypeGraph& h, const Guess& guess,
                    bool balanced);

struct NdStats {
    int k = 0;
    long long guesses_tried = 0;
};

/// FPT decision + witness parameterized by neighbourhood diversity. Tries
/// guesses in stream order; the first feasible system is materialized by
/// putting, per I3 class, the x_i lowest-numbered vertices into V1.
std::optional<Partition> solve_nd(const Graph& g, bool balanced, NdStats* stats = nullptr);

}  // namespace satpart

#endif
