#pragma once

#include "ietlab/exact.hpp"
#include "ietlab/permutation.hpp"

#include <array>
#include <string>
#include <vector>

namespace ietlab {

// Rauzy class of a permutation: vertices are canonical position words,
// each with one outgoing top edge and one bottom edge.
struct RauzyDiagram {
    struct Edge {
        int source;
        RauzyKind kind;
        int target;
    };

    std::vector<Permutation> vertices;  // canonical representatives
    std::vector<Edge> edges;            // 2 per vertex, top then bottom
    std::vector<std::array<int, 2>> out;  // out[v][kind] = target vertex

    int size() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const Permutation& pi) const;  // -1 if absent
    bool strongly_connected() const;

    std::string to_edge_list() const;
    std::string to_json() const;
};

RauzyDiagram rauzy_class(const Permutation& pi);

// Antisymmetric intersection form of the permutation, letter-indexed.
IntMat omega(const Permutation& pi);

struct SymplecticData {
    IntMat omega;
    int kernel_dim = 0;
    int genus = 0;
    int num_singularities = 0;
    // Basis (columns) of the saturated lattice spanned by the image of
    // omega inside Z^d; 2*genus columns.
    std::vector<IntVec> h_lattice;
    // Basis (columns) of the integer kernel of omega.
    std::vector<IntVec> n_lattice;
};

SymplecticData genus_and_singularities(const Permutation& pi);

// Membership test for the zipping cone: all proper prefix sums of tau in
// top order are positive and all proper suffix sums in bottom order are
// negative.
bool in_zip_cone(const Permutation& pi, const std::vector<Rat>& tau);

// Roof vector -Omega * tau associated with zipping data.
RatVec roof_from_zip(const Permutation& pi, const std::vector<Rat>& tau);

// All irreducible canonical words for a given d (top row fixed to identity).
std::vector<Permutation> all_irreducible_permutations(int d);

}  // namespace ietlab
