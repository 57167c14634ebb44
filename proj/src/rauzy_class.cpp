#include "ietlab/rauzy_class.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace ietlab {

int RauzyDiagram::vertex_index(const Permutation& pi) const {
    const auto w = pi.canonical_word();
    for (int i = 0; i < size(); ++i)
        if (vertices[i].canonical_word() == w) return i;
    return -1;
}

bool RauzyDiagram::strongly_connected() const {
    // Out-degree 2 everywhere; check reachability in both edge directions.
    auto reach_all = [&](bool forward) {
        std::vector<std::vector<int>> adj(size());
        for (const auto& e : edges) {
            if (forward)
                adj[e.source].push_back(e.target);
            else
                adj[e.target].push_back(e.source);
        }
        std::vector<bool> seen(size(), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int n = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++n;
                    q.push(w);
                }
        }
        return n == size();
    };
    return reach_all(true) && reach_all(false);
}

std::string RauzyDiagram::to_edge_list() const {
    std::ostringstream out;
    for (const auto& e : edges)
        out << e.source << ' ' << kind_char(e.kind) << ' ' << e.target << '\n';
    return out.str();
}

std::string RauzyDiagram::to_json() const {
    std::ostringstream out;
    out << "{\"vertices\":[";
    for (int i = 0; i < size(); ++i) {
        if (i) out << ',';
        out << '"' << vertices[i].canonical_string() << '"';
    }
    out << "],\"edges\":[";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out << ',';
        out << "[" << edges[i].source << ",\"" << kind_char(edges[i].kind) << "\","
            << edges[i].target << "]";
    }
    out << "]}";
    return out.str();
}

RauzyDiagram rauzy_class(const Permutation& pi) {
    if (!pi.irreducible()) throw Reducible();
    RauzyDiagram diagram;
    std::map<std::vector<int>, int> index_of;

    auto canonical_rep = [](const Permutation& p) {
        return permutation_from_word(p.canonical_word());
    };

    auto intern = [&](const Permutation& p) {
        auto w = p.canonical_word();
        auto it = index_of.find(w);
        if (it != index_of.end()) return it->second;
        int idx = diagram.size();
        index_of.emplace(std::move(w), idx);
        diagram.vertices.push_back(canonical_rep(p));
        diagram.out.push_back({-1, -1});
        return idx;
    };

    std::queue<int> work;
    work.push(intern(pi));
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        if (diagram.out[v][0] != -1) continue;
        for (RauzyKind kind : {RauzyKind::top, RauzyKind::bottom}) {
            Permutation next = rauzy_move(diagram.vertices[v], kind);
            bool fresh = index_of.find(next.canonical_word()) == index_of.end();
            int t = intern(next);
            diagram.out[v][kind == RauzyKind::top ? 0 : 1] = t;
            diagram.edges.push_back({v, kind, t});
            if (fresh) work.push(t);
        }
    }
    return diagram;
}

IntMat omega(const Permutation& pi) {
    if (!pi.irreducible()) throw Reducible();
    const int d = pi.d();
    IntMat m(d, IntVec(d, 0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (pi.bottom(b) < pi.bottom(a) && pi.top(b) > pi.top(a))
                m[a][b] = 1;
            else if (pi.bottom(b) > pi.bottom(a) && pi.top(b) < pi.top(a))
                m[a][b] = -1;
        }
    return m;
}

SymplecticData genus_and_singularities(const Permutation& pi) {
    SymplecticData data;
    data.omega = omega(pi);
    const int d = pi.d();
    data.n_lattice = integer_kernel(data.omega);
    data.kernel_dim = static_cast<int>(data.n_lattice.size());
    data.num_singularities = data.kernel_dim + 1;
    const int twice_g = d - data.num_singularities + 1;
    if (twice_g % 2 != 0 || twice_g <= 0) throw InconsistentParity();
    data.genus = twice_g / 2;
    if (data.kernel_dim == 0) {
        // The image is all of Z^d.
        for (int i = 0; i < d; ++i) {
            IntVec e(d, 0);
            e[i] = 1;
            data.h_lattice.push_back(std::move(e));
        }
    } else {
        // Saturation of the column span of omega: the integer kernel of the
        // matrix whose rows are the kernel basis vectors.
        IntMat rows(data.kernel_dim, IntVec(d));
        for (int i = 0; i < data.kernel_dim; ++i) rows[i] = data.n_lattice[i];
        data.h_lattice = integer_kernel(rows);
    }
    if (static_cast<int>(data.h_lattice.size()) != 2 * data.genus)
        throw InconsistentParity("h-lattice rank disagrees with genus");
    return data;
}

bool in_zip_cone(const Permutation& pi, const std::vector<Rat>& tau) {
    const int d = pi.d();
    if (static_cast<int>(tau.size()) != d) throw DimensionMismatch();
    Rat sum = 0;
    for (int k = 0; k < d - 1; ++k) {
        sum += tau[pi.letter_at_top(k)];
        if (!(sum > 0)) return false;
    }
    sum = 0;
    for (int k = d - 1; k >= 1; --k) {
        sum += tau[pi.letter_at_bottom(k)];
        if (!(sum < 0)) return false;
    }
    return true;
}

RatVec roof_from_zip(const Permutation& pi, const std::vector<Rat>& tau) {
    const int d = pi.d();
    if (static_cast<int>(tau.size()) != d) throw DimensionMismatch();
    IntMat om = omega(pi);
    RatVec h(d, Rat(0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) h[a] -= Rat(om[a][b]) * tau[b];
    return h;
}

std::vector<Permutation> all_irreducible_permutations(int d) {
    std::vector<Permutation> out;
    std::vector<int> word(d);
    std::iota(word.begin(), word.end(), 0);
    do {
        Permutation pi = permutation_from_word(word);
        if (pi.irreducible()) out.push_back(pi);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace ietlab
