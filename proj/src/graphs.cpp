#include "qwmix/graphs.hpp"

#include "qwmix/errors.hpp"
#include "qwmix/linalg.hpp"

#include <atomic>
#include <queue>

namespace qwmix {

namespace {

std::atomic<int> g_size_cap{default_size_cap};

void check_cap(long long n, const char* what)
{
    if (n > size_cap()) {
        throw SizeLimitError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the size cap of " +
                             std::to_string(size_cap()));
    }
}

} // namespace

int size_cap() { return g_size_cap.load(); }

void set_size_cap(int cap)
{
    if (cap < 1) throw InvalidArgument("size cap must be positive");
    g_size_cap.store(cap);
}

bool SrgParams::feasible() const
{
    if (n < 1 || k < 0 || lambda < 0 || mu < 0 || k > n - 1) return false;
    return static_cast<long long>(k) * (k - lambda - 1) == static_cast<long long>(n - k - 1) * mu;
}

bool SrgParams::primitive() const { return 0 < mu && mu < k && k < n - 1; }

SrgParams SrgParams::complement() const { return {n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lambda}; }

bool is_valid(const Graph& g)
{
    const auto& a = g.adj;
    if (a.rows() < 1 || a.rows() != a.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (a(i, i) != 0) return false;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if ((a(i, j) != 0 && a(i, j) != 1) || a(i, j) != a(j, i)) return false;
        }
    }
    return true;
}

void validate(const Graph& g)
{
    if (!is_valid(g)) throw InvalidArgument("adjacency of '" + g.label + "' is not a symmetric 0/1 matrix with zero diagonal");
}

Graph from_adjacency(AdjacencyMatrix adj, std::string label)
{
    check_cap(adj.rows(), "graph");
    Graph g{std::move(adj), std::move(label)};
    validate(g);
    return g;
}

Graph cycle(int n)
{
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    check_cap(n, "cycle");
    AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        a(j, (j + 1) % n) = 1;
        a((j + 1) % n, j) = 1;
    }
    return {a, "C_" + std::to_string(n)};
}

Graph complete(int n)
{
    if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
    check_cap(n, "complete");
    AdjacencyMatrix a = AdjacencyMatrix::Ones(n, n) - AdjacencyMatrix::Identity(n, n);
    return {a, "K_" + std::to_string(n)};
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    check_cap(static_cast<long long>(g.n()) * h.n(), "cartesian product");
    const AdjacencyMatrix ig = AdjacencyMatrix::Identity(g.n(), g.n());
    const AdjacencyMatrix ih = AdjacencyMatrix::Identity(h.n(), h.n());
    AdjacencyMatrix a = kron(g.adj, ih) + kron(ig, h.adj);
    return {a, "(" + g.label + " x " + h.label + ")"};
}

Graph hamming(int d, int q)
{
    if (d < 1 || q < 2) throw InvalidArgument("hamming graph needs d >= 1 and q >= 2");
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= q;
        check_cap(size, "hamming");
    }
    Graph out = complete(q);
    for (int i = 1; i < d; ++i) out = cartesian_product(out, complete(q));
    out.label = "H(" + std::to_string(d) + "," + std::to_string(q) + ")";
    return out;
}

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

Graph paley(int q)
{
    if (q == 9) {
        Graph g = cartesian_product(complete(3), complete(3));
        g.label = "Paley(9)";
        return g;
    }
    if (!is_prime(q) || q % 4 != 1) throw InvalidArgument("paley order must be 9 or a prime congruent to 1 mod 4");
    check_cap(q, "paley");
    std::vector<bool> residue(q, false);
    for (long long x = 1; x < q; ++x) residue[(x * x) % q] = true;
    AdjacencyMatrix a = AdjacencyMatrix::Zero(q, q);
    for (int j = 0; j < q; ++j) {
        for (int k = 0; k < q; ++k) {
            if (j != k && residue[((j - k) % q + q) % q]) a(j, k) = 1;
        }
    }
    return {a, "Paley(" + std::to_string(q) + ")"};
}

Graph complement(const Graph& g)
{
    const int n = g.n();
    AdjacencyMatrix a = AdjacencyMatrix::Ones(n, n) - AdjacencyMatrix::Identity(n, n) - g.adj;
    return {a, "co-" + g.label};
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const int n = g.n();
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<int> todo;
        todo.push(s);
        while (!todo.empty()) {
            const int u = todo.front();
            todo.pop();
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    todo.push(v);
                } else if (colour[v] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < n; ++v) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

std::optional<int> is_regular(const Graph& g)
{
    const Eigen::VectorXi deg = g.adj.rowwise().sum();
    if ((deg.array() == deg(0)).all()) return deg(0);
    return std::nullopt;
}

bool is_connected(const Graph& g)
{
    const int n = g.n();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (g.adjacent(u, v) && !seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

std::optional<SrgParams> srg_params(const Graph& g)
{
    const int n = g.n();
    const auto k = is_regular(g);
    if (!k || *k == 0 || *k == n - 1 || !is_connected(g)) return std::nullopt;

    const AdjacencyMatrix sq = g.adj * g.adj;
    std::optional<int> lambda, mu;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto& slot = g.adjacent(i, j) ? lambda : mu;
            if (!slot) slot = sq(i, j);
            else if (*slot != sq(i, j)) return std::nullopt;
        }
    }
    if (!lambda || !mu) return std::nullopt;
    // The loop above covers the off-diagonal part of A^2 = kI + lambda A + mu (J - I - A);
    // the diagonal equals k for any k-regular graph.
    return SrgParams{n, *k, *lambda, *mu};
}

std::optional<int> cycle_length(const Graph& g)
{
    const auto k = is_regular(g);
    if (!k || *k != 2 || g.n() < 3 || !is_connected(g)) return std::nullopt;
    return g.n();
}

} // namespace qwmix
