#include "qwmix/errors.hpp"
#include "qwmix/graph_spec.hpp"
#include "qwmix/graphs.hpp"
#include "qwmix/linalg.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace qwmix;

namespace {

std::vector<Graph> named_graphs()
{
    return {cycle(3), cycle(4), cycle(5), cycle(8), complete(1), complete(2), complete(5), hamming(3, 2),
            hamming(2, 3), hamming(2, 4), paley(5), paley(9), paley(13), paley(17),
            cartesian_product(complete(4), complete(4)), complement(cycle(7)), oracle::clebsch()};
}

} // namespace

TEST_CASE("cycle")
{
    CHECK(cycle(3).adj == complete(3).adj);
    const Graph c4 = cycle(4);
    CHECK(c4.n() == 4);
    CHECK((c4.adj.rowwise().sum().array() == 2).all());
    CHECK(c4.adjacent(0, 3));
    CHECK_FALSE(c4.adjacent(0, 2));
    CHECK(c4.label == "C_4");
    CHECK_THROWS_AS(cycle(2), InvalidArgument);
}

TEST_CASE("complete")
{
    CHECK(complete(2).adj.sum() == 2);
    CHECK(is_regular(complete(4)) == 3);
    CHECK(complete(1).n() == 1);
    CHECK_THROWS_AS(complete(0), InvalidArgument);
}

TEST_CASE("cartesian product")
{
    // Q_2 is the 4-cycle 0-1-3-2
    CHECK(cycle_length(cartesian_product(complete(2), complete(2))) == 4);
    CHECK(srg_params(cartesian_product(complete(3), complete(3))) == SrgParams{9, 4, 1, 2});
    CHECK(srg_params(cartesian_product(complete(4), complete(4))) == SrgParams{16, 6, 2, 2});

    const Graph g = cycle(5), h = complete(3);
    const Eigen::MatrixXi expected = kron(g.adj, Eigen::MatrixXi::Identity(3, 3)) + kron(Eigen::MatrixXi::Identity(5, 5), h.adj);
    CHECK(cartesian_product(g, h).adj == expected);
    // vertex (a, b) sits at a * |H| + b
    CHECK(cartesian_product(g, h).adjacent(0 * 3 + 1, 1 * 3 + 1));
}

TEST_CASE("hamming")
{
    CHECK(hamming(1, 5) == complete(5));
    const Graph q3 = hamming(3, 2);
    CHECK(q3.n() == 8);
    CHECK(is_regular(q3) == 3);
    CHECK(srg_params(hamming(2, 3)) == SrgParams{9, 4, 1, 2});
    CHECK_THROWS_AS(hamming(0, 2), InvalidArgument);
    CHECK_THROWS_AS(hamming(2, 1), InvalidArgument);
}

TEST_CASE("paley")
{
    CHECK(paley(5) == cycle(5));
    CHECK(srg_params(paley(9)) == SrgParams{9, 4, 1, 2});
    CHECK(srg_params(paley(13)) == SrgParams{13, 6, 2, 3});
    CHECK(is_regular(paley(13)) == 6);
    for (int q : {5, 13, 17, 29}) {
        CHECK(srg_params(paley(q)) == srg_params(complement(paley(q))));
    }
    CHECK_THROWS_AS(paley(7), InvalidArgument);   // 7 = 3 mod 4
    CHECK_THROWS_AS(paley(15), InvalidArgument);  // not a prime power we build
}

TEST_CASE("complement")
{
    CHECK(complement(complete(6)).adj.sum() == 0);
    CHECK(srg_params(complement(cycle(5))) == SrgParams{5, 2, 0, 1});
    CHECK(srg_params(complement(cartesian_product(complete(4), complete(4)))) == SrgParams{16, 9, 4, 6});
    for (const auto& g : named_graphs()) CHECK(complement(complement(g)) == g);
}

TEST_CASE("bipartition")
{
    const auto c4 = bipartition(cycle(4));
    REQUIRE(c4);
    CHECK(c4->first == std::vector<int>{0, 2});
    CHECK(c4->second == std::vector<int>{1, 3});
    CHECK_FALSE(bipartition(cycle(5)));

    const auto q3 = bipartition(hamming(3, 2));
    REQUIRE(q3);
    CHECK(q3->first.size() == 4);
    CHECK(q3->second.size() == 4);
    for (int v : q3->first) CHECK(std::popcount(static_cast<unsigned>(v)) % 2 == 0);

    // the two parts are independent sets and cover every vertex
    const Graph g = cartesian_product(cycle(6), cycle(4));
    const auto parts = bipartition(g);
    REQUIRE(parts);
    CHECK(parts->first.size() + parts->second.size() == static_cast<std::size_t>(g.n()));
    for (int u : parts->first)
        for (int v : parts->first) CHECK_FALSE(g.adjacent(u, v));
}

TEST_CASE("regularity and srg parameters")
{
    for (int n = 3; n < 10; ++n) CHECK(is_regular(cycle(n)) == 2);
    Eigen::MatrixXi star = Eigen::MatrixXi::Zero(4, 4);
    for (int v = 1; v < 4; ++v) star(0, v) = star(v, 0) = 1;
    const Graph k13 = from_adjacency(star, "K_1,3");
    CHECK_FALSE(is_regular(k13));

    CHECK(srg_params(cycle(5)) == SrgParams{5, 2, 0, 1});
    CHECK_FALSE(srg_params(cycle(6)));
    CHECK(srg_params(paley(9)) == SrgParams{9, 4, 1, 2});
    CHECK(srg_params(oracle::clebsch()) == SrgParams{16, 5, 0, 2});
    CHECK_FALSE(srg_params(complete(5)));

    for (const auto& g : named_graphs()) {
        if (const auto p = srg_params(g)) {
            CHECK(p->feasible());
        }
    }
}

TEST_CASE("srg parameter arithmetic")
{
    constexpr SrgParams rook{16, 6, 2, 2};
    CHECK(rook.feasible());
    CHECK(rook.primitive());
    CHECK(rook.complement() == SrgParams{16, 9, 4, 6});
    CHECK(rook.complement().complement() == rook);
    CHECK_FALSE(SrgParams{16, 6, 2, 3}.feasible());
    CHECK_FALSE(SrgParams{6, 3, 0, 3}.primitive());  // K_{3,3}
    CHECK_FALSE(SrgParams{4, 3, 2, 2}.primitive());  // K_4 written as an srg
}

TEST_CASE("cycle length")
{
    CHECK(cycle_length(cycle(7)) == 7);
    CHECK_FALSE(cycle_length(complete(4)));
    // two disjoint triangles are 2-regular but not a cycle
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(6, 6);
    a.block(0, 0, 3, 3) = complete(3).adj;
    a.block(3, 3, 3, 3) = complete(3).adj;
    CHECK_FALSE(cycle_length(from_adjacency(a, "2K_3")));
    // relabelled cycle
    const Graph p5 = paley(5);
    CHECK(cycle_length(complement(p5)) == 5);
}

TEST_CASE("validation")
{
    for (const auto& g : named_graphs()) CHECK(is_valid(g));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) CHECK(is_valid(oracle::random_graph(9, rng)));

    Eigen::MatrixXi loop = Eigen::MatrixXi::Zero(2, 2);
    loop(0, 0) = 1;
    CHECK_THROWS_AS(from_adjacency(loop, "loop"), InvalidArgument);
    Eigen::MatrixXi asym = Eigen::MatrixXi::Zero(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(from_adjacency(asym, "asym"), InvalidArgument);
    Eigen::MatrixXi weight = Eigen::MatrixXi::Zero(2, 2);
    weight(0, 1) = weight(1, 0) = 2;
    CHECK_THROWS_AS(from_adjacency(weight, "w"), InvalidArgument);
    CHECK_THROWS_AS(from_adjacency(Eigen::MatrixXi(0, 0), "empty"), InvalidArgument);
}

TEST_CASE("size cap")
{
    const int saved = size_cap();
    set_size_cap(10);
    CHECK_THROWS_AS(cycle(11), SizeLimitError);
    CHECK_NOTHROW(cycle(10));
    CHECK_THROWS_AS(cartesian_product(complete(4), complete(4)), SizeLimitError);
    set_size_cap(saved);
    CHECK(size_cap() == default_size_cap);
    CHECK_THROWS_AS(cycle(default_size_cap + 1), SizeLimitError);
}

TEST_CASE("graph spec strings")
{
    CHECK(parse_graph_spec("cycle:4") == cycle(4));
    CHECK(parse_graph_spec("complete:3") == complete(3));
    CHECK(parse_graph_spec("hamming:3,2") == hamming(3, 2));
    CHECK(parse_graph_spec("paley:13") == paley(13));
    CHECK(parse_graph_spec("product:complete:2|complete:2") == cartesian_product(complete(2), complete(2)));
    CHECK(parse_graph_spec("product:complete:2|product:complete:2|complete:2") == hamming(3, 2));
    CHECK(parse_graph_spec("complement:cycle:5") == complement(cycle(5)));

    CHECK_THROWS_AS(parse_graph_spec("cycle"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_spec("cycle:x"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_spec("wheel:5"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_spec("hamming:3"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_spec("product:cycle:4"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_spec("file:/nonexistent/graph.txt"), InvalidArgument);
}

TEST_CASE("adjacency files")
{
    std::istringstream in("0101\n1010\n0101\n1010\n");
    CHECK(read_adjacency(in, "x") == cycle(4));

    std::istringstream spaced("0 1 1\r\n1 0 1\n\n1 1 0\n");
    CHECK(read_adjacency(spaced, "x") == complete(3));

    std::istringstream ragged("01\n1\n");
    CHECK_THROWS_AS(read_adjacency(ragged, "x"), InvalidArgument);
    std::istringstream junk("0a\na0\n");
    CHECK_THROWS_AS(read_adjacency(junk, "x"), InvalidArgument);

    const auto path = std::filesystem::temp_directory_path() / "qwmix_test_c5.txt";
    {
        std::ofstream out(path);
        const Graph c5 = cycle(5);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) out << c5.adj(i, j);
            out << "\n";
        }
    }
    CHECK(parse_graph_spec("file:" + path.string()) == cycle(5));
    std::filesystem::remove(path);
}
