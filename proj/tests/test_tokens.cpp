#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tokenalg/linalg.hpp"
#include "tokenalg/spectrum.hpp"
#include "tokenalg/token.hpp"

using namespace tokenalg;
using namespace tokenalg::testing;

TEST_CASE("k-subset enumeration is lexicographic") {
    auto subsets = k_subsets(4, 2);
    REQUIRE(subsets.size() == 6);
    std::vector<std::vector<int>> expected{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int i = 0; i < 6; ++i) {
        CHECK(subsets[i].elements == expected[i]);
        CHECK(subsets[i].rank == i);
    }
    CHECK(k_subsets(3, 0).size() == 1);
    CHECK(k_subsets(3, 0)[0].elements.empty());
    CHECK(k_subsets(5, 5).size() == 1);
    CHECK_THROWS_AS(k_subsets(4, 5), InputError);
}

TEST_CASE("subset rank and unrank are inverse") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto subsets = k_subsets(n, k);
            for (const auto& s : subsets) {
                CHECK(subset_rank(s.elements, n) == s.rank);
                CHECK(subset_unrank(s.rank, n, k) == s);
            }
        }
}

TEST_CASE("token graphs of complete graphs") {
    TokenGraph oct = token_graph(complete_graph(4), 2);
    CHECK(oct.graph.n == 6);
    CHECK(oct.graph.edges.size() == 12);
    auto adj = adjacency_lists(oct.graph);
    for (int v = 1; v <= 6; ++v) CHECK(adj[v].size() == 4);

    TokenGraph j52 = token_graph(complete_graph(5), 2);
    CHECK(j52.graph.n == 10);
    CHECK(j52.graph.edges.size() == 30);
    for (int v = 1; v <= 10; ++v) CHECK(adjacency_lists(j52.graph)[v].size() == 6);
}

TEST_CASE("1-token graph is the graph itself") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 6), rng);
        CHECK(token_graph(g, 1).graph == g);
    }
}

TEST_CASE("token graph edge count and degenerate k") {
    std::mt19937_64 rng(32);
    for (int n = 2; n <= 5; ++n)
        for (long long mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int k = 0; k <= std::min(3, n); ++k)
                CHECK(static_cast<long long>(token_graph(g, k).graph.edges.size()) ==
                      binomial(n - 2, k - 1) * static_cast<long long>(g.edges.size()));
        }
    for (int trial = 0; trial < 50; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, rng);
        for (int k = 1; k <= 3; ++k)
            CHECK(static_cast<long long>(token_graph(g, k).graph.edges.size()) ==
                  binomial(n - 2, k - 1) * static_cast<long long>(g.edges.size()));
    }
    CHECK(token_graph(paw(), 0).graph.n == 1);
    CHECK_THROWS_AS(token_graph(paw(), 5), InputError);
}

TEST_CASE("k and n-k token graphs agree under subset complementation") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % (n - 1));
        Graph g = random_graph(n, rng);
        TokenGraph fk = token_graph(g, k);
        TokenGraph fnk = token_graph(g, n - k);
        // map each k-subset to the rank of its complement
        std::vector<int> perm(fk.graph.n);
        for (const auto& s : fk.labels) {
            std::vector<int> comp;
            for (int v = 1; v <= n; ++v)
                if (std::find(s.elements.begin(), s.elements.end(), v) == s.elements.end()) comp.push_back(v);
            perm[s.rank] = subset_rank(comp, n) + 1;
        }
        CHECK(relabel(fk.graph, perm) == fnk.graph);
    }
}

TEST_CASE("token graphs preserve bipartiteness") {
    std::mt19937_64 rng(34);
    int checked = 0;
    while (checked < 30) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 4), rng);
        if (!is_bipartite(g)) continue;
        ++checked;
        for (int k = 1; k < g.n; ++k) CHECK(is_bipartite(token_graph(g, k).graph));
    }
}

TEST_CASE("binomial matrix") {
    Matrix b = binomial_matrix(4, 2);
    int expected[6][4] = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 4; ++c) CHECK(b(r, c) == expected[r][c]);

    CHECK(binomial_matrix(5, 1) == Matrix::identity(5));

    Matrix btb = b.transpose() * b;
    CHECK(btb == Rat(2) * Matrix::identity(4) + Matrix::all_ones(4, 4));
}

TEST_CASE("binomial Gram identity for all small parameters") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            Matrix b = binomial_matrix(n, k);
            Matrix expected = Rat(static_cast<long>(binomial(n - 2, k - 1))) * Matrix::identity(n) +
                              Rat(static_cast<long>(binomial(n - 2, k - 2))) * Matrix::all_ones(n, n);
            CHECK(b.transpose() * b == expected);
        }
}

TEST_CASE("intertwining identities") {
    CHECK(verify_intertwining(paw(), 2).all_pass());
    CHECK(verify_intertwining(complete_graph(4), 2).all_pass());
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(6, rng);
        IntertwiningReport rep = verify_intertwining(g, 3);
        CHECK(rep.all_pass());
        CHECK_FALSE(rep.first_mismatch.has_value());
    }
}

TEST_CASE("base characteristic polynomial divides the token one") {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, rng);
        for (int k = 2; k <= std::min(3, n - 1); ++k)
            CHECK(poly_divides(char_poly(laplacian(g)), char_poly(laplacian(token_graph(g, k).graph))));
    }
}

TEST_CASE("vector lift and projection") {
    Matrix b = binomial_matrix(4, 2);
    std::vector<Rat> ones(4, Rat(1));
    for (const Rat& v : lift_vector(b, ones)) CHECK(v == 2);

    // lift the eigenvector of L1(paw) for eigenvalue 4 and check it in L2
    Matrix l1 = laplacian(paw());
    Matrix shifted = l1;
    for (int i = 0; i < 4; ++i) shifted(i, i) -= 4;
    auto kernel = nullspace(shifted);
    REQUIRE(kernel.size() == 1);
    std::vector<Rat> lifted = lift_vector(b, kernel[0]);
    Matrix l2 = laplacian(token_graph(paw(), 2).graph);
    std::vector<Rat> image = l2 * lifted;
    for (size_t i = 0; i < lifted.size(); ++i) CHECK(image[i] == Rat(4) * lifted[i]);

    // vectors annihilated by the projection carry no eigenvector claim
    auto bt_kernel = nullspace(b.transpose());
    REQUIRE_FALSE(bt_kernel.empty());
    for (const Rat& v : project_vector(b, bt_kernel[0])) CHECK(v == 0);

    CHECK_THROWS(lift_vector(b, std::vector<Rat>(3, Rat(1))));
}
