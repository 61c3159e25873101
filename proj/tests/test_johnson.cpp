#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tokenalg/johnson.hpp"
#include "tokenalg/linalg.hpp"

using namespace tokenalg;
using namespace tokenalg::testing;

TEST_CASE("Johnson graphs as token graphs of complete graphs") {
    TokenGraph j42 = johnson_graph(4, 2);
    CHECK(j42.graph.n == 6);
    CHECK(j42.graph.edges.size() == 12);

    CHECK(johnson_graph(5, 1).graph == complete_graph(5));

    // J(5,2) is the complement of the Petersen graph: 3-regular with girth 5
    Graph petersen = complement(johnson_graph(5, 2).graph);
    auto adj = adjacency_lists(petersen);
    for (int v = 1; v <= 10; ++v) CHECK(adj[v].size() == 3);
    Matrix a = adjacency(petersen);
    CHECK((a * a * a).trace() == 0);            // no triangles
    Matrix a2 = a * a;
    bool has_c4 = false;
    for (int r = 0; r < 10 && !has_c4; ++r)
        for (int c = r + 1; c < 10; ++c)
            if (a2(r, c) > 1) has_c4 = true;    // two common neighbors close a 4-cycle
    CHECK_FALSE(has_c4);

    CHECK_THROWS_AS(johnson_graph(4, 4), InputError);
}

TEST_CASE("closed-form intersection arrays") {
    IntersectionArray j52 = johnson_intersection_array(5, 2);
    CHECK(j52.d == 2);
    CHECK(j52.b == std::vector<long long>{6, 2});
    CHECK(j52.c == std::vector<long long>{1, 4});

    IntersectionArray j42 = johnson_intersection_array(4, 2);
    CHECK(j42.b == std::vector<long long>{4, 1});
    CHECK(j42.c == std::vector<long long>{1, 4});
    CHECK(j42.a == std::vector<long long>{0, 2, 0});

    IntersectionArray k6 = johnson_intersection_array(6, 1);
    CHECK(k6.b == std::vector<long long>{5});
    CHECK(k6.c == std::vector<long long>{1});

    // parameters beyond the midpoint delegate to the complement size
    CHECK(johnson_intersection_array(5, 3) == johnson_intersection_array(5, 2));
}

TEST_CASE("quotient matrices") {
    Matrix q = quotient_matrix(johnson_intersection_array(4, 2));
    Matrix expected(3, 3);
    long rows[3][3] = {{0, 1, 0}, {4, 2, 4}, {0, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) expected(r, c) = rows[r][c];
    CHECK(q == expected);

    IntersectionArray trivial{0, {}, {0}, {}};
    CHECK(quotient_matrix(trivial) == Matrix(1, 1));

    // column sums are the degree
    for (int c = 0; c < 3; ++c) {
        Rat sum = 0;
        for (int r = 0; r < 3; ++r) sum += q(r, c);
        CHECK(sum == 4);
    }

    // quotient eigenvalues are amongst the adjacency eigenvalues
    Graph j52 = johnson_graph(5, 2).graph;
    CHECK(poly_divides(char_poly(quotient_matrix(johnson_intersection_array(5, 2))), char_poly(adjacency(j52))));
}

TEST_CASE("closed-form Laplacian spectra") {
    Spectrum j63 = johnson_laplacian_spectrum(6, 3);
    CHECK(j63.rational == std::vector<std::pair<Rat, int>>{{Rat(0), 1}, {Rat(6), 5}, {Rat(10), 9}, {Rat(12), 5}});

    Spectrum j42 = johnson_laplacian_spectrum(4, 2);
    CHECK(j42.rational == std::vector<std::pair<Rat, int>>{{Rat(0), 1}, {Rat(4), 3}, {Rat(6), 2}});

    Spectrum j84 = johnson_laplacian_spectrum(8, 4);
    CHECK(j84.rational == std::vector<std::pair<Rat, int>>{
                              {Rat(0), 1}, {Rat(8), 7}, {Rat(14), 20}, {Rat(18), 28}, {Rat(20), 14}});

    for (int n = 2; n <= 7; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto direct = exact_spectrum(laplacian(johnson_graph(n, k).graph));
            REQUIRE(direct);
            CHECK(*direct == johnson_laplacian_spectrum(n, k));
        }
}

TEST_CASE("Johnson distance") {
    auto subsets = k_subsets(4, 2);
    CHECK(johnson_distance(subsets[0], subsets[0]) == 0);
    CHECK(johnson_distance(subsets[0], subsets[5]) == 2);  // {1,2} vs {3,4}

    TokenGraph j63 = johnson_graph(6, 3);
    std::vector<std::vector<int>> dist(j63.graph.n);
    for (int v = 1; v <= j63.graph.n; ++v) dist[v - 1] = bfs_distances(j63.graph, v);
    for (int r = 0; r < j63.graph.n; ++r)
        for (int s = 0; s < j63.graph.n; ++s)
            CHECK(johnson_distance(j63.labels[r], j63.labels[s]) == dist[r][s]);
}

TEST_CASE("Gram decomposition of the binomial matrix") {
    MIdentityReport r42 = verify_M_identity(4, 2);
    CHECK(r42.m_identity);
    // M = 2 A_0 + A_1 at these parameters
    auto dm = distance_matrices(johnson_graph(4, 2).graph);
    CHECK(r42.m == Rat(2) * dm.mats[0] + dm.mats[1]);

    CHECK(verify_M_identity(6, 3).m_identity);
    MIdentityReport with_g = verify_M_identity(4, 2, paw());
    CHECK(with_g.all_pass());
}

TEST_CASE("Johnson Laplacian splits into the token pair") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        int k = 2;
        Graph g = random_graph(n, rng);
        Matrix lk = laplacian(token_graph(g, k).graph);
        Matrix lkbar = laplacian(token_graph(complement(g), k).graph);
        TokenGraph jnk = johnson_graph(n, k);
        CHECK(lk + lkbar == laplacian(jnk.graph));
        CHECK(laplacian(jnk.graph) ==
              Rat(static_cast<long>(k) * (n - k)) * Matrix::identity(jnk.graph.n) - adjacency(jnk.graph));
    }
}

TEST_CASE("intersection arrays by counting match the closed form") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            Graph j = johnson_graph(n, k).graph;
            auto counted = intersection_array_by_counting(j, distance_matrices(j));
            REQUIRE(counted);
            CHECK(*counted == johnson_intersection_array(n, k));
        }
}

TEST_CASE("Bose-Mesner dimension check") {
    BoseMesnerReport j52 = bose_mesner_check(johnson_graph(5, 2).graph);
    CHECK(j52.dim_adjacency_algebra == 3);
    CHECK(j52.dim_distance_algebra == 3);
    CHECK(j52.drg);
    CHECK(j52.intersection_ok);

    BoseMesnerReport pawrep = bose_mesner_check(paw());
    CHECK(pawrep.dim_adjacency_algebra == 4);
    CHECK(pawrep.dim_distance_algebra == 3);
    CHECK_FALSE(pawrep.drg);

    BoseMesnerReport k5 = bose_mesner_check(complete_graph(5));
    CHECK(k5.dim_adjacency_algebra == 2);
    CHECK(k5.drg);
}
