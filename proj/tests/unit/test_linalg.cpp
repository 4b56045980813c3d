#include <catch2/catch_amalgamated.hpp>

#include "grasscode/field.hpp"
#include "grasscode/linalg.hpp"
#include "grasscode/rng.hpp"

using namespace grasscode;

namespace {

Mat random_matrix(const Field& F, SplitMix64& rng, std::size_t r, std::size_t c) {
    Mat M(r, c);
    for (auto& e : M.a) e = F.element(rng.below(F.size()));
    return M;
}

}  // namespace

TEST_CASE("rref and rank over F_2") {
    Field F(2, 1);
    Mat M(3, 4);
    // rows: (1,0,0,1), (0,1,0,1), (1,1,1,1) -> rank 3
    std::uint32_t rows[3] = {0b1001, 0b1010, 0b1111};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) M.at(r, c) = Fe{rows[r] >> c & 1};
    REQUIRE(rank(F, M) == 3);
    Mat S(2, 3);  // dependent rows
    for (std::size_t c = 0; c < 3; ++c) {
        S.at(0, c) = Fe{1};
        S.at(1, c) = Fe{1};
    }
    REQUIRE(rank(F, S) == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    SplitMix64 rng(11);
    for (auto q : {2u, 3u}) {
        Field F(q, 1);
        for (int it = 0; it < 20; ++it) {
            Mat M = random_matrix(F, rng, 4, 7);
            auto kern = kernel_basis(F, M);
            REQUIRE(kern.size() == M.cols - rank(F, M));
            for (const auto& v : kern) {
                for (std::size_t r = 0; r < M.rows; ++r) {
                    Fe acc{0};
                    for (std::size_t c = 0; c < M.cols; ++c) acc = F.add(acc, F.mul(M.at(r, c), v[c]));
                    REQUIRE(acc == Fe{0});
                }
            }
        }
    }
}

TEST_CASE("matrix inverse") {
    SplitMix64 rng(13);
    Field F(3, 2);
    int invertible = 0;
    for (int it = 0; it < 40; ++it) {
        Mat M = random_matrix(F, rng, 4, 4);
        auto inv = invert(F, M);
        if (!inv) continue;
        ++invertible;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Fe acc{0};
                for (std::size_t l = 0; l < 4; ++l) acc = F.add(acc, F.mul(M.at(i, l), inv->at(l, j)));
                REQUIRE(acc == (i == j ? Fe{1} : Fe{0}));
            }
    }
    REQUIRE(invertible > 0);
    Mat Z(2, 2);
    REQUIRE_FALSE(invert(F, Z).has_value());
}

TEST_CASE("vector products and hamming helpers") {
    Field F(2, 2);
    Mat M(2, 3);
    M.at(0, 0) = Fe{1};
    M.at(0, 2) = Fe{1};
    M.at(1, 1) = Fe{1};
    std::vector<Fe> v{Fe{1}, Fe{1}};
    auto r = vec_mat(F, v, M);
    REQUIRE(r == std::vector<Fe>{Fe{1}, Fe{1}, Fe{1}});
    std::vector<Fe> w{Fe{1}, Fe{0}, Fe{1}};
    auto c = mat_vec(F, M, w);
    REQUIRE(c == std::vector<Fe>{Fe{0}, Fe{0}});
    REQUIRE(hamming_weight(r) == 3);
    REQUIRE(hamming_distance(r, std::vector<Fe>{Fe{1}, Fe{0}, Fe{1}}) == 1);
    REQUIRE_THROWS_AS(vec_mat(F, w, M), std::invalid_argument);
}
