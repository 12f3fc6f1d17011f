#include <random>

#include "doctest.h"
#include "cogdim/snf.hpp"
#include "oracles.hpp"

using namespace cogdim;

namespace {

SparseIntMatrix from_dense(const oracle::Dense& d) {
    long rows = (long)d.size(), cols = rows ? (long)d[0].size() : 0;
    SparseIntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (d[i][j] != 0) m.add(i, j, d[i][j]);
    return m;
}

oracle::Dense mat_mul(const oracle::Dense& a, const oracle::Dense& b) {
    oracle::Dense c(a.size(), std::vector<Int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool unimodular(const oracle::Dense& m) {
    auto f = oracle::dense_snf(m);
    if (f.size() != m.size()) return false;
    for (const Int& d : f)
        if (d != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("invariant factors of small matrices") {
    SUBCASE("hand elimination example") {
        // [[2,4],[6,8]]: gcd 2, det -16 -> diag(2, 8)? elimination gives (2, 4)
        oracle::Dense d{{2, 4}, {6, 8}};
        auto expect = oracle::dense_snf(d);
        auto got = smith_normal_form(from_dense(d));
        CHECK(got.factors == expect);
        CHECK(got.factors == std::vector<Int>{2, 4});
    }
    SUBCASE("identity") {
        oracle::Dense d{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        auto got = smith_normal_form(from_dense(d));
        CHECK(got.factors == std::vector<Int>{1, 1, 1});
    }
    SUBCASE("zero matrix") {
        SparseIntMatrix m(3, 4);
        auto got = smith_normal_form(m);
        CHECK(got.factors.empty());
        CHECK(got.rank() == 0);
    }
    SUBCASE("torsion chain") {
        oracle::Dense d{{2, 0, 0}, {0, 6, 0}, {0, 0, 10}};
        auto got = smith_normal_form(from_dense(d));
        CHECK(got.factors == std::vector<Int>{2, 2, 30});
    }
}

TEST_CASE("random matrices vs dense oracle, with transforms") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> dims(1, 8), vals(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = dims(rng), c = dims(rng);
        oracle::Dense d(r, std::vector<Int>(c));
        for (auto& row : d)
            for (auto& v : row) v = vals(rng);
        auto expect = oracle::dense_snf(d);
        auto plain = smith_normal_form(from_dense(d));
        REQUIRE(plain.factors == expect);

        auto with_t = smith_normal_form(from_dense(d), true);
        REQUIRE(with_t.factors == expect);
        // U * M * V must be exactly diag(factors)
        auto umv = mat_mul(mat_mul(*with_t.U, d), *with_t.V);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                Int want = (i == j && i < expect.size()) ? expect[i] : Int(0);
                REQUIRE(umv[i][j] == want);
            }
        // transforms unimodular
        CHECK(unimodular(*with_t.U));
        CHECK(unimodular(*with_t.V));
    }
}

TEST_CASE("divisibility chain property") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dims(1, 10), vals(-30, 30);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = dims(rng), c = dims(rng);
        SparseIntMatrix m(r, c);
        oracle::Dense d(r, std::vector<Int>(c, 0));
        for (int k = 0; k < 20; ++k) {
            std::size_t i = rng() % r, j = rng() % c;
            int v = vals(rng);
            d[i][j] += v;
        }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (d[i][j] != 0) m.add(i, j, d[i][j]);
        auto got = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < got.factors.size(); ++i)
            CHECK(got.factors[i + 1] % got.factors[i] == 0);
        CHECK(got.factors == oracle::dense_snf(d));
        // rank is transpose invariant
        SparseIntMatrix mt(c, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (d[i][j] != 0) mt.add(j, i, d[i][j]);
        CHECK(smith_normal_form(mt).factors == got.factors);
    }
}
