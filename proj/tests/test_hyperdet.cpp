#include <doctest.h>

#include <string>
#include <vector>

#include "apolar/graded_form.hpp"
#include "apolar/hyperdet.hpp"
#include "oracles.hpp"

using namespace apolar;
using oracle::TestRng;

namespace {

Matrix<Rational> diag(const std::vector<long long>& d) {
    Matrix<Rational> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

// Random unimodular integer matrix: product of an upper and a lower
// unitriangular matrix, so det = 1 and the inverse is integral.
Matrix<Rational> unimodular(TestRng& rng, std::size_t n) {
    Matrix<Rational> u = Matrix<Rational>::identity(n);
    Matrix<Rational> l = Matrix<Rational>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            u.at(i, j) = rng.int_in(2);
            l.at(j, i) = rng.int_in(2);
        }
    return u * l;
}

// S T S^{-1} for unimodular S (the adjugate is the inverse when det = 1).
Matrix<Rational> conjugate(const Matrix<Rational>& s, const Matrix<Rational>& t) {
    return s * t * adjugate(s);
}

BinaryForm bf(int d, std::vector<long long> c) {
    std::vector<Rational> cc(c.begin(), c.end());
    return BinaryForm(d, std::move(cc));
}

// Independent verdict: same projective-root dichotomy, but with the Descartes
// bisection oracle doing the counting.
BergqvistVerdict oracle_verdict(const Pencil& p) {
    BinaryForm f = pencil_form(p);
    if (f.is_zero() || discriminant(f) == 0) return BergqvistVerdict::BOUNDARY;
    int roots = oracle::o_distinct_real_roots(f.affine_in_t());
    if (f.coeff(0) == 0) ++roots;
    return roots == p.n ? BergqvistVerdict::RANK_N : BergqvistVerdict::RANK_N_PLUS_1;
}

}  // namespace

TEST_CASE("pencil construction preconditions") {
    CHECK_THROWS_AS(Pencil(Matrix<Rational>(2, 3), Matrix<Rational>(2, 3), false),
                    shape_error&);
    CHECK_THROWS_AS(Pencil(Matrix<Rational>(2, 2), Matrix<Rational>(3, 3), false),
                    shape_error&);
    CHECK_THROWS_AS(Pencil(Matrix<Rational>(0, 0), Matrix<Rational>(0, 0), false),
                    dimension_error&);
    Matrix<Rational> ns(2, 2);
    ns.at(0, 1) = 1;
    CHECK_THROWS_AS(Pencil(Matrix<Rational>::identity(2), ns, true), symmetry_error&);
    CHECK_NOTHROW(Pencil(Matrix<Rational>::identity(2), ns, false));
}

TEST_CASE("pencil forms match the symbolic determinant") {
    TestRng rng(29);
    VariableBlock ring({2}, {"a1", "a2"});
    for (std::size_t n = 2; n <= 5; ++n)
        for (int t = 0; t < 4; ++t) {
            Matrix<Rational> t1(n, n), t2(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t1.at(i, j) = rng.int_in(4);
                    t2.at(i, j) = rng.int_in(4);
                }
            BinaryForm f = pencil_form(Pencil(t1, t2, false));

            Matrix<GradedForm> sym(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    sym.at(i, j) = GradedForm::polynomial(
                        ring, {{{1, 0}, t1.at(i, j)}, {{0, 1}, t2.at(i, j)}});
            GradedForm det = det_symbolic(sym);
            for (int i = 0; i <= static_cast<int>(n); ++i)
                CHECK(f.coeff(static_cast<std::size_t>(i)) ==
                      det.coeff({static_cast<int>(n) - i, i}));
        }

    CHECK(pencil_form(Pencil(Matrix<Rational>::identity(2), diag({1, -1}), true)) ==
          bf(2, {1, 0, -1}));
}

TEST_CASE("Cayley hyperdeterminant of 2x2x2 tensors") {
    TestRng rng(37);
    for (int t = 0; t < 30; ++t) {
        Matrix<Rational> t1(2, 2), t2(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                t1.at(i, j) = rng.int_in(5);
                t2.at(i, j) = rng.int_in(5);
            }
        Pencil p(t1, t2, false);
        Rational expect = oracle::o_cayley222(t1, t2);
        CHECK(hyperdet_222(p) == expect);
        Hyperdet2nn h = hyperdet_2nn(p);
        if (!h.degenerate) CHECK(h.value == expect);
    }

    CHECK(hyperdet_222(Pencil(Matrix<Rational>::identity(2), diag({1, -1}), true)) ==
          Rational(4));
    CHECK(hyperdet_222(Pencil(Matrix<Rational>(2, 2), Matrix<Rational>(2, 2), true)) ==
          Rational(0));
    CHECK_THROWS_AS(hyperdet_222(Pencil(Matrix<Rational>::identity(3),
                                        Matrix<Rational>::identity(3), true)),
                    shape_error&);
}

TEST_CASE("tangential pencils have vanishing hyperdeterminant") {
    TestRng rng(41);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 5; ++t) {
            std::vector<Rational> lambda;
            for (int i = 0; i + 1 < n; ++i) lambda.push_back(rng.int_in(5));
            Pencil p = tangential_join_sample(lambda);
            CHECK(p.n == n);
            Hyperdet2nn h = hyperdet_2nn(p);
            CHECK_FALSE(h.degenerate);
            CHECK(h.value == Rational(0));
        }

    // the sample's advertised structure
    Pencil p = tangential_join_sample({Rational(5), Rational(7)});
    CHECK(p.T1 == Matrix<Rational>::identity(3));
    Matrix<Rational> expect(3, 3);
    expect.at(0, 0) = 5;
    expect.at(0, 1) = 1;
    expect.at(1, 1) = 5;
    expect.at(2, 2) = 7;
    CHECK(p.T2 == expect);
    CHECK_FALSE(p.symmetric);

    CHECK_THROWS_AS(tangential_join_sample({}), dimension_error&);
    CHECK_THROWS_AS(symmetric_tangential_sample({}), dimension_error&);
}

TEST_CASE("symmetric tangential pencils acquire a square factor") {
    Pencil p2 = symmetric_tangential_sample({Rational(0)});
    CHECK(p2.symmetric);
    CHECK(pencil_form(p2) == bf(2, {-1, 0, 0}));
    CHECK(bergqvist_real_rank(p2) == BergqvistVerdict::BOUNDARY);

    Pencil p3 = symmetric_tangential_sample({Rational(2), Rational(-3)});
    CHECK(pencil_form(p3) == bf(3, {-1, -1, 8, 12}));  // -(a1+2a2)^2 (a1-3a2)
    CHECK(hyperdet_2nn(p3).value == Rational(0));
    CHECK(bergqvist_real_rank(p3) == BergqvistVerdict::BOUNDARY);
}

TEST_CASE("real rank of 2xnxn tensors by pencil root counting") {
    CHECK(bergqvist_real_rank(Pencil(Matrix<Rational>::identity(3), diag({1, 2, 3}),
                                     true)) == BergqvistVerdict::RANK_N);

    Matrix<Rational> rot(3, 3);
    rot.at(0, 0) = 1;
    rot.at(0, 1) = -2;
    rot.at(1, 0) = 2;
    rot.at(1, 1) = 1;
    rot.at(2, 2) = 5;
    CHECK(bergqvist_real_rank(Pencil(Matrix<Rational>::identity(3), rot, false)) ==
          BergqvistVerdict::RANK_N_PLUS_1);

    CHECK(bergqvist_real_rank(Pencil(Matrix<Rational>::identity(3), diag({1, 1, 2}),
                                     true)) == BergqvistVerdict::BOUNDARY);

    // a projective root at infinity still counts
    CHECK(bergqvist_real_rank(Pencil(diag({0, 1}), Matrix<Rational>::identity(2),
                                     true)) == BergqvistVerdict::RANK_N);

    CHECK(std::string(to_string(BergqvistVerdict::RANK_N)) == "RANK_N");
    CHECK(std::string(to_string(BergqvistVerdict::RANK_N_PLUS_1)) == "RANK_N_PLUS_1");
    CHECK(std::string(to_string(BergqvistVerdict::BOUNDARY)) == "BOUNDARY");
}

TEST_CASE("constructed pencil families sort into the expected rank classes") {
    TestRng rng(43);

    int rank_n_hits = 0;
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + static_cast<std::size_t>(t % 3);
        std::vector<long long> d;
        for (std::size_t i = 0; i < n; ++i)
            d.push_back(static_cast<long long>(i) * 7 + (t % 5) - 10 +
                        static_cast<long long>(i));
        Matrix<Rational> s = unimodular(rng, n);
        Pencil p(Matrix<Rational>::identity(n), conjugate(s, diag(d)), false);
        BergqvistVerdict v = bergqvist_real_rank(p);
        CHECK(v == BergqvistVerdict::RANK_N);
        CHECK(v == oracle_verdict(p));
        if (v == BergqvistVerdict::RANK_N) ++rank_n_hits;
    }
    CHECK(rank_n_hits == 50);

    int plus1_hits = 0;
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + static_cast<std::size_t>(t % 3);
        Matrix<Rational> block(n, n);
        long long a = (t % 4) - 2, b = 1 + (t % 3);  // b != 0: complex pair
        block.at(0, 0) = a;
        block.at(0, 1) = -b;
        block.at(1, 0) = b;
        block.at(1, 1) = a;
        for (std::size_t i = 2; i < n; ++i)
            block.at(i, i) = 20 + static_cast<long long>(i) * 3 + (t % 7);
        Matrix<Rational> s = unimodular(rng, n);
        Pencil p(Matrix<Rational>::identity(n), conjugate(s, block), false);
        BergqvistVerdict v = bergqvist_real_rank(p);
        CHECK(v == BergqvistVerdict::RANK_N_PLUS_1);
        CHECK(v == oracle_verdict(p));
        if (v == BergqvistVerdict::RANK_N_PLUS_1) ++plus1_hits;
    }
    CHECK(plus1_hits == 50);
}

TEST_CASE("2x2x2x2 hyperdeterminant via the pencil quartic") {
    SUBCASE("worked example") {
        Tensor2222 z;
        z.z[0] = z.z[1] = z.z[2] = z.z[4] = z.z[8] = z.z[15] = 1;
        Hyperdet2222 h = hyperdet_2222(z);
        CHECK_FALSE(h.degenerate);
        CHECK(h.p == UniPoly({Rational(0), Rational(4), Rational(1), Rational(2),
                              Rational(1)}));  // w^4 + 2w^3 + w^2 + 4w
        CHECK(h.value == Rational(-6656));
    }

    SUBCASE("the quartic interpolates the slicewise Cayley hyperdeterminant") {
        TestRng rng(53);
        for (int t = 0; t < 10; ++t) {
            Tensor2222 z;
            for (auto& e : z.z) e = rng.int_in(4);
            Hyperdet2222 h = hyperdet_2222(z);
            for (long long w = 0; w <= 4; ++w) {
                Matrix<Rational> t1(2, 2), t2(2, 2);
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        t1.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                            z.at(0, j, k, 0) + z.at(0, j, k, 1) * Rational(w);
                        t2.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                            z.at(1, j, k, 0) + z.at(1, j, k, 1) * Rational(w);
                    }
                CHECK(h.p.eval(Rational(w)) == oracle::o_cayley222(t1, t2));
            }
        }
    }

    SUBCASE("zero tensor is degenerate") {
        Tensor2222 z;
        Hyperdet2222 h = hyperdet_2222(z);
        CHECK(h.degenerate);
        CHECK(h.value == Rational(0));
        CHECK(h.p.is_zero());
    }
}

TEST_CASE("symbolic determinant of a structured 3x3 symbol matrix") {
    VariableBlock ring({3, 6}, {"a0", "a1", "a2", "l01", "l11", "l02", "l12", "l03", "l13"});
    auto term = [&](std::vector<int> e, long long c) {
        return std::make_pair(Exponents(e.begin(), e.end()), Rational(c));
    };
    auto poly = [&](std::vector<std::pair<Exponents, Rational>> t) {
        return GradedForm::polynomial(ring, t);
    };

    Matrix<GradedForm> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = poly({});
    m.at(0, 0) = poly({term({1, 0, 0, 0, 0, 0, 0, 0, 0}, 1)});  // a0
    m.at(1, 1) = poly({term({0, 1, 0, 0, 0, 0, 0, 0, 0}, 1)});  // a1
    m.at(2, 2) = poly({term({1, 0, 0, 1, 0, 0, 0, 0, 0}, 1),    // l01 a0
                       term({0, 1, 0, 0, 1, 0, 0, 0, 0}, 1),    // l11 a1
                       term({0, 0, 1, 0, 0, 0, 0, 0, 0}, 1)});  // a2
    m.at(0, 2) = poly({term({0, 0, 1, 0, 0, 1, 0, 0, 0}, 1)});  // l02 a2
    m.at(1, 2) = poly({term({0, 0, 1, 0, 0, 0, 1, 0, 0}, 1)});  // l12 a2
    m.at(2, 0) = poly({term({0, 0, 1, 0, 0, 0, 0, 1, 0}, 1)});  // l03 a2
    m.at(2, 1) = poly({term({0, 0, 1, 0, 0, 0, 0, 0, 1}, 1)});  // l13 a2

    GradedForm expected = poly({term({2, 1, 0, 1, 0, 0, 0, 0, 0}, 1),    // l01 a0^2 a1
                                term({1, 2, 0, 0, 1, 0, 0, 0, 0}, 1),    // l11 a0 a1^2
                                term({1, 1, 1, 0, 0, 0, 0, 0, 0}, 1),    // a0 a1 a2
                                term({1, 0, 2, 0, 0, 0, 1, 0, 1}, -1),   // -l12 l13 a0 a2^2
                                term({0, 1, 2, 0, 0, 1, 0, 1, 0}, -1)}); // -l02 l03 a1 a2^2

    GradedForm det = det_symbolic(m);
    CHECK(det == expected);
    CHECK(det == det_bareiss_form(m));
    CHECK(det == det_cofactor(m));
}
