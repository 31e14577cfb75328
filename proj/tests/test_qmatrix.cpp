#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorb/qmatrix.hpp"

using namespace minorb;

TEST_CASE("Gaussian rational arithmetic") {
    Gauss i = Gauss::i();
    CHECK(i * i == Gauss(-1));
    Gauss a(mpq_class(1, 2), mpq_class(3));
    Gauss b(mpq_class(-2), mpq_class(1, 3));
    CHECK((a / b) * b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK((a * a.conj()).re() == a.norm2());
    CHECK_THROWS_AS(a / Gauss(0), std::domain_error);
    CHECK(Gauss(mpq_class(3, 4), mpq_class(-1)).str() == "3/4-1i");
}

TEST_CASE("exact square roots") {
    mpq_class r;
    CHECK(exact_sqrt(mpq_class(9, 4), r));
    CHECK(r == mpq_class(3, 2));
    CHECK_FALSE(exact_sqrt(mpq_class(2), r));
    CHECK_FALSE(exact_sqrt(mpq_class(-1), r));
}

TEST_CASE("kernel, rank and inverse") {
    QMatrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    CHECK(rank(m) == 1);
    QMatrix k = kernel(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());

    QMatrix s(2, 2);
    s(0, 0) = Gauss(1, 1);
    s(0, 1) = 2;
    s(1, 0) = Gauss(0, 1);
    s(1, 1) = 1;
    auto inv = inverse(s);
    REQUIRE(inv.has_value());
    CHECK(s * *inv == QMatrix::identity(2));
    CHECK_FALSE(inverse(m).has_value());
}

TEST_CASE("real kernel keeps the unknowns real") {
    // i*x = 0 forces x = 0 over R, and x + i*y = 0 forces x = y = 0.
    QMatrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = Gauss::i();
    CHECK(kernel(m).cols() == 1);
    CHECK(real_kernel(m).cols() == 0);
}

TEST_CASE("spans, intersections and definiteness") {
    QMatrix a(3, 2), b(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    b(1, 0) = 1;
    b(2, 1) = 1;
    QMatrix c = intersect(a, b);
    CHECK(c.cols() == 1);
    CHECK(c(1, 0) != Gauss(0));
    CHECK(contains_span(a, c));
    CHECK(same_span(a, column_basis(hstack(a, c))));

    QMatrix h(2, 2);
    h(0, 0) = 2;
    h(0, 1) = Gauss(0, 1);
    h(1, 0) = Gauss(0, -1);
    h(1, 1) = 1;
    CHECK(is_positive_definite(h));
    h(1, 1) = mpq_class(1, 2);
    CHECK_FALSE(is_positive_definite(h));
}
