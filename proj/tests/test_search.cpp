#include <catch2/catch_amalgamated.hpp>

#include "confrb/formal.hpp"
#include "confrb/search.hpp"
#include "oracles.hpp"

using namespace confrb;

TEST_CASE("Virasoro admits only the zero operator at weight 0") {
    auto vir = ConformalAlgebra::vir();
    auto res = bounded_search(vir, GaussRat(0), 3,
                              {GaussRat(-1), GaussRat(0), GaussRat(1)});
    CHECK(res.lattice_size == 81);
    REQUIRE(res.hits.size() == 1);
    CHECK(mat_equal(res.hits[0].m, mat_zero(res.hits[0].ring, 1)));
}

TEST_CASE("projections of weight-0 hits are base RB operators") {
    auto sl2 = LieAlgebra::sl2();
    auto cur = ConformalAlgebra::cur_of(sl2);
    auto pat = parse_pattern(cur, "Re=0,Rh=diag");
    auto res = bounded_search(cur, GaussRat(0), 1,
                              {GaussRat(-1), GaussRat(0), GaussRat(1)}, pat);
    CHECK(res.lattice_size == 6561);
    CHECK(res.hits.size() > 1);
    for (auto& h : res.hits) {
        CHECK(vec_is_zero(mat_col(h.m, 0)));
        CHECK(check_rb(sl2, project_R0(h), GaussPoly::zero(h.ring)).ok());
    }
}

TEST_CASE("degenerate lattice") {
    auto cur = ConformalAlgebra::cur_of(LieAlgebra::sl2());
    auto res = bounded_search(cur, GaussRat(0), 0, {GaussRat(0)});
    REQUIRE(res.hits.size() == 1);
    CHECK(mat_equal(res.hits[0].m, mat_zero(res.hits[0].ring, 3)));
}

TEST_CASE("candidate cap") {
    auto cur = ConformalAlgebra::cur_of(LieAlgebra::sl2());
    try {
        bounded_search(cur, GaussRat(0), 3, {GaussRat(-1), GaussRat(0), GaussRat(1)},
                       {}, Integer(1000));
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::cap);
        CHECK(std::string(e.what()).find("candidates") != std::string::npos);
    }
}

TEST_CASE("pattern parsing") {
    auto cur = ConformalAlgebra::cur_of(LieAlgebra::sl2());
    auto pat = parse_pattern(cur, "Re=0,Rh=diag,norm0");
    CHECK(pat.zero_cols.count(0) == 1);
    CHECK(pat.diag_cols.count(2) == 1);
    CHECK(pat.const_zero.count({1, 1}) == 1);
    CHECK_THROWS_AS(parse_pattern(cur, "bogus"), Error);
    CHECK_THROWS_AS(parse_pattern(cur, "Rx=0"), Error);
    auto vir = ConformalAlgebra::vir();
    CHECK_THROWS_AS(parse_pattern(vir, "norm0"), Error);
}

TEST_CASE("weight-1 hits satisfy the transcribed system", "[.slow]") {
    auto cur = ConformalAlgebra::cur_of(LieAlgebra::sl2());
    auto pat = parse_pattern(cur, "Rf=0");
    auto res = bounded_search(cur, GaussRat(1), 1,
                              {GaussRat(-1), GaussRat(0), GaussRat(1)}, pat);
    CHECK(res.lattice_size == 531441);
    CHECK(!res.hits.empty());
    Ring w = Ring::make({var::lambda, var::del});
    auto sys = reference_rb_system(1);
    for (auto& h : res.hits) {
        auto fns = coefficient_functions(h);
        for (auto& eq : sys.eqs) CHECK(eq.expr.eval(fns, w).is_zero());
    }
}
