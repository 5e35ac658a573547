#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/repkit.hpp"

using namespace kron;

namespace {

std::vector<std::uint8_t> col(std::initializer_list<int> v) {
    std::vector<std::uint8_t> out;
    for (int x : v) out.push_back(static_cast<std::uint8_t>(x));
    return out;
}

Rep one_c1(int p = 2) {
    return build_one_c(KroneckerContext(3), p, 1, {col({1}), col({1}), col({0})});
}

Rep p1_plus_p1() {
    Rep R;
    R.n = 3;
    R.p = 2;
    R.a = 0;
    R.b = 2;
    R.mats.assign(3, FpMat(2, 0));
    return R;
}

}  // namespace

TEST_CASE("build_canonical shapes") {
    KroneckerContext ctx(3);
    Rep p1 = build_canonical(ctx, 2, CanonicalKind::P1);
    CHECK(p1.a == 0);
    CHECK(p1.b == 1);
    Rep p2 = build_canonical(ctx, 2, CanonicalKind::P2);
    CHECK(p2.a == 1);
    CHECK(p2.b == 3);
    for (int i = 0; i < 3; ++i) CHECK(p2.mats[static_cast<std::size_t>(i)].at(i, 0) == 1);
    Rep q0 = build_canonical(ctx, 2, CanonicalKind::Q0);
    CHECK(q0.a == 1);
    CHECK(q0.b == 0);
    Rep q1 = build_canonical(ctx, 2, CanonicalKind::Q1);
    CHECK(q1.a == 3);
    CHECK(q1.b == 1);
    CHECK_THROWS_AS(build_canonical(ctx, 4, CanonicalKind::P1), PreconditionError);
    Rep oc = one_c1();
    CHECK(oc.a == 1);
    CHECK(oc.b == 1);
    CHECK_THROWS_AS(build_one_c(ctx, 2, 1, {col({1}), col({1})}), PreconditionError);
    CHECK_THROWS_AS(build_one_c(ctx, 2, 1, {col({1, 0}), col({1}), col({0})}),
                    PreconditionError);
}

TEST_CASE("random_rep determinism, shape, range") {
    KroneckerContext ctx(3);
    Rep a = random_rep(ctx, 2, DimVec{2, 5}, 1);
    Rep b = random_rep(ctx, 2, DimVec{2, 5}, 1);
    REQUIRE(a.mats.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(a.mats[i] == b.mats[i]);
    Rep c = random_rep(ctx, 2, DimVec{2, 5}, 2);
    bool same = true;
    for (std::size_t i = 0; i < 3; ++i) same = same && a.mats[i] == c.mats[i];
    CHECK_FALSE(same);
    Rep d = random_rep(ctx, 2, DimVec{1, 1}, 7);
    for (const auto& m : d.mats) {
        CHECK(m.rows == 1);
        CHECK(m.cols == 1);
    }
    Rep e = random_rep(ctx, 3, DimVec{3, 6}, 42);
    for (const auto& m : e.mats)
        for (auto v : m.e) CHECK(v < 3);
}

TEST_CASE("endomorphism algebra dimensions") {
    KroneckerContext ctx(3);
    CHECK(endomorphisms(build_canonical(ctx, 2, CanonicalKind::P1)).size() == 1);
    CHECK(endomorphisms(one_c1()).size() == 1);
    CHECK(endomorphisms(p1_plus_p1()).size() == 4);
    CHECK(endomorphisms(build_canonical(ctx, 2, CanonicalKind::P2)).size() == 1);
}

TEST_CASE("is_indecomposable") {
    KroneckerContext ctx(3);
    CHECK(is_indecomposable(build_canonical(ctx, 2, CanonicalKind::P2)));
    CHECK(is_indecomposable(build_canonical(ctx, 2, CanonicalKind::P1)));
    CHECK(is_indecomposable(build_canonical(ctx, 2, CanonicalKind::Q0)));
    CHECK(is_indecomposable(build_canonical(ctx, 2, CanonicalKind::Q1)));
    CHECK(is_indecomposable(one_c1()));
    CHECK_FALSE(is_indecomposable(p1_plus_p1()));
    // all-zero (1,1): Q_0 + P_1
    Rep z = build_one_c(ctx, 2, 1, {col({0}), col({0}), col({0})});
    CHECK_FALSE(is_indecomposable(z));
    // (2,5) is an imaginary root: the decomposable locus has positive
    // codimension, so its share shrinks like 1/q.  Over F_2 roughly a third
    // of uniform samples are indecomposable; over F_5 nearly all are.
    int indec2 = 0, indec5 = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        if (is_indecomposable(random_rep(ctx, 2, DimVec{2, 5}, s))) ++indec2;
        if (is_indecomposable(random_rep(ctx, 5, DimVec{2, 5}, s))) ++indec5;
    }
    CHECK(indec2 >= 5);
    CHECK(indec2 <= 20);
    CHECK(indec5 >= 24);
}

TEST_CASE("subrepresentation lattice counts") {
    KroneckerContext ctx(3);
    CHECK(enumerate_submodules(build_canonical(ctx, 2, CanonicalKind::P1)).items.size() == 2);
    CHECK(enumerate_submodules(one_c1()).items.size() == 3);
    // P2 over F_2: 16 sink-side subspaces with U2=0 plus the whole module
    auto lat = enumerate_submodules(build_canonical(ctx, 2, CanonicalKind::P2));
    CHECK(lat.items.size() == 17);
    int full = 0;
    for (const auto& s : lat.items) {
        if (s.U2.rows == 1) {
            ++full;
            CHECK(s.U1.rows == 3);
        }
    }
    CHECK(full == 1);
    CHECK_THROWS_AS(enumerate_submodules(build_canonical(ctx, 2, CanonicalKind::P2), 5),
                    BudgetExceeded);
}

TEST_CASE("lattice inclusion") {
    auto lat = enumerate_submodules(one_c1());
    // sort order of all_subspaces puts 0 first and grows by dimension
    REQUIRE(lat.items.size() == 3);
    std::size_t zero = 0, mid = 0, whole = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        int t = lat.items[i].total();
        if (t == 0) zero = i;
        if (t == 1) mid = i;
        if (t == 2) whole = i;
    }
    CHECK(lat.includes(zero, mid));
    CHECK(lat.includes(mid, whole));
    CHECK(lat.includes(zero, whole));
    CHECK_FALSE(lat.includes(whole, mid));
}

TEST_CASE("restrict and quotient") {
    KroneckerContext ctx(3);
    Rep p2 = build_canonical(ctx, 2, CanonicalKind::P2);
    // a sink line inside P2
    SubRep line;
    line.U2 = FpMat(0, 1);
    line.U1 = FpMat(1, 3);
    line.U1.at(0, 0) = 1;
    REQUIRE(is_subrep(p2, line));
    Rep r = restrict_rep(p2, line);
    CHECK(r.a == 0);
    CHECK(r.b == 1);
    Rep q = quotient(p2, line);
    CHECK(q.a == 1);
    CHECK(q.b == 2);
    // quotient of the (1,1) module by its sink line is the simple (1,0)
    Rep oc = one_c1();
    SubRep socle;
    socle.U2 = FpMat(0, 1);
    socle.U1 = FpMat::identity(1);
    Rep qq = quotient(oc, socle);
    CHECK(qq.a == 1);
    CHECK(qq.b == 0);
    // not closed: a source line of P2 without the image
    SubRep bad;
    bad.U2 = FpMat::identity(1);
    bad.U1 = FpMat(0, 3);
    CHECK_FALSE(is_subrep(p2, bad));
    CHECK_THROWS_AS(quotient(p2, bad), PreconditionError);
}

TEST_CASE("stack_extension") {
    KroneckerContext ctx(3);
    Rep sub = one_c1();
    Rep quot = random_rep(ctx, 2, DimVec{2, 5}, 2);
    Rep X = stack_extension(sub, quot, 1);
    CHECK(X.a == 3);
    CHECK(X.b == 6);
    // the sub block really is a subrepresentation and the quotient matches
    SubRep U;
    U.U2 = FpMat(1, 3);
    U.U2.at(0, 0) = 1;
    U.U1 = FpMat(1, 6);
    U.U1.at(0, 0) = 1;
    REQUIRE(is_subrep(X, U));
    Rep r = restrict_rep(X, U);
    for (std::size_t i = 0; i < 3; ++i) CHECK(r.mats[i] == sub.mats[i]);
    Rep q = quotient(X, U);
    for (std::size_t i = 0; i < 3; ++i) CHECK(q.mats[i] == quot.mats[i]);
    Rep other = random_rep(ctx, 5, DimVec{2, 5}, 2);
    CHECK_THROWS_AS(stack_extension(sub, other, 1), PreconditionError);
}

TEST_CASE("json round-trip and rejection") {
    KroneckerContext ctx(3);
    for (std::uint64_t s = 0; s < 100; ++s) {
        Rep R = random_rep(ctx, s % 2 ? 2 : 5, DimVec{Int(1 + s % 3), Int(1 + (s / 3) % 4)}, s);
        Rep back = rep_from_json(rep_to_json(R));
        CHECK(back.n == R.n);
        CHECK(back.p == R.p);
        CHECK(back.a == R.a);
        CHECK(back.b == R.b);
        for (std::size_t i = 0; i < R.mats.size(); ++i) CHECK(back.mats[i] == R.mats[i]);
    }
    CHECK_THROWS_AS(rep_from_json(R"({"n":3,"p":4,"dim":[1,1],"mats":[[1],[0],[1]]})"),
                    SchemaError);
    CHECK_THROWS_AS(rep_from_json(R"({"n":3,"p":2,"dim":[1,1],"mats":[[1,0],[0],[1]]})"),
                    SchemaError);
    CHECK_THROWS_AS(rep_from_json(R"({"n":3,"p":2,"dim":[1,1],"mats":[[1],[0]]})"),
                    SchemaError);
    CHECK_THROWS_AS(rep_from_json(R"({"n":3,"p":2,"dim":[1,1],"mats":[[2],[0],[1]]})"),
                    SchemaError);
    CHECK_THROWS_AS(rep_from_json("not json"), SchemaError);
    CHECK_THROWS_AS(rep_from_json(R"({"n":3,"p":2})"), SchemaError);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
}
