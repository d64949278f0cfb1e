#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nodalis/intersect.hpp"
#include "nodalis/parse.hpp"
#include "nodalis/rational.hpp"

using namespace nodalis;

namespace {
Rational::Ctx q;

BivariatePoly<Rational> P(const std::string& s) { return parse_polynomial<Rational>(s, q); }

BranchPair<Rational> branches_of(const BivariatePoly<Rational>& f, std::size_t n = 12) {
    return std::get<BranchPair<Rational>>(factor_node_branches(f, n));
}

std::mt19937_64 rng(0x1C);

BivariatePoly<Rational> rand_nodal() {
    std::uniform_int_distribution<int> val(-4, 4), keep(0, 2);
    Rational a = q.from_int(val(rng)), b = q.from_int(val(rng));
    while (a == b) b = q.from_int(val(rng));
    auto x = BivariatePoly<Rational>::variable_x(q);
    auto y = BivariatePoly<Rational>::variable_y(q);
    auto f = (y - x.scale(a)) * (y - x.scale(b));
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            if (i + j >= 3 && keep(rng) == 0) f.add_term(i, j, q.from_int(val(rng)));
    return f;
}
} // namespace

TEST_CASE("branch multiplicities along the nodal cubic") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f);
    auto h = P("Y - X");
    REQUIRE(*branch_multiplicity(h, b.eta1, 8) == 2);
    REQUIRE(*branch_multiplicity(h, b.eta2, 8) == 1);
    auto h2 = P("Y - 2*X");
    REQUIRE(*branch_multiplicity(h2, b.eta1, 8) == 1);
    REQUIRE(*branch_multiplicity(h2, b.eta2, 8) == 1);
    REQUIRE_THROWS_AS(branch_multiplicity(h, b.eta1, 40), InsufficientPrecision);
}

TEST_CASE("intersection reports at the node") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f);
    SECTION("a branch tangent meets with total 3") {
        auto r = intersect_at_node(f, P("Y - X"), b, true);
        REQUIRE(*r.per_branch[0] == 2);
        REQUIRE(*r.per_branch[1] == 1);
        REQUIRE(*r.total == 3);
        REQUIRE_FALSE(r.containment);
        REQUIRE(*r.oracle_total == 3);
        REQUIRE(*r.contact == Contact::tangent_to_branch_1);
    }
    SECTION("a generic line meets with total 2") {
        auto r = intersect_at_node(f, P("Y - 2*X"), b, true);
        REQUIRE(*r.per_branch[0] == 1);
        REQUIRE(*r.per_branch[1] == 1);
        REQUIRE(*r.total == 2);
        REQUIRE(*r.oracle_total == 2);
        REQUIRE(*r.contact == Contact::transverse);
    }
    SECTION("a smooth tangent-to-nothing curve") {
        auto r = intersect_at_node(f, P("Y - X^2"), b, true);
        REQUIRE(*r.total == 2);
        REQUIRE(*r.contact == Contact::transverse);
        REQUIRE(*r.oracle_total == 2);
    }
    SECTION("deeper tangency: Y - X - X^2 against branch 1") {
        auto r = intersect_at_node(f, P("Y - X - X^2"), b);
        REQUIRE(*r.per_branch[0] == 2);
        REQUIRE(*r.per_branch[1] == 1);
        REQUIRE(*r.total == 3);
        REQUIRE(*r.contact == Contact::tangent_to_branch_1);
    }
    SECTION("H missing the node is flagged, not an error") {
        auto r = intersect_at_node(f, P("Y - X + 1"), b);
        REQUIRE_FALSE(r.through_node);
        REQUIRE(*r.total == 0);
        REQUIRE(*r.per_branch[0] == 0);
    }
    SECTION("containment: H a multiple of F") {
        auto r = intersect_at_node(f, P("(Y^2 - X^2 - X^3)*(1 + X)"), b);
        REQUIRE(r.containment);
        REQUIRE(r.branch_vanishes[0]);
        REQUIRE(r.branch_vanishes[1]);
        REQUIRE_FALSE(r.total);
    }
    SECTION("reducible F: one branch vanishing is flagged, not folded") {
        auto g = P("Y^2 - X^2");
        auto bg = branches_of(g, 14);
        auto r = intersect_at_node(g, P("(Y - X)*(1 + X)"), bg);
        REQUIRE_FALSE(r.containment);
        REQUIRE(r.branch_vanishes[0]);
        REQUIRE_FALSE(r.branch_vanishes[1]);
        REQUIRE(*r.per_branch[1] == 1);
        REQUIRE_FALSE(r.total);
    }
}

TEST_CASE("smooth contact classification") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f);
    REQUIRE(classify_smooth_contact(f, P("Y - X^2"), b) == Contact::transverse);
    REQUIRE(classify_smooth_contact(f, P("Y - X - X^2"), b) == Contact::tangent_to_branch_1);
    REQUIRE(classify_smooth_contact(f, P("Y + X + X^2"), b) == Contact::tangent_to_branch_2);

    auto lines = P("Y^2 - X^2");
    auto bl = branches_of(lines);
    REQUIRE(classify_smooth_contact(lines, P("Y"), bl) == Contact::transverse);

    REQUIRE_THROWS_AS(classify_smooth_contact(f, P("X^2 - Y^2"), b), PreconditionError);
    REQUIRE_THROWS_AS(classify_smooth_contact(f, P("Y - X + 1"), b), PreconditionError);
}

TEST_CASE("resultant oracle on the nodal cubic") {
    auto f = P("Y^2 - X^2 - X^3");
    REQUIRE(oracle_total_multiplicity(f, P("Y - X")) == 3);
    REQUIRE(oracle_total_multiplicity(f, P("Y - 2*X")) == 2);
    REQUIRE(oracle_total_multiplicity(f, P("Y - X^2")) == 2);
    REQUIRE_THROWS_AS(oracle_total_multiplicity(P("Y^2 - X^2"), P("Y - X")),
                      PreconditionError);
}

TEST_CASE("tangency is the argmin of the branch order over lines") {
    for (int i = 0; i < 20; ++i) {
        auto f = rand_nodal();
        auto b = branches_of(f, 8);
        auto x = BivariatePoly<Rational>::variable_x(q);
        auto y = BivariatePoly<Rational>::variable_y(q);
        for (Rational lambda :
             {b.slopes.first, b.slopes.second, q.zero(), q.one(), q.from_int(2)}) {
            auto line = y - x.scale(lambda);
            auto m1 = branch_multiplicity(line, b.eta1, 8);
            auto m2 = branch_multiplicity(line, b.eta2, 8);
            bool deep1 = !m1 || *m1 >= 2;
            bool deep2 = !m2 || *m2 >= 2;
            REQUIRE(deep1 == (lambda == b.slopes.first));
            REQUIRE(deep2 == (lambda == b.slopes.second));
        }
    }
}

TEST_CASE("branch totals equal the resultant order on random pairs") {
    int done = 0;
    while (done < 25) {
        auto f = rand_nodal();
        auto b = branches_of(f, 8);
        BivariatePoly<Rational> h(q);
        std::uniform_int_distribution<int> val(-4, 4), keep(0, 2);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                if (i + j >= 1 && keep(rng) == 0) h.add_term(i, j, q.from_int(val(rng)));
        if (h.is_zero()) continue;
        auto r = intersect_at_node(f, h, b, true);
        if (r.containment || r.branch_vanishes[0] || r.branch_vanishes[1] || !r.oracle_total)
            continue;
        REQUIRE(*r.total == *r.oracle_total);
        REQUIRE(*r.total >= 2);
        ++done;
    }
}
