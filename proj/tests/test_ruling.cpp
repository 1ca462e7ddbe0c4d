#include <doctest.h>

#include <algorithm>
#include <map>

#include "ltorus/errors.hpp"
#include "ltorus/ruling.hpp"

using namespace ltorus;

namespace {

const FrontDiagram kUnknot{0, {{FrontEventType::LeftCusp, 1}, {FrontEventType::RightCusp, 1}}};

MaslovPotential mu1(const FrontDiagram& d) { return *maslov(d, 1); }

}  // namespace

TEST_CASE("involutions") {
    CHECK(all_involutions(4, false).size() == 10);
    CHECK(all_involutions(4, true).size() == 3);
    CHECK(all_involutions(6, true).size() == 15);
    CHECK(all_involutions(0, true).size() == 1);
    Involution t = Involution::identity(4);
    t.img = {2, 1, 3, 4};
    Involution c = t.conj_adjacent(2);
    CHECK(c.img == std::vector<int>{3, 2, 1, 4});
}

TEST_CASE("basic fronts have no normal rulings") {
    for (int m = 1; m <= 5; ++m) {
        FrontDiagram am = basic_front(m);
        CHECK(enumerate_rulings(am, false, 1, mu1(am)).empty());
    }
}

TEST_CASE("unknot has one ruling") {
    auto rs = enumerate_rulings(kUnknot, false, 1, mu1(kUnknot));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].switches.empty());
    CHECK(rs[0].j(kUnknot) == -1);
    CHECK(ruling_polynomial(kUnknot, 1) == ZPoly::monomial(-1));
}

TEST_CASE("squares of basic fronts") {
    FrontDiagram a22 = a_lambda(Partition({2, 2}));
    CHECK(ruling_polynomial(a22, 1) == ZPoly::parse("2 + z^2"));

    FrontDiagram a55 = a_lambda(Partition({5, 5}));
    auto rs = enumerate_rulings(a55, false, 1, mu1(a55));
    int two_switches = 0;
    for (const Ruling& r : rs) two_switches += r.switches.size() == 2;
    CHECK(two_switches == 20);
}

TEST_CASE("printed product values") {
    CHECK(ruling_polynomial(a_lambda(Partition({2, 1, 1})), 1) == ZPoly::monomial(1));
    CHECK(ruling_polynomial(a_lambda(Partition({3, 2, 1})), 1) == ZPoly::parse("2*z + z^3"));
    CHECK(ruling_polynomial(a_lambda(Partition({2, 2, 1, 1})), 1) == ZPoly::parse("2 + 3*z^2"));
    CHECK(ruling_polynomial(a_lambda(Partition({2, 1})), 1).is_zero());
}

TEST_CASE("enumerated rulings satisfy the definition") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        FrontDiagram d = random_front(s, 7);
        for (int p : {1, 2}) {
            auto mu = maslov(d, p);
            REQUIRE(mu.has_value());
            for (bool gen : {false, true}) {
                auto rs = enumerate_rulings(d, gen, p, *mu);
                for (const Ruling& r : rs) {
                    std::string why;
                    CHECK_MESSAGE(validate_ruling(d, r, *mu, &why), why);
                }
                // normal rulings embed into the generalized ones
                if (gen) {
                    auto normal = enumerate_rulings(d, false, p, *mu);
                    CHECK(normal.size() <= rs.size());
                }
            }
        }
    }
}

TEST_CASE("strand limit") {
    FrontDiagram a99 = a_lambda(Partition({9, 9}));
    CHECK_THROWS_AS(enumerate_rulings(a99, false, 1, mu1(a99), 16), StrandLimitExceeded);
    CHECK(ruling_polynomial(a99, 1, mu1(a99), false, 18) == ruling_polynomial(a99, 1, mu1(a99), false, 18));
}

TEST_CASE("ruling polynomial is a Legendrian invariant") {
    int checked = 0;
    for (std::uint64_t s = 0; s < 300 && checked < 120; ++s) {
        FrontDiagram d = random_front(s, 6);
        if (component_count(d) != 1) continue;
        for (int p : {1, 2}) {
            ZPoly rp = ruling_polynomial(d, p);
            for (const FrontDiagram& n : legendrian_moves(d)) {
                CHECK(ruling_polynomial(n, p) == rp);
            }
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("2-graded rulings are 1-graded") {
    for (std::uint64_t s = 0; s < 80; ++s) {
        FrontDiagram d = random_front(s, 7);
        Orientation o = random_orientation(s, d);
        ZPoly diff = ruling_polynomial(d, 1) - ruling_polynomial_oriented(d, o);
        for (const auto& [e, c] : diff.terms()) CHECK(c > 0);
    }
}

TEST_CASE("decomposition of the two-switch square ruling") {
    FrontDiagram a22 = a_lambda(Partition({2, 2}));
    auto rs = enumerate_rulings(a22, false, 1, mu1(a22));
    bool found = false;
    for (const Ruling& r : rs) {
        if (r.switches.size() != 2) continue;
        found = true;
        Decomposition dec = decompose(a22, r);
        REQUIRE(dec.components.size() == 4);
        for (const DecompComponent& c : dec.components) {
            CHECK(std::abs(c.winding) == 1);
            CHECK(c.cusps == 0);
        }
    }
    CHECK(found);

    // a switchless ruling resolves nothing
    for (const Ruling& r : rs) {
        if (!r.switches.empty()) continue;
        Decomposition dec = decompose(a22, r);
        CHECK(dec.resolved == a22);
        CHECK(dec.components.size() == 2);
    }
}

TEST_CASE("decomposition pairing properties on products") {
    for (const Partition& lam :
         {Partition({5, 5}), Partition({3, 2, 1}), Partition({2, 2, 1, 1}), Partition({4, 3})}) {
        FrontDiagram d = a_lambda(lam);
        auto rs = enumerate_rulings(d, false, 1, mu1(d));
        for (const Ruling& r : rs) {
            Decomposition dec = decompose(d, r);
            int n = static_cast<int>(dec.components.size());
            for (int c = 0; c < n; ++c) {
                const DecompComponent& dc = dec.components[c];
                REQUIRE(dc.partner >= 0);
                CHECK(dec.components[dc.partner].partner == c);
                // paired components are isotopic basic fronts: equal winding
                CHECK(dec.components[dc.partner].winding == dc.winding);
                CHECK(dc.origin >= 0);
                // no component pairs with a piece of its own original factor
                CHECK(dec.components[dc.partner].origin != dc.origin);
                CHECK(dc.partner != c);
            }

            // block structure: within each original factor the blocks are
            // vertically consecutive runs ordered i-1, ..., 1, n, ..., i+1
            std::map<int, std::vector<int>> per_origin;  // origin -> partners top-down
            std::vector<int> order(n);
            for (int c = 0; c < n; ++c) order[c] = c;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return dec.components[a].top_seam_slot < dec.components[b].top_seam_slot;
            });
            for (int c : order)
                per_origin[dec.components[c].origin].push_back(
                    dec.components[dec.components[c].partner].origin);
            int factors = static_cast<int>(lam.parts().size());
            for (const auto& [i, partners] : per_origin) {
                // expected circular order of block labels below factor i
                std::vector<int> expect;
                for (int j = i - 1; j >= 0; --j) expect.push_back(j);
                for (int j = factors - 1; j > i; --j) expect.push_back(j);
                size_t pos = 0;
                for (int label : partners) {
                    while (pos < expect.size() && expect[pos] != label) ++pos;
                    if (pos == expect.size()) break;
                }
                bool ordered = pos < expect.size() || partners.empty();
                CHECK_MESSAGE(ordered, "blocks out of order within a factor");
            }
        }
    }
}

TEST_CASE("fixed strands of generalized rulings") {
    // fixed-point-free rulings produce the empty partition
    FrontDiagram a22 = a_lambda(Partition({2, 2}));
    auto rs = enumerate_rulings(a22, false, 1, mu1(a22));
    REQUIRE(!rs.empty());
    CHECK(gnr_to_lambda(a22, rs[0]).lambda == Partition());

    // the all-fixed ruling of a single strand winds once
    FrontDiagram a1 = basic_front(1);
    auto gs = enumerate_rulings(a1, true, 1, mu1(a1));
    REQUIRE(gs.size() == 1);
    CHECK(gnr_to_lambda(a1, gs[0]).lambda == Partition({1}));

    // every generalized ruling certifies a product with a normal ruling
    int witnessed = 0;
    for (std::uint64_t s = 0; s < 60 && witnessed < 25; ++s) {
        FrontDiagram d = random_front(s, 6);
        auto mu = maslov(d, 1);
        auto gnrs = enumerate_rulings(d, true, 1, *mu);
        if (gnrs.empty()) continue;
        GnrLambda gl = gnr_to_lambda(d, gnrs.front());
        FrontDiagram prod = product(d, a_lambda(gl.lambda));
        CHECK(has_ruling(prod, false, 1, *maslov(prod, 1)));
        ++witnessed;
    }
    CHECK(witnessed >= 25);
}

TEST_CASE("ruling json fields") {
    auto rs = enumerate_rulings(kUnknot, false, 1, mu1(kUnknot));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].rho.size() == 2);
    CHECK(rs[0].rho[0].img == std::vector<int>{2, 1});
    CHECK(rs[0].rho[1].img.empty());
}
