#include <catch2/catch_amalgamated.hpp>

#include "newpoints/families.hpp"

using namespace newpoints;

namespace {
void require_all_checks(const FamilyReport<Rat>& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.family << " / " << c.name << " : " << c.witness);
        REQUIRE(c.passed);
    }
}
}  // namespace

TEST_CASE("half-power radical curves verify across the small grid") {
    for (int ell : {7, 11, 19, 23}) {
        for (int m : {2, 3, 5, -2}) {
            auto rep = family_kummer_3mod4(ell, Rat(m));
            require_all_checks(rep);
            REQUIRE(rep.genus == (ell - 3) / 4);
            REQUIRE(rep.points.size() == 1);
        }
    }
    REQUIRE_THROWS_AS(family_kummer_3mod4(3, Rat(2)), domain_error);
    REQUIRE_THROWS_AS(family_kummer_3mod4(13, Rat(2)), domain_error);  // 13 = 1 mod 4
}

TEST_CASE("alpha radical curves and their decompositions verify") {
    for (int ell : {5, 7, 11, 13}) {
        for (int m : {2, 3, 5, -2}) {
            auto rep = family_kummer_alpha(ell, Rat(m));
            require_all_checks(rep);
            if (ell % 4 == 1) {
                REQUIRE(rep.hyper_second.has_value());
                REQUIRE(rep.hyper_second->genus == (ell - 3) / 4);
            }
        }
    }
    auto rep7 = family_kummer_alpha(7, Rat(2));
    REQUIRE(rep7.genus == 1);
}

TEST_CASE("the degree-11 cubic family verifies and has non-constant j") {
    for (int m : {2, 3, 5, -2}) {
        auto rep = family_kummer11(Rat(m));
        require_all_checks(rep);
        REQUIRE(rep.genus == 1);
        REQUIRE(rep.cubic.has_value());
    }
    REQUIRE_THROWS_AS(family_kummer11(Rat(1)), domain_error);
}

TEST_CASE("trinomial radical variants verify") {
    const std::array<std::pair<int, int>, 3> pairs{{{1, 1}, {2, 3}, {-1, 5}}};

    for (auto [a, b] : pairs) {
        require_all_checks(family_artin_schreier(11, Rat(a), Rat(b), ASVariant::CUBE));
        require_all_checks(family_artin_schreier(11, Rat(a), Rat(b), ASVariant::FOURTH));
        require_all_checks(family_artin_schreier(14, Rat(a), Rat(b), ASVariant::FOURTH_INV));
        require_all_checks(family_artin_schreier(12, Rat(a), Rat(b), ASVariant::L12));
        require_all_checks(family_artin_schreier(13, Rat(a), Rat(b), ASVariant::L13));
        require_all_checks(family_artin_schreier(10, Rat(a), Rat(b), ASVariant::G6P4));
        require_all_checks(family_artin_schreier(16, Rat(a), Rat(b), ASVariant::G6P4));
        require_all_checks(family_artin_schreier(11, Rat(a), Rat(b), ASVariant::G6P5));
        require_all_checks(family_artin_schreier(17, Rat(a), Rat(b), ASVariant::G6P5));
    }

    auto rep = family_artin_schreier(16, Rat(2), Rat(3), ASVariant::G6P4);
    REQUIRE(rep.genus == 2);

    REQUIRE_THROWS_AS(family_artin_schreier(12, Rat(0), Rat(1), ASVariant::L12), domain_error);
    REQUIRE_THROWS_AS(family_artin_schreier(11, Rat(1), Rat(1), ASVariant::L12), domain_error);
    REQUIRE_THROWS_AS(family_artin_schreier(12, Rat(1), Rat(1), ASVariant::CUBE), domain_error);
}

TEST_CASE("cyclotomic special family: shapes, orders, genus") {
    auto r19 = family_cyclotomic_special(19);
    require_all_checks(r19);
    REQUIRE(r19.shape == ShapeStatus::OK);
    REQUIRE(r19.genus == 2);

    auto r13 = family_cyclotomic_special(13);
    require_all_checks(r13);
    REQUIRE(r13.shape == ShapeStatus::OK);

    auto r11 = family_cyclotomic_special(11);
    require_all_checks(r11);

    auto r31 = family_cyclotomic_special(31);
    require_all_checks(r31);
    REQUIRE(r31.genus == 5);

    REQUIRE_THROWS_AS(family_cyclotomic_special(7), domain_error);
}

TEST_CASE("Fermat quotient points verify and the automorphism flag is right") {
    auto r72 = family_fermat_quotient(7, 2);
    require_all_checks(r72);
    REQUIRE(r72.genus == 3);
    bool flag72 = false;
    for (const auto& [k, v] : r72.params)
        if (k == "a^2+a+1=0_mod_ell") flag72 = (v == "true");
    REQUIRE(flag72);

    auto r51 = family_fermat_quotient(5, 1);
    require_all_checks(r51);
    bool flag51 = true;
    for (const auto& [k, v] : r51.params)
        if (k == "a^2+a+1=0_mod_ell") flag51 = (v == "true");
    REQUIRE(!flag51);

    require_all_checks(family_fermat_quotient(13, 3));
    REQUIRE_THROWS_AS(family_fermat_quotient(7, 6), domain_error);
}

TEST_CASE("odd-characteristic Kummer curves verify") {
    auto r341 = family_charp(3, 1, 4, 1);
    for (const auto& c : r341.checks) {
        INFO(c.name << " : " << c.witness);
        REQUIRE(c.passed);
    }
    REQUIRE(r341.genus == 1);

    auto r531 = family_charp(5, 1, 3, 1);
    for (const auto& c : r531.checks) REQUIRE(c.passed);

    // even genus exercises the half-power convention (d odd forces z = u^2)
    auto r352 = family_charp(3, 2, 5, 2);
    for (const auto& c : r352.checks) {
        INFO(c.name << " : " << c.witness);
        REQUIRE(c.passed);
    }
    REQUIRE(r352.genus == 2);

    REQUIRE_THROWS_AS(family_charp(3, 1, 4, 2), domain_error);  // both even
    REQUIRE_THROWS_AS(family_charp(3, 1, 5, 1), domain_error);  // 5 does not divide 3^1+1
    REQUIRE_THROWS_AS(family_charp(3, 1, 4, 3), domain_error);  // g = p
}

TEST_CASE("the square-root h-identity holds with the displayed coefficients") {
    for (int ell : {13, 19}) {
        auto rep = verify_h_identity(ell);
        require_all_checks(rep);
    }
    REQUIRE_THROWS_AS(verify_h_identity(11), domain_error);
}

TEST_CASE("the degree-60 compositum sum generates the full field") {
    auto rep = family_zeta60();
    require_all_checks(rep);
    REQUIRE(rep.genus == 1);
    REQUIRE(rep.points.size() == 3);
}
