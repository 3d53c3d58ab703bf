#include "complicial/orientals.hpp"

#include <doctest.h>

using namespace complicial;
using namespace complicial::orientals;

TEST_SUITE_BEGIN("orientals");

namespace {

Budget test_budget() {
    Budget b;
    b.limit = 50'000'000;
    return b;
}

std::size_t count_dim(const std::vector<CellMP>& cells, int d) {
    std::size_t n = 0;
    for (const auto& c : cells)
        if (c.dim() == d) ++n;
    return n;
}

} // namespace

TEST_CASE("odd and even boundaries") {
    CHECK(odd_boundary(face_set({"012"})) == face_set({"02"}));
    CHECK(even_boundary(face_set({"012"})) == face_set({"01", "12"}));
    CHECK(odd_boundary(face_set({"01"})) == face_set({"0"}));
    CHECK(even_boundary(face_set({"01"})) == face_set({"1"}));
    CHECK(odd_boundary(face_set({"01234"})) == face_set({"0234", "0124"}));
    CHECK(even_boundary(face_set({"01234"})) == face_set({"1234", "0134", "0123"}));
    // vertices contribute nothing
    CHECK(odd_boundary(face_set({"3"})).empty());
}

TEST_CASE("well-formedness") {
    CHECK(is_well_formed(face_set({"01", "12"})).well_formed);
    SUBCASE("common source") {
        auto r = is_well_formed(face_set({"01", "02"}));
        CHECK(!r.well_formed);
        CHECK(r.reason.find("source") != std::string::npos);
    }
    SUBCASE("two vertices") {
        CHECK(!is_well_formed(face_set({"0", "1"})).well_formed);
    }
    SUBCASE("the source set of the 4-atom is well-formed") {
        auto m = face_set({"01234", "0124", "0234", "012", "023", "034", "04", "0"});
        CHECK(is_well_formed(m).well_formed);
    }
}

TEST_CASE("the move relation") {
    SUBCASE("a single vertex moves itself to itself") {
        auto v = face_set({"0"});
        CHECK(moves(v, v, v));
    }
    SUBCASE("S = {012} moves {02} to {01,12}") {
        CHECK(moves(face_set({"012"}), face_set({"02"}), face_set({"01", "12"})));
    }
    SUBCASE("the 4-atom pair moves under both sides") {
        auto m = face_set({"01234", "0124", "0234", "012", "023", "034", "04", "0"});
        auto p = face_set(
            {"01234", "0123", "0134", "1234", "124", "234", "014", "01", "12", "23", "34", "4"});
        CHECK(moves(m, m, p));
        CHECK(moves(p, m, p));
    }
}

TEST_CASE("atoms") {
    CHECK(atom(parse_face("0")) == CellMP{face_set({"0"}), face_set({"0"})});
    CHECK(atom(parse_face("012")) ==
          CellMP{face_set({"012", "02", "0"}), face_set({"012", "01", "12", "2"})});
    SUBCASE("atom(01234) expands to the known source and target sets") {
        auto a = atom(parse_face("01234"));
        CHECK(a.m == face_set({"01234", "0124", "0234", "012", "023", "034", "04", "0"}));
        CHECK(a.p == face_set({"01234", "0123", "0134", "1234", "124", "234", "014", "01",
                               "12", "23", "34", "4"}));
        CHECK(is_cell(a));
    }
}

TEST_CASE("sources, targets and composition") {
    auto top2 = atom(parse_face("012"));
    SUBCASE("s_k is the identity at or above the cell dimension") {
        CHECK(source_k(top2, 2) == top2);
        CHECK(source_k(top2, 5) == top2);
    }
    SUBCASE("boundaries of the 2-atom") {
        CHECK(source_k(top2, 1) == CellMP{face_set({"02", "0"}), face_set({"02", "2"})});
        CHECK(target_k(top2, 1) ==
              CellMP{face_set({"01", "12", "0"}), face_set({"01", "12", "2"})});
        CHECK(source_k(top2, 0) == CellMP{face_set({"0"}), face_set({"0"})});
        CHECK(target_k(top2, 0) == CellMP{face_set({"2"}), face_set({"2"})});
    }
    SUBCASE("s_3 of the 4-atom, per the formula") {
        auto s3 = source_k(atom(parse_face("01234")), 3);
        CHECK(s3.m == face_set({"0124", "0234", "012", "023", "034", "04", "0"}));
        CHECK(s3.p == face_set({"0124", "0234", "124", "234", "014", "01", "12", "23",
                                "34", "4"}));
        CHECK(is_cell(s3));
    }
    SUBCASE("composing the edge atoms of O_2") {
        auto c = compose_k(atom(parse_face("12")), atom(parse_face("01")), 0);
        CHECK(c == CellMP{face_set({"01", "12", "0"}), face_set({"01", "12", "2"})});
        CHECK(is_cell(c));
        CHECK_THROWS_AS(compose_k(atom(parse_face("01")), atom(parse_face("12")), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("cell names round-trip") {
    auto a = atom(parse_face("012"));
    CHECK(parse_cell(cell_name(a)) == a);
    CHECK(cell_name(a) == "0,02,012|2,01,12,012");
}

TEST_CASE("building the small orientals") {
    auto budget = test_budget();
    SUBCASE("O_2 has 3, 4, 1 cells by dimension, eight in total") {
        auto o = build_oriental(2, budget);
        CHECK(o.cells.size() == 8);
        CHECK(count_dim(o.cells, 0) == 3);
        CHECK(count_dim(o.cells, 1) == 4);
        CHECK(count_dim(o.cells, 2) == 1);
        CHECK(validate(*o.category).empty());
        CHECK(o.category->is_n_category(2));
        CHECK(o.top_cell() == atom(parse_face("012")));
    }
    SUBCASE("O_3's 1-truncation has eleven 1-cells") {
        auto o = build_oriental(3, budget);
        CHECK(count_dim(o.cells, 1) == 11);
        CHECK(count_dim(o.cells, 0) == 4);
        CHECK(validate(*o.category).empty());
        CHECK(o.top_cell().dim() == 3);
    }
    SUBCASE("O_0 and O_1 are tiny") {
        CHECK(build_oriental(0, budget).cells.size() == 1);
        auto o1 = build_oriental(1, budget);
        CHECK(o1.cells.size() == 3);
    }
}

TEST_CASE("O_4 assembles into a valid 4-category with a unique 4-cell") {
    auto budget = test_budget();
    auto o = build_oriental(4, budget);
    CHECK(o.cells.size() == 91);
    CHECK(validate(*o.category).empty());
    CHECK(o.category->is_n_category(4));
    CHECK(!o.category->is_n_category(3));
    CHECK(o.category->cell_dimension(cell_name(o.top_cell())) == 4);
    CHECK(o.top_cell() == atom(parse_face("01234")));
}

TEST_CASE("search and closure agree") {
    auto budget = test_budget();
    for (int n = 0; n <= 3; ++n) {
        auto o = build_oriental(n, budget);
        auto searched = enumerate_cells_search(n, budget);
        std::set<CellMP> closed(o.cells.begin(), o.cells.end());
        CHECK(closed == searched);
        // every cell satisfies the cell condition and M_top = P_top
        for (const auto& c : o.cells) {
            CHECK(is_cell(c));
            CHECK(elements_of_dim(c.m, c.dim()) == elements_of_dim(c.p, c.dim()));
        }
        // every atom appears
        for (Face f = 1; f < (Face{1} << (n + 1)); ++f)
            CHECK(searched.count(atom(f)) == 1);
    }
}

TEST_CASE("the oriental cap rejects infeasible indices") {
    auto budget = test_budget();
    CHECK(oriental_cap() >= 4);
    CHECK_THROWS_AS(build_oriental(oriental_cap() + 1, budget), std::invalid_argument);
    CHECK_THROWS_AS(build_oriental(-1, budget), std::invalid_argument);
}

TEST_CASE("induced functors relabel along injective monotone maps") {
    auto budget = test_budget();
    auto o1 = build_oriental(1, budget);
    auto o2 = build_oriental(2, budget);
    SUBCASE("the identity induces the identity") {
        auto f = induced_functor(MonotoneMap::identity(2), o2, o2);
        for (const auto& c : o2.cells) CHECK(f.apply(cell_name(c)) == cell_name(c));
    }
    SUBCASE("delta_1 sends the edge atom to atom(02)") {
        auto f = induced_functor(MonotoneMap::coface(2, 1), o1, o2);
        CHECK(f.apply(cell_name(atom(parse_face("01")))) ==
              cell_name(atom(parse_face("02"))));
    }
    SUBCASE("non-injective operators are rejected") {
        CHECK_THROWS_AS(induced_functor(MonotoneMap::codegeneracy(1, 0), o2, o1),
                        std::invalid_argument);
    }
    SUBCASE("the target of O_2's 2-cell relabels to a valid cell of O_3") {
        auto o3 = build_oriental(3, budget);
        auto f = induced_functor(MonotoneMap::coface(3, 0), o2, o3);
        auto image = parse_cell(f.apply(cell_name(target_k(atom(parse_face("012")), 1))));
        CHECK(is_cell(image));
    }
}

TEST_SUITE_END();
