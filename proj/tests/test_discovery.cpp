#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "rcn/rcn.hpp"

using namespace rcn;

namespace {

// discovery incidences restricted to one class; each step discovers at most
// one a and one c, so this also counts steps
long long discoveries_for(const StepClassification& sc, ElemClass cls) {
    long long total = 0;
    for (const StepTag& tag : sc.tags)
        for (int label : tag.discovered)
            if (sc.labeling.role.at(label).first == cls) ++total;
    return total;
}

long long double_count(const StepClassification& sc) {
    long long total = 0;
    for (const StepTag& tag : sc.tags) total += tag.double_discovery ? 1 : 0;
    return total;
}

bool tight_upto(const HalfPeriod& hp, int k) {
    CriticalProfile cp = critical_profile(hp);
    for (int j = 1; j <= k; ++j)
        if (cp.cumulative(j) != 3 * binom2(j + 1)) return false;
    return true;
}

void check_counting_properties(const HalfPeriod& hp, int k) {
    StepClassification sc = classify_steps(hp, k);
    CAPTURE(hp.n, k);
    if (!sc.any_confined) {
        REQUIRE(discoveries_for(sc, ElemClass::a) == 2 * binom2(k + 1));
        REQUIRE(discoveries_for(sc, ElemClass::c) == 2 * binom2(k + 1));
        REQUIRE(double_count(sc) <= binom2(k + 1));
        REQUIRE(critical_profile(hp).cumulative(k) >= 3 * binom2(k + 1));
        // liberation preserves index order within each class
        int last_a = 0, last_c = 0;
        for (int label : sc.liberation.order) {
            auto [cls, idx] = sc.labeling.role.at(label);
            int& last = cls == ElemClass::a ? last_a : last_c;
            REQUIRE(idx > last);
            last = idx;
        }
    }
    for (const StepTag& tag : sc.tags)
        if (tag.double_discovery) REQUIRE(tag.discovered.size() == 2);

    PerfectnessReport rep = check_perfect(sc);
    if (rep.decided()) {
        REQUIRE(rep.perfect() == tight_upto(hp, k));
        if (rep.perfect())
            REQUIRE((consecutive_in_liberation(sc, ElemClass::a) ||
                     consecutive_in_liberation(sc, ElemClass::c)));
    } else {
        REQUIRE(rep.detail == "confined steps present; perfectness undecided");
    }
}

}  // namespace

TEST_CASE("k labeling roles") {
    HalfPeriod sq = from_point_set(fixtures::unit_square());
    KLabeling lab = make_k_labeling(sq, 1);
    CHECK(lab.m == 2);
    CHECK(lab.role.at(1) == std::pair{ElemClass::a, 1});
    CHECK(lab.role.at(2) == std::pair{ElemClass::b, 1});
    CHECK(lab.role.at(3) == std::pair{ElemClass::b, 2});
    CHECK(lab.role.at(4) == std::pair{ElemClass::c, 1});
    CHECK_THROWS_AS(make_k_labeling(sq, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_k_labeling(sq, 2), std::invalid_argument);

    HalfPeriod odd{5, {9, 7, 5, 3, 1}, {}};  // labeling reads only the initial order
    KLabeling lab2 = make_k_labeling(odd, 2);
    CHECK(lab2.role.at(9) == std::pair{ElemClass::a, 2});
    CHECK(lab2.role.at(7) == std::pair{ElemClass::a, 1});
    CHECK(lab2.role.at(5) == std::pair{ElemClass::b, 1});
    CHECK(lab2.role.at(3) == std::pair{ElemClass::c, 1});
    CHECK(lab2.role.at(1) == std::pair{ElemClass::c, 2});
}

TEST_CASE("unit square step classification at k = 1") {
    HalfPeriod hp = from_point_set(fixtures::unit_square());
    StepClassification sc = classify_steps(hp, 1);

    // a position-1 exit is the only compulsory A-gate for a_1: the first step
    // discovers and frees it
    REQUIRE(sc.tags.size() == 6);
    CHECK(sc.tags[0].zone == Zone::A);
    CHECK(sc.tags[0].discovered == std::vector<int>{1});
    CHECK(sc.liberation.order == std::vector<int>{1, 4});

    std::vector<Zone> zones{Zone::A, Zone::C, Zone::B, Zone::A, Zone::C, Zone::B};
    std::vector<std::vector<int>> disc{{1}, {4}, {}, {4}, {1}, {}};
    for (int t = 0; t < 6; ++t) {
        CHECK(sc.tags[t].zone == zones[t]);
        CHECK(sc.tags[t].discovered == disc[t]);
        CHECK_FALSE(sc.tags[t].confined);
        CHECK_FALSE(sc.tags[t].double_discovery);
    }
    CHECK_FALSE(sc.any_confined);
    CHECK(sc.t_size(1) == 1);
    CHECK(sc.t_size(4) == 0);
    CHECK_THROWS_AS(sc.t_size(2), std::invalid_argument);

    // N_1 = 4 > 3, so the square cannot be perfect: a_1 never earns its
    // required C-zone double discovery
    PerfectnessReport rep = check_perfect(sc);
    CHECK(rep.decided());
    CHECK(rep.clause_a);
    CHECK_FALSE(rep.clause_b);
    CHECK(rep.clause_c);
    CHECK_FALSE(rep.perfect());
    CHECK(rep.detail == "a_1 has 0 C-zone doubles, expected 1");
}

TEST_CASE("triangle with interior point is perfect at k = 1") {
    HalfPeriod hp = from_point_set(fixtures::triangle_interior());
    PerfectnessReport rep = is_perfect(hp, 1);
    REQUIRE(rep.decided());
    CHECK(rep.perfect());
    CHECK(rep.detail.empty());
}

TEST_CASE("counting properties on exhaustive enumerations") {
    for (const HalfPeriod& hp : fixtures::enumerate_half_periods(4))
        check_counting_properties(hp, 1);
    long long perfect4 = 0;
    for (const HalfPeriod& hp : fixtures::enumerate_half_periods(4))
        if (is_perfect(hp, 1).perfect()) ++perfect4;
    CHECK(perfect4 > 0);

    for (const HalfPeriod& hp : fixtures::enumerate_half_periods(5)) {
        check_counting_properties(hp, 1);
        check_counting_properties(hp, 2);
        // k = 2 leaves 10 = C(5,2) steps all critical, so N_{<=2} = 10 > 9 and
        // no n = 5 half period is perfect there
        PerfectnessReport rep = is_perfect(hp, 2);
        if (rep.decided()) REQUIRE_FALSE(rep.perfect());
    }
}

TEST_CASE("counting properties across the corpus") {
    for (const PointSet& ps : fixtures::corpus()) {
        HalfPeriod hp = from_point_set(ps);
        for (int k = 1; 2 * k < hp.n; ++k) {
            check_counting_properties(hp, k);
            // point-set sequences satisfy the critical-count lower bound even
            // when confinement leaves perfectness undecided
            REQUIRE(critical_profile(hp).cumulative(k) >= 3 * binom2(k + 1));
        }
    }
}

TEST_CASE("tight three-ray sequences are perfect when decided") {
    for (int n : {6, 9, 12}) {
        HalfPeriod hp = from_point_set(fixtures::tuned_three_ray(n));
        for (int k = 1; k < n / 3; ++k) {
            PerfectnessReport rep = is_perfect(hp, k);
            if (rep.decided()) REQUIRE(rep.perfect());
        }
    }
}

TEST_CASE("center entry permutation") {
    HalfPeriod hp = from_point_set(fixtures::unit_square());

    CenterEntry trivial = center_entry_permutation(hp, 3, 0);  // k = 0: window is everything
    CHECK(trivial.step == -1);
    CHECK(trivial.permutation == hp.initial);

    CenterEntry inside = center_entry_permutation(hp, 2, 1);
    CHECK(inside.step == -1);

    CenterEntry a1 = center_entry_permutation(hp, 1, 1);
    CHECK(a1.step == 0);
    CHECK(a1.permutation == std::vector<int>{2, 1, 3, 4});

    CenterEntry c1 = center_entry_permutation(hp, 4, 1);
    CHECK(c1.step == 1);
    CHECK(c1.permutation == std::vector<int>{2, 1, 4, 3});

    CHECK_THROWS_AS(center_entry_permutation(hp, 99, 1), std::invalid_argument);
    CHECK_THROWS_AS(center_entry_permutation(hp, 1, 2), std::invalid_argument);

    HalfPeriod stuck{4, {1, 2, 3, 4}, {3}};  // truncated on purpose: label 1 never moves
    CHECK_THROWS_AS(center_entry_permutation(stuck, 1, 1), std::invalid_argument);
}
