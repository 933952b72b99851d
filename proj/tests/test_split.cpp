#include <doctest.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "gnarsil/distance.hpp"
#include "gnarsil/errors.hpp"
#include "gnarsil/split.hpp"

using namespace gnarsil;
using namespace fixtures;

TEST_CASE("generator split of the preprocessed nine-qubit code") {
    tableau t = shor_preprocessed();
    split_config cfg;
    cfg.replace_rows = {5, 6, 7, 8};
    cfg.weight = 2;
    cfg.gauges_per_stab = 2;
    cfg.max_pool = 64;

    split_result res = split_with_generators(t, cfg);
    CHECK(res.w == 2);
    CHECK(res.wz == 2);
    CHECK(pauli_strings(res.pool) ==
          std::vector<std::string>{"X1X4", "X1X7", "X2X5", "X2X8", "X3X6", "X3X9"});
    CHECK(pauli_strings(res.gx) ==
          std::vector<std::string>{"X1X4", "X2X5", "X1X7", "X2X8"});
    CHECK(pauli_strings(res.gz) ==
          std::vector<std::string>{"Z4Z6", "Z5Z6", "Z7Z9", "Z8Z9"});

    /* Kept stabilizer rows get a minimum-residual combination report. */
    REQUIRE(res.x_reports.size() == 2);
    CHECK(res.x_reports[0].target_row == 1);
    CHECK(res.x_reports[0].combo == std::vector<std::size_t>{0, 2});
    CHECK(print_pauli(res.x_reports[0].residual) == "X3X6");
    CHECK(res.x_reports[0].residual_weight == 2);
    CHECK(res.x_reports[1].target_row == 2);
    CHECK(res.x_reports[1].combo == std::vector<std::size_t>{0, 1});
    CHECK(print_pauli(res.x_reports[1].residual) == "X5X6X8X9");
    CHECK(res.x_reports[1].residual_weight == 4);
    CHECK(res.z_reports.empty());

    /* The split tableau keeps the symplectic relation, with the replaced
       rows promoted to gauges. */
    REQUIRE(res.split_tableau.has_value());
    const tableau& t2 = *res.split_tableau;
    CHECK(t2.gauge_rows == std::vector<std::size_t>{5, 6, 7, 8});
    CHECK(verify_subsystem(t2));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(t2.rows.row(5 + i) == res.gx[i]);
        CHECK(t2.rows.row(9 + 5 + i) == res.gz[i]);
    }

    /* gz[i] anti-commutes with gx[j] exactly when i = j. */
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(commutes(res.gz[i], res.gx[j]) == (i != j));

    /* Group parameters and center of the resulting gauge group. */
    std::vector<bit_vector> gens = split_generators(t, cfg.replace_rows, res);
    bit_matrix gen_mat(18, gens);
    CHECK(compute_group_params(gen_mat, 9) == code_params{9, 1, 4, 4, {}});
    bit_matrix center = center_of(gen_mat, 9);
    CHECK(sorted_pauli_weights(center) == std::vector<std::size_t>{6, 6, 6, 6});

    /* Dressed distance of the split code. */
    distance_query q;
    q.n = 9;
    q.stabilizers = center;
    q.gauges = gen_mat;
    q.weight_limit = 4;
    q.mode = distance_mode::dressed;
    distance_result d = min_weight_logical(q);
    REQUIRE(d.found_weight.has_value());
    CHECK(*d.found_weight == 3);
    CHECK(print_pauli(d.witness) == "X1X2X3");
}

TEST_CASE("surface-code split, rows 2 and 8") {
    tableau t = surface_tableau();
    split_config cfg;
    cfg.replace_rows = {2, 8};
    cfg.weight = 3;
    cfg.gauges_per_stab = 2;
    cfg.max_pool = 64;

    split_result res = split_with_generators(t, cfg);
    CHECK(res.w == 3);
    CHECK(res.wz == 3);
    CHECK(pauli_strings(res.pool) ==
          std::vector<std::string>{"X2X3X9", "X5X6X7", "X5X6X8", "X7X8X9"});
    CHECK(pauli_strings(res.zpool) ==
          std::vector<std::string>{"Z1Z4Z6", "Z1Z4Z9", "Z2Z3Z5"});
    CHECK(pauli_strings(res.gx) == std::vector<std::string>{"X2X3X9", "X5X6X7"});
    CHECK(pauli_strings(res.gz) == std::vector<std::string>{"Z1Z4Z9", "Z1Z4Z6"});

    REQUIRE(res.x_reports.size() == 1);
    CHECK(res.x_reports[0].target_row == 1);
    CHECK(res.x_reports[0].combo == std::vector<std::size_t>{0, 1});
    CHECK(print_pauli(res.x_reports[0].residual) == "X1X3X4X6X7X9");
    CHECK(res.x_reports[0].residual_weight == 6);

    REQUIRE(res.split_tableau.has_value());
    const tableau& t2 = *res.split_tableau;
    CHECK(verify_subsystem(t2));
    std::vector<std::string> u2 = {
        "X2X5X8",
        "X1X2X4X5", "X2X3X9", "X2X3", "X7X8",
        "Z2Z3Z5Z6", "Z4Z5Z7Z8", "Z1Z4", "X5X6X7",
        "Z4Z5Z6",
        "Z1", "Z1Z4Z9", "Z3Z9", "Z2Z3Z5Z7",
        "X2X7X8", "X8", "X3X4X6X7X9", "Z1Z4Z6",
    };
    for (std::size_t i = 0; i < u2.size(); ++i)
        CHECK(row_pauli(t2, i) == u2[i]);

    std::vector<bit_vector> gens = split_generators(t, cfg.replace_rows, res);
    CHECK(pauli_strings(gens) ==
          std::vector<std::string>{"X1X2X4X5", "X2X3", "X7X8", "Z2Z3Z5Z6",
                                   "Z4Z5Z7Z8", "Z1Z4", "X2X3X9", "X5X6X7",
                                   "Z1Z4Z9", "Z1Z4Z6"});
    bit_matrix gen_mat(18, gens);
    CHECK(compute_group_params(gen_mat, 9) == code_params{9, 1, 2, 6, {}});
    bit_matrix center = center_of(gen_mat, 9);
    CHECK(sorted_pauli_weights(center) ==
          std::vector<std::size_t>{2, 2, 4, 4, 4, 4});

    distance_query q;
    q.n = 9;
    q.stabilizers = center;
    q.gauges = gen_mat;
    q.weight_limit = 3;
    distance_result d = min_weight_logical(q);
    REQUIRE(d.found_weight.has_value());
    CHECK(*d.found_weight == 2);
    CHECK(print_pauli(d.witness) == "Z1Z5");

    /* Two weight-3 gauge-group elements multiply to a weight-4 stabilizer. */
    CHECK(weight_pair_in_span(gens, center, 9, 3, 4) ==
          std::vector<std::string>{"X2X3X9", "X7X8X9", "X2X3X7X8"});
}

TEST_CASE("surface-code split, rows 1 and 5") {
    tableau t = surface_tableau();
    split_config cfg;
    cfg.replace_rows = {1, 5};
    cfg.weight = 3;
    cfg.gauges_per_stab = 2;
    cfg.max_pool = 64;

    split_result res = split_with_generators(t, cfg);
    CHECK(res.w == 3);
    CHECK(res.wz == 5);
    CHECK(pauli_strings(res.pool) ==
          std::vector<std::string>{"X1X4X5", "X2X7X8", "X3X7X8"});
    CHECK(pauli_strings(res.zpool) ==
          std::vector<std::string>{"Z1Z2Z3Z5Z6", "Z1Z2Z3Z5Z9", "Z1Z4Z5Z7Z8",
                                   "Z2Z3Z4Z5Z6", "Z2Z3Z6Z7Z8"});
    CHECK(pauli_strings(res.gx) == std::vector<std::string>{"X1X4X5", "X2X7X8"});
    CHECK(pauli_strings(res.gz) ==
          std::vector<std::string>{"Z1Z4Z5Z7Z8", "Z2Z3Z4Z5Z6"});
    REQUIRE(res.x_reports.size() == 1);
    CHECK(res.x_reports[0].target_row == 2);
    CHECK(res.x_reports[0].combo == std::vector<std::size_t>{0, 1});
    CHECK(print_pauli(res.x_reports[0].residual) == "X1X2X4X6X7X9");
    CHECK(res.x_reports[0].residual_weight == 6);

    std::vector<bit_vector> gens = split_generators(t, cfg.replace_rows, res);
    bit_matrix gen_mat(18, gens);
    bit_matrix center = center_of(gen_mat, 9);
    CHECK(weight_pair_in_span(gens, center, 9, 3, 4) ==
          std::vector<std::string>{"X2X7X8", "Z1X2Z4", "Z1Z4X7X8"});
}

/* Frozen outcome of splitting every stabilizer-row pair of the surface
   code at starting weight 3: seven pairs give a distance-2 subsystem code
   with the expected gauges, two succeed structurally but drop the dressed
   distance to 1, and the rest exhaust the Z-side escalation. */
TEST_CASE("surface-code pair survey") {
    struct outcome {
        std::size_t wz;
        std::vector<std::string> gx, gz;
        std::size_t d;
    };
    std::map<std::pair<std::size_t, std::size_t>, outcome> good = {
        {{1, 5}, {5, {"X1X4X5", "X2X7X8"}, {"Z1Z4Z5Z7Z8", "Z2Z3Z4Z5Z6"}, 2}},
        {{2, 8}, {3, {"X2X3X9", "X5X6X7"}, {"Z1Z4Z9", "Z1Z4Z6"}, 2}},
        {{3, 8}, {3, {"X2X3X9", "X5X6X7"}, {"Z1Z3Z4", "Z2Z5Z9"}, 2}},
        {{4, 5}, {5, {"X1X4X5", "X2X7X8"}, {"Z1Z2Z3Z6Z8", "Z1Z4Z6Z7Z9"}, 2}},
        {{4, 6}, {3, {"X2X3X7", "X2X3X8"}, {"Z1Z4Z7", "Z1Z5Z8"}, 2}},
        {{4, 8}, {3, {"X2X3X9", "X5X6X7"}, {"Z6Z7Z9", "Z1Z4Z7"}, 2}},
        {{5, 6}, {4, {"X1X4X5", "X2X3X7"}, {"Z2Z3Z5Z6", "Z1Z5Z7Z8"}, 1}},
        {{5, 8}, {4, {"X1X4X5", "X2X3X9"}, {"Z2Z3Z5Z6", "Z1Z4Z6Z9"}, 1}},
        {{6, 8}, {4, {"X2X3X7", "X5X6X7"}, {"Z1Z5Z7Z8", "Z1Z4Z6Z9"}, 2}},
    };

    tableau t = surface_tableau();
    std::size_t ok_count = 0;
    for (std::size_t i = 1; i <= 8; ++i)
        for (std::size_t j = i + 1; j <= 8; ++j) {
            split_config cfg;
            cfg.replace_rows = {i, j};
            cfg.weight = 3;
            cfg.gauges_per_stab = 2;
            cfg.max_pool = 64;
            auto it = good.find({i, j});
            if (it == good.end()) {
                CHECK_THROWS_AS(split_with_generators(t, cfg), split_fail);
                continue;
            }
            split_result res = split_with_generators(t, cfg);
            CHECK(res.w == 3);
            CHECK(res.wz == it->second.wz);
            CHECK(pauli_strings(res.gx) == it->second.gx);
            CHECK(pauli_strings(res.gz) == it->second.gz);

            std::vector<bit_vector> gens = split_generators(t, cfg.replace_rows, res);
            bit_matrix gen_mat(18, gens);
            CHECK(compute_group_params(gen_mat, 9) == code_params{9, 1, 2, 6, {}});

            distance_query q;
            q.n = 9;
            q.stabilizers = center_of(gen_mat, 9);
            q.gauges = gen_mat;
            q.weight_limit = 3;
            distance_result d = min_weight_logical(q);
            REQUIRE(d.found_weight.has_value());
            CHECK(*d.found_weight == it->second.d);
            if (*d.found_weight == 2 &&
                !weight_pair_in_span(gens, q.stabilizers, 9, 3, 4).empty())
                ++ok_count;
        }
    CHECK(ok_count == 7);
}

TEST_CASE("choose_for_target minimizes residual weight with index ties") {
    std::size_t n = 4;
    bit_vector target = pure_x(vector_from_string("1111"));
    std::vector<bit_vector> pool = {
        pure_x(vector_from_string("1100")),
        pure_x(vector_from_string("0011")),
        pure_x(vector_from_string("1010")),
    };

    /* Two picks cancel the target exactly; the scan stops at weight 0. */
    auto two = choose_for_target(target, pool, 2, 1000, 1);
    REQUIRE(two.has_value());
    CHECK(two->combo == std::vector<std::size_t>{0, 1});
    CHECK(two->residual_weight == 0);
    CHECK_FALSE(two->residual.any());

    /* One pick leaves weight 2 either way; the tie breaks to index 0. */
    auto one = choose_for_target(target, pool, 1, 1000, 1);
    REQUIRE(one.has_value());
    CHECK(one->combo == std::vector<std::size_t>{0});
    CHECK(one->residual_weight == 2);
    CHECK(print_pauli(one->residual) == "X3X4");

    /* Group size beyond the pool gives nothing to scan. */
    CHECK_FALSE(choose_for_target(target, pool, 4, 1000, 1).has_value());
    CHECK_FALSE(choose_for_target(target, {}, 1, 1000, 1).has_value());

    /* Exceeding the combination budget is refused, not attempted. */
    CHECK_THROWS_AS(choose_for_target(target, pool, 2, 2, 1),
                    resource_error);
}

TEST_CASE("threaded combination scan matches the serial scan") {
    /* 66 weight-2 candidates over 12 qubits: C(66,3) = 45760 combinations,
       well past the threading threshold. */
    std::size_t n = 12;
    std::vector<bit_vector> pool;
    for (const auto& v : enumerate_weight_w(n, 2))
        pool.push_back(pure_x(v));
    bit_vector target(2 * n);
    for (std::size_t q = 0; q < n; ++q)
        target.set(q, true);

    auto serial = choose_for_target(target, pool, 3, 1000000, 1);
    auto threaded = choose_for_target(target, pool, 3, 1000000, 4);
    REQUIRE(serial.has_value());
    REQUIRE(threaded.has_value());
    CHECK(serial->combo == threaded->combo);
    CHECK(serial->residual_weight == threaded->residual_weight);
    CHECK(serial->residual == threaded->residual);

    /* Full algorithm runs agree across thread counts. */
    tableau t = shor_preprocessed();
    split_config cfg;
    cfg.replace_rows = {5, 6, 7, 8};
    cfg.weight = 2;
    split_result a = split_with_generators(t, cfg);
    cfg.threads = 4;
    split_result b = split_with_generators(t, cfg);
    CHECK(a.split_tableau->rows == b.split_tableau->rows);
    CHECK(pauli_strings(a.gx) == pauli_strings(b.gx));
    CHECK(pauli_strings(a.gz) == pauli_strings(b.gz));
}

TEST_CASE("commutant matrix drops exactly the replaced rows") {
    tableau t = shor_preprocessed();
    bit_matrix v = commutant_matrix(t, {5, 6});
    CHECK(v.row_count() == 8);   // rows 0..9 minus two replaced
    for (const auto& row : v.rows)
        CHECK(row != t.rows.row(5));
    CHECK(v.row(0) == t.rows.row(0));
    CHECK(v.row(5) == t.rows.row(7));
    CHECK(v.row(7) == t.rows.row(9));
}

TEST_CASE("replace-row validation") {
    tableau t = shor_preprocessed();
    split_config cfg;
    cfg.replace_rows = {5, 5};
    CHECK_THROWS_AS(split_with_generators(t, cfg), validation_error);
    cfg.replace_rows = {0};
    CHECK_THROWS_AS(split_with_generators(t, cfg), validation_error);
    cfg.replace_rows = {9};
    CHECK_THROWS_AS(split_with_operators(t, cfg), validation_error);
}

TEST_CASE("empty replacement set returns the seed unchanged") {
    tableau t = shor_preprocessed();
    split_config cfg;
    split_result res = split_with_generators(t, cfg);
    REQUIRE(res.split_tableau.has_value());
    CHECK(res.split_tableau->rows == t.rows);
    CHECK(res.w == 0);
    CHECK(res.gx.empty());
}

TEST_CASE("split failure names the exhausted side") {
    tableau t = surface_tableau();
    split_config cfg;
    cfg.replace_rows = {1, 2};
    cfg.weight = 3;
    CHECK_THROWS_AS(split_with_generators(t, cfg), split_fail);
    try {
        split_with_generators(t, cfg);
    } catch (const split_fail& e) {
        CHECK(std::string(e.what()).find("Z gauge pool") != std::string::npos);
    }
}
