#include <cstdio>
#include <filesystem>

#include "augur/instances.hpp"
#include "augur/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace augur;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("tree instance round trip") {
    const auto ti = gen_random_tree_instance(20, 3);
    const auto f = file_from_tree_instance(ti, {{"note", "x"}});
    const auto back = instance_from_json(json::parse(dump_instance(f)));
    CHECK(back.kind == InstanceKind::ca);
    CHECK(back.graph.edges() == ti.instance.graph.edges());
    CHECK(back.roles == ti.instance.role);
    CHECK(back.metadata["note"] == "x");
    const auto opt = back.optimum();
    REQUIRE(opt.has_value());
    CHECK(opt->steiner == ti.opt.steiner);
    CHECK(opt->terminals == ti.opt.terminals);
    CHECK(back.ca().terminals() == ti.instance.terminals());
    CHECK(dump_instance(back) == dump_instance(f));
}

TEST_CASE("linked instance round trip through a file") {
    const auto lg = gen_random_cacap(3, 5, 4, 9);
    const auto f = file_from_linked(InstanceKind::cacap, lg);
    const auto path = (std::filesystem::temp_directory_path() / "augur_io_test.json").string();
    save_instance(f, path);
    const auto back = load_instance(path);
    std::remove(path.c_str());
    CHECK(back.kind == InstanceKind::cacap);
    CHECK(back.links.links == lg.links.links);
    CHECK(back.graph.edges() == lg.graph.edges());
    CHECK_FALSE(back.optimum().has_value());
    CHECK_THROWS_AS((void)back.ca(), std::invalid_argument);
}

TEST_CASE("kind names") {
    for (auto k : {InstanceKind::ca, InstanceKind::block_tap, InstanceKind::one_node_cap, InstanceKind::cacap})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("tap"), std::invalid_argument);
}

TEST_CASE("schema violations") {
    const json good = instance_to_json(file_from_tree_instance(gen_path_family(2)));
    auto bad = good;
    bad["format_version"] = 99;
    CHECK_THROWS_AS(instance_from_json(bad), std::invalid_argument);
    bad = good;
    bad["edges"].push_back({0, 0});
    CHECK_THROWS_AS(instance_from_json(bad), std::invalid_argument);
    bad = good;
    bad["edges"].push_back({0, 1000});
    CHECK_THROWS_AS(instance_from_json(bad), std::invalid_argument);
    bad = good;
    bad["terminals"] = json::array({0});
    CHECK_THROWS_AS(instance_from_json(bad), std::invalid_argument);
    bad = good;
    bad["nodes"][0]["role"] = "plain";
    CHECK_THROWS(instance_from_json(bad));
    CHECK_THROWS(instance_from_json(json::array()));
    CHECK_THROWS(load_instance("/nonexistent/augur.json"));
}

}
