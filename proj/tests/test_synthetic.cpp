#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "featbench/errors.hpp"
#include "featbench/image_io.hpp"
#include "featbench/synthetic.hpp"

#include "support.hpp"

using namespace featbench;
using testsupport::TempDir;
namespace fs = std::filesystem;

namespace {

std::vector<unsigned char> file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::vector<unsigned char>(std::istreambuf_iterator<char>(in),
                                      std::istreambuf_iterator<char>());
}

SyntheticConfig small_config(const std::string& dir) {
    SyntheticConfig config;
    config.output_dir = dir;
    config.n_points = 1;
    config.width = 128;
    config.height = 96;
    return config;
}

} // namespace

TEST_CASE("one capture point yields one template and the full 15-query grid") {
    TempDir dir;
    const SyntheticDataset data = generate_synthetic(small_config(dir.str()));

    REQUIRE(data.manifest.templates.size() == 1);
    REQUIRE(data.manifest.queries.size() == 15);
    CHECK(data.manifest.templates[0].pose == PoseLabel{0, 1, 0});
    CHECK(data.manifest.templates[0].object == "scene00");

    // every (height, yaw) grid cell appears exactly once
    std::set<std::pair<int, int>> cells;
    for (const QueryEntry& q : data.manifest.queries) {
        CHECK(q.pose.point_id == 0);
        cells.insert({q.pose.height_level, q.pose.yaw});
    }
    CHECK(cells.size() == 15);

    // the geometry covers the same grid and reloads from disk
    CHECK(data.geometry.entries.size() == 15);
    CHECK(fs::exists(data.manifest_path));
    CHECK(fs::exists(data.geometry_path));
    const GridGeometry reloaded = load_geometry(data.geometry_path);
    CHECK(reloaded.entries.size() == 15);
    REQUIRE(reloaded.find({0, 2, -30}) != nullptr);
    CHECK(reloaded.find({0, 2, -30})->position ==
          data.geometry.find({0, 2, -30})->position);

    // image files round-trip through the manifest paths
    for (const QueryEntry& q : data.manifest.queries) {
        const Image img = load_image(q.path);
        CHECK(img.width() == 128);
        CHECK(img.height() == 96);
    }
}

TEST_CASE("the mid-height zero-yaw query is the template, byte for byte") {
    TempDir dir;
    const SyntheticDataset data = generate_synthetic(small_config(dir.str()));
    std::string query_path;
    for (const QueryEntry& q : data.manifest.queries)
        if (q.pose == PoseLabel{0, 1, 0})
            query_path = q.path;
    REQUIRE(!query_path.empty());
    CHECK(file_bytes(query_path) == file_bytes(data.manifest.templates[0].path));
}

TEST_CASE("yawed queries are rotated views of the template scene") {
    TempDir dir;
    const SyntheticDataset data = generate_synthetic(small_config(dir.str()));
    const Image tmpl = load_image(data.manifest.templates[0].path);

    for (const QueryEntry& q : data.manifest.queries) {
        if (q.pose.height_level != 1 || q.pose.yaw == 0)
            continue;
        const Image view = load_image(q.path);
        const double diff = testsupport::mean_abs_diff_rotated(tmpl, view, q.pose.yaw);
        CHECK(diff < 3.0);
        // and clearly not a rotation by the opposite yaw
        const double wrong = testsupport::mean_abs_diff_rotated(tmpl, view, -q.pose.yaw);
        CHECK(diff < wrong);
    }
}

TEST_CASE("generation is a pure function of the seed") {
    TempDir dir;
    SyntheticConfig a = small_config(dir.str() + "/a");
    SyntheticConfig b = small_config(dir.str() + "/b");
    SyntheticConfig c = small_config(dir.str() + "/c");
    c.seed = a.seed + 1;

    const SyntheticDataset da = generate_synthetic(a);
    const SyntheticDataset db = generate_synthetic(b);
    const SyntheticDataset dc = generate_synthetic(c);

    for (std::size_t i = 0; i < da.manifest.queries.size(); ++i) {
        CHECK(file_bytes(da.manifest.queries[i].path) ==
              file_bytes(db.manifest.queries[i].path));
    }
    CHECK(file_bytes(da.manifest.templates[0].path) ==
          file_bytes(db.manifest.templates[0].path));
    CHECK(file_bytes(da.manifest.templates[0].path) !=
          file_bytes(dc.manifest.templates[0].path));
    CHECK(file_bytes(da.manifest_path) == file_bytes(db.manifest_path));
    CHECK(file_bytes(da.geometry_path) == file_bytes(db.geometry_path));
}

TEST_CASE("multiple points use distinct scenes") {
    TempDir dir;
    SyntheticConfig config = small_config(dir.str());
    config.n_points = 2;
    const SyntheticDataset data = generate_synthetic(config);
    REQUIRE(data.manifest.templates.size() == 2);
    CHECK(data.manifest.queries.size() == 30);
    CHECK(file_bytes(data.manifest.templates[0].path) !=
          file_bytes(data.manifest.templates[1].path));
    CHECK(data.manifest.templates[1].object == "scene01");
}

TEST_CASE("generator rejects unusable configurations") {
    TempDir dir;
    SyntheticConfig config = small_config(dir.str());
    config.n_points = 0;
    CHECK_THROWS_AS(generate_synthetic(config), ConfigError);

    config = small_config(dir.str());
    config.width = 63;
    CHECK_THROWS_AS(generate_synthetic(config), ConfigError);

    config = small_config(dir.str());
    config.height = 32;
    CHECK_THROWS_AS(generate_synthetic(config), ConfigError);

    config = small_config("");
    CHECK_THROWS_AS(generate_synthetic(config), ConfigError);
}
