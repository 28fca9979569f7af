// Acceptance gate: runs the ten release criteria in order and prints one
// [PASS]/[FAIL] line for each. Exits nonzero when any criterion fails.
//
// The heavyweight criteria share one five-point dataset and two full CLI
// benchmark runs; those are produced lazily on first use so every criterion
// still reports under its own number.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "featbench/bench.hpp"
#include "featbench/errors.hpp"
#include "featbench/image.hpp"
#include "featbench/localize.hpp"
#include "featbench/manifest.hpp"
#include "featbench/report.hpp"

#include "support.hpp"

using namespace featbench;
namespace fs = std::filesystem;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) {
        throw Failure(what);
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string tail_of(const std::string& text, std::size_t n = 400) {
    return text.size() <= n ? text : "..." + text.substr(text.size() - n);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    expect(in.good(), "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    expect(in.good(), "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        fields.push_back(field);
    }
    return fields;
}

/// The shared end-to-end state: one synthetic dataset and two cold-cache
/// single-worker benchmark runs made through the command-line binary, each
/// followed by the report derivation. Built lazily; a failed stage replays
/// its error to every criterion that needs it.
class Pipeline {
  public:
    static Pipeline& get() {
        static Pipeline instance;
        return instance;
    }

    std::string data_dir() {
        ensure_dataset();
        return (root.path / "data").string();
    }

    std::string run_dir(int which) {
        ensure_run(which);
        return (root.path / ("run" + std::to_string(which))).string();
    }

    double generate_seconds = 0.0;
    double run_seconds[3] = {0.0, 0.0, 0.0};  // index by run number

  private:
    testsupport::TempDir root;
    const std::string cli = FEATBENCH_CLI_PATH;
    bool dataset_done = false;
    bool run_done[3] = {false, false, false};
    std::string stage_error;

    void run_stage(const std::string& label, const std::string& command, double* elapsed) {
        const auto start = std::chrono::steady_clock::now();
        const testsupport::CommandResult r = testsupport::run_command(command);
        if (elapsed) {
            *elapsed = seconds_since(start);
        }
        if (r.exit_code != 0) {
            stage_error = label + " exited with " + std::to_string(r.exit_code) + ": " +
                          tail_of(r.output);
            throw Failure(stage_error);
        }
    }

    void ensure_dataset() {
        if (!stage_error.empty()) {
            throw Failure(stage_error);
        }
        if (dataset_done) {
            return;
        }
        run_stage("generate-synthetic",
                  "'" + cli + "' generate-synthetic --out '" + (root.path / "data").string() +
                      "' --points 5 --width 555 --height 480",
                  &generate_seconds);
        dataset_done = true;
    }

    void ensure_run(int which) {
        ensure_dataset();
        if (run_done[which]) {
            return;
        }
        const std::string dir = (root.path / ("run" + std::to_string(which))).string();
        run_stage("run", "'" + cli + "' run --manifest '" + (root.path / "data" / "manifest.txt").string() +
                             "' --out '" + dir + "' --workers 1",
                  &run_seconds[which]);
        run_stage("report",
                  "'" + cli + "' report --stats '" + dir + "/stats.json' --out '" + dir + "/plots'",
                  nullptr);
        run_done[which] = true;
    }
};

// ---- criterion bodies ----

void criterion_box_sums() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    int rects = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Image img = trial % 2 == 0 ? testsupport::noise_image(64, 64, 3000 + trial)
                                         : testsupport::textured_image(64, 64, 3000 + trial);
        const IntegralImage integral(img);
        for (int r = 0; r < 20; ++r, ++rects) {
            const int x0 = testsupport::draw_int(rng, 0, 63);
            const int y0 = testsupport::draw_int(rng, 0, 63);
            const int x1 = testsupport::draw_int(rng, x0, 63);
            const int y1 = testsupport::draw_int(rng, y0, 63);
            std::uint64_t direct = 0;
            for (int y = y0; y <= y1; ++y) {
                for (int x = x0; x <= x1; ++x) {
                    direct += img.at(x, y);
                }
            }
            expect(integral.box_sum(x0, y0, x1, y1) == direct,
                   "box_sum disagrees with the pixel loop at rect (" + std::to_string(x0) + "," +
                       std::to_string(y0) + ")-(" + std::to_string(x1) + "," + std::to_string(y1) +
                       ") of image " + std::to_string(trial));
        }
    }
    expect(rects == 1000, "expected 1000 rectangles, covered " + std::to_string(rects));
    const double elapsed = seconds_since(start);
    expect(elapsed < 5.0, "box-sum verification took " + std::to_string(elapsed) + " s");
}

void criterion_fast_oracle() {
    for (int trial = 0; trial < 50; ++trial) {
        const Image img = trial % 2 == 0 ? testsupport::noise_image(64, 64, 500 + trial)
                                         : testsupport::textured_image(64, 64, 500 + trial);
        const int threshold = 10 + (trial % 3) * 15;
        const int arc = 9 + trial % 4;
        const auto naive = testsupport::naive_fast(img, threshold, arc);
        const KeypointList detected = fast_detect(img, threshold, arc, false);
        std::set<std::pair<int, int>> expected(naive.begin(), naive.end());
        std::set<std::pair<int, int>> actual;
        for (const Keypoint& kp : detected) {
            actual.insert({int(std::lround(kp.x)), int(std::lround(kp.y))});
        }
        expect(actual == expected, "FAST corner set differs from the naive segment test on image " +
                                       std::to_string(trial) + " (threshold " +
                                       std::to_string(threshold) + ", arc " + std::to_string(arc) +
                                       "): " + std::to_string(actual.size()) + " vs " +
                                       std::to_string(expected.size()) + " corners");
    }

    // a white square on black has exactly its four corners
    Image img(48, 48, std::vector<std::uint8_t>(48 * 48, 0));
    for (int y = 16; y < 32; ++y) {
        for (int x = 16; x < 32; ++x) {
            img.at(x, y) = 255;
        }
    }
    const KeypointList corners = fast_detect(img, 20, 9, true);
    expect(corners.size() == 4,
           "white-square fixture gave " + std::to_string(corners.size()) + " corners, wanted 4");
    const double expected_xy[4][2] = {{16, 16}, {31, 16}, {16, 31}, {31, 31}};
    for (const auto& e : expected_xy) {
        bool found = false;
        for (const Keypoint& kp : corners) {
            found = found || (std::abs(kp.x - e[0]) <= 1.0f && std::abs(kp.y - e[1]) <= 1.0f);
        }
        expect(found, "no corner within 1 px of (" + std::to_string(int(e[0])) + "," +
                          std::to_string(int(e[1])) + ")");
    }
}

void criterion_match_oracle() {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        for (const bool binary : {true, false}) {
            std::vector<Descriptor> queries, trains;
            for (int i = 0; i < 50; ++i) {
                queries.push_back(binary ? testsupport::random_binary(rng)
                                         : testsupport::random_real(rng));
                trains.push_back(binary ? testsupport::random_binary(rng)
                                        : testsupport::random_real(rng));
            }
            for (const bool cross : {false, true}) {
                const auto got = brute_force_match(queries, trains, cross);
                const auto want = testsupport::naive_match(queries, trains, cross);
                expect(got == want, std::string("brute-force matches differ from the exhaustive "
                                                "scan (") +
                                        (binary ? "binary" : "real") +
                                        (cross ? ", cross-checked)" : ")") + " on trial " +
                                        std::to_string(trial));
            }
        }
    }
}

void criterion_self_match() {
    const std::string data = Pipeline::get().data_dir();
    const DatasetManifest base = load_manifest(data + "/manifest.txt");
    DatasetManifest self;
    self.templates = base.templates;
    for (const TemplateEntry& t : base.templates) {
        self.queries.push_back({t.path, t.pose});
    }

    const RunConfig config;  // release defaults
    const EvalPlan plan = build_eval_plan(self, config);
    DetectorMemo memo;
    for (const CombinationId& combo : combination_matrix()) {
        const CombinationResult result = run_combination(combo, plan, config, &memo);
        expect(result.accuracy_pct == 100.0,
               combination_name(combo) + " scored " + std::to_string(result.accuracy_pct) +
                   "% on the self-match manifest");
        expect(result.pairs.size() == self.queries.size(),
               combination_name(combo) + " evaluated " + std::to_string(result.pairs.size()) +
                   " pairs, wanted " + std::to_string(self.queries.size()));
        for (const PairRecord& pair : result.pairs) {
            expect(pair.matched, combination_name(combo) + " left query " +
                                     std::to_string(pair.query_idx) + " unmatched");
            expect(pair.stats.mean_angle_diff == 0.0,
                   combination_name(combo) + " query " + std::to_string(pair.query_idx) +
                       " mean angle " + std::to_string(pair.stats.mean_angle_diff));
            expect(pair.stats.min_distance == 0.0,
                   combination_name(combo) + " query " + std::to_string(pair.query_idx) +
                       " min distance " + std::to_string(pair.stats.min_distance));
        }
    }
}

void criterion_matrix() {
    const std::vector<CombinationId> matrix = combination_matrix();
    expect(matrix.size() == 23, "matrix has " + std::to_string(matrix.size()) + " rows");

    static const char* const expected[] = {
        "ORB-BRIEF",  "ORB-BRISK",  "ORB-SIFT",  "ORB-SURF",  "ORB-ORB",
        "SURF-BRIEF", "SURF-BRISK", "SURF-SIFT", "SURF-SURF", "SURF-ORB",
        "SIFT-BRIEF", "SIFT-BRISK", "SIFT-SIFT", "SIFT-SURF",
        "FAST-BRIEF", "FAST-BRISK", "FAST-SIFT", "FAST-SURF", "FAST-ORB",
        "BRISK-BRIEF", "BRISK-SIFT", "BRISK-SURF", "BRISK-ORB"};
    std::set<std::string> want(std::begin(expected), std::end(expected));
    std::set<std::string> got;
    for (const CombinationId& id : matrix) {
        got.insert(combination_name(id));
    }
    expect(got == want, "matrix entries differ from the 23 supported pairings");
    expect(got.count("SIFT-ORB") == 0, "SIFT-ORB must not be evaluated");
    expect(got.count("BRISK-BRISK") == 0, "BRISK-BRISK must not be evaluated");
}

/// Sums same-point correct matches in the stats dump by |yaw|, for one
/// combination. Index 0 -> yaw 0, 1 -> +-15, 2 -> +-30.
struct YawSums {
    double by_band[3] = {0.0, 0.0, 0.0};
};

YawSums yaw_sums(const nlohmann::json& stats, const std::string& detector,
                 const std::string& descriptor) {
    const auto& queries = stats.at("dataset").at("queries");
    const auto& templates = stats.at("dataset").at("templates");
    for (const auto& combo : stats.at("combinations")) {
        if (combo.at("detector") != detector || combo.at("descriptor") != descriptor) {
            continue;
        }
        YawSums sums;
        for (const auto& pair : combo.at("pairs")) {
            const auto& q = queries.at(pair.at("query").get<std::size_t>());
            const auto& t = templates.at(pair.at("template").get<std::size_t>());
            if (q.at("point") != t.at("point")) {
                continue;
            }
            const int yaw = std::abs(q.at("yaw").get<int>());
            sums.by_band[yaw / 15] += pair.at("n_correct").get<double>();
        }
        return sums;
    }
    throw Failure("stats dump lacks combination " + detector + "-" + descriptor);
}

/// Correct matches surviving at the yaw band, per image, relative to yaw 0.
/// The +-15 and +-30 bands hold twice as many pairs as the 0 band.
double retention(const YawSums& sums, int band) {
    expect(sums.by_band[0] > 0.0, "no correct matches at yaw 0");
    return (sums.by_band[band] / 2.0) / sums.by_band[0];
}

void criterion_yaw_retention() {
    const std::string run = Pipeline::get().run_dir(1);
    const nlohmann::json stats = nlohmann::json::parse(read_text(run + "/stats.json"));

    // each descriptor measured on its native detector pairing
    const struct {
        const char* detector;
        const char* descriptor;
    } native[] = {{"ORB", "ORB"}, {"FAST", "BRISK"}, {"SIFT", "SIFT"}, {"SURF", "SURF"}};
    for (const auto& pick : native) {
        const double kept = retention(yaw_sums(stats, pick.detector, pick.descriptor), 1);
        expect(kept >= 0.40, std::string(pick.descriptor) + " keeps " + std::to_string(kept) +
                                 " of its yaw-0 matches at +-15 degrees (needs 0.40)");
    }

    const double brief30 = retention(yaw_sums(stats, "ORB", "BRIEF"), 2);
    const double orb30 = retention(yaw_sums(stats, "ORB", "ORB"), 2);
    expect(brief30 < orb30, "BRIEF at +-30 degrees kept " + std::to_string(brief30) +
                                ", not below ORB's " + std::to_string(orb30));
}

void criterion_accuracy() {
    DatasetManifest manifest;
    manifest.templates.push_back({"t.pgm", {0, 1, 0}, "obj"});
    std::vector<CaseDecision> decisions;
    for (int i = 0; i < 127; ++i) {
        manifest.queries.push_back({"q" + std::to_string(i), {0, i % 3, (i % 5) * 15 - 30}});
        decisions.push_back({std::size_t(i), 0, true});
    }
    const auto [counts, pct] = compute_accuracy(decisions, manifest);
    expect(counts.tp == 127 && counts.fn == 0 && pct == 100.0,
           "127 matched positives scored " + std::to_string(pct) + "%");

    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        DatasetManifest m;
        const int n_templates = testsupport::draw_int(rng, 1, 4);
        for (int t = 0; t < n_templates; ++t) {
            m.templates.push_back({"t" + std::to_string(t), {t, 1, 0}, "obj"});
        }
        std::vector<CaseDecision> d;
        const int n_cases = testsupport::draw_int(rng, 1, 60);
        for (int i = 0; i < n_cases; ++i) {
            m.queries.push_back({"q" + std::to_string(i),
                                 {testsupport::draw_int(rng, 0, n_templates),
                                  testsupport::draw_int(rng, 0, 2),
                                  testsupport::draw_int(rng, -2, 2) * 15}});
            d.push_back({std::size_t(i), std::size_t(testsupport::draw_int(rng, 0, n_templates - 1)),
                         testsupport::unit_draw(rng) < 0.5});
        }
        std::int64_t right = 0;
        for (const CaseDecision& c : d) {
            const bool positive = positive_case(m.queries[c.query_idx].pose,
                                                m.templates[c.template_idx].pose);
            right += (positive == c.matched) ? 1 : 0;
        }
        const auto [cnt, got] = compute_accuracy(d, m);
        const double want = double(right) / double(n_cases) * 100.0;
        expect(std::abs(got - want) < 1e-12 && cnt.total() == n_cases,
               "random decision vector " + std::to_string(trial) + ": got " + std::to_string(got) +
                   "%, counting oracle says " + std::to_string(want) + "%");
    }
}

void criterion_histogram() {
    const Image a = testsupport::textured_image(96, 96, 11);
    const auto self = histogram_prefilter(a, {a}, 0.9);
    expect(self.size() == 1 && self[0] == 0, "an identical image failed the 0.9 threshold");

    // images over disjoint intensity ranges must not pass
    std::mt19937 rng(12);
    std::vector<std::uint8_t> low(96 * 96), high(96 * 96);
    for (std::size_t i = 0; i < low.size(); ++i) {
        low[i] = std::uint8_t(testsupport::draw_int(rng, 0, 100));
        high[i] = std::uint8_t(testsupport::draw_int(rng, 150, 255));
    }
    const Image dark(96, 96, low), bright(96, 96, high);
    expect(histogram_prefilter(dark, {bright}, 0.9).empty(),
           "disjoint-intensity images passed the prefilter");

    // correlation agrees with a direct Pearson computation
    for (int trial = 0; trial < 20; ++trial) {
        const Image x = testsupport::textured_image(64, 64, 600 + trial);
        const Image y = trial % 4 == 0 ? x : testsupport::textured_image(64, 64, 700 + trial);
        const Histogram hx = intensity_histogram(x);
        const Histogram hy = intensity_histogram(y);
        double mean_x = 0.0, mean_y = 0.0;
        for (int i = 0; i < 256; ++i) {
            mean_x += hx.bins[i];
            mean_y += hy.bins[i];
        }
        mean_x /= 256.0;
        mean_y /= 256.0;
        double cov = 0.0, var_x = 0.0, var_y = 0.0;
        for (int i = 0; i < 256; ++i) {
            const double dx = hx.bins[i] - mean_x;
            const double dy = hy.bins[i] - mean_y;
            cov += dx * dy;
            var_x += dx * dx;
            var_y += dy * dy;
        }
        const double want = cov / std::sqrt(var_x * var_y);
        const double got = histogram_correlation(hx, hy);
        expect(std::abs(got - want) <= 1e-9, "correlation " + std::to_string(got) +
                                                 " differs from the Pearson oracle " +
                                                 std::to_string(want));
    }
}

void criterion_end_to_end() {
    Pipeline& pipeline = Pipeline::get();
    const std::string data = pipeline.data_dir();
    const DatasetManifest manifest = load_manifest(data + "/manifest.txt");
    expect(manifest.templates.size() == 5, "dataset has " +
                                               std::to_string(manifest.templates.size()) +
                                               " templates, wanted 5");
    expect(manifest.queries.size() == 75,
           "dataset has " + std::to_string(manifest.queries.size()) + " queries, wanted 75");

    const std::string run = pipeline.run_dir(1);
    const double budget_sec = 30.0 * 60.0;
    const double took = pipeline.generate_seconds + pipeline.run_seconds[1];
    expect(took < budget_sec,
           "generate+run took " + std::to_string(took) + " s, over the 30-minute budget");

    const auto csv = read_lines(run + "/report.csv");
    expect(csv.size() == 2 + 23,
           "report.csv has " + std::to_string(csv.size()) + " lines, wanted 25");
    expect(csv[0].rfind("# config_hash=", 0) == 0 && csv[0].find("seed=") != std::string::npos,
           "report.csv header lacks the config hash and seed");
    const std::vector<CombinationId> matrix = combination_matrix();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        const auto fields = split(csv[2 + i], ',');
        expect(fields.size() == 6, "CSV row " + std::to_string(i) + " has " +
                                       std::to_string(fields.size()) + " columns");
        const std::string name = fields[0] + "-" + fields[1];
        expect(name == combination_name(matrix[i]),
               "CSV row " + std::to_string(i) + " is " + name + ", wanted " +
                   combination_name(matrix[i]));
        expect(std::stod(fields[3]) >= 0.0 && std::stod(fields[3]) <= 100.0,
               name + " accuracy out of range: " + fields[3]);
    }

    const nlohmann::json stats = nlohmann::json::parse(read_text(run + "/stats.json"));
    expect(stats.at("combinations").size() == 23, "stats dump lacks the 23 combinations");
    for (const auto& combo : stats.at("combinations")) {
        expect(!combo.at("pairs").empty(), "a combination evaluated no pairs");
    }

    // the report step rebuilt plot data from the dump alone
    const auto scatter = read_lines(run + "/plots/scatter.tsv");
    expect(scatter.size() == 2 + 5 * 23,
           "scatter.tsv has " + std::to_string(scatter.size()) + " lines, wanted 117");
    for (const int yaw : {-30, -15, 0, 15, 30}) {
        const std::string prefix = std::to_string(yaw) + "\t";
        bool found = false;
        for (std::size_t i = 2; i < scatter.size(); ++i) {
            found = found || scatter[i].rfind(prefix, 0) == 0;
        }
        expect(found, "scatter.tsv has no rows for yaw " + std::to_string(yaw));
    }

    const auto ranking = read_lines(run + "/plots/ranking.tsv");
    expect(ranking.size() == 2 + 23,
           "ranking.tsv has " + std::to_string(ranking.size()) + " lines, wanted 25");
    double last = -1.0;
    for (std::size_t i = 2; i < ranking.size(); ++i) {
        const auto fields = split(ranking[i], '\t');
        expect(fields.size() == 7, "ranking row has " + std::to_string(fields.size()) + " columns");
        expect(std::stoul(fields[0]) == i - 1, "ranking ranks are not sequential");
        if (fields[6] != "nan") {
            const double d = std::stod(fields[6]);
            expect(d >= last, "ranking distances are not ascending");
            last = d;
        }
    }
    expect(split(ranking[2], '\t')[6] == "0.000000", "the best combination is not at distance 0");
}

void criterion_determinism() {
    Pipeline& pipeline = Pipeline::get();
    const std::string run1 = pipeline.run_dir(1);
    const std::string run2 = pipeline.run_dir(2);

    // report.csv: identical apart from the two wall-clock columns
    const auto csv1 = read_lines(run1 + "/report.csv");
    const auto csv2 = read_lines(run2 + "/report.csv");
    expect(csv1.size() == csv2.size(), "report.csv line counts differ between runs");
    for (std::size_t i = 0; i < csv1.size(); ++i) {
        if (i < 2) {
            expect(csv1[i] == csv2[i], "report.csv header differs between runs");
            continue;
        }
        auto a = split(csv1[i], ',');
        auto b = split(csv2[i], ',');
        expect(a.size() == 6 && b.size() == 6, "report.csv row has unexpected column count");
        a[2] = b[2] = "";  // total_time_sec
        a[5] = b[5] = "";  // correct_matches_per_sec
        for (int c = 0; c < 6; ++c) {
            expect(a[c] == b[c], "report.csv row " + std::to_string(i) + " column " +
                                     std::to_string(c + 1) + " differs: " + csv1[i] + " vs " +
                                     csv2[i]);
        }
    }

    for (const char* name : {"/stats.json", "/plots/scatter.tsv", "/plots/ranking.tsv"}) {
        expect(read_text(run1 + name) == read_text(run2 + name),
               std::string(name).substr(1) + " differs between identically-seeded runs");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void()> body;
    };
    const Criterion criteria[] = {
        {1, "box sums match the pixel loop on 1000 rectangles", criterion_box_sums},
        {2, "FAST agrees with the naive segment test and the square fixture", criterion_fast_oracle},
        {3, "brute-force matching equals the exhaustive scan", criterion_match_oracle},
        {4, "templates matched against themselves score 100% everywhere", criterion_self_match},
        {5, "the evaluation matrix holds exactly the 23 supported pairings", criterion_matrix},
        {6, "descriptors keep enough matches under yaw, BRIEF degrades first", criterion_yaw_retention},
        {7, "accuracy scoring matches the counting oracle", criterion_accuracy},
        {8, "the histogram prefilter and its correlation are sound", criterion_histogram},
        {9, "the CLI benchmarks the full matrix end to end in budget", criterion_end_to_end},
        {10, "an identically-seeded rerun reproduces every non-timing byte", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.body();
            std::printf("[PASS] criterion %d: %s\n", c.id, c.label);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s -- %s\n", c.id, c.label, e.what());
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("acceptance: %d of 10 criteria failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
}
