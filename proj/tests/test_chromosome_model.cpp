#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "gaids/chromosome.hpp"

using namespace gaids;

namespace {

FeatureVector random_unit(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    FeatureVector v;
    for (int i = 0; i < kFeatureCount; ++i) v[i] = u(gen);
    return v;
}

// Identity normalization: min 0, max 1 in every feature.
NormalizationStats unit_stats() {
    NormalizationStats s;
    s.min = FeatureVector::Zero();
    s.max = FeatureVector::Ones();
    return s;
}

ConnectionRecord record(const FeatureVector& x, const std::string& label) {
    return {x, label, category_of(label).value_or(Category::Normal)};
}

double oracle_distance(const FeatureVector& a, const FeatureVector& b) {
    double sum = 0.0;
    for (int i = 0; i < kFeatureCount; ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sum / kFeatureCount);
}

}  // namespace

TEST_CASE("distance") {
    const FeatureVector zeros = FeatureVector::Zero();
    const FeatureVector ones = FeatureVector::Ones();
    CHECK(distance(ones, ones) == 0.0);
    CHECK(distance(zeros, ones) == doctest::Approx(1.0).epsilon(1e-15));

    FeatureVector half = zeros;
    half[17] = 0.5;
    CHECK(distance(zeros, half) == doctest::Approx(0.08111071056538127).epsilon(1e-14));
    CHECK(distance(half, zeros) == distance(zeros, half));

    SUBCASE("dimension mismatch") {
        const Eigen::VectorXd short_vec = Eigen::VectorXd::Zero(37);
        try {
            distance(short_vec, Eigen::VectorXd::Zero(37));
            FAIL("expected DimensionMismatch");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DimensionMismatch);
        }
    }
    SUBCASE("accepts Eigen expressions") {
        CHECK(distance(zeros, 0.5 * ones + 0.5 * ones) == doctest::Approx(1.0));
    }
}

TEST_CASE("merge_record") {
    SUBCASE("merging a copy of the centroid") {
        const FeatureVector x = FeatureVector::Constant(0.3);
        const Chromosome merged = merge_record(seed_chromosome(x, "normal"), x);
        CHECK(merged.centroid == x);
        CHECK(merged.member_count == 2);
        CHECK(merged.spread == 0.0);
    }
    SUBCASE("two-point midpoint") {
        FeatureVector x = FeatureVector::Zero();
        x[0] = 1.0;
        const Chromosome merged = merge_record(seed_chromosome(FeatureVector::Zero(), "normal"), x);
        CHECK(merged.centroid[0] == 0.5);
        CHECK(merged.centroid.tail<37>().isZero());
        CHECK(merged.member_count == 2);
        // both points sit 0.5 away in one dimension
        CHECK(merged.spread == doctest::Approx(0.08111071056538127).epsilon(1e-12));
    }
    SUBCASE("20 sequential merges equal the batch mean and the exact spread") {
        std::mt19937_64 gen(42);
        std::vector<FeatureVector> xs;
        for (int i = 0; i < 20; ++i) xs.push_back(random_unit(gen));
        Chromosome c = seed_chromosome(xs[0], "smurf");
        for (int i = 1; i < 20; ++i) c = merge_record(c, xs[i]);

        FeatureVector mean = FeatureVector::Zero();
        for (const auto& x : xs) mean += x;
        mean /= 20.0;
        double sq = 0.0;
        for (const auto& x : xs) sq += oracle_distance(x, mean) * oracle_distance(x, mean);
        CHECK(c.member_count == 20);
        CHECK((c.centroid - mean).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(c.spread == doctest::Approx(std::sqrt(sq / 20.0)).epsilon(1e-9));
    }
}

TEST_CASE("precalculate: hand-traced three-point cases") {
    const auto stats = unit_stats();
    FeatureVector a = FeatureVector::Constant(0.5);
    FeatureVector b = a, c = a;
    SUBCASE("all within range -> one chromosome") {
        b[0] += 0.2;  // distance 0.2/sqrt(38) ~ 0.032
        c[1] += 0.2;  // b-c distance ~ 0.046
        const std::vector<ConnectionRecord> data = {record(a, "normal"), record(b, "normal"), record(c, "normal")};
        const ChromosomeModel model = precalculate(data, 0.125, stats);
        REQUIRE(model.groups.size() == 1);
        REQUIRE(model.groups[0].chromosomes.size() == 1);
        CHECK(model.groups[0].chromosomes[0].member_count == 3);
        CHECK((model.groups[0].chromosomes[0].centroid - (a + b + c) / 3.0).norm() < 1e-15);
    }
    SUBCASE("all beyond range -> three chromosomes") {
        b.head<10>().array() += 0.45;  // distance 0.45*sqrt(10/38) ~ 0.23
        c.tail<10>().array() -= 0.45;
        const std::vector<ConnectionRecord> data = {record(a, "normal"), record(b, "normal"), record(c, "normal")};
        const ChromosomeModel model = precalculate(data, 0.125, stats);
        REQUIRE(model.groups.size() == 1);
        CHECK(model.groups[0].chromosomes.size() == 3);
        for (const auto& ch : model.groups[0].chromosomes) {
            CHECK(ch.member_count == 1);
            CHECK(ch.spread == 0.0);
        }
    }
    SUBCASE("records never merge across labels") {
        const std::vector<ConnectionRecord> data = {record(a, "normal"), record(a, "smurf"), record(a, "normal")};
        const ChromosomeModel model = precalculate(data, 0.125, stats);
        REQUIRE(model.groups.size() == 2);
        CHECK(model.groups[0].label == "normal");
        CHECK(model.groups[0].chromosomes.size() == 1);
        CHECK(model.groups[0].chromosomes[0].member_count == 2);
        CHECK(model.groups[1].label == "smurf");
        CHECK(model.groups[1].category == Category::Dos);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(precalculate({}, 0.125, stats), Error);
        const std::vector<ConnectionRecord> data = {record(a, "normal")};
        CHECK_THROWS_AS(precalculate(data, -1.0, stats), Error);
    }
}

TEST_CASE("precalculate normalizes before merging") {
    NormalizationStats stats;
    stats.min = FeatureVector::Zero();
    stats.max = FeatureVector::Constant(1000.0);
    const std::vector<ConnectionRecord> data = {record(FeatureVector::Constant(500.0), "normal"),
                                                record(FeatureVector::Constant(510.0), "normal")};
    const ChromosomeModel model = precalculate(data, 0.125, stats);
    REQUIRE(model.chromosome_count() == 1);
    CHECK(model.groups[0].chromosomes[0].centroid[0] == doctest::Approx(0.505));
}

TEST_CASE("property: conservation, label purity, centroids in the unit cube") {
    std::mt19937_64 gen(7);
    const auto labels = training_labels();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ConnectionRecord> data;
        const std::size_t n = 50 + trial * 13;
        std::vector<FeatureVector> anchors;
        for (int k = 0; k < 4; ++k) anchors.push_back(random_unit(gen));
        std::normal_distribution<double> noise(0.0, 0.05 + 0.01 * trial);
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector x = anchors[i % 4];
            for (int j = 0; j < kFeatureCount; ++j) x[j] += noise(gen);
            data.push_back(record(x, std::string(labels[(i * 7) % 4 + trial % 10])));
        }
        const double range = 0.02 + 0.01 * trial;
        const ChromosomeModel model = precalculate(data, range, fit_normalization(data));

        std::uint64_t members = 0;
        std::set<std::string> seen;
        for (const auto& g : model.groups) {
            CHECK(seen.insert(g.label).second);
            CHECK(!g.chromosomes.empty());
            CHECK(g.category == *category_of(g.label));
            for (const auto& c : g.chromosomes) {
                members += c.member_count;
                CHECK(c.group_label == g.label);
                CHECK(c.member_count >= 1);
                CHECK(c.spread >= 0.0);
                if (c.member_count == 1) CHECK(c.spread == 0.0);
                CHECK(c.centroid.minCoeff() >= 0.0);
                CHECK(c.centroid.maxCoeff() <= 1.0);
            }
        }
        CHECK(members == n);
        CHECK(model.training_size == n);

        const ChromosomeModel again = precalculate(data, range, fit_normalization(data));
        REQUIRE(again.chromosome_count() == model.chromosome_count());
        for (std::size_t g = 0; g < model.groups.size(); ++g) {
            for (std::size_t k = 0; k < model.groups[g].chromosomes.size(); ++k) {
                CHECK(again.groups[g].chromosomes[k].centroid == model.groups[g].chromosomes[k].centroid);
                CHECK(again.groups[g].chromosomes[k].spread == model.groups[g].chromosomes[k].spread);
            }
        }
    }
}

TEST_CASE("property: labels confined to a range/2 ball give one chromosome per group") {
    std::mt19937_64 gen(9);
    const double range = 0.125;
    std::vector<ConnectionRecord> data;
    std::vector<FeatureVector> firsts;
    const std::vector<std::string> labels = {"normal", "smurf", "nmap"};
    for (std::size_t k = 0; k < labels.size(); ++k) firsts.push_back(random_unit(gen) * 0.5 + FeatureVector::Constant(0.25));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < 300; ++i) {
        const std::size_t k = i % labels.size();
        FeatureVector dir;
        for (int j = 0; j < kFeatureCount; ++j) dir[j] = u(gen);
        // radius strictly inside range/2 under the normalized metric
        const double radius = (i < labels.size()) ? 0.0 : 0.49 * range * std::abs(u(gen));
        const FeatureVector x = firsts[k] + dir.normalized() * radius * std::sqrt(double(kFeatureCount));
        data.push_back(record(x, labels[k]));
    }
    const ChromosomeModel model = precalculate(data, range, unit_stats());
    CHECK(model.groups.size() == 3);
    for (const auto& g : model.groups) CHECK(g.chromosomes.size() == 1);
}

TEST_CASE("nearest_chromosome") {
    const auto stats = unit_stats();
    std::mt19937_64 gen(1);

    SUBCASE("single chromosome") {
        const FeatureVector c = random_unit(gen);
        const std::vector<ConnectionRecord> data = {record(c, "normal")};
        const ChromosomeModel model = precalculate(data, 0.125, stats);
        const FeatureVector x = random_unit(gen);
        const NearestMatch m = nearest_chromosome(x, model);
        CHECK(m.chromosome == &model.groups[0].chromosomes[0]);
        CHECK(m.distance == distance(x, c));
        CHECK(nearest_chromosome(c, model).distance == 0.0);
    }
    SUBCASE("empty model") {
        try {
            nearest_chromosome(FeatureVector::Zero(), ChromosomeModel{});
            FAIL("expected EmptyModel");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyModel);
        }
    }
    SUBCASE("ties go to the smaller label, then the earlier chromosome") {
        const FeatureVector p = FeatureVector::Constant(0.5);
        const std::vector<ConnectionRecord> data = {record(p, "smurf"), record(p, "back"), record(p, "normal")};
        const ChromosomeModel model = precalculate(data, 0.125, stats);
        CHECK(nearest_chromosome(p, model).group->label == "back");

        FeatureVector lo = p, hi = p;
        lo[0] = 0.25;
        hi[0] = 0.75;
        const std::vector<ConnectionRecord> same = {record(lo, "normal"), record(hi, "normal")};
        const ChromosomeModel twin = precalculate(same, 0.01, stats);
        REQUIRE(twin.chromosome_count() == 2);
        CHECK(nearest_chromosome(p, twin).chromosome == &twin.groups[0].chromosomes[0]);
    }
    SUBCASE("matches an exhaustive scan") {
        std::vector<ConnectionRecord> data;
        const std::vector<std::string> labels = {"normal", "smurf", "neptune", "satan", "perl"};
        for (int k = 0; k < 10; ++k) data.push_back(record(random_unit(gen), labels[k % 5]));
        const ChromosomeModel model = precalculate(data, 0.01, stats);
        REQUIRE(model.chromosome_count() == 10);
        for (int q = 0; q < 100; ++q) {
            const FeatureVector x = random_unit(gen);
            const Chromosome* best = nullptr;
            double best_d = std::numeric_limits<double>::infinity();
            for (const auto& g : model.groups)
                for (const auto& c : g.chromosomes)
                    if (const double d = oracle_distance(x, c.centroid); d < best_d) {
                        best_d = d;
                        best = &c;
                    }
            const NearestMatch m = nearest_chromosome(x, model);
            CHECK(m.chromosome == best);
            CHECK(m.distance == doctest::Approx(best_d).epsilon(1e-12));
        }
    }
}
