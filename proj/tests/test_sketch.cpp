#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "augur/sketch.hpp"
#include "augur/random.hpp"

using namespace augur;

TEST_CASE("one update sets exactly r counters to 1") {
    CounterArray sketch(4, 16, 1);
    sketch.update(42);
    std::size_t ones = 0, others = 0;
    for (auto c : sketch.counters()) {
        ones += c == 1;
        others += c > 1;
    }
    CHECK(ones == 4);
    CHECK(others == 0);
}

TEST_CASE("collision-free queries are exact") {
    CounterArray sketch(4, 64, 2);
    sketch.update(7);
    sketch.update(7);
    CHECK(sketch.query(7) == 2);
    CHECK(sketch.query(8) <= 2);  // may collide, never undercount
}

TEST_CASE("forced collision sums colliding counts") {
    // One row, one column: everything collides.
    CounterArray sketch(1, 1, 3);
    sketch.update(1);
    sketch.update(2);
    sketch.update(3, 2);
    CHECK(sketch.query(99) == 4);
}

TEST_CASE("empty sketch queries zero") {
    CounterArray sketch(3, 8, 4);
    CHECK(sketch.query(123) == 0);
}

TEST_CASE("update linearity: one delta equals repeated ones") {
    CounterArray a(3, 8, 5), b(3, 8, 5);
    a.update(9, 3);
    b.update(9);
    b.update(9);
    b.update(9);
    CHECK(a.counters() == b.counters());
}

TEST_CASE("per-row totals equal the update mass") {
    CounterArray sketch(3, 8, 6);
    Rng rng(1);
    std::uint64_t mass = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t delta = 1 + rng.below(4);
        sketch.update(rng.below(50), delta);
        mass += delta;
    }
    for (std::size_t row = 0; row < 3; ++row) {
        std::uint64_t total = 0;
        for (std::size_t c = 0; c < 8; ++c) total += sketch.counters()[row * 8 + c];
        CHECK(total == mass);
    }
}

TEST_CASE("fuzzed small streams never undercount") {
    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        auto rows = static_cast<std::size_t>(1 + rng.below(4));
        auto cols = static_cast<std::size_t>(1 + rng.below(8));
        CounterArray sketch(rows, cols, rng.next_u64());
        std::map<std::uint64_t, std::uint64_t> exact;
        auto len = static_cast<std::size_t>(rng.below(64));
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t item = rng.below(16);
            sketch.update(item);
            ++exact[item];
        }
        for (std::uint64_t item = 0; item < 16; ++item) {
            auto truth = exact.count(item) ? exact[item] : 0;
            CHECK(sketch.query(item) >= truth);
        }
    }
}

TEST_CASE("empty predicted set collapses to plain Count-Min bit-for-bit") {
    CounterArray plain(4, 32, 11);
    LearnedSketch learned(4, 32, 11, {});
    Rng rng(2);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t item = rng.below(100);
        plain.update(item);
        learned.update(item);
    }
    CHECK(learned.base().counters() == plain.counters());
    for (std::uint64_t item = 0; item < 100; ++item)
        CHECK(learned.query(item) == plain.query(item));
}

TEST_CASE("heavy-table items are exact") {
    LearnedSketch learned(2, 4, 12, {5});
    ZipfStream stream(100, 1.2, 3);
    std::uint64_t true_five = 0;
    for (int i = 0; i < 5000; ++i) {
        auto item = stream.next();
        learned.update(item);
        true_five += item == 5;
    }
    CHECK(learned.query(5) == true_five);
    CHECK(learned.total_counters() == 2 * 4 + 1);
}

TEST_CASE("learned sketch with oracle top-k beats space-matched plain on Zipf") {
    // Direction of the improvement only; magnitude is workload-dependent.
    const std::size_t universe = 1000, rows = 5, cols = 200, heavy = 50;
    int wins = 0;
    const int seeds = 10;
    for (int seed = 0; seed < seeds; ++seed) {
        ZipfStream stream(universe, 1.1, derive_seed(77, seed));
        std::vector<std::uint64_t> items;
        std::vector<std::uint64_t> counts(universe + 1, 0);
        for (int i = 0; i < 100000; ++i) {
            items.push_back(stream.next());
            ++counts[items.back()];
        }
        std::vector<std::uint64_t> ranked;
        for (std::uint64_t item = 1; item <= universe; ++item) ranked.push_back(item);
        std::sort(ranked.begin(), ranked.end(), [&](auto a, auto b) {
            return counts[a] != counts[b] ? counts[a] > counts[b] : a < b;
        });
        ranked.resize(heavy);

        CounterArray plain(rows, cols, derive_seed(88, seed));
        LearnedSketch learned(rows, cols - heavy / rows, derive_seed(88, seed), ranked);
        for (auto item : items) {
            plain.update(item);
            learned.update(item);
        }
        CHECK(learned.total_counters() == rows * cols);

        double err_plain = 0, err_learned = 0;
        for (std::uint64_t item = 1; item <= universe; ++item) {
            err_plain += static_cast<double>(plain.query(item) - counts[item]);
            err_learned += static_cast<double>(learned.query(item) - counts[item]);
        }
        wins += err_learned < err_plain;
    }
    CHECK(wins == seeds);
}

TEST_CASE("zipf stream hits every bucket with plausible skew") {
    ZipfStream stream(10, 1.0, 5);
    std::vector<int> counts(11, 0);
    for (int i = 0; i < 20000; ++i) ++counts[stream.next()];
    CHECK(counts[0] == 0);
    CHECK(counts[1] > counts[10]);
    for (int i = 1; i <= 10; ++i) CHECK(counts[i] > 0);
}

TEST_CASE("invalid sketch parameters are rejected") {
    CHECK_THROWS(CounterArray(0, 4, 1));
    CHECK_THROWS(CounterArray(4, 0, 1));
    CounterArray ok(1, 1, 1);
    CHECK_THROWS(ok.update(3, 0));
    CHECK_THROWS(ZipfStream(0, 1.0, 1));
    CHECK_THROWS(ZipfStream(5, 0.0, 1));
}
