#include <doctest.h>

#include "nlt/error.hpp"
#include "nlt/suites.hpp"

using namespace nlt;

TEST_CASE("every named suite passes at small size") {
    for (std::string_view name : suite_names()) {
        for (std::size_t dim : {1u, 3u, 5u}) {
            SuiteOptions o;
            o.seed = 11;
            o.trials = 25;
            o.dim = dim;
            for (const CheckReport& r : run_suite(name, o)) {
                INFO(std::string(name) << " dim " << dim << " " << r.name << ": " << r.witness);
                CHECK(r.passed());
                CHECK(r.seed == o.seed);
            }
        }
    }
}

TEST_CASE("suites are deterministic") {
    SuiteOptions o;
    o.trials = 10;
    const auto a = run_suite("triangle-sugeno", o), b = run_suite("triangle-sugeno", o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].trials == b[i].trials);
    }
}

TEST_CASE("a zero tolerance override exposes round-off") {
    SuiteOptions o;
    o.trials = 30;
    o.dim = 5;
    o.tolerance = 0.0;
    bool any_failed = false;
    for (const CheckReport& r : run_suite("ideal-inequalities", o)) any_failed = any_failed || !r.passed();
    CHECK(any_failed);
}

TEST_CASE("unknown suites") {
    try {
        run_suite("nope", SuiteOptions{});
        FAIL("expected UnknownSuite");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownSuite);
    }
}
