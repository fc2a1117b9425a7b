// Unit tests for the shared entropy primitives.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "renyi_ci/scalar_kernels.hpp"

namespace rc = renyi_ci;

TEST_CASE("xlogx convention and values") {
    CHECK(rc::xlogx(0.0) == 0.0);
    CHECK(rc::xlogx(1.0) == 0.0);
    CHECK(rc::xlogx(0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(rc::xlogx(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    // Negative inputs fall under the x > 0 guard and return 0.
    CHECK(rc::xlogx(-1e-18) == 0.0);
}

TEST_CASE("binary entropy: anchors, symmetry, reference value") {
    CHECK(rc::binary_entropy(0.0) == 0.0);
    CHECK(rc::binary_entropy(1.0) == 0.0);
    CHECK(rc::binary_entropy(0.5) == 1.0);
    CHECK(std::abs(rc::binary_entropy(0.3) - 0.88129089923069262) < 1e-15);
    for (double p : {0.01, 0.1, 0.25, 0.37, 0.49}) {
        // 1-(1-p) is one ulp off p, so demand closeness, not bit equality.
        CHECK(std::abs(rc::binary_entropy(p) - rc::binary_entropy(1.0 - p)) < 1e-15);
        CHECK(rc::binary_entropy(p) > 0.0);
        CHECK(rc::binary_entropy(p) < 1.0);
    }
}

TEST_CASE("binary relative entropy: zero on the diagonal, reference value, edges") {
    for (double p : {0.1, 0.3, 0.5, 0.9})
        CHECK(std::abs(rc::binary_relative_entropy(p, p)) < 1e-15);
    CHECK(std::abs(rc::binary_relative_entropy(0.1, 0.3) - 0.16781682137412181) < 1e-15);
    // Endpoint p values are fine as long as q is interior.
    CHECK(rc::binary_relative_entropy(0.0, 0.25) == doctest::Approx(-std::log2(0.75)));
    CHECK(rc::binary_relative_entropy(1.0, 0.25) == doctest::Approx(-std::log2(0.25)));
    CHECK(rc::binary_relative_entropy(0.2, 0.2) == 0.0);
    CHECK_THROWS_AS(rc::binary_relative_entropy(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(rc::binary_relative_entropy(0.5, 1.0), std::domain_error);
}

TEST_CASE("binary relative entropy is nonnegative and convex-ish in p") {
    for (double q : {0.05, 0.3, 0.45}) {
        for (int i = 0; i <= 20; ++i) {
            double p = i / 20.0;
            CHECK(rc::binary_relative_entropy(p, q) >= -1e-15);
        }
    }
}

TEST_CASE("binary convolution: identities") {
    CHECK(rc::binary_convolution(0.3, 0.0) == 0.3);
    CHECK(rc::binary_convolution(0.0, 0.3) == 0.3);
    CHECK(rc::binary_convolution(0.3, 0.5) == 0.5);
    CHECK(rc::binary_convolution(0.2, 0.2) == doctest::Approx(2 * 0.2 * 0.8));
    CHECK(rc::binary_convolution(0.1, 0.4) == rc::binary_convolution(0.4, 0.1));
    // Convolving with 1 flips the bias.
    CHECK(rc::binary_convolution(0.3, 1.0) == doctest::Approx(0.7));
}

TEST_CASE("entropy4: anchors and consistency with binary entropy") {
    CHECK(rc::entropy4(0.25, 0.25, 0.25, 0.25) == 2.0);
    CHECK(rc::entropy4(1.0, 0.0, 0.0, 0.0) == 0.0);
    // (p/2, p/2, (1-p)/2, (1-p)/2) has entropy H(p) + 1.
    for (double p : {0.1, 0.3, 0.5}) {
        double h = rc::entropy4(p / 2, p / 2, (1 - p) / 2, (1 - p) / 2);
        CHECK(std::abs(h - (rc::binary_entropy(p) + 1.0)) < 1e-14);
    }
}

TEST_CASE("entropy4: rounding-noise clamp vs genuine negatives") {
    // A cell inside the -kCellTol band is treated as zero.
    double h = rc::entropy4(-1e-13, 0.5, 0.25, 0.25);
    CHECK(h == doctest::Approx(1.5).epsilon(1e-12));
    CHECK_THROWS_AS(rc::entropy4(-1e-9, 0.5, 0.25, 0.25), std::domain_error);
}

TEST_CASE("domain guards") {
    CHECK_NOTHROW(rc::require_probability(0.0, "p"));
    CHECK_NOTHROW(rc::require_probability(1.0, "p"));
    CHECK_THROWS_AS(rc::require_probability(-0.01, "p"), std::domain_error);
    CHECK_THROWS_AS(rc::require_probability(1.01, "p"), std::domain_error);
    CHECK_THROWS_AS(rc::require_probability(std::numeric_limits<double>::quiet_NaN(), "p"),
                    std::domain_error);
    CHECK_NOTHROW(rc::require_in(0.3, 0.0, 0.5, "x"));
    CHECK_THROWS_AS(rc::require_in(0.6, 0.0, 0.5, "x"), std::domain_error);
}
