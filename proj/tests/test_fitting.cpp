#include "support.hpp"
#include "trajsimp/errors.hpp"
#include "trajsimp/fitting.hpp"

#include <gtest/gtest.h>

#include <type_traits>

using namespace trajsimp;
using trajsimp::testing::residual_distance;

namespace {

FitConfig config(double zeta, Optimizations opts = Optimizations::all())
{
    FitConfig c;
    c.zeta = zeta;
    c.opts = opts;
    return c;
}

// Segment state after seeding with (2, 0) under zeta = 4: |L| = 2, theta = 0.
FitState seeded_state(const FitConfig& cfg)
{
    return fit_step(FitState::anchored_at({0, 0, 0}), {2, 0, 1}, cfg);
}

} // namespace

TEST(OptimizationFlags, ParseAndMaskRoundTrip)
{
    EXPECT_EQ(Optimizations::parse("all"), Optimizations::all());
    EXPECT_EQ(Optimizations::parse("none"), Optimizations::none());
    const Optimizations o = Optimizations::parse("10100");
    EXPECT_TRUE(o.far_first_active);
    EXPECT_FALSE(o.signed_extremes);
    EXPECT_TRUE(o.eager_rotation);
    EXPECT_FALSE(o.missing_zones);
    EXPECT_FALSE(o.absorb);
    for (unsigned m = 0; m < 32; ++m) {
        EXPECT_EQ(Optimizations::from_mask(m).mask(), m);
        EXPECT_EQ(Optimizations::parse(Optimizations::from_mask(m).to_string()).mask(), m);
    }
    EXPECT_THROW(Optimizations::parse("1010"), ConfigError);
    EXPECT_THROW(Optimizations::parse("10a00"), ConfigError);
}

TEST(FitConfigValidation, RejectsOutOfRangeValues)
{
    EXPECT_NO_THROW(config(4).validate());
    EXPECT_THROW(config(0).validate(), ConfigError);
    EXPECT_THROW(config(-1).validate(), ConfigError);
    FitConfig c = config(4);
    c.k_cap = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c.k_cap = 400001;
    EXPECT_THROW(c.validate(), ConfigError);
    c = config(4);
    c.gamma_m = 3.2;
    EXPECT_THROW(c.validate(), ConfigError);
    c.gamma_m = -0.1;
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(ZoneIndex, Examples)
{
    EXPECT_EQ(zone_index(2, 4), 1);
    EXPECT_EQ(zone_index(1, 4), 0);
    const long double r = std::sqrt(17.0L);
    const long oracle = static_cast<long>(std::ceil(r * 2.0L / 4.0L - 0.5L));
    EXPECT_EQ(oracle, 2);
    EXPECT_EQ(zone_index(std::sqrt(17.0), 4), oracle);
    EXPECT_EQ(zone_index(0, 4), 0);
}

TEST(ZoneIndex, AgreesWithHalfOpenAnnuli)
{
    for (double zeta : {0.3, 1.0, 4.0, 37.5}) {
        for (int k = 1; k <= 20000; ++k) {
            const double r = zeta / 4.0 + k * zeta * 1.37e-3;
            const long j = zone_index(r, zeta);
            EXPECT_LT(j * zeta / 2 - zeta / 4, r * (1 + 1e-12)) << r;
            EXPECT_LE(r, (j * zeta / 2 + zeta / 4) * (1 + 1e-12)) << r;
        }
    }
}

TEST(ZoneIndex, SnapsNearIntegers)
{
    // 2r/zeta - 0.5 lands within rounding of 1, so the ceiling is 1, not 2.
    EXPECT_EQ(zone_index(3.0 * (1 + 1e-15), 4.0), 1);
    EXPECT_EQ(zone_index(0.75 * 0.4, 0.4), 1);
}

TEST(FirstActiveThreshold, Examples)
{
    Optimizations on = Optimizations::none();
    on.far_first_active = true;
    EXPECT_DOUBLE_EQ(first_active_threshold(config(4, on)), 4.0);
    EXPECT_DOUBLE_EQ(first_active_threshold(config(4, Optimizations::none())), 1.0);
    EXPECT_DOUBLE_EQ(first_active_threshold(config(10, on)), 10.0);
}

TEST(Classify, Examples)
{
    const FitConfig base = config(4, Optimizations::none());
    const FitState fresh = FitState::anchored_at({0, 0, 0});
    EXPECT_EQ(classify(fresh, {0.5, 0, 1}, base), PointClass::Inactive);
    EXPECT_EQ(classify(fresh, {2, 0, 1}, base), PointClass::Active);

    const FitState s = seeded_state(base);
    ASSERT_DOUBLE_EQ(s.fitted.length, 2.0);
    ASSERT_DOUBLE_EQ(s.fitted.theta, 0.0);
    // Oracle distance of (2, 3) from the x axis is 3 > zeta / 2.
    ASSERT_GT(residual_distance({2, 3}, {0, 0}, {1, 0}), 2.0);
    EXPECT_EQ(classify(s, {2, 3, 2}, base), PointClass::Break);
}

TEST(Classify, FarFirstActiveRaisesThreshold)
{
    const FitState fresh = FitState::anchored_at({0, 0, 0});
    EXPECT_EQ(classify(fresh, {2, 0, 1}, config(4)), PointClass::Inactive);
    EXPECT_EQ(classify(fresh, {4.01, 0, 1}, config(4)), PointClass::Active);
}

TEST(Classify, InactivePointFarFromActiveRayBreaks)
{
    FitConfig c = config(4, Optimizations::none());
    FitState s = seeded_state(c);
    // Zone 2 active point on the axis, then a barely inactive point 1.9 m
    // off both L and the active ray. Tilting the active ray pushes it past zeta.
    s = fit_step(s, {4, 0, 2}, c);
    ASSERT_EQ(s.last_case, FitCase::Rotate);
    EXPECT_EQ(classify(s, {4.5, 1.9, 3}, c), PointClass::Inactive);
    FitState t = s;
    t.r_active = DirectedSegment::between({0, 0}, {4, -5});
    EXPECT_EQ(classify(t, {4.5, 1.9, 3}, c), PointClass::Break);
}

TEST(Classify, SignedExtremesBudget)
{
    Optimizations o = Optimizations::none();
    o.signed_extremes = true;
    const FitConfig c = config(4, o);
    FitState s = seeded_state(c);
    s = fit_step(s, {4, 1.5, 2}, c); // +side 1.5 from the axis
    ASSERT_NEAR(s.d_plus_max, 1.5, 1e-12);
    // A point 2.6 m below the current L: 1.5 + 2.6 > zeta.
    const double th = s.fitted.theta;
    const Point below{6 * std::cos(th) + 2.6 * std::sin(th), 6 * std::sin(th) - 2.6 * std::cos(th), 3};
    EXPECT_EQ(classify(s, below, c), PointClass::Break);
    // 2.6 alone is also beyond zeta / 2, so the base rule breaks too.
    EXPECT_EQ(classify(s, below, config(4, Optimizations::none())), PointClass::Break);
    // 2.2 on the +side stays within budget under the signed rule only.
    const Point above{6 * std::cos(th) - 2.2 * std::sin(th), 6 * std::sin(th) + 2.2 * std::cos(th), 3};
    EXPECT_EQ(classify(s, above, c), PointClass::Active);
    EXPECT_EQ(classify(s, above, config(4, Optimizations::none())), PointClass::Break);
}

TEST(Classify, PointCapBreaks)
{
    FitConfig c = config(4, Optimizations::none());
    c.k_cap = 3;
    FitState s = FitState::anchored_at({0, 0, 0});
    for (int i = 1; i <= 3; ++i) {
        ASSERT_NE(classify(s, {0.1 * i, 0, double(i)}, c), PointClass::Break);
        s = fit_step(s, {0.1 * i, 0, double(i)}, c);
    }
    EXPECT_EQ(s.points_in_segment, 3u);
    EXPECT_EQ(classify(s, {0.4, 0, 4}, c), PointClass::Break);
    EXPECT_EQ(classify(s, {20, 0, 4}, c), PointClass::Break);
}

TEST(FitStep, Examples)
{
    const FitConfig base = config(4, Optimizations::none());
    const FitState fresh = FitState::anchored_at({0, 0, 0});

    const FitState hold = fit_step(fresh, {0.5, 0, 1}, base);
    EXPECT_EQ(hold.fitted.length, 0.0);
    EXPECT_EQ(hold.last_case, FitCase::Hold);

    const FitState seed = fit_step(fresh, {2, 0, 1}, base);
    EXPECT_DOUBLE_EQ(seed.fitted.length, 2.0);
    EXPECT_DOUBLE_EQ(seed.fitted.theta, 0.0);
    EXPECT_EQ(seed.last_case, FitCase::Seed);
    EXPECT_EQ(seed.last_zone, 1);

    // Independent derivation: j = ceil(2 * sqrt(17) / 4 - 0.5) = 2, d = 1,
    // f = +1, so theta = asin(1 / 4) / 2.
    const long double expected = std::asin(0.25L) / 2.0L;
    EXPECT_NEAR(static_cast<double>(expected), 0.126340, 1e-6);
    for (Optimizations o : {Optimizations::none(), Optimizations::parse("01001")}) {
        const FitState rot = fit_step(seeded_state(config(4, o)), {4, 1, 2}, config(4, o));
        EXPECT_DOUBLE_EQ(rot.fitted.length, 4.0);
        EXPECT_NEAR(rot.fitted.theta, static_cast<double>(expected), 1e-12);
        EXPECT_EQ(rot.last_case, FitCase::Rotate);
        EXPECT_EQ(rot.last_zone, 2);
        EXPECT_EQ(rot.last_active, (Point{4, 1, 2}));
    }
}

TEST(FitStep, NegativeSideRotatesClockwise)
{
    const FitConfig base = config(4, Optimizations::none());
    const FitState rot = fit_step(seeded_state(base), {4, -1, 2}, base);
    EXPECT_NEAR(rot.fitted.theta, kTwoPi - std::asin(0.25) / 2, 1e-12);
}

TEST(FitStep, MissingZonesScaleRotation)
{
    Optimizations o = Optimizations::none();
    o.missing_zones = true;
    // From zone 1 straight to zone 3: j = 3, dj = 2.
    const Point p{6, 1, 2};
    const double r = 6.0;
    const double d = 1.0;
    const FitState with = fit_step(seeded_state(config(4, o)), p, config(4, o));
    const FitState without =
        fit_step(seeded_state(config(4, Optimizations::none())), p, config(4, Optimizations::none()));
    EXPECT_EQ(with.last_zone, 3);
    EXPECT_NEAR(with.fitted.theta, std::asin(d / r) * 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(without.fitted.theta, std::asin(d / r) / 3.0, 1e-12);
}

TEST(FitStep, EagerRotationUsesSignedExtreme)
{
    Optimizations o = Optimizations::none();
    o.signed_extremes = true;
    o.eager_rotation = true;
    const FitConfig c = config(4, o);
    FitState s = seeded_state(c);
    // Inactive +side point pushes d+max to 1.8 without rotating.
    s = fit_step(s, {2.3, 1.8, 2}, c);
    ASSERT_EQ(s.last_case, FitCase::Hold);
    ASSERT_NEAR(s.d_plus_max, 1.8, 1e-12);
    // Active +side point only 0.5 off: d_x = min(1.8, 4 sin(2 asin(0.5 / 4))).
    const FitState r = fit_step(s, {4, 0.5, 3}, c);
    const double dx = std::min(1.8, 4.0 * std::sin(2.0 * std::asin(0.5 / 4.0)));
    EXPECT_NEAR(r.fitted.theta, std::asin(dx / 4.0) / 2.0, 1e-12);
}

TEST(FitStep, ArcsineArgumentIsClamped)
{
    // Signed extremes allow d up to zeta while the radius may be zeta / 2
    // at most two zones later; theta must stay finite.
    Optimizations o = Optimizations::all();
    const FitConfig c = config(4, o);
    FitState s = FitState::anchored_at({0, 0, 0});
    SplitMix64 rng(17);
    for (int i = 1; i < 2000; ++i) {
        const Point p{i * 0.9, rng.uniform(-2.5, 2.5), double(i)};
        if (classify(s, p, c) == PointClass::Break)
            s = FitState::anchored_at(s.last_active);
        if (classify(s, p, c) == PointClass::Break)
            continue;
        s = fit_step(s, p, c);
        ASSERT_TRUE(std::isfinite(s.fitted.theta));
        ASSERT_GE(s.fitted.theta, 0.0);
        ASSERT_LT(s.fitted.theta, kTwoPi);
    }
}

TEST(FitStep, BreakPointIsPreconditionError)
{
    const FitConfig base = config(4, Optimizations::none());
    EXPECT_THROW(fit_step(seeded_state(base), {2, 3, 2}, base), PreconditionError);
}

TEST(FitStep, StateHasFixedSize)
{
    static_assert(std::is_trivially_copyable_v<FitState>);
    static_assert(std::is_standard_layout_v<FitState>);
    const FitConfig c = config(3);
    FitState s = FitState::anchored_at({0, 0, 0});
    const std::size_t size = sizeof s;
    for (int i = 1; i < 1000 && classify(s, {i * 1.0, 0, double(i)}, c) != PointClass::Break; ++i)
        s = fit_step(s, {i * 1.0, 0, double(i)}, c);
    EXPECT_EQ(sizeof s, size);
    EXPECT_GT(s.points_in_segment, 900u);
}

TEST(FitStepProperty, FittedLengthNeverShrinks)
{
    SplitMix64 rng(31);
    for (unsigned m = 0; m < 32; ++m) {
        const FitConfig c = config(rng.uniform(1, 30), Optimizations::from_mask(m));
        const Trajectory t = gen_random_walk(400, rng.uniform(0.5, 10), rng());
        FitState s = FitState::anchored_at(t[0]);
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (classify(s, t[i], c) == PointClass::Break) {
                s = FitState::anchored_at(s.last_active);
                continue;
            }
            const double before = s.fitted.length;
            s = fit_step(s, t[i], c);
            ASSERT_GE(s.fitted.length, before);
            const double zones = s.fitted.length / (c.zeta / 2);
            ASSERT_NEAR(zones, std::round(zones), 1e-9);
        }
    }
}

TEST(FitStepProperty, RotationMovesLineTowardPoint)
{
    SplitMix64 rng(41);
    const FitConfig c = config(4, Optimizations::none());
    int checked = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        // Random seeded state, then a random active candidate.
        const double theta = rng.uniform(0, kTwoPi);
        FitState s = fit_step(FitState::anchored_at({0, 0, 0}), {2 * std::cos(theta), 2 * std::sin(theta), 1}, c);
        const double rr = rng.uniform(3.01, 12);
        const double phi = theta + rng.uniform(-0.6, 0.6);
        const Point p{rr * std::cos(phi), rr * std::sin(phi), 2};
        if (classify(s, p, c) != PointClass::Active)
            continue;
        const double before = residual_distance(p, s.fitted.start, s.fitted.end());
        ASSERT_LE(before, 2.0 + 1e-12);
        const FitState next = fit_step(s, p, c);
        ASSERT_EQ(next.last_case, FitCase::Rotate);
        EXPECT_LE(residual_distance(p, next.fitted.start, next.fitted.end()), before + 1e-9);
        ++checked;
    }
    EXPECT_GT(checked, 1000);
}

TEST(FitStepProperty, SingleSegmentErrorBound)
{
    // Every point fitted into one segment lies within zeta of the line from
    // the anchor to the last active point, for every optimization mix.
    SplitMix64 rng(57);
    std::size_t segments = 0;
    for (unsigned m = 0; m < 32; ++m) {
        for (int rep = 0; rep < 30; ++rep) {
            const double zeta = rng.uniform(1, 50);
            const FitConfig c = config(zeta, Optimizations::from_mask(m));
            const Trajectory t = rep % 2 ? gen_random_walk(600, rng.uniform(0.2, 20), rng())
                                         : gen_grid_route(600, rng.uniform(0.2, 20), rng());
            // The anchor plus the points fed since it was placed; points
            // after the last active one stay with the closed segment.
            std::size_t start = 0, first_fed = 1, last_active = 0;
            FitState s = FitState::anchored_at(t[0]);
            auto check = [&](std::size_t end_excl) {
                if (!s.has_active)
                    return;
                ++segments;
                const auto dist = [&](std::size_t i) { return residual_distance(t[i], t[start], t[last_active]); };
                ASSERT_LE(dist(start), zeta * (1 + 1e-9));
                for (std::size_t i = first_fed; i < end_excl; ++i)
                    ASSERT_LE(dist(i), zeta * (1 + 1e-9)) << "mask " << m << " point " << i;
            };
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (classify(s, t[i], c) == PointClass::Break) {
                    check(i);
                    start = s.has_active ? last_active : i - 1;
                    last_active = start;
                    first_fed = i;
                    s = FitState::anchored_at(t[start]);
                }
                s = fit_step(s, t[i], c);
                if (s.last_case == FitCase::Seed || s.last_case == FitCase::Rotate)
                    last_active = i;
            }
            check(t.size());
        }
    }
    EXPECT_GT(segments, 1000u);
}

TEST(FitStepProperty, SeedsOnlyOncePerSegment)
{
    const FitConfig c = config(5);
    const Trajectory t = gen_random_walk(500, 2, 3);
    FitState s = FitState::anchored_at(t[0]);
    int seeds = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (classify(s, t[i], c) == PointClass::Break) {
            EXPECT_LE(seeds, 1);
            seeds = 0;
            s = FitState::anchored_at(s.last_active);
        }
        s = fit_step(s, t[i], c);
        seeds += s.last_case == FitCase::Seed;
    }
}

TEST(FitStepProperty, TryFitStepAgreesWithClassifyThenStep)
{
    SplitMix64 rng(71);
    for (unsigned m : {0u, 7u, 31u}) {
        const FitConfig c = config(rng.uniform(2, 30), Optimizations::from_mask(m));
        const Trajectory t = gen_random_walk(3000, rng.uniform(1, 10), rng());
        FitState s = FitState::anchored_at(t[0]);
        for (std::size_t i = 1; i < t.size(); ++i) {
            FitState tried = s;
            const bool accepted = try_fit_step(tried, t[i], c);
            ASSERT_EQ(accepted, classify(s, t[i], c) != PointClass::Break);
            if (!accepted) {
                EXPECT_EQ(tried.points_in_segment, s.points_in_segment);
                EXPECT_EQ(tried.fitted.theta, s.fitted.theta);
                s = fit_step(FitState::anchored_at(s.last_active), t[i], c);
                continue;
            }
            const FitState stepped = fit_step(s, t[i], c);
            EXPECT_EQ(tried.fitted.theta, stepped.fitted.theta);
            EXPECT_EQ(tried.fitted.length, stepped.fitted.length);
            EXPECT_EQ(tried.points_in_segment, stepped.points_in_segment);
            s = tried;
        }
    }
}
