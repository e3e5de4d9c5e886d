#pragma once

// Degree bounds, exact rational interpolation with holdout checking, and the
// conjecture screening driver that combines them.

#include "radcount/count.hpp"
#include "radcount/polynomial.hpp"
#include "radcount/quiver.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace radcount {

enum class CountMode { radical, overline, weakened };

std::string mode_name(CountMode mode, int l = 0, int m = 0);

struct Sample {
    int q = 0;
    mpz_class value;
};

struct SampleSet {
    CountMode mode = CountMode::radical;
    int l = 0, m = 0;        // weakened parameters
    std::string source;      // "brute" or "dispatch"
    std::vector<Sample> samples; // strictly ascending q
};

// Documented a-priori degree bounds: 2 dim rad (radical), dim A + dim rad
// (overline), 2 dim rad^l (weakened).
long degree_bound(const Quiver& q, const SummandVector& d, CountMode mode, int l = 1, int m = 0);

// Sharper bound actually used for fitting. If the commutator's structure
// tensor (projected onto the codomain) is identically zero the count is
// exactly q^(dx+dy); otherwise elements with nonzero adjoint form a dense
// complement and the count is at most 2 q^(dx+dy-1), so the degree drops by
// one. The tensor has 0/+-1 entries, making the dichotomy field-independent.
long fitting_degree_bound(const Quiver& q, const SummandVector& d, CountMode mode, int l = 1,
                          int m = 0);

struct HoldoutCheck {
    int q = 0;
    std::string predicted;
    std::string actual;
    bool match = false;
};

struct FitReport {
    bool fitted = false;
    PolyQ poly;              // the Lagrange fit (also on failed holdout, for reporting)
    long bound_used = 0;
    int points_fit = 0;      // bound_used + 1 points entered the fit
    std::vector<HoldoutCheck> holdout;
    bool nonnegative = false;
    bool integer_coefficients = false;
    std::string failure;     // nonempty when fitted == false
};

// Exact rational Lagrange fit through the first bound+1 samples; every
// remaining sample is a holdout and must match exactly. Requires at least
// bound+2 samples with strictly ascending distinct q (throws
// InsufficientSamplesError / std::invalid_argument).
FitReport interpolate(const SampleSet& samples, long bound);

struct ScreenModeReport {
    CountMode mode = CountMode::radical;
    long bound = 0;
    SampleSet samples;
    FitReport fit;
};

struct ScreenReport {
    std::vector<ScreenModeReport> modes; // radical, then overline
};

// Sample the radical count (dispatch engine) and the overline count (brute)
// at the given ascending q list, fit both against their fitting bounds, and
// report fit/no-fit plus the overline nonnegativity verdict. Throws
// InsufficientSamplesError when qs cannot cover bound+2 points.
ScreenReport screen_conjectures(const Quiver& q, const SummandVector& d,
                                const std::vector<int>& qs, const CountOptions& opts = {});

} // namespace radcount
