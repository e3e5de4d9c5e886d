#include "radcount/interpolate.hpp"

#include "radcount/basis.hpp"
#include "radcount/errors.hpp"
#include "radcount/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace radcount {

std::string mode_name(CountMode mode, int l, int m) {
    switch (mode) {
        case CountMode::radical:
            return "radical";
        case CountMode::overline:
            return "overline";
        case CountMode::weakened:
            return "weakened(" + std::to_string(l) + "," + std::to_string(m) + ")";
    }
    return "?";
}

namespace {

struct ProblemDims {
    int dx = 0, dy = 0;
    bool tensor_nonzero = false;
};

ProblemDims problem_dims(const Quiver& q, const SummandVector& d, CountMode mode, int l, int m) {
    ProblemDims out;
    if (mode == CountMode::overline) {
        AlgebraBasis basis = build_basis(q, d, /*include_constants=*/true);
        StructureConstants sc(basis);
        std::vector<int> xs = basis.radical_indices(), all(basis.dim());
        for (int i = 0; i < basis.dim(); ++i) all[i] = i;
        out.dx = static_cast<int>(xs.size());
        out.dy = basis.dim();
        out.tensor_nonzero = sc.has_nonzero_product(xs, all, all);
        return out;
    }
    AlgebraBasis basis = build_basis(q, d, /*include_constants=*/false);
    StructureConstants sc(basis);
    std::vector<int> xs, codom;
    if (mode == CountMode::radical) {
        xs.resize(basis.dim());
        for (int i = 0; i < basis.dim(); ++i) xs[i] = i;
        codom = xs;
    } else {
        if (l < 1) throw std::invalid_argument("weakened mode needs l >= 1");
        xs = radical_power_indices(basis, l);
        for (int i = 0; i < basis.dim(); ++i)
            if (basis.path_length(i) < m) codom.push_back(i);
    }
    out.dx = static_cast<int>(xs.size());
    out.dy = out.dx;
    out.tensor_nonzero = sc.has_nonzero_product(xs, xs, codom);
    return out;
}

} // namespace

long degree_bound(const Quiver& q, const SummandVector& d, CountMode mode, int l, int m) {
    ProblemDims pd = problem_dims(q, d, mode, l, m);
    return static_cast<long>(pd.dx) + pd.dy;
}

long fitting_degree_bound(const Quiver& q, const SummandVector& d, CountMode mode, int l, int m) {
    ProblemDims pd = problem_dims(q, d, mode, l, m);
    return static_cast<long>(pd.dx) + pd.dy - (pd.tensor_nonzero ? 1 : 0);
}

FitReport interpolate(const SampleSet& set, long bound) {
    const std::vector<Sample>& s = set.samples;
    if (bound < 0) throw std::invalid_argument("interpolate: negative degree bound");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].q <= s[i - 1].q)
            throw std::invalid_argument("interpolate: sample q values must be strictly ascending");
    int needed = static_cast<int>(bound) + 2;
    if (static_cast<int>(s.size()) < needed)
        throw InsufficientSamplesError(
            needed, static_cast<int>(s.size()),
            "interpolation against degree bound " + std::to_string(bound) + " needs at least " +
                std::to_string(needed) + " sample points (" + std::to_string(bound + 1) +
                " to fit, 1 to hold out); got " + std::to_string(s.size()));

    int n = static_cast<int>(bound) + 1;
    // Exact Lagrange fit through the first n points.
    PolyQ fit;
    for (int i = 0; i < n; ++i) {
        PolyQ basis_poly = PolyQ::constant(1);
        mpq_class denom = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            basis_poly *= PolyQ::q_power(1) - PolyQ::constant(s[j].q);
            denom *= mpq_class(s[i].q - s[j].q);
        }
        fit += basis_poly.scaled(mpq_class(s[i].value) / denom);
    }

    FitReport rep;
    rep.poly = fit;
    rep.bound_used = bound;
    rep.points_fit = n;
    rep.nonnegative = fit.nonnegative_coefficients();
    rep.integer_coefficients = fit.integer_coefficients();

    bool all_match = true;
    for (std::size_t i = n; i < s.size(); ++i) {
        HoldoutCheck hc;
        hc.q = s[i].q;
        mpz_class pred;
        mpq_class predq = fit.eval(mpq_class(s[i].q));
        if (predq.get_den() == 1) {
            hc.predicted = predq.get_num().get_str();
            hc.match = (predq.get_num() == s[i].value);
        } else {
            hc.predicted = predq.get_num().get_str() + "/" + predq.get_den().get_str();
            hc.match = false;
        }
        hc.actual = s[i].value.get_str();
        all_match = all_match && hc.match;
        rep.holdout.push_back(std::move(hc));
    }

    rep.fitted = all_match;
    if (!all_match) {
        std::string bad;
        for (const HoldoutCheck& hc : rep.holdout)
            if (!hc.match) bad += (bad.empty() ? "" : ", ") + std::string("q=") + std::to_string(hc.q);
        rep.failure = "holdout mismatch at " + bad +
                      "; the count does not follow a degree-" + std::to_string(bound) +
                      " polynomial on these samples";
    }
    return rep;
}

ScreenReport screen_conjectures(const Quiver& q, const SummandVector& d,
                                const std::vector<int>& qs, const CountOptions& opts) {
    std::vector<int> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != qs.size())
        throw std::invalid_argument("screen_conjectures: sample q values must be distinct");

    ScreenReport report;
    for (CountMode mode : {CountMode::radical, CountMode::overline}) {
        ScreenModeReport mr;
        mr.mode = mode;
        mr.bound = fitting_degree_bound(q, d, mode);
        int needed = static_cast<int>(mr.bound) + 2;
        if (static_cast<int>(sorted.size()) < needed)
            throw InsufficientSamplesError(
                needed, static_cast<int>(sorted.size()),
                mode_name(mode) + " screening needs " + std::to_string(needed) +
                    " sample points for degree bound " + std::to_string(mr.bound) + "; got " +
                    std::to_string(sorted.size()));

        mr.samples.mode = mode;
        mr.samples.source = (mode == CountMode::radical) ? "dispatch" : "brute";
        for (int fq : sorted) {
            Sample smp;
            smp.q = fq;
            smp.value = (mode == CountMode::radical) ? dispatch_count(q, d, fq, opts).value
                                                     : count_overline(q, d, fq, opts).value;
            mr.samples.samples.push_back(std::move(smp));
        }
        mr.fit = interpolate(mr.samples, mr.bound);
        report.modes.push_back(std::move(mr));
    }
    return report;
}

} // namespace radcount
