#include "coxarr/cli/hunt.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "coxarr/arrangement.h"
#include "coxarr/cli/commands.h"
#include "coxarr/random.h"
#include "coxarr/regions.h"
#include "coxarr/sphere.h"

namespace coxarr::cli {

namespace {

constexpr std::size_t kSolidAngleSamples = 4096;

double relative_spread(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    return mean > 0.0 ? (*hi - *lo) / mean : 0.0;
}

void score_sphere(const Arrangement& a, HuntTrial& t) {
    const SphericalComplex c = build_complex(a);
    const Tolerance& tol = a.tol();
    t.regions = c.num_faces();
    t.isometric = all_regions_isometric(c, tol);

    const auto ref = face_signature(c.faces.front(), tol);
    bool same_sides = true;
    double worst = 0.0;
    std::vector<double> areas;
    for (const auto& f : c.faces) {
        areas.push_back(f.area);
        if (f.size() != ref.size()) {
            same_sides = false;
            continue;
        }
        worst = std::max(worst, ref.distance(face_signature(f, tol)));
    }
    t.score = same_sides ? worst : kPi + relative_spread(areas);
}

void score_general(const Arrangement& a, std::uint64_t trial_seed, HuntTrial& t) {
    const auto en = enumerate_regions(a);
    t.regions = en.size();

    Rng rng(Rng::derive_seed(trial_seed, 1));
    std::vector<double> hits(en.size(), 0.0);
    for (std::size_t s = 0; s < kSolidAngleSamples; ++s) {
        const auto sv = sign_vector_of(a, random_unit_vector(a.dim(), rng));
        if (!sv) continue;
        const std::size_t k = en.find(*sv);
        if (k != RegionEnumeration::npos) hits[k] += 1.0;
    }
    std::vector<double> facets(en.facet_counts.begin(), en.facet_counts.end());
    double facet_spread = 0.0;
    if (!facets.empty()) {
        const auto [lo, hi] = std::minmax_element(facets.begin(), facets.end());
        facet_spread = (*hi - *lo) / static_cast<double>(a.dim());
    }
    t.score = relative_spread(hits) + facet_spread;
}

std::string shortest(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

void print_trial(std::ostream& out, std::size_t rank, const HuntTrial& t) {
    out << "  #" << rank << " trial " << t.trial << " seed " << t.seed << " score " << sci(t.score)
        << " regions " << t.regions << '\n';
    for (const auto& v : t.normals) {
        out << "     ";
        for (std::size_t i = 0; i < v.dim(); ++i) out << ' ' << shortest(v[i]);
        out << '\n';
    }
}

}  // namespace

void validate(const HuntOptions& o) {
    if (o.dim < 3) throw PreconditionError("hunt needs dim >= 3");
    if (o.n < o.dim) throw PreconditionError("hunt needs n >= dim");
    if (o.trials < 1) throw PreconditionError("hunt needs at least one trial");
    if (o.top < 1) throw PreconditionError("hunt needs top >= 1");
}

HuntTrial score_trial(std::size_t dim, std::size_t n, std::size_t trial, std::uint64_t trial_seed) {
    HuntTrial t;
    t.trial = trial;
    t.seed = trial_seed;
    Rng rng(trial_seed);
    std::vector<VecD> raw;
    raw.reserve(n);
    for (std::size_t i = 0; i < n; ++i) raw.push_back(random_unit_vector(dim, rng));
    try {
        const Arrangement a = make_arrangement(dim, raw, Tolerance{});
        if (a.size() != n || !is_essential(a)) {
            t.degenerate = true;
            return t;
        }
        t.normals = a.normals();
        t.coxeter = is_coxeter_mirror_closure(a);
        if (dim == 3) score_sphere(a, t);
        else score_general(a, trial_seed, t);
    } catch (const Error&) {
        t.degenerate = true;
    }
    return t;
}

HuntReport run_hunt(const HuntOptions& opts) {
    validate(opts);
    std::vector<HuntTrial> trials(opts.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < opts.trials; i = next++)
            trials[i] = score_trial(opts.dim, opts.n, i, Rng::derive_seed(opts.seed, i));
    };
    std::size_t threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, opts.trials);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    HuntReport r;
    r.options = opts;
    for (auto& t : trials) {
        if (t.degenerate) {
            ++r.degenerate;
            continue;
        }
        if (t.coxeter) {
            ++r.coxeter;
            continue;
        }
        if (opts.dim == 3 && t.isometric) r.violations.push_back(t);
        r.candidates.push_back(std::move(t));
    }
    std::sort(r.candidates.begin(), r.candidates.end(), [](const HuntTrial& a, const HuntTrial& b) {
        return a.score != b.score ? a.score < b.score : a.trial < b.trial;
    });
    if (r.candidates.size() > opts.top) r.candidates.resize(opts.top);
    return r;
}

void print_hunt(std::ostream& out, const HuntReport& r) {
    const auto& o = r.options;
    out << "# hunt rng=" << Rng::kName << " seed=" << o.seed << " dim=" << o.dim << " n=" << o.n
        << " trials=" << o.trials << " top=" << o.top << '\n';
    if (o.dim == 3)
        out << "# score: max congruence-signature distance from face 0 (pi + area spread if side counts differ)\n";
    else
        out << "# score (heuristic): solid-angle spread over " << kSolidAngleSamples
            << " samples + facet-count spread / dim\n";
    out << "trials: " << o.trials << '\n'
        << "degenerate: " << r.degenerate << '\n'
        << "coxeter: " << r.coxeter << '\n'
        << "theorem_violations: " << r.violations.size() << '\n';
    for (std::size_t i = 0; i < r.violations.size(); ++i) print_trial(out, i + 1, r.violations[i]);
    out << "candidates: " << r.candidates.size() << '\n';
    for (std::size_t i = 0; i < r.candidates.size(); ++i) print_trial(out, i + 1, r.candidates[i]);
}

int cmd_hunt(const HuntOptions& opts, std::ostream& out, std::ostream& err) {
    HuntReport r;
    try {
        r = run_hunt(opts);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    print_hunt(out, r);
    if (!r.violations.empty()) {
        err << "error: " << r.violations.size()
            << " theorem-violating candidate(s): isometric regions without a closed mirror system\n";
        return kExitTheoremViolation;
    }
    return kExitOk;
}

}  // namespace coxarr::cli
