#include "coxarr/congruence.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace coxarr {

namespace {

// Fuzzy lexicographic order: components within tolerance compare equal.
bool fuzzy_less(const std::vector<CornerStep>& a, const std::vector<CornerStep>& b, StepTolerance tol) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].angle - b[i].angle) > tol.angle_eps) return a[i].angle < b[i].angle;
        if (std::abs(a[i].length - b[i].length) > tol.length_eps) return a[i].length < b[i].length;
    }
    return false;
}

}  // namespace

std::vector<std::vector<CornerStep>> boundary_variants(std::span<const CornerStep> walk) {
    const std::size_t k = walk.size();
    std::vector<std::vector<CornerStep>> out;
    out.reserve(2 * k);
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<CornerStep> fwd(k), rev(k);
        for (std::size_t i = 0; i < k; ++i) {
            fwd[i] = walk[(s + i) % k];
            // Walking backwards from vertex s: the angle stays, the outgoing
            // edge is the one that entered the vertex in the forward walk.
            const std::size_t v = (s + k - i) % k;
            rev[i] = {walk[v].angle, walk[(v + k - 1) % k].length};
        }
        out.push_back(std::move(fwd));
        out.push_back(std::move(rev));
    }
    return out;
}

CongruenceSignature::CongruenceSignature(std::span<const CornerStep> walk, StepTolerance tol) {
    auto variants = boundary_variants(walk);
    if (variants.empty()) return;
    auto best = variants.begin();
    for (auto it = variants.begin() + 1; it != variants.end(); ++it)
        if (fuzzy_less(*it, *best, tol)) best = it;
    canonical_ = std::move(*best);
}

std::vector<double> CongruenceSignature::angles() const {
    std::vector<double> out;
    for (const auto& c : canonical_) out.push_back(c.angle);
    std::sort(out.begin(), out.end());
    return out;
}

double CongruenceSignature::distance(const CongruenceSignature& other) const {
    if (size() != other.size()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : boundary_variants(other.canonical_)) {
        double worst = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            worst = std::max(worst, std::abs(v[i].angle - canonical_[i].angle));
            worst = std::max(worst, std::abs(v[i].length - canonical_[i].length));
        }
        best = std::min(best, worst);
    }
    return best;
}

bool CongruenceSignature::equivalent(const CongruenceSignature& other, StepTolerance tol) const {
    if (size() != other.size()) return false;
    for (const auto& v : boundary_variants(other.canonical_)) {
        bool ok = true;
        for (std::size_t i = 0; i < v.size() && ok; ++i) {
            ok = std::abs(v[i].angle - canonical_[i].angle) <= tol.angle_eps &&
                 std::abs(v[i].length - canonical_[i].length) <= tol.length_eps;
        }
        if (ok) return true;
    }
    return false;
}

std::string CongruenceSignature::to_string() const {
    std::ostringstream os;
    os.precision(12);
    os << '[';
    for (std::size_t i = 0; i < canonical_.size(); ++i)
        os << (i ? ", " : "") << '(' << canonical_[i].angle << ", " << canonical_[i].length << ')';
    os << ']';
    return os.str();
}

}  // namespace coxarr
