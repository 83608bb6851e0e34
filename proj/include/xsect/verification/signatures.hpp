#pragma once

#include "../geometry.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace xsect {

using Signature = std::uint64_t;

// Bit i set iff gamma meets S[i] (closed sets).
inline Signature transversal_signature(const std::vector<Segment>& s, const Segment& gamma) {
    if (s.size() > 64) throw std::invalid_argument("at most 64 base segments");
    Signature m = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (segments_intersect(s[i], gamma)) m |= Signature(1) << i;
    return m;
}

inline Integer signature_bound(std::size_t n) {
    Integer b = 100 * static_cast<long long>(n);
    return b * b * b * b;
}

// Smallest k with 2^k > (100k)^4.
inline int signature_crossover() {
    for (int k = 1;; ++k)
        if (Integer(1) << k > signature_bound(k)) return k;
}

// All segments joining two distinct points of {0..m-1}^2.
struct GridCandidates {
    int extent = 12;
};

// `count` segments with endpoints lo + (hi-lo) j/resolution, j drawn from a
// 64-bit Mersenne twister reduced modulo resolution+1.
struct RandomCandidates {
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    Rational lo = 0, hi = 12;
    long long resolution = 1000;
};

using CandidateSpec = std::variant<GridCandidates, RandomCandidates>;

inline std::vector<Segment> candidate_segments(const CandidateSpec& spec) {
    std::vector<Segment> out;
    if (auto* g = std::get_if<GridCandidates>(&spec)) {
        std::vector<Point> pts;
        for (int x = 0; x < g->extent; ++x)
            for (int y = 0; y < g->extent; ++y) pts.push_back({x, y});
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) out.emplace_back(pts[i], pts[j]);
        return out;
    }
    auto& r = std::get<RandomCandidates>(spec);
    std::mt19937_64 rng(r.seed);
    auto coord = [&] {
        auto j = static_cast<long long>(rng() % static_cast<std::uint64_t>(r.resolution + 1));
        return r.lo + (r.hi - r.lo) * Rational(j, r.resolution);
    };
    while (out.size() < r.count) {
        Point p{coord(), coord()}, q{coord(), coord()};
        if (p != q) out.emplace_back(p, q);
    }
    return out;
}

struct SignatureSet {
    std::vector<std::string> base;
    std::set<Signature> signatures;
    Integer bound;
};

// Distinct signatures over the candidate set. Candidates are split into
// contiguous blocks across `workers` threads and merged by union.
inline SignatureSet enumerate_signatures(const std::vector<Segment>& s, const CandidateSpec& spec, unsigned workers = 1) {
    if (s.empty()) throw std::invalid_argument("enumerate_signatures needs a nonempty family");
    if (s.size() > 64) throw std::invalid_argument("at most 64 base segments");
    auto cand = candidate_segments(spec);
    workers = std::max(1u, workers);
    std::vector<std::set<Signature>> parts(workers);
    auto run = [&](unsigned w) {
        std::size_t lo = cand.size() * w / workers, hi = cand.size() * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) parts[w].insert(transversal_signature(s, cand[i]));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    SignatureSet out;
    for (auto& x : s) out.base.push_back(x.label);
    for (auto& p : parts) out.signatures.insert(p.begin(), p.end());
    out.bound = signature_bound(s.size());
    if (Integer(static_cast<unsigned long long>(out.signatures.size())) > out.bound)
        throw std::logic_error("signature count exceeds (100n)^4");
    return out;
}

}  // namespace xsect
