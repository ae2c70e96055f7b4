#include "gsrs/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gsrs {

Gsrs::Gsrs(QComplex r) : r_(std::move(r)) {
    mpz_lcm(den_.get_mpz_t(), r_.re.get_den_mpz_t(), r_.im.get_den_mpz_t());
    num_re_ = r_.re.get_num() * (den_ / r_.re.get_den());
    num_im_ = r_.im.get_num() * (den_ / r_.im.get_den());
}

GaussianInt Gsrs::floor_product(const GaussianInt& a) const {
    Integer re = num_re_ * a.re - num_im_ * a.im;
    Integer im = num_re_ * a.im + num_im_ * a.re;
    mpz_fdiv_q(re.get_mpz_t(), re.get_mpz_t(), den_.get_mpz_t());
    mpz_fdiv_q(im.get_mpz_t(), im.get_mpz_t(), den_.get_mpz_t());
    return {std::move(re), std::move(im)};
}

GaussianInt Gsrs::operator()(const GaussianInt& a) const { return -floor_product(a); }

GaussianInt Gsrs::variant(int i, const GaussianInt& a) const {
    switch (i) {
        case 1:
            return (*this)(a);
        case 2:
            return -(*this)(-a);
        case 3:
            return (*this)(a.conj()).conj();
        case 4:
            return -((*this)(-a.conj()).conj());
        default:
            throw std::invalid_argument("variant index must be in 1..4");
    }
}

GaussianInt gamma(const QComplex& r, const GaussianInt& a) { return -complex_floor(qc_mul(r, a)); }

GaussianInt gamma_variant(int i, const QComplex& r, const GaussianInt& a) { return Gsrs(r).variant(i, a); }

Cycle::Cycle(std::vector<GaussianInt> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) return;
    auto smallest = std::min_element(elements_.begin(), elements_.end());
    std::rotate(elements_.begin(), smallest, elements_.end());
}

bool Cycle::is_minimal() const {
    const std::size_t n = elements_.size();
    for (std::size_t shift = 1; shift < n; ++shift) {
        if (n % shift != 0) continue;
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) {
            same = elements_[i] == elements_[(i + shift) % n];
        }
        if (same) return false;
    }
    return true;
}

bool Cycle::is_cycle_of(const QComplex& r) const {
    if (elements_.empty()) return false;
    Gsrs g(r);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (g(elements_[i]) != elements_[(i + 1) % elements_.size()]) return false;
    }
    return true;
}

OrbitResult orbit(const QComplex& r, const GaussianInt& a, std::size_t budget) {
    Gsrs g(r);
    std::unordered_map<GaussianInt, std::size_t, GaussianIntHash> seen;
    std::vector<GaussianInt> path;
    GaussianInt state = a;
    for (std::size_t step = 0; step <= budget; ++step) {
        if (state.is_zero()) return ReachesZero{step};
        auto [it, inserted] = seen.emplace(state, step);
        if (!inserted) {
            std::size_t start = it->second;
            return EntersCycle{Cycle(std::vector<GaussianInt>(path.begin() + static_cast<std::ptrdiff_t>(start), path.end())),
                               start};
        }
        path.push_back(state);
        state = g(state);
    }
    return BudgetExceeded{};
}

namespace {

const std::array<GaussianInt, 4>& unit_seeds() {
    static const std::array<GaussianInt, 4> seeds{GaussianInt(1, 0), GaussianInt(-1, 0), GaussianInt(0, 1),
                                                  GaussianInt(0, -1)};
    return seeds;
}

// Gaussian integers with max(|a|, |b|) <= k, nearest the origin first.
std::vector<GaussianInt> box_seeds(long k) {
    std::vector<GaussianInt> out;
    for (long a = -k; a <= k; ++a) {
        for (long b = -k; b <= k; ++b) {
            if (a != 0 || b != 0) out.emplace_back(a, b);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const GaussianInt& x, const GaussianInt& y) { return x.norm() < y.norm(); });
    return out;
}

}  // namespace

std::optional<std::vector<GaussianInt>> brunotte_witnesses(const QComplex& r, std::size_t size_budget) {
    Gsrs g(r);
    std::unordered_set<GaussianInt, GaussianIntHash> set;
    std::deque<GaussianInt> queue;
    for (const auto& s : unit_seeds()) {
        if (set.insert(s).second) queue.push_back(s);
    }
    while (!queue.empty()) {
        GaussianInt a = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i <= 4; ++i) {
            GaussianInt b = g.variant(i, a);
            if (set.insert(b).second) {
                if (set.size() > size_budget) return std::nullopt;
                queue.push_back(std::move(b));
            }
        }
    }
    std::vector<GaussianInt> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<GaussianInt, GaussianInt>> WitnessGraph::edges(int color) const {
    if (color < 1 || color > 4) throw std::invalid_argument("edge color must be in 1..4");
    std::vector<std::pair<GaussianInt, GaussianInt>> out;
    out.reserve(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        out.emplace_back(vertices[v], images[v][static_cast<std::size_t>(color - 1)]);
    }
    return out;
}

bool WitnessGraph::same_edges(const WitnessGraph& other) const {
    return vertices == other.vertices && images == other.images;
}

std::optional<WitnessGraph> witness_graph(const QComplex& r, std::size_t size_budget) {
    auto witnesses = brunotte_witnesses(r, size_budget);
    if (!witnesses) return std::nullopt;
    Gsrs g(r);
    WitnessGraph graph;
    graph.parameter = r;
    graph.vertices = std::move(*witnesses);
    graph.images.reserve(graph.vertices.size());
    for (const auto& a : graph.vertices) {
        graph.images.push_back({g.variant(1, a), g.variant(2, a), g.variant(3, a), g.variant(4, a)});
    }
    return graph;
}

namespace {

// Follows gamma from each start inside a gamma-closed set and classifies
// every visited state. Returns a nontrivial cycle if one exists.
std::optional<Cycle> find_cycle(const Gsrs& g, const std::vector<GaussianInt>& starts, std::size_t step_budget,
                                bool& budget_hit) {
    enum : char { kReachesZero = 1, kOnPath = 2, kCycles = 3 };
    std::unordered_map<GaussianInt, char, GaussianIntHash> status;
    status.emplace(GaussianInt(0, 0), kReachesZero);
    std::vector<GaussianInt> path;
    std::size_t steps = 0;
    budget_hit = false;
    for (const auto& start : starts) {
        path.clear();
        GaussianInt state = start;
        char outcome = 0;
        while (true) {
            auto it = status.find(state);
            if (it != status.end()) {
                if (it->second == kOnPath) {
                    auto first = std::find(path.begin(), path.end(), state);
                    Cycle c(std::vector<GaussianInt>(first, path.end()));
                    for (auto& p : path) status[p] = kCycles;
                    return c;
                }
                outcome = it->second;
                break;
            }
            if (++steps > step_budget) {
                budget_hit = true;
                return std::nullopt;
            }
            status.emplace(state, kOnPath);
            path.push_back(state);
            state = g(state);
        }
        for (auto& p : path) status[p] = outcome;
    }
    return std::nullopt;
}

}  // namespace

Finiteness decide_finiteness(const QComplex& r, std::size_t size_budget) {
    Finiteness result;
    Gsrs g(r);
    bool budget_hit = false;
    // A cycle through a small Gaussian integer settles the question cheaply.
    if (auto c = find_cycle(g, box_seeds(8), 100'000, budget_hit)) {
        result.verdict = Finiteness::Verdict::Infinite;
        result.witness = std::move(c);
        return result;
    }
    auto witnesses = brunotte_witnesses(r, size_budget);
    if (!witnesses) {
        if (auto c = find_cycle(g, box_seeds(64), kDefaultOrbitBudget, budget_hit)) {
            result.verdict = Finiteness::Verdict::Infinite;
            result.witness = std::move(c);
        }
        return result;
    }
    result.witness_count = witnesses->size();
    if (auto c = find_cycle(g, *witnesses, witnesses->size() + 1, budget_hit)) {
        result.verdict = Finiteness::Verdict::Infinite;
        result.witness = std::move(c);
    } else if (!budget_hit) {
        result.verdict = Finiteness::Verdict::Finite;
    }
    return result;
}

std::vector<GaussianInt> gns_digits(const GaussianInt& beta, const GaussianInt& x, std::size_t budget) {
    if (beta.is_zero()) throw std::invalid_argument("base must be nonzero");
    // r = -1/beta = -conj(beta)/|beta|^2
    Rational n2(beta.norm());
    QComplex r{Rational(-beta.re) / n2, Rational(beta.im) / n2};
    Gsrs g(r);
    std::vector<GaussianInt> digits;
    GaussianInt z = -x;
    while (!z.is_zero()) {
        if (digits.size() >= budget) {
            throw std::runtime_error("digit expansion did not terminate within budget");
        }
        GaussianInt next = g(z);
        // beta * frac(r z) = beta * (r z + next) = -z + beta * next
        digits.push_back(beta * next - z);
        z = std::move(next);
    }
    return digits;
}

GaussianInt gns_value(const GaussianInt& beta, std::span<const GaussianInt> digits) {
    GaussianInt acc(0, 0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc = acc * beta + *it;
    }
    return acc;
}

}  // namespace gsrs
