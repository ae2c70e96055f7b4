#pragma once

// The one-dimensional Gaussian shift radix system a -> -floor(r a), its
// sign/conjugation variants, orbits, Brunotte's witness sets and the
// finiteness decision built on them.

#include "gsrs/exact.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace gsrs {

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;
inline constexpr std::size_t kDefaultWitnessBudget = 1'000'000;

/// A fixed parameter r with its map precomputed over a common denominator,
/// so that each step is two integer products and a floor division.
class Gsrs {
public:
    explicit Gsrs(QComplex r);

    const QComplex& parameter() const { return r_; }

    /// gamma_r(a) = -floor(r a).
    GaussianInt operator()(const GaussianInt& a) const;
    /// floor(r a).
    GaussianInt floor_product(const GaussianInt& a) const;
    /// The variants 1..4: id, -g(-.), conj g conj, -conj g(-conj .).
    GaussianInt variant(int i, const GaussianInt& a) const;

private:
    QComplex r_;
    Integer num_re_;
    Integer num_im_;
    Integer den_;
};

GaussianInt gamma(const QComplex& r, const GaussianInt& a);
/// Throws std::invalid_argument unless 1 <= i <= 4.
GaussianInt gamma_variant(int i, const QComplex& r, const GaussianInt& a);

/// A periodic orbit, stored in canonical rotation (lexicographically smallest
/// element first). Construction canonicalizes; it does not check periodicity.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<GaussianInt> elements);

    const std::vector<GaussianInt>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool is_trivial() const { return elements_.size() == 1 && elements_[0].is_zero(); }
    /// True iff no proper rotation maps the sequence onto itself.
    bool is_minimal() const;
    /// True iff gamma_r maps every element to its cyclic successor.
    bool is_cycle_of(const QComplex& r) const;

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<GaussianInt> elements_;
};

struct ReachesZero {
    std::size_t steps = 0;
};
struct EntersCycle {
    Cycle cycle;
    std::size_t preperiod = 0;
};
struct BudgetExceeded {};

using OrbitResult = std::variant<ReachesZero, EntersCycle, BudgetExceeded>;

OrbitResult orbit(const QComplex& r, const GaussianInt& a, std::size_t budget = kDefaultOrbitBudget);

/// Brunotte's iteration from V_0 = {+-1, +-i}, closed under all four variants.
/// Returns the witnesses sorted, or nullopt once the set grows past size_budget.
std::optional<std::vector<GaussianInt>> brunotte_witnesses(const QComplex& r,
                                                           std::size_t size_budget = kDefaultWitnessBudget);

/// Functional graph of the four variants on a witness set. images[v][i-1] is
/// the color-i successor of vertices[v].
struct WitnessGraph {
    QComplex parameter;
    std::vector<GaussianInt> vertices;
    std::vector<std::array<GaussianInt, 4>> images;

    /// Edge set E_i as ordered pairs, in vertex order.
    std::vector<std::pair<GaussianInt, GaussianInt>> edges(int color) const;
    /// Structural equality of vertex and edge sets (the parameter is ignored).
    bool same_edges(const WitnessGraph& other) const;
};

std::optional<WitnessGraph> witness_graph(const QComplex& r, std::size_t size_budget = kDefaultWitnessBudget);

struct Finiteness {
    enum class Verdict { Finite, Infinite, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<Cycle> witness;       // set when Infinite
    std::size_t witness_count = 0;      // |V_r| when it was computed
};

/// Orbits of small Gaussian integers are searched for a cycle first; otherwise
/// the verdict comes from the witness set. Unknown when neither settles it.
Finiteness decide_finiteness(const QComplex& r, std::size_t size_budget = kDefaultWitnessBudget);

/// Digits of x in the Gaussian numeration system with base beta, obtained
/// from the orbit of -x under gamma_{-1/beta}. Least significant digit first;
/// empty for x = 0. Throws std::invalid_argument for beta = 0 and
/// std::runtime_error when the orbit has not reached zero within budget.
std::vector<GaussianInt> gns_digits(const GaussianInt& beta, const GaussianInt& x,
                                    std::size_t budget = kDefaultOrbitBudget);

/// Sum of digits[i] * beta^i.
GaussianInt gns_value(const GaussianInt& beta, std::span<const GaussianInt> digits);

}  // namespace gsrs
