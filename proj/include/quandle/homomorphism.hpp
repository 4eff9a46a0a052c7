#pragma once

#include "quandle/finite_quandle.hpp"
#include "quandle/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quandle {

/// A generator assignment that satisfies every relation of `source`.
struct Homomorphism {
    QuandlePresentation source;
    FiniteQuandle target;
    /// Values indexed like source.generators().
    std::vector<int> values;

    Assignment assignment() const;
};

/// Relations hold under `values`.
bool is_homomorphism(const QuandlePresentation& p, const FiniteQuandle& f, std::span<const int> values);

/// Every homomorphism P -> F, in lexicographic order of the value vector.
std::vector<Homomorphism> enumerate_homs(const QuandlePresentation& p, const FiniteQuandle& f, int jobs = 1);
/// |Hom(P, F)| without materializing the list.
std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& f, int jobs = 1);

enum class Heuristic { FactorProjection, FreeProjection, EtaConjugacy, Catalog };
std::string to_string(Heuristic h);

struct SeparationWitness {
    Homomorphism hom;
    int left_image = 0;
    int right_image = 0;
    Heuristic heuristic = Heuristic::Catalog;
};

/// The witness is a homomorphism, its images are those of u and v, and
/// they differ.
bool replay(const SeparationWitness& w, const QuandleWord& u, const QuandleWord& v);

struct SeparationBudget {
    /// Largest catalog order the sweeps may use.
    int catalog_order = 6;
    /// Upper bound on assignments tried across all sweeps.
    std::uint64_t max_assignments = 50'000'000;
    int jobs = 1;
};

struct SeparationStats {
    std::uint64_t assignments_tried = 0;
    int catalog_order_reached = 0;
    bool exhausted = false;
};

/// Looks for a finite quandle and a homomorphism separating u and v, trying
/// in order: factor projection to T2, projection to a free quandle pushed
/// forward through the catalog, the factor-counting quotient, and a plain
/// catalog sweep. `catalog` must be in canonical order.
std::optional<SeparationWitness> separate(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v,
    std::span<const FiniteQuandle> catalog, const SeparationBudget& budget = {}, SeparationStats* stats = nullptr);

/// Only the catalog sweep of `separate`.
std::optional<SeparationWitness> catalog_sweep(const QuandlePresentation& p, const QuandleWord& u,
    const QuandleWord& v, std::span<const FiniteQuandle> catalog, const SeparationBudget& budget = {},
    SeparationStats* stats = nullptr);

/// Moves the tail of v onto u with inverted signs: u = v iff y = y', where
/// y = u *^-e'm bm ... *^-e'1 b1 and y' = b0.
std::pair<QuandleWord, QuandleWord> second_axiom_shift(const QuandleWord& u, const QuandleWord& v);

/// The map between disjoint unions of coset quandles induced by a group
/// homomorphism.
struct CosetQuandleHom {
    CosetQuandle source;
    CosetQuandle target;
    /// map[a] is the image of source element a.
    std::vector<int> map;
};

/// H_i x -> phi(H_i) phi(x), built over (F, phi(H_i), phi(z_i)). Throws
/// NotHomomorphism for a failing (x, y) of `phi`, or of the induced map.
CosetQuandleHom quotient_coset_hom(const FiniteGroup& g, std::span<const CosetPart> parts, const FiniteGroup& f,
    std::span<const int> phi);

} // namespace quandle
