#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/universe.hpp"

namespace permlab {

// ---------------------------------------------------------------------------
// Finite cardinal comparisons
// ---------------------------------------------------------------------------

/// An injection from a set of size x into one of size y exists.
constexpr bool finite_le(std::size_t x, std::size_t y) noexcept { return x <= y; }
/// A partial surjection from a set of size y onto one of size x exists.
constexpr bool finite_lestar(std::size_t x, std::size_t y) noexcept { return x == 0 || x <= y; }

template <std::ranges::sized_range SetX, std::ranges::sized_range SetY>
bool finite_le(const SetX& x, const SetY& y) {
  return finite_le(std::size(x), std::size(y));
}
template <std::ranges::sized_range SetX, std::ranges::sized_range SetY>
bool finite_lestar(const SetX& x, const SetY& y) {
  return finite_lestar(std::size(x), std::size(y));
}

// ---------------------------------------------------------------------------
// Evidence
// ---------------------------------------------------------------------------

enum class WitnessKind { injection, partial_surjection };

/// A map between sectors. `from`/`to` follow the map's direction: an
/// injection goes S_p -> S_q, a partial surjection S_q -> S_p.
///
/// `stratum` is the truncation note: an injection is total on
/// S_from ∩ A_stratum, a partial surjection covers S_to ∩ A_stratum. It is
/// empty when that set is empty (depth 0 truncations of strict pairs).
struct WitnessMap {
  WitnessKind kind = WitnessKind::injection;
  ElementId from = 0;
  ElementId to = 0;
  std::vector<std::pair<AtomId, AtomId>> pairs;
  std::optional<Level> stratum;

  friend bool operator==(const WitnessMap&, const WitnessMap&) = default;
};

enum class RefutationKind { no_surjection, no_injection };

/// Branch A moves the fresh atom c while fixing support ∪ {b}; branch B
/// moves b while fixing support ∪ {c}.
enum class Branch { moves_fresh, moves_image };

struct Evidence {
  AtomId atom = kNoAtom;  // b
  Branch branch = Branch::moves_fresh;
  Cycles permutation;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

/// Refutes |S_p| <= |S_q| (no_injection) or |S_p| <=* |S_q| (no_surjection)
/// for maps supported by `support`: one evidence entry per b in S_q.
struct RefutationCertificate {
  RefutationKind kind = RefutationKind::no_injection;
  ElementId p = 0;
  ElementId q = 0;
  AtomSet support;
  AtomId fresh = kNoAtom;
  std::vector<Evidence> evidence;

  friend bool operator==(const RefutationCertificate&, const RefutationCertificate&) = default;
};

/// Witness for p le q: a |-> <level(a)+1, q, a, 0> on S_p ∩ A_{N-1}, or the
/// identity on S_p when p == q. Throws NotStrictlyLess.
WitnessMap injection_witness(const Universe& u, ElementId p, ElementId q);

/// Witness for p not-le q, p lestar q: b |-> pr2(b) over the case-2 atoms of
/// S_q whose parent lies in S_p. Throws PreconditionViolated.
WitnessMap surjection_witness(const Universe& u, ElementId p, ElementId q);

/// Inverse of an injection witness, as a partial surjection onto its domain.
WitnessMap lestar_witness_from_le(const WitnessMap& w);

/// Least base atom of S_p outside Cl(support). Throws IndexBudgetExhausted.
AtomId fresh_base_atom(const Universe& u, ElementId p, std::span<const AtomId> support);

/// Errors: PreconditionViolated (p lestar q), IndexBudgetExhausted.
RefutationCertificate refute_surjection(const Universe& u, ElementId p, ElementId q,
                                        std::span<const AtomId> support);

/// Errors: PreconditionViolated (p le q), IndexBudgetExhausted.
RefutationCertificate refute_injection(const Universe& u, ElementId p, ElementId q,
                                       std::span<const AtomId> support);

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

enum class Verdict { positive, negative };

struct Cell {
  Verdict verdict = Verdict::negative;
  std::optional<WitnessMap> witness;
  std::vector<RefutationCertificate> certificates;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ReportOptions {
  std::size_t support_budget = 1;
  /// Above this many candidate supports, a seeded sample is drawn instead.
  std::size_t max_supports = 4096;
  std::uint64_t seed = 0;
};

struct EmbeddingReport {
  std::shared_ptr<const Universe> universe;
  ReportOptions options;
  bool sampled = false;
  /// Row-major |P| x |P| matrices: cell (p, q) at p * |P| + q.
  std::vector<Cell> le;
  std::vector<Cell> lestar;

  const Cell& le_cell(ElementId p, ElementId q) const;
  const Cell& lestar_cell(ElementId p, ElementId q) const;

  friend bool operator==(const EmbeddingReport& a, const EmbeddingReport& b);
};

/// Supports tested for negative cells: every subset of A_N of size at most
/// `support_budget` in (size, lexicographic) order, or the empty support
/// plus a seeded sample when there are more than `max_supports` of them.
std::vector<AtomSet> report_supports(const Universe& u, const ReportOptions& options,
                                     bool* sampled = nullptr);

/// Builds every cell's evidence. IndexBudgetExhausted carries a suggested
/// budget of at least support_budget + 2.
EmbeddingReport embedding_report(std::shared_ptr<const Universe> u, const ReportOptions& options);

}  // namespace permlab
