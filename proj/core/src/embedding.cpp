#include "permlab/embedding.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "permlab/closure.hpp"
#include "permlab/error.hpp"

namespace permlab {

namespace {

std::string cell_name(const Universe& u, ElementId p, ElementId q) {
  return u.order().name(p) + "," + u.order().name(q);
}

void check_element(const Universe& u, ElementId e) {
  if (e >= u.order().size()) throw Error(ErrorCode::UnknownElement, std::to_string(e));
}

void check_support(const Universe& u, std::span<const AtomId> support) {
  for (AtomId a : support)
    if (a >= u.size()) throw Error(ErrorCode::UnknownAtom, std::to_string(a));
}

AtomSet with(std::span<const AtomId> support, AtomId extra) {
  const AtomId single[] = {extra};
  return set_union(support, single);
}

Evidence evidence_for(const Universe& u, AtomId b, Branch branch, std::span<const AtomId> fixed,
                      AtomId moved) {
  try {
    return Evidence{b, branch, mover(u, fixed, moved).cycles()};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InClosure)
      throw Error(ErrorCode::InvariantBreach, "refutation target inside closure: " + e.detail());
    throw;
  }
}

}  // namespace

WitnessMap injection_witness(const Universe& u, ElementId p, ElementId q) {
  check_element(u, p);
  check_element(u, q);
  WitnessMap w;
  w.kind = WitnessKind::injection;
  w.from = p;
  w.to = q;
  if (p == q) {
    for (AtomId a : u.sector(p)) w.pairs.emplace_back(a, a);
    w.stratum = static_cast<Level>(u.depth());
    return w;
  }
  if (!u.order().strict_less(p, q)) throw Error(ErrorCode::NotStrictlyLess, cell_name(u, p, q));
  if (u.depth() == 0) return w;

  const Level top = static_cast<Level>(u.depth() - 1);
  for (AtomId a : u.sector(p)) {
    const Level n = u.level(a);
    if (n > top) continue;
    auto image = u.find(Atom{n + 1, q, a, 0});
    if (!image) throw Error(ErrorCode::InvariantBreach, "missing case-1 child");
    w.pairs.emplace_back(a, *image);
  }
  w.stratum = top;

  std::vector<AtomId> images;
  for (const auto& pr : w.pairs) images.push_back(pr.second);
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw Error(ErrorCode::InvariantBreach, "injection witness is not injective");
  return w;
}

WitnessMap surjection_witness(const Universe& u, ElementId p, ElementId q) {
  check_element(u, p);
  check_element(u, q);
  const auto& order = u.order();
  if (order.le(p, q) || !order.lestar(p, q))
    throw Error(ErrorCode::PreconditionViolated, "needs p not le q and p lestar q: " +
                                                     cell_name(u, p, q));
  WitnessMap w;
  w.kind = WitnessKind::partial_surjection;
  w.from = q;
  w.to = p;
  if (u.depth() == 0) return w;

  for (AtomId b : u.sector(q)) {
    const Atom& x = u.atom(b);
    if (x.is_base() || u.atom(x.parent).element != p) continue;
    w.pairs.emplace_back(b, x.parent);
  }
  w.stratum = static_cast<Level>(u.depth() - 1);

  std::vector<char> covered(u.size(), 0);
  for (const auto& pr : w.pairs) covered[pr.second] = 1;
  for (AtomId a : u.sector(p))
    if (u.level(a) <= *w.stratum && !covered[a])
      throw Error(ErrorCode::InvariantBreach, "surjection witness misses atom " + std::to_string(a));
  return w;
}

WitnessMap lestar_witness_from_le(const WitnessMap& w) {
  if (w.kind != WitnessKind::injection)
    throw Error(ErrorCode::PreconditionViolated, "expected an injection witness");
  WitnessMap out;
  out.kind = WitnessKind::partial_surjection;
  out.from = w.to;
  out.to = w.from;
  out.stratum = w.stratum;
  for (const auto& [a, b] : w.pairs) out.pairs.emplace_back(b, a);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

AtomId fresh_base_atom(const Universe& u, ElementId p, std::span<const AtomId> support) {
  check_element(u, p);
  const ClosureSet cl = closure(u, support);
  for (Index k = 0; k < u.index_budget(); ++k) {
    const AtomId c = *u.find(Family{0, p, kNoAtom}, k);
    if (!cl.contains(c)) return c;
  }
  throw Error(ErrorCode::IndexBudgetExhausted,
              "no base atom of " + u.order().name(p) + " outside the support closure",
              u.index_budget() + 1);
}

RefutationCertificate refute_surjection(const Universe& u, ElementId p, ElementId q,
                                        std::span<const AtomId> support) {
  check_element(u, p);
  check_element(u, q);
  check_support(u, support);
  if (u.order().lestar(p, q))
    throw Error(ErrorCode::PreconditionViolated, "p lestar q holds: " + cell_name(u, p, q));

  RefutationCertificate cert;
  cert.kind = RefutationKind::no_surjection;
  cert.p = p;
  cert.q = q;
  cert.support = make_atom_set({support.begin(), support.end()});
  cert.fresh = fresh_base_atom(u, p, cert.support);

  for (AtomId b : u.sector(q)) {
    // Every level-0 atom of Cl({b}) sits in a sector lestar-below q, so the
    // fresh atom (in S_p, p not lestar q) stays outside Cl(support ∪ {b}).
    closure_shape_lestar(u, b, q);
    cert.evidence.push_back(
        evidence_for(u, b, Branch::moves_fresh, with(cert.support, b), cert.fresh));
  }
  return cert;
}

RefutationCertificate refute_injection(const Universe& u, ElementId p, ElementId q,
                                       std::span<const AtomId> support) {
  check_element(u, p);
  check_element(u, q);
  check_support(u, support);
  if (u.order().le(p, q))
    throw Error(ErrorCode::PreconditionViolated, "p le q holds: " + cell_name(u, p, q));

  RefutationCertificate cert;
  cert.kind = RefutationKind::no_injection;
  cert.p = p;
  cert.q = q;
  cert.support = make_atom_set({support.begin(), support.end()});
  cert.fresh = fresh_base_atom(u, p, cert.support);
  const AtomId c = cert.fresh;

  // Cl({c}) stays in sectors le-above p, so no b in S_q lies in it.
  closure_shape_le(u, c);
  const AtomSet fix_c = with(cert.support, c);

  for (AtomId b : u.sector(q)) {
    const AtomId single[] = {b};
    if (closure(u, single).contains(c)) {
      cert.evidence.push_back(evidence_for(u, b, Branch::moves_image, fix_c, b));
      continue;
    }
    try {
      cert.evidence.push_back(
          evidence_for(u, b, Branch::moves_fresh, with(cert.support, b), c));
    } catch (const Error& e) {
      // Branch A has no room for a fresh index; moving b instead refutes
      // h(c) = b equally well, provided b stays outside Cl(support ∪ {c}).
      if (e.code() != ErrorCode::IndexBudgetExhausted || closure(u, fix_c).contains(b)) throw;
      cert.evidence.push_back(evidence_for(u, b, Branch::moves_image, fix_c, b));
    }
  }
  return cert;
}

const Cell& EmbeddingReport::le_cell(ElementId p, ElementId q) const {
  return le.at(p * universe->order().size() + q);
}

const Cell& EmbeddingReport::lestar_cell(ElementId p, ElementId q) const {
  return lestar.at(p * universe->order().size() + q);
}

bool operator==(const EmbeddingReport& a, const EmbeddingReport& b) {
  if (!a.universe || !b.universe) return a.universe == b.universe;
  return a.universe->order() == b.universe->order() &&
         a.universe->depth() == b.universe->depth() &&
         a.universe->index_budget() == b.universe->index_budget() &&
         a.options.support_budget == b.options.support_budget &&
         a.options.max_supports == b.options.max_supports && a.options.seed == b.options.seed &&
         a.sampled == b.sampled && a.le == b.le && a.lestar == b.lestar;
}

std::vector<AtomSet> report_supports(const Universe& u, const ReportOptions& options,
                                     bool* sampled) {
  if (options.max_supports == 0)
    throw Error(ErrorCode::PreconditionViolated, "max_supports must be >= 1");
  const std::size_t n = u.size();
  const std::size_t budget = std::min(options.support_budget, n);

  // Number of subsets of size <= budget, saturating at max_supports + 1.
  std::size_t total = 0;
  {
    std::size_t binom = 1;
    for (std::size_t k = 0; k <= budget && total <= options.max_supports; ++k) {
      total += binom;
      if (k < budget) {
        const long double next = static_cast<long double>(binom) * (n - k) / (k + 1);
        binom = next > static_cast<long double>(options.max_supports) + 1
                    ? options.max_supports + 1
                    : static_cast<std::size_t>(next);
      }
    }
  }

  std::vector<AtomSet> out;
  if (total <= options.max_supports) {
    if (sampled) *sampled = false;
    for (std::size_t size = 0; size <= budget; ++size) {
      std::vector<AtomId> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<AtomId>(i);
      while (true) {
        out.push_back(pick);
        // Next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return out;
  }

  if (sampled) *sampled = true;
  // Modulo draws from mt19937_64 keep the sample identical across platforms.
  std::mt19937_64 rng(options.seed);
  auto by_size = [](const AtomSet& x, const AtomSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  };
  std::set<AtomSet, decltype(by_size)> drawn(by_size);
  drawn.insert(AtomSet{});
  for (std::size_t attempt = 0;
       drawn.size() < options.max_supports && attempt < 16 * options.max_supports; ++attempt) {
    const std::size_t size = 1 + rng() % budget;
    std::vector<AtomId> pick;
    while (pick.size() < size) {
      const auto a = static_cast<AtomId>(rng() % n);
      if (std::find(pick.begin(), pick.end(), a) == pick.end()) pick.push_back(a);
    }
    drawn.insert(make_atom_set(std::move(pick)));
  }
  return {drawn.begin(), drawn.end()};
}

EmbeddingReport embedding_report(std::shared_ptr<const Universe> universe,
                                 const ReportOptions& options) {
  const Universe& u = *universe;
  const auto& order = u.order();
  const auto n = static_cast<ElementId>(order.size());

  EmbeddingReport report;
  report.universe = std::move(universe);
  report.options = options;
  const std::vector<AtomSet> supports = report_supports(u, options, &report.sampled);
  report.le.resize(std::size_t{n} * n);
  report.lestar.resize(std::size_t{n} * n);

  auto negative = [&](auto refute, ElementId p, ElementId q) {
    Cell cell;
    cell.verdict = Verdict::negative;
    for (const auto& support : supports) {
      try {
        cell.certificates.push_back(refute(u, p, q, support));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IndexBudgetExhausted) throw;
        const std::size_t suggestion =
            std::max(e.suggested_index_budget().value_or(u.index_budget() + 1),
                     options.support_budget + 2);
        throw Error(ErrorCode::IndexBudgetExhausted,
                    "cell " + cell_name(u, p, q) + ": " + e.detail() + "; try K>=" +
                        std::to_string(suggestion),
                    suggestion);
      }
    }
    return cell;
  };

  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q) {
      Cell& le = report.le[p * n + q];
      Cell& lestar = report.lestar[p * n + q];
      if (order.le(p, q)) {
        WitnessMap w = injection_witness(u, p, q);
        lestar = Cell{Verdict::positive, lestar_witness_from_le(w), {}};
        le = Cell{Verdict::positive, std::move(w), {}};
        continue;
      }
      le = negative(refute_injection, p, q);
      if (order.lestar(p, q))
        lestar = Cell{Verdict::positive, surjection_witness(u, p, q), {}};
      else
        lestar = negative(refute_surjection, p, q);
    }
  return report;
}

}  // namespace permlab
