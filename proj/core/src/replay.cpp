#include "permlab/replay.hpp"

#include <algorithm>
#include <set>

namespace permlab {

namespace {

ReplayResult bad(std::string why) { return ReplayResult{false, std::move(why)}; }

std::string atom_str(AtomId a) { return "atom " + std::to_string(a); }

/// Dense image array rebuilt from cycles, or empty on malformed input.
std::vector<AtomId> densify(const Universe& u, const Cycles& cycles, std::string* why) {
  std::vector<AtomId> map(u.size());
  for (AtomId a = 0; a < map.size(); ++a) map[a] = a;
  std::vector<char> seen(u.size(), 0);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) {
      *why = "degenerate cycle";
      return {};
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const AtomId a = cycle[i];
      if (a >= u.size() || seen[a]) {
        *why = "cycles reuse or leave the universe at " + atom_str(a);
        return {};
      }
      seen[a] = 1;
      map[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return map;
}

/// Group membership from first principles: level, pr1 and pr2 relations
/// of every atom and its image. Disjoint cycles already make `map` a
/// bijection.
bool respects_structure(const Universe& u, const std::vector<AtomId>& map, std::string* why) {
  const auto atoms = u.atoms();
  for (AtomId a = 0; a < atoms.size(); ++a) {
    const Atom& x = atoms[a];
    const Atom& y = atoms[map[a]];
    if (x.level != y.level || x.element != y.element) {
      *why = "image of " + atom_str(a) + " changes level or sector";
      return false;
    }
    if ((x.parent == kNoAtom) != (y.parent == kNoAtom) ||
        (x.parent != kNoAtom && y.parent != map[x.parent])) {
      *why = "parent of " + atom_str(a) + " not carried along";
      return false;
    }
  }
  return true;
}

ReplayResult check_move(const Universe& u, const Cycles& cycles, const std::vector<AtomId>& fixed,
                        AtomId moved) {
  std::string why;
  auto map = densify(u, cycles, &why);
  if (map.empty() && u.size() != 0) return bad(why);
  if (!respects_structure(u, map, &why)) return bad(why);
  for (AtomId a : fixed)
    if (map[a] != a) return bad("permutation moves fixed " + atom_str(a));
  if (moved >= u.size() || map[moved] == moved) return bad("permutation fixes " + atom_str(moved));
  return {};
}

std::vector<AtomId> sector_of(const Universe& u, ElementId e, std::optional<Level> max_level) {
  std::vector<AtomId> out;
  const auto atoms = u.atoms();
  for (AtomId a = 0; a < atoms.size(); ++a)
    if (atoms[a].element == e && (!max_level || atoms[a].level <= *max_level)) out.push_back(a);
  return out;
}

}  // namespace

ReplayResult replay_witness(const Universe& u, const WitnessMap& w) {
  const std::size_t n = u.order().size();
  if (w.from >= n || w.to >= n) return bad("unknown sector");
  if (w.stratum && *w.stratum > u.depth()) return bad("stratum above depth");
  const auto atoms = u.atoms();

  std::set<AtomId> sources, images;
  for (const auto& [a, b] : w.pairs) {
    if (a >= atoms.size() || b >= atoms.size()) return bad("pair leaves the universe");
    if (atoms[a].element != w.from) return bad(atom_str(a) + " outside source sector");
    if (atoms[b].element != w.to) return bad(atom_str(b) + " outside target sector");
    if (!sources.insert(a).second) return bad("two images for " + atom_str(a));
    images.insert(b);
  }

  if (w.kind == WitnessKind::injection) {
    if (images.size() != w.pairs.size()) return bad("injection repeats an image");
    const auto domain = w.stratum ? sector_of(u, w.from, w.stratum) : std::vector<AtomId>{};
    if (!std::equal(domain.begin(), domain.end(), sources.begin(), sources.end()))
      return bad("injection domain differs from declared stratum");
    if (!finite_le(domain.size(), sector_of(u, w.to, std::nullopt).size()))
      return bad("domain larger than target sector");
    return {};
  }

  const auto codomain = w.stratum ? sector_of(u, w.to, w.stratum) : std::vector<AtomId>{};
  for (AtomId a : codomain)
    if (!images.count(a)) return bad("partial surjection misses " + atom_str(a));
  if (!finite_lestar(codomain.size(), sector_of(u, w.from, std::nullopt).size()))
    return bad("codomain larger than source sector");
  return {};
}

ReplayResult replay_certificate(const Universe& u, const RefutationCertificate& cert) {
  const auto& order = u.order();
  const auto atoms = u.atoms();
  if (cert.p >= order.size() || cert.q >= order.size()) return bad("unknown sector");
  if (cert.kind == RefutationKind::no_injection && order.le(cert.p, cert.q))
    return bad("injection refuted where p le q");
  if (cert.kind == RefutationKind::no_surjection && order.lestar(cert.p, cert.q))
    return bad("surjection refuted where p lestar q");
  for (AtomId a : cert.support)
    if (a >= atoms.size()) return bad("support leaves the universe");
  if (cert.fresh >= atoms.size() || atoms[cert.fresh].parent != kNoAtom ||
      atoms[cert.fresh].element != cert.p)
    return bad("fresh atom is not a base atom of S_p");
  if (std::find(cert.support.begin(), cert.support.end(), cert.fresh) != cert.support.end())
    return bad("fresh atom lies in the support");

  const auto targets = sector_of(u, cert.q, std::nullopt);
  if (cert.evidence.size() != targets.size()) return bad("evidence does not cover S_q");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Evidence& ev = cert.evidence[i];
    if (ev.atom != targets[i]) return bad("evidence does not cover S_q in order");
    std::vector<AtomId> fixed(cert.support.begin(), cert.support.end());
    ReplayResult r;
    if (ev.branch == Branch::moves_fresh) {
      fixed.push_back(ev.atom);
      r = check_move(u, ev.permutation, fixed, cert.fresh);
    } else {
      if (cert.kind == RefutationKind::no_surjection)
        return bad("surjection refutation must move the fresh atom");
      fixed.push_back(cert.fresh);
      r = check_move(u, ev.permutation, fixed, ev.atom);
    }
    if (!r) return bad("evidence for " + atom_str(ev.atom) + ": " + r.failure);
  }
  return {};
}

ReportCheck check_report(const EmbeddingReport& report) {
  ReportCheck out;
  const Universe& u = *report.universe;
  const auto& order = u.order();
  const auto n = static_cast<ElementId>(order.size());
  const auto supports = report_supports(u, report.options);

  auto note = [&](bool* flag, std::string msg) {
    *flag = false;
    out.failures.push_back(std::move(msg));
  };

  for (int matrix = 0; matrix < 2; ++matrix)
    for (ElementId p = 0; p < n; ++p)
      for (ElementId q = 0; q < n; ++q) {
        const bool is_le = matrix == 0;
        const Cell& cell = is_le ? report.le_cell(p, q) : report.lestar_cell(p, q);
        const std::string where = std::string(is_le ? "le" : "lestar") + "(" + order.name(p) +
                                  "," + order.name(q) + ")";
        const bool expected = is_le ? order.le(p, q) : order.lestar(p, q);
        if ((cell.verdict == Verdict::positive) != expected)
          note(&out.matrices_match, where + ": verdict differs from input relation");

        if (cell.verdict == Verdict::positive) {
          if (!cell.witness) {
            note(&out.evidence_ok, where + ": positive verdict without witness");
            continue;
          }
          const WitnessMap& w = *cell.witness;
          const bool shape = is_le ? (w.kind == WitnessKind::injection && w.from == p && w.to == q)
                                   : (w.kind == WitnessKind::partial_surjection && w.from == q &&
                                      w.to == p);
          if (!shape) note(&out.evidence_ok, where + ": witness has the wrong kind or direction");
          if (auto r = replay_witness(u, w); !r) note(&out.evidence_ok, where + ": " + r.failure);
          continue;
        }

        const auto kind = is_le ? RefutationKind::no_injection : RefutationKind::no_surjection;
        if (cell.certificates.size() != supports.size()) {
          note(&out.evidence_ok, where + ": certificate count differs from tested supports");
          continue;
        }
        for (std::size_t i = 0; i < supports.size(); ++i) {
          const auto& cert = cell.certificates[i];
          if (cert.kind != kind || cert.p != p || cert.q != q || cert.support != supports[i]) {
            note(&out.evidence_ok, where + ": certificate " + std::to_string(i) + " mislabeled");
            continue;
          }
          if (auto r = replay_certificate(u, cert); !r)
            note(&out.evidence_ok, where + ": certificate " + std::to_string(i) + ": " + r.failure);
        }
      }
  return out;
}

}  // namespace permlab
